#pragma once

#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

using CycVec = std::vector<Cyclotomic>;

// Dense square matrix over Q(zeta_N); all entries share one field order.
class CycMatrix {
public:
  CycMatrix() : n_(0), order_(1) {}
  CycMatrix(int n, std::int64_t order)
      : n_(n), order_(order), a_(static_cast<std::size_t>(n) * n, Cyclotomic::zero(order)) {}

  static CycMatrix identity(int n, std::int64_t order);

  int dim() const { return n_; }
  std::int64_t order() const { return order_; }

  Cyclotomic& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Cyclotomic& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  CycMatrix promoted(std::int64_t new_order) const;
  bool is_diagonal() const;

  CycMatrix operator*(const CycMatrix& rhs) const;
  CycVec apply(const CycVec& v) const;
  Cyclotomic trace() const;
  Cyclotomic det() const;
  CycMatrix pow(std::int64_t e) const;

  bool operator==(const CycMatrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }
  bool operator!=(const CycMatrix& rhs) const { return !(*this == rhs); }
  bool operator<(const CycMatrix& rhs) const;

private:
  int n_;
  std::int64_t order_;
  std::vector<Cyclotomic> a_;
};

// Rank/kernel of (m - lambda*I) by Gaussian elimination over the exact field.
// Diagonal matrices short-circuit to counting vanishing diagonal entries,
// which is the same elimination with no row operations.
int shifted_nullity(const CycMatrix& m, const Cyclotomic& lambda);
std::vector<CycVec> shifted_nullspace_basis(const CycMatrix& m, const Cyclotomic& lambda);

int nullity(const CycMatrix& m);

}  // namespace mckay
