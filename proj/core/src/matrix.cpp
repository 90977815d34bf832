#include "mckay/matrix.hpp"

#include "mckay/errors.hpp"

namespace mckay {

CycMatrix CycMatrix::identity(int n, std::int64_t order) {
  CycMatrix m(n, order);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
  return m;
}

CycMatrix CycMatrix::promoted(std::int64_t new_order) const {
  if (new_order == order_) return *this;
  CycMatrix m(n_, new_order);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].promoted(new_order);
  return m;
}

bool CycMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
  require(n_ == rhs.n_, ErrorKind::Internal, "matrix dimension mismatch");
  if (order_ != rhs.order_) {
    std::int64_t l = lcm_checked(order_, rhs.order_);
    return promoted(l) * rhs.promoted(l);
  }
  CycMatrix out(n_, order_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Cyclotomic& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const Cyclotomic& bkj = rhs.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

CycVec CycMatrix::apply(const CycVec& v) const {
  require(static_cast<int>(v.size()) == n_, ErrorKind::Internal, "vector dimension mismatch");
  CycVec out(static_cast<std::size_t>(n_), Cyclotomic::zero(order_));
  for (int j = 0; j < n_; ++j) {
    if (v[static_cast<std::size_t>(j)].is_zero()) continue;
    for (int i = 0; i < n_; ++i) {
      const Cyclotomic& aij = at(i, j);
      if (aij.is_zero()) continue;
      out[static_cast<std::size_t>(i)] += aij * v[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Cyclotomic CycMatrix::trace() const {
  Cyclotomic t = Cyclotomic::zero(order_);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

Cyclotomic CycMatrix::det() const {
  CycMatrix m = *this;
  Cyclotomic d = Cyclotomic::one(order_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Cyclotomic::zero(order_);
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    for (int r = col + 1; r < n_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col) / m.at(col, col);
      for (int j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

CycMatrix CycMatrix::pow(std::int64_t e) const {
  require(e >= 0, ErrorKind::Internal, "matrix pow: negative exponent");
  CycMatrix result = identity(n_, order_);
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool CycMatrix::operator<(const CycMatrix& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  return std::lexicographical_compare(a_.begin(), a_.end(), rhs.a_.begin(), rhs.a_.end());
}

namespace {

struct Rref {
  CycMatrix m;
  std::vector<int> pivot_cols;
};

Rref reduced_row_echelon(CycMatrix m) {
  int n = m.dim();
  Rref out{CycMatrix(), {}};
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Cyclotomic inv = m.at(row, col).inverse();
    for (int j = col; j < n; ++j) m.at(row, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col);
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

CycMatrix shifted(const CycMatrix& m, const Cyclotomic& lambda) {
  std::int64_t l = lcm_checked(m.order(), lambda.order());
  CycMatrix a = m.promoted(l);
  Cyclotomic lam = lambda.promoted(l);
  for (int i = 0; i < m.dim(); ++i) a.at(i, i) -= lam;
  return a;
}

}  // namespace

int shifted_nullity(const CycMatrix& m, const Cyclotomic& lambda) {
  if (m.is_diagonal()) {
    int count = 0;
    for (int i = 0; i < m.dim(); ++i)
      if (m.at(i, i) == lambda) ++count;
    return count;
  }
  Rref r = reduced_row_echelon(shifted(m, lambda));
  return m.dim() - static_cast<int>(r.pivot_cols.size());
}

std::vector<CycVec> shifted_nullspace_basis(const CycMatrix& m, const Cyclotomic& lambda) {
  int n = m.dim();
  Rref r = reduced_row_echelon(shifted(m, lambda));
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<CycVec> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    CycVec v(static_cast<std::size_t>(n), Cyclotomic::zero(m.order()));
    v[static_cast<std::size_t>(free_col)] = Cyclotomic::one(m.order());
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) {
      int pc = r.pivot_cols[pr];
      v[static_cast<std::size_t>(pc)] = -r.m.at(static_cast<int>(pr), free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int nullity(const CycMatrix& m) { return shifted_nullity(m, Cyclotomic::zero(m.order())); }

}  // namespace mckay
