#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mckay/matrix.hpp"

namespace mckay {

inline constexpr std::size_t kDefaultClosureCap = 20000;

struct ConjClass {
  std::size_t rep_index = 0;  // lowest member index, the canonical representative
  std::vector<std::size_t> member_indices;
  std::uint64_t centralizer_order = 0;
  std::uint64_t class_size = 0;
};

struct ValidationReport {
  bool in_sl = false;
  bool isolated = false;
  bool small = false;
  std::vector<std::string> notes;
  bool ok() const { return in_sl && isolated && small; }
};

// A finite matrix group enumerated from generators. Element 0 is the
// identity; the ordering is the BFS order from the identity with the
// generators applied in input order, so it is reproducible run to run.
class MatrixGroup {
public:
  static MatrixGroup close(std::vector<CycMatrix> generators,
                           std::size_t cap = kDefaultClosureCap);

  std::size_t size() const { return elements_.size(); }
  int dim() const { return n_; }
  std::int64_t field_order() const { return field_order_; }
  const CycMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

  std::optional<std::size_t> index_of(const CycMatrix& m) const;
  // Index arithmetic only; no matrix products after closure.
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::uint64_t element_order(std::size_t i) const;
  bool commute(std::size_t i, std::size_t j) const { return product(i, j) == product(j, i); }

  const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
  const ConjClass& class_of(std::size_t element_index) const {
    return classes_[class_index_of_[element_index]];
  }
  std::size_t class_index_of(std::size_t element_index) const {
    return class_index_of_[element_index];
  }

  ValidationReport validate() const;

  // product(i, e) for every element e, in element order.
  std::vector<std::size_t> left_multiplication_row(std::size_t i) const;

private:
  MatrixGroup() = default;
  void compute_inverses();
  void compute_classes();

  int n_ = 0;
  std::int64_t field_order_ = 1;
  std::vector<CycMatrix> elements_;
  std::vector<std::size_t> generator_indices_;
  std::map<CycMatrix, std::size_t> index_;
  // BFS structure: element e = elements_[parent_[e]] * gen(parent_gen_[e]).
  std::vector<std::size_t> parent_;
  std::vector<int> parent_gen_;
  std::vector<std::vector<std::size_t>> right_gen_table_;  // [element][generator]
  std::vector<std::size_t> inverse_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_index_of_;
};

}  // namespace mckay
