#include "mckay/groups.hpp"

#include <algorithm>
#include <deque>

#include "mckay/errors.hpp"

namespace mckay {

MatrixGroup MatrixGroup::close(std::vector<CycMatrix> generators, std::size_t cap) {
  require(!generators.empty(), ErrorKind::Internal, "close: no generators");
  int n = generators.front().dim();
  require(n >= 1, ErrorKind::Internal, "close: empty matrices");
  std::int64_t order = 1;
  for (const CycMatrix& g : generators) {
    require(g.dim() == n, ErrorKind::Internal, "close: generators of mixed size");
    order = lcm_checked(order, g.order());
  }
  for (CycMatrix& g : generators) g = g.promoted(order);
  for (std::size_t gi = 0; gi < generators.size(); ++gi)
    require(!generators[gi].det().is_zero(), ErrorKind::NotInvertible,
            "generator " + std::to_string(gi) + " is singular");

  MatrixGroup g;
  g.n_ = n;
  g.field_order_ = order;
  g.elements_.push_back(CycMatrix::identity(n, order));
  g.index_.emplace(g.elements_[0], 0);
  g.parent_.push_back(0);
  g.parent_gen_.push_back(-1);

  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    g.right_gen_table_.emplace_back(generators.size(), 0);
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      CycMatrix p = g.elements_[head] * generators[gi];
      auto it = g.index_.find(p);
      std::size_t idx;
      if (it != g.index_.end()) {
        idx = it->second;
      } else {
        idx = g.elements_.size();
        require(idx < cap, ErrorKind::CapExceeded,
                "group closure exceeded the cap of " + std::to_string(cap) + " elements");
        g.index_.emplace(p, idx);
        g.elements_.push_back(std::move(p));
        g.parent_.push_back(head);
        g.parent_gen_.push_back(static_cast<int>(gi));
      }
      g.right_gen_table_[head][gi] = idx;
    }
  }

  for (const CycMatrix& gen : generators)
    g.generator_indices_.push_back(g.index_.at(gen));

  g.compute_inverses();
  g.compute_classes();
  return g;
}

std::optional<std::size_t> MatrixGroup::index_of(const CycMatrix& m) const {
  CycMatrix key = m.order() == field_order_ ? m : m.promoted(lcm_checked(m.order(), field_order_));
  if (key.order() != field_order_) return std::nullopt;
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::product(std::size_t i, std::size_t j) const {
  // i * j, folding i along the generator word of j.
  std::size_t acc = i;
  // Collect j's generator word by walking the BFS tree.
  std::size_t cursor = j;
  std::vector<int> word;
  while (parent_gen_[cursor] >= 0) {
    word.push_back(parent_gen_[cursor]);
    cursor = parent_[cursor];
  }
  for (std::size_t k = word.size(); k-- > 0;)
    acc = right_gen_table_[acc][static_cast<std::size_t>(word[k])];
  return acc;
}

std::vector<std::size_t> MatrixGroup::left_multiplication_row(std::size_t i) const {
  // row[e] = i*e; BFS order makes row[parent(e)] available before e.
  std::vector<std::size_t> row(size());
  row[0] = i;
  for (std::size_t e = 1; e < size(); ++e)
    row[e] = right_gen_table_[row[parent_[e]]][static_cast<std::size_t>(parent_gen_[e])];
  return row;
}

void MatrixGroup::compute_inverses() {
  inverse_.assign(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    std::vector<std::size_t> row = left_multiplication_row(i);
    auto it = std::find(row.begin(), row.end(), std::size_t{0});
    require(it != row.end(), ErrorKind::Internal, "element without inverse");
    inverse_[i] = static_cast<std::size_t>(it - row.begin());
  }
}

std::uint64_t MatrixGroup::element_order(std::size_t i) const {
  std::uint64_t ord = 1;
  std::size_t acc = i;
  while (acc != 0) {
    acc = product(acc, i);
    ++ord;
    require(ord <= size(), ErrorKind::Internal, "element order exceeds group order");
  }
  require(size() % ord == 0, ErrorKind::Internal, "element order does not divide group order");
  return ord;
}

void MatrixGroup::compute_classes() {
  std::size_t m = size();
  class_index_of_.assign(m, m);
  std::vector<std::size_t> gen_inverses;
  for (std::size_t gi : generator_indices_) gen_inverses.push_back(inverse_[gi]);

  for (std::size_t rep = 0; rep < m; ++rep) {
    if (class_index_of_[rep] != m) continue;
    std::size_t class_idx = classes_.size();
    ConjClass cls;
    cls.rep_index = rep;
    std::deque<std::size_t> queue{rep};
    class_index_of_[rep] = class_idx;
    std::vector<std::size_t> members{rep};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < generator_indices_.size(); ++gi) {
        std::size_t y = product(product(generator_indices_[gi], x), gen_inverses[gi]);
        if (class_index_of_[y] == m) {
          class_index_of_[y] = class_idx;
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cls.class_size = members.size();
    cls.member_indices = std::move(members);

    // Direct stabilizer count for the centralizer order.
    std::vector<std::size_t> left = left_multiplication_row(rep);  // rep*h
    std::uint64_t count = 0;
    for (std::size_t h = 0; h < m; ++h)
      if (product(h, rep) == left[h]) ++count;
    cls.centralizer_order = count;
    require(cls.centralizer_order * cls.class_size == m, ErrorKind::Internal,
            "orbit-stabilizer mismatch in class computation");
    classes_.push_back(std::move(cls));
  }
}

ValidationReport MatrixGroup::validate() const {
  ValidationReport report;
  report.in_sl = true;
  for (std::size_t gi : generator_indices_) {
    Cyclotomic d = elements_[gi].det();
    if (!(d == Cyclotomic::one())) {
      report.in_sl = false;
      report.notes.push_back("generator at element index " + std::to_string(gi) +
                             " has determinant != 1");
      break;
    }
  }
  report.isolated = true;
  report.small = true;
  Cyclotomic one = Cyclotomic::one(field_order_);
  for (std::size_t i = 1; i < size(); ++i) {
    int fixed = shifted_nullity(elements_[i], one);
    if (fixed > 0 && report.isolated) {
      report.isolated = false;
      report.notes.push_back("element " + std::to_string(i) +
                             " fixes a nonzero subspace (eigenvalue 1, multiplicity " +
                             std::to_string(fixed) + ")");
    }
    if (fixed == n_ - 1 && report.small) {
      report.small = false;
      report.notes.push_back("element " + std::to_string(i) + " is a quasi-reflection");
    }
  }
  return report;
}

}  // namespace mckay
