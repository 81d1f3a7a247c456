#pragma once

// The class algebra spanned by the conjugacy classes [x_J]: partition-indexed
// basis, the induced product, the projection from the Solomon algebra, and the
// commutativity / well-definedness / semisimplicity checks.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "descent_lab/cosets.hpp"
#include "descent_lab/errors.hpp"
#include "descent_lab/linalg.hpp"
#include "descent_lab/rational.hpp"
#include "descent_lab/solomon.hpp"
#include "descent_lab/verdict.hpp"
#include "descent_lab/weyl.hpp"

namespace descent_lab {

inline Partition class_of(SimpleRootSet subset, Rank rank) { return partition_of(subset, rank); }

inline void validate_partition(const Partition& p, Rank rank) {
  Partition::from_parts(p.parts);
  if (p.total() != rank.points()) {
    throw InvalidPartition(to_string(p) + " is not a partition of " + std::to_string(rank.points()));
  }
}

/// Left-justified blocks in decreasing size: (3,1) at rank 3 gives {1,2}.
inline SimpleRootSet canonical_representative(const Partition& p, Rank rank) {
  validate_partition(p, rank);
  return subset_of(Composition{p.parts}, rank);
}

/// Rational combination of the class basis [x_lambda].
class ClassElement {
 public:
  using Terms = std::map<Partition, Rational, CanonicalOrder>;

  explicit ClassElement(Rank rank) : rank_(rank) {}

  static ClassElement basis(const Partition& p, Rank rank, const Rational& coeff = 1) {
    ClassElement e(rank);
    e.add(p, coeff);
    return e;
  }

  Rank rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  ClassElement& add(const Partition& p, const Rational& coeff) {
    validate_partition(p, rank_);
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  ClassElement& operator+=(const ClassElement& other) {
    require_same_rank(rank_, other.rank_);
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
  }
  ClassElement& operator-=(const ClassElement& other) {
    require_same_rank(rank_, other.rank_);
    for (const auto& [p, c] : other.terms_) add(p, -c);
    return *this;
  }
  friend ClassElement operator+(ClassElement a, const ClassElement& b) { return a += b; }
  friend ClassElement operator-(ClassElement a, const ClassElement& b) { return a -= b; }
  friend ClassElement operator*(const Rational& c, const ClassElement& a) {
    ClassElement out(a.rank_);
    for (const auto& [p, v] : a.terms_) out.add(p, c * v);
    return out;
  }
  friend bool operator==(const ClassElement& a, const ClassElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  Rank rank_;
  Terms terms_;
};

inline std::string to_string(const ClassElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + to_string(p);
  }
  return out;
}

/// Sum over L of a_JKL [class_of(L)] for one structure row.
inline ClassElement collapse(const StructureRow& row, Rank rank) {
  ClassElement out(rank);
  for (const auto& e : row) out.add(class_of(e.subset, rank), Rational(e.count));
  return out;
}

/// [x_lambda][x_mu], evaluated on canonical representatives.
inline ClassElement multiply_classes(const Partition& lhs, const Partition& rhs, Rank rank,
                                     Strategy strategy = Strategy::automatic) {
  const SimpleRootSet j = canonical_representative(lhs, rank);
  const SimpleRootSet k = canonical_representative(rhs, rank);
  return collapse(structure_row(j, k, rank, strategy), rank);
}

/// Multiplication table of the class basis, built once per (rank, strategy).
class ClassAlgebra {
 public:
  static ClassAlgebra build(Rank rank, Strategy strategy = Strategy::automatic) {
    ClassAlgebra a(rank, resolve(strategy, rank));
    a.basis_ = enumerate_partitions(rank);
    for (std::size_t i = 0; i < a.basis_.size(); ++i) a.index_.emplace(a.basis_[i], i);
    a.products_.reserve(a.basis_.size() * a.basis_.size());
    for (const auto& lhs : a.basis_) {
      for (const auto& rhs : a.basis_) {
        a.products_.push_back(multiply_classes(lhs, rhs, rank, a.strategy_));
      }
    }
    return a;
  }

  static std::shared_ptr<const ClassAlgebra> shared(Rank rank,
                                                    Strategy strategy = Strategy::automatic) {
    static std::mutex mutex;
    static std::map<std::pair<int, Strategy>, std::shared_ptr<const ClassAlgebra>> cache;
    const Strategy resolved = resolve(strategy, rank);
    const std::lock_guard lock(mutex);
    auto& slot = cache[{rank.n(), resolved}];
    if (!slot) slot = std::make_shared<const ClassAlgebra>(build(rank, resolved));
    return slot;
  }

  Rank rank() const { return rank_; }
  Strategy strategy() const { return strategy_; }
  const std::vector<Partition>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::size_t index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      throw InvalidPartition(to_string(p) + " is not a partition of " +
                             std::to_string(rank_.points()));
    }
    return it->second;
  }

  const ClassElement& product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
  }
  const ClassElement& product(const Partition& lhs, const Partition& rhs) const {
    return product(index_of(lhs), index_of(rhs));
  }

  ClassElement multiply(const ClassElement& a, const ClassElement& b) const {
    require_same_rank(a.rank(), rank_);
    require_same_rank(b.rank(), rank_);
    ClassElement out(rank_);
    for (const auto& [p, cp] : a.terms()) {
      for (const auto& [q, cq] : b.terms()) out += (cp * cq) * product(p, q);
    }
    return out;
  }

  /// Coordinates in the class basis (canonical partition order).
  std::vector<Rational> coordinates(const ClassElement& e) const {
    std::vector<Rational> v(basis_.size());
    for (const auto& [p, c] : e.terms()) v[index_of(p)] = c;
    return v;
  }

 private:
  ClassAlgebra(Rank rank, Strategy strategy) : rank_(rank), strategy_(strategy) {}

  Rank rank_;
  Strategy strategy_;
  std::vector<Partition> basis_;
  std::map<Partition, std::size_t> index_;
  std::vector<ClassElement> products_;
};

inline ClassElement multiply(const ClassElement& a, const ClassElement& b,
                             Strategy strategy = Strategy::automatic) {
  require_same_rank(a.rank(), b.rank());
  return ClassAlgebra::shared(a.rank(), strategy)->multiply(a, b);
}

/// Linear map x_J -> [x_J].
inline ClassElement project(const SolomonElement& a) {
  ClassElement out(a.rank());
  for (const auto& [s, c] : a.terms()) out.add(class_of(s, a.rank()), c);
  return out;
}

/// Matrix of project: rows = partitions (canonical order), columns = subsets (bitmask order).
inline RationalMatrix projection_matrix(Rank rank) {
  const auto partitions = enumerate_partitions(rank);
  std::map<Partition, std::size_t> row_of;
  for (std::size_t i = 0; i < partitions.size(); ++i) row_of.emplace(partitions[i], i);
  RationalMatrix m(partitions.size(), std::size_t{rank.full_mask()} + 1);
  for (const auto& s : enumerate_subsets(rank)) m(row_of.at(class_of(s, rank)), s.mask()) = 1;
  return m;
}

inline std::size_t projection_kernel_dimension(Rank rank) {
  const RationalMatrix m = projection_matrix(rank);
  return m.cols() - matrix_rank(m);
}

/// The class-projected product of x_J x_K depends only on the classes of J and
/// K, for every pair of subsets.
inline Verdict verify_well_defined(const StructureTable& table) {
  const Rank rank = table.rank();
  const auto subsets = enumerate_subsets(rank);
  std::map<std::pair<Partition, Partition>, std::pair<ClassElement, std::pair<SimpleRootSet, SimpleRootSet>>>
      seen;
  for (const auto& j : subsets) {
    for (const auto& k : subsets) {
      ClassElement value = collapse(table.row(j, k), rank);
      auto key = std::make_pair(class_of(j, rank), class_of(k, rank));
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(std::move(key), std::make_pair(std::move(value), std::make_pair(j, k)));
      } else if (!(it->second.first == value)) {
        const auto& [j0, k0] = it->second.second;
        return Verdict::fail("[x" + to_string(j) + "][x" + to_string(k) + "] = " + to_string(value) +
                             " but [x" + to_string(j0) + "][x" + to_string(k0) +
                             "] = " + to_string(it->second.first));
      }
    }
  }
  return Verdict::pass();
}

inline Verdict verify_well_defined(Rank rank, Strategy strategy = Strategy::brute) {
  return verify_well_defined(*cached_structure_table(rank, strategy));
}

inline Verdict verify_commutative(const ClassAlgebra& algebra) {
  const auto& basis = algebra.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!(algebra.product(i, j) == algebra.product(j, i))) {
        return Verdict::fail(to_string(basis[i]) + "*" + to_string(basis[j]) + " = " +
                             to_string(algebra.product(i, j)) + " but reversed = " +
                             to_string(algebra.product(j, i)));
      }
    }
  }
  return Verdict::pass();
}

inline Verdict verify_commutative(Rank rank, Strategy strategy = Strategy::automatic) {
  return verify_commutative(*ClassAlgebra::shared(rank, strategy));
}

/// Trace form of the class algebra in the partition basis.
struct GramMatrix {
  Rank rank;
  std::vector<Partition> order;
  RationalMatrix entries;
};

inline GramMatrix gram_matrix(const ClassAlgebra& algebra) {
  const std::size_t dim = algebra.dimension();
  // trace of left multiplication by [x_nu] is the sum of its diagonal coefficients
  std::vector<Rational> basis_trace(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    for (std::size_t m = 0; m < dim; ++m) {
      basis_trace[v] += algebra.product(v, m).coefficient(algebra.basis()[m]);
    }
  }
  RationalMatrix entries(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Rational t = 0;
      for (const auto& [p, c] : algebra.product(i, j).terms()) {
        t += c * basis_trace[algebra.index_of(p)];
      }
      entries(i, j) = t;
    }
  }
  return {algebra.rank(), algebra.basis(), std::move(entries)};
}

inline GramMatrix gram_matrix(Rank rank, Strategy strategy = Strategy::automatic) {
  return gram_matrix(*ClassAlgebra::shared(rank, strategy));
}

/// Nondegenerate trace form over Q (characteristic zero).
inline bool is_semisimple(Rank rank, Strategy strategy = Strategy::automatic) {
  return determinant(gram_matrix(rank, strategy).entries) != 0;
}

}  // namespace descent_lab
