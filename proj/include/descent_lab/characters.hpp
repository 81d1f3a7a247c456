#pragma once

// Permutation characters chi_J of W on W/W_J, parabolic marks, and the checks
// that the class product agrees with the Burnside ring and the character ring.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "descent_lab/class_algebra.hpp"
#include "descent_lab/cosets.hpp"
#include "descent_lab/linalg.hpp"
#include "descent_lab/rational.hpp"
#include "descent_lab/solomon.hpp"
#include "descent_lab/verdict.hpp"
#include "descent_lab/weyl.hpp"

namespace descent_lab {

struct ConjugacyClass {
  Partition cycle_type;
  std::uint64_t size = 0;
};

/// Cycle types of S_{n+1} in canonical order, with class sizes
/// (n+1)! / prod(i^{m_i} m_i!).
inline std::vector<ConjugacyClass> conjugacy_classes(Rank rank) {
  std::vector<ConjugacyClass> out;
  for (auto& p : enumerate_partitions(rank)) {
    std::map<int, int> multiplicity;
    for (int part : p.parts) ++multiplicity[part];
    std::uint64_t centralizer = 1;
    for (const auto& [part, m] : multiplicity) {
      for (int i = 0; i < m; ++i) centralizer *= static_cast<std::uint64_t>(part);
      centralizer *= factorial(m);
    }
    out.push_back({std::move(p), factorial(rank.points()) / centralizer});
  }
  return out;
}

/// Product of consecutive cycles (1..p1)(p1+1..p1+p2)...
inline Permutation class_representative(const Partition& cycle_type, Rank rank) {
  validate_partition(cycle_type, rank);
  std::vector<int> images(static_cast<std::size_t>(rank.points()));
  int start = 1;
  for (int part : cycle_type.parts) {
    for (int i = 0; i < part; ++i) {
      images[static_cast<std::size_t>(start + i - 1)] = start + (i + 1) % part;
    }
    start += part;
  }
  return Permutation::from_one_line(images);
}

/// Rational function on the conjugacy classes of S_{n+1}.
class ClassFunction {
 public:
  using Values = std::map<Partition, Rational, CanonicalOrder>;

  explicit ClassFunction(Rank rank) : rank_(rank) {
    for (auto& p : enumerate_partitions(rank)) values_.emplace(std::move(p), Rational(0));
  }

  Rank rank() const { return rank_; }
  const Values& values() const { return values_; }

  const Rational& at(const Partition& cycle_type) const {
    auto it = values_.find(cycle_type);
    if (it == values_.end()) throw InvalidPartition(to_string(cycle_type) + " is not a cycle type");
    return it->second;
  }
  Rational& at(const Partition& cycle_type) {
    auto it = values_.find(cycle_type);
    if (it == values_.end()) throw InvalidPartition(to_string(cycle_type) + " is not a cycle type");
    return it->second;
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same_rank(rank_, o.rank_);
    for (auto& [p, v] : values_) v += o.at(p);
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(const Rational& c, ClassFunction a) {
    for (auto& [p, v] : a.values_) v *= c;
    return a;
  }
  /// Pointwise product.
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) {
    require_same_rank(a.rank_, b.rank_);
    for (auto& [p, v] : a.values_) v *= b.at(p);
    return a;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.rank_ == b.rank_ && a.values_ == b.values_;
  }

  std::vector<Rational> as_vector() const {
    std::vector<Rational> v;
    v.reserve(values_.size());
    for (const auto& [p, x] : values_) v.push_back(x);
    return v;
  }

 private:
  Rank rank_;
  Values values_;
};

inline std::string to_string(const ClassFunction& f) {
  std::string out = "(";
  bool first = true;
  for (const auto& [p, v] : f.values()) {
    if (!first) out += ", ";
    out += to_string(p) + ":" + to_string(v);
    first = false;
  }
  return out + ")";
}

namespace detail {

/// Position -> block index for the blocks of J (1-based positions).
inline std::vector<int> position_blocks(SimpleRootSet subset, Rank rank) {
  std::vector<int> block(static_cast<std::size_t>(rank.points()) + 1);
  int b = 0;
  block[1] = 0;
  for (int k = 1; k <= rank.n(); ++k) {
    if (!subset.contains(k)) ++b;
    block[static_cast<std::size_t>(k + 1)] = b;
  }
  return block;
}

/// g d W_J = d W_J, i.e. d^{-1} g d preserves every block of J.
inline bool fixes_coset(const Permutation& g, const Permutation& d, const std::vector<int>& block) {
  const Permutation d_inv = d.inverse();
  for (int p = 1; p <= d.points(); ++p) {
    const int q = d_inv(g(d(p)));
    if (block[static_cast<std::size_t>(q)] != block[static_cast<std::size_t>(p)]) return false;
  }
  return true;
}

/// Ways to place each piece (cycle or block) into a bin so that every bin is
/// filled exactly. Pieces are distinguishable, bins are ordered.
inline std::uint64_t count_exact_fillings(const std::vector<int>& pieces, std::vector<int> bins) {
  auto place = [&](auto& self, std::size_t idx) -> std::uint64_t {
    if (idx == pieces.size()) {
      for (int b : bins) {
        if (b != 0) return 0;
      }
      return 1;
    }
    std::uint64_t total = 0;
    for (auto& room : bins) {
      if (room >= pieces[idx]) {
        room -= pieces[idx];
        total += self(self, idx + 1);
        room += pieces[idx];
      }
    }
    return total;
  };
  return place(place, 0);
}

}  // namespace detail

/// chi_J(g) = number of cosets d W_J fixed by g.
inline ClassFunction perm_character(SimpleRootSet subset, Rank rank,
                                    Strategy strategy = Strategy::automatic) {
  subset.validate(rank);
  ClassFunction chi(rank);
  if (resolve(strategy, rank) == Strategy::brute) {
    require_brute_force(rank);
    const auto reps = min_coset_reps(subset, rank, Strategy::brute).reps;
    const auto block = detail::position_blocks(subset, rank);
    for (const auto& cls : conjugacy_classes(rank)) {
      const Permutation g = class_representative(cls.cycle_type, rank);
      std::uint64_t fixed = 0;
      for (const auto& d : reps) {
        if (detail::fixes_coset(g, d, block)) ++fixed;
      }
      chi.at(cls.cycle_type) = Rational(fixed);
    }
  } else {
    // A coset is an ordered set partition with block sizes composition_of(J);
    // g fixes it iff every cycle of g lies inside one block.
    const Composition c = composition_of(subset, rank);
    for (const auto& cls : conjugacy_classes(rank)) {
      chi.at(cls.cycle_type) = Rational(detail::count_exact_fillings(cls.cycle_type.parts, c.parts));
    }
  }
  return chi;
}

/// Number of cosets in W/W_J fixed by every element of W_Q, Q the canonical
/// representative of `subgroup`.
inline std::uint64_t mark(const Partition& subgroup, SimpleRootSet subset, Rank rank,
                          Strategy strategy = Strategy::automatic) {
  subset.validate(rank);
  const SimpleRootSet q = canonical_representative(subgroup, rank);
  if (resolve(strategy, rank) == Strategy::brute) {
    require_brute_force(rank);
    const auto block = detail::position_blocks(subset, rank);
    std::vector<Permutation> generators;
    for (int k : q.members()) generators.push_back(simple_reflection(k, rank));
    std::uint64_t fixed = 0;
    for (const auto& d : min_coset_reps(subset, rank, Strategy::brute).reps) {
      bool all = true;
      for (const auto& s : generators) {
        if (!detail::fixes_coset(s, d, block)) {
          all = false;
          break;
        }
      }
      if (all) ++fixed;
    }
    return fixed;
  }
  // W_Q fixes a coset iff each block of J is a union of blocks of Q.
  return detail::count_exact_fillings(composition_of(q, rank).parts,
                                      composition_of(subset, rank).parts);
}

/// Rows: actions W/W_lambda; columns: parabolic classes P. Canonical order on both axes.
inline RationalMatrix marks_matrix(Rank rank, Strategy strategy = Strategy::automatic) {
  const auto partitions = enumerate_partitions(rank);
  RationalMatrix m(partitions.size(), partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const SimpleRootSet action = canonical_representative(partitions[i], rank);
    for (std::size_t j = 0; j < partitions.size(); ++j) {
      m(i, j) = Rational(mark(partitions[j], action, rank, strategy));
    }
  }
  return m;
}

/// Rows: chi_lambda; columns: cycle types. Canonical order on both axes.
inline RationalMatrix character_matrix(Rank rank, Strategy strategy = Strategy::automatic) {
  const auto partitions = enumerate_partitions(rank);
  RationalMatrix m(partitions.size(), partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const auto chi = perm_character(canonical_representative(partitions[i], rank), rank, strategy);
    std::size_t j = 0;
    for (const auto& [type, value] : chi.values()) m(i, j++) = value;
  }
  return m;
}

/// Marks are multiplicative for the class product, and the marks matrix is
/// nonsingular.
inline Verdict verify_burnside_iso(Rank rank, Strategy strategy = Strategy::automatic) {
  const auto algebra = ClassAlgebra::shared(rank, strategy);
  const auto& basis = algebra->basis();
  const RationalMatrix marks = marks_matrix(rank, strategy);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const ClassElement& prod = algebra->product(a, b);
      for (std::size_t p = 0; p < basis.size(); ++p) {
        Rational rhs = 0;
        for (const auto& [nu, c] : prod.terms()) rhs += c * marks(algebra->index_of(nu), p);
        if (marks(a, p) * marks(b, p) != rhs) {
          return Verdict::fail("mark at " + to_string(basis[p]) + ": " + to_string(marks(a, p)) +
                               "*" + to_string(marks(b, p)) + " != " + to_string(rhs) + " for " +
                               to_string(basis[a]) + "*" + to_string(basis[b]) + " = " +
                               to_string(prod));
        }
      }
    }
  }
  if (determinant(marks) == 0) return Verdict::fail("marks matrix is singular");
  return Verdict::pass();
}

/// chi_J chi_K = sum over L of a_JKL chi_L for all subset pairs, and the class
/// characters are linearly independent.
inline Verdict verify_character_iso(Rank rank, Strategy strategy = Strategy::automatic) {
  const auto subsets = enumerate_subsets(rank);
  std::vector<ClassFunction> chars;
  chars.reserve(subsets.size());
  for (const auto& s : subsets) chars.push_back(perm_character(s, rank, strategy));
  const auto table = cached_structure_table(rank, strategy);
  for (const auto& j : subsets) {
    for (const auto& k : subsets) {
      ClassFunction rhs(rank);
      for (const auto& e : table->row(j, k)) rhs += Rational(e.count) * chars[e.subset.mask()];
      const ClassFunction lhs = chars[j.mask()] * chars[k.mask()];
      if (!(lhs == rhs)) {
        return Verdict::fail("chi" + to_string(j) + "*chi" + to_string(k) + " = " + to_string(lhs) +
                             " but structure constants give " + to_string(rhs));
      }
    }
  }
  const RationalMatrix m = character_matrix(rank, strategy);
  if (matrix_rank(m) != m.rows()) return Verdict::fail("class characters are linearly dependent");
  return Verdict::pass();
}

}  // namespace descent_lab
