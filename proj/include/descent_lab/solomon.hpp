#pragma once

// Solomon's descent algebra of W(A_n): the basis x_J, the structure constants
// a_JKL (counted over X_JK), products, and the radical spanning set.

#include <cstdint>
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
#include "descent_lab/weyl.hpp"

namespace descent_lab {

using Count = std::uint64_t;

struct StructureEntry {
  SimpleRootSet subset;
  Count count = 0;
  friend bool operator==(const StructureEntry&, const StructureEntry&) = default;
};

/// Nonzero a_JKL for one (J, K), sorted by L.
using StructureRow = std::vector<StructureEntry>;

namespace detail {

inline StructureRow to_row(const std::map<SimpleRootSet, Count>& counts) {
  StructureRow row;
  row.reserve(counts.size());
  for (const auto& [subset, count] : counts) row.push_back({subset, count});
  return row;
}

}  // namespace detail

/// a_J K L for every L, by filtering all of S_{n+1} for X_JK.
inline StructureRow structure_row_brute(SimpleRootSet left, SimpleRootSet right, Rank rank) {
  std::map<SimpleRootSet, Count> counts;
  for (const auto& w : double_coset_reps(left, right, rank, Strategy::brute).reps) {
    ++counts[intersection_subset(w, left, right)];
  }
  return detail::to_row(counts);
}

/// Which composition labels the rows of the contingency table.
enum class MatrixOrientation { left_rows, left_columns };
/// Order in which nonzero entries are read off as the composition of L.
enum class ScanOrder { column_major, row_major };

struct MatrixConvention {
  MatrixOrientation orientation = MatrixOrientation::left_rows;
  ScanOrder scan = ScanOrder::column_major;
};

/// Rows carry the blocks of J (values of w), columns the blocks of K (positions
/// of w); reading each column top to bottom gives the blocks of L inside the
/// corresponding block of K. Calibrated against structure_row_brute.
inline constexpr MatrixConvention kCalibratedConvention{MatrixOrientation::left_rows,
                                                        ScanOrder::column_major};

/// a_JKL from the contingency tables whose margins are the compositions of J and K.
inline StructureRow structure_row_via_matrices(SimpleRootSet left, SimpleRootSet right, Rank rank,
                                               MatrixConvention convention = kCalibratedConvention) {
  const Composition lc = composition_of(left, rank);
  const Composition rc = composition_of(right, rank);
  const bool left_rows = convention.orientation == MatrixOrientation::left_rows;
  const auto& row_sums = left_rows ? lc.parts : rc.parts;
  const auto& col_sums = left_rows ? rc.parts : lc.parts;

  std::map<SimpleRootSet, Count> counts;
  Composition blocks;
  for_each_contingency_table(row_sums, col_sums, [&](const ContingencyTable& t) {
    blocks.parts.clear();
    if (convention.scan == ScanOrder::column_major) {
      for (int j = 0; j < t.cols; ++j) {
        for (int i = 0; i < t.rows; ++i) {
          if (t.at(i, j) != 0) blocks.parts.push_back(t.at(i, j));
        }
      }
    } else {
      for (int i = 0; i < t.rows; ++i) {
        for (int j = 0; j < t.cols; ++j) {
          if (t.at(i, j) != 0) blocks.parts.push_back(t.at(i, j));
        }
      }
    }
    ++counts[subset_of(blocks, rank)];
  });
  return detail::to_row(counts);
}

inline StructureRow structure_row(SimpleRootSet left, SimpleRootSet right, Rank rank,
                                  Strategy strategy = Strategy::automatic) {
  left.validate(rank);
  right.validate(rank);
  return resolve(strategy, rank) == Strategy::brute ? structure_row_brute(left, right, rank)
                                                    : structure_row_via_matrices(left, right, rank);
}

/// a_JKL for L ⊆ K; zero otherwise.
inline Count structure_constant(SimpleRootSet left, SimpleRootSet right, SimpleRootSet result,
                                Rank rank, Strategy strategy = Strategy::automatic) {
  result.validate(rank);
  const StructureRow row = structure_row(left, right, rank, strategy);
  if (!result.is_subset_of(right)) return 0;
  for (const auto& e : row) {
    if (e.subset == result) return e.count;
  }
  return 0;
}

/// Every a_JKL for one rank, indexed by (J, K).
class StructureTable {
 public:
  static StructureTable build(Rank rank, Strategy strategy = Strategy::automatic) {
    const Strategy resolved = resolve(strategy, rank);
    StructureTable table(rank, resolved);
    const std::uint32_t size = rank.full_mask() + 1;
    table.rows_.reserve(std::size_t{size} * size);
    for (std::uint32_t j = 0; j < size; ++j) {
      for (std::uint32_t k = 0; k < size; ++k) {
        table.rows_.push_back(structure_row(SimpleRootSet::from_mask(j),
                                            SimpleRootSet::from_mask(k), rank, resolved));
      }
    }
    return table;
  }

  Rank rank() const { return rank_; }
  Strategy strategy() const { return strategy_; }

  const StructureRow& row(SimpleRootSet left, SimpleRootSet right) const {
    left.validate(rank_);
    right.validate(rank_);
    return rows_[std::size_t{left.mask()} * (rank_.full_mask() + 1) + right.mask()];
  }

  Count at(SimpleRootSet left, SimpleRootSet right, SimpleRootSet result) const {
    for (const auto& e : row(left, right)) {
      if (e.subset == result) return e.count;
    }
    return 0;
  }

  /// |X_JK| = sum over L of a_JKL.
  Count double_coset_count(SimpleRootSet left, SimpleRootSet right) const {
    Count total = 0;
    for (const auto& e : row(left, right)) total += e.count;
    return total;
  }

  /// Same constants, regardless of how they were computed.
  bool same_constants(const StructureTable& other) const {
    return rank_ == other.rank_ && rows_ == other.rows_;
  }

 private:
  StructureTable(Rank rank, Strategy strategy) : rank_(rank), strategy_(strategy) {}

  Rank rank_;
  Strategy strategy_;
  std::vector<StructureRow> rows_;
};

/// Process-wide immutable table per (rank, resolved strategy).
inline std::shared_ptr<const StructureTable> cached_structure_table(
    Rank rank, Strategy strategy = Strategy::automatic) {
  static std::mutex mutex;
  static std::map<std::pair<int, Strategy>, std::shared_ptr<const StructureTable>> cache;
  const Strategy resolved = resolve(strategy, rank);
  const std::lock_guard lock(mutex);
  auto& slot = cache[{rank.n(), resolved}];
  if (!slot) slot = std::make_shared<const StructureTable>(StructureTable::build(rank, resolved));
  return slot;
}

// ---------------------------------------------------------------------------
// Elements

/// Rational combination of the basis x_J.
class SolomonElement {
 public:
  explicit SolomonElement(Rank rank) : rank_(rank) {}

  static SolomonElement basis(SimpleRootSet subset, Rank rank, const Rational& coeff = 1) {
    subset.validate(rank);
    SolomonElement e(rank);
    e.add(subset, coeff);
    return e;
  }

  Rank rank() const { return rank_; }
  const std::map<SimpleRootSet, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(SimpleRootSet subset) const {
    auto it = terms_.find(subset);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SolomonElement& add(SimpleRootSet subset, const Rational& coeff) {
    subset.validate(rank_);
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(subset, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  SolomonElement& operator+=(const SolomonElement& other) {
    require_same_rank(rank_, other.rank_);
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
  }
  SolomonElement& operator-=(const SolomonElement& other) {
    require_same_rank(rank_, other.rank_);
    for (const auto& [s, c] : other.terms_) add(s, -c);
    return *this;
  }
  friend SolomonElement operator+(SolomonElement a, const SolomonElement& b) { return a += b; }
  friend SolomonElement operator-(SolomonElement a, const SolomonElement& b) { return a -= b; }
  friend SolomonElement operator*(const Rational& c, const SolomonElement& a) {
    SolomonElement out(a.rank_);
    for (const auto& [s, v] : a.terms_) out.add(s, c * v);
    return out;
  }
  friend bool operator==(const SolomonElement& a, const SolomonElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Coordinates in the subset basis, ordered by bitmask.
  std::vector<Rational> coordinates() const {
    std::vector<Rational> v(std::size_t{rank_.full_mask()} + 1);
    for (const auto& [s, c] : terms_) v[s.mask()] = c;
    return v;
  }

 private:
  Rank rank_;
  std::map<SimpleRootSet, Rational> terms_;
};

inline std::string to_string(const SolomonElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*x" + to_string(s);
  }
  return out;
}

/// x_J x_K = sum over L ⊆ K of a_JKL x_L.
inline SolomonElement multiply_basis(SimpleRootSet left, SimpleRootSet right, Rank rank,
                                     Strategy strategy = Strategy::automatic) {
  SolomonElement out(rank);
  for (const auto& e : structure_row(left, right, rank, strategy)) {
    out.add(e.subset, Rational(e.count));
  }
  return out;
}

/// Bilinear extension of multiply_basis over the rank's structure table.
inline SolomonElement multiply(const SolomonElement& a, const SolomonElement& b,
                               Strategy strategy = Strategy::automatic) {
  require_same_rank(a.rank(), b.rank());
  const auto table = cached_structure_table(a.rank(), strategy);
  SolomonElement out(a.rank());
  for (const auto& [j, cj] : a.terms()) {
    for (const auto& [k, ck] : b.terms()) {
      const Rational weight = cj * ck;
      for (const auto& e : table->row(j, k)) out.add(e.subset, weight * e.count);
    }
  }
  return out;
}

/// x_J - x_K over unordered pairs J < K (bitmask order) of conjugate subsets.
inline std::vector<SolomonElement> radical_spanning_set(Rank rank) {
  std::vector<SolomonElement> out;
  const auto subsets = enumerate_subsets(rank);
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      if (are_conjugate(subsets[a], subsets[b], rank)) {
        out.push_back(SolomonElement::basis(subsets[a], rank) -
                      SolomonElement::basis(subsets[b], rank));
      }
    }
  }
  return out;
}

/// Trace form in the subset basis: entry (J, K) = trace of left multiplication by x_J x_K.
inline RationalMatrix solomon_trace_form(const StructureTable& table) {
  const Rank rank = table.rank();
  const auto subsets = enumerate_subsets(rank);
  // trace of left multiplication by x_L is sum over M of a_{L M M}
  std::vector<Rational> basis_trace(subsets.size());
  for (const auto& l : subsets) {
    Count t = 0;
    for (const auto& m : subsets) t += table.at(l, m, m);
    basis_trace[l.mask()] = Rational(t);
  }
  RationalMatrix gram(subsets.size(), subsets.size());
  for (const auto& j : subsets) {
    for (const auto& k : subsets) {
      Rational entry = 0;
      for (const auto& e : table.row(j, k)) entry += basis_trace[e.subset.mask()] * e.count;
      gram(j.mask(), k.mask()) = entry;
    }
  }
  return gram;
}

inline RationalMatrix solomon_trace_form(Rank rank, Strategy strategy = Strategy::automatic) {
  return solomon_trace_form(*cached_structure_table(rank, strategy));
}

}  // namespace descent_lab
