#pragma once

// Distinguished coset representatives X_J, double coset representatives
// X_JK = X_J^{-1} ∩ X_K, and the contingency-table parametrisation of
// Young-subgroup double cosets.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descent_lab/errors.hpp"
#include "descent_lab/weyl.hpp"

namespace descent_lab {

/// How coset data is produced. `brute` filters all of S_{n+1}; `matrix` generates
/// directly from block compositions / contingency tables.
enum class Strategy { brute, matrix, automatic };

inline constexpr int kAutoBruteMaxRank = 4;

inline Strategy resolve(Strategy s, Rank rank) {
  if (s != Strategy::automatic) return s;
  return rank.n() <= kAutoBruteMaxRank ? Strategy::brute : Strategy::matrix;
}

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::brute:
      return "brute";
    case Strategy::matrix:
      return "matrix";
    case Strategy::automatic:
      return "auto";
  }
  return "auto";
}

inline Strategy parse_strategy(std::string_view text) {
  if (text == "brute") return Strategy::brute;
  if (text == "matrix") return Strategy::matrix;
  if (text == "auto") return Strategy::automatic;
  throw Error("unknown strategy '" + std::string(text) + "'");
}

struct CosetRepSet {
  SimpleRootSet subset;
  std::vector<Permutation> reps;
};

struct DoubleCosetRepSet {
  SimpleRootSet left;
  SimpleRootSet right;
  std::vector<Permutation> reps;
};

/// w(alpha_k) is positive for every alpha_k in J.
inline bool sends_positive(const Permutation& w, SimpleRootSet subset) {
  for (int k : subset.members()) {
    if (!act_on_root(w, Root::simple(k)).positive()) return false;
  }
  return true;
}

inline bool is_min_coset_rep(const Permutation& w, SimpleRootSet subset) {
  return sends_positive(w, subset);
}

/// w^{-1}(J) ⊆ Φ+ and w(K) ⊆ Φ+.
inline bool is_double_coset_rep(const Permutation& w, SimpleRootSet left, SimpleRootSet right) {
  return sends_positive(w.inverse(), left) && sends_positive(w, right);
}

/// Deterministic order: by length, then lexicographically on the one-line word.
inline void sort_canonically(std::vector<Permutation>& perms) {
  std::vector<std::pair<int, Permutation>> keyed;
  keyed.reserve(perms.size());
  for (const auto& w : perms) keyed.emplace_back(length(w), w);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < perms.size(); ++i) perms[i] = keyed[i].second;
}

/// (n+1)! / prod(p_i!) for p = composition_of(J).
inline std::uint64_t count_min_reps(SimpleRootSet subset, Rank rank) {
  // Multiply binomials block by block to stay exact without overflow at supported ranks.
  std::uint64_t count = 1;
  int placed = 0;
  for (int part : composition_of(subset, rank).parts) {
    for (int i = 1; i <= part; ++i) {
      count = count * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
    }
    placed += part;
  }
  return count;
}

namespace detail {

/// Label word (value -> block index) for the first element of the direct X_J walk.
inline std::vector<int> sorted_block_labels(const Composition& c) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < c.parts.size(); ++b) {
    labels.insert(labels.end(), static_cast<std::size_t>(c.parts[b]), static_cast<int>(b));
  }
  return labels;
}

/// The element of X_J whose block b receives the values v with labels[v-1] == b, increasing.
inline Permutation rep_from_labels(const Composition& c, std::span<const int> labels) {
  std::vector<int> next_pos(c.parts.size());
  int start = 1;
  for (std::size_t b = 0; b < c.parts.size(); ++b) {
    next_pos[b] = start;
    start += c.parts[b];
  }
  std::vector<int> images(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    images[static_cast<std::size_t>(next_pos[static_cast<std::size_t>(labels[v])]++ - 1)] =
        static_cast<int>(v + 1);
  }
  return Permutation::from_one_line(images);
}

}  // namespace detail

inline CosetRepSet min_coset_reps(SimpleRootSet subset, Rank rank,
                                  Strategy strategy = Strategy::automatic) {
  subset.validate(rank);
  CosetRepSet out{subset, {}};
  if (resolve(strategy, rank) == Strategy::brute) {
    require_brute_force(rank);
    Permutation w = Permutation::identity(rank);
    do {
      if (is_min_coset_rep(w, subset)) out.reps.push_back(w);
    } while (w.next());
  } else {
    // Each coset wW_J is an assignment of values to position blocks; walk the
    // multiset permutations of the block-label word.
    const Composition c = composition_of(subset, rank);
    std::vector<int> labels = detail::sorted_block_labels(c);
    out.reps.reserve(count_min_reps(subset, rank));
    do {
      out.reps.push_back(detail::rep_from_labels(c, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  sort_canonically(out.reps);
  return out;
}

/// All elements of the parabolic subgroup W_J (the Young subgroup on J's blocks).
inline std::vector<Permutation> parabolic_subgroup(SimpleRootSet subset, Rank rank) {
  subset.validate(rank);
  require_brute_force(rank);
  const Composition c = composition_of(subset, rank);
  std::vector<int> block(static_cast<std::size_t>(rank.points()) + 1);
  int pos = 1;
  for (std::size_t b = 0; b < c.parts.size(); ++b) {
    for (int i = 0; i < c.parts[b]; ++i) block[static_cast<std::size_t>(pos++)] = static_cast<int>(b);
  }
  std::vector<Permutation> out;
  Permutation w = Permutation::identity(rank);
  do {
    bool keeps = true;
    for (int i = 1; i <= rank.points() && keeps; ++i) {
      keeps = block[static_cast<std::size_t>(w(i))] == block[static_cast<std::size_t>(i)];
    }
    if (keeps) out.push_back(w);
  } while (w.next());
  return out;
}

// ---------------------------------------------------------------------------
// Contingency tables

/// Nonnegative integer matrix with prescribed margins, row-major.
struct ContingencyTable {
  int rows = 0;
  int cols = 0;
  std::vector<int> cells;

  int at(int i, int j) const { return cells[static_cast<std::size_t>(i * cols + j)]; }
  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

/// Calls visit(table) for every nonnegative integer matrix with the given row
/// and column sums, in lexicographic order of the row-major cell sequence.
template <class Visitor>
void for_each_contingency_table(std::span<const int> row_sums, std::span<const int> col_sums,
                                Visitor&& visit) {
  ContingencyTable t;
  t.rows = static_cast<int>(row_sums.size());
  t.cols = static_cast<int>(col_sums.size());
  t.cells.assign(static_cast<std::size_t>(t.rows * t.cols), 0);
  std::vector<int> row_left(row_sums.begin(), row_sums.end());
  std::vector<int> col_left(col_sums.begin(), col_sums.end());
  long total_rows = 0;
  long total_cols = 0;
  for (int r : row_left) total_rows += r;
  for (int c : col_left) total_cols += c;
  if (total_rows != total_cols) return;

  auto fill = [&](auto& self, int cell) -> void {
    if (cell == t.rows * t.cols) {
      visit(static_cast<const ContingencyTable&>(t));
      return;
    }
    const int i = cell / t.cols;
    const int j = cell % t.cols;
    const auto ri = static_cast<std::size_t>(i);
    const auto cj = static_cast<std::size_t>(j);
    int lo = 0;
    int hi = std::min(row_left[ri], col_left[cj]);
    if (j == t.cols - 1) lo = row_left[ri];  // last column closes the row
    if (i == t.rows - 1) lo = std::max(lo, col_left[cj]);  // last row closes the column
    if (lo > hi) return;
    for (int v = lo; v <= hi; ++v) {
      t.cells[static_cast<std::size_t>(cell)] = v;
      row_left[ri] -= v;
      col_left[cj] -= v;
      self(self, cell + 1);
      row_left[ri] += v;
      col_left[cj] += v;
    }
    t.cells[static_cast<std::size_t>(cell)] = 0;
  };
  fill(fill, 0);
}

/// Minimal double coset representative for a table with rows = blocks of
/// `left` (values) and columns = blocks of `right` (positions).
inline Permutation double_coset_rep_from_table(const ContingencyTable& t, const Composition& left) {
  std::vector<int> next_value(left.parts.size());
  int start = 1;
  for (std::size_t i = 0; i < left.parts.size(); ++i) {
    next_value[i] = start;
    start += left.parts[i];
  }
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(start - 1));
  for (int j = 0; j < t.cols; ++j) {
    for (int i = 0; i < t.rows; ++i) {
      for (int c = 0; c < t.at(i, j); ++c) images.push_back(next_value[static_cast<std::size_t>(i)]++);
    }
  }
  return Permutation::from_one_line(images);
}

inline DoubleCosetRepSet double_coset_reps(SimpleRootSet left, SimpleRootSet right, Rank rank,
                                           Strategy strategy = Strategy::automatic) {
  left.validate(rank);
  right.validate(rank);
  DoubleCosetRepSet out{left, right, {}};
  if (resolve(strategy, rank) == Strategy::brute) {
    require_brute_force(rank);
    Permutation w = Permutation::identity(rank);
    do {
      if (is_double_coset_rep(w, left, right)) out.reps.push_back(w);
    } while (w.next());
  } else {
    const Composition lc = composition_of(left, rank);
    const Composition rc = composition_of(right, rank);
    for_each_contingency_table(lc.parts, rc.parts, [&](const ContingencyTable& t) {
      out.reps.push_back(double_coset_rep_from_table(t, lc));
    });
  }
  sort_canonically(out.reps);
  return out;
}

/// L = w^{-1}(J) ∩ K = {k in K : w(alpha_k) in J}. Requires w in X_JK.
inline SimpleRootSet intersection_subset(const Permutation& w, SimpleRootSet left,
                                         SimpleRootSet right) {
  if (left.mask() >> std::min(w.rank(), 31) != 0 || right.mask() >> std::min(w.rank(), 31) != 0) {
    throw InvalidSubset("subset does not fit the permutation degree");
  }
  if (!is_double_coset_rep(w, left, right)) {
    throw ContractViolation(to_string(w) + " is not a distinguished double coset representative for " +
                            to_string(left) + ", " + to_string(right));
  }
  std::uint32_t mask = 0;
  for (int k : right.members()) {
    const int idx = act_on_root(w, Root::simple(k)).simple_index();
    if (idx != 0 && left.contains(idx)) mask |= std::uint32_t{1} << (k - 1);
  }
  return SimpleRootSet::from_mask(mask);
}

}  // namespace descent_lab
