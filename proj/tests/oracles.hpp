#pragma once

// Test-only oracles. Each one recomputes a quantity from first principles
// without going through the library route it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "descent_lab/descent_lab.hpp"

namespace descent_lab::oracle {

/// Length as the number of positive roots sent to negative roots.
inline int length_by_roots(const Permutation& w, Rank rank) {
  int count = 0;
  for (const auto& r : positive_roots(rank)) {
    if (act_on_root(w, r).negative()) ++count;
  }
  return count;
}

/// The minimal element of wW_J: sort the values inside each position block.
inline Permutation sort_within_blocks(const Permutation& w, SimpleRootSet subset, Rank rank) {
  std::vector<int> images = w.one_line();
  int start = 0;
  for (int part : composition_of(subset, rank).parts) {
    std::sort(images.begin() + start, images.begin() + start + part);
    start += part;
  }
  return Permutation::from_one_line(images);
}

/// x_J x_K multiplied in the group algebra Q[S_{n+1}] (product i -> u(v(i))),
/// then decomposed into the basis x_L by Möbius inversion over subsets.
inline std::map<SimpleRootSet, std::int64_t> group_algebra_product(SimpleRootSet left,
                                                                   SimpleRootSet right,
                                                                   Rank rank) {
  std::map<Permutation, std::int64_t> product;
  const auto all = all_permutations(rank);
  std::vector<Permutation> xj;
  std::vector<Permutation> xk;
  for (const auto& w : all) {
    if ((descent_set(w) & left).empty()) xj.push_back(w);
    if ((descent_set(w) & right).empty()) xk.push_back(w);
  }
  for (const auto& u : xj) {
    for (const auto& v : xk) ++product[compose(u, v)];
  }
  // w lies in x_L iff L ⊆ complement(Des(w)); h(S) is the coefficient carried by
  // any w whose descent complement is S.
  const std::uint32_t full = rank.full_mask();
  std::map<std::uint32_t, std::int64_t> h;
  for (const auto& w : all) {
    const std::uint32_t s = full & ~descent_set(w).mask();
    const auto it = product.find(w);
    const std::int64_t c = it == product.end() ? 0 : it->second;
    auto [slot, inserted] = h.try_emplace(s, c);
    if (!inserted && slot->second != c) return {};  // not in the span of the x_L
  }
  std::map<SimpleRootSet, std::int64_t> out;
  for (std::uint32_t l = 0; l <= full; ++l) {
    std::int64_t b = 0;
    for (std::uint32_t s = l;; s = (s - 1) & l) {
      const int sign = (std::popcount(l & ~s) % 2 == 0) ? 1 : -1;
      b += sign * h.at(s);
      if (s == 0) break;
    }
    if (b != 0) out[SimpleRootSet::from_mask(l)] = b;
  }
  return out;
}

/// Burnside product W/W_J x W/W_K: orbits of S_{n+1} on pairs of ordered set
/// partitions, each orbit labelled by the block sizes of its stabiliser
/// (the nonempty intersections A_i ∩ B_j).
inline std::map<Partition, std::int64_t> burnside_product(SimpleRootSet left, SimpleRootSet right,
                                                          Rank rank) {
  const int m = rank.points();
  // label words: value v -> block containing it
  auto label_words = [&](SimpleRootSet s) {
    std::vector<std::vector<int>> words;
    for (const auto& d : min_coset_reps(s, rank, Strategy::brute).reps) {
      std::vector<int> word(static_cast<std::size_t>(m));
      int block = 0;
      for (int p = 1; p <= m; ++p) {
        if (p > 1 && !s.contains(p - 1)) ++block;
        word[static_cast<std::size_t>(d(p) - 1)] = block;
      }
      words.push_back(word);
    }
    return words;
  };
  const auto a_words = label_words(left);
  const auto b_words = label_words(right);
  using Pair = std::pair<std::vector<int>, std::vector<int>>;
  std::set<Pair> unseen;
  for (const auto& a : a_words) {
    for (const auto& b : b_words) unseen.insert({a, b});
  }
  std::map<Partition, std::int64_t> out;
  while (!unseen.empty()) {
    Pair seed = *unseen.begin();
    // flood-fill the orbit under adjacent transpositions of values
    std::vector<Pair> stack{seed};
    unseen.erase(seed);
    while (!stack.empty()) {
      Pair cur = stack.back();
      stack.pop_back();
      for (int v = 0; v + 1 < m; ++v) {
        Pair next = cur;
        std::swap(next.first[static_cast<std::size_t>(v)], next.first[static_cast<std::size_t>(v + 1)]);
        std::swap(next.second[static_cast<std::size_t>(v)], next.second[static_cast<std::size_t>(v + 1)]);
        if (unseen.erase(next) != 0) stack.push_back(next);
      }
    }
    std::map<std::pair<int, int>, int> cells;
    for (int v = 0; v < m; ++v) {
      ++cells[{seed.first[static_cast<std::size_t>(v)], seed.second[static_cast<std::size_t>(v)]}];
    }
    std::vector<int> sizes;
    for (const auto& [key, size] : cells) sizes.push_back(size);
    ++out[Partition::sorted_from(sizes)];
  }
  return out;
}

/// Number of p(m) by the standard recurrence over the largest part.
inline std::uint64_t partition_count(int m) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= m; ++part) {
    for (int t = part; t <= m; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - part)];
  }
  return ways[static_cast<std::size_t>(m)];
}

/// Number of cosets of W_J fixed by g, with cosets materialised as sets of permutations.
inline std::int64_t fixed_cosets(const Permutation& g, SimpleRootSet subset, Rank rank) {
  const auto sub = parabolic_subgroup(subset, rank);
  std::set<std::set<Permutation>> cosets;
  for (const auto& w : all_permutations(rank)) {
    std::set<Permutation> coset;
    for (const auto& v : sub) coset.insert(compose(w, v));
    cosets.insert(coset);
  }
  std::int64_t fixed = 0;
  for (const auto& coset : cosets) {
    std::set<Permutation> moved;
    for (const auto& w : coset) moved.insert(compose(g, w));
    if (moved == coset) ++fixed;
  }
  return fixed;
}

/// P refines lambda: the parts of P can be grouped to give the parts of lambda.
inline bool refines(const Partition& fine, const Partition& coarse) {
  std::vector<int> bins = coarse.parts;
  auto place = [&](auto& self, std::size_t idx) -> bool {
    if (idx == fine.parts.size()) {
      return std::all_of(bins.begin(), bins.end(), [](int b) { return b == 0; });
    }
    for (auto& room : bins) {
      if (room >= fine.parts[idx]) {
        room -= fine.parts[idx];
        const bool ok = self(self, idx + 1);
        room += fine.parts[idx];
        if (ok) return true;
      }
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace descent_lab::oracle
