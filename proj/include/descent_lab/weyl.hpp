#pragma once

// The Weyl group W(A_n) = S_{n+1}: permutations, roots e_i - e_j, subsets of
// simple roots, block compositions and partitions, and the conjugacy relation
// on subsets of simple roots.

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descent_lab/errors.hpp"

namespace descent_lab {

/// Permutations are stored inline; this bounds the rank at compile time.
inline constexpr int kMaxPoints = 16;
inline constexpr int kHardMaxRank = kMaxPoints - 1;
inline constexpr int kDefaultMaxRank = 9;
/// Paths that enumerate all of S_{n+1} refuse ranks above this.
inline constexpr int kBruteForceMaxRank = 6;

inline constexpr const char* kMaxRankEnv = "DESCENT_LAB_MAX_RANK";

/// Capacity bound, overridable through DESCENT_LAB_MAX_RANK (clamped to the hard limit).
inline int configured_max_rank() {
  const char* raw = std::getenv(kMaxRankEnv);
  if (raw == nullptr) return kDefaultMaxRank;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    return kDefaultMaxRank;
  }
  return std::min(value, kHardMaxRank);
}

/// Number of simple roots n; the group is S_{n+1}.
class Rank {
 public:
  explicit Rank(int n) : n_(n) {
    if (n < 1) throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
    if (n > configured_max_rank()) {
      throw CapacityError("rank " + std::to_string(n) + " exceeds the configured maximum " +
                          std::to_string(configured_max_rank()));
    }
  }

  int n() const { return n_; }
  int points() const { return n_ + 1; }
  std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }

  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

inline void require_same_rank(Rank a, Rank b) {
  if (a != b) {
    throw RankMismatch("rank mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

inline void require_brute_force(Rank rank) {
  if (rank.n() > kBruteForceMaxRank) {
    throw CapacityError("brute-force enumeration is limited to rank " +
                        std::to_string(kBruteForceMaxRank) + ", got " + std::to_string(rank.n()));
  }
}

inline std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// ---------------------------------------------------------------------------
// Permutation

/// Element of S_{n+1} in one-line notation: w maps i to w(i), both 1-based.
class Permutation {
 public:
  static Permutation identity(int points) {
    check_points(points);
    Permutation w;
    w.size_ = static_cast<std::uint8_t>(points);
    for (int i = 0; i < points; ++i) w.images_[i] = static_cast<std::uint8_t>(i + 1);
    return w;
  }

  static Permutation identity(Rank rank) { return identity(rank.points()); }

  /// Validates that `images` is a bijection of {1..m}.
  static Permutation from_one_line(std::span<const int> images) {
    const int m = static_cast<int>(images.size());
    check_points(m);
    Permutation w;
    w.size_ = static_cast<std::uint8_t>(m);
    std::uint32_t seen = 0;
    for (int i = 0; i < m; ++i) {
      const int v = images[i];
      if (v < 1 || v > m || (seen >> v & 1U)) {
        throw InvalidPermutation("one-line word is not a bijection of {1.." + std::to_string(m) +
                                 "}");
      }
      seen |= 1U << v;
      w.images_[i] = static_cast<std::uint8_t>(v);
    }
    return w;
  }

  static Permutation from_one_line(std::initializer_list<int> images) {
    return from_one_line(std::span<const int>(images.begin(), images.size()));
  }

  int points() const { return size_; }
  int rank() const { return size_ - 1; }

  /// w(i) for 1-based i.
  int operator()(int i) const { return images_[i - 1]; }

  std::vector<int> one_line() const { return {images_.begin(), images_.begin() + size_}; }

  Permutation inverse() const {
    Permutation r;
    r.size_ = size_;
    for (int i = 0; i < size_; ++i) r.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < size_; ++i) {
      if (images_[i] != i + 1) return false;
    }
    return true;
  }

  /// Lexicographic order on the one-line word (words of different degree compare by degree).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.begin() + a.size_,
                                                  b.images_.begin(), b.images_.begin() + b.size_);
  }
  friend bool operator==(const Permutation& a, const Permutation& b) { return (a <=> b) == 0; }

  /// Advance to the lexicographically next permutation; false after the last one.
  bool next() { return std::next_permutation(images_.begin(), images_.begin() + size_); }

 private:
  static void check_points(int points) {
    if (points < 1 || points > kMaxPoints) {
      throw InvalidPermutation("permutation degree " + std::to_string(points) +
                               " outside 1.." + std::to_string(kMaxPoints));
    }
  }

  std::array<std::uint8_t, kMaxPoints> images_{};
  std::uint8_t size_ = 0;
};

inline std::string to_string(const Permutation& w) {
  std::string out = "[";
  for (int i = 1; i <= w.points(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out + "]";
}

/// i -> u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.points() != v.points()) {
    throw RankMismatch("cannot compose permutations of degree " + std::to_string(u.points()) +
                       " and " + std::to_string(v.points()));
  }
  std::array<int, kMaxPoints> images{};
  for (int i = 1; i <= u.points(); ++i) images[i - 1] = u(v(i));
  return Permutation::from_one_line(std::span<const int>(images.data(), u.points()));
}

inline Permutation inverse(const Permutation& w) { return w.inverse(); }

/// Number of inversions, i.e. positive roots sent to negative roots.
inline int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.points(); ++i) {
    for (int j = i + 1; j <= w.points(); ++j) {
      if (w(i) > w(j)) ++inv;
    }
  }
  return inv;
}

/// Simple transposition s_k = (k, k+1), the reflection in alpha_k.
inline Permutation simple_reflection(int k, Rank rank) {
  std::array<int, kMaxPoints> images{};
  for (int i = 0; i < rank.points(); ++i) images[i] = i + 1;
  std::swap(images[k - 1], images[k]);
  return Permutation::from_one_line(std::span<const int>(images.data(), rank.points()));
}

/// All of S_{n+1} in lexicographic order. Brute-force bound applies.
inline std::vector<Permutation> all_permutations(Rank rank) {
  require_brute_force(rank);
  std::vector<Permutation> out;
  out.reserve(factorial(rank.points()));
  Permutation w = Permutation::identity(rank);
  do {
    out.push_back(w);
  } while (w.next());
  return out;
}

// ---------------------------------------------------------------------------
// Roots

/// The root e_i - e_j.
struct Root {
  int i = 1;
  int j = 2;

  static Root simple(int k) { return {k, k + 1}; }

  bool positive() const { return i < j; }
  bool negative() const { return i > j; }
  /// Index k when the root is alpha_k, otherwise 0.
  int simple_index() const { return j == i + 1 ? i : 0; }

  friend bool operator==(const Root&, const Root&) = default;
};

inline Root act_on_root(const Permutation& w, const Root& r) {
  if (r.i < 1 || r.j < 1 || r.i > w.points() || r.j > w.points() || r.i == r.j) {
    throw RankMismatch("root (" + std::to_string(r.i) + "," + std::to_string(r.j) +
                       ") is not a root for degree " + std::to_string(w.points()));
  }
  return {w(r.i), w(r.j)};
}

/// Positive roots e_i - e_j, i < j, in lexicographic order.
inline std::vector<Root> positive_roots(Rank rank) {
  std::vector<Root> out;
  for (int i = 1; i <= rank.points(); ++i) {
    for (int j = i + 1; j <= rank.points(); ++j) out.push_back({i, j});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subsets of simple roots

/// J subset of Pi, encoded as a bitmask: bit k-1 set iff alpha_k in J.
class SimpleRootSet {
 public:
  constexpr SimpleRootSet() = default;

  static constexpr SimpleRootSet from_mask(std::uint32_t mask) {
    SimpleRootSet s;
    s.mask_ = mask;
    return s;
  }

  static SimpleRootSet of(std::initializer_list<int> members) {
    return of(std::span<const int>(members.begin(), members.size()));
  }

  static SimpleRootSet of(std::span<const int> members) {
    SimpleRootSet s;
    for (int k : members) {
      if (k < 1 || k > kHardMaxRank) {
        throw InvalidSubset("simple root index " + std::to_string(k) + " out of range");
      }
      s.mask_ |= std::uint32_t{1} << (k - 1);
    }
    return s;
  }

  static SimpleRootSet full(Rank rank) { return from_mask(rank.full_mask()); }

  constexpr std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool contains(int k) const { return k >= 1 && k <= 32 && (mask_ >> (k - 1) & 1U); }
  bool is_subset_of(SimpleRootSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  void validate(Rank rank) const {
    if ((mask_ & ~rank.full_mask()) != 0) {
      throw InvalidSubset("subset contains simple roots beyond index " + std::to_string(rank.n()));
    }
  }

  friend SimpleRootSet operator&(SimpleRootSet a, SimpleRootSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend SimpleRootSet operator|(SimpleRootSet a, SimpleRootSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend auto operator<=>(SimpleRootSet, SimpleRootSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

inline std::string to_string(SimpleRootSet s) {
  std::string out = "{";
  bool first = true;
  for (int k : s.members()) {
    if (!first) out += ',';
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

/// Image of J under w when it is again a set of simple roots, otherwise nullopt.
inline std::optional<SimpleRootSet> act_on_subset(const Permutation& w, SimpleRootSet subset) {
  std::uint32_t image = 0;
  for (int k : subset.members()) {
    if (k + 1 > w.points()) throw InvalidSubset("subset does not fit the permutation degree");
    const int idx = act_on_root(w, Root::simple(k)).simple_index();
    if (idx == 0) return std::nullopt;
    image |= std::uint32_t{1} << (idx - 1);
  }
  return SimpleRootSet::from_mask(image);
}

/// {k : w(k) > w(k+1)}.
inline SimpleRootSet descent_set(const Permutation& w) {
  std::uint32_t mask = 0;
  for (int k = 1; k < w.points(); ++k) {
    if (w(k) > w(k + 1)) mask |= std::uint32_t{1} << (k - 1);
  }
  return SimpleRootSet::from_mask(mask);
}

/// All 2^n subsets, ordered by their bitmask.
inline std::vector<SimpleRootSet> enumerate_subsets(Rank rank) {
  std::vector<SimpleRootSet> out;
  out.reserve(std::size_t{1} << rank.n());
  for (std::uint32_t m = 0; m <= rank.full_mask(); ++m) out.push_back(SimpleRootSet::from_mask(m));
  return out;
}

// ---------------------------------------------------------------------------
// Compositions and partitions

struct Composition {
  std::vector<int> parts;

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  static Partition from_parts(std::vector<int> parts) {
    if (parts.empty()) throw InvalidPartition("partition must have at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw InvalidPartition("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1]) {
        throw InvalidPartition("partition parts must be weakly decreasing");
      }
    }
    return Partition{std::move(parts)};
  }

  static Partition sorted_from(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return from_parts(std::move(parts));
  }

  static Partition ones(int m) { return Partition{std::vector<int>(static_cast<std::size_t>(m), 1)}; }

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Reverse-lexicographic order: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a.parts > b.parts; }
};

inline std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out + "]";
}

inline std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c.parts[i]);
  }
  return out + ")";
}

/// Parses "[3,1]" (whitespace tolerated).
inline Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  if (compact.size() < 3 || compact.front() != '[' || compact.back() != ']') {
    throw InvalidPartition("expected a bracketed partition like [3,1], got '" + std::string(text) +
                           "'");
  }
  std::vector<int> parts;
  std::string_view body(compact.data() + 1, compact.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto token = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidPartition("bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Partition::from_parts(std::move(parts));
}

/// Block sizes of {1..n+1} after joining i and i+1 for every alpha_i in J.
inline Composition composition_of(SimpleRootSet subset, Rank rank) {
  subset.validate(rank);
  Composition c;
  int run = 1;
  for (int k = 1; k <= rank.n(); ++k) {
    if (subset.contains(k)) {
      ++run;
    } else {
      c.parts.push_back(run);
      run = 1;
    }
  }
  c.parts.push_back(run);
  return c;
}

/// Inverse of composition_of.
inline SimpleRootSet subset_of(const Composition& c, Rank rank) {
  if (c.total() != rank.points()) {
    throw InvalidPartition("composition " + to_string(c) + " does not sum to " +
                           std::to_string(rank.points()));
  }
  std::uint32_t mask = 0;
  int start = 1;
  for (int part : c.parts) {
    if (part < 1) throw InvalidPartition("composition parts must be positive");
    for (int k = start; k < start + part - 1; ++k) mask |= std::uint32_t{1} << (k - 1);
    start += part;
  }
  return SimpleRootSet::from_mask(mask);
}

inline Partition partition_of(SimpleRootSet subset, Rank rank) {
  return Partition::sorted_from(composition_of(subset, rank).parts);
}

inline Partition cycle_type(const Permutation& w) {
  std::vector<int> lengths;
  std::uint32_t seen = 0;
  for (int i = 1; i <= w.points(); ++i) {
    if (seen >> i & 1U) continue;
    int len = 0;
    for (int j = i; !(seen >> j & 1U); j = w(j)) {
      seen |= 1U << j;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::sorted_from(std::move(lengths));
}

/// All partitions of m in reverse-lexicographic order.
inline std::vector<Partition> enumerate_partitions(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, m, m);
  return out;
}

inline std::vector<Partition> enumerate_partitions(Rank rank) {
  return enumerate_partitions(rank.points());
}

// ---------------------------------------------------------------------------
// Conjugacy of subsets

/// Type-A criterion: J ~ K iff the sorted block sizes agree.
inline bool are_conjugate(SimpleRootSet a, SimpleRootSet b, Rank rank) {
  return partition_of(a, rank) == partition_of(b, rank);
}

/// Lexicographically least w with w(J) = K, by exhaustive scan of S_{n+1}.
inline std::optional<Permutation> conjugating_witness(SimpleRootSet from, SimpleRootSet to,
                                                      Rank rank) {
  from.validate(rank);
  to.validate(rank);
  require_brute_force(rank);
  if (from.size() != to.size()) return std::nullopt;
  Permutation w = Permutation::identity(rank);
  do {
    if (act_on_subset(w, from) == to) return w;
  } while (w.next());
  return std::nullopt;
}

}  // namespace descent_lab
