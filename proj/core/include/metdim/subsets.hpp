#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metdim {

/// Largest ground set [n] a KSubset can live in.
inline constexpr int kMaxGroundSet = 256;

/// C(n, k) for 0 <= n <= kMaxGroundSet. Saturates at UINT64_MAX when the true
/// value does not fit; callers that need an exact count must check
/// `binomial_fits`.
std::uint64_t binomial(int n, int k);
bool binomial_fits(int n, int k);

/// A subset of the ground set [n] = {1, ..., n}, stored as a bit vector where
/// bit i - 1 holds element i. Ordering is colexicographic.
class KSubset {
 public:
  using Words = std::array<std::uint64_t, kMaxGroundSet / 64>;

  KSubset() = default;

  /// Throws ParameterError on out-of-range or repeated elements.
  static KSubset from_elements(int n, std::span<const int> elements);
  static KSubset from_elements(int n, std::initializer_list<int> elements);

  /// Parses the text form: sorted or unsorted whitespace-separated 1-based
  /// integers. Throws ParseError.
  static KSubset parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  bool contains(int element) const noexcept;
  bool empty() const noexcept { return k_ == 0; }

  /// Sorted 1-based elements.
  std::vector<int> elements() const;
  const Words& words() const noexcept { return bits_; }

  /// Canonical text form, e.g. "1 2 5 7".
  std::string to_string() const;

  KSubset with(int element) const;
  KSubset without(int element) const;

  friend bool operator==(const KSubset& a, const KSubset& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  /// Colexicographic: the set holding the largest element of the symmetric
  /// difference is the larger one. Subsets of different sizes compare the same
  /// way, which keeps the order total.
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept;

 private:
  friend class ColexCursor;

  void set_bit(int element) noexcept {
    const int bit = element - 1;
    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  }
  void clear_bit(int element) noexcept {
    const int bit = element - 1;
    bits_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
  }

  Words bits_{};
  std::uint16_t n_ = 0;
  std::uint16_t k_ = 0;
};

/// |A ∩ B|. Throws GroundSetMismatch when A.n() != B.n().
int intersection_size(const KSubset& a, const KSubset& b);

/// Same as intersection_size without the ground-set check; for inner loops.
inline int intersection_size_unchecked(const KSubset& a, const KSubset& b) noexcept {
  int count = 0;
  const auto& x = a.words();
  const auto& y = b.words();
  for (std::size_t i = 0; i < x.size(); ++i) count += __builtin_popcountll(x[i] & y[i]);
  return count;
}

inline bool disjoint_unchecked(const KSubset& a, const KSubset& b) noexcept {
  const auto& x = a.words();
  const auto& y = b.words();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc |= x[i] & y[i];
  return acc == 0;
}

/// Walks the k-subsets of [n] in colex order, starting from an arbitrary rank.
/// Restartable and cheap to copy, so rank ranges can be handed to workers.
class ColexCursor {
 public:
  ColexCursor(int n, int k);
  ColexCursor(int n, int k, std::uint64_t start_rank);

  const KSubset& current() const noexcept { return current_; }
  std::uint64_t rank() const noexcept { return rank_; }
  bool done() const noexcept { return done_; }

  /// Advances to the colex successor; returns false past the last subset.
  bool next();

 private:
  void load(std::uint64_t rank);

  int n_;
  int k_;
  std::vector<int> elems_;  // sorted, 1-based
  KSubset current_;
  std::uint64_t rank_ = 0;
  std::uint64_t total_ = 0;
  bool done_ = false;
};

/// All k-subsets of [n] in colex order. Throws ParameterError when k > n,
/// n > kMaxGroundSet, or the count does not fit in memory addressing.
std::vector<KSubset> enumerate_k_subsets(int n, int k);

/// Subsets of `ground` (sorted 1-based elements) of size k, in colex order of
/// their positions within `ground`, as subsets of [n].
std::vector<KSubset> k_subsets_of(int n, std::span<const int> ground, int k);

std::uint64_t rank_colex(const KSubset& a);
/// Throws ParameterError when index >= C(n, k).
KSubset unrank_colex(int n, int k, std::uint64_t index);

/// An ordered family of subsets of [n]; parts are disjoint unless
/// `overlapping` is set.
struct GroundSetPartition {
  int n = 0;
  std::vector<std::vector<int>> parts;
  bool overlapping = false;

  /// Pairwise disjointness (ignored when overlapping) and, when
  /// `must_cover`, that the union is [n].
  bool well_formed(bool must_cover) const;
};

}  // namespace metdim
