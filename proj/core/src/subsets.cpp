#include "metdim/subsets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

#include "metdim/error.hpp"

namespace metdim {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

struct BinomialTable {
  std::vector<std::uint64_t> values;

  BinomialTable() : values((kMaxGroundSet + 1) * (kMaxGroundSet + 1), 0) {
    for (int n = 0; n <= kMaxGroundSet; ++n) {
      at(n, 0) = 1;
      for (int k = 1; k <= n; ++k) {
        const std::uint64_t a = at(n - 1, k - 1);
        const std::uint64_t b = k <= n - 1 ? at(n - 1, k) : 0;
        at(n, k) = (a > kSaturated - b) ? kSaturated : a + b;
      }
    }
  }

  std::uint64_t& at(int n, int k) { return values[n * (kMaxGroundSet + 1) + k]; }
  std::uint64_t at(int n, int k) const { return values[n * (kMaxGroundSet + 1) + k]; }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

void check_ground(int n) {
  if (n < 0 || n > kMaxGroundSet)
    throw ParameterError("ground-set size " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxGroundSet) + "]");
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  check_ground(n);
  return table().at(n, k);
}

bool binomial_fits(int n, int k) { return binomial(n, k) != kSaturated; }

KSubset KSubset::from_elements(int n, std::span<const int> elements) {
  check_ground(n);
  KSubset s;
  s.n_ = static_cast<std::uint16_t>(n);
  for (int e : elements) {
    if (e < 1 || e > n)
      throw ParameterError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    if (s.contains(e)) throw ParameterError("repeated element " + std::to_string(e));
    s.set_bit(e);
    ++s.k_;
  }
  return s;
}

KSubset KSubset::from_elements(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

KSubset KSubset::parse(int n, std::string_view text) {
  std::vector<int> elems;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw ParseError("expected an integer, got '" + std::string(text.substr(i)) + "'", 0);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r')
      throw ParseError("unexpected character in subset '" + std::string(text) + "'", 0);
    elems.push_back(value);
  }
  try {
    return from_elements(n, elems);
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), 0);
  }
}

bool KSubset::contains(int element) const noexcept {
  if (element < 1 || element > n_) return false;
  const int bit = element - 1;
  return (bits_[bit >> 6] >> (bit & 63)) & 1U;
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(k_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(word) + 1);
      word &= word - 1;
    }
  }
  return out;
}

std::string KSubset::to_string() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(e);
  }
  return out;
}

KSubset KSubset::with(int element) const {
  if (element < 1 || element > n_) throw ParameterError("element " + std::to_string(element) + " out of range");
  KSubset s = *this;
  if (!s.contains(element)) {
    s.set_bit(element);
    ++s.k_;
  }
  return s;
}

KSubset KSubset::without(int element) const {
  KSubset s = *this;
  if (s.contains(element)) {
    s.clear_bit(element);
    --s.k_;
  }
  return s;
}

std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t w = a.bits_.size(); w-- > 0;) {
    const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
    if (diff != 0) {
      const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(diff));
      return (a.bits_[w] & top) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

int intersection_size(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n())
    throw GroundSetMismatch("subsets over [" + std::to_string(a.n()) + "] and [" + std::to_string(b.n()) + "]");
  return intersection_size_unchecked(a, b);
}

ColexCursor::ColexCursor(int n, int k) : ColexCursor(n, k, 0) {}

ColexCursor::ColexCursor(int n, int k, std::uint64_t start_rank) : n_(n), k_(k) {
  check_ground(n);
  if (k < 0 || k > n)
    throw ParameterError("subset size " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  if (!binomial_fits(n, k)) throw ParameterError("C(n, k) does not fit in 64 bits");
  total_ = binomial(n, k);
  if (start_rank >= total_) {
    done_ = true;
    rank_ = total_;
    return;
  }
  load(start_rank);
}

void ColexCursor::load(std::uint64_t rank) {
  current_ = unrank_colex(n_, k_, rank);
  elems_ = current_.elements();
  rank_ = rank;
}

bool ColexCursor::next() {
  if (done_) return false;
  if (rank_ + 1 >= total_) {
    done_ = true;
    rank_ = total_;
    return false;
  }
  // Smallest j whose element can move up by one without colliding.
  int j = 0;
  while (j + 1 < k_ && elems_[j] + 1 == elems_[j + 1]) ++j;
  current_.clear_bit(elems_[j]);
  ++elems_[j];
  current_.set_bit(elems_[j]);
  for (int i = 0; i < j; ++i) {
    current_.clear_bit(elems_[i]);
  }
  for (int i = 0; i < j; ++i) {
    elems_[i] = i + 1;
    current_.set_bit(i + 1);
  }
  ++rank_;
  return true;
}

std::vector<KSubset> enumerate_k_subsets(int n, int k) {
  check_ground(n);
  if (k < 0 || k > n)
    throw ParameterError("subset size " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  if (!binomial_fits(n, k) || binomial(n, k) > (std::uint64_t{1} << 32))
    throw ParameterError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") too large to materialise");
  std::vector<KSubset> out;
  out.reserve(binomial(n, k));
  for (ColexCursor c(n, k); !c.done(); c.next()) out.push_back(c.current());
  return out;
}

std::vector<KSubset> k_subsets_of(int n, std::span<const int> ground, int k) {
  const int m = static_cast<int>(ground.size());
  std::vector<KSubset> out;
  if (k > m) return out;
  std::vector<int> picked(k);
  for (ColexCursor c(m, k); !c.done(); c.next()) {
    const auto positions = c.current().elements();
    for (int i = 0; i < k; ++i) picked[i] = ground[positions[i] - 1];
    out.push_back(KSubset::from_elements(n, picked));
  }
  return out;
}

std::uint64_t rank_colex(const KSubset& a) {
  std::uint64_t r = 0;
  int i = 1;
  for (int e : a.elements()) {
    r += binomial(e - 1, i);
    ++i;
  }
  return r;
}

KSubset unrank_colex(int n, int k, std::uint64_t index) {
  check_ground(n);
  if (k < 0 || k > n) throw ParameterError("subset size out of range");
  if (index >= binomial(n, k))
    throw ParameterError("rank " + std::to_string(index) + " outside [0, C(" + std::to_string(n) + ", " +
                         std::to_string(k) + "))");
  std::vector<int> elems(k);
  int top = n;
  for (int i = k; i >= 1; --i) {
    // Largest e (0-based) with C(e, i) <= index.
    int e = top - 1;
    while (binomial(e, i) > index) --e;
    index -= binomial(e, i);
    elems[i - 1] = e + 1;
    top = e;
  }
  return KSubset::from_elements(n, elems);
}

bool GroundSetPartition::well_formed(bool must_cover) const {
  std::vector<int> seen(n + 1, 0);
  for (const auto& part : parts) {
    for (int e : part) {
      if (e < 1 || e > n) return false;
      ++seen[e];
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (!overlapping && seen[e] > 1) return false;
    if (must_cover && seen[e] == 0) return false;
  }
  return true;
}

}  // namespace metdim
