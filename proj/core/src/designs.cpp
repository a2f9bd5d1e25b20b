#include "metdim/designs.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "metdim/error.hpp"
#include "metdim/field.hpp"

namespace metdim {

std::optional<int> IncidenceStructure::uniform_block_size() const {
  if (blocks.empty()) return std::nullopt;
  const int k = blocks.front().k();
  for (const KSubset& b : blocks)
    if (b.k() != k) return std::nullopt;
  return k;
}

IncidenceStructure IncidenceStructure::dual() const {
  const int nb = static_cast<int>(blocks.size());
  if (nb > kMaxGroundSet) throw ParameterError("dual needs at most " + std::to_string(kMaxGroundSet) + " blocks");
  std::vector<std::vector<int>> on(n_points + 1);
  for (int i = 0; i < nb; ++i)
    for (int p : blocks[i].elements()) on[p].push_back(i + 1);
  IncidenceStructure d;
  d.n_points = nb;
  for (int p = 1; p <= n_points; ++p) d.blocks.push_back(KSubset::from_elements(nb, on[p]));
  return d;
}

// ---------------------------------------------------------------------------
// Planes

IncidenceStructure projective_plane(int q) {
  const GaloisField f(q);
  const int n = q * q + q + 1;
  if (n > kMaxGroundSet)
    throw ParameterError("PG(2," + std::to_string(q) + ") has " + std::to_string(n) + " points, above " +
                         std::to_string(kMaxGroundSet));
  std::vector<std::array<int, 3>> vecs;
  for (int code = 1; code < q * q * q; ++code) {
    const std::array<int, 3> v{code / (q * q), (code / q) % q, code % q};
    const int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
    if (lead == 1) vecs.push_back(v);
  }
  IncidenceStructure ic;
  ic.n_points = n;
  for (const auto& line : vecs) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i) {
      const auto& x = vecs[i];
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(line[c], x[c]));
      if (dot == 0) pts.push_back(i + 1);
    }
    ic.blocks.push_back(KSubset::from_elements(n, pts));
  }
  return ic;
}

IncidenceStructure affine_plane(int q) {
  const GaloisField f(q);
  const int n = q * q;
  if (n > kMaxGroundSet)
    throw ParameterError("AG(2," + std::to_string(q) + ") has " + std::to_string(n) + " points, above " +
                         std::to_string(kMaxGroundSet));
  auto point = [q](int x, int y) { return x * q + y + 1; };
  IncidenceStructure ic;
  ic.n_points = n;
  std::vector<int> pts(q);
  for (int m = 0; m < q; ++m) {
    for (int c = 0; c < q; ++c) {
      for (int x = 0; x < q; ++x) pts[x] = point(x, f.add(f.mul(m, x), c));
      ic.blocks.push_back(KSubset::from_elements(n, pts));
    }
  }
  for (int c = 0; c < q; ++c) {
    for (int y = 0; y < q; ++y) pts[y] = point(c, y);
    ic.blocks.push_back(KSubset::from_elements(n, pts));
  }
  return ic;
}

// ---------------------------------------------------------------------------
// Hadamard matrices

namespace {

constexpr int kMaxPrimePaley = 1019;

/// Quadratic character on GF(q), for Paley cores.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(int q) : q_(q) {
    if (q <= GaloisField::kMaxOrder) field_.emplace(q);
    square_.assign(q, false);
    for (int x = 1; x < q; ++x) square_[mul(x, x)] = true;
  }
  int sub(int a, int b) const { return field_ ? field_->sub(a, b) : ((a - b) % q_ + q_) % q_; }
  int chi(int a) const { return a == 0 ? 0 : (square_[a] ? 1 : -1); }

 private:
  int mul(int a, int b) const { return field_ ? field_->mul(a, b) : static_cast<int>((1LL * a * b) % q_); }
  int q_;
  std::optional<GaloisField> field_;
  std::vector<bool> square_;
};

bool paley_applicable(int order) {
  const int q = order - 1;
  if (q < 3 || q % 4 != 3) return false;
  if (q <= GaloisField::kMaxOrder) return prime_power(q).first != 0;
  return q <= kMaxPrimePaley && is_prime(q);
}

SignMatrix paley(int order) {
  const int q = order - 1;
  const QuadraticCharacter chi(q);
  SignMatrix h(order, std::vector<int>(order, 0));
  for (int j = 1; j < order; ++j) {
    h[0][j] = 1;
    h[j][0] = -1;
  }
  for (int i = 1; i < order; ++i)
    for (int j = 1; j < order; ++j) h[i][j] = chi.chi(chi.sub(i - 1, j - 1));
  for (int i = 0; i < order; ++i) h[i][i] += 1;
  return h;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  SignMatrix out(na * nb, std::vector<int>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c) out[i * nb + r][j * nb + c] = a[i][j] * b[r][c];
  return out;
}

void normalise(SignMatrix& h) {
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i)
    if (h[i][0] < 0)
      for (auto& x : h[i]) x = -x;
  for (std::size_t j = 0; j < n; ++j)
    if (h[0][j] < 0)
      for (std::size_t i = 0; i < n; ++i) h[i][j] = -h[i][j];
}

std::optional<SignMatrix> build_hadamard(int order) {
  if (order == 1) return SignMatrix{{1}};
  if (order == 2) return SignMatrix{{1, 1}, {1, -1}};
  if (order < 1 || (order % 4) != 0) return std::nullopt;
  if (paley_applicable(order)) return paley(order);
  if (auto half = build_hadamard(order / 2)) return kronecker(SignMatrix{{1, 1}, {1, -1}}, *half);
  for (int a = 4; a * a <= order; a += 4) {
    if (order % a != 0) continue;
    auto left = build_hadamard(a);
    auto right = left ? build_hadamard(order / a) : std::nullopt;
    if (left && right) return kronecker(*left, *right);
  }
  return std::nullopt;
}

}  // namespace

bool hadamard_constructible(int order) { return build_hadamard(order).has_value(); }

SignMatrix hadamard_matrix(int order) {
  auto h = build_hadamard(order);
  if (!h)
    throw ParameterError("Hadamard order " + std::to_string(order) +
                         " is unsupported (not reachable by Sylvester doubling, Paley I or Kronecker products)");
  normalise(*h);
  return *h;
}

bool is_hadamard(const SignMatrix& h) {
  const std::size_t n = h.size();
  for (const auto& row : h) {
    if (row.size() != n) return false;
    for (int x : row)
      if (x != 1 && x != -1) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += h[i][c] * h[j][c];
      if (dot != (i == j ? static_cast<long long>(n) : 0)) return false;
    }
  }
  return true;
}

IncidenceStructure hadamard_design(int m) {
  if (m < 1) throw ParameterError("Hadamard design needs m >= 1");
  const SignMatrix h = hadamard_matrix(4 * m);
  const int n = 4 * m - 1;
  if (n > kMaxGroundSet) throw ParameterError("Hadamard design on " + std::to_string(n) + " points is too large");
  IncidenceStructure ic;
  ic.n_points = n;
  std::vector<int> pts;
  for (int i = 1; i <= n; ++i) {
    pts.clear();
    for (int j = 1; j <= n; ++j)
      if (h[i][j] == 1) pts.push_back(j);
    ic.blocks.push_back(KSubset::from_elements(n, pts));
  }
  return ic;
}

// ---------------------------------------------------------------------------
// Steiner triple systems

IncidenceStructure steiner_triple_system(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3))
    throw ParameterError("STS(" + std::to_string(n) + ") needs n >= 7 and n ≡ 1,3 (mod 6)");
  if (n > kMaxGroundSet) throw ParameterError("STS order above " + std::to_string(kMaxGroundSet));
  IncidenceStructure ic;
  ic.n_points = n;
  auto add = [&](int a, int b, int c) { ic.blocks.push_back(KSubset::from_elements(n, {a, b, c})); };

  if (n % 6 == 3) {
    // Bose: Z_v x Z_3 with v = 2t+1 and the idempotent quasigroup x∘y = (x+y)/2.
    const int t = (n - 3) / 6;
    const int v = 2 * t + 1;
    auto pt = [v](int x, int i) { return i * v + x + 1; };
    auto op = [v, t](int x, int y) { return ((x + y) * (t + 1)) % v; };
    for (int x = 0; x < v; ++x) add(pt(x, 0), pt(x, 1), pt(x, 2));
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) add(pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3));
  } else {
    // Skolem: {∞} ∪ Z_{2t} x Z_3 with a half-idempotent commutative quasigroup.
    const int t = (n - 1) / 6;
    const int v = 2 * t;
    const int inf = n;
    auto pt = [v](int x, int i) { return i * v + x + 1; };
    auto op = [v, t](int x, int y) {
      const int s = (x + y) % v;
      return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
    };
    for (int x = 0; x < t; ++x) add(pt(x, 0), pt(x, 1), pt(x, 2));
    for (int x = 0; x < t; ++x)
      for (int i = 0; i < 3; ++i) add(inf, pt(x + t, i), pt(x, (i + 1) % 3));
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) add(pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3));
  }
  return ic;
}

// ---------------------------------------------------------------------------
// Validators

DesignCheck validate_t_design(const IncidenceStructure& ic, int t, int lambda) {
  const auto k = ic.uniform_block_size();
  if (!k) throw ParameterError("t-design validation needs uniform block sizes");
  DesignCheck out;
  const int n = ic.n_points;
  out.params = {t, n, *k, lambda, static_cast<int>(ic.blocks.size()), static_cast<int>(ic.blocks.size()) == n};
  out.block_count_identity =
      static_cast<std::uint64_t>(ic.blocks.size()) * binomial(*k, t) == static_cast<std::uint64_t>(lambda) * binomial(n, t);
  if (t < 1 || t > *k) {
    out.failure = "t must lie in [1, k]";
    return out;
  }
  std::vector<int> count(binomial(n, t), 0);
  for (const KSubset& blk : ic.blocks) {
    if (blk.n() != n) throw GroundSetMismatch("block over a different point set");
    const auto elems = blk.elements();
    for (const KSubset& sub : k_subsets_of(n, elems, t)) ++count[rank_colex(sub)];
  }
  for (std::size_t r = 0; r < count.size(); ++r) {
    if (count[r] != lambda) {
      out.failure = "t-subset {" + unrank_colex(n, t, r).to_string() + "} lies in " + std::to_string(count[r]) +
                    " blocks, expected " + std::to_string(lambda);
      return out;
    }
  }
  out.valid = true;
  return out;
}

PartialGeometryParams partial_geometry_params(int s, int t, int alpha) {
  PartialGeometryParams p{s, t, alpha, 0, 0};
  if (alpha <= 0) return p;
  const long long base = 1LL * s * t + alpha;
  if (((s + 1) * base) % alpha == 0) p.v = static_cast<int>(((s + 1) * base) / alpha);
  if (((t + 1) * base) % alpha == 0) p.b = static_cast<int>(((t + 1) * base) / alpha);
  return p;
}

GeometryCheck validate_partial_geometry(const IncidenceStructure& ic, int s, int t, int alpha) {
  GeometryCheck out;
  out.params = partial_geometry_params(s, t, alpha);
  auto fail = [&](int axiom, std::string detail) {
    out.valid = false;
    out.violated_axiom = axiom;
    out.detail = std::move(detail);
    return out;
  };
  const int n = ic.n_points;
  const auto& lines = ic.blocks;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].k() != s + 1)
      return fail(1, "line {" + lines[i].to_string() + "} has " + std::to_string(lines[i].k()) + " points");
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (intersection_size(lines[i], lines[j]) > 1)
        return fail(1, "lines {" + lines[i].to_string() + "} and {" + lines[j].to_string() + "} share two points");
  }
  std::vector<int> degree(n + 1, 0);
  std::vector<std::vector<std::uint8_t>> collinear(n + 1, std::vector<std::uint8_t>(n + 1, 0));
  for (const KSubset& line : lines) {
    const auto pts = line.elements();
    for (int p : pts) ++degree[p];
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        if (++collinear[pts[a]][pts[b]] > 1) return fail(2, "points share two lines");
        ++collinear[pts[b]][pts[a]];
      }
  }
  for (int p = 1; p <= n; ++p)
    if (degree[p] != t + 1)
      return fail(2, "point " + std::to_string(p) + " is on " + std::to_string(degree[p]) + " lines");
  for (const KSubset& line : lines) {
    const auto pts = line.elements();
    for (int p = 1; p <= n; ++p) {
      if (line.contains(p)) continue;
      int seen = 0;
      for (int r : pts) seen += collinear[p][r];
      if (seen != alpha)
        return fail(3, "point " + std::to_string(p) + " is collinear with " + std::to_string(seen) +
                           " points of line {" + line.to_string() + "}");
    }
  }
  out.valid = true;
  return out;
}

ResolvingCandidate geometry_lines_as_resolving_set(const IncidenceStructure& ic, int s, int t, int alpha) {
  if (t <= s)
    throw ParameterError("partial-geometry lines need t > s (got s = " + std::to_string(s) + ", t = " +
                         std::to_string(t) + "); projective planes of order q > 2 do not resolve K(q^2+q+1, q+1)");
  const GeometryCheck check = validate_partial_geometry(ic, s, t, alpha);
  if (!check.valid)
    throw ParameterError("not a pg(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(alpha) +
                         "): axiom " + std::to_string(*check.violated_axiom) + ": " + check.detail);
  return {GraphInstance::kneser(ic.n_points, s + 1), ic.blocks};
}

ResolvingCandidate steiner_blocks_as_resolving_set(const IncidenceStructure& ic) {
  const auto k = ic.uniform_block_size();
  if (!k || *k < 3) throw ParameterError("Steiner system S(k-1, k, n) needs uniform blocks with k >= 3");
  const int n = ic.n_points;
  const DesignCheck check = validate_t_design(ic, *k - 1, 1);
  if (!check.valid) throw ParameterError("not an S(" + std::to_string(*k - 1) + "," + std::to_string(*k) + "," +
                                         std::to_string(n) + "): " + check.failure);
  if (n < 4 * *k - 2)
    throw ParameterError("Steiner blocks resolve K(n, k) only for n >= 4k-2 (n = " + std::to_string(n) +
                         ", 4k-2 = " + std::to_string(4 * *k - 2) + ")");
  return {GraphInstance::kneser(n, *k), ic.blocks};
}

// ---------------------------------------------------------------------------
// File format

IncidenceStructure load_incidence_structure(std::istream& in, std::vector<int>* duplicate_lines) {
  std::string line;
  int line_no = 0;
  IncidenceStructure ic;
  int expected_blocks = -1;
  std::set<KSubset> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (expected_blocks < 0) {
      int points = 0;
      int blocks = 0;
      if (std::sscanf(line.c_str(), "# points=%d blocks=%d", &points, &blocks) != 2)
        throw ParseError("expected header '# points=<n> blocks=<b>'", line_no);
      if (points < 1 || points > kMaxGroundSet || blocks < 0)
        throw ParseError("header parameters out of range", line_no);
      ic.n_points = points;
      expected_blocks = blocks;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    KSubset blk;
    try {
      blk = KSubset::parse(ic.n_points, line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!seen.insert(blk).second && duplicate_lines) duplicate_lines->push_back(line_no);
    ic.blocks.push_back(blk);
  }
  if (expected_blocks < 0) throw ParseError("empty incidence-structure file", line_no + 1);
  if (static_cast<int>(ic.blocks.size()) != expected_blocks)
    throw ParseError("header declares " + std::to_string(expected_blocks) + " blocks, found " +
                         std::to_string(ic.blocks.size()),
                     line_no);
  return ic;
}

IncidenceStructure load_incidence_structure_file(const std::string& path, std::vector<int>* duplicate_lines) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return load_incidence_structure(in, duplicate_lines);
}

void save_incidence_structure(std::ostream& out, const IncidenceStructure& ic) {
  out << "# points=" << ic.n_points << " blocks=" << ic.blocks.size() << '\n';
  for (const KSubset& b : ic.blocks) out << b.to_string() << '\n';
}

}  // namespace metdim
