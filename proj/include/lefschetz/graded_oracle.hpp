#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "bivar_poly.hpp"
#include "colon.hpp"
#include "matrix.hpp"

namespace lefschetz {

/// Incremental integer row-echelon basis; insert() reports whether the row
/// enlarged the span. Fraction-free, rows kept content-reduced.
class EchelonZ {
public:
  int rank() const { return static_cast<int>(rows_.size()); }

  bool insert(std::vector<BigInt> v) {
    for (const auto& [p, r] : rows_) {
      if (v[p] == 0) continue;
      BigInt g = boost::multiprecision::gcd(r[p], v[p]);
      BigInt a = v[p] / g;
      BigInt b = r[p] / g;
      for (size_t j = 0; j < v.size(); ++j) v[j] = b * v[j] - a * r[j];
      detail::divide_row_content(v);
    }
    size_t piv = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) { piv = j; break; }
    if (piv == v.size()) return false;
    rows_.emplace(piv, std::move(v));
    return true;
  }

private:
  std::map<size_t, std::vector<BigInt>> rows_;  // pivot column -> row
};

/// dim of the degree-deg piece of F[x,y]/(x^d1, y^d2).
inline long hilbert_function_ci2(int d1, int d2, int deg) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("hilbert_function_ci2: d < 1");
  if (deg < 0) return 0;
  int lo = std::max(0, deg - d2 + 1);
  int hi = std::min(d1 - 1, deg);
  return hi >= lo ? hi - lo + 1 : 0;
}

/// First degree where x(x+y)^a fails to be injective on F[x,y]/(x^d1,y^d2).
inline int injectivity_failure_degree(int d1, int d2, int a) {
  if (d1 > d2 || a < 1) throw std::invalid_argument("injectivity_failure_degree: bad params");
  int k = d2 - d1;
  if (a <= k) return d2 - a;
  return d2 - (a + k + 1) / 2;
}

/// Membership in the monomial ideal (x^d1, y^d2): every term divisible by
/// x^d1 or y^d2.
inline bool ideal_membership2(const BivarPoly& p, int d1, int d2) {
  for (const auto& [k, c] : p.terms())
    if (k.first < d1 && k.second < d2) return false;
  return true;
}

namespace detail {

// Degree-D coefficient vector over the monomial basis x^D, x^(D-1)y, ..., y^D.
inline std::vector<BigInt> poly_degree_vector(const BivarPoly& p, int D) {
  std::vector<BigInt> v(D + 1);
  for (const auto& [k, c] : p.terms()) {
    if (k.first + k.second != D) throw std::invalid_argument("poly_degree_vector: not homogeneous of degree D");
    v[k.second] = c;
  }
  return v;
}

// Span of the degree-D piece of the ideal generated by gens.
inline EchelonZ ideal_degree_span(const std::vector<BivarPoly>& gens, int D) {
  EchelonZ ech;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg < 0 || dg > D) continue;
    for (int alpha = 0; alpha <= D - dg; ++alpha) {
      BivarPoly m = BivarPoly::monomial(alpha, D - dg - alpha) * g;
      ech.insert(poly_degree_vector(m, D));
    }
  }
  return ech;
}

}  // namespace detail

/// Minimal homogeneous generators of (x^d1, y^d2) : (x+y)^a found by pure
/// linear algebra: degreewise kernels of the multiplication endomorphism on
/// F[x,y]/(x^d1, y^d2), lifted and pruned against lower-degree generators.
inline std::vector<BivarPoly> brute_colon2(int d1, int d2, int a) {
  if (d1 < 1 || d2 < 1 || a < 1) throw std::invalid_argument("brute_colon2: bad params");
  std::vector<BivarPoly> gens;
  const int maxdeg = d1 + d2;
  for (int D = 0; D <= maxdeg; ++D) {
    // Quotient-ring bases in degree D and D + a.
    std::vector<int> dom, cod;  // stored as x-exponents
    for (int i = std::max(0, D - d2 + 1); i <= std::min(d1 - 1, D); ++i) dom.push_back(i);
    std::map<int, size_t> cod_index;
    for (int i = std::max(0, D + a - d2 + 1); i <= std::min(d1 - 1, D + a); ++i) {
      cod_index.emplace(i, cod.size());
      cod.push_back(i);
    }
    std::vector<BivarPoly> candidates;
    if (!dom.empty()) {
      MatZ m(cod.size(), std::vector<BigInt>(dom.size()));
      for (size_t col = 0; col < dom.size(); ++col) {
        for (int j = 0; j <= a; ++j) {
          auto it = cod_index.find(dom[col] + a - j);
          if (it != cod_index.end()) m[it->second][col] = binom(a, j);
        }
      }
      MatZ mm = m.empty() ? MatZ{std::vector<BigInt>(dom.size())} : m;  // all-zero map still has full kernel
      for (const auto& vec : kernel_integer_basis(mm)) {
        BivarPoly p;
        for (size_t col = 0; col < dom.size(); ++col)
          p.add_term(dom[col], D - dom[col], vec[col]);
        candidates.push_back(std::move(p));
      }
    }
    // The colon ideal also contains (x^d1, y^d2) itself.
    if (D >= d1) candidates.push_back(BivarPoly::monomial(d1, D - d1));
    if (D >= d2) candidates.push_back(BivarPoly::monomial(D - d2, d2));

    EchelonZ span = detail::ideal_degree_span(gens, D);
    for (auto& c : candidates)
      if (span.insert(detail::poly_degree_vector(c, D))) gens.push_back(std::move(c));
  }
  return gens;
}

/// Membership of a homogeneous polynomial in the ideal generated by gens.
inline bool ideal_contains(const std::vector<BivarPoly>& gens, const BivarPoly& p) {
  if (p.is_zero()) return true;
  if (!p.homogeneous()) throw std::invalid_argument("ideal_contains: not homogeneous");
  int D = p.degree();
  EchelonZ span = detail::ideal_degree_span(gens, D);
  return !span.insert(detail::poly_degree_vector(p, D));
}

/// Ideal equality via mutual containment of generators. Cheaper than the
/// full graded comparison and just as conclusive.
inline bool same_ideal_by_generators(const std::vector<BivarPoly>& gens_a,
                                     const std::vector<BivarPoly>& gens_b) {
  for (const auto& g : gens_a)
    if (!ideal_contains(gens_b, g)) return false;
  for (const auto& g : gens_b)
    if (!ideal_contains(gens_a, g)) return false;
  return true;
}

/// First quotient degree where multiplication by (x+y)^a on
/// F[x,y]/(x^d1, y^d2) has a kernel, found by direct rank computation.
inline int brute_injectivity_failure_degree(int d1, int d2, int a) {
  if (d1 < 1 || d2 < 1 || a < 1) throw std::invalid_argument("brute_injectivity_failure_degree: bad params");
  for (int D = 0; D <= d1 + d2 - 2; ++D) {
    std::vector<int> dom;
    for (int i = std::max(0, D - d2 + 1); i <= std::min(d1 - 1, D); ++i) dom.push_back(i);
    if (dom.empty()) continue;
    std::map<int, size_t> cod_index;
    for (int i = std::max(0, D + a - d2 + 1); i <= std::min(d1 - 1, D + a); ++i)
      cod_index.emplace(i, cod_index.size());
    if (cod_index.size() < dom.size()) return D;
    MatZ m(cod_index.size(), std::vector<BigInt>(dom.size()));
    for (size_t col = 0; col < dom.size(); ++col)
      for (int j = 0; j <= a; ++j) {
        auto it = cod_index.find(dom[col] + a - j);
        if (it != cod_index.end()) m[it->second][col] = binom(a, j);
      }
    if (rank_exact(m) < static_cast<int>(dom.size())) return D;
  }
  throw std::logic_error("brute_injectivity_failure_degree: no kernel found");
}

/// Graded equality of the two ideals up to degree maxdeg, by mutual
/// containment of every degree piece.
inline bool ideals_equal_graded(const std::vector<BivarPoly>& gens_a,
                                const std::vector<BivarPoly>& gens_b, int maxdeg) {
  for (int D = 0; D <= maxdeg; ++D) {
    EchelonZ sa = detail::ideal_degree_span(gens_a, D);
    EchelonZ sb = detail::ideal_degree_span(gens_b, D);
    if (sa.rank() != sb.rank()) return false;
    EchelonZ joint = detail::ideal_degree_span(gens_a, D);
    for (const auto& g : gens_b) {
      int dg = g.degree();
      if (dg < 0 || dg > D) continue;
      for (int alpha = 0; alpha <= D - dg; ++alpha) {
        BivarPoly m = BivarPoly::monomial(alpha, D - dg - alpha) * g;
        if (joint.insert(detail::poly_degree_vector(m, D))) return false;
      }
    }
  }
  return true;
}

/// (x^d1, y^d2, z^d3) plus an optional mixed generator x^a1 y^a2 z^a3.
struct MonomialIdeal3 {
  int d1, d2, d3;
  bool has_mixed = false;
  int a1 = 0, a2 = 0, a3 = 0;

  void validate() const {
    if (d1 < 1 || d2 < 1 || d3 < 1)
      throw std::invalid_argument("MonomialIdeal3: not Artinian (need all pure powers)");
    if (has_mixed && (a1 < 1 || a2 < 1 || a3 < 1 || a1 >= d1 || a2 >= d2 || a3 >= d3))
      throw std::invalid_argument("MonomialIdeal3: mixed generator must satisfy 0 < a_i < d_i");
  }

  bool contains_monomial(int i, int j, int k) const {
    if (i >= d1 || j >= d2 || k >= d3) return true;
    return has_mixed && i >= a1 && j >= a2 && k >= a3;
  }
};

struct WlpDegreeRank {
  int degree;      // map goes from degree-1 to degree
  long dim_from, dim_to;
  long rank;
  bool maximal;
};

struct WlpReport {
  bool holds;
  std::vector<WlpDegreeRank> ranks;
};

/// Direct WLP decision: exact rank of multiplication by x+y+z between every
/// pair of consecutive graded pieces of F[x,y,z]/I.
inline WlpReport wlp_direct(const MonomialIdeal3& ideal) {
  ideal.validate();
  using Mono = std::array<int, 3>;
  auto basis = [&](int D) {
    std::vector<Mono> b;
    for (int i = 0; i <= D; ++i)
      for (int j = 0; j + i <= D; ++j) {
        int k = D - i - j;
        if (!ideal.contains_monomial(i, j, k)) b.push_back({i, j, k});
      }
    return b;
  };
  WlpReport report{true, {}};
  std::vector<Mono> from = basis(0);
  const int top = ideal.d1 + ideal.d2 + ideal.d3;
  for (int D = 1; D <= top; ++D) {
    std::vector<Mono> to = basis(D);
    if (from.empty() && to.empty()) break;
    long df = static_cast<long>(from.size()), dt = static_cast<long>(to.size());
    long rank = 0;
    if (df > 0 && dt > 0) {
      std::map<Mono, size_t> to_index;
      for (size_t r = 0; r < to.size(); ++r) to_index.emplace(to[r], r);
      MatZ m(to.size(), std::vector<BigInt>(from.size()));
      for (size_t col = 0; col < from.size(); ++col) {
        for (int v = 0; v < 3; ++v) {
          Mono t = from[col];
          ++t[v];
          auto it = to_index.find(t);
          if (it != to_index.end()) m[it->second][col] = 1;
        }
      }
      rank = rank_hybrid(m);
    }
    bool maximal = rank == std::min(df, dt);
    if (!maximal) report.holds = false;
    report.ranks.push_back({D, df, dt, rank, maximal});
    from = std::move(to);
  }
  return report;
}

}  // namespace lefschetz
