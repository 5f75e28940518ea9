#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duple/modular.hpp"
#include "duple/monomial.hpp"
#include "duple/polynomial.hpp"
#include "duple/sparse_rank.hpp"

namespace duple {

// Thrown when a theorem hypothesis (d >= 2, m >= 3, ...) is unmet; the CLI
// maps it to its own exit code so scripts can tell "hypothesis violated"
// apart from "computation failed".
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The pair (d, m): degree-d cyclic cover of the plane branched over a curve
// of degree m*d, realized as w^d + f(x,y,z) = 0 in P(1,1,1,m).
struct CoverDatum {
  CoverDatum(std::int64_t d, std::int64_t m) : d(d), m(m) {
    if (d < 2) throw std::invalid_argument("CoverDatum: d must be >= 2");
    if (m < 1) throw std::invalid_argument("CoverDatum: m must be >= 1");
  }
  std::int64_t branch_degree() const { return m * d; }
  // Order of the cyclic Galois group; recorded as metadata only.
  std::int64_t galois_order() const { return d; }
  WeightSystem weights() const { return WeightSystem(m); }

  std::int64_t d;
  std::int64_t m;
};

inline std::int64_t binom2(std::int64_t n) { return n >= 0 ? (n + 2) * (n + 1) / 2 : 0; }

// dim C[x,y,z]_k = C(k+2, 2).
inline std::int64_t dim_plane(std::int64_t k) { return k >= 0 ? binom2(k) : 0; }

// dim S_k for S = C[x,y,z,w], deg w = m.
inline std::int64_t dim_S(std::int64_t k, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dim_S: m must be >= 1");
  if (k < 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i * m <= k; ++i) total += dim_plane(k - i * m);
  return total;
}

// dim T_k for T = S/(w^{d-1}); as graded S'-module, T_k = sum of w^i S'_{k-im}
// over 0 <= i <= d-2.
inline std::int64_t dim_T(std::int64_t k, const CoverDatum& cover) {
  if (k < 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i <= cover.d - 2 && i * cover.m <= k; ++i) {
    total += dim_plane(k - i * cover.m);
  }
  return total;
}

// Coefficients 0..order of the Hilbert series of the Milnor algebra
//   (1 - t^{m(d-1)}) (1 - t^{md-1})^3 / ((1 - t)^3 (1 - t^m)),
// the complete-intersection closed form, valid whenever (w^{d-1}, grad f)
// is a regular sequence (true for general f).
inline std::vector<std::int64_t> milnor_series(const CoverDatum& cover, std::int64_t order) {
  if (order < 0) order = 0;
  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  auto mul_one_minus_t_pow = [&](std::int64_t a) {
    for (std::int64_t i = order; i >= a; --i) c[i] -= c[i - a];
  };
  mul_one_minus_t_pow(cover.m * (cover.d - 1));
  for (int rep = 0; rep < 3; ++rep) mul_one_minus_t_pow(cover.m * cover.d - 1);
  auto div_one_minus_t_pow = [&](std::int64_t a) {
    for (std::int64_t i = a; i <= order; ++i) c[i] += c[i - a];
  };
  div_one_minus_t_pow(1);
  div_one_minus_t_pow(1);
  div_one_minus_t_pow(1);
  div_one_minus_t_pow(cover.m);
  return c;
}

inline std::int64_t milnor_hilbert_series_coeff(std::int64_t k, const CoverDatum& cover) {
  if (k < 0) return 0;
  return milnor_series(cover, k).back();
}

// Branch curve data: f homogeneous of degree md in x,y,z, together with the
// generators (w^{d-1}, df/dx, df/dy, df/dz) of the Milnor ideal, of weighted
// degrees (m(d-1), md-1, md-1, md-1).
struct MilnorData {
  static MilnorData make(const CoverDatum& cover, RationalPoly f) {
    if (f.is_zero()) throw std::invalid_argument("MilnorData: branch curve polynomial is zero");
    if (!f.uses_only_xyz()) {
      throw std::invalid_argument("MilnorData: branch curve must involve x, y, z only");
    }
    auto deg = f.homogeneous_degree(cover.weights());
    if (!deg || *deg != cover.branch_degree()) {
      throw std::invalid_argument("MilnorData: f must be homogeneous of degree m*d = " +
                                  std::to_string(cover.branch_degree()));
    }
    return MilnorData{cover, std::move(f)};
  }

  std::array<std::int64_t, 4> generator_degrees() const {
    std::int64_t md = cover.branch_degree();
    return {cover.m * (cover.d - 1), md - 1, md - 1, md - 1};
  }

  // (w^{d-1}, df/dx, df/dy, df/dz) in that order.
  std::vector<RationalPoly> ideal_generators() const {
    std::vector<RationalPoly> gens;
    Monomial wpow{{0, 0, 0, static_cast<std::int32_t>(cover.d - 1)}};
    gens.push_back(RationalPoly::monomial(wpow, Rational(1)));
    for (int var = 0; var < 3; ++var) gens.push_back(f.derivative(var));
    return gens;
  }

  CoverDatum cover;
  RationalPoly f;
};

// dim_S(k) minus the mod-p rank of the matrix whose columns are g * mu for
// g an ideal generator and mu a monomial of complementary degree, written
// in the monomial basis of S_k.  The result is an upper bound for the true
// dim R_k over Q; equality with the series coefficient certifies it.
inline std::int64_t graded_quotient_dim(const WeightSystem& ws,
                                        const std::vector<std::pair<RationalPoly, std::int64_t>>& gens,
                                        std::int64_t k, std::uint64_t p) {
  require_field_prime(p);
  if (k < 0) return 0;
  auto basis = monomials_of_degree(ws, k);
  std::map<Monomial, std::int32_t, GrlexGreater> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<std::int32_t>(i));

  RankMatrix mat;
  mat.rows = static_cast<std::int64_t>(basis.size());
  mat.prime = p;
  std::int64_t col = 0;
  for (const auto& [g, deg_g] : gens) {
    std::vector<std::pair<Monomial, std::uint32_t>> reduced;
    for (const auto& [mono, c] : g.terms()) reduced.emplace_back(mono, reduce_mod(c, p));
    for (const auto& mu : monomials_of_degree(ws, k - deg_g)) {
      for (const auto& [mono, c] : reduced) {
        if (c != 0) mat.add(index.at(mono * mu), col, c);
      }
      ++col;
    }
  }
  mat.cols = col;
  std::size_t rank = (col == 0) ? 0 : rank_mod_p(mat);
  return static_cast<std::int64_t>(basis.size()) - static_cast<std::int64_t>(rank);
}

inline std::int64_t dim_R(std::int64_t k, const MilnorData& md, std::uint64_t p) {
  std::vector<std::pair<RationalPoly, std::int64_t>> gens;
  auto degrees = md.generator_degrees();
  auto polys = md.ideal_generators();
  for (std::size_t i = 0; i < polys.size(); ++i) gens.emplace_back(polys[i], degrees[i]);
  return graded_quotient_dim(md.cover.weights(), gens, k, p);
}

// ---------------------------------------------------------------------
// Hodge numbers

struct HodgeTriple {
  std::int64_t h20 = 0;       // dim R_{dm-m-3}
  std::int64_t h11_prim = 0;  // dim R_{2dm-m-3}
  std::int64_t h1_theta0 = 0; // dim R_{dm}
  friend bool operator==(const HodgeTriple&, const HodgeTriple&) = default;
};

struct HodgeReport {
  CoverDatum cover;
  std::array<std::int64_t, 3> degrees;  // (dm-m-3, 2dm-m-3, dm)
  HodgeTriple values;                   // linear-algebra route when f given, else series
  HodgeTriple series_oracle;            // complete-intersection series coefficients
  std::int64_t pushforward_pg = 0;      // independent oracle for h20
  std::int64_t h11_full = 0;            // primitive part + 1 (the polarization class)
  bool used_f = false;
  bool consistent = false;              // values == series oracle and h20 == pushforward
  bool negative_degree = false;         // some graded degree < 0; those pieces are 0, flagged
};

// h0(P^2, (dm-m-3-im)H) summed over the eigensheaf twists 0 <= i <= d-1:
// the projection-formula value of p_g, an oracle independent of the ring.
inline std::int64_t pushforward_pg(const CoverDatum& cover) {
  std::int64_t k = cover.branch_degree() - cover.m - 3;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i <= cover.d - 1; ++i) total += dim_plane(k - i * cover.m);
  return total;
}

namespace detail {
inline HodgeReport hodge_common(const CoverDatum& cover) {
  HodgeReport rep{cover, {}, {}, {}, 0, 0, false, false, false};
  std::int64_t dm = cover.branch_degree();
  rep.degrees = {dm - cover.m - 3, 2 * dm - cover.m - 3, dm};
  rep.negative_degree = rep.degrees[0] < 0 || rep.degrees[1] < 0;
  auto series = milnor_series(cover, std::max<std::int64_t>(rep.degrees[1], rep.degrees[2]));
  auto coeff = [&](std::int64_t k) { return k >= 0 ? series[static_cast<std::size_t>(k)] : 0; };
  rep.series_oracle = HodgeTriple{coeff(rep.degrees[0]), coeff(rep.degrees[1]), coeff(rep.degrees[2])};
  rep.pushforward_pg = pushforward_pg(cover);
  return rep;
}
}  // namespace detail

// Series route: the general-f Hodge numbers of X_{d,m}.
inline HodgeReport hodge_numbers(const CoverDatum& cover, std::uint64_t p = kDefaultPrime) {
  (void)p;
  HodgeReport rep = detail::hodge_common(cover);
  rep.values = rep.series_oracle;
  rep.h11_full = rep.values.h11_prim + 1;
  rep.consistent = rep.values.h20 == rep.pushforward_pg;
  return rep;
}

// Linear-algebra route for a concrete branch curve.
inline HodgeReport hodge_numbers(const MilnorData& md, std::uint64_t p = kDefaultPrime) {
  HodgeReport rep = detail::hodge_common(md.cover);
  rep.used_f = true;
  rep.values = HodgeTriple{dim_R(rep.degrees[0], md, p), dim_R(rep.degrees[1], md, p),
                           dim_R(rep.degrees[2], md, p)};
  rep.h11_full = rep.values.h11_prim + 1;
  rep.consistent = rep.values == rep.series_oracle && rep.values.h20 == rep.pushforward_pg;
  return rep;
}

// ---------------------------------------------------------------------
// Branch curves

// x^{md} + y^{md} + z^{md}; its partials are a regular sequence for every
// (d, m), so the series certificate always validates this choice.
inline RationalPoly fermat_branch_curve(const CoverDatum& cover) {
  RationalPoly f;
  auto n = static_cast<std::int32_t>(cover.branch_degree());
  f.add_term(Monomial{{n, 0, 0, 0}}, Rational(1));
  f.add_term(Monomial{{0, n, 0, 0}}, Rational(1));
  f.add_term(Monomial{{0, 0, n, 0}}, Rational(1));
  return f;
}

// Dense degree-md curve with coefficients uniform in {-10,...,10} \ {0}.
// mt19937_64 is pinned by the standard and the bounded draw below avoids
// std::uniform_int_distribution, whose output is implementation-defined;
// the same seed therefore produces the same curve on every platform.
inline RationalPoly random_branch_curve(const CoverDatum& cover, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RationalPoly f;
  for (const auto& mono : plane_monomials_of_degree(cover.branch_degree())) {
    auto draw = static_cast<std::int64_t>(gen() % 20);  // 0..19
    std::int64_t c = draw < 10 ? draw - 10 : draw - 9;  // -10..-1, 1..10
    f.add_term(mono, Rational(c));
  }
  return f;
}

// ---------------------------------------------------------------------
// Smoothness heuristic
//
// X is smooth iff the branch curve B = {f = 0} is smooth.  Exact
// certification is out of scope; instead we hunt for witnesses of a
// singularity in cheap places and report the search outcome.
//   * common zeros of (f, f_x, f_y, f_z) among P^2(F_p)-points for every
//     prime p <= 101.  A singular point of B defined over Q reduces to one
//     mod every prime, so "hits at every large tested prime" is the red
//     flag; isolated hits at tiny primes are reduction noise and recorded
//     but not penalized.
//   * restrictions of f to random rational lines, which must be squarefree;
//     a repeated factor of f fails this for every line.

struct SmoothnessReport {
  bool pass = false;
  std::string verdict;  // "heuristic-pass" | "fail"
  std::vector<std::pair<std::uint32_t, std::int64_t>> fp_singular_counts;
  int line_probes = 0;
  int line_failures = 0;
};

namespace detail {

inline std::int64_t count_singular_points_mod_p(const RationalPoly& f, std::uint32_t p) {
  std::vector<RationalPoly> polys{f, f.derivative(0), f.derivative(1), f.derivative(2)};
  struct ReducedPoly {
    std::vector<std::array<std::int32_t, 3>> exps;
    std::vector<std::uint32_t> coeffs;
  };
  std::vector<ReducedPoly> reduced;
  std::int64_t max_deg = 0;
  for (const auto& poly : polys) {
    ReducedPoly rp;
    for (const auto& [mono, c] : poly.terms()) {
      std::uint32_t cv = reduce_mod(c, p);
      if (cv == 0) continue;
      rp.exps.push_back({mono.e[0], mono.e[1], mono.e[2]});
      rp.coeffs.push_back(cv);
      max_deg = std::max(max_deg, mono.total_degree());
    }
    reduced.push_back(std::move(rp));
  }
  std::vector<std::uint32_t> powx(max_deg + 1), powy(max_deg + 1), powz(max_deg + 1);
  auto fill_pows = [&](std::vector<std::uint32_t>& pw, std::uint32_t v) {
    pw[0] = 1 % p;
    for (std::int64_t i = 1; i <= max_deg; ++i) pw[i] = mul_mod(pw[i - 1], v, p);
  };
  std::int64_t hits = 0;
  auto probe = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    fill_pows(powx, x);
    fill_pows(powy, y);
    fill_pows(powz, z);
    for (const auto& rp : reduced) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < rp.coeffs.size(); ++t) {
        std::uint64_t term = mul_mod(rp.coeffs[t], powx[rp.exps[t][0]], p);
        term = mul_mod(static_cast<std::uint32_t>(term), powy[rp.exps[t][1]], p);
        term = mul_mod(static_cast<std::uint32_t>(term), powz[rp.exps[t][2]], p);
        acc = (acc + term) % p;
      }
      if (acc != 0) return;
    }
    ++hits;
  };
  // P^2(F_p) = {(1:y:z)} u {(0:1:z)} u {(0:0:1)}
  for (std::uint32_t y = 0; y < p; ++y)
    for (std::uint32_t z = 0; z < p; ++z) probe(1, y, z);
  for (std::uint32_t z = 0; z < p; ++z) probe(0, 1, z);
  probe(0, 0, 1);
  return hits;
}

// gcd-degree check of (g, g') for g = f restricted to a random line,
// computed over F_p with p large; nonconstant gcd flags a repeated factor.
inline bool line_restriction_squarefree(const RationalPoly& f, std::mt19937_64& gen,
                                        std::uint64_t p) {
  std::int64_t deg = 0;
  for (const auto& [mono, c] : f.terms()) deg = std::max(deg, mono.total_degree());
  // line (x,y,z) = A + t*B with small random integer A, B
  std::array<std::int64_t, 3> A{}, B{};
  for (int i = 0; i < 3; ++i) {
    A[i] = static_cast<std::int64_t>(gen() % 1000) + 1;
    B[i] = static_cast<std::int64_t>(gen() % 1000) + 1;
  }
  std::vector<std::uint32_t> g(static_cast<std::size_t>(deg) + 1, 0);
  // binomial expansion of (A_i + t B_i)^e accumulated per term
  auto add_term_expansion = [&](std::uint32_t coeff, const Monomial& mono) {
    std::vector<std::uint32_t> term{coeff};
    for (int var = 0; var < 3; ++var) {
      std::uint32_t a = static_cast<std::uint32_t>(A[var] % static_cast<std::int64_t>(p));
      std::uint32_t b = static_cast<std::uint32_t>(B[var] % static_cast<std::int64_t>(p));
      for (std::int32_t rep = 0; rep < mono.e[var]; ++rep) {
        std::vector<std::uint32_t> next(term.size() + 1, 0);
        for (std::size_t i = 0; i < term.size(); ++i) {
          next[i] = add_mod(next[i], mul_mod(term[i], a, p), p);
          next[i + 1] = add_mod(next[i + 1], mul_mod(term[i], b, p), p);
        }
        term = std::move(next);
      }
    }
    for (std::size_t i = 0; i < term.size(); ++i) g[i] = add_mod(g[i], term[i], p);
  };
  for (const auto& [mono, c] : f.terms()) add_term_expansion(reduce_mod(c, p), mono);

  auto trim = [](std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  std::vector<std::uint32_t> dg(g.size() > 1 ? g.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    dg[i - 1] = mul_mod(g[i], static_cast<std::uint32_t>(i % p), p);
  }
  trim(g);
  trim(dg);
  if (g.empty()) return false;  // restriction identically zero: line inside the curve
  while (!dg.empty()) {
    // g mod dg
    std::vector<std::uint32_t> r = g;
    std::uint32_t lead_inv = inv_mod(dg.back(), p);
    while (r.size() >= dg.size()) {
      std::uint32_t q = mul_mod(r.back(), lead_inv, p);
      std::size_t shift = r.size() - dg.size();
      for (std::size_t i = 0; i < dg.size(); ++i) {
        r[shift + i] = sub_mod(r[shift + i], mul_mod(q, dg[i], p), p);
      }
      trim(r);
      if (r.empty()) break;
    }
    g = std::move(dg);
    dg = std::move(r);
  }
  return g.size() == 1;  // constant gcd
}

}  // namespace detail

inline SmoothnessReport smoothness_heuristic(const MilnorData& md, std::uint64_t seed = 1) {
  static const std::uint32_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  SmoothnessReport rep;
  bool all_large_primes_hit = true;
  for (std::uint32_t p : kPrimes) {
    std::int64_t hits;
    try {
      hits = detail::count_singular_points_mod_p(md.f, p);
    } catch (const std::domain_error&) {
      continue;  // coefficient denominator divisible by p; skip this prime
    }
    rep.fp_singular_counts.emplace_back(p, hits);
    if (p >= 61 && hits == 0) all_large_primes_hit = false;
  }
  std::mt19937_64 gen(seed ^ 0x51e55ull);
  for (int probe = 0; probe < 4; ++probe) {
    ++rep.line_probes;
    if (!detail::line_restriction_squarefree(md.f, gen, kDefaultPrime)) ++rep.line_failures;
  }
  rep.pass = !all_large_primes_hit && rep.line_failures == 0;
  rep.verdict = rep.pass ? "heuristic-pass" : "fail";
  return rep;
}

}  // namespace duple
