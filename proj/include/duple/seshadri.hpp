#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duple/milnor.hpp"
#include "duple/picard.hpp"
#include "duple/quadext.hpp"
#include "duple/rational.hpp"

namespace duple {

// A curve through the reference point, reduced to the numbers the bounds
// consume: L.C, mult_x(C), optionally its class multiple k (dC in |kL|)
// and its plane degree when it is a pullback.
struct CurveSample {
  std::int64_t L_dot_C = 0;
  std::int64_t mult = 0;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> plane_degree;
};

inline void validate_curve_sample(const CurveSample& c, std::int64_t d) {
  if (c.L_dot_C < 1) throw std::invalid_argument("CurveSample: L.C must be >= 1");
  if (c.mult < 1) throw std::invalid_argument("CurveSample: multiplicity must be >= 1");
  if (c.plane_degree && c.L_dot_C != d * *c.plane_degree) {
    throw std::invalid_argument("CurveSample: pullback must satisfy L.C = d * deg");
  }
}

// epsilon_{C,x} = (L.C) / mult_x(C).
inline Rational epsilon_ratio(const CurveSample& c) {
  if (c.mult < 1) throw std::invalid_argument("epsilon_ratio: multiplicity must be >= 1");
  return Rational(c.L_dot_C, c.mult);
}

// ratio < sqrt(d), exactly.  Rational ratios never tie with sqrt(d) for a
// non-square d.
inline bool is_submaximal(const Rational& ratio, std::int64_t d) {
  return quad_compare(QuadExt::rational(ratio, d), QuadExt::sqrt_of(d)) < 0;
}

// L^2 = d, derived as (degree of X) / (product of the weights) = md/m.
struct SelfIntersection {
  std::int64_t value = 0;
  std::string derivation;
};

inline SelfIntersection self_intersection(const CoverDatum& cover) {
  SelfIntersection s;
  s.value = cover.d;
  s.derivation = "L^2 = deg(X) / (1*1*1*m) = " + std::to_string(cover.branch_degree()) + "/" +
                 std::to_string(cover.m) + " = " + std::to_string(cover.d);
  return s;
}

// Degree bound for an irreducible submaximal curve through a very general
// point: L.C < L^2 / (sqrt(L^2) - eps), returned exactly in Q(sqrt(L^2))
// with the denominator rationalized.
inline QuadExt bauer_degree_bound(std::int64_t Lsq, const QuadExt& eps) {
  if (Lsq < 1) throw std::invalid_argument("bauer_degree_bound: L^2 must be positive");
  if (eps.radicand() != Lsq) {
    throw std::invalid_argument("bauer_degree_bound: eps must live in Q(sqrt(L^2))");
  }
  // eps < 0 is allowed: the hinge evaluation at sqrt(d) - d/m goes negative
  // once d > m^2, and the formula stays monotone for every eps < sqrt(L^2).
  QuadExt root = QuadExt::sqrt_of(Lsq);
  if (quad_compare(eps, root) >= 0) {
    throw std::invalid_argument("bauer_degree_bound: not submaximal (eps >= sqrt(L^2))");
  }
  return QuadExt::rational(Rational(Lsq), Lsq) / (root - eps);
}

// h^0(X, kL) = sum of h^0(P^2, (k - im)H) over the d eigensheaf twists.
inline std::int64_t pullback_section_count(std::int64_t k, const CoverDatum& cover) {
  std::int64_t total = 0;
  for (std::int64_t i = 0; i <= cover.d - 1; ++i) total += dim_plane(k - i * cover.m);
  return total;
}

// Pullback of a plane curve of the given degree: the ratio
// d*deg/mult is >= d >= sqrt(d) whenever mult <= deg, so a pullback is
// never submaximal.  Verified exactly, never assumed.
struct PullbackCheck {
  bool not_submaximal = false;
  Rational ratio;
};

inline PullbackCheck pullback_not_submaximal_check(std::int64_t plane_degree, std::int64_t mult,
                                                   std::int64_t d) {
  if (d < 2) throw std::invalid_argument("pullback_not_submaximal_check: d must be >= 2");
  if (plane_degree < 1 || mult < 1) {
    throw std::invalid_argument("pullback_not_submaximal_check: degree and mult must be >= 1");
  }
  if (mult > plane_degree) {
    throw std::invalid_argument(
        "pullback_not_submaximal_check: mult <= degree required (point off the branch curve)");
  }
  PullbackCheck chk;
  chk.ratio = Rational(d * plane_degree, mult);
  chk.not_submaximal = quad_compare(QuadExt::rational(chk.ratio, d), QuadExt::sqrt_of(d)) >= 0;
  return chk;
}

// epsilon(nL; x) = n * epsilon(L; x).
inline Rational scale_polarization(const Rational& ratio, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("scale_polarization: n must be >= 1");
  return ratio * Rational(n);
}

// ---------------------------------------------------------------------
// Derivation trace

struct TraceStep {
  int step = 0;
  std::string rule;
  std::vector<std::pair<std::string, std::string>> inputs;  // key -> exact value string
  std::string conclusion;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SeshadriReport {
  std::int64_t d = 0;
  std::int64_t m = 0;
  QuadExt lower;  // sqrt(d) - d/m
  QuadExt upper;  // sqrt(d)
  bool clamped = false;
  std::vector<TraceStep> trace;
};

// The ruling-out argument behind the lower bound, replayed with exact
// numbers.  Every step checks itself; a failure throws instead of emitting
// a bogus trace.
inline std::vector<TraceStep> contradiction_chain(const CoverDatum& cover) {
  if (cover.m < 3) throw hypothesis_error("the Seshadri interval bound requires m >= 3");
  std::vector<TraceStep> trace;
  const std::int64_t d = cover.d, m = cover.m;
  QuadExt root = QuadExt::sqrt_of(d);
  QuadExt threshold = root - Rational(d, m);  // sqrt(d) - d/m

  trace.push_back(TraceStep{
      1,
      "assume-submaximal",
      {{"d", std::to_string(d)},
       {"m", std::to_string(m)},
       {"threshold", threshold.str()}},
      "suppose C irreducible, submaximal at a very general x, with eps_{C,x} < " +
          threshold.str()});

  CurveClassMultiple cls = dC_multiple_class(cover, 1);
  trace.push_back(TraceStep{
      2,
      "curve-class-multiple",
      {{"L^2", std::to_string(cls.Lsq)}, {"identity", "k*L^2 = (dC).L = d*(L.C)"}},
      "dC lies in |kL| with k = L.C, a positive integer"});

  // Bauer bound at the threshold itself: exactly m.  For eps below the
  // threshold the bound is below m by monotonicity, so k <= m-1.
  QuadExt at_threshold = bauer_degree_bound(d, threshold);
  if (!(at_threshold.is_rational() && at_threshold.a() == Rational(m))) {
    throw std::logic_error("contradiction_chain: hinge identity failed");
  }
  std::int64_t k_max = m - 1;  // strict integer bound: k < m
  trace.push_back(TraceStep{
      3,
      "bauer-degree-bound",
      {{"L^2", std::to_string(d)},
       {"bound_at_threshold", at_threshold.str()},
       {"strict", "k < d/(sqrt(d)-eps) < m"}},
      "k <= " + std::to_string(k_max) + ", i.e. k in {1.." + std::to_string(k_max) + "}"});

  TraceStep step4{4, "pullback-section-count", {}, ""};
  for (std::int64_t k = 1; k <= k_max; ++k) {
    std::int64_t hx = pullback_section_count(k, cover);
    std::int64_t hp = dim_plane(k);
    if (hx != hp) {
      throw std::logic_error("contradiction_chain: section-count dichotomy failed at k = " +
                             std::to_string(k));
    }
    step4.inputs.emplace_back("h0(X," + std::to_string(k) + "L)", std::to_string(hx));
  }
  step4.conclusion =
      "h0(X,kL) = h0(P^2,kH) for k <= " + std::to_string(k_max) + ", so dC is a pullback";
  trace.push_back(std::move(step4));

  TraceStep step5{5, "pullback-not-submaximal", {}, ""};
  Rational worst_ratio;
  bool first = true;
  for (std::int64_t deg = 1; deg <= k_max; ++deg) {
    for (std::int64_t mult = 1; mult <= deg; ++mult) {
      PullbackCheck chk = pullback_not_submaximal_check(deg, mult, d);
      if (!chk.not_submaximal) {
        throw std::logic_error("contradiction_chain: pullback lemma failed");
      }
      if (first || chk.ratio < worst_ratio) {
        worst_ratio = chk.ratio;
        first = false;
      }
    }
  }
  step5.inputs.emplace_back("min_ratio", worst_ratio.str());
  step5.inputs.emplace_back("degrees_swept", "1.." + std::to_string(k_max));
  step5.conclusion = "every pullback has ratio >= d >= sqrt(d); dC is not submaximal -- "
                     "contradiction";
  trace.push_back(std::move(step5));

  trace.push_back(TraceStep{
      6,
      "conclusion",
      {{"lower", threshold.str()}, {"upper", root.str()}},
      "eps(L;x) lies in [" + threshold.str() + ", " + root.str() + "]"});
  return trace;
}

inline SeshadriReport seshadri_interval(const CoverDatum& cover) {
  if (cover.m < 3) throw hypothesis_error("the Seshadri interval bound requires m >= 3");
  SeshadriReport rep;
  rep.d = cover.d;
  rep.m = cover.m;
  rep.upper = QuadExt::sqrt_of(cover.d);
  rep.lower = rep.upper - Rational(cover.d, cover.m);
  rep.clamped = rep.lower.sign() <= 0;
  rep.trace = contradiction_chain(cover);
  return rep;
}

// Re-derives the chain from (d, m) and compares step by step; a loaded
// report replays to exactly the same trace or this returns false.
inline bool replay_trace(const SeshadriReport& rep) {
  try {
    CoverDatum cover(rep.d, rep.m);
    SeshadriReport fresh = seshadri_interval(cover);
    return fresh.lower == rep.lower && fresh.upper == rep.upper &&
           fresh.clamped == rep.clamped && fresh.trace == rep.trace;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace duple
