#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace duple {

// Grading of S = C[x, y, z, w] with deg x = deg y = deg z = 1, deg w = m.
struct WeightSystem {
  explicit WeightSystem(std::int64_t m) : m(m) {
    if (m < 1) throw std::invalid_argument("WeightSystem: m must be >= 1");
  }
  std::array<std::int64_t, 4> weights() const { return {1, 1, 1, m}; }
  std::int64_t m;
};

// Exponent vector (e_x, e_y, e_z, e_w).
struct Monomial {
  std::array<std::int32_t, 4> e{0, 0, 0, 0};

  std::int64_t total_degree() const {
    return std::int64_t(e[0]) + e[1] + e[2] + e[3];
  }
  std::int64_t weighted_degree(const WeightSystem& ws) const {
    return std::int64_t(e[0]) + e[1] + e[2] + ws.m * e[3];
  }
  Monomial operator*(const Monomial& o) const {
    return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]}};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    static const char* names[4] = {"x", "y", "z", "w"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
  }
};

// Graded-lex with x > y > z > w: higher total degree first, ties broken by
// lexicographic comparison of exponent tuples.  Basis lists are sorted with
// this order (largest monomial first), which pins every matrix and every
// certificate down to a reproducible layout.
struct GrlexGreater {
  bool operator()(const Monomial& u, const Monomial& v) const {
    std::int64_t du = u.total_degree(), dv = v.total_degree();
    if (du != dv) return du > dv;
    return u.e > v.e;
  }
};

inline bool grlex_less(const Monomial& u, const Monomial& v) { return GrlexGreater{}(v, u); }

// All monomials of weighted degree exactly k, in descending graded-lex
// order.  Empty for k < 0.  max_w_exp, when nonnegative, truncates the
// w-exponent (used for bases of T = S/(w^{d-1}) and of S' = C[x,y,z]).
inline std::vector<Monomial> monomials_of_degree(const WeightSystem& ws, std::int64_t k,
                                                 std::int64_t max_w_exp = -1) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  for (std::int64_t ew = 0; ew * ws.m <= k; ++ew) {
    if (max_w_exp >= 0 && ew > max_w_exp) break;
    std::int64_t r = k - ew * ws.m;
    for (std::int64_t ex = r; ex >= 0; --ex) {
      for (std::int64_t ey = r - ex; ey >= 0; --ey) {
        std::int64_t ez = r - ex - ey;
        out.push_back(Monomial{{static_cast<std::int32_t>(ex), static_cast<std::int32_t>(ey),
                                static_cast<std::int32_t>(ez), static_cast<std::int32_t>(ew)}});
      }
    }
  }
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

// Monomials of C[x,y,z] of total degree k, descending graded-lex.
inline std::vector<Monomial> plane_monomials_of_degree(std::int64_t k) {
  return monomials_of_degree(WeightSystem(1), k, 0);
}

}  // namespace duple
