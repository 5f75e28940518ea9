#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "duple/monomial.hpp"
#include "duple/rational.hpp"

namespace duple {

// Sparse polynomial over an exact coefficient type.  Terms are kept in a
// map ordered by descending graded-lex, so iteration order is the canonical
// basis order and never depends on insertion history.  Zero coefficients
// are never stored.
template <class Coeff>
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Coeff, GrlexGreater>;

  SparsePoly() = default;

  static SparsePoly monomial(const Monomial& m, Coeff c) {
    SparsePoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  SparsePoly derivative(int var) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial dm = m;
      dm.e[var] -= 1;
      out.add_term(dm, c * Coeff(m.e[var]));
    }
    return out;
  }

  SparsePoly times_monomial(const Monomial& m) const {
    SparsePoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
    return out;
  }

  friend SparsePoly operator+(const SparsePoly& u, const SparsePoly& v) {
    SparsePoly out = u;
    for (const auto& [m, c] : v.terms_) out.add_term(m, c);
    return out;
  }

  friend SparsePoly operator*(const SparsePoly& u, const SparsePoly& v) {
    SparsePoly out;
    for (const auto& [mu, cu] : u.terms_)
      for (const auto& [mv, cv] : v.terms_) out.add_term(mu * mv, cu * cv);
    return out;
  }

  // Weighted degree if homogeneous and nonzero, nullopt otherwise.
  std::optional<std::int64_t> homogeneous_degree(const WeightSystem& ws) const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t deg = terms_.begin()->first.weighted_degree(ws);
    for (const auto& [m, c] : terms_) {
      if (m.weighted_degree(ws) != deg) return std::nullopt;
    }
    return deg;
  }

  bool uses_only_xyz() const {
    for (const auto& [m, c] : terms_) {
      if (m.e[3] != 0) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str() + "*" + m.str();
    }
    return out;
  }

 private:
  TermMap terms_;
};

using RationalPoly = SparsePoly<Rational>;

// -- interchange format ------------------------------------------------
//
// {"weights": [1,1,1,m], "degree": k, "field": "Q",
//  "terms": [{"e": [ex,ey,ez,ew], "c": "coefficient-string"}, ...]}

struct PolyDocument {
  WeightSystem ws;
  std::int64_t degree;
  std::string field;  // "Q" or "Fp:<p>"
  RationalPoly poly;
};

inline nlohmann::ordered_json poly_to_json(const RationalPoly& poly, const WeightSystem& ws,
                                           std::int64_t degree, const std::string& field = "Q") {
  nlohmann::ordered_json doc;
  doc["weights"] = ws.weights();
  doc["degree"] = degree;
  doc["field"] = field;
  auto& terms = doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : poly.terms()) {
    terms.push_back({{"e", m.e}, {"c", c.str()}});
  }
  return doc;
}

inline PolyDocument poly_from_json(const nlohmann::json& doc) {
  if (!doc.contains("weights") || !doc.contains("degree") || !doc.contains("terms")) {
    throw std::invalid_argument("polynomial document needs weights, degree, terms");
  }
  auto w = doc.at("weights").get<std::vector<std::int64_t>>();
  if (w.size() != 4 || w[0] != 1 || w[1] != 1 || w[2] != 1) {
    throw std::invalid_argument("weights must be [1,1,1,m]");
  }
  PolyDocument out{WeightSystem(w[3]), doc.at("degree").get<std::int64_t>(),
                   doc.value("field", std::string("Q")), RationalPoly{}};
  for (const auto& term : doc.at("terms")) {
    auto e = term.at("e").get<std::vector<std::int64_t>>();
    if (e.size() != 4 || e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0) {
      throw std::invalid_argument("term exponents must be 4 nonnegative integers");
    }
    Monomial m{{static_cast<std::int32_t>(e[0]), static_cast<std::int32_t>(e[1]),
                static_cast<std::int32_t>(e[2]), static_cast<std::int32_t>(e[3])}};
    Rational c = term.at("c").is_string() ? Rational::parse(term.at("c").get<std::string>())
                                          : Rational(term.at("c").get<std::int64_t>());
    if (c.is_zero()) throw std::invalid_argument("zero coefficient in polynomial document");
    if (out.poly.terms().count(m)) throw std::invalid_argument("duplicate monomial in document");
    out.poly.add_term(m, c);
  }
  auto deg = out.poly.homogeneous_degree(out.ws);
  if (!out.poly.is_zero() && (!deg || *deg != out.degree)) {
    throw std::invalid_argument("terms are not homogeneous of the declared degree");
  }
  return out;
}

}  // namespace duple
