#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "duple/milnor.hpp"
#include "duple/modular.hpp"
#include "duple/monomial.hpp"

namespace duple {

// One graded piece R_k of the Milnor algebra R = S/(w^{d-1}, grad f),
// realized concretely: the ambient space is the monomial basis of
// T_k = (S/(w^{d-1}))_k (w-exponent <= d-2, descending graded-lex), the
// ideal piece is spanned by mu * df/dx_i, and a reduced row echelon form of
// that span fixes everything else.
//
// Pivot columns are claimed greedily from the graded-lex-largest monomial
// down, so the complement -- the monomial lift basis of R_k -- consists of
// the graded-lex-latest independent monomials.  This makes bases, normal
// forms, and hence certificates reproducible bit for bit.
class QuotientPiece {
 public:
  QuotientPiece(const MilnorData& md, std::int64_t k, std::uint64_t p)
      : prime_(p), w_cut_(md.cover.d - 1) {
    require_field_prime(p);
    ambient_ = monomials_of_degree(md.cover.weights(), k, md.cover.d - 2);
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
      index_.emplace(ambient_[i], static_cast<std::int32_t>(i));
    }
    const std::size_t n = ambient_.size();

    // ideal piece: mu * partial for the three partials of f
    std::vector<std::vector<std::uint32_t>> span;
    std::int64_t partial_degree = md.cover.branch_degree() - 1;
    std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> partials;
    for (int var = 0; var < 3; ++var) {
      RationalPoly partial = md.f.derivative(var);
      std::vector<std::pair<Monomial, std::uint32_t>> terms;
      for (const auto& [mono, c] : partial.terms()) {
        std::uint32_t cv = reduce_mod(c, p);
        if (cv != 0) terms.emplace_back(mono, cv);
      }
      partials.push_back(std::move(terms));
    }
    for (const auto& partial : partials) {
      for (const auto& mu : monomials_of_degree(md.cover.weights(), k - partial_degree,
                                                md.cover.d - 2)) {
        std::vector<std::uint32_t> vec(n, 0);
        bool any = false;
        for (const auto& [mono, c] : partial) {
          Monomial prod = mono * mu;
          if (prod.e[3] >= w_cut_) continue;  // w^{d-1} kills it
          vec[index_.at(prod)] = add_mod(vec[index_.at(prod)], c, p);
          any = true;
        }
        if (any) span.push_back(std::move(vec));
      }
    }

    // RREF with pivots scanned left to right (largest monomial first)
    pivot_row_of_col_.assign(n, -1);
    std::size_t row_count = 0;
    for (std::size_t c = 0; c < n && row_count < span.size(); ++c) {
      std::size_t sel = row_count;
      while (sel < span.size() && span[sel][c] == 0) ++sel;
      if (sel == span.size()) continue;
      std::swap(span[row_count], span[sel]);
      std::uint32_t inv = inv_mod(span[row_count][c], p);
      for (std::size_t cc = c; cc < n; ++cc) {
        span[row_count][cc] = mul_mod(span[row_count][cc], inv, p);
      }
      for (std::size_t r = 0; r < span.size(); ++r) {
        if (r == row_count || span[r][c] == 0) continue;
        std::uint32_t f = span[r][c];
        for (std::size_t cc = c; cc < n; ++cc) {
          span[r][cc] = sub_mod(span[r][cc], mul_mod(f, span[row_count][cc], p), p);
        }
      }
      pivot_row_of_col_[c] = static_cast<std::int32_t>(row_count);
      ++row_count;
    }
    rref_.assign(span.begin(), span.begin() + static_cast<std::ptrdiff_t>(row_count));

    standard_col_of_col_.assign(n, -1);
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_row_of_col_[c] < 0) {
        standard_col_of_col_[c] = static_cast<std::int32_t>(standard_.size());
        standard_.push_back(ambient_[c]);
      }
    }
  }

  std::int64_t ambient_dim() const { return static_cast<std::int64_t>(ambient_.size()); }
  std::int64_t dim() const { return static_cast<std::int64_t>(standard_.size()); }
  const std::vector<Monomial>& ambient_basis() const { return ambient_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  std::uint64_t prime() const { return prime_; }

  // Class of a degree-k monomial of S in coordinates on the standard
  // monomial basis.  Monomials with w-exponent >= d-1 map to zero.
  std::vector<std::pair<std::int32_t, std::uint32_t>> normal_form(const Monomial& mono) const {
    std::vector<std::pair<std::int32_t, std::uint32_t>> out;
    if (mono.e[3] >= w_cut_) return out;
    auto it = index_.find(mono);
    if (it == index_.end()) throw std::invalid_argument("normal_form: monomial of wrong degree");
    std::size_t col = static_cast<std::size_t>(it->second);
    if (pivot_row_of_col_[col] < 0) {
      out.emplace_back(standard_col_of_col_[col], 1);
      return out;
    }
    const auto& row = rref_[static_cast<std::size_t>(pivot_row_of_col_[col])];
    for (std::size_t c = col + 1; c < row.size(); ++c) {
      if (row[c] != 0 && pivot_row_of_col_[c] < 0) {
        out.emplace_back(standard_col_of_col_[c],
                         static_cast<std::uint32_t>(prime_ - row[c]));
      }
    }
    return out;
  }

 private:
  std::uint64_t prime_;
  std::int32_t w_cut_;  // monomials with e_w >= d-1 vanish in T
  std::vector<Monomial> ambient_;
  std::vector<Monomial> standard_;
  std::map<Monomial, std::int32_t, GrlexGreater> index_;
  std::vector<std::vector<std::uint32_t>> rref_;
  std::vector<std::int32_t> pivot_row_of_col_;
  std::vector<std::int32_t> standard_col_of_col_;
};

}  // namespace duple
