#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "duple/modular.hpp"

namespace duple {

// Sparse matrix over F_p destined for an exact rank computation.  Entries
// may repeat (they are accumulated mod p).  Since mod-p rank never exceeds
// the rank of the same integer matrix over Q, a full-rank answer here is a
// sound certificate for the corresponding statement over Q.
struct RankMatrix {
  struct Entry {
    std::int32_t row;
    std::int32_t col;
    std::uint32_t value;
  };

  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::uint64_t prime = kDefaultPrime;
  std::vector<Entry> entries;

  void add(std::int64_t r, std::int64_t c, std::uint64_t v) {
    entries.push_back(Entry{static_cast<std::int32_t>(r), static_cast<std::int32_t>(c),
                            static_cast<std::uint32_t>(v % prime)});
  }
};

namespace detail {

using SparseRow = std::vector<std::pair<std::int32_t, std::uint32_t>>;  // sorted by column

// dst -= factor * src, rows sorted by column, arithmetic mod p.
inline SparseRow axpy_row(const SparseRow& dst, const SparseRow& src, std::uint32_t factor,
                          std::uint64_t p) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      std::uint32_t v = sub_mod(0, mul_mod(factor, src[j].second, p), p);
      if (v != 0) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      std::uint32_t v = sub_mod(dst[i].second, mul_mod(factor, src[j].second, p), p);
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

inline std::size_t rank_sparse(std::vector<SparseRow> rows, std::uint64_t p) {
  // Buckets of active rows keyed by leading column; always pivot on the
  // smallest leading column, lowest original index first, so the result
  // and the elimination order are reproducible.
  std::map<std::int32_t, std::vector<std::size_t>> lead;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].empty()) lead[rows[i].front().first].push_back(i);
  }
  std::size_t rank = 0;
  while (!lead.empty()) {
    auto it = lead.begin();
    auto idxs = std::move(it->second);
    lead.erase(it);
    std::sort(idxs.begin(), idxs.end());
    std::size_t piv = idxs.front();
    ++rank;
    std::uint32_t piv_inv = inv_mod(rows[piv].front().second, p);
    for (std::size_t t = 1; t < idxs.size(); ++t) {
      std::size_t r = idxs[t];
      std::uint32_t factor = mul_mod(rows[r].front().second, piv_inv, p);
      rows[r] = axpy_row(rows[r], rows[piv], factor, p);
      if (!rows[r].empty()) lead[rows[r].front().first].push_back(r);
    }
  }
  return rank;
}

inline std::size_t rank_dense(std::vector<std::vector<std::uint32_t>>& m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0, pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[pivot_row], m[sel]);
    std::uint32_t inv = inv_mod(m[pivot_row][c], p);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      std::uint64_t factor = mul_mod(m[r][c], inv, p);
      const auto& prow = m[pivot_row];
      auto& row = m[r];
      for (std::size_t cc = c; cc < cols; ++cc) {
        if (prow[cc] != 0) {
          row[cc] = sub_mod(row[cc], static_cast<std::uint32_t>(factor * prow[cc] % p), p);
        }
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Exact rank of M over F_p via Gaussian elimination.  Deterministic: the
// pivot schedule depends only on the matrix content.  Dense elimination is
// used when the full matrix is small enough to materialize; very large
// matrices (in practice the structurally sparse multiplication tables) go
// through the sparse path.
inline std::size_t rank_mod_p(const RankMatrix& m) {
  require_field_prime(m.prime);
  if (m.rows < 0 || m.cols < 0) throw std::invalid_argument("rank_mod_p: negative dimensions");
  if (m.rows == 0 || m.cols == 0) return 0;
  for (const auto& e : m.entries) {
    if (e.row < 0 || e.row >= m.rows || e.col < 0 || e.col >= m.cols) {
      throw std::out_of_range("rank_mod_p: entry outside matrix");
    }
  }
  constexpr std::int64_t kDenseLimit = 8ll << 20;
  if (m.rows * m.cols <= kDenseLimit) {
    std::vector<std::vector<std::uint32_t>> dense(
        m.rows, std::vector<std::uint32_t>(static_cast<std::size_t>(m.cols), 0));
    for (const auto& e : m.entries) {
      dense[e.row][e.col] = add_mod(dense[e.row][e.col], e.value % m.prime, m.prime);
    }
    return detail::rank_dense(dense, m.prime);
  }
  std::vector<std::map<std::int32_t, std::uint32_t>> acc(m.rows);
  for (const auto& e : m.entries) {
    auto& cell = acc[e.row][e.col];
    cell = add_mod(cell, e.value % m.prime, m.prime);
  }
  std::vector<detail::SparseRow> rows(m.rows);
  for (std::int64_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : acc[r]) {
      if (v != 0) rows[r].emplace_back(c, v);
    }
  }
  return detail::rank_sparse(std::move(rows), m.prime);
}

}  // namespace duple
