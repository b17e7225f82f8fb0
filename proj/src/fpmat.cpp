#include "cov/fpmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace cov {

EvalMatrix::EvalMatrix(std::uint32_t p, std::size_t cols)
    : red_(p), cols_(cols) {}

void EvalMatrix::reduce_against_pivots(std::vector<std::uint32_t>& row) const {
  // Pivot rows are mutually reduced, so the coefficient at each pivot column
  // is independent of the other subtractions: one accumulation pass, batched
  // to keep everything in 64-bit accumulators.
  constexpr std::size_t kBatch = 48;  // 48 * (p-1)^2 + (p-1) < 2^64 headroom
  const std::uint32_t p = red_.p;
  std::vector<std::uint64_t> acc(cols_);
  for (std::size_t k = 0; k < cols_; ++k) acc[k] = row[k];
  std::size_t done = 0;
  while (done < pivots_.size()) {
    std::size_t end = std::min(done + kBatch, pivots_.size());
    bool any = false;
    for (std::size_t j = done; j < end; ++j) {
      std::uint32_t f = red_.reduce(acc[pivot_cols_[j]]);
      if (f == 0) continue;
      any = true;
      std::uint32_t g = p - f;
      const std::uint32_t* pr = pivots_[j].data();
      for (std::size_t k = 0; k < cols_; ++k)
        acc[k] += static_cast<std::uint64_t>(g) * pr[k];
    }
    done = end;
    if (any || done == pivots_.size())
      for (std::size_t k = 0; k < cols_; ++k) acc[k] = red_.reduce(acc[k]);
  }
  for (std::size_t k = 0; k < cols_; ++k)
    row[k] = static_cast<std::uint32_t>(acc[k]);
}

void EvalMatrix::install_pivot(std::vector<std::uint32_t> row) {
  const std::uint32_t p = red_.p;
  std::size_t pc = 0;
  while (pc < cols_ && row[pc] == 0) ++pc;
  // normalize leading entry to 1
  std::uint64_t inv = 1, base = row[pc], e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (auto& x : row)
    x = static_cast<std::uint32_t>(x * inv % p);
  // clear the new pivot column from existing pivot rows
  for (auto& pr : pivots_) {
    std::uint32_t f = pr[pc];
    if (f == 0) continue;
    std::uint32_t g = p - f;
    for (std::size_t k = 0; k < cols_; ++k)
      pr[k] = red_.reduce(pr[k] + static_cast<std::uint64_t>(g) * row[k]);
  }
  pivots_.push_back(std::move(row));
  pivot_cols_.push_back(pc);
}

bool EvalMatrix::add_row(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  std::vector<std::uint32_t> r(row.begin(), row.end());
  reduce_against_pivots(r);
  bool zero = std::all_of(r.begin(), r.end(),
                          [](std::uint32_t x) { return x == 0; });
  if (zero) return false;

  if (parity_valid_) {
    // incremental parity update: drop one parity row and fold the syndrome
    auto w = parity_syndrome(row);
    std::size_t j = 0;
    while (j < w.size() && w[j] == 0) ++j;
    if (j == w.size())
      throw std::logic_error("parity says in-span but reduction disagrees");
    const std::uint32_t p = red_.p;
    std::uint64_t inv = 1, base = w[j], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t i = 0; i < parity_.size(); ++i) {
      if (i == j || w[i] == 0) continue;
      std::uint32_t f =
          static_cast<std::uint32_t>(w[i] * inv % p);  // w_i / w_j
      std::uint32_t g = p - f;
      for (std::size_t k = 0; k < cols_; ++k)
        parity_[i][k] = red_.reduce(parity_[i][k] +
                                    static_cast<std::uint64_t>(g) *
                                        parity_[j][k]);
    }
    parity_.erase(parity_.begin() + j);
  }

  install_pivot(std::move(r));
  return true;
}

void EvalMatrix::build_parity() {
  if (parity_valid_) return;
  const std::uint32_t p = red_.p;
  parity_.clear();
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t pc : pivot_cols_) is_pivot[pc] = 1;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> y(cols_, 0);
    y[f] = 1;
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      std::uint32_t v = pivots_[j][f];
      if (v) y[pivot_cols_[j]] = p - v;
    }
    parity_.push_back(std::move(y));
  }
  parity_valid_ = true;
}

std::size_t EvalMatrix::parity_rows() {
  build_parity();
  return parity_.size();
}

std::vector<std::uint32_t> EvalMatrix::parity_syndrome(
    std::span<const std::uint32_t> row) {
  build_parity();
  std::vector<std::uint32_t> w(parity_.size());
  for (std::size_t i = 0; i < parity_.size(); ++i) {
    const std::uint32_t* pr = parity_[i].data();
    std::uint64_t acc = 0;
    std::size_t k = 0;
    while (k < cols_) {
      std::size_t end = std::min(k + std::size_t(48), cols_);
      for (; k < end; ++k) acc += static_cast<std::uint64_t>(pr[k]) * row[k];
      acc = red_.reduce(acc);
    }
    w[i] = static_cast<std::uint32_t>(acc);
  }
  return w;
}

bool EvalMatrix::in_span(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  auto w = parity_syndrome(row);
  return std::all_of(w.begin(), w.end(),
                     [](std::uint32_t x) { return x == 0; });
}

std::size_t fp_rank(std::uint32_t p,
                    std::vector<std::vector<std::uint32_t>> rows) {
  if (rows.empty()) return 0;
  EvalMatrix m(p, rows.front().size());
  for (auto& r : rows) m.add_row(r);
  return m.rank();
}

}  // namespace cov
