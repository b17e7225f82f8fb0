#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cov {

// Barrett-style reduction for a fixed word prime; avoids hardware division
// in the elimination inner loops.
struct FpReducer {
  std::uint32_t p = 0;
  std::uint64_t magic = 0;

  FpReducer() = default;
  explicit FpReducer(std::uint32_t prime)
      : p(prime), magic(~0ull / prime) {}

  std::uint32_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
};

// Row basis of a growing set of vectors over F_p, kept mutually reduced
// (reduced row echelon among the pivot rows), plus a parity-check matrix:
// a basis of the orthogonal complement of the row space.  A vector lies in
// the row space iff the parity matrix annihilates it, so once the rank is
// close to its target, membership tests cost only
// (cols - rank) * cols word operations.
class EvalMatrix {
 public:
  EvalMatrix(std::uint32_t p, std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivot_cols_.size(); }
  std::uint32_t prime() const { return red_.p; }

  // Reduces the row against the current basis; if independent, installs it
  // as a new pivot row (and updates the parity basis when present).
  bool add_row(std::span<const std::uint32_t> row);

  // Membership test that never mutates the basis.
  bool in_span(std::span<const std::uint32_t> row);

  // Forces construction of the parity basis; implied by in_span.
  void build_parity();
  std::size_t parity_rows();

  // Applies the parity matrix: out = P * row (length = parity rows).
  std::vector<std::uint32_t> parity_syndrome(
      std::span<const std::uint32_t> row);

 private:
  void reduce_against_pivots(std::vector<std::uint32_t>& row) const;
  void install_pivot(std::vector<std::uint32_t> row);

  FpReducer red_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> pivots_;  // mutually reduced rows
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::vector<std::uint32_t>> parity_;  // lazily built
  bool parity_valid_ = false;
};

// Rank of an explicit matrix (rows get consumed); convenience for tests
// and one-shot checks.
std::size_t fp_rank(std::uint32_t p,
                    std::vector<std::vector<std::uint32_t>> rows);

}  // namespace cov
