#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cov/program.hpp"

namespace cov {

// The two-equation system of Gordan's algorithm:
//   a_1 x_1 + ... + a_p x_p = u + r
//   b_1 y_1 + ... + b_q y_q = v + r
// over nonnegative integers, with all coefficients strictly positive.
struct DiophSystem {
  std::vector<int> lhs1;
  std::vector<int> lhs2;
};

// Same system with equal coefficients grouped; s[i]/t[j] record how many
// original variables share coefficient a[i]/b[j].
struct CompanionSystem {
  std::vector<int> a, s;
  std::vector<int> b, t;

  bool injective_already(const DiophSystem& sys) const {
    return a.size() == sys.lhs1.size() && b.size() == sys.lhs2.size();
  }
};

struct MinimalSolution {
  std::vector<std::uint16_t> alpha, beta;
  std::uint16_t u = 0, v = 0, r = 0;

  int order() const { return u + v; }
  bool operator==(const MinimalSolution&) const = default;
};

CompanionSystem companion(const DiophSystem& sys);

// Complete Hilbert basis (all componentwise-minimal nonzero solutions) by
// Contejean-Devie completion; output sorted lexicographically on
// (alpha, beta, u, v, r).
std::vector<MinimalSolution> hilbert_basis(const std::vector<int>& lhs1,
                                           const std::vector<int>& lhs2);

// Number of minimal solutions of the original system represented by the
// companion's basis: products of stars-and-bars counts C(x + mult - 1,
// mult - 1) over every grouped variable.
mpz_class expansion_count(const std::vector<MinimalSolution>& basis,
                          const CompanionSystem& comp);

// Builds the transvectant program (prod A_i^alpha_i, prod B_j^beta_j)_r for
// a solution of the *original* system (one exponent per family member).
// Throws if r exceeds either side's order (an inconsistent solution).
int expand_to_transvectant(ProgramArena& arena,
                           const std::vector<int>& a_roots,
                           const std::vector<int>& b_roots,
                           const std::vector<int>& alpha,
                           const std::vector<int>& beta, int r);

}  // namespace cov
