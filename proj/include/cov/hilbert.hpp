#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

namespace cov {

// Dimension of Cov_{d,m}(S_n): the (nd-m)/2-th coefficient of
//   (1-q^{n+1})...(1-q^{n+d}) / ((1-q^2)...(1-q^d)),
// and 0 when nd-m is negative or odd (no such weight space).
mpz_class springer_dim(int n, int d, int m);

// Incremental row of Springer dimensions: dim Cov_{d,m}(S_n) for all
// d = 0..dmax at one order m.  Costs one series pass instead of dmax.
std::vector<mpz_class> springer_row(int n, int m, int dmax);

// Maximal generator order lambda_n with n = 2^lambda + nu, lambda maximal:
// (lambda-1) 2^lambda + nu (lambda+1) + 2.
int lambda_bound(int n);

// sigma_n = (n+1)^2/4 for odd n, n(n+2)/4 for even n.  Cov_m(S_n) is
// Cohen-Macaulay for m < sigma_n - 2; the paper's corollary states the
// wider ranges m < 25 (n=9) and m < 30 (n=10) verbatim, which we also expose.
int sigma_threshold(int n);
int cm_order_limit_theorem(int n);   // sigma_n - 2
int cm_order_limit_published(int n); // 25 for n=9, 30 for n=10

// Numerator a(z) = H_{Cov_m(S_n)}(z) * prod_j (1 - z^{d_j}), computed
// term-by-term from Springer dimensions.  Truncation auto-doubles (up to a
// cap) until the trailing coefficients stabilize to zero; throws if they
// never do or if a negative coefficient appears (non-regular sequence).
std::vector<mpz_class> module_hilbert_numerator(int n, int m,
                                                const std::vector<int>& hsop,
                                                int truncation = 0);

struct BoundTable {
  int n;
  // order m -> max generator degree d_m, for all m <= lambda_n that carry
  // covariants (every m for odd n, even m for even n)
  std::map<int, int> entries;
  // order m -> the h.s.o.p. degree multiset whose numerator realized d_m
  std::map<int, std::vector<int>> hsop_choice;
};

// Candidate h.s.o.p. degree multisets for Inv(S_n), as published.
const std::vector<std::vector<int>>& hsop_degree_sets(int n);

// Degree bound table for n in {9, 10}: for each order the numerator top
// degree, minimized over the published h.s.o.p. degree sets.  For n=10, m=0
// the published table states 59 (the h.s.o.p. degree sum) although the
// computed numerator already stabilizes at 48; the published value is kept
// so downstream pruning reproduces the published pipeline.
BoundTable bound_table(int n);

// Alternating sum of Springer dimensions with coefficients from expanding
// prod_j (1 - z^{d_j}); the dimension of Cov_{d,m} modulo a partial h.s.o.p.
mpz_class quotient_dim(int n, int d, int m,
                       const std::vector<int>& reduction_degrees);

}  // namespace cov
