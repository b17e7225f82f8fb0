#include "cov/dioph.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cov {

CompanionSystem companion(const DiophSystem& sys) {
  CompanionSystem out;
  auto group = [](const std::vector<int>& lhs, std::vector<int>& coeff,
                  std::vector<int>& mult) {
    std::map<int, int> counts;
    for (int c : lhs) {
      if (c <= 0) throw std::invalid_argument("coefficients must be positive");
      ++counts[c];
    }
    for (const auto& [c, k] : counts) {
      coeff.push_back(c);
      mult.push_back(k);
    }
  };
  group(sys.lhs1, out.a, out.s);
  group(sys.lhs2, out.b, out.t);
  return out;
}

namespace {

// Completion state: vectors over (alpha | beta | u, v, r) packed as u16.
struct VecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<MinimalSolution> hilbert_basis(const std::vector<int>& lhs1,
                                           const std::vector<int>& lhs2) {
  const int p = static_cast<int>(lhs1.size());
  const int q = static_cast<int>(lhs2.size());
  const int nvar = p + q + 3;
  // column of the defect map A e_k, per variable
  std::vector<std::pair<long, long>> col(nvar);
  for (int i = 0; i < p; ++i) col[i] = {lhs1[i], 0};
  for (int j = 0; j < q; ++j) col[p + j] = {0, lhs2[j]};
  col[p + q] = {-1, 0};      // u
  col[p + q + 1] = {0, -1};  // v
  col[p + q + 2] = {-1, -1}; // r

  using Vec = std::vector<std::uint16_t>;
  std::vector<Vec> minimal;
  // solutions grouped by support mask for the dominance test
  std::map<std::uint32_t, std::vector<const Vec*>> by_support;
  auto support = [&](const Vec& v) {
    std::uint32_t m = 0;
    for (int i = 0; i < nvar; ++i)
      if (v[i]) m |= (1u << i);
    return m;
  };
  auto dominates_minimal = [&](const Vec& t, std::uint32_t sup) {
    for (const auto& [mask, sols] : by_support) {
      if (mask & ~sup) continue;
      for (const Vec* s : sols) {
        bool above = true;
        for (int i = 0; i < nvar && above; ++i)
          if ((*s)[i] > t[i]) above = false;
        if (above) return true;
      }
    }
    return false;
  };

  std::unordered_set<Vec, VecHash> frontier;
  for (int k = 0; k < nvar; ++k) {
    Vec e(nvar, 0);
    e[k] = 1;
    frontier.insert(std::move(e));
  }

  while (!frontier.empty()) {
    std::unordered_set<Vec, VecHash> next;
    std::vector<Vec> found;
    for (const Vec& t : frontier) {
      long d1 = 0, d2 = 0;
      for (int i = 0; i < nvar; ++i) {
        if (!t[i]) continue;
        d1 += col[i].first * t[i];
        d2 += col[i].second * t[i];
      }
      if (d1 == 0 && d2 == 0) {
        found.push_back(t);
        continue;
      }
      for (int k = 0; k < nvar; ++k) {
        if (d1 * col[k].first + d2 * col[k].second >= 0) continue;
        Vec tt = t;
        ++tt[k];
        next.insert(std::move(tt));
      }
    }
    for (auto& s : found) {
      minimal.push_back(std::move(s));
    }
    if (!found.empty()) {
      by_support.clear();
      for (const Vec& s : minimal) by_support[support(s)].push_back(&s);
    }
    frontier.clear();
    for (const Vec& t : next) {
      if (!dominates_minimal(t, support(t))) frontier.insert(t);
    }
  }

  std::vector<MinimalSolution> out;
  out.reserve(minimal.size());
  for (const Vec& v : minimal) {
    MinimalSolution s;
    s.alpha.assign(v.begin(), v.begin() + p);
    s.beta.assign(v.begin() + p, v.begin() + p + q);
    s.u = v[p + q];
    s.v = v[p + q + 1];
    s.r = v[p + q + 2];
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const MinimalSolution& x,
                                       const MinimalSolution& y) {
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    if (x.beta != y.beta) return x.beta < y.beta;
    return std::tie(x.u, x.v, x.r) < std::tie(y.u, y.v, y.r);
  });
  return out;
}

mpz_class expansion_count(const std::vector<MinimalSolution>& basis,
                          const CompanionSystem& comp) {
  mpz_class total = 0;
  auto stars_and_bars = [](unsigned x, unsigned mult) {
    // compositions of x into mult ordered nonnegative parts
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), x + mult - 1, mult - 1);
    return b;
  };
  for (const auto& sol : basis) {
    mpz_class ways = 1;
    for (std::size_t i = 0; i < comp.a.size(); ++i)
      ways *= stars_and_bars(sol.alpha[i], comp.s[i]);
    for (std::size_t j = 0; j < comp.b.size(); ++j)
      ways *= stars_and_bars(sol.beta[j], comp.t[j]);
    total += ways;
  }
  return total;
}

int expand_to_transvectant(ProgramArena& arena,
                           const std::vector<int>& a_roots,
                           const std::vector<int>& b_roots,
                           const std::vector<int>& alpha,
                           const std::vector<int>& beta, int r) {
  std::vector<std::pair<int, int>> u_factors, v_factors;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i]) u_factors.emplace_back(a_roots.at(i), alpha[i]);
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (beta[j]) v_factors.emplace_back(b_roots.at(j), beta[j]);
  if (u_factors.empty() && v_factors.empty())
    throw std::invalid_argument("empty solution");
  if (u_factors.empty() || v_factors.empty()) {
    if (r != 0)
      throw std::invalid_argument("one-sided solution with nonzero index");
    return arena.product(u_factors.empty() ? v_factors : u_factors);
  }
  int u_node = arena.product(std::move(u_factors));
  int v_node = arena.product(std::move(v_factors));
  if (r > std::min(arena.order(u_node), arena.order(v_node)))
    throw std::invalid_argument("transvectant index exceeds product orders");
  return arena.transvect(u_node, v_node, r);
}

}  // namespace cov
