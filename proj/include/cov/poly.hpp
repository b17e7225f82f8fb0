#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cov/ring.hpp"

namespace cov {

// A homogeneous polynomial in x, y of fixed order m, stored by its m+1
// coefficients: c[k] multiplies x^{m-k} y^k.  The zero polynomial keeps its
// declared order so degree/order bookkeeping stays total.
template <class R>
struct HomPoly {
  R ring{};
  int order = 0;
  std::vector<typename R::Elem> c;

  HomPoly() = default;
  HomPoly(R r, int m) : ring(r), order(m), c(m + 1, r.zero()) {}
  HomPoly(R r, int m, std::vector<typename R::Elem> coeffs)
      : ring(r), order(m), c(std::move(coeffs)) {
    if (static_cast<int>(c.size()) != m + 1)
      throw std::invalid_argument("coefficient count != order+1");
  }

  bool is_zero() const {
    for (const auto& v : c)
      if (!ring.is_zero(v)) return false;
    return true;
  }
};

// A binary form of degree n is stored the same way; the alias marks intent
// (the object being acted on, rather than a covariant value).
template <class R>
using BinaryForm = HomPoly<R>;

namespace detail {
template <class R>
void require_same_ring(const HomPoly<R>& a, const HomPoly<R>& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("ring mismatch");
}
}  // namespace detail

template <class R>
HomPoly<R> add(const HomPoly<R>& a, const HomPoly<R>& b) {
  detail::require_same_ring(a, b);
  if (a.order != b.order) throw std::invalid_argument("order mismatch in add");
  HomPoly<R> out(a.ring, a.order);
  for (int k = 0; k <= a.order; ++k) out.c[k] = a.ring.add(a.c[k], b.c[k]);
  return out;
}

template <class R>
HomPoly<R> sub(const HomPoly<R>& a, const HomPoly<R>& b) {
  detail::require_same_ring(a, b);
  if (a.order != b.order) throw std::invalid_argument("order mismatch in sub");
  HomPoly<R> out(a.ring, a.order);
  for (int k = 0; k <= a.order; ++k) out.c[k] = a.ring.sub(a.c[k], b.c[k]);
  return out;
}

template <class R>
HomPoly<R> scale(const HomPoly<R>& a, const typename R::Elem& s) {
  HomPoly<R> out(a.ring, a.order);
  for (int k = 0; k <= a.order; ++k) out.c[k] = a.ring.mul(a.c[k], s);
  return out;
}

template <class R>
HomPoly<R> mul(const HomPoly<R>& a, const HomPoly<R>& b) {
  detail::require_same_ring(a, b);
  HomPoly<R> out(a.ring, a.order + b.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.ring.is_zero(a.c[i])) continue;
    for (int j = 0; j <= b.order; ++j)
      out.c[i + j] = a.ring.add(out.c[i + j], a.ring.mul(a.c[i], b.c[j]));
  }
  return out;
}

// Faster product for the prime field: delayed reduction, one pass per output
// coefficient.  This is the inner loop of every catalog evaluation.
inline HomPoly<ModRing> mul(const HomPoly<ModRing>& a,
                            const HomPoly<ModRing>& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("ring mismatch");
  const std::uint64_t p = a.ring.p;
  HomPoly<ModRing> out(a.ring, a.order + b.order);
  // (p-1)^2 < 2^32, so up to 2^32 terms fit in the u64 accumulator; orders
  // here stay far below that.
  for (int k = 0; k <= out.order; ++k) {
    std::uint64_t acc = 0;
    int lo = std::max(0, k - b.order), hi = std::min(a.order, k);
    for (int i = lo; i <= hi; ++i)
      acc += std::uint64_t(a.c[i]) * b.c[k - i];
    out.c[k] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

template <class R>
HomPoly<R> pow(const HomPoly<R>& a, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  HomPoly<R> acc(a.ring, 0);
  acc.c[0] = a.ring.one();
  HomPoly<R> base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

// d^dx/dx^dx d^dy/dy^dy applied to a homogeneous polynomial.  The source
// term x^{xe+dx} y^{k+dy} lands on x^{xe} y^{k} with falling-factorial weight.
template <class R>
HomPoly<R> mixed_partial(const HomPoly<R>& a, int dx, int dy) {
  int m = a.order - dx - dy;
  if (m < 0) return HomPoly<R>(a.ring, 0);
  HomPoly<R> out(a.ring, m);
  for (int k = 0; k <= m; ++k) {
    int src = k + dy;
    int xe = m - k;
    auto f = a.ring.one();
    for (int t = 0; t < dx; ++t)
      f = a.ring.mul(f, a.ring.from_long(xe + dx - t));
    for (int t = 0; t < dy; ++t)
      f = a.ring.mul(f, a.ring.from_long(src - t));
    out.c[k] = a.ring.mul(a.c[src], f);
  }
  return out;
}

// Transvectant (a, b)_r of homogeneous polynomials of orders n and m:
// zero when r > min(n, m), otherwise
//   (n-r)!/n! (m-r)!/m! sum_i (-1)^i C(r,i) d^r a/dx^{r-i}dy^i d^r b/dx^i dy^{r-i}
// of order n + m - 2r.
template <class R>
HomPoly<R> transvectant(const HomPoly<R>& a, const HomPoly<R>& b, int r) {
  detail::require_same_ring(a, b);
  if (r < 0) throw std::invalid_argument("negative transvectant index");
  const int n = a.order, m = b.order;
  if (r > std::min(n, m)) return HomPoly<R>(a.ring, 0);

  if constexpr (std::is_same_v<R, ModRing>) {
    if (a.ring.p <= static_cast<std::uint32_t>(std::max(n, m)))
      throw std::domain_error("modulus too small for transvectant orders");
  }

  HomPoly<R> out(a.ring, n + m - 2 * r);
  // binomial row C(r, i) in the ring
  std::vector<typename R::Elem> binom(r + 1);
  binom[0] = a.ring.one();
  for (int i = 1; i <= r; ++i) {
    // C(r,i) = C(r,i-1) * (r-i+1) / i ; both factors < p by precondition
    auto t = a.ring.mul(binom[i - 1], a.ring.from_long(r - i + 1));
    binom[i] = a.ring.mul(t, a.ring.inv(a.ring.from_long(i)));
  }
  for (int i = 0; i <= r; ++i) {
    auto da = mixed_partial(a, r - i, i);
    auto db = mixed_partial(b, i, r - i);
    auto term = mul(da, db);
    auto w = binom[i];
    if (i & 1) w = a.ring.neg(w);
    for (int k = 0; k <= out.order; ++k)
      out.c[k] = a.ring.add(out.c[k], a.ring.mul(w, term.c[k]));
  }
  // normalization (n-r)!/n! (m-r)!/m! = 1 / (falling factorials)
  auto denom = a.ring.one();
  for (int t = 0; t < r; ++t) {
    denom = a.ring.mul(denom, a.ring.from_long(n - t));
    denom = a.ring.mul(denom, a.ring.from_long(m - t));
  }
  auto norm = a.ring.inv(denom);
  for (int k = 0; k <= out.order; ++k) out.c[k] = a.ring.mul(out.c[k], norm);
  return out;
}

// True iff a = lambda * b for some nonzero scalar lambda (same order/ring).
template <class R>
bool scale_free_equal(const HomPoly<R>& a, const HomPoly<R>& b) {
  detail::require_same_ring(a, b);
  if (a.order != b.order) return false;
  int pivot = -1;
  for (int k = 0; k <= a.order; ++k) {
    if (!a.ring.is_zero(a.c[k]) || !b.ring.is_zero(b.c[k])) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) return true;  // both zero
  if (a.ring.is_zero(a.c[pivot]) || b.ring.is_zero(b.c[pivot])) return false;
  // cross-multiply: a[k] * b[pivot] == b[k] * a[pivot] for all k
  for (int k = 0; k <= a.order; ++k) {
    auto lhs = a.ring.mul(a.c[k], b.c[pivot]);
    auto rhs = a.ring.mul(b.c[k], a.c[pivot]);
    if (!a.ring.eq(lhs, rhs)) return false;
  }
  return true;
}

// The action (g . f)(x) = f(g^{-1} x) for g in SL2 given row-major as
// [a b; c d] with det 1; substitutes x -> d x - b y, y -> -c x + a y.
template <class R>
HomPoly<R> apply_sl2(const HomPoly<R>& f,
                     const std::array<typename R::Elem, 4>& g) {
  const auto& ring = f.ring;
  const auto a = g[0], b = g[1], c = g[2], d = g[3];
  // g^{-1} = [d -b; -c a]
  HomPoly<R> xs(ring, 1), ys(ring, 1);
  xs.c = {d, ring.neg(b)};
  ys.c = {ring.neg(c), a};
  HomPoly<R> out(ring, f.order);
  // powers of xs and ys, combined term by term
  std::vector<HomPoly<R>> xp(f.order + 1, HomPoly<R>(ring, 0)),
      yp(f.order + 1, HomPoly<R>(ring, 0));
  xp[0].c[0] = ring.one();
  yp[0].c[0] = ring.one();
  for (int k = 1; k <= f.order; ++k) {
    xp[k] = mul(xp[k - 1], xs);
    yp[k] = mul(yp[k - 1], ys);
  }
  for (int k = 0; k <= f.order; ++k) {
    if (ring.is_zero(f.c[k])) continue;
    auto term = mul(xp[f.order - k], yp[k]);
    for (int j = 0; j <= f.order; ++j)
      out.c[j] = ring.add(out.c[j], ring.mul(f.c[k], term.c[j]));
  }
  return out;
}

}  // namespace cov
