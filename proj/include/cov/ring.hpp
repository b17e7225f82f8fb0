#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cov {

// Exact rationals, always kept in lowest terms by GMP.
struct RationalRing {
  using Elem = mpq_class;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static Elem from_long(long v) { return Elem(v); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) {
    if (a == 0) throw std::domain_error("rational inverse of zero");
    return Elem(1) / a;
  }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string str(const Elem& a) { return a.get_str(); }

  bool operator==(const RationalRing&) const { return true; }
};

// The prime field F_p for a word-sized prime.  Elements live in [0, p).
struct ModRing {
  using Elem = std::uint32_t;

  std::uint32_t p = 65521;  // the paper's default verification prime

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("mod-p inverse of zero");
    return pow(a, p - 2);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const ModRing& o) const { return p == o.p; }
};

// Lazily extended factorial table for one prime; grows on demand.
// Valid only while the arguments stay below p.
class FactorialTable {
 public:
  explicit FactorialTable(ModRing r, std::size_t initial = 64) : ring_(r) {
    fact_.reserve(initial);
    fact_.push_back(1);
  }

  std::uint32_t factorial(std::uint32_t k) {
    if (k >= ring_.p)
      throw std::domain_error("factorial argument >= modulus");
    while (fact_.size() <= k)
      fact_.push_back(ring_.mul(fact_.back(),
                                static_cast<std::uint32_t>(fact_.size())));
    return fact_[k];
  }

  // k! / n!  for k <= n, as a field element (n < p required).
  std::uint32_t factorial_ratio(std::uint32_t k, std::uint32_t n) {
    return ring_.mul(factorial(k), ring_.inv(factorial(n)));
  }

  std::uint32_t binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    std::uint32_t d = ring_.mul(factorial(k), factorial(n - k));
    return ring_.mul(factorial(n), ring_.inv(d));
  }

 private:
  ModRing ring_;
  std::vector<std::uint32_t> fact_;
};

}  // namespace cov
