#pragma once

// Independent dense-vector arithmetic used to produce expected values.
// Nothing here calls into the library.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Poly = std::vector<mpq_class>;

inline Poly zero(int n) { return Poly(static_cast<std::size_t>(n) + 1, mpq_class(0)); }

inline Poly add(const Poly& a, const Poly& b) {
  Poly r = zero(static_cast<int>(std::min(a.size(), b.size())) - 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, int n) {
  Poly r = zero(n);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly scale(Poly a, const mpq_class& c) {
  for (auto& x : a) x *= c;
  return a;
}

// sum_{k>=0} c_k s^k with s(0) = 0, by explicit powers.
inline Poly substitute(const Poly& outer, const Poly& s, int n) {
  Poly r = zero(n), p = zero(n);
  p[0] = 1;
  for (std::size_t k = 0; k < outer.size() && static_cast<int>(k) <= n; ++k) {
    for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)] += outer[k] * p[static_cast<std::size_t>(i)];
    p = mul(p, s, n);
  }
  return r;
}

// 1/a for a(0) != 0, by solving a * r = 1 term by term.
inline Poly inverse(const Poly& a, int n) {
  Poly r = zero(n);
  for (int k = 0; k <= n; ++k) {
    mpq_class acc = k == 0 ? 1 : 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc -= a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = acc / a[0];
  }
  return r;
}

inline mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// R = 1 + 3 g R^2 by fixed-point iteration.
inline Poly r_infinity(int n) {
  Poly r = zero(n);
  r[0] = 1;
  for (int it = 0; it <= n; ++it) {
    Poly sq = mul(r, r, n), next = zero(n);
    next[0] = 1;
    for (int i = 1; i <= n; ++i) next[static_cast<std::size_t>(i)] = 3 * sq[static_cast<std::size_t>(i - 1)];
    r = next;
  }
  return r;
}

// R_k = 1 + g R_k (R_{k-1} + R_k + R_{k+1}) by Jacobi iteration on a wide band.
inline std::vector<Poly> r_family(int kmax, int n) {
  const int top = kmax + n + 2;
  std::vector<Poly> r(static_cast<std::size_t>(top) + 2, zero(n));
  for (int k = 1; k <= top + 1; ++k) r[static_cast<std::size_t>(k)][0] = 1;
  for (int it = 0; it <= n; ++it) {
    std::vector<Poly> next = r;
    for (int k = 1; k <= top; ++k) {
      Poly s = add(add(r[static_cast<std::size_t>(k - 1)], r[static_cast<std::size_t>(k)]), r[static_cast<std::size_t>(k + 1)]);
      Poly prod = mul(r[static_cast<std::size_t>(k)], s, n);
      Poly v = zero(n);
      v[0] = 1;
      for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    next[static_cast<std::size_t>(top + 1)] = next[static_cast<std::size_t>(top)];
    r = next;
  }
  r.resize(static_cast<std::size_t>(kmax) + 1);
  return r;
}

// C(G) with G = C/(1+C)^3: [G^n] C = binom(3n, n) / (2n+1).
inline Poly c_of_G(int n) {
  Poly c = zero(n);
  for (int i = 1; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] = mpq_class(binom(3 * i, i), mpz_class(2 * i + 1));
    c[static_cast<std::size_t>(i)].canonicalize();
  }
  return c;
}

}  // namespace oracle
