#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qsat/tolerances.hpp"
#include "qsat/util.hpp"

namespace qsat {

// Sparse multivariate polynomial in the 2b complex coordinates of b
// foundation vectors. Variable 2j / 2j+1 (0-based) are the two components of
// foundation vector j. Exponents are stored densely per term; term maps are
// ordered so every iteration is deterministic.
struct MultiPoly {
  int b = 0;
  std::map<std::vector<std::uint16_t>, cplx> terms;

  static MultiPoly zero(int b) { return {b, {}}; }

  static MultiPoly constant(int b, cplx c) {
    MultiPoly p{b, {}};
    if (c != cplx{0, 0}) p.terms[std::vector<std::uint16_t>(2 * b, 0)] = c;
    return p;
  }

  static MultiPoly variable(int b, int var) {
    MultiPoly p{b, {}};
    std::vector<std::uint16_t> e(2 * b, 0);
    e[var] = 1;
    p.terms[e] = 1.0;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t term_count() const { return terms.size(); }

  double max_coeff() const {
    double m = 0;
    for (const auto& [e, c] : terms) m = std::max(m, std::abs(c));
    return m;
  }

  // Drop coefficients below tol::poly_prune relative to the largest one.
  void prune() {
    double cut = max_coeff() * tol::poly_prune;
    for (auto it = terms.begin(); it != terms.end();) {
      if (std::abs(it->second) <= cut)
        it = terms.erase(it);
      else
        ++it;
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] += c;
    r.prune();
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] -= c;
    r.prune();
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r{b, {}};
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<std::uint16_t> e(2 * b);
        for (int v = 0; v < 2 * b; ++v) e[v] = e1[v] + e2[v];
        r.terms[e] += c1 * c2;
      }
    r.prune();
    return r;
  }

  MultiPoly operator*(cplx s) const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms) c *= s;
    r.prune();
    return r;
  }

  // Multidegree: per foundation vector j, the largest total exponent of its
  // two components over all terms.
  std::vector<int> degree_vector() const {
    std::vector<int> d(b, 0);
    for (const auto& [e, c] : terms)
      for (int j = 0; j < b; ++j)
        d[j] = std::max(d[j], int(e[2 * j]) + int(e[2 * j + 1]));
    return d;
  }

  cplx evaluate(const std::vector<cplx>& x) const {
    if (static_cast<int>(x.size()) != 2 * b)
      throw std::invalid_argument("evaluate: wrong variable count");
    std::vector<std::uint16_t> mx(2 * b, 0);
    for (const auto& [e, c] : terms)
      for (int v = 0; v < 2 * b; ++v) mx[v] = std::max(mx[v], e[v]);
    std::vector<std::vector<cplx>> pw(2 * b);
    for (int v = 0; v < 2 * b; ++v) {
      pw[v].resize(mx[v] + 1);
      pw[v][0] = 1.0;
      for (int t = 1; t <= mx[v]; ++t) pw[v][t] = pw[v][t - 1] * x[v];
    }
    cplx s = 0;
    for (const auto& [e, c] : terms) {
      cplx t = c;
      for (int v = 0; v < 2 * b; ++v)
        if (e[v]) t *= pw[v][e[v]];
      s += t;
    }
    return s;
  }

  // Substitute foundation vector j by a fixed numeric vector (a0, a1). The
  // result still lives formally over the same 2b variables, with vector j's
  // exponents cleared.
  MultiPoly substitute_vector(int j, cplx a0, cplx a1) const {
    MultiPoly r{b, {}};
    for (const auto& [e, c] : terms) {
      cplx s = c;
      for (int t = 0; t < e[2 * j]; ++t) s *= a0;
      for (int t = 0; t < e[2 * j + 1]; ++t) s *= a1;
      auto e2 = e;
      e2[2 * j] = e2[2 * j + 1] = 0;
      r.terms[e2] += s;
    }
    r.prune();
    return r;
  }
};

// Univariate polynomial with ascending complex coefficients.
struct UniPoly {
  std::vector<cplx> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }

  double one_norm() const {
    double s = 0;
    for (auto z : c) s += std::abs(z);
    return s;
  }

  // Strip trailing coefficients below tol::uni_strip relative to the one-norm.
  void normalize() {
    double cut = one_norm() * tol::uni_strip;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  }

  cplx eval(cplx x) const {
    cplx s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  }

  UniPoly derivative() const {
    UniPoly d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(double(i) * c[i]);
    return d;
  }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
  }

  UniPoly operator-(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.normalize();
    return r;
  }

  UniPoly operator*(const UniPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    UniPoly r;
    r.c.resize(c.size() + o.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
  }

  UniPoly operator*(cplx s) const {
    UniPoly r = *this;
    for (auto& z : r.c) z *= s;
    r.normalize();
    return r;
  }

  // Exact synthetic division by (x - root); the remainder is dropped.
  UniPoly deflate(cplx root) const {
    if (c.size() <= 1) return {};
    UniPoly q;
    q.c.resize(c.size() - 1);
    cplx carry = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
      q.c[i] = carry;
      carry = c[i] + carry * root;
    }
    q.normalize();
    return q;
  }
};

// W-valued polynomial P1*w1 + P2*w2 over the foundation coordinates.
struct WPoly {
  MultiPoly c1, c2;

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }

  std::vector<int> degree_vector() const {
    auto d1 = c1.degree_vector();
    auto d2 = c2.degree_vector();
    for (std::size_t j = 0; j < d1.size(); ++j) d1[j] = std::max(d1[j], d2[j]);
    return d1;
  }
};

// The determinant pairing: (g sharp)(f) = g1*f2 - g2*f1. Zero iff the two
// W-valued polynomials are pointwise collinear.
inline MultiPoly sharp_pair(const WPoly& g, const WPoly& f) {
  return g.c1 * f.c2 - g.c2 * f.c1;
}

}  // namespace qsat
