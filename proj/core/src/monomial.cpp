#include "oddjacobi/monomial.hpp"

#include <cassert>

namespace oddjacobi {

Monomial::Monomial(std::vector<Factor> factors, Rational exp_rate)
    : factors_(std::move(factors)), exp_rate_(std::move(exp_rate)) {
#ifndef NDEBUG
  for (size_t i = 0; i < factors_.size(); ++i) {
    assert(factors_[i].exp >= 1);
    if (i > 0) assert(factors_[i - 1].var < factors_[i].var);
  }
#endif
}

const Monomial& Monomial::unit() {
  static const Monomial u;
  return u;
}

int Monomial::exponent_of(int var) const {
  for (const Factor& f : factors_) {
    if (f.var == var) return f.exp;
    if (f.var > var) break;
  }
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

Parity Monomial::parity(const Algebra& alg) const {
  Parity p = Parity::even;
  for (const Factor& f : factors_) {
    if (is_odd(alg.var(f.var).parity)) p = p + Parity::odd;
  }
  return p;
}

int Monomial::fibre_degree(const Algebra& alg) const {
  int d = 0;
  for (const Factor& f : factors_) {
    if (is_fibre(alg.var(f.var).kind)) d += f.exp;
  }
  return d;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  const size_t n = fa.size() < fb.size() ? fa.size() : fb.size();
  for (size_t i = 0; i < n; ++i) {
    if (fa[i].var != fb[i].var) return fa[i].var < fb[i].var;
    if (fa[i].exp != fb[i].exp) return fa[i].exp < fb[i].exp;
  }
  if (fa.size() != fb.size()) return fa.size() < fb.size();
  return cmp(a.exp_rate_, b.exp_rate_) < 0;
}

std::optional<std::pair<Monomial, int>> mul(const Monomial& a, const Monomial& b,
                                            const Algebra& alg) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<Factor> out;
  out.reserve(fa.size() + fb.size());

  int odd_in_a = 0;
  for (const Factor& f : fa)
    if (is_odd(alg.var(f.var).parity)) ++odd_in_a;

  // Merge ascending; each odd factor of b crosses every odd factor of a that
  // is still to its right, contributing one Koszul swap per crossing.
  int sign = 1;
  int odd_emitted_from_a = 0;
  size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var < fb[j].var) {
      if (is_odd(alg.var(fa[i].var).parity)) ++odd_emitted_from_a;
      out.push_back(fa[i]);
      ++i;
    } else if (fa[i].var > fb[j].var) {
      if (is_odd(alg.var(fb[j].var).parity)) {
        if ((odd_in_a - odd_emitted_from_a) & 1) sign = -sign;
      }
      out.push_back(fb[j]);
      ++j;
    } else {
      if (is_odd(alg.var(fa[i].var).parity)) return std::nullopt;  // odd square
      out.push_back(Factor{fa[i].var, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  for (; i < fa.size(); ++i) out.push_back(fa[i]);
  for (; j < fb.size(); ++j) out.push_back(fb[j]);  // no odd a-factors remain

  Rational rate = a.exp_rate() + b.exp_rate();
  return std::make_pair(Monomial(std::move(out), std::move(rate)), sign);
}

void derivative_terms(const Monomial& m, int var, const Algebra& alg,
                      std::vector<std::pair<Monomial, Rational>>& out) {
  const Variable& v = alg.var(var);

  const auto& fs = m.factors();
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].var != var) continue;
    std::vector<Factor> rest;
    rest.reserve(fs.size());
    if (is_odd(v.parity)) {
      // Anticommute the factor to the leftmost position, then strip it.
      int crossings = 0;
      for (size_t k = 0; k < i; ++k)
        if (is_odd(alg.var(fs[k].var).parity)) ++crossings;
      for (size_t k = 0; k < fs.size(); ++k)
        if (k != i) rest.push_back(fs[k]);
      out.emplace_back(Monomial(std::move(rest), m.exp_rate()),
                       Rational((crossings & 1) ? -1 : 1));
    } else {
      const int e = fs[i].exp;
      for (size_t k = 0; k < fs.size(); ++k) {
        if (k == i) {
          if (e > 1) rest.push_back(Factor{fs[k].var, e - 1});
        } else {
          rest.push_back(fs[k]);
        }
      }
      out.emplace_back(Monomial(std::move(rest), m.exp_rate()), Rational(e));
    }
    break;
  }

  if (alg.has_line() && var == alg.line_base_index() && m.has_exponential()) {
    out.emplace_back(m, m.exp_rate());
  }
}

}  // namespace oddjacobi
