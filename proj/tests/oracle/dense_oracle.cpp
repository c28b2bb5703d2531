#include "oracle/dense_oracle.hpp"

#include <algorithm>
#include <cstddef>

namespace dense {

bool is_zero(const Poly& p) { return p.empty(); }

namespace {

void accumulate(Poly& p, const Word& w, const Rational& c) {
  if (oddjacobi::is_zero(c)) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
    return;
  }
  it->second += c;
  if (oddjacobi::is_zero(it->second)) p.erase(it);
}

}  // namespace

Poly monomial(const Space& s, Word word, const Rational& coeff) {
  // Stable insertion sort, flipping the sign whenever two odd variables
  // trade places. Equal entries never swap, so repeated odd variables end
  // up adjacent and are caught afterwards.
  int sign = 1;
  for (size_t i = 1; i < word.size(); ++i) {
    const int v = word[i];
    size_t j = i;
    while (j > 0 && word[j - 1] > v) {
      if (s.odd(v) && s.odd(word[j - 1])) sign = -sign;
      word[j] = word[j - 1];
      --j;
    }
    word[j] = v;
  }
  for (size_t i = 1; i < word.size(); ++i)
    if (word[i] == word[i - 1] && s.odd(word[i])) return {};
  Poly out;
  accumulate(out, word, Rational(sign) * coeff);
  return out;
}

Poly add(Poly a, const Poly& b) {
  for (const auto& [w, c] : b) accumulate(a, w, c);
  return a;
}

Poly sub(Poly a, const Poly& b) {
  for (const auto& [w, c] : b) accumulate(a, w, -c);
  return a;
}

Poly scale(const Rational& c, Poly p) {
  if (oddjacobi::is_zero(c)) return {};
  for (auto& [w, coeff] : p) coeff *= c;
  return p;
}

Poly mul(const Space& s, const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word joined = wa;
      joined.insert(joined.end(), wb.begin(), wb.end());
      out = add(std::move(out), monomial(s, std::move(joined), ca * cb));
    }
  }
  return out;
}

Poly derivative(const Space& s, const Poly& p, int var) {
  Poly out;
  for (const auto& [w, c] : p) {
    const auto first = std::find(w.begin(), w.end(), var);
    if (first == w.end()) continue;
    Word rest;
    rest.reserve(w.size() - 1);
    bool removed = false;
    for (int v : w) {
      if (!removed && v == var) {
        removed = true;
        continue;
      }
      rest.push_back(v);
    }
    if (s.odd(var)) {
      // Left derivative: walk past every odd factor in front of `var`.
      int sign = 1;
      for (auto it = w.begin(); it != first; ++it)
        if (s.odd(*it)) sign = -sign;
      accumulate(out, rest, Rational(sign) * c);
    } else {
      const auto multiplicity =
          static_cast<long>(std::count(w.begin(), w.end(), var));
      accumulate(out, rest, Rational(multiplicity) * c);
    }
  }
  return out;
}

namespace {

int word_parity(const Space& s, const Word& w) {
  int odd_count = 0;
  for (int v : w)
    if (s.odd(v)) ++odd_count;
  return odd_count & 1;
}

Poly parity_part(const Space& s, const Poly& p, int parity) {
  Poly out;
  for (const auto& [w, c] : p)
    if (word_parity(s, w) == parity) out.emplace(w, c);
  return out;
}

}  // namespace

Poly poisson(const Space& s, const Poly& f, const Poly& g) {
  Poly out;
  for (int fp : {0, 1}) {
    const Poly fc = parity_part(s, f, fp);
    if (fc.empty()) continue;
    for (int a = 0; a < s.n; ++a) {
      const int pa = a + s.n;
      // (-1)^{A(f+1)} df/dp_A dg/dx^A - (-1)^{Af} df/dx^A dg/dp_A.
      const int s1 = (s.odd(a) && fp == 0) ? -1 : 1;
      const int s2 = (s.odd(a) && fp == 1) ? -1 : 1;
      const Poly t1 = mul(s, derivative(s, fc, pa), derivative(s, g, a));
      const Poly t2 = mul(s, derivative(s, fc, a), derivative(s, g, pa));
      out = add(std::move(out), scale(Rational(s1), t1));
      out = sub(std::move(out), scale(Rational(s2), t2));
    }
  }
  return out;
}

oddjacobi::SuperPoly to_engine(const Poly& p, const oddjacobi::AlgebraPtr& alg) {
  oddjacobi::SuperPoly out(alg);
  for (const auto& [w, c] : p) {
    std::vector<oddjacobi::Factor> factors;
    for (int v : w) {
      if (!factors.empty() && factors.back().var == v)
        ++factors.back().exp;
      else
        factors.push_back({v, 1});
    }
    out += oddjacobi::SuperPoly::from_monomial(
        alg, oddjacobi::Monomial(std::move(factors), Rational(0)), c);
  }
  return out;
}

namespace {

void extend_words(const Space& s, const Word& prefix, int min_var, int remaining,
                  std::vector<Word>& out) {
  out.push_back(prefix);
  if (remaining == 0) return;
  for (int v = min_var; v < 2 * s.n; ++v) {
    if (s.odd(v) && !prefix.empty() && prefix.back() == v) continue;
    Word next = prefix;
    next.push_back(v);
    // Recursing with min_var = v keeps words weakly increasing, so each
    // canonical word is produced exactly once.
    extend_words(s, next, v, remaining - 1, out);
  }
}

}  // namespace

std::vector<Word> all_words(const Space& s, int max_degree) {
  std::vector<Word> raw;
  extend_words(s, {}, 0, max_degree, raw);
  std::sort(raw.begin(), raw.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

}  // namespace dense
