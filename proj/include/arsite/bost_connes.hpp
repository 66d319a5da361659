#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arsite/conway.hpp"
#include "arsite/rational.hpp"

namespace arsite {

// An element a/b of Q/Z with 0 <= a < b, gcd(a, b) = 1.
class QZElement {
 public:
  QZElement() = default;
  explicit QZElement(const Rational& value) : value_(value.frac()) {}
  QZElement(long long a, long long b) : value_(Rational(a, b).frac()) {}

  const Rational& value() const { return value_; }
  Natural numerator() const { return to_natural(value_.num()); }
  Natural denominator() const { return to_natural(value_.den()); }

  friend QZElement operator+(const QZElement& x, const QZElement& y) { return QZElement(x.value_ + y.value_); }
  friend QZElement operator-(const QZElement& x, const QZElement& y) { return QZElement(x.value_ - y.value_); }
  friend bool operator==(const QZElement&, const QZElement&) = default;
  friend auto operator<=>(const QZElement& x, const QZElement& y) { return x.value_ <=> y.value_; }

  std::string str() const { return value_.str(); }
  static QZElement parse(std::string_view text) { return QZElement(Rational::parse(text)); }

 private:
  Rational value_;
};

// (1/N)Z/Z.
std::vector<QZElement> level(Natural n);

// A Bost–Connes datum (Σ, σ_n) with the sections s_n and the enumerated
// kernels C_n = {x_{0,n} = 0, x_{1,n}, ..., x_{n-1,n}}.
class BCDatum {
 public:
  virtual ~BCDatum() = default;
  virtual QZElement sigma(Natural n, const QZElement& x) const = 0;
  virtual QZElement section(Natural n, const QZElement& x) const = 0;
  virtual std::vector<QZElement> kernel(Natural n) const = 0;
  // x_{i,n}.
  virtual QZElement kernel_element(Natural n, Natural i) const { return kernel(n).at(i); }
};

// Σ = Q/Z with σ_n(a/b) = na/b, s_n(a/b) = a/(nb), x_{i,n} = i/n.
class QZDatum final : public BCDatum {
 public:
  QZElement sigma(Natural n, const QZElement& x) const override;
  QZElement section(Natural n, const QZElement& x) const override;
  std::vector<QZElement> kernel(Natural n) const override;
  QZElement kernel_element(Natural n, Natural i) const override;
};

const QZDatum& qz_datum();

struct ConditionReport {
  int condition = 0;
  bool ok = false;
  Natural cells = 0;  // number of individual identities checked
  std::string detail;

  // e.g. {"condition": 5, "p":2, "q":3, "ok": true, "cells": 6}
  std::string to_json() const;
  std::vector<std::pair<std::string, Natural>> params;
};

// Conditions (1)-(2) on (1/N)Z/Z: σ_n additive, σ_n∘σ_m = σ_{nm},
// σ_n∘σ_m = σ_m∘σ_n, s_n∘s_m = s_m∘s_n, σ_n∘s_n = id, and s_n∘σ_m ≡ σ_m∘s_n
// modulo C_n.
ConditionReport check_endomorphisms(Natural n, Natural m, Natural level_n, const BCDatum& datum = qz_datum());
// ker σ_n, found by brute force inside (1/(n·n))Z/Z, is cyclic of order n
// and matches the datum's enumeration.
ConditionReport check_condition3(Natural n, const BCDatum& datum = qz_datum());
// Each element of (1/(nM))Z/Z is uniquely x_{k,n} + s_n(y) with y ∈ (1/M)Z/Z.
ConditionReport check_condition4(Natural n, Natural m, const BCDatum& datum = qz_datum());
// For primes p != q and all i < p, j < q with iq + j = lp + k:
// s_p(x_{j,q}) + x_{i,p} = s_q(x_{k,p}) + x_{l,q} and σ_p(x_{j,q}) = x_{pj mod q, q}.
ConditionReport check_condition5(Natural p, Natural q, const BCDatum& datum = qz_datum());

// 𝒫_i·x = s_p(x) + x_{i,p}; 𝒫_p·x = σ_p(x).
QZElement apply_operator(const Letter& l, const QZElement& x, const BCDatum& datum = qz_datum());
// {𝒫_0·x, ..., 𝒫_{p-1}·x}: the σ_p-preimages of x.
std::set<QZElement> rho(Natural p, const QZElement& x, const BCDatum& datum = qz_datum());

struct PresheafValue {
  std::set<QZElement> elements;
  Natural level = 1;  // elements lie in (1/level)Z/Z
};

// S_Σ(X) truncated at level N: the free letters of the normal word X applied
// (rightmost first) to Σ_{K_X} ∩ (1/N)Z/Z, which is all of (1/N)Z/Z here.
PresheafValue presheaf_value(const ConwayWord& x, Natural level_n, const BCDatum& datum = qz_datum());

}  // namespace arsite
