#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arsite/rational.hpp"

namespace arsite {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading coefficient is
// nonzero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);

  static PolyQ constant(const Rational& c);
  static PolyQ x();
  static PolyQ monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  std::complex<long double> operator()(std::complex<long double> z) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

  PolyQ monic() const;

  std::string str() const;
  static PolyQ parse(std::string_view text);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  PolyQ quotient;
  PolyQ remainder;
};

// Throws DomainError when dividing by the zero polynomial.
DivMod divmod(const PolyQ& f, const PolyQ& g);

bool divides(const PolyQ& g, const PolyQ& f);

// f(g(x)).
PolyQ compose(const PolyQ& f, const PolyQ& g);

PolyQ derivative(const PolyQ& f);

// Monic gcd. gcd(f, 0) = monic(f); gcd(0, 0) throws DomainError.
PolyQ gcd(const PolyQ& f, const PolyQ& g);

// f / gcd(f, f'), monic.
PolyQ squarefree_part(const PolyQ& f);

// Largest m with (x - r)^m | f. Throws DomainError for f = 0.
Natural root_multiplicity(const PolyQ& f, const Rational& r);

// Yun's decomposition: result[i] is the monic product of the distinct
// linear factors (over C) of multiplicity i + 1.
std::vector<PolyQ> squarefree_decomposition(const PolyQ& f);

// Multiset of multiplicities of the complex roots of f, as multiplicity ->
// number of distinct roots with that multiplicity.
std::map<Natural, Natural> root_multiplicity_profile(const PolyQ& f);

}  // namespace arsite
