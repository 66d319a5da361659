#include "arsite/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "arsite/error.hpp"

namespace arsite {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (g > 1) {
    for (auto& c : p) c /= g;
  }
  if (p.back() < 0) {
    for (auto& c : p) c = -c;
  }
}

IntPoly to_primitive_integer(const PolyQ& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.den());
  IntPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.num() * (den / c.den()));
  make_primitive(out);
  return out;
}

// Remainder of a by b up to a nonzero constant factor.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    Integer g = gcd(la, lb);
    Integer ma = lb / g;
    Integer mb = la / g;
    for (auto& c : a) c *= ma;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= mb * b[i];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ({c}); }

PolyQ PolyQ::x() { return PolyQ({Rational(0), Rational(1)}); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> cs(degree + 1);
  cs[degree] = c;
  return PolyQ(std::move(cs));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational PolyQ::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& PolyQ::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> PolyQ::operator()(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_long_double();
  return acc;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) { return *this += -o; }

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::string PolyQ::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PolyQ PolyQ::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  auto fail = [&](const std::string& why) {
    throw ParseError("bad polynomial '" + std::string(text) + "': " + why);
  };
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-' between terms");
    }
    Rational c(1);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      c = Rational::parse(s.substr(i, j - i));
      have_coeff = true;
      i = j;
    }
    std::size_t degree = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'x')) {
      if (s[i] == '*') {
        if (!have_coeff) fail("dangling '*'");
        ++i;
      }
      if (i >= s.size() || s[i] != 'x') fail("expected 'x'");
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected an exponent");
        degree = std::stoul(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      fail("empty term");
    }
    if (degree >= coeffs.size()) coeffs.resize(degree + 1);
    coeffs[degree] += negative ? -c : c;
  }
  return PolyQ(std::move(coeffs));
}

DivMod divmod(const PolyQ& f, const PolyQ& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = f.coeffs();
  const long dg = g.degree();
  if (f.degree() < dg) return {PolyQ(), f};
  std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - dg + 1));
  const Rational inv_lead = Rational(1) / g.leading();
  for (long k = f.degree(); k >= dg; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(k - dg)] = q;
    for (long i = 0; i <= dg; ++i) {
      rem[static_cast<std::size_t>(k - dg + i)] -= q * g.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

bool divides(const PolyQ& g, const PolyQ& f) { return divmod(f, g).remainder.is_zero(); }

PolyQ compose(const PolyQ& f, const PolyQ& g) {
  PolyQ acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= g;
    acc += PolyQ::constant(*it);
  }
  return acc;
}

PolyQ derivative(const PolyQ& f) {
  if (f.degree() < 1) return PolyQ();
  std::vector<Rational> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out[i - 1] = f.coeffs()[i] * Rational(static_cast<long long>(i));
  }
  return PolyQ(std::move(out));
}

PolyQ gcd(const PolyQ& f, const PolyQ& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  // Primitive remainder sequence over Z.
  IntPoly a = to_primitive_integer(f);
  IntPoly b = to_primitive_integer(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rational> cs;
  cs.reserve(a.size());
  for (const auto& c : a) cs.emplace_back(c, a.back());
  return PolyQ(std::move(cs));
}

PolyQ squarefree_part(const PolyQ& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return PolyQ::constant(1);
  return divmod(f, gcd(f, derivative(f))).quotient.monic();
}

Natural root_multiplicity(const PolyQ& f, const Rational& r) {
  if (f.is_zero()) throw DomainError("root multiplicity in the zero polynomial");
  const PolyQ linear({-r, Rational(1)});
  Natural m = 0;
  PolyQ cur = f;
  while (cur.degree() >= 1 && cur(r).is_zero()) {
    cur = divmod(cur, linear).quotient;
    ++m;
  }
  return m;
}

std::vector<PolyQ> squarefree_decomposition(const PolyQ& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<PolyQ> out;
  if (f.degree() == 0) return out;
  PolyQ df = derivative(f);
  PolyQ a = gcd(f, df);
  PolyQ b = divmod(f, a).quotient;
  PolyQ c = divmod(df, a).quotient;
  PolyQ d = c - derivative(b);
  while (b.degree() >= 1) {
    PolyQ g = gcd(b, d);
    out.push_back(g.monic());
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::map<Natural, Natural> root_multiplicity_profile(const PolyQ& f) {
  std::map<Natural, Natural> profile;
  auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() >= 1) profile[i + 1] = static_cast<Natural>(parts[i].degree());
  }
  return profile;
}

}  // namespace arsite
