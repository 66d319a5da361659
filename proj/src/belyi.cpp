#include "arsite/belyi.hpp"

#include <set>

#include "arsite/error.hpp"

namespace arsite {

namespace {

Rational rat(Natural n) { return Rational(static_cast<long long>(n)); }

Integer binomial(Natural n, Natural k) {
  Integer out = 1;
  for (Natural i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

Partition partition_from_profile(const std::map<Natural, Natural>& profile) {
  Partition out;
  for (auto it = profile.rbegin(); it != profile.rend(); ++it) {
    for (Natural c = 0; c < it->second; ++c) out.push_back(it->first);
  }
  return out;
}

}  // namespace

bool is_dynamical_belyi(const PolyQ& p) {
  if (p.degree() < 1) return false;
  if (!p(Rational(0)).is_zero() || p(Rational(1)) != Rational(1)) return false;
  const PolyQ dp = derivative(p);
  if (dp.degree() < 1) return true;
  return divides(squarefree_part(dp), p * (p - PolyQ::constant(1)));
}

BelyiPoly::BelyiPoly(PolyQ p) : poly_(std::move(p)) {
  if (!is_dynamical_belyi(poly_)) throw DomainError(poly_.str() + " is not a dynamical Belyi polynomial");
}

BelyiPoly b_dk(Natural d, Natural k) {
  if (d < 2 || k >= d) {
    throw DomainError("B_{d,k} needs d >= 2 and 0 <= k < d, got d=" + std::to_string(d) +
                      ", k=" + std::to_string(k));
  }
  Rational c(1);
  for (Natural j = 0; j <= k; ++j) c *= rat(d - j);
  Integer k_factorial = 1;
  for (Natural j = 2; j <= k; ++j) k_factorial *= j;
  c /= Rational(k_factorial);
  std::vector<Rational> coeffs(d + 1);
  // a_i multiplies x^{k-i}; the whole bracket is shifted by x^{d-k}.
  for (Natural i = 0; i <= k; ++i) {
    Rational a = Rational(binomial(k, i)) / rat(d - i);
    if ((k - i) % 2 == 1) a = -a;
    coeffs[d - k + (k - i)] = c * a;
  }
  return BelyiPoly(PolyQ(std::move(coeffs)));
}

BelyiPoly belyi_unit() { return BelyiPoly(PolyQ::x()); }

BelyiPoly compose(const BelyiPoly& outer, const BelyiPoly& inner) {
  return BelyiPoly(compose(outer.poly(), inner.poly()));
}

Natural black_count(const BelyiPoly& b) { return static_cast<Natural>(squarefree_part(b.poly()).degree()); }

Natural white_count(const BelyiPoly& b) {
  return static_cast<Natural>(squarefree_part(b.poly() - PolyQ::constant(1)).degree());
}

Natural valency_at(const BelyiPoly& b, int r) {
  if (r == 0) return root_multiplicity(b.poly(), Rational(0));
  if (r == 1) return root_multiplicity(b.poly() - PolyQ::constant(1), Rational(1));
  throw DomainError("valency_at is defined for r in {0, 1}");
}

Passport multiplicity_passport(const BelyiPoly& b) {
  return {partition_from_profile(root_multiplicity_profile(b.poly())),
          partition_from_profile(root_multiplicity_profile(b.poly() - PolyQ::constant(1)))};
}

bool compose_count_check(const BelyiPoly& b, const BelyiPoly& b2) {
  const Natural lhs = black_count(compose(b, b2));
  const Natural rhs = b2.degree() * (black_count(b) - 1) + black_count(b2);
  return lhs == rhs;
}

PicClass beta_class(const BelyiPoly& b) {
  const Natural d = b.degree();
  const Natural blacks = black_count(b);
  if (blacks - 1 >= d) throw DomainError("black vertex count exceeds the degree");
  return PicClass(Rational(1) / rat(d), rat(blacks - 1) / rat(d));
}

ConwayWord beta_word(const BelyiPoly& b) { return class_to_word(beta_class(b)); }

Natural degree_morphism(const BelyiPoly& b) { return b.degree(); }

bool triangle_check(const BelyiPoly& b) { return distance_from_one(beta_class(b)) == b.degree(); }

BelyiPoly involution_poly(const BelyiPoly& b) {
  const PolyQ one_minus_x({Rational(1), Rational(-1)});
  return BelyiPoly(PolyQ::constant(1) - compose(b.poly(), one_minus_x));
}

BelyiPoly evaluate_word(std::span<const BelyiPoly> generators, const BelyiWord& w) {
  PolyQ acc = PolyQ::x();
  for (std::size_t idx : w) {
    if (idx >= generators.size()) throw DomainError("generator index out of range");
    acc = compose(acc, generators[idx].poly());
  }
  return BelyiPoly(std::move(acc));
}

bool free_check(std::span<const BelyiPoly> generators, std::size_t maxlen) {
  if (generators.empty()) throw DomainError("free_check needs generators");
  // Level-by-level: the composites of words of length L extend those of L-1.
  std::vector<PolyQ> level{PolyQ::x()};
  std::set<std::pair<long, std::vector<std::string>>> seen;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<PolyQ> next;
    next.reserve(level.size() * generators.size());
    for (const PolyQ& prefix : level) {
      for (const BelyiPoly& g : generators) {
        PolyQ p = compose(prefix, g.poly());
        std::vector<std::string> key;
        key.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) key.push_back(c.str());
        if (!seen.emplace(p.degree(), std::move(key)).second) return false;
        next.push_back(std::move(p));
      }
    }
    level = std::move(next);
  }
  return true;
}

std::vector<RealizedDessin> example_path_dessins() {
  auto path = [](std::size_t frame_black, std::size_t frame_white) {
    FramedDessin d{3, {1, 0, 2}, {0, 2, 1}, frame_black, frame_white};
    validate(d);
    return d;
  };
  return {
      {path(0, 1), BelyiPoly(PolyQ::parse("-2*x^3+3*x^2"))},
      {path(0, 0), BelyiPoly(PolyQ::parse("1/4*x^3+3/4*x^2"))},
      {path(2, 1), BelyiPoly(PolyQ::parse("1/4*x^3-3/2*x^2+9/4*x"))},
      {path(2, 0), BelyiPoly(PolyQ::parse("16*x^3-24*x^2+9*x"))},
  };
}

}  // namespace arsite
