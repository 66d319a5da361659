#include "printers.hpp"

#include <random>

#include "arsite/error.hpp"
#include "arsite/supernatural.hpp"

using namespace arsite;

namespace {

Supernatural sn(const char* text) { return Supernatural::parse(text); }

// Oracle for valuations: repeated division.
Exponent valuation(Natural n, Natural p) {
  Exponent e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Supernatural random_supernatural(std::mt19937_64& rng) {
  static const Natural primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> exp(0, 4);  // 4 means infinity
  std::uniform_int_distribution<int> def(0, 5);
  std::map<Natural, Exponent> m;
  for (Natural p : primes) {
    const int e = exp(rng);
    m[p] = e == 4 ? kInfinity : static_cast<Exponent>(e);
  }
  const int d = def(rng);
  return Supernatural(m, d == 5 ? kInfinity : (d == 4 ? 1 : 0));
}

}  // namespace

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));
  for (Natural n = 1; n < 500; ++n) {
    Natural back = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(e == valuation(n, p));
      for (Exponent i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == n);
  }
}

TEST_CASE("from_chain examples") {
  const std::vector<Natural> c1{2, 4, 12};
  CHECK(Supernatural::from_chain(c1) == Supernatural(12));
  CHECK(Supernatural::from_chain(c1).str() == "2^2*3");
  const std::vector<Natural> c2{1};
  CHECK(Supernatural::from_chain(c2) == Supernatural());
  const std::vector<Natural> c3{2, 4, 8, 16};
  CHECK(Supernatural::from_chain(c3) == Supernatural(16));
  CHECK(Supernatural::from_chain(c3, 1) == sn("2^inf"));
  CHECK(Supernatural::from_chain(c1, 1) == sn("2^2*3^inf"));
  CHECK(Supernatural::from_chain(c1, 3) == sn("2^inf*3^inf"));
}

TEST_CASE("from_chain errors") {
  const std::vector<Natural> bad{2, 6, 9};
  CHECK_THROWS_WITH_AS(Supernatural::from_chain(bad), doctest::Contains("6"), DomainError);
  CHECK_THROWS_WITH_AS(Supernatural::from_chain(bad), doctest::Contains("9"), DomainError);
  CHECK_THROWS_AS(Supernatural::from_chain(std::vector<Natural>{}), DomainError);
  CHECK_THROWS_AS(Supernatural::from_chain(std::vector<Natural>{0}), DomainError);
  // A repeating block that multiplies by 1 does not describe a limit.
  CHECK_THROWS_AS(Supernatural::from_chain(std::vector<Natural>{2, 2}, 1), DomainError);
}

TEST_CASE("from_chain is the exponent-wise supremum") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Natural> step(1, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<Natural> chain{step(rng)};
    for (int i = 0; i < 4; ++i) chain.push_back(chain.back() * step(rng));
    const Supernatural s = Supernatural::from_chain(chain);
    for (Natural p : {2, 3, 5, 7, 11}) {
      Exponent best = 0;
      for (Natural n : chain) best = std::max(best, valuation(n, p));
      CHECK(s.exponent(p) == best);
    }
    // Monotone under extension.
    auto longer = chain;
    longer.push_back(chain.back() * step(rng));
    CHECK(divides(s, Supernatural::from_chain(longer)));
  }
}

TEST_CASE("mul, lcm, divides examples") {
  CHECK(divides(12, sn("2^inf*3")));
  CHECK(lcm(sn("2^inf"), sn("3^2")) == sn("2^inf*3^2"));
  CHECK(mul(sn("2^inf"), sn("2")) == sn("2^inf"));
  CHECK_FALSE(divides(9, sn("2^inf*3")));
  CHECK(divides(sn("3"), sn("[default=1]")));
  CHECK(mul(sn("2"), sn("3")) == Supernatural(6));
}

TEST_CASE("text format") {
  CHECK(sn("2^inf*3^2").str() == "2^inf*3^2");
  CHECK(sn("2^inf*3^2*[default=0]").str() == "2^inf*3^2");
  CHECK(sn("12").str() == "2^2*3");
  CHECK(sn("1").str() == "1");
  CHECK(sn("[default=inf]").str() == "[default=inf]");
  CHECK(sn("2^0*[default=1]").str() == "2^0*[default=1]");
  CHECK(sn("6^2") == Supernatural(36));
  CHECK_THROWS_AS(sn("2^"), ParseError);
  CHECK_THROWS_AS(sn("x"), ParseError);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const Supernatural s = random_supernatural(rng);
    CHECK(Supernatural::parse(s.str()) == s);
  }
}

TEST_CASE("in_open examples") {
  const std::vector<Natural> g1{6, 4};
  CHECK(in_open(sn("2^inf"), g1));
  const std::vector<Natural> g2{2};
  CHECK_FALSE(in_open(sn("3^inf"), g2));
  const std::vector<Natural> g3{1};
  CHECK(in_open(Supernatural(), g3));
  CHECK_THROWS_AS(in_open(Supernatural(), std::vector<Natural>{}), DomainError);
}

TEST_CASE("adele_class_equiv examples") {
  CHECK(adele_class_equiv(sn("2^inf*3"), sn("2^inf")));
  CHECK_FALSE(adele_class_equiv(sn("2^inf"), sn("3^inf")));
  for (Natural a = 1; a < 30; ++a) {
    for (Natural b = 1; b < 30; ++b) CHECK(adele_class_equiv(Supernatural(a), Supernatural(b)));
  }
  CHECK(stable_iso(Supernatural(7), Supernatural()));
  CHECK_FALSE(adele_class_equiv(sn("[default=1]"), Supernatural()));
  CHECK(adele_class_equiv(sn("[default=1]"), sn("2^3*5^0*[default=1]")));
}

TEST_CASE("semigroup laws and equivalence relation on random values") {
  // Oracle for equivalence: n·s = m·t with n, m found by search over the
  // exponent differences, which must be finite.
  auto equiv_oracle = [](const Supernatural& s, const Supernatural& t) {
    if (s.default_exponent() != t.default_exponent()) return false;
    for (Natural p : {2, 3, 5, 7}) {
      const Exponent a = s.exponent(p), b = t.exponent(p);
      if (a != b && (a == kInfinity || b == kInfinity)) return false;
    }
    return true;
  };
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_supernatural(rng), b = random_supernatural(rng), c = random_supernatural(rng);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, mul(b, c)) == mul(mul(a, b), c));
    CHECK(lcm(a, b) == lcm(b, a));
    CHECK(lcm(a, lcm(b, c)) == lcm(lcm(a, b), c));
    CHECK(lcm(a, a) == a);
    CHECK(divides(a, a));
    CHECK(divides(a, lcm(a, b)));
    CHECK(divides(a, mul(a, b)));
    if (divides(a, b) && divides(b, a)) CHECK(a == b);
    if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
    CHECK(adele_class_equiv(a, a));
    CHECK(adele_class_equiv(a, b) == adele_class_equiv(b, a));
    if (adele_class_equiv(a, b) && adele_class_equiv(b, c)) CHECK(adele_class_equiv(a, c));
    CHECK(adele_class_equiv(a, b) == equiv_oracle(a, b));
    CHECK(adele_class_equiv(a, mul(a, Supernatural(12))));
  }
}
