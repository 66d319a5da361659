#include "printers.hpp"

#include <random>

#include "arsite/bost_connes.hpp"
#include "arsite/error.hpp"
#include "arsite/supernatural.hpp"

using namespace arsite;

namespace {

QZElement qz(long long a, long long b) { return QZElement(a, b); }

Letter L(Natural p, Natural i) { return make_letter(p, i); }

// A datum whose section forgets to divide: conditions must catch it.
class BrokenSection final : public BCDatum {
 public:
  QZElement sigma(Natural n, const QZElement& x) const override { return qz_datum().sigma(n, x); }
  QZElement section(Natural, const QZElement& x) const override { return x; }
  std::vector<QZElement> kernel(Natural n) const override { return qz_datum().kernel(n); }
};

// A datum listing the kernel in the wrong order.
class ShuffledKernel final : public BCDatum {
 public:
  QZElement sigma(Natural n, const QZElement& x) const override { return qz_datum().sigma(n, x); }
  QZElement section(Natural n, const QZElement& x) const override { return qz_datum().section(n, x); }
  std::vector<QZElement> kernel(Natural n) const override {
    auto k = qz_datum().kernel(n);
    if (k.size() > 2) std::swap(k[1], k[2]);
    return k;
  }
};

// A datum listing only part of the kernel.
class MissingKernel final : public BCDatum {
 public:
  QZElement sigma(Natural n, const QZElement& x) const override { return qz_datum().sigma(n, x); }
  QZElement section(Natural n, const QZElement& x) const override { return qz_datum().section(n, x); }
  std::vector<QZElement> kernel(Natural n) const override {
    auto k = qz_datum().kernel(n);
    k.pop_back();
    return k;
  }
};

// Oracle: a free letter acts by x -> (x + i)/p on the representative in [0, 1).
QZElement free_action(const Letter& l, const QZElement& x) {
  return QZElement((x.value() + Rational(Integer(l.i))) / Rational(Integer(l.p)));
}

}  // namespace

TEST_CASE("Q/Z elements") {
  CHECK(qz(5, 4) == qz(1, 4));
  CHECK(qz(-1, 3) == qz(2, 3));
  CHECK(qz(1, 2) + qz(1, 2) == QZElement());
  CHECK(qz(1, 3) - qz(2, 3) == qz(2, 3));
  CHECK(QZElement::parse("7/6") == qz(1, 6));
  CHECK(qz(2, 6).str() == "1/3");
  CHECK(qz(2, 6).denominator() == 3);
  CHECK(level(4) == std::vector<QZElement>{qz(0, 1), qz(1, 4), qz(1, 2), qz(3, 4)});
  CHECK_THROWS_AS(level(0), DomainError);
}

TEST_CASE("the Q/Z datum") {
  const QZDatum& d = qz_datum();
  CHECK(d.sigma(3, qz(1, 2)) == qz(1, 2));
  CHECK(d.sigma(2, qz(1, 6)) == qz(1, 3));
  CHECK(d.section(2, qz(2, 3)) == qz(1, 3));
  CHECK(d.kernel(3) == std::vector<QZElement>{qz(0, 1), qz(1, 3), qz(2, 3)});
  for (Natural n = 1; n <= 12; ++n) {
    for (Natural i = 0; i < n; ++i) CHECK(d.kernel_element(n, i) == d.kernel(n)[i]);
  }
  CHECK(ShuffledKernel().kernel_element(5, 1) == qz(2, 5));
  for (Natural n = 1; n <= 12; ++n) {
    for (const auto& x : level(12)) CHECK(d.sigma(n, d.section(n, x)) == x);
  }
}

TEST_CASE("endomorphism conditions") {
  for (Natural n = 1; n <= 8; ++n) {
    for (Natural m = 1; m <= 8; ++m) CHECK(check_endomorphisms(n, m, 24).ok);
  }
  CHECK_FALSE(check_endomorphisms(2, 3, 12, BrokenSection()).ok);
}

TEST_CASE("condition 3 examples") {
  auto r = check_condition3(1);
  CHECK(r.ok);
  CHECK(qz_datum().kernel(1) == std::vector<QZElement>{QZElement()});
  r = check_condition3(6);
  CHECK(r.ok);
  CHECK(qz_datum().kernel(6) ==
        std::vector<QZElement>{qz(0, 1), qz(1, 6), qz(1, 3), qz(1, 2), qz(2, 3), qz(5, 6)});
  CHECK(check_condition3(7).ok);
  CHECK(qz_datum().kernel(7).size() == 7);
  CHECK(check_condition3(6, ShuffledKernel()).ok);
  CHECK_FALSE(check_condition3(6, MissingKernel()).ok);
  CHECK_THROWS_AS(check_condition3(0), DomainError);
}

TEST_CASE("condition 3 against a brute-force kernel") {
  for (Natural n = 1; n <= 30; ++n) {
    CHECK(check_condition3(n).ok);
    // Oracle: x in (1/n^2)Z/Z with n·x = 0.
    std::vector<QZElement> kernel;
    for (Natural a = 0; a < n * n; ++a) {
      const QZElement x(static_cast<long long>(a), static_cast<long long>(n * n));
      if (QZElement(x.value() * Rational(Integer(n))) == QZElement()) kernel.push_back(x);
    }
    CHECK(kernel == qz_datum().kernel(n));
  }
}

TEST_CASE("condition 4") {
  CHECK(check_condition4(2, 3).ok);
  CHECK(check_condition4(4, 5).ok);
  CHECK(check_condition4(4, 5).cells == 20);
  CHECK(check_condition4(1, 7).ok);
  for (Natural n = 1; n <= 30; ++n) {
    for (Natural m = 1; m <= 30; m += 7) CHECK(check_condition4(n, m).ok);
  }
  CHECK_FALSE(check_condition4(2, 4, BrokenSection()).ok);
}

TEST_CASE("condition 5") {
  const auto r = check_condition5(2, 3);
  CHECK(r.ok);
  CHECK(r.to_json() == R"({"condition":5,"p":2,"q":3,"ok":true,"cells":6})");
  // i = 1, j = 2: 1·3 + 2 = 2·2 + 1 and both sides are 5/6.
  CHECK(qz_datum().section(2, qz(2, 3)) + qz(1, 2) == qz(5, 6));
  CHECK(qz_datum().section(3, qz(1, 2)) + qz(2, 3) == qz(5, 6));
  const Natural primes[] = {2, 3, 5, 7, 11, 13};
  for (Natural p : primes) {
    for (Natural q : primes) {
      if (p == q) continue;
      const auto report = check_condition5(p, q);
      CHECK(report.ok);
      CHECK(report.cells == p * q);
    }
  }
  CHECK_THROWS_AS(check_condition5(2, 2), DomainError);
  CHECK_THROWS_AS(check_condition5(4, 3), DomainError);
  CHECK_FALSE(check_condition5(2, 3, BrokenSection()).ok);
  CHECK_FALSE(check_condition5(3, 5, ShuffledKernel()).ok);
}

TEST_CASE("operators") {
  CHECK(apply_operator(L(2, 1), qz(1, 3)) == qz(2, 3));
  CHECK(apply_operator(L(2, 2), qz(1, 6)) == qz(1, 3));
  CHECK(apply_operator(L(3, 0), QZElement()) == QZElement());
  CHECK(rho(2, qz(1, 3)) == std::set<QZElement>{qz(1, 6), qz(2, 3)});
  for (Natural p : {2, 3, 5, 7}) {
    for (const auto& x : level(12)) {
      // Oracle: all y in (1/(p b))Z/Z with p·y = x.
      std::set<QZElement> preimages;
      const Natural b = x.denominator();
      for (const auto& y : level(p * b)) {
        if (QZElement(y.value() * Rational(Integer(p))) == x) preimages.insert(y);
      }
      CHECK(rho(p, x) == preimages);
      for (Natural i = 0; i < p; ++i) CHECK(apply_operator(L(p, i), x) == free_action(L(p, i), x));
      CHECK(apply_operator(L(p, p), x) == QZElement(x.value() * Rational(Integer(p))));
    }
  }
}

TEST_CASE("operators respect meta-commutation") {
  const Natural primes[] = {2, 3, 5, 7};
  for (Natural p : primes) {
    for (Natural q : primes) {
      if (p == q) continue;
      for (Natural i = 0; i < p; ++i) {
        for (Natural j = 0; j < q; ++j) {
          const auto ex = meta_commute(L(p, i), L(q, j));
          CHECK(ex.translation == 0);
          for (Natural n = 1; n <= 30; ++n) {
            for (const auto& x : level(n)) {
              CHECK(apply_operator(L(p, i), apply_operator(L(q, j), x)) ==
                    apply_operator(ex.left, apply_operator(ex.right, x)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("presheaf values") {
  const auto five = level(5);
  auto v = presheaf_value({}, 5);
  CHECK(v.level == 5);
  CHECK(v.elements == std::set<QZElement>(five.begin(), five.end()));
  v = presheaf_value({L(2, 1)}, 3);
  CHECK(v.elements == std::set<QZElement>{qz(1, 2), qz(2, 3), qz(5, 6)});
  CHECK(v.level == 6);
  // σ_p is onto, so a power block keeps the whole level.
  const auto three = level(3);
  v = presheaf_value({L(2, 2)}, 3);
  CHECK(v.elements == std::set<QZElement>(three.begin(), three.end()));
  CHECK(v.level == 3);
  CHECK_THROWS_AS(presheaf_value({}, 0), DomainError);
}

TEST_CASE("presheaf values compose") {
  std::mt19937_64 rng(61);
  const Natural primes[] = {2, 3, 5};
  auto random_free = [&](std::size_t max_len) {
    ConwayWord w(rng() % (max_len + 1));
    for (auto& l : w) {
      const Natural p = primes[rng() % 3];
      l = L(p, rng() % p);
    }
    return normalize(w);
  };
  for (int t = 0; t < 200; ++t) {
    const ConwayWord x = random_free(3), z = random_free(2);
    const Natural n = 1 + rng() % 12;
    const PresheafValue vx = presheaf_value(x, n);
    CHECK(vx.elements.size() == n);
    CHECK(vx.level == n * delta(x));
    for (const auto& e : vx.elements) CHECK(divides(e.denominator(), Supernatural(vx.level)));
    // Oracle: the letters of z applied rightmost first.
    std::set<QZElement> expected;
    for (QZElement e : vx.elements) {
      for (auto it = z.rbegin(); it != z.rend(); ++it) e = free_action(*it, e);
      expected.insert(e);
    }
    CHECK(presheaf_value(mul(z, x), n).elements == expected);
  }
}
