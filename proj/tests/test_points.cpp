#include "printers.hpp"

#include <random>

#include "arsite/error.hpp"
#include "arsite/points.hpp"

using namespace arsite;

namespace {

Letter L(Natural p, Natural i) { return make_letter(p, i); }

using Nats = std::vector<Natural>;

TruncatedChain A(Nats entries, std::size_t period = 0) { return TruncatedChain::arithmetic(std::move(entries), period); }

TruncatedChain random_arithmetic(std::mt19937_64& rng, bool allow_periodic) {
  static const Natural steps[] = {1, 2, 3, 4, 5, 6};
  Nats entries{1 + rng() % 6};
  const std::size_t len = 1 + rng() % 3;
  while (entries.size() < len) entries.push_back(entries.back() * steps[rng() % 6]);
  std::size_t period = 0;
  if (allow_periodic && rng() % 2 == 0) {
    // Append a nontrivial repeating block.
    entries.push_back(entries.back() * steps[1 + rng() % 5]);
    period = 1 + rng() % std::min<std::size_t>(2, entries.size());
    if (entries.back() == (period == entries.size() ? 1 : entries[entries.size() - 1 - period])) period = 1;
  }
  return A(entries, period);
}

TruncatedChain random_conway(std::mt19937_64& rng) {
  static const Natural primes[] = {2, 3};
  std::vector<ConwayWord> entries;
  ConwayWord cur;
  const std::size_t len = 1 + rng() % 3;
  for (std::size_t k = 0; k < len; ++k) {
    ConwayWord step(rng() % 3);
    for (auto& l : step) {
      const Natural p = primes[rng() % 2];
      l = L(p, rng() % p);
    }
    cur = mul(step, cur);
    entries.push_back(cur);
  }
  return TruncatedChain::conway(entries);
}

std::vector<BelyiPoly> gens() { return {b_dk(2, 0), b_dk(3, 1), belyi_unit()}; }

}  // namespace

TEST_CASE("chain_equiv examples") {
  CHECK(chain_equiv(A({2, 4, 8}), A({4, 8})));
  CHECK_FALSE(chain_equiv(A({2, 4}), A({3, 9})));
  const TruncatedChain c1 = TruncatedChain::conway({{L(2, 0)}, {L(2, 0), L(2, 0)}});
  const TruncatedChain c2 = TruncatedChain::conway({{L(2, 0), L(2, 0)}});
  CHECK(chain_equiv(c1, c2));
  CHECK_FALSE(chain_equiv(c1, TruncatedChain::conway({{L(2, 1), L(2, 0)}})));
  CHECK_THROWS_AS(chain_equiv(c1, A({2})), DomainError);
}

TEST_CASE("tail_equiv examples") {
  CHECK(tail_equiv(A({2, 4, 8}), A({12, 24})));
  CHECK(tail_equiv(A({2, 4}), A({3})));
  const TruncatedChain periodic = TruncatedChain::conway({{L(2, 1)}, {L(3, 2), L(2, 1)}}, 2);
  CHECK(tail_equiv(periodic, tail(periodic, 1)));
  CHECK(tail_equiv(periodic, tail(periodic, 2)));
  // 2^inf against 3^inf.
  CHECK_FALSE(tail_equiv(A({2}, 1), A({3}, 1)));
  CHECK(tail_equiv(A({2}, 1), A({3, 6}, 1)));
  CHECK_FALSE(chain_equiv(A({2}, 1), A({3, 6}, 1)));
  CHECK_FALSE(tail_equiv(A({2}, 1), A({2})));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(A({2, 3}), DomainError);
  CHECK_THROWS_AS(A({0}), DomainError);
  CHECK_THROWS_AS(A({2, 2}, 1), DomainError);
  CHECK_THROWS_AS(A({2}, 2), DomainError);
  CHECK_THROWS_AS(TruncatedChain::conway({{L(2, 0)}, {L(3, 0)}}), DomainError);
  CHECK_THROWS_AS(TruncatedChain::conway({{L(2, 2)}}), DomainError);
  CHECK_THROWS_AS(TruncatedChain::belyi(gens(), {{0, 1}, {1}}), DomainError);
  CHECK_THROWS_AS(TruncatedChain::belyi(gens(), {{5}}), DomainError);
  CHECK_THROWS_AS(TruncatedChain::belyi({}, {{0}}), DomainError);
}

TEST_CASE("project examples") {
  const TruncatedChain c = TruncatedChain::conway({{L(2, 0)}, {L(2, 1), L(2, 0)}});
  CHECK(project(c) == A({2, 4}));
  const TruncatedChain b = TruncatedChain::belyi(gens(), {{1}, {1, 1}});
  CHECK(project(b) == A({3, 9}));
  CHECK(project(A({2, 4})) == A({2, 4}));
  // A block of the unit projects to a finite point.
  const TruncatedChain units = TruncatedChain::belyi(gens(), {{1}, {1, 2}}, 1);
  CHECK_FALSE(project(units).is_periodic());
  CHECK(project(TruncatedChain::belyi(gens(), {{0}}, 1)) == A({2}, 1));
}

TEST_CASE("supernaturals and basic opens") {
  CHECK(chain_to_supernatural(A({2, 4, 12})) == Supernatural(12));
  CHECK(chain_to_supernatural(A({2, 4}, 1)) == Supernatural::parse("2^inf"));
  CHECK_THROWS_AS(chain_to_supernatural(TruncatedChain::belyi(gens(), {{0}})), DomainError);
  CHECK(in_basic_open(A({2, 4}), Natural{4}));
  CHECK_FALSE(in_basic_open(A({2, 4}), Natural{8}));
  CHECK(in_basic_open(A({2, 4}, 1), Natural{1024}));
  const TruncatedChain c = TruncatedChain::conway({{L(2, 1)}}, 1);
  CHECK(in_basic_open(c, ConwayWord{L(2, 1), L(2, 1), L(2, 1)}));
  CHECK_FALSE(in_basic_open(c, ConwayWord{L(2, 0)}));
  const TruncatedChain b = TruncatedChain::belyi(gens(), {{0}, {0, 1}}, 1);
  CHECK(in_basic_open(b, BelyiWord{0, 1, 1, 1}));
  CHECK_FALSE(in_basic_open(b, BelyiWord{1}));
  CHECK_THROWS_AS(in_basic_open(b, Natural{2}), DomainError);
}

TEST_CASE("tail and unroll") {
  CHECK(tail(A({2, 4, 12}), 1) == A({2, 6}));
  CHECK(tail(A({2, 4}), 2) == A({1}));
  CHECK(unroll(A({2, 6}, 1), 2) == A({2, 6, 18, 54}, 1));
  CHECK_THROWS_AS(unroll(A({2}), 1), DomainError);
  CHECK_THROWS_AS(tail(A({2}), 2), DomainError);
  const TruncatedChain b = TruncatedChain::belyi(gens(), {{0}, {0, 1}}, 1);
  CHECK(unroll(b, 1).belyi_words.back() == BelyiWord{0, 1, 1});
  CHECK(tail(b, 1).belyi_words.front() == BelyiWord{1});
  CHECK(truncate(b, 1).belyi_words.size() == 1);
  CHECK_FALSE(truncate(b, 1).is_periodic());
}

TEST_CASE("JSON round trip") {
  CHECK(TruncatedChain::from_json(R"({"site":"A","entries":[2,4,8]})") == A({2, 4, 8}));
  CHECK(A({2, 4}, 1).to_json() == R"({"entries":[2,4],"period":1,"site":"A"})");
  const TruncatedChain c = TruncatedChain::conway({{L(2, 0)}, {L(2, 1), L(2, 0)}});
  CHECK(TruncatedChain::from_json(c.to_json()) == c);
  CHECK(TruncatedChain::from_json(R"({"site":"C","entries":["P[2,0]"]})") == TruncatedChain::conway({{L(2, 0)}}));
  const TruncatedChain b = TruncatedChain::belyi(gens(), {{1}, {1, 0}}, 1);
  CHECK(TruncatedChain::from_json(b.to_json()) == b);
  CHECK_THROWS_AS(TruncatedChain::from_json(R"({"site":"Z","entries":[]})"), ParseError);
  CHECK_THROWS_AS(TruncatedChain::from_json("[1,2"), ParseError);
  CHECK_THROWS_AS(TruncatedChain::from_json(R"({"site":"C","entries":[[[4,1]]]})"), ParseError);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    const TruncatedChain a = random_arithmetic(rng, true);
    CHECK(TruncatedChain::from_json(a.to_json()) == a);
    const TruncatedChain w = random_conway(rng);
    CHECK(TruncatedChain::from_json(w.to_json()) == w);
  }
}

TEST_CASE("equivalences are equivalence relations") {
  std::mt19937_64 rng(52);
  std::vector<TruncatedChain> as, cs;
  for (int t = 0; t < 40; ++t) as.push_back(random_arithmetic(rng, true));
  for (int t = 0; t < 25; ++t) cs.push_back(random_conway(rng));
  for (const auto* pool : {&as, &cs}) {
    for (const auto& x : *pool) {
      CHECK(chain_equiv(x, x));
      CHECK(tail_equiv(x, x));
      for (const auto& y : *pool) {
        const bool e = chain_equiv(x, y), te = tail_equiv(x, y);
        CHECK(e == chain_equiv(y, x));
        CHECK(te == tail_equiv(y, x));
        if (e) CHECK(te);
        for (const auto& z : *pool) {
          if (e && chain_equiv(y, z)) CHECK(chain_equiv(x, z));
          if (te && tail_equiv(y, z)) CHECK(tail_equiv(x, z));
        }
      }
    }
  }
}

TEST_CASE("tail equivalence of naturals is the adele class equivalence") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 400; ++t) {
    const TruncatedChain x = random_arithmetic(rng, true), y = random_arithmetic(rng, true);
    CHECK(tail_equiv(x, y) == adele_class_equiv(chain_to_supernatural(x), chain_to_supernatural(y)));
    // Oracle for chain_equiv on finite chains: equal least common multiples.
    if (!x.is_periodic() && !y.is_periodic()) {
      CHECK(chain_equiv(x, y) == (x.naturals.back() == y.naturals.back()));
    }
  }
}

TEST_CASE("project commutes with truncation and preserves equivalence") {
  std::mt19937_64 rng(54);
  std::vector<TruncatedChain> cs;
  for (int t = 0; t < 40; ++t) cs.push_back(random_conway(rng));
  for (const auto& x : cs) {
    for (std::size_t k = 0; k <= x.size(); ++k) CHECK(project(truncate(x, k)) == truncate(project(x), k));
    for (const auto& y : cs) {
      if (chain_equiv(x, y)) CHECK(chain_equiv(project(x), project(y)));
    }
  }
  const auto g = gens();
  for (int t = 0; t < 40; ++t) {
    std::vector<BelyiWord> entries;
    BelyiWord cur;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      cur.push_back(rng() % 3);
      entries.push_back(cur);
    }
    const TruncatedChain b = TruncatedChain::belyi(g, entries);
    for (std::size_t k = 0; k <= b.size(); ++k) CHECK(project(truncate(b, k)) == truncate(project(b), k));
  }
}

TEST_CASE("periodic chains agree with long truncations") {
  const TruncatedChain x = TruncatedChain::conway({{L(2, 1)}, {L(3, 2), L(2, 1)}}, 2);
  const TruncatedChain y = unroll(x, 4);
  CHECK(chain_equiv(x, y));
  const TruncatedChain b1 = TruncatedChain::belyi(gens(), {{0}, {0, 1}}, 1);
  const TruncatedChain b2 = TruncatedChain::belyi(gens(), {{0, 1}, {0, 1, 1, 1}}, 1);
  CHECK(chain_equiv(b1, b2));
  const TruncatedChain b3 = TruncatedChain::belyi(gens(), {{0}, {0, 0}}, 1);
  CHECK_FALSE(chain_equiv(b1, b3));
  CHECK(tail_equiv(b1, TruncatedChain::belyi(gens(), {{1}}, 1)));
}
