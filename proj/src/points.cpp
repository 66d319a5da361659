#include "arsite/points.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "arsite/error.hpp"

namespace arsite {

namespace {

const char* site_name(Site s) {
  switch (s) {
    case Site::kArithmetic: return "A";
    case Site::kConway: return "C";
    case Site::kBelyi: return "B";
  }
  return "?";
}

void require_same_site(const TruncatedChain& a, const TruncatedChain& b) {
  if (a.site != b.site) throw DomainError("chains live on different sites");
}

bool is_prefix(const BelyiWord& prefix, const BelyiWord& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

// Step words Z_t with X_t = Z_t * X_{t-1}, X_0 = 1.
std::vector<ConwayWord> conway_steps(const TruncatedChain& c) {
  std::vector<ConwayWord> steps;
  ConwayWord prev;
  for (const ConwayWord& w : c.words) {
    auto z = divide_left(w, prev);
    if (!z) throw DomainError("chain entry " + word_str(w) + " is not a left multiple of " + word_str(prev));
    steps.push_back(*z);
    prev = w;
  }
  return steps;
}

std::size_t belyi_word_letter_count(const TruncatedChain& c, std::size_t entries) {
  return entries == 0 ? 0 : c.belyi_words[entries - 1].size();
}

bool finite_interleaving(const TruncatedChain& c1, const TruncatedChain& c2) {
  for (std::size_t i = 0; i < c1.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < c2.size() && !found; ++j) found = site_geq(c1, i, c2, j);
    if (!found) return false;
  }
  return true;
}

// Flattened letters of a periodic site-B chain, long enough for comparison.
BelyiWord belyi_letters(const TruncatedChain& c, std::size_t length) {
  TruncatedChain u = c;
  while (u.belyi_words.back().size() < length) u = unroll(u, u.period);
  return BelyiWord(u.belyi_words.back().begin(), u.belyi_words.back().begin() + static_cast<long>(length));
}

std::size_t belyi_preperiod(const TruncatedChain& c) {
  return belyi_word_letter_count(c, c.size() - c.period);
}

std::size_t belyi_block(const TruncatedChain& c) {
  return c.belyi_words.back().size() - belyi_preperiod(c);
}

}  // namespace

std::size_t TruncatedChain::size() const {
  switch (site) {
    case Site::kArithmetic: return naturals.size();
    case Site::kConway: return words.size();
    case Site::kBelyi: return belyi_words.size();
  }
  return 0;
}

TruncatedChain TruncatedChain::arithmetic(std::vector<Natural> entries, std::size_t period) {
  TruncatedChain c;
  c.site = Site::kArithmetic;
  c.naturals = std::move(entries);
  c.period = period;
  validate(c);
  return c;
}

TruncatedChain TruncatedChain::conway(std::vector<ConwayWord> entries, std::size_t period) {
  TruncatedChain c;
  c.site = Site::kConway;
  for (auto& w : entries) w = normalize(w);
  c.words = std::move(entries);
  c.period = period;
  validate(c);
  return c;
}

TruncatedChain TruncatedChain::belyi(std::vector<BelyiPoly> generators, std::vector<BelyiWord> entries,
                                     std::size_t period) {
  TruncatedChain c;
  c.site = Site::kBelyi;
  c.generators = std::move(generators);
  c.belyi_words = std::move(entries);
  c.period = period;
  validate(c);
  return c;
}

void validate(const TruncatedChain& c) {
  if (c.period > c.size()) throw DomainError("period exceeds the chain length");
  switch (c.site) {
    case Site::kArithmetic: {
      for (std::size_t i = 0; i < c.naturals.size(); ++i) {
        if (c.naturals[i] == 0) throw DomainError("chain entries must be positive");
        if (i > 0 && c.naturals[i] % c.naturals[i - 1] != 0) {
          throw DomainError("chain is not descending: " + std::to_string(c.naturals[i - 1]) +
                            " does not divide " + std::to_string(c.naturals[i]));
        }
      }
      if (c.period > 0) {
        Natural base = c.period == c.size() ? 1 : c.naturals[c.size() - 1 - c.period];
        if (c.naturals.back() == base) throw DomainError("periodic block must be nontrivial");
      }
      break;
    }
    case Site::kConway: {
      for (const auto& w : c.words) {
        if (!is_free_word(w)) throw DomainError("site C entries must lie in the monoid C");
      }
      auto steps = conway_steps(c);
      if (c.period > 0) {
        std::size_t letters = 0;
        for (std::size_t t = steps.size() - c.period; t < steps.size(); ++t) letters += steps[t].size();
        if (letters == 0) throw DomainError("periodic block must be nontrivial");
      }
      break;
    }
    case Site::kBelyi: {
      if (c.generators.empty()) throw DomainError("site B chains need generators");
      for (std::size_t i = 0; i < c.belyi_words.size(); ++i) {
        for (std::size_t g : c.belyi_words[i]) {
          if (g >= c.generators.size()) throw DomainError("generator index out of range");
        }
        if (i > 0 && !is_prefix(c.belyi_words[i - 1], c.belyi_words[i])) {
          throw DomainError("chain is not descending: an entry does not extend its predecessor");
        }
      }
      if (c.period > 0 && belyi_block(c) == 0) throw DomainError("periodic block must be nontrivial");
      break;
    }
  }
}

bool site_geq(const TruncatedChain& x, std::size_t i, const TruncatedChain& y, std::size_t j) {
  require_same_site(x, y);
  switch (x.site) {
    case Site::kArithmetic: return y.naturals[j] % x.naturals[i] == 0;
    case Site::kConway: return divide_left(y.words[j], x.words[i]).has_value();
    case Site::kBelyi: return is_prefix(x.belyi_words[i], y.belyi_words[j]);
  }
  return false;
}

TruncatedChain unroll(const TruncatedChain& c, std::size_t extra) {
  if (extra == 0) return c;
  if (!c.is_periodic()) throw DomainError("only periodic chains can be unrolled");
  TruncatedChain out = c;
  const std::size_t n = c.size();
  const std::size_t block_start = n - c.period;
  switch (c.site) {
    case Site::kArithmetic: {
      for (std::size_t t = 0; t < extra; ++t) {
        std::size_t src = block_start + t % c.period;
        Natural prev = src == 0 ? 1 : c.naturals[src - 1];
        Natural ratio = c.naturals[src] / prev;
        Natural last = out.naturals.back();
        if (last > std::numeric_limits<Natural>::max() / ratio) throw DomainError("chain entry overflow");
        out.naturals.push_back(last * ratio);
      }
      break;
    }
    case Site::kConway: {
      auto steps = conway_steps(c);
      for (std::size_t t = 0; t < extra; ++t) {
        out.words.push_back(mul(steps[block_start + t % c.period], out.words.back()));
      }
      break;
    }
    case Site::kBelyi: {
      for (std::size_t t = 0; t < extra; ++t) {
        const std::size_t src = block_start + t % c.period;
        const std::size_t skip = src == 0 ? 0 : c.belyi_words[src - 1].size();
        BelyiWord segment(c.belyi_words[src].begin() + static_cast<long>(skip), c.belyi_words[src].end());
        BelyiWord next = out.belyi_words.back();
        next.insert(next.end(), segment.begin(), segment.end());
        out.belyi_words.push_back(std::move(next));
      }
      break;
    }
  }
  return out;
}

TruncatedChain truncate(const TruncatedChain& c, std::size_t k) {
  if (k >= c.size()) return c;
  TruncatedChain out = c;
  out.period = 0;
  out.naturals.resize(std::min(k, out.naturals.size()));
  out.words.resize(std::min(k, out.words.size()));
  out.belyi_words.resize(std::min(k, out.belyi_words.size()));
  return out;
}

TruncatedChain tail(const TruncatedChain& c, std::size_t offset) {
  if (offset > c.size()) throw DomainError("tail offset exceeds the chain length");
  TruncatedChain src = c;
  if (src.is_periodic() && src.size() - offset < src.period) src = unroll(src, src.period);
  TruncatedChain out = src;
  out.naturals.clear();
  out.words.clear();
  out.belyi_words.clear();
  switch (src.site) {
    case Site::kArithmetic: {
      Natural base = offset == 0 ? 1 : src.naturals[offset - 1];
      for (std::size_t k = offset; k < src.size(); ++k) out.naturals.push_back(src.naturals[k] / base);
      if (out.naturals.empty()) out.naturals.push_back(1);
      break;
    }
    case Site::kConway: {
      ConwayWord base = offset == 0 ? ConwayWord{} : src.words[offset - 1];
      for (std::size_t k = offset; k < src.size(); ++k) {
        auto z = divide_left(src.words[k], base);
        if (!z) throw DomainError("chain entries are not left multiples of each other");
        out.words.push_back(*z);
      }
      if (out.words.empty()) out.words.push_back({});
      break;
    }
    case Site::kBelyi: {
      std::size_t drop = offset == 0 ? 0 : src.belyi_words[offset - 1].size();
      for (std::size_t k = offset; k < src.size(); ++k) {
        out.belyi_words.emplace_back(src.belyi_words[k].begin() + static_cast<long>(drop),
                                     src.belyi_words[k].end());
      }
      if (out.belyi_words.empty()) out.belyi_words.push_back({});
      break;
    }
  }
  if (!src.is_periodic()) out.period = 0;
  return out;
}

bool chain_equiv(const TruncatedChain& c1, const TruncatedChain& c2) {
  require_same_site(c1, c2);
  if (c1.is_periodic() != c2.is_periodic()) return false;
  if (!c1.is_periodic()) return finite_interleaving(c1, c2) && finite_interleaving(c2, c1);
  switch (c1.site) {
    case Site::kArithmetic: return chain_to_supernatural(c1) == chain_to_supernatural(c2);
    case Site::kBelyi: {
      if (c1.generators != c2.generators) return false;
      // Eventually periodic words agreeing on this window agree everywhere.
      const std::size_t window = std::max(belyi_preperiod(c1), belyi_preperiod(c2)) +
                                 std::lcm(belyi_block(c1), belyi_block(c2));
      return belyi_letters(c1, window) == belyi_letters(c2, window);
    }
    case Site::kConway: {
      const std::size_t horizon = std::max(c1.size(), c2.size()) + 2 * std::lcm(c1.period, c2.period);
      const TruncatedChain a = unroll(c1, horizon - c1.size());
      const TruncatedChain b = unroll(c2, horizon - c2.size());
      const TruncatedChain a_long = unroll(c1, 3 * horizon - c1.size());
      const TruncatedChain b_long = unroll(c2, 3 * horizon - c2.size());
      return finite_interleaving(a, b_long) && finite_interleaving(b, a_long);
    }
  }
  return false;
}

bool tail_equiv(const TruncatedChain& c1, const TruncatedChain& c2) {
  require_same_site(c1, c2);
  if (c1.is_periodic() != c2.is_periodic()) return false;
  const std::size_t max1 = c1.size() + c1.period;
  const std::size_t max2 = c2.size() + c2.period;
  const TruncatedChain u1 = c1.is_periodic() ? unroll(c1, c1.period) : c1;
  const TruncatedChain u2 = c2.is_periodic() ? unroll(c2, c2.period) : c2;
  for (std::size_t i = 0; i <= std::min(max1, u1.size()); ++i) {
    const TruncatedChain t1 = tail(u1, i);
    for (std::size_t j = 0; j <= std::min(max2, u2.size()); ++j) {
      if (chain_equiv(t1, tail(u2, j))) return true;
    }
  }
  return false;
}

TruncatedChain project(const TruncatedChain& c) {
  TruncatedChain out;
  out.site = Site::kArithmetic;
  out.period = c.period;
  switch (c.site) {
    case Site::kArithmetic: return c;
    case Site::kConway:
      for (const auto& w : c.words) out.naturals.push_back(delta(w));
      break;
    case Site::kBelyi:
      for (const auto& w : c.belyi_words) {
        Natural deg = 1;
        for (std::size_t g : w) deg *= c.generators[g].degree();
        out.naturals.push_back(deg);
      }
      break;
  }
  // A periodic block of degree-1 generators projects to a finite point.
  if (out.period > 0) {
    Natural base = out.period == out.naturals.size() ? 1 : out.naturals[out.naturals.size() - 1 - out.period];
    if (out.naturals.back() == base) out.period = 0;
  }
  return out;
}

Supernatural chain_to_supernatural(const TruncatedChain& c) {
  if (c.site != Site::kArithmetic) throw DomainError("only site A chains describe supernaturals");
  if (c.naturals.empty()) return Supernatural();
  return Supernatural::from_chain(c.naturals, c.period);
}

bool in_basic_open(const TruncatedChain& c, Natural element) {
  if (c.site != Site::kArithmetic) throw DomainError("expected a site A chain");
  if (c.is_periodic()) return divides(element, chain_to_supernatural(c));
  return std::any_of(c.naturals.begin(), c.naturals.end(), [&](Natural n) { return n % element == 0; });
}

bool in_basic_open(const TruncatedChain& c, const ConwayWord& element) {
  if (c.site != Site::kConway) throw DomainError("expected a site C chain");
  TruncatedChain u = c;
  if (u.is_periodic()) {
    // Horizon: unroll until the entries outgrow the cube of the element's distance.
    const Natural target = delta(element);
    while (delta(u.words.back()) < target * target * target) u = unroll(u, u.period);
  }
  return std::any_of(u.words.begin(), u.words.end(),
                     [&](const ConwayWord& w) { return divide_left(w, element).has_value(); });
}

bool in_basic_open(const TruncatedChain& c, const BelyiWord& element) {
  if (c.site != Site::kBelyi) throw DomainError("expected a site B chain");
  TruncatedChain u = c;
  if (u.is_periodic()) {
    while (u.belyi_words.back().size() < element.size()) u = unroll(u, u.period);
  }
  return std::any_of(u.belyi_words.begin(), u.belyi_words.end(),
                     [&](const BelyiWord& w) { return is_prefix(element, w); });
}

std::string TruncatedChain::to_json() const {
  nlohmann::json j;
  j["site"] = site_name(site);
  switch (site) {
    case Site::kArithmetic: j["entries"] = naturals; break;
    case Site::kConway: {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& w : words) {
        nlohmann::json word = nlohmann::json::array();
        for (const Letter& l : w) word.push_back({l.p, l.i});
        entries.push_back(word);
      }
      j["entries"] = entries;
      break;
    }
    case Site::kBelyi: {
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : generators) gens.push_back(g.poly().str());
      j["generators"] = gens;
      j["entries"] = belyi_words;
      break;
    }
  }
  if (period > 0) j["period"] = period;
  return j.dump();
}

TruncatedChain TruncatedChain::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const std::string site = j.at("site").get<std::string>();
    const std::size_t period = j.value("period", std::size_t{0});
    if (site == "A") return arithmetic(j.at("entries").get<std::vector<Natural>>(), period);
    if (site == "C") {
      std::vector<ConwayWord> words;
      for (const auto& e : j.at("entries")) {
        if (e.is_string()) {
          words.push_back(parse_word(e.get<std::string>()));
          continue;
        }
        ConwayWord w;
        for (const auto& l : e) {
          const Natural p = l.at(0).get<Natural>();
          const Natural i = l.at(1).get<Natural>();
          if (!is_prime(p) || i > p) throw ParseError("invalid letter in chain");
          w.push_back({p, i});
        }
        words.push_back(std::move(w));
      }
      return conway(std::move(words), period);
    }
    if (site == "B") {
      std::vector<BelyiPoly> gens;
      for (const auto& g : j.at("generators")) gens.emplace_back(PolyQ::parse(g.get<std::string>()));
      return belyi(std::move(gens), j.at("entries").get<std::vector<BelyiWord>>(), period);
    }
    throw ParseError("unknown site '" + site + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad chain JSON: ") + e.what());
  }
}

}  // namespace arsite
