#include "arsite/supernatural.hpp"

#include <cctype>
#include <set>

#include "arsite/error.hpp"

namespace arsite {

Exponent add_exponents(Exponent a, Exponent b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  if (a > kInfinity - 1 - b) throw DomainError("exponent overflow");
  return a + b;
}

bool is_prime(Natural n) {
  if (n < 2) return false;
  for (Natural d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<Natural, Exponent> factorize(Natural n) {
  std::map<Natural, Exponent> out;
  for (Natural d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

Supernatural::Supernatural(Natural n) {
  if (n == 0) throw DomainError("supernatural numbers are positive");
  exceptions_ = factorize(n);
}

Supernatural::Supernatural(std::map<Natural, Exponent> exceptions, Exponent default_exponent)
    : exceptions_(std::move(exceptions)), default_(default_exponent) {
  for (const auto& [p, e] : exceptions_) {
    if (!is_prime(p)) throw DomainError("supernatural key " + std::to_string(p) + " is not prime");
  }
  canonicalize();
}

void Supernatural::canonicalize() {
  std::erase_if(exceptions_, [&](const auto& kv) { return kv.second == default_; });
}

Supernatural Supernatural::from_chain(std::span<const Natural> chain, std::size_t period) {
  if (chain.empty()) throw DomainError("empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0) throw DomainError("chain entries must be positive");
    if (i > 0 && chain[i] % chain[i - 1] != 0) {
      throw DomainError("chain is not a divisibility chain: " + std::to_string(chain[i - 1]) +
                        " does not divide " + std::to_string(chain[i]));
    }
  }
  if (period > chain.size()) throw DomainError("period exceeds the chain length");
  std::map<Natural, Exponent> exps = factorize(chain.back());
  if (period > 0) {
    // The chain starts from an implicit 1, so a period equal to the length is allowed.
    Natural ratio = chain.back() / (period == chain.size() ? 1 : chain[chain.size() - 1 - period]);
    if (ratio == 1) throw DomainError("periodic block of a chain must be nontrivial");
    for (const auto& [p, e] : factorize(ratio)) exps[p] = kInfinity;
  }
  return Supernatural(std::move(exps), 0);
}

Exponent Supernatural::exponent(Natural p) const {
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

bool Supernatural::is_finite() const {
  if (default_ != 0) return false;
  for (const auto& [p, e] : exceptions_) {
    if (e == kInfinity) return false;
  }
  return true;
}

namespace {

std::set<Natural> joint_keys(const Supernatural& s, const Supernatural& t) {
  std::set<Natural> keys;
  for (const auto& kv : s.exceptions()) keys.insert(kv.first);
  for (const auto& kv : t.exceptions()) keys.insert(kv.first);
  return keys;
}

template <class Op>
Supernatural combine(const Supernatural& s, const Supernatural& t, Op op) {
  std::map<Natural, Exponent> out;
  for (Natural p : joint_keys(s, t)) out[p] = op(s.exponent(p), t.exponent(p));
  return Supernatural(std::move(out), op(s.default_exponent(), t.default_exponent()));
}

std::string exponent_str(Exponent e) { return e == kInfinity ? "inf" : std::to_string(e); }

Exponent parse_exponent(std::string_view text) {
  if (text == "inf" || text == "∞") return kInfinity;
  if (text.empty()) throw ParseError("empty exponent");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("bad exponent '" + std::string(text) + "'");
    }
  }
  return std::stoull(std::string(text));
}

}  // namespace

Supernatural mul(const Supernatural& s, const Supernatural& t) {
  return combine(s, t, add_exponents);
}

Supernatural lcm(const Supernatural& s, const Supernatural& t) {
  return combine(s, t, [](Exponent a, Exponent b) { return std::max(a, b); });
}

bool divides(const Supernatural& s, const Supernatural& t) {
  if (s.default_exponent() > t.default_exponent()) return false;
  for (Natural p : joint_keys(s, t)) {
    if (s.exponent(p) > t.exponent(p)) return false;
  }
  return true;
}

bool divides(Natural n, const Supernatural& s) { return divides(Supernatural(n), s); }

bool in_open(const Supernatural& s, std::span<const Natural> generators) {
  if (generators.empty()) throw DomainError("an open needs at least one generator");
  for (Natural n : generators) {
    if (divides(n, s)) return true;
  }
  return false;
}

bool adele_class_equiv(const Supernatural& s, const Supernatural& t) {
  if (s.default_exponent() != t.default_exponent()) return false;
  for (Natural p : joint_keys(s, t)) {
    Exponent a = s.exponent(p);
    Exponent b = t.exponent(p);
    if (a != b && (a == kInfinity || b == kInfinity)) return false;
  }
  return true;
}

std::string Supernatural::str() const {
  std::string out;
  for (const auto& [p, e] : exceptions_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) out += "^" + exponent_str(e);
  }
  if (default_ != 0) {
    if (!out.empty()) out += '*';
    out += "[default=" + exponent_str(default_) + "]";
  }
  return out.empty() ? "1" : out;
}

Supernatural Supernatural::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty supernatural");
  std::map<Natural, Exponent> exps;
  Exponent dflt = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('*', start);
    if (end == std::string::npos) end = s.size();
    std::string_view factor(s.data() + start, end - start);
    if (factor.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
    if (factor.front() == '[') {
      constexpr std::string_view kPrefix = "[default=";
      if (!factor.starts_with(kPrefix) || factor.back() != ']') {
        throw ParseError("bad default clause '" + std::string(factor) + "'");
      }
      dflt = parse_exponent(factor.substr(kPrefix.size(), factor.size() - kPrefix.size() - 1));
    } else {
      auto caret = factor.find('^');
      std::string_view base = factor.substr(0, caret);
      for (char ch : base) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw ParseError("bad factor '" + std::string(factor) + "'");
        }
      }
      if (base.empty()) throw ParseError("bad factor '" + std::string(factor) + "'");
      Natural b = std::stoull(std::string(base));
      Exponent e = caret == std::string_view::npos ? 1 : parse_exponent(factor.substr(caret + 1));
      if (b == 0) throw ParseError("zero factor in supernatural");
      if (b == 1) {
        // the unit contributes nothing
      } else if (is_prime(b)) {
        exps[b] = add_exponents(exps[b], e);
      } else {
        if (e == kInfinity) {
          for (const auto& [p, k] : factorize(b)) exps[p] = kInfinity;
        } else {
          for (const auto& [p, k] : factorize(b)) exps[p] = add_exponents(exps[p], k * e);
        }
      }
    }
    start = end + 1;
  }
  // Explicit factors override the default at their primes.
  return Supernatural(std::move(exps), dflt);
}

}  // namespace arsite
