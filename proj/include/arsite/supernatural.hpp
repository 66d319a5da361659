#pragma once

#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arsite/rational.hpp"

namespace arsite {

// Exponent in N ∪ {∞}; kInfinity is absorbing under addition.
using Exponent = std::uint64_t;
inline constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max();

Exponent add_exponents(Exponent a, Exponent b);

bool is_prime(Natural n);
// Prime factorisation by trial division, ascending primes.
std::map<Natural, Exponent> factorize(Natural n);

// A supernatural number ∏ p^{s_p} described by finitely many exceptional
// primes over a default exponent shared by every other prime. This covers
// all finite naturals as well as ∏ p and ∏ p^∞; arbitrary supernaturals
// are not representable.
class Supernatural {
 public:
  Supernatural() = default;  // the number 1
  explicit Supernatural(Natural n);
  Supernatural(std::map<Natural, Exponent> exceptions, Exponent default_exponent);

  // Exponent-wise supremum of a divisibility chain n_1 | n_2 | ... . When
  // `period` > 0 the last `period` steps are declared to repeat forever, so
  // every prime dividing their product receives exponent ∞. The chain
  // is read as starting from 1, so `period` may equal its length.
  static Supernatural from_chain(std::span<const Natural> chain, std::size_t period = 0);

  Exponent exponent(Natural p) const;
  Exponent default_exponent() const { return default_; }
  const std::map<Natural, Exponent>& exceptions() const { return exceptions_; }
  bool is_finite() const;

  friend Supernatural mul(const Supernatural& s, const Supernatural& t);
  friend Supernatural lcm(const Supernatural& s, const Supernatural& t);
  friend bool operator==(const Supernatural&, const Supernatural&) = default;

  std::string str() const;
  // Accepts e.g. "2^inf*3^2*[default=0]", "12", "1", "[default=inf]".
  static Supernatural parse(std::string_view text);

 private:
  void canonicalize();

  std::map<Natural, Exponent> exceptions_;
  Exponent default_ = 0;
};

// s | t exponent-wise.
bool divides(const Supernatural& s, const Supernatural& t);
bool divides(Natural n, const Supernatural& s);

// Membership in the localic open generated by n_1 N ∪ ... ∪ n_k N:
// true iff some n_i divides s. Throws DomainError on an empty generator list.
bool in_open(const Supernatural& s, std::span<const Natural> generators);

// n·s = m·t for some finite naturals n, m.
bool adele_class_equiv(const Supernatural& s, const Supernatural& t);
inline bool stable_iso(const Supernatural& s, const Supernatural& t) { return adele_class_equiv(s, t); }

}  // namespace arsite
