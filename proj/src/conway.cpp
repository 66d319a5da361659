#include "arsite/conway.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "arsite/error.hpp"
#include "arsite/supernatural.hpp"

namespace arsite {

namespace {

Rational rat(Natural n) { return Rational(static_cast<long long>(n)); }

// Rank used for sorting: free letters first, then power letters, each by prime.
std::pair<int, Natural> sort_key(const Letter& l) { return {l.is_power() ? 1 : 0, l.p}; }

enum class Rewrite { kNone, kCancel, kExchange };

Rewrite applicable(const Letter& a, const Letter& b) {
  if (a.is_power() && b.is_free() && a.p == b.p) return Rewrite::kCancel;
  if (a.p != b.p && sort_key(a) > sort_key(b)) return Rewrite::kExchange;
  return Rewrite::kNone;
}

// Absorbs T_t placed immediately right of position `pos` into the prefix
// w[0..pos], carrying it to the far left where it vanishes in Γ.
void push_translation_left(ConwayWord& w, std::size_t pos, Integer t) {
  for (std::size_t k = pos + 1; k-- > 0 && t != 0;) {
    Letter& l = w[k];
    if (l.is_free()) {
      // P_i·T_t = T_{floor((i+t)/p)}·P_{(i+t) mod p}
      const Integer s = Integer(l.i) + t;
      const Integer p(l.p);
      Integer r = s % p;
      if (r < 0) r += p;
      l.i = static_cast<Natural>(r);
      t = (s - r) / p;
    } else {
      // P_p·T_t = T_{pt}·P_p
      t *= l.p;
    }
  }
}

// In a word of shape (free letters)(power letters), tries to cancel the free
// letter at j, the last one of its prime p, against a P_p of the power block.
// P_p is moved left across the free letters of other primes with
// Q_j·P_p = T_{-t}·P_p·Q_a (pa = j mod q, t = (pa - j)/q); the pair cancels
// when the translations turn w[j] into P_0, since P_0·P_p = 1.
std::optional<ConwayWord> hidden_backtrack(const ConwayWord& w, std::size_t j) {
  const Natural p = w[j].p;
  if (!w[j].is_free()) return std::nullopt;
  std::size_t m = j + 1;
  while (m < w.size() && w[m].is_free()) {
    if (w[m].p == p) return std::nullopt;
    ++m;
  }
  const auto power = std::find(w.begin() + static_cast<long>(m), w.end(), Letter{p, p});
  if (power == w.end()) return std::nullopt;
  ConwayWord v = w;
  v.erase(v.begin() + (power - w.begin()));
  v.insert(v.begin() + static_cast<long>(m), Letter{p, p});
  for (std::size_t idx = m; idx > j + 1; --idx) {
    const Letter x = v[idx - 1];
    Natural a = 0;
    while ((p * a) % x.p != x.i % x.p) ++a;
    const Integer t = (Integer(p) * a - x.i) / x.p;
    v[idx - 1] = Letter{p, p};
    v[idx] = Letter{x.p, a};
    push_translation_left(v, idx - 2, -t);
  }
  if (v[j].i != 0) return std::nullopt;
  v.erase(v.begin() + static_cast<long>(j), v.begin() + static_cast<long>(j) + 2);
  return v;
}

bool locally_normal(const ConwayWord& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (applicable(w[k], w[k + 1]) != Rewrite::kNone) return false;
  }
  return true;
}

}  // namespace

std::string Letter::str() const { return "P[" + std::to_string(p) + "," + std::to_string(i) + "]"; }

Letter make_letter(Natural p, Natural i) {
  if (!is_prime(p)) throw DomainError("letter prime " + std::to_string(p) + " is not prime");
  if (i > p) throw DomainError("letter index " + std::to_string(i) + " exceeds its prime");
  return {p, i};
}

Mat2Q letter_matrix(const Letter& l) {
  if (l.is_power()) return {rat(l.p), Rational(0), Rational(0), Rational(1)};
  return {Rational(1) / rat(l.p), rat(l.i) / rat(l.p), Rational(0), Rational(1)};
}

Mat2Q translation(const Integer& n) { return {Rational(1), Rational(n), Rational(0), Rational(1)}; }

Exchange meta_commute(const Letter& left, const Letter& right) {
  if (left.p == right.p) throw DomainError("no meta-commutation within a prime");
  if (left.is_free() && right.is_free()) {
    const Natural n = left.i * right.p + right.i;
    return {Letter{right.p, n / left.p}, Letter{left.p, n % left.p}, 0};
  }
  if (left.is_power() && right.is_free()) {
    const Natural pj = left.p * right.i;
    return {Letter{right.p, pj % right.p}, left, pj / right.p};
  }
  if (left.is_power() && right.is_power()) return {right, left, 0};
  throw DomainError("a free letter never moves right past a power letter");
}

bool is_normal(const ConwayWord& w) {
  if (!locally_normal(w)) return false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (hidden_backtrack(w, j)) return false;
  }
  return true;
}

ConwayWord normalize(const ConwayWord& w, std::mt19937_64* rng) {
  ConwayWord cur = w;
  std::vector<std::size_t> sites;
  for (;;) {
    sites.clear();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (applicable(cur[k], cur[k + 1]) != Rewrite::kNone) {
        sites.push_back(k);
        if (!rng) break;
      }
    }
    if (sites.empty()) {
      std::vector<ConwayWord> reduced;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (auto v = hidden_backtrack(cur, j)) {
          reduced.push_back(std::move(*v));
          if (!rng) break;
        }
      }
      if (reduced.empty()) return cur;
      std::size_t pick = 0;
      if (rng) pick = std::uniform_int_distribution<std::size_t>(0, reduced.size() - 1)(*rng);
      cur = std::move(reduced[pick]);
      continue;
    }
    std::size_t k = sites.front();
    if (rng) k = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(*rng)];
    if (applicable(cur[k], cur[k + 1]) == Rewrite::kCancel) {
      // P_p·P_i = T_i
      const Natural t = cur[k + 1].i;
      cur.erase(cur.begin() + static_cast<long>(k), cur.begin() + static_cast<long>(k) + 2);
      if (k > 0) push_translation_left(cur, k - 1, t);
    } else {
      Exchange ex = meta_commute(cur[k], cur[k + 1]);
      cur[k] = ex.left;
      cur[k + 1] = ex.right;
      if (k > 0) push_translation_left(cur, k - 1, ex.translation);
    }
  }
}

Mat2Q word_matrix(const ConwayWord& w) {
  Mat2Q m = Mat2Q::identity();
  for (const Letter& l : w) m = m * letter_matrix(l);
  return m;
}

PicClass word_to_class(const ConwayWord& w) { return PicClass::from_matrix(word_matrix(w)); }

ConwayWord class_to_word(const PicClass& x) {
  // Peel letters off the right: Γ·α_X·L^{-1} is well defined on cosets.
  ConwayWord reversed;
  PicClass cur = x;
  Natural d = distance_from_one(cur);
  while (d > 1) {
    bool found = false;
    for (const auto& [p, e] : factorize(d)) {
      for (Natural i = 0; i <= p && !found; ++i) {
        const Letter l{p, i};
        PicClass y = PicClass::from_matrix(cur.matrix() * letter_matrix(l).inverse());
        if (distance_from_one(y) == d / p) {
          reversed.push_back(l);
          cur = y;
          d /= p;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) throw DomainError("no descent step from class " + cur.str());
  }
  ConwayWord word(reversed.rbegin(), reversed.rend());
  return normalize(word);
}

bool is_free_word(const ConwayWord& w) {
  for (const Letter& l : w) {
    if (l.is_power()) return false;
  }
  return true;
}

ConwayWord mul(const ConwayWord& w1, const ConwayWord& w2) {
  ConwayWord cat = w1;
  cat.insert(cat.end(), w2.begin(), w2.end());
  return normalize(cat);
}

Natural delta(const ConwayWord& w) {
  Natural out = 1;
  for (const Letter& l : w) {
    if (out > std::numeric_limits<Natural>::max() / l.p) throw DomainError("delta overflow");
    out *= l.p;
  }
  return out;
}

std::optional<ConwayWord> divide_left(const ConwayWord& y, const ConwayWord& x) {
  if (!is_free_word(y) || !is_free_word(x)) throw DomainError("outside monoid C");
  const Natural dy = delta(y);
  const Natural dx = delta(x);
  if (dy % dx != 0) return std::nullopt;
  PicClass z_class = PicClass::from_matrix(word_matrix(y) * word_matrix(x).inverse());
  if (distance_from_one(z_class) != dy / dx) return std::nullopt;
  ConwayWord z = class_to_word(z_class);
  if (!is_free_word(z)) return std::nullopt;
  if (mul(z, x) != normalize(y)) return std::nullopt;
  return z;
}

std::string word_str(const ConwayWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += '*';
    out += l.str();
  }
  return out;
}

ConwayWord parse_word(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  ConwayWord out;
  if (s.empty() || s == "1" || s == "e") return out;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("bad word '" + std::string(text) + "'"); };
  auto number = [&] {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail();
    Natural v = std::stoull(s.substr(i, j - i));
    i = j;
    return v;
  };
  while (i < s.size()) {
    if (!out.empty()) {
      if (s[i] != '*') fail();
      ++i;
    }
    if (s.compare(i, 2, "P[") != 0) fail();
    i += 2;
    Natural p = number();
    if (i >= s.size() || s[i] != ',') fail();
    ++i;
    Natural idx = number();
    if (i >= s.size() || s[i] != ']') fail();
    ++i;
    if (!is_prime(p) || idx > p) {
      throw ParseError("invalid letter P[" + std::to_string(p) + "," + std::to_string(idx) + "]");
    }
    out.push_back({p, idx});
  }
  return out;
}

}  // namespace arsite
