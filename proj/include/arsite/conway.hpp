#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "arsite/bigpicture.hpp"
#include "arsite/matrix.hpp"

namespace arsite {

// Generator of the big picture for the prime p: P_i = [[1/p, i/p], [0, 1]]
// for 0 <= i < p (free letters) and P_p = [[p, 0], [0, 1]] (power letter).
struct Letter {
  Natural p = 2;
  Natural i = 0;

  bool is_free() const { return i < p; }
  bool is_power() const { return i == p; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

  std::string str() const;
};

// Throws DomainError unless p is prime and 0 <= i <= p.
Letter make_letter(Natural p, Natural i);

Mat2Q letter_matrix(const Letter& l);
// [[1, n], [0, 1]]
Mat2Q translation(const Integer& n);

// Letters read left to right as a matrix product; the word acts on the
// identity class by left multiplication, so the rightmost letter acts first.
using ConwayWord = std::vector<Letter>;

struct Exchange {
  Letter left;
  Letter right;
  // Integer t with left_in·right_in = T_t·left·right, T_t a translation in Γ.
  Natural translation = 0;
};

// Moves `right` past `left` for letters of distinct primes:
//   free/free   P_i·Q_j = Q_l·P_k      with iq + j = lp + k (exact);
//   power/free  P_p·Q_j = T_t·Q_a·P_p  with a = pj mod q, t = (pj - a)/q;
//   power/power P_p·Q_q = Q_q·P_p.
// Throws DomainError for equal primes and for a free letter left of a power
// letter, which never needs exchanging.
Exchange meta_commute(const Letter& left, const Letter& right);

// Free letters in ascending prime blocks, then power letters in ascending
// prime order, and no backtracking: the word is a shortest path from 1, so
// its delta equals the hyper-distance of its class from 1.
bool is_normal(const ConwayWord& w);

// Rewrites to the unique normal form of the class of w using exchanges,
// P_p·P_i = T_i, and P_0·P_p = 1 (after moving P_p left across other primes).
// With `rng`, each step picks a random applicable rewrite instead of the
// leftmost one.
ConwayWord normalize(const ConwayWord& w, std::mt19937_64* rng = nullptr);

Mat2Q word_matrix(const ConwayWord& w);
PicClass word_to_class(const ConwayWord& w);
ConwayWord class_to_word(const PicClass& x);

bool is_free_word(const ConwayWord& w);

ConwayWord mul(const ConwayWord& w1, const ConwayWord& w2);
// Product of the letter primes.
Natural delta(const ConwayWord& w);
// The unique Z with y = Z * x in the monoid C, if any. Throws DomainError
// ("outside monoid C") when either word has a power letter.
std::optional<ConwayWord> divide_left(const ConwayWord& y, const ConwayWord& x);

// "P[2,1]*P[2,2]"; the empty word prints as "1".
std::string word_str(const ConwayWord& w);
ConwayWord parse_word(std::string_view text);

}  // namespace arsite
