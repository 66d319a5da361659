#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arsite/belyi.hpp"
#include "arsite/conway.hpp"
#include "arsite/supernatural.hpp"

namespace arsite {

enum class Site { kArithmetic, kConway, kBelyi };

// A finite descending chain X_1 >= X_2 >= ... in the poset of one site,
// given by its partial products:
//   A: naturals n_1 | n_2 | ...;
//   C: free normal words with X_{i+1} = Z * X_i;
//   B: generator words, each extending the previous one on the right.
// `period` > 0 declares that the last `period` steps repeat forever, so the
// chain describes an infinite point; period 0 is a finite point.
struct TruncatedChain {
  Site site = Site::kArithmetic;
  std::vector<Natural> naturals;
  std::vector<ConwayWord> words;
  std::vector<BelyiWord> belyi_words;
  std::vector<BelyiPoly> generators;  // site B only
  std::size_t period = 0;

  std::size_t size() const;
  bool is_periodic() const { return period > 0; }

  static TruncatedChain arithmetic(std::vector<Natural> entries, std::size_t period = 0);
  static TruncatedChain conway(std::vector<ConwayWord> entries, std::size_t period = 0);
  static TruncatedChain belyi(std::vector<BelyiPoly> generators, std::vector<BelyiWord> entries,
                              std::size_t period = 0);

  std::string to_json() const;
  static TruncatedChain from_json(std::string_view text);

  friend bool operator==(const TruncatedChain&, const TruncatedChain&) = default;
};

// Throws DomainError when entries are not descending in the site order.
void validate(const TruncatedChain& c);

// x >= y in the site poset (y is a multiple/extension of x).
bool site_geq(const TruncatedChain& site_context, std::size_t i, const TruncatedChain& other, std::size_t j);

// Interleaving equivalence, decided on the given data. Periodic chains are
// compared as infinite points: exactly for sites A and B, and for site C by
// searching a horizon of unrolled periods.
bool chain_equiv(const TruncatedChain& c1, const TruncatedChain& c2);

// Chain with the first `offset` steps divided out (offset = size() gives
// the empty chain of the point 1).
TruncatedChain tail(const TruncatedChain& c, std::size_t offset);

// Some tail of c1 is chain-equivalent to some tail of c2.
bool tail_equiv(const TruncatedChain& c1, const TruncatedChain& c2);

// Entrywise hyper-distance (site C) or degree (site B); identity on site A.
TruncatedChain project(const TruncatedChain& c);

// First `k` entries as a finite chain (an unchanged copy when k >= size()).
TruncatedChain truncate(const TruncatedChain& c, std::size_t k);

// Extends a periodic chain by `extra` further steps.
TruncatedChain unroll(const TruncatedChain& c, std::size_t extra);

Supernatural chain_to_supernatural(const TruncatedChain& c);

// Localic basic open: some entry X_n satisfies X_n <= element.
bool in_basic_open(const TruncatedChain& c, Natural element);
bool in_basic_open(const TruncatedChain& c, const ConwayWord& element);
bool in_basic_open(const TruncatedChain& c, const BelyiWord& element);

}  // namespace arsite
