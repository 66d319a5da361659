#pragma once

#include <span>
#include <vector>

#include "arsite/bigpicture.hpp"
#include "arsite/conway.hpp"
#include "arsite/dessin.hpp"
#include "arsite/poly.hpp"

namespace arsite {

// A polynomial over Q with B(0) = 0, B(1) = 1 and all critical values in {0, 1}.
class BelyiPoly {
 public:
  // Throws DomainError unless is_dynamical_belyi(p).
  explicit BelyiPoly(PolyQ p);

  const PolyQ& poly() const { return poly_; }
  Natural degree() const { return static_cast<Natural>(poly_.degree()); }

  friend bool operator==(const BelyiPoly&, const BelyiPoly&) = default;

 private:
  PolyQ poly_;
};

bool is_dynamical_belyi(const PolyQ& p);

// c·x^{d-k}·(a_0 x^k + ... + a_k) with a_i = (-1)^{k-i}/(d-i)·C(k, i) and
// c = (1/k!)·∏_{j=0}^{k} (d - j). Requires d >= 2, 0 <= k < d.
BelyiPoly b_dk(Natural d, Natural k);

// The unit x.
BelyiPoly belyi_unit();

BelyiPoly compose(const BelyiPoly& outer, const BelyiPoly& inner);

Natural black_count(const BelyiPoly& b);
Natural white_count(const BelyiPoly& b);
// Multiplicity of 0 as a root of B (r = 0) or of 1 as a root of B - 1 (r = 1).
Natural valency_at(const BelyiPoly& b, int r);

// Exact root-multiplicity passport of B and B - 1.
Passport multiplicity_passport(const BelyiPoly& b);

// #(B∘B')^{-1}(0) against deg(B')(#B^{-1}(0) - 1) + #B'^{-1}(0).
bool compose_count_check(const BelyiPoly& b, const BelyiPoly& b2);

// Class of [[1/deg B, (#B^{-1}(0) - 1)/deg B], [0, 1]].
PicClass beta_class(const BelyiPoly& b);
ConwayWord beta_word(const BelyiPoly& b);

Natural degree_morphism(const BelyiPoly& b);
// hyperdistance(1, beta(B)) == deg B.
bool triangle_check(const BelyiPoly& b);
// 1 - B(1 - x).
BelyiPoly involution_poly(const BelyiPoly& b);

// Generator indices, composed left to right: B_{i_1} ∘ B_{i_2} ∘ ... .
using BelyiWord = std::vector<std::size_t>;
BelyiPoly evaluate_word(std::span<const BelyiPoly> generators, const BelyiWord& w);

// True iff all words of length 1..maxlen give pairwise distinct polynomials.
bool free_check(std::span<const BelyiPoly> generators, std::size_t maxlen);

struct RealizedDessin {
  FramedDessin dessin;
  BelyiPoly poly;
};

// The path w(-1/2) - b(0) - w(1) - b(3/2) of x^2(3 - 2x), edges numbered left
// to right, under its four (black, white) framings, each with the polynomial
// moving the framed vertices to 0 and 1: x^2(3 - 2x), x^2(x + 3)/4,
// x(x - 3)^2/4 and x(4x - 3)^2.
std::vector<RealizedDessin> example_path_dessins();

}  // namespace arsite
