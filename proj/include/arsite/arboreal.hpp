#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "arsite/belyi.hpp"

namespace arsite {

using Complex = std::complex<long double>;

struct TreeNode {
  Complex value;
  std::size_t parent = 0;  // index into the previous level; unused at level 0
};

// levels[k] holds the d^k roots of B_{i_1}∘...∘B_{i_k} - alpha, grouped by
// parent and sorted by (real, imaginary) inside each group.
struct ArborealTree {
  Natural degree = 0;
  Rational alpha;
  std::vector<std::vector<TreeNode>> levels;
  long double tol = 1e-9L;
  // certified[k - 1]: exact squarefree check of level k passed.
  std::vector<bool> certified;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
};

inline constexpr long double kDefaultTol = 1e-9L;
inline constexpr Natural kMaxLeaves = 2000;

// All generators share one degree and are dynamical Belyi; throws otherwise.
Natural sequence_degree(std::span<const BelyiPoly> gens);

// Throws DomainError unless 0 < alpha < 1. True iff B(alpha) ∉ {0, 1} for every generator.
bool genericity_check(std::span<const BelyiPoly> gens, const Rational& alpha);

// B_{i_1}∘...∘B_{i_n}, reading the generator list cyclically.
PolyQ iterate_composite(std::span<const BelyiPoly> gens, std::size_t n);

// gcd(f, f') = 1 for f = B_{i_1}∘...∘B_{i_n} - alpha.
bool squarefree_level(std::span<const BelyiPoly> gens, const Rational& alpha, std::size_t n);

// Throws DomainError("tolerance collision ..." / "matching ambiguity ...").
ArborealTree build_tree(std::span<const BelyiPoly> gens, const Rational& alpha, std::size_t n,
                        long double tol = kDefaultTol, bool certify = true);

// |B_{i_1}∘...∘B_{i_k}(z) - alpha|.
long double residual(std::span<const BelyiPoly> gens, const Rational& alpha, std::size_t k, Complex z);

// Simultaneous (Aberth) iteration on the float conversion of f, Newton polished.
std::vector<Complex> numeric_roots(const PolyQ& f);
// Number of clusters of points under the relation |a - b| <= radius.
std::size_t cluster_count(std::span<const Complex> points, long double radius);

std::string tree_dot(const ArborealTree& t);
// {"degree":3,"alpha":"1/2","tol":1e-09,"levels":[[{"value":[re,im],"parent":0}, ...], ...]}
std::string tree_json(const ArborealTree& t);

}  // namespace arsite
