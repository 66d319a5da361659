#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arsite/matrix.hpp"
#include "arsite/rational.hpp"

namespace arsite {

// A vertex of Conway's big picture: the coset Γ·[[M, g/h], [0, 1]] with
// M > 0 and the offset g/h reduced into [0, 1).
class PicClass {
 public:
  PicClass() : scale_(1), offset_(0) {}
  PicClass(Rational scale, Rational offset);

  // Class of an upper-triangular matrix [[a, b], [0, d]] with ad > 0.
  static PicClass from_matrix(const Mat2Q& m);

  const Rational& scale() const { return scale_; }
  const Rational& offset() const { return offset_; }
  Mat2Q matrix() const { return {scale_, offset_, Rational(0), Rational(1)}; }

  bool is_identity() const { return scale_ == Rational(1) && offset_.is_zero(); }

  friend bool operator==(const PicClass&, const PicClass&) = default;
  friend auto operator<=>(const PicClass& x, const PicClass& y) {
    if (auto c = x.scale_ <=> y.scale_; c != 0) return c;
    return x.offset_ <=> y.offset_;
  }

  // "M:g/h", e.g. "1/2:1/2" or "3:0".
  std::string str() const;
  static PicClass parse(std::string_view text);

 private:
  Rational scale_;
  Rational offset_;
};

Natural hyperdistance(const PicClass& x, const PicClass& y);
inline Natural distance_from_one(const PicClass& x) { return hyperdistance(PicClass(), x); }

// The p+1 classes at hyper-distance p: X_k = P_k·α_X for 0 <= k < p, then
// X_p = P_p·α_X. Throws DomainError when p is not prime.
std::vector<PicClass> neighbours(const PicClass& x, Natural p);

// All classes at hyper-distance exactly n from the identity class.
// `jobs` > 1 expands each frontier concurrently.
std::set<PicClass> fiber(Natural n, unsigned jobs = 1);

// Dedekind's psi function n ∏_{p|n} (1 + 1/p).
Natural psi(Natural n);

// Number of points of the projective line over Z/n, counted as orbits of
// primitive pairs (a, b) under the unit group.
Natural proj_line_count(Natural n);

struct Ball {
  std::vector<PicClass> vertices;  // BFS order, centre first
  struct Edge {
    std::size_t from, to;
    Natural prime;
  };
  std::vector<Edge> edges;
};

// Classes reachable from `centre` in at most `radius` prime steps along
// `primes`, with the connecting edges.
Ball ball(const PicClass& centre, std::span<const Natural> primes, Natural radius);
std::string ball_dot(const PicClass& centre, std::span<const Natural> primes, Natural radius);

}  // namespace arsite
