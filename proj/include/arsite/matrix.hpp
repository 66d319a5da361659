#pragma once

#include <array>

#include "arsite/rational.hpp"

namespace arsite {

// 2x2 matrix over the rationals, row-major [[a, b], [c, d]].
struct Mat2Q {
  Rational a{1}, b{0}, c{0}, d{1};

  static Mat2Q identity() { return {}; }

  Rational det() const { return a * d - b * c; }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  Mat2Q inverse() const;

  friend Mat2Q operator*(const Mat2Q& x, const Mat2Q& y);
  friend bool operator==(const Mat2Q& x, const Mat2Q& y) = default;
};

struct IntMat2 {
  Integer a, b, c, d;

  Integer det() const { return a * d - b * c; }
  friend bool operator==(const IntMat2& x, const IntMat2& y) = default;
};

struct PrimitiveForm {
  Rational scale;
  IntMat2 matrix;
};

// Smallest positive rational multiple of `m` that is an integral matrix.
// The result has content 1. Throws DomainError on the zero matrix.
PrimitiveForm primitive_form(const Mat2Q& m);

}  // namespace arsite
