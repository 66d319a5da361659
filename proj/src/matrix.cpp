#include "arsite/matrix.hpp"

#include "arsite/error.hpp"

namespace arsite {

Mat2Q Mat2Q::inverse() const {
  Rational dt = det();
  if (dt.is_zero()) throw DomainError("singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

PrimitiveForm primitive_form(const Mat2Q& m) {
  if (m.is_zero()) throw DomainError("degenerate matrix");
  const std::array<const Rational*, 4> entries{&m.a, &m.b, &m.c, &m.d};
  Integer den_lcm = 1;
  for (const Rational* e : entries) den_lcm = lcm(den_lcm, e->den());
  Integer content = 0;
  for (const Rational* e : entries) content = gcd(content, e->num() * (den_lcm / e->den()));
  content = boost::multiprecision::abs(content);
  Rational scale(den_lcm, content);
  auto scaled = [&](const Rational& e) { return (e * scale).num(); };
  return {scale, IntMat2{scaled(m.a), scaled(m.b), scaled(m.c), scaled(m.d)}};
}

}  // namespace arsite
