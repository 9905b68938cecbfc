#pragma once

#include <algorithm>
#include <cmath>

#include "crmin/errors.hpp"
#include "crmin/types.hpp"

namespace crmin {

// Cross-ratio of four mutually distinct complex numbers:
//   CR(q1,q2,q3,q4) = (q1-q2)(q3-q4) / ((q2-q3)(q4-q1)).
inline Complex cross_ratio(Complex q1, Complex q2, Complex q3, Complex q4) {
  const Complex d1 = q2 - q3;
  const Complex d2 = q4 - q1;
  if (std::abs(d1) < 1e-300 || std::abs(d2) < 1e-300)
    throw DegenerateQuad("cross_ratio: coincident denominator points");
  return (q1 - q2) * (q3 - q4) / (d1 * d2);
}

// Solves CR(a,b,c,d) = q for the fourth vertex d. The denominator scale is
// measured against the local point scale, not absolutely, because lattice
// quads shrink with the mesh size.
inline Complex solve_fourth_vertex(Complex q, Complex a, Complex b, Complex c,
                                   double rel_tol = 1e-12) {
  const Complex den = q * (b - c) + (a - b);
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
  if (std::abs(den) < rel_tol * scale)
    throw DegenerateQuad("solve_fourth_vertex: degenerate configuration");
  return (q * a * (b - c) + c * (a - b)) / den;
}

struct UnitVector3 : Vec3 {};

// Stereographic projection C -> S^2 \ {north pole}.
inline UnitVector3 stereo_sigma(Complex z) {
  if (!is_finite(z)) throw DomainError("stereo_sigma: non-finite argument");
  const double n2 = std::norm(z);
  const double s = 1.0 / (1.0 + n2);
  return UnitVector3{{2.0 * z.real() * s, 2.0 * z.imag() * s, (n2 - 1.0) * s}};
}

inline Complex inverse_stereographic(const Vec3& N) {
  if (N.z >= 1.0 - 1e-9) throw NorthPole("inverse_stereographic: north pole");
  return Complex(N.x, N.y) / (1.0 - N.z);
}

// rho(z) = (1 - z^2, i(1 + z^2), 2z); isotropic: component squares sum to 0.
inline CVec3 rho(Complex z) {
  const Complex z2 = z * z;
  return {Complex(1.0) - z2, kI * (Complex(1.0) + z2), 2.0 * z};
}

// The two-point variant appearing in the discrete Weierstrass formulas.
inline CVec3 rho_pair(Complex gp, Complex g) {
  const Complex prod = gp * g;
  return {Complex(1.0) - prod, kI * (Complex(1.0) + prod), gp + g};
}

// Remainder kernel
//   L(la, lb, H) = log((i lb e^H + la)/(i lb + la e^H)) + H (la - i lb)/(la + i lb),
// analytic and odd in H on the strip |Im H| <= pi/4, with L = O(H^3) at 0.
inline Complex remainder_L(double la, double lb, Complex H) {
  if (!(la > 0.0) || !(lb > 0.0))
    throw DomainError("remainder_L: lengths must be positive");
  if (std::abs(H.imag()) > 0.25 * M_PI + 1e-12)
    throw DomainError("remainder_L: H outside the strip |Im H| <= pi/4");
  const Complex ilb(0.0, lb);
  const Complex eH = std::exp(H);
  return std::log((ilb * eH + la) / (ilb + la * eH)) + H * (la - ilb) / (la + ilb);
}

}  // namespace crmin
