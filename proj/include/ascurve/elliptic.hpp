#pragma once

#include <cstdint>
#include <vector>

#include "ascurve/gf2k.hpp"

namespace ascurve {

// Points of E: y^2 + y = x^3 + x over GF(2^n).  The curve is supersingular
// (a1 = 0, a3 = 1, a4 = 1, a6 = 0); the uniqueness facts about E among
// j-invariant-0 curves are background and not computed here.
struct EPoint {
    bool at_infinity = true;
    FieldElement x, y;

    static EPoint infinity() { return EPoint{}; }
    static EPoint affine(const FieldElement& x, const FieldElement& y);

    bool operator==(const EPoint& o) const;
    bool operator!=(const EPoint& o) const { return !(*this == o); }
};

bool on_curve(const FieldElement& x, const FieldElement& y);

// Chord-tangent group law for y^2 + a3*y = x^3 + a4*x with a3 = a4 = 1:
//   -(x,y) = (x, y+1)
//   chord: lambda = (y1+y2)/(x1+x2), x3 = lambda^2 + x1 + x2
//   tangent: lambda = x1^2 + 1 (from a3*dy = (x^2+a4)dx), x3 = lambda^2
//   y3 = lambda*(x1+x3) + y1 + 1 in both cases.
EPoint ec_add(const EPoint& p, const EPoint& q);
EPoint ec_neg(const EPoint& p);
EPoint ec_mul(long k, EPoint p);

// (x, y) -> (x+1, y+x+1); an endomorphism with iota^2 = [-1]
EPoint iota(const EPoint& p);
// coordinate-wise squaring
EPoint frob_point(const EPoint& p);

// all points of E(GF(2^n))
std::vector<EPoint> enumerate_points(const FieldSpec& F);

// checks F(P) = -P + iota(P) for every P in E(GF(2^n))
bool frobenius_identity_check(unsigned n);

// #E(GF(2^n)) by the closed five-case formula (cases by n mod 8)
std::uint64_t count_closed_form(unsigned n);

}  // namespace ascurve
