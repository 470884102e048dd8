#include "ascurve/elliptic.hpp"

#include <stdexcept>

namespace ascurve {

bool on_curve(const FieldElement& x, const FieldElement& y) {
    FieldElement lhs = y * y + y;
    FieldElement rhs = x * x * x + x;
    return lhs == rhs;
}

EPoint EPoint::affine(const FieldElement& x, const FieldElement& y) {
    if (!on_curve(x, y)) throw std::invalid_argument("point not on E: y^2+y=x^3+x");
    EPoint p;
    p.at_infinity = false;
    p.x = x;
    p.y = y;
    return p;
}

bool EPoint::operator==(const EPoint& o) const {
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return x == o.x && y == o.y;
}

EPoint ec_neg(const EPoint& p) {
    if (p.at_infinity) return p;
    return EPoint::affine(p.x, p.y + fe_one(*p.x.spec));
}

EPoint ec_add(const EPoint& p, const EPoint& q) {
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;
    const FieldSpec& F = *p.x.spec;
    FieldElement one = fe_one(F);
    if (p.x == q.x) {
        if (p.y != q.y) return EPoint::infinity();  // conjugates are inverses
        FieldElement lambda = p.x * p.x + one;
        FieldElement x3 = lambda * lambda;
        FieldElement y3 = lambda * (p.x + x3) + p.y + one;
        return EPoint::affine(x3, y3);
    }
    FieldElement lambda = (p.y + q.y) / (p.x + q.x);
    FieldElement x3 = lambda * lambda + p.x + q.x;
    FieldElement y3 = lambda * (p.x + x3) + p.y + one;
    return EPoint::affine(x3, y3);
}

EPoint ec_mul(long k, EPoint p) {
    if (k < 0) {
        p = ec_neg(p);
        k = -k;
    }
    EPoint r = EPoint::infinity();
    while (k) {
        if (k & 1) r = ec_add(r, p);
        p = ec_add(p, p);
        k >>= 1;
    }
    return r;
}

EPoint iota(const EPoint& p) {
    if (p.at_infinity) return p;
    FieldElement one = fe_one(*p.x.spec);
    return EPoint::affine(p.x + one, p.y + p.x + one);
}

EPoint frob_point(const EPoint& p) {
    if (p.at_infinity) return p;
    return EPoint::affine(p.x * p.x, p.y * p.y);
}

std::vector<EPoint> enumerate_points(const FieldSpec& F) {
    std::vector<EPoint> pts;
    pts.push_back(EPoint::infinity());
    for (std::uint64_t b = 0; b < F.order(); ++b) {
        FieldElement x(F, b);
        FieldElement c = x * x * x + x;
        auto sols = solve_wp(c);
        if (!sols) continue;
        pts.push_back(EPoint::affine(x, sols->first));
        pts.push_back(EPoint::affine(x, sols->second));
    }
    return pts;
}

bool frobenius_identity_check(unsigned n) {
    if (n < 1 || n > 12) throw std::invalid_argument("frobenius_identity_check: n in 1..12");
    FieldSpec F(n);
    for (const EPoint& p : enumerate_points(F)) {
        if (frob_point(p) != ec_add(ec_neg(p), iota(p))) return false;
    }
    return true;
}

std::uint64_t count_closed_form(unsigned n) {
    if (n < 1 || n > 62) throw std::invalid_argument("count_closed_form: n in 1..62");
    std::uint64_t q = std::uint64_t(1) << n;
    unsigned m = n / 2;  // n = 2m or 2m+1
    std::uint64_t t = std::uint64_t(1) << (m + 1);
    switch (n % 8) {
        case 0: return q + 1 - t;
        case 1: case 7: return q + 1 + t;
        case 2: case 6: return q + 1;
        case 3: case 5: return q + 1 - t;
        default: return q + 1 + t;  // n = 4 mod 8
    }
}

}  // namespace ascurve
