#include "ascurve/gf2k.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ascurve {

namespace {

Poly canonical_modulus(unsigned n) {
    if (n < 1 || n > 32) throw std::invalid_argument("field degree must be in 1..32");
    if (n == 1) return Poly::x();  // weight 1, least of the two degree-1 irreducibles
    // enumerate by weight, then by the coefficient order, which matches
    // lexicographic order on descending exponent sequences
    for (unsigned weight = 3; weight <= n + 1; weight += 2) {
        std::vector<unsigned> mid(weight - 2);
        // middle exponents e_1 < e_2 < ... drawn from 1..n-1
        for (unsigned i = 0; i < mid.size(); ++i) mid[i] = i + 1;
        for (;;) {
            Poly f = Poly::monomial(n) + Poly::one();
            for (unsigned e : mid) f += Poly::monomial(e);
            if (is_irreducible(f)) return f;
            // next combination (ascending lexicographic => ascending bits order)
            int i = int(mid.size()) - 1;
            while (i >= 0 && mid[unsigned(i)] == n - mid.size() + unsigned(i)) --i;
            if (i < 0) break;
            ++mid[unsigned(i)];
            for (unsigned j = unsigned(i) + 1; j < mid.size(); ++j) mid[j] = mid[j - 1] + 1;
        }
    }
    throw std::logic_error("no irreducible modulus found");  // cannot happen for n <= 32
}

}  // namespace

FieldSpec::FieldSpec(unsigned n) : n_(n), modulus_(canonical_modulus(n)) {
    mod_bits_ = modulus_.bits64();
    build_tables();
}

FieldSpec::FieldSpec(const Poly& modulus) : modulus_(modulus) {
    int d = modulus.degree();
    if (d < 1 || d > 32) throw std::invalid_argument("modulus degree must be in 1..32");
    n_ = unsigned(d);
    if (!is_irreducible(modulus)) {
        Poly f = find_irreducible_factor(modulus);
        throw std::invalid_argument("modulus " + poly_to_string(modulus, 't') +
                                    " is reducible: divisible by " + poly_to_string(f, 't'));
    }
    mod_bits_ = modulus.bits64();
    build_tables();
}

std::uint64_t FieldSpec::reduce_product(std::uint64_t prod) const {
    if (n_ == 1) {
        // modulus may be t (bits 0b10) or t+1 (0b11); fold bits accordingly
        if (mod_bits_ == 2) return prod & 1;
        std::uint64_t r = prod;
        int d = 63 - std::countl_zero(r | 1);
        while (r > 1 && d >= 1) {
            r ^= mod_bits_ << (d - 1);
            if (r == 0) break;
            d = 63 - std::countl_zero(r);
        }
        return r;
    }
    std::uint64_t r = prod;
    while (r >> n_) {
        int d = 63 - std::countl_zero(r);
        r ^= mod_bits_ << (d - int(n_));
    }
    return r;
}

std::uint64_t FieldSpec::mul_bits(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t prod = 0;
    while (a) {
        unsigned s = unsigned(std::countr_zero(a));
        a &= a - 1;
        prod ^= b << s;
    }
    return reduce_product(prod);
}

std::uint64_t FieldSpec::inv_bits(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("field inversion of zero");
    // extended Euclid on bit-packed polynomials
    std::uint64_t r0 = mod_bits_, r1 = a;
    std::uint64_t t0 = 0, t1 = 1;
    auto deg = [](std::uint64_t v) { return v ? 63 - std::countl_zero(v) : -1; };
    while (r1) {
        int d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(t0, t1);
            continue;
        }
        r0 ^= r1 << (d0 - d1);
        t0 ^= t1 << (d0 - d1);
    }
    // r0 == gcd == 1
    return reduce_product(t0);
}

void FieldSpec::build_tables() {
    // trace mask: trace is GF(2)-linear, so cache trace(t^i) per basis bit
    trace_mask_ = 0;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t p = reduce_product(std::uint64_t(1) << i);
        std::uint64_t s = 0;
        for (unsigned k = 0; k < n_; ++k) {
            s ^= p;
            p = mul_bits(p, p);
        }
        if (s & 1) trace_mask_ |= std::uint64_t(1) << i;
        if (s > 1) throw std::logic_error("trace outside GF(2); bad modulus");
    }
    // eliminate the linear system for s^2+s=c once; wp_solve applies it in O(n)
    std::array<std::uint64_t, 32> rows{};
    std::array<std::uint64_t, 32> tr{};
    for (unsigned j = 0; j < n_; ++j) {
        std::uint64_t bj = reduce_product(std::uint64_t(1) << j);
        std::uint64_t img = mul_bits(bj, bj) ^ bj;
        for (unsigned r = 0; r < n_; ++r)
            if ((img >> r) & 1) rows[r] |= std::uint64_t(1) << j;
    }
    for (unsigned r = 0; r < n_; ++r) tr[r] = std::uint64_t(1) << r;
    wp_pivot_row_.fill(-1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n_ && rank < n_; ++col) {
        unsigned sel = rank;
        while (sel < n_ && !((rows[sel] >> col) & 1)) ++sel;
        if (sel == n_) continue;
        std::swap(rows[rank], rows[sel]);
        std::swap(tr[rank], tr[sel]);
        for (unsigned r = 0; r < n_; ++r) {
            if (r != rank && ((rows[r] >> col) & 1)) {
                rows[r] ^= rows[rank];
                tr[r] ^= tr[rank];
            }
        }
        wp_pivot_row_[col] = int(rank);
        ++rank;
    }
    wp_rows_ = rows;
    wp_transform_ = tr;
}

std::uint64_t FieldSpec::wp_solve_bits(std::uint64_t c) const {
    std::uint64_t s = 0;
    for (unsigned col = 0; col < n_; ++col) {
        int pr = wp_pivot_row_[col];
        if (pr < 0) continue;
        if (std::popcount(wp_transform_[unsigned(pr)] & c) & 1) s |= std::uint64_t(1) << col;
    }
    return s;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (spec != o.spec && !(spec && o.spec && *spec == *o.spec))
        throw std::invalid_argument("field elements from different fields");
    return FieldElement(*spec, bits ^ o.bits);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (spec != o.spec && !(spec && o.spec && *spec == *o.spec))
        throw std::invalid_argument("field elements from different fields");
    return FieldElement(*spec, spec->mul_bits(bits, o.bits));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (spec != o.spec && !(spec && o.spec && *spec == *o.spec))
        throw std::invalid_argument("field elements from different fields");
    return FieldElement(*spec, spec->mul_bits(bits, spec->inv_bits(o.bits)));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec == o.spec) return bits == o.bits;
    if (!spec || !o.spec) return false;
    return *spec == *o.spec && bits == o.bits;
}

FieldElement fe_zero(const FieldSpec& s) { return FieldElement(s, 0); }
FieldElement fe_one(const FieldSpec& s) { return FieldElement(s, s.reduce_product(1)); }

FieldElement fe_from_poly(const FieldSpec& s, const Poly& p) {
    Poly r = p % s.modulus();
    return FieldElement(s, r.bits64());
}

FieldElement frobenius(FieldElement a, unsigned k) {
    k %= a.spec->degree();
    for (unsigned i = 0; i < k; ++i) a = a * a;
    return a;
}

int abs_trace(const FieldElement& a) {
    return std::popcount(a.bits & a.spec->trace_mask()) & 1;
}

FieldElement fe_sqrt(const FieldElement& a) { return frobenius(a, a.spec->degree() - 1); }

std::optional<std::pair<FieldElement, FieldElement>> solve_wp(const FieldElement& c) {
    if (abs_trace(c)) return std::nullopt;
    std::uint64_t s = c.spec->wp_solve_bits(c.bits);
    FieldElement a(*c.spec, s), b(*c.spec, s ^ 1);
    if (b.bits < a.bits) std::swap(a, b);
    if ((a * a + a) != c) throw std::logic_error("solve_wp: verification failed");
    return std::make_pair(a, b);
}

FieldElement fe_inv(const FieldElement& a) {
    return FieldElement(*a.spec, a.spec->inv_bits(a.bits));
}

FieldElement fe_pow(FieldElement a, std::uint64_t e) {
    FieldElement r = fe_one(*a.spec);
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

FieldElement eval_poly(const Poly& f, const FieldElement& x) {
    FieldElement acc = fe_zero(*x.spec);
    int d = f.degree();
    for (int i = d; i >= 0; --i) {
        acc = acc * x;
        if (f.coeff(unsigned(i))) acc = acc + fe_one(*x.spec);
    }
    return acc;
}

std::vector<FieldElement> roots_in(const Poly& f, const FieldSpec& spec) {
    if (f.is_zero()) throw std::invalid_argument("roots_in: zero polynomial");
    if (spec.degree() > 24) throw std::invalid_argument("roots_in: field degree above scan bound 24");
    std::vector<FieldElement> out;
    for (std::uint64_t b = 0; b < spec.order(); ++b) {
        FieldElement x(spec, b);
        if (eval_poly(f, x).is_zero()) out.push_back(x);
    }
    return out;
}

}  // namespace ascurve
