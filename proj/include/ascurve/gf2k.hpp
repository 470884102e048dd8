#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ascurve/poly2.hpp"

namespace ascurve {

// GF(2^n) = GF(2)[t]/(m(t)), n <= 32, elements packed in one word.  A spec is
// immutable after construction and can be shared freely across threads; all
// derived tables (trace mask, Artin-Schreier solver) are built eagerly.
class FieldSpec {
public:
    // Canonical modulus: minimal weight, then least in the descending
    // exponent order (for n=7 this is t^7+t+1).  n=1 uses modulus t.
    explicit FieldSpec(unsigned n);
    // Explicit modulus, validated irreducible; rejects with the offending
    // factor in the message when one is found.
    explicit FieldSpec(const Poly& modulus);

    unsigned degree() const { return n_; }
    const Poly& modulus() const { return modulus_; }
    std::uint64_t modulus_bits() const { return mod_bits_; }
    std::uint64_t order() const { return std::uint64_t(1) << n_; }
    std::uint64_t trace_mask() const { return trace_mask_; }

    bool operator==(const FieldSpec& o) const { return modulus_ == o.modulus_; }

    std::uint64_t reduce_product(std::uint64_t prod) const;
    std::uint64_t mul_bits(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv_bits(std::uint64_t a) const;
    // particular solution of s^2+s=c; only valid when trace(c)=0
    std::uint64_t wp_solve_bits(std::uint64_t c) const;

private:
    void build_tables();
    unsigned n_ = 0;
    Poly modulus_;
    std::uint64_t mod_bits_ = 0;
    std::uint64_t trace_mask_ = 0;
    std::array<std::uint64_t, 32> wp_rows_{};   // eliminated system rows (cols | rhs-pattern)
    std::array<int, 32> wp_pivot_row_{};        // pivot row per column, -1 if free
    std::array<std::uint64_t, 32> wp_transform_{};  // row ops applied to rhs
};

struct FieldElement {
    const FieldSpec* spec = nullptr;
    std::uint64_t bits = 0;

    FieldElement() = default;
    FieldElement(const FieldSpec& s, std::uint64_t b) : spec(&s), bits(b) {}

    bool is_zero() const { return bits == 0; }
    bool is_one() const { return bits == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    Poly to_poly() const { return Poly::from_bits(bits); }
};

FieldElement fe_zero(const FieldSpec& s);
FieldElement fe_one(const FieldSpec& s);
// reduce an arbitrary GF(2)[t] representative
FieldElement fe_from_poly(const FieldSpec& s, const Poly& p);

// a^(2^k)
FieldElement frobenius(FieldElement a, unsigned k);
// absolute trace to GF(2)
int abs_trace(const FieldElement& a);
// unique square root
FieldElement fe_sqrt(const FieldElement& a);
// the two solutions of s^2+s=c, smaller bits first; empty iff trace(c)=1
std::optional<std::pair<FieldElement, FieldElement>> solve_wp(const FieldElement& c);
FieldElement fe_inv(const FieldElement& a);
FieldElement fe_pow(FieldElement a, std::uint64_t e);

// Horner evaluation of a GF(2)[x] polynomial at a field point.
FieldElement eval_poly(const Poly& f, const FieldElement& x);

// All roots of f in GF(2^n) by exhaustive scan; contractual for n <= 24.
std::vector<FieldElement> roots_in(const Poly& f, const FieldSpec& spec);

}  // namespace ascurve
