#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ascurve {

// Thrown by the text parsers (polynomials, divisor expressions); carries the
// byte offset of the offending token.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Dense polynomial over GF(2), bit-packed: bit i of word i/64 is the
// coefficient of x^i.  The word vector never has trailing zero words, so the
// zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return from_bits(1); }
    static Poly x() { return from_bits(2); }
    static Poly from_bits(std::uint64_t bits);
    static Poly monomial(unsigned e);
    static Poly from_exponents(const std::vector<unsigned>& exps);

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    // -1 for the zero polynomial.
    int degree() const;
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool v);
    std::size_t weight() const;
    std::vector<unsigned> exponents() const;

    // Requires degree() < 64.
    std::uint64_t bits64() const;

    Poly operator+(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly shifted_left(unsigned k) const;
    Poly shifted_right(unsigned k) const;

    // f = q*g + r with deg r < deg g; g must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
    Poly operator/(const Poly& g) const { return divrem(*this, g).first; }
    Poly operator%(const Poly& g) const { return divrem(*this, g).second; }

    bool operator==(const Poly& o) const { return w_ == o.w_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Degree first, then the coefficient words as an integer.  For equal
    // degrees this matches lexicographic comparison of descending exponent
    // sequences, which is the canonical order used for factor lists and
    // modulus selection.
    bool operator<(const Poly& o) const;

    // Value at a point of GF(2).
    bool eval01(bool x) const;

private:
    void trim();
    std::vector<std::uint64_t> w_;
};

Poly gcd(Poly a, Poly b);
// d/dx in characteristic 2: x^k -> k*x^(k-1), so only odd k survive.
Poly derivative(const Poly& f);
bool is_perfect_square(const Poly& f);
// Inverse of squaring; f must have only even exponents.
Poly poly_sqrt(const Poly& f);

// Arithmetic in GF(2)[x]/(m), on representatives of degree < deg m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
// a^(2^k) mod m
Poly frob_mod(Poly a, unsigned k, const Poly& m);
// sum_{i<d} a^(2^i) mod m, d = deg m; lands in GF(2) when m is irreducible.
Poly trace_mod(const Poly& a, const Poly& m);
Poly inv_mod(const Poly& a, const Poly& m);
// a^(2^(d-1)) mod m: the square root when m is irreducible.
Poly sqrt_mod(const Poly& a, const Poly& m);
// Solutions s of s^2+s=a in GF(2)[x]/(m), m irreducible; empty when the
// absolute trace of a is 1, otherwise {s, s+1}.
std::vector<Poly> solve_wp_mod(const Poly& a, const Poly& m);

// Rabin's test; throws on constant input.
bool is_irreducible(const Poly& f);
// All monic irreducibles of degree d, sorted; cached, thread-safe.
const std::vector<Poly>& irreducibles_of_degree(unsigned d);
// Some irreducible factor of f (f nonconstant).
Poly find_irreducible_factor(const Poly& f);
// Factors sorted by degree then coefficient order, with multiplicities.
std::vector<std::pair<Poly, unsigned>> factorize(const Poly& f);

// Textual syntax: monomials joined by '+', e.g. "x^7+x+1"; any single
// letter works as the variable but must be used consistently.
Poly parse_poly(std::string_view text);
std::string poly_to_string(const Poly& f, char var = 'x');

}  // namespace ascurve
