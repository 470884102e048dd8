#include <doctest.h>

#include <random>

#include "ascurve/poly2.hpp"

using namespace ascurve;

namespace {

// independent naive polynomial arithmetic used as the oracle below
using NPoly = std::vector<int>;

NPoly n_trim(NPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}
NPoly n_mul(const NPoly& a, const NPoly& b) {
    if (a.empty() || b.empty()) return {};
    NPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= a[i] & b[j];
    return n_trim(r);
}
Poly n_to_poly(const NPoly& a) {
    Poly p;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) p.set_coeff(unsigned(i), true);
    return p;
}
NPoly poly_to_n(const Poly& p) {
    NPoly a;
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(unsigned(i)) ? 1 : 0);
    return n_trim(a);
}

Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("parse and print round trip") {
    CHECK(poly_to_string(P("x^7+x+1")) == "x^7+x+1");
    CHECK(poly_to_string(P("1")) == "1");
    CHECK(poly_to_string(P("x")) == "x");
    CHECK(poly_to_string(P("0")) == "0");
    CHECK(P("x + x") == Poly::zero());
    CHECK(P("t^3+t+1") == P("x^3+x+1"));
    CHECK_THROWS_AS(P("x+y"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("2x"), ParseError);
    try {
        parse_poly("x^7+*");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("divrem long division") {
    // (x^3+x) / (x+1): quotient x^2+x, remainder 0, checked by hand
    auto [q, r] = Poly::divrem(P("x^3+x"), P("x+1"));
    CHECK(q == P("x^2+x"));
    CHECK(r.is_zero());
    auto [q2, r2] = Poly::divrem(P("x^5+x^2+1"), P("x^2+x"));
    CHECK(q2 * P("x^2+x") + r2 == P("x^5+x^2+1"));
    CHECK(r2.degree() < 2);
}

TEST_CASE("square of x^7+x+1") {
    CHECK(P("x^7+x+1") * P("x^7+x+1") == P("x^14+x^2+1"));
}

TEST_CASE("gcd is monic and divides") {
    CHECK(gcd(P("x^3+x"), P("x^3+x")) == P("x^3+x"));
    CHECK(gcd(P("x^2+x"), P("x^3+x^2")) == P("x^2+x"));
    CHECK(gcd(P("x^7+x+1"), P("x^2+x")).is_one());
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(P("x^7+x+1")));
    CHECK(!is_irreducible(P("x^2+1")));  // (x+1)^2
    CHECK(is_irreducible(P("x")));
    CHECK(is_irreducible(P("x+1")));
    CHECK(is_irreducible(P("x^2+x+1")));
    CHECK(!is_irreducible(P("x^2+x")));
    CHECK_THROWS(is_irreducible(P("1")));
}

TEST_CASE("degree-13 polynomial from the T^1 coefficient display") {
    // oracle: trial division by every irreducible of degree <= 6
    Poly f = P("x^13+x^12+x^11+x^10+x^8+x^5+x^4+x+1");
    bool has_factor = false;
    for (unsigned d = 1; d <= 6; ++d)
        for (const Poly& p : irreducibles_of_degree(d))
            if ((f % p).is_zero()) has_factor = true;
    CHECK(!has_factor);
    CHECK(is_irreducible(f));
}

TEST_CASE("factorization of the zero locus polynomial of y+x^6+x^5+x^2+x") {
    // (a^6+a^5+a^2+a)^2 + (a^6+a^5+a^2+a) + a^3+a expands, via the naive
    // oracle, to a^3*(a+1)^2*(a^7+a+1)
    NPoly q = poly_to_n(P("a^6+a^5+a^2+a"));
    Poly expanded = n_to_poly(n_mul(q, q)) + P("a^6+a^5+a^2+a") + P("a^3+a");
    CHECK(expanded == P("a^12+a^10+a^6+a^5+a^4+a^3"));
    // and equals the product a^3 (a+1)^2 (a^7+a+1), again via the oracle
    NPoly prod = n_mul(n_mul(poly_to_n(P("a^3")), n_mul(poly_to_n(P("a+1")), poly_to_n(P("a+1")))),
                       poly_to_n(P("a^7+a+1")));
    CHECK(n_to_poly(prod) == expanded);

    auto fac = factorize(expanded);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0].first == P("a"));
    CHECK(fac[0].second == 3);
    CHECK(fac[1].first == P("a+1"));
    CHECK(fac[1].second == 2);
    CHECK(fac[2].first == P("a^7+a+1"));
    CHECK(fac[2].second == 1);
}

TEST_CASE("factorize x and the square x^14+x^2+1") {
    auto f1 = factorize(P("x"));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == P("x"));
    CHECK(f1[0].second == 1);

    auto f2 = factorize(P("x^14+x^2+1"));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == P("x^7+x+1"));
    CHECK(f2[0].second == 2);
}

TEST_CASE("factorize re-multiplies to the input on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned deg = 1 + unsigned(rng() % 30);
        Poly f;
        for (unsigned i = 0; i <= deg; ++i)
            if (rng() & 1) f.set_coeff(i, true);
        f.set_coeff(deg, true);
        auto fac = factorize(f);
        Poly prod = Poly::one();
        for (auto& [p, e] : fac) {
            CHECK(is_irreducible(p));
            for (unsigned i = 0; i < e; ++i) prod = prod * p;
        }
        CHECK(prod == f);
        // factors pairwise distinct and sorted
        for (std::size_t i = 1; i < fac.size(); ++i) CHECK(fac[i - 1].first < fac[i].first);
    }
}

TEST_CASE("is_irreducible agrees with factorize on random inputs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned deg = 1 + unsigned(rng() % 20);
        Poly f;
        for (unsigned i = 0; i < deg; ++i)
            if (rng() & 1) f.set_coeff(i, true);
        f.set_coeff(deg, true);
        auto fac = factorize(f);
        bool irr = fac.size() == 1 && fac[0].second == 1;
        CHECK(irr == is_irreducible(f));
    }
}
