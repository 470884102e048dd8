#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ascurve/gf2k.hpp"
#include "ascurve/poly2.hpp"

namespace ascurve {

// Rational function over GF(2), kept with gcd(num, den) = 1 and den != 0.
struct RatFun {
    Poly num, den = Poly::one();

    RatFun() = default;
    RatFun(Poly n, Poly d);
    static RatFun from_poly(Poly p) { return RatFun(std::move(p), Poly::one()); }

    bool is_zero() const { return num.is_zero(); }
    RatFun operator+(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun inv() const;
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
};

// multiplicity of irreducible p in f (f nonzero)
int poly_val(const Poly& p, const Poly& f);
// valuation of f at the place p of the x-line
int ratfun_val(const Poly& p, const RatFun& f);
// f(1/z), normalized back to a rational function in z
RatFun ratfun_flip(const RatFun& f);
RatFun ratfun_derivative(const RatFun& f);
// residue class of f mod p; requires ratfun_val(p, f) >= 0
Poly ratfun_mod(const RatFun& f, const Poly& p);

// A place of the projective x-line: a monic irreducible p(x), or the point at
// infinity (where the local coordinate is z = 1/x).
struct XSpot {
    bool at_infinity = false;
    Poly p;  // in the chart variable; for the infinite spot this is z itself

    static XSpot finite(Poly q) { return XSpot{false, std::move(q)}; }
    static XSpot infinity() { return XSpot{true, Poly::x()}; }
};

// Local Artin-Schreier reduction data of r at an x-line spot, in the chart
// variable of the spot.
struct SpotAnalysis {
    RatFun g;      // reducer: r_red = r + g^2 + g
    RatFun r_red;  // reduced form; pole order at the spot odd or zero
    int m0 = 0;    // reduced pole order (>= 1 means the cover ramifies here)
};

SpotAnalysis analyze_spot(const RatFun& r_chart, const Poly& p);

struct BaseCurveData;

// The curve C: y^2 + y = r(x), a degree-2 Artin-Schreier cover of the x-line.
// Construction validates absolute irreducibility (some x-line spot must carry
// an odd reduced pole order of r) and precomputes branch data and the genus.
class BaseCurve {
public:
    explicit BaseCurve(RatFun r);

    const RatFun& r() const;
    const RatFun& r_flipped() const;  // r(1/z) for the chart at infinity
    unsigned genus() const;
    const std::vector<XSpot>& branch_spots() const;
    const SpotAnalysis& spot_analysis(const XSpot& s) const;  // computes and caches nothing; see impl

    bool same_curve(const BaseCurve& o) const;
    const std::shared_ptr<const BaseCurveData>& data() const { return d_; }
    // rebuild a handle over already-validated shared data
    static BaseCurve from_data(std::shared_ptr<const BaseCurveData> d);

private:
    BaseCurve() = default;
    std::shared_ptr<const BaseCurveData> d_;
};

unsigned genus_base(const BaseCurve& c);
// number of degree-1 places after constant-field extension to GF(2^n), n <= 24
std::uint64_t count_base_points(const BaseCurve& c, unsigned n);

enum class PlaceKind { FiniteSplit, FiniteInert, FiniteRamified, Infinite };

struct PlaceData;

// A closed point of the base curve.  Split places are distinguished by the
// residue gamma of y + g, where g is the canonical local reducer of r (g = 0
// whenever r is regular at the spot, and then gamma^2+gamma = r mod p).
class Place {
public:
    Place() = default;  // empty handle; usable only as a container default
    PlaceKind kind() const;
    bool at_infinity() const;
    const Poly& x_poly() const;     // in the chart variable
    const Poly& y_branch() const;   // split places only
    unsigned degree() const;
    unsigned ram_index() const;     // e over the x-line: 1 or 2
    bool is_split() const;
    bool is_inert() const;
    bool is_ramified() const;
    Place conjugate() const;        // swaps the two split branches; identity otherwise
    std::string to_string() const;

    const std::shared_ptr<const PlaceData>& data() const { return d_; }
    explicit Place(std::shared_ptr<const PlaceData> d) : d_(std::move(d)) {}

    bool operator==(const Place& o) const;
    bool operator<(const Place& o) const;

private:
    std::shared_ptr<const PlaceData> d_;
};

// The places of C above one x-line spot (two split, one inert, or one
// ramified).  Split pairs come back ordered by their y_branch.
std::vector<Place> places_over(const BaseCurve& c, const XSpot& spot);
// All degree-1 places of C (used for the divisor shorthand R).
std::vector<Place> rational_places(const BaseCurve& c);

// Formal integer combination of places.
class Divisor {
public:
    Divisor() = default;

    void add(const Place& p, long mult);
    long coeff(const Place& p) const;
    long degree() const;
    bool empty() const { return terms_.empty(); }
    bool is_effective() const;
    const std::map<Place, long>& terms() const { return terms_; }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(long k) const;
    bool operator==(const Divisor& o) const;
    std::string to_string() const;

private:
    std::map<Place, long> terms_;
};

Divisor conj_divisor(const Divisor& d);

// Element (u(x) + v(x)*y)/den(x) of the function field of C, in canonical
// form: gcd(gcd(u, v), den) = 1 and den = 1 when the element is zero.
struct FFElem {
    std::shared_ptr<const BaseCurveData> c;
    Poly u, v, den = Poly::one();

    FFElem() = default;
    FFElem(const BaseCurve& curve, Poly u_, Poly v_, Poly den_);

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    BaseCurve curve() const;

    FFElem operator+(const FFElem& o) const;
    FFElem operator*(const FFElem& o) const;
    bool operator==(const FFElem& o) const;
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    FFElem conj() const;          // y -> y + 1
    FFElem inv() const;
    RatFun norm() const;          // f * conj(f), in GF(2)(x)
    RatFun trace_fun() const;     // f + conj(f) = v/den
    FFElem derivative_x() const;  // d/dx with dy = dr (implicit differentiation)

    // value at an affine point (x0, y0) with den(x0) != 0
    FieldElement eval(const FieldElement& x0, const FieldElement& y0) const;
};

FFElem ff_zero(const BaseCurve& c);
FFElem ff_one(const BaseCurve& c);
FFElem ff_x(const BaseCurve& c);
FFElem ff_y(const BaseCurve& c);
FFElem ff_from_ratfun(const BaseCurve& c, const RatFun& f);
FFElem wp_apply(const FFElem& f);  // f^2 + f

long valuation(const FFElem& f, const Place& P);
Divisor divisor_of(const FFElem& f);

// Laurent coefficients of f at P for exponents lo..hi-1.  Coefficients are
// residue-field representatives mod x_poly; the second component is the
// Y-part at inert places and zero otherwise.
std::vector<std::pair<Poly, Poly>> expand_window(const FFElem& f, const Place& P, int lo, int hi);

struct LocalSeries {
    Place place;
    long valuation = 0;  // exponent of the first nonzero coefficient
    std::vector<Poly> coeff;
    std::vector<Poly> coeff_y;  // inert places only
    std::string uniformizer;
};

LocalSeries local_expand(const FFElem& f, const Place& P, unsigned prec);

struct WpReduction {
    unsigned reduced_order = 0;  // 0 = unramified at P after reduction
    Poly residue, residue_y;     // constant term of the reduced series when order is 0
    int residue_trace = 0;       // absolute trace of that residue
    // residue as a field element when the residue field fits a FieldSpec
    std::shared_ptr<const FieldSpec> residue_field;
    std::optional<FieldElement> residue_elem;
};

WpReduction wp_reduce_local(const FFElem& f, const Place& P);

std::string place_uniformizer_description(const Place& P);

}  // namespace ascurve
