#include "ascurve/ffield.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ffield_internal.hpp"

namespace ascurve {

RatFun::RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den = Poly::one();
        return;
    }
    Poly g = gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num * o.den + o.num * den, den * o.den);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num * o.num, den * o.den); }

RatFun RatFun::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFun(den, num);
}

int poly_val(const Poly& p, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("poly_val of zero");
    int v = 0;
    Poly g = f;
    for (;;) {
        auto [q, r] = Poly::divrem(g, p);
        if (!r.is_zero()) return v;
        g = q;
        ++v;
    }
}

int ratfun_val(const Poly& p, const RatFun& f) {
    if (f.is_zero()) throw std::domain_error("ratfun_val of zero");
    return poly_val(p, f.num) - poly_val(p, f.den);
}

namespace {
Poly reverse_poly(const Poly& f) {
    Poly r;
    int d = f.degree();
    for (int i = 0; i <= d; ++i)
        if (f.coeff(unsigned(i))) r.set_coeff(unsigned(d - i), true);
    return r;
}
}  // namespace

RatFun ratfun_flip(const RatFun& f) {
    if (f.is_zero()) return f;
    int dn = f.num.degree(), dd = f.den.degree();
    int m = std::max(dn, dd);
    Poly n = reverse_poly(f.num).shifted_left(unsigned(m - dn));
    Poly d = reverse_poly(f.den).shifted_left(unsigned(m - dd));
    return RatFun(n, d);
}

RatFun ratfun_derivative(const RatFun& f) {
    return RatFun(derivative(f.num) * f.den + f.num * derivative(f.den), f.den * f.den);
}

Poly ratfun_mod(const RatFun& f, const Poly& p) {
    if (f.is_zero()) return Poly::zero();
    if ((f.den % p).is_zero()) throw std::domain_error("ratfun_mod: pole at the spot");
    return mulmod(f.num % p, inv_mod(f.den % p, p), p);
}

SpotAnalysis analyze_spot(const RatFun& r_chart, const Poly& p) {
    SpotAnalysis a;
    a.g = RatFun();
    RatFun h = r_chart;
    for (;;) {
        if (h.is_zero()) {
            a.m0 = 0;
            break;
        }
        int m = -ratfun_val(p, h);
        if (m <= 0) {
            a.m0 = 0;
            break;
        }
        if (m % 2 == 1) {
            a.m0 = m;
            break;
        }
        // strip the leading even term: h has exact pole order m at p
        Poly pk = Poly::one();
        for (int i = 0; i < m; ++i) pk = pk * p;
        Poly den0 = h.den / pk;  // exact: v_p(h.den)-v_p(h.num) = m and canonical form
        Poly c = mulmod(h.num % p, inv_mod(den0 % p, p), p);
        Poly s = sqrt_mod(c, p);
        Poly pk2 = Poly::one();
        for (int i = 0; i < m / 2; ++i) pk2 = pk2 * p;
        RatFun gstep(s, pk2);
        a.g = a.g + gstep;
        h = h + gstep * gstep + gstep;
    }
    a.r_red = h;
    return a;
}

SpotAnalysis BaseCurveData::analysis_for(const XSpot& s) const {
    auto it = spot_cache.find({s.at_infinity, s.p});
    if (it != spot_cache.end()) return it->second;
    return analyze_spot(chart_r(s.at_infinity), s.p);
}

BaseCurve::BaseCurve(RatFun r) {
    auto d = std::make_shared<BaseCurveData>();
    d->r = std::move(r);
    d->r_flip = ratfun_flip(d->r);

    // analyze every spot where r can have a pole, plus infinity
    std::vector<XSpot> spots;
    if (!d->r.is_zero())
        for (const auto& [p, e] : factorize(d->r.den))
            if (p.degree() >= 1) spots.push_back(XSpot::finite(p));
    spots.push_back(XSpot::infinity());

    long cond_sum = 0;
    for (const XSpot& s : spots) {
        SpotAnalysis a = analyze_spot(d->chart_r(s.at_infinity), s.p);
        if (a.m0 >= 1) {
            d->branch.push_back(s);
            cond_sum += long(a.m0 + 1) * s.p.degree();
        }
        d->spot_cache.emplace(SpotKey{s.at_infinity, s.p}, std::move(a));
    }
    if (d->branch.empty())
        throw std::invalid_argument(
            "y^2+y=r defines no absolutely irreducible curve: "
            "r has no odd reduced pole order anywhere");
    long twog2 = -4 + cond_sum;
    if (twog2 % 2 != 0 || twog2 < -2) throw std::logic_error("bad genus computation");
    d->genus = unsigned((twog2 + 2) / 2);
    d_ = std::move(d);
}

const RatFun& BaseCurve::r() const { return d_->r; }
const RatFun& BaseCurve::r_flipped() const { return d_->r_flip; }
unsigned BaseCurve::genus() const { return d_->genus; }
const std::vector<XSpot>& BaseCurve::branch_spots() const { return d_->branch; }

const SpotAnalysis& BaseCurve::spot_analysis(const XSpot& s) const {
    auto it = d_->spot_cache.find({s.at_infinity, s.p});
    if (it == d_->spot_cache.end())
        throw std::invalid_argument("spot_analysis: only pole spots and infinity are cached");
    return it->second;
}

bool BaseCurve::same_curve(const BaseCurve& o) const { return d_->r == o.d_->r; }

BaseCurve BaseCurve::from_data(std::shared_ptr<const BaseCurveData> d) {
    BaseCurve c;
    c.d_ = std::move(d);
    return c;
}

unsigned genus_base(const BaseCurve& c) { return c.genus(); }

// ---------------------------------------------------------------------------
// places

PlaceKind Place::kind() const {
    if (d_->at_inf) return PlaceKind::Infinite;
    switch (d_->behavior) {
        case PlaceData::Split: return PlaceKind::FiniteSplit;
        case PlaceData::Inert: return PlaceKind::FiniteInert;
        default: return PlaceKind::FiniteRamified;
    }
}

bool Place::at_infinity() const { return d_->at_inf; }
const Poly& Place::x_poly() const { return d_->p; }
const Poly& Place::y_branch() const { return d_->gamma; }
unsigned Place::degree() const { return d_->deg; }
unsigned Place::ram_index() const { return d_->e; }
bool Place::is_split() const { return d_->behavior == PlaceData::Split; }
bool Place::is_inert() const { return d_->behavior == PlaceData::Inert; }
bool Place::is_ramified() const { return d_->behavior == PlaceData::Ramified; }

Place Place::conjugate() const {
    if (!is_split()) return *this;
    auto nd = std::make_shared<PlaceData>(*d_);
    nd->gamma = (nd->gamma + Poly::one()) % nd->p;
    return Place(std::move(nd));
}

std::string Place::to_string() const {
    if (d_->at_inf) {
        if (is_ramified()) return "O";
        if (is_split()) return "inf(" + std::string(d_->gamma.is_zero() ? "0" : "1") + ")";
        return "inf_inert";
    }
    if (is_ramified()) return "place(" + poly_to_string(d_->p) + ")";
    if (is_inert()) return "inert(" + poly_to_string(d_->p) + ")";
    if (d_->p.degree() == 1) {
        std::string x0 = d_->p.coeff(0) ? "1" : "0";
        std::string y0 = d_->gamma.is_zero() ? "0" : "1";
        return "(" + x0 + "," + y0 + ")";
    }
    return "place(" + poly_to_string(d_->p) + "," + poly_to_string(d_->gamma) + ")";
}

bool Place::operator==(const Place& o) const {
    return d_->at_inf == o.d_->at_inf && d_->behavior == o.d_->behavior && d_->p == o.d_->p &&
           d_->gamma == o.d_->gamma;
}

bool Place::operator<(const Place& o) const {
    auto key = [](const PlaceData& d) {
        return std::tuple<int, const Poly&, int, const Poly&>(d.at_inf ? 1 : 0, d.p,
                                                              int(d.behavior), d.gamma);
    };
    return key(*d_) < key(*o.d_);
}

std::vector<Place> places_over(const BaseCurve& c, const XSpot& spot) {
    if (!spot.at_infinity) {
        if (spot.p.degree() < 1 || !is_irreducible(spot.p))
            throw std::invalid_argument("places_over: x-polynomial must be irreducible");
    }
    SpotAnalysis an = c.data()->analysis_for(spot);
    unsigned dp = unsigned(spot.p.degree());
    auto mk = [&](PlaceData::Behavior b, Poly gamma, Poly cbar, unsigned deg, unsigned e) {
        auto pd = std::make_shared<PlaceData>();
        pd->curve = c.data();
        pd->at_inf = spot.at_infinity;
        pd->p = spot.p;
        pd->behavior = b;
        pd->gamma = std::move(gamma);
        pd->cbar = std::move(cbar);
        pd->an = an;
        pd->deg = deg;
        pd->e = e;
        return Place(std::move(pd));
    };
    if (an.m0 >= 1) return {mk(PlaceData::Ramified, Poly(), Poly(), dp, 2)};
    Poly res = ratfun_mod(an.r_red, spot.p);
    Poly tr = trace_mod(res, spot.p);
    if (tr.is_one()) return {mk(PlaceData::Inert, Poly(), res, 2 * dp, 1)};
    auto sols = solve_wp_mod(res, spot.p);
    return {mk(PlaceData::Split, sols[0], Poly(), dp, 1),
            mk(PlaceData::Split, sols[1], Poly(), dp, 1)};
}

std::vector<Place> rational_places(const BaseCurve& c) {
    std::vector<Place> out;
    for (const XSpot& s :
         {XSpot::finite(Poly::x()), XSpot::finite(Poly::x() + Poly::one()), XSpot::infinity()}) {
        for (const Place& P : places_over(c, s))
            if (P.degree() == 1) out.push_back(P);
    }
    return out;
}

std::uint64_t count_base_points(const BaseCurve& c, unsigned n) {
    if (n < 1 || n > 24) throw std::invalid_argument("count_base_points: n must be in 1..24");
    FieldSpec F(n);
    const RatFun& r = c.r();
    std::uint64_t total = 0;
    for (std::uint64_t b = 0; b < F.order(); ++b) {
        FieldElement x0(F, b);
        FieldElement dv = eval_poly(r.den, x0);
        if (dv.is_zero()) continue;  // handled place-by-place below
        FieldElement val = eval_poly(r.num, x0) / dv;
        if (abs_trace(val) == 0) total += 2;
    }
    if (!c.r().is_zero()) {
        for (const auto& [p, e] : factorize(c.r().den)) {
            unsigned d = unsigned(p.degree());
            if (d < 1 || n % d != 0) continue;
            SpotAnalysis a = c.data()->analysis_for(XSpot::finite(p));
            if (a.m0 >= 1) {
                total += d;
            } else {
                Poly res = ratfun_mod(a.r_red, p);
                int tr = trace_mod(res, p).is_one() ? 1 : 0;
                int tr_big = int(n / d) % 2 ? tr : 0;
                if (tr_big == 0) total += 2 * d;
            }
        }
    }
    {
        SpotAnalysis a = c.data()->analysis_for(XSpot::infinity());
        if (a.m0 >= 1) {
            total += 1;
        } else {
            Poly res = ratfun_mod(a.r_red, Poly::x());
            int tr = res.is_one() ? 1 : 0;
            int tr_big = int(n) % 2 ? tr : 0;
            if (tr_big == 0) total += 2;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// function field elements

FFElem::FFElem(const BaseCurve& curve, Poly u_, Poly v_, Poly den_)
    : c(curve.data()), u(std::move(u_)), v(std::move(v_)), den(std::move(den_)) {
    if (den.is_zero()) throw std::domain_error("FFElem with zero denominator");
    if (u.is_zero() && v.is_zero()) {
        den = Poly::one();
        return;
    }
    Poly g = gcd(gcd(u, v), den);
    if (!g.is_one()) {
        u = u / g;
        v = v / g;
        den = den / g;
    }
}

BaseCurve FFElem::curve() const { return BaseCurve::from_data(c); }

static FFElem make_elem(const std::shared_ptr<const BaseCurveData>& c, Poly u, Poly v, Poly den) {
    FFElem f;
    f.c = c;
    f.u = std::move(u);
    f.v = std::move(v);
    f.den = std::move(den);
    if (f.den.is_zero()) throw std::domain_error("FFElem with zero denominator");
    if (f.u.is_zero() && f.v.is_zero()) {
        f.den = Poly::one();
        return f;
    }
    Poly g = gcd(gcd(f.u, f.v), f.den);
    if (!g.is_one()) {
        f.u = f.u / g;
        f.v = f.v / g;
        f.den = f.den / g;
    }
    return f;
}

FFElem FFElem::operator+(const FFElem& o) const {
    return make_elem(c, u * o.den + o.u * den, v * o.den + o.v * den, den * o.den);
}

FFElem FFElem::operator*(const FFElem& o) const {
    const Poly& rn = c->r.num;
    const Poly& rd = c->r.den;
    Poly nu = u * o.u * rd + v * o.v * rn;
    Poly nv = (u * o.v + o.u * v + v * o.v) * rd;
    return make_elem(c, std::move(nu), std::move(nv), den * o.den * rd);
}

bool FFElem::operator==(const FFElem& o) const {
    return u == o.u && v == o.v && den == o.den && c->r == o.c->r;
}

FFElem FFElem::conj() const { return make_elem(c, u + v, v, den); }

RatFun FFElem::norm() const {
    const Poly& rn = c->r.num;
    const Poly& rd = c->r.den;
    return RatFun(u * u * rd + u * v * rd + v * v * rn, rd * den * den);
}

RatFun FFElem::trace_fun() const { return RatFun(v, den); }

FFElem FFElem::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero function");
    const Poly& rn = c->r.num;
    const Poly& rd = c->r.den;
    Poly nn = u * u * rd + u * v * rd + v * v * rn;  // norm numerator
    return make_elem(c, (u + v) * den * rd, v * den * rd, std::move(nn));
}

FFElem FFElem::derivative_x() const {
    const Poly& rn = c->r.num;
    const Poly& rd = c->r.den;
    Poly a = derivative(rn) * rd + rn * derivative(rd);  // y' = r' = a / rd^2
    Poly b = rd * rd;
    Poly U = (derivative(u) * den + u * derivative(den)) * b + v * den * a;
    Poly V = (derivative(v) * den + v * derivative(den)) * b;
    return make_elem(c, std::move(U), std::move(V), den * den * b);
}

FieldElement FFElem::eval(const FieldElement& x0, const FieldElement& y0) const {
    FieldElement vd = eval_poly(den, x0);
    return (eval_poly(u, x0) + eval_poly(v, x0) * y0) / vd;
}

FFElem ff_zero(const BaseCurve& c) { return FFElem(c, Poly::zero(), Poly::zero(), Poly::one()); }
FFElem ff_one(const BaseCurve& c) { return FFElem(c, Poly::one(), Poly::zero(), Poly::one()); }
FFElem ff_x(const BaseCurve& c) { return FFElem(c, Poly::x(), Poly::zero(), Poly::one()); }
FFElem ff_y(const BaseCurve& c) { return FFElem(c, Poly::zero(), Poly::one(), Poly::one()); }
FFElem ff_from_ratfun(const BaseCurve& c, const RatFun& f) {
    return FFElem(c, f.num, Poly::zero(), f.den);
}
FFElem wp_apply(const FFElem& f) { return f * f + f; }

// ---------------------------------------------------------------------------
// valuations and divisors

std::pair<RatFun, RatFun> chart_ab(const FFElem& f, const PlaceData& pd) {
    RatFun fu(f.u, f.den), fv(f.v, f.den);
    if (pd.at_inf) {
        fu = ratfun_flip(fu);
        fv = ratfun_flip(fv);
    }
    return {fu + fv * pd.an.g, fv};
}

namespace {

// valuation of f at a split place, exact; series only when both conjugate
// residues vanish
long split_valuation(const FFElem& f, const PlaceData& pd, long norm_val) {
    auto [A, B] = chart_ab(f, pd);
    bool a_ok = A.is_zero() || ratfun_val(pd.p, A) >= 0;
    bool b_ok = B.is_zero() || ratfun_val(pd.p, B) >= 0;
    if (a_ok && b_ok) {
        Poly ra = ratfun_mod(A, pd.p);
        Poly rb = ratfun_mod(B, pd.p);
        Poly res_here = (ra + mulmod(rb, pd.gamma, pd.p)) % pd.p;
        Poly res_conj = (res_here + rb) % pd.p;
        if (!res_here.is_zero()) return 0;
        if (!res_conj.is_zero()) return norm_val;
    }
    return series_valuation(f, pd, pd.gamma);
}

long norm_val_at(const FFElem& f, bool at_inf, const Poly& p) {
    RatFun N = f.norm();
    if (at_inf) N = ratfun_flip(N);
    return ratfun_val(p, N);
}

}  // namespace

long valuation(const FFElem& f, const Place& P) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function");
    const PlaceData& pd = *P.data();
    long S = norm_val_at(f, pd.at_inf, pd.p);
    switch (pd.behavior) {
        case PlaceData::Ramified:
            return S;
        case PlaceData::Inert:
            if (S % 2) throw std::logic_error("odd norm valuation at inert place");
            return S / 2;
        default:
            return split_valuation(f, pd, S);
    }
}

void Divisor::add(const Place& p, long mult) {
    if (mult == 0) return;
    auto [it, fresh] = terms_.emplace(p, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

long Divisor::coeff(const Place& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, m] : terms_) d += m * long(p.degree());
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [p, m] : terms_)
        if (m < 0) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, m] : o.terms_) r.add(p, m);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, m] : o.terms_) r.add(p, -m);
    return r;
}

Divisor Divisor::operator*(long k) const {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [p, m] : terms_) r.add(p, m * k);
    return r;
}

bool Divisor::operator==(const Divisor& o) const { return terms_ == o.terms_; }

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, m] : terms_) {
        if (s.empty()) {
            if (m < 0) s += "-";
        } else {
            s += m < 0 ? " - " : " + ";
        }
        long a = m < 0 ? -m : m;
        s += std::to_string(a) + "*" + p.to_string();
    }
    return s;
}

Divisor conj_divisor(const Divisor& d) {
    Divisor r;
    for (const auto& [p, m] : d.terms()) r.add(p.conjugate(), m);
    return r;
}

Divisor divisor_of(const FFElem& f) {
    if (f.is_zero()) throw std::domain_error("divisor of the zero function");
    RatFun N = f.norm();
    std::set<Poly> cand;
    auto collect = [&](const Poly& g) {
        if (g.degree() < 1) return;
        for (const auto& [p, e] : factorize(g)) cand.insert(p);
    };
    collect(f.den);
    collect(f.c->r.den);
    collect(N.num);
    collect(N.den);

    BaseCurve C = BaseCurve::from_data(f.c);

    Divisor D;
    auto handle_spot = [&](const XSpot& s) {
        auto places = places_over(C, s);
        if (places.size() == 1) {
            const Place& P = places[0];
            long S = norm_val_at(f, s.at_infinity, s.p);
            long v = P.is_inert() ? S / 2 : S;
            if (P.is_inert() && S % 2) throw std::logic_error("odd norm valuation at inert place");
            D.add(P, v);
        } else {
            long S = norm_val_at(f, s.at_infinity, s.p);
            long v1 = split_valuation(f, *places[0].data(), S);
            D.add(places[0], v1);
            D.add(places[1], S - v1);
        }
    };
    for (const Poly& p : cand) handle_spot(XSpot::finite(p));
    handle_spot(XSpot::infinity());
    if (D.degree() != 0) throw std::logic_error("principal divisor of nonzero degree");
    return D;
}

LocalSeries local_expand(const FFElem& f, const Place& P, unsigned prec) {
    if (f.is_zero()) throw std::domain_error("local_expand of the zero function");
    if (prec < 1) throw std::invalid_argument("local_expand: precision must be positive");
    long v = valuation(f, P);
    auto win = expand_window(f, P, int(v), int(v) + int(prec));
    LocalSeries s;
    s.place = P;
    s.valuation = v;
    s.uniformizer = place_uniformizer_description(P);
    for (auto& [a, b] : win) {
        s.coeff.push_back(a);
        s.coeff_y.push_back(b);
    }
    return s;
}

WpReduction wp_reduce_local(const FFElem& f, const Place& P) {
    WpReduction out;
    if (f.is_zero()) {
        out.residue_trace = 0;
        return out;
    }
    long v = valuation(f, P);
    WpWindow w = wp_reduce_window(f, P, v);
    out.reduced_order = w.order;
    out.residue = w.res_a;
    out.residue_y = w.res_b;
    out.residue_trace = w.trace01;
    if (!P.is_inert() && P.data()->p.degree() <= 32) {
        auto ks = std::make_shared<FieldSpec>(P.data()->p);
        out.residue_field = ks;
        out.residue_elem = FieldElement(*ks, out.residue.bits64());
    }
    return out;
}

std::string place_uniformizer_description(const Place& P) {
    const PlaceData& pd = *P.data();
    std::string var = pd.at_inf ? "z" : "x";
    std::string base = pd.at_inf ? "z = 1/x; " : "";
    if (pd.behavior == PlaceData::Ramified) {
        int a = (pd.an.m0 + 1) / 2;
        std::string y = pd.an.g.is_zero() ? "y" : "(y + g)";
        return base + "t = (" + var + " + theta)^" + std::to_string(a) + " * " + y +
               ", theta the residue of " + var;
    }
    return base + "t = " + var + " + theta, theta the residue of " + var;
}

}  // namespace ascurve
