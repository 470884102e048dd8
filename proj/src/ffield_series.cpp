// Local Laurent expansions at places of the base curve.
//
// Every place is treated in a finite chart (z = 1/x at infinity).  With theta
// the residue of the chart variable, the completion at an unramified place is
// k((t)) with x = theta + t, and y + g (g the local reducer of r) follows by
// Hensel lifting from its residue.  At a ramified place with reduced pole
// order m of r, the uniformizer is t = (x+theta)^((m+1)/2) * (y+g), and the
// chart variable expands as the fixed point of
//     zeta = (t^2 + t*zeta^((m+1)/2)) / U(zeta),   U(w) = r_red(theta+w)*w^m,
// after which y + g = t * zeta^(-(m+1)/2).

#include <utility>

#include "ascurve/ffield.hpp"
#include "ffield_internal.hpp"

namespace ascurve {

namespace {

constexpr int kZeroEnd = 1 << 28;  // "exactly zero" series marker end

struct NeedPrec {};

// residue field GF(2)[x]/(p)
struct PCtx {
    Poly p;
    using E = Poly;
    E zero() const { return Poly(); }
    E one() const { return Poly::one(); }
    bool is_zero(const E& a) const { return a.is_zero(); }
    E add(const E& a, const E& b) const { return a + b; }
    E mul(const E& a, const E& b) const { return (a * b) % p; }
    E inv(const E& a) const { return inv_mod(a, p); }
    E sqrt(const E& a) const { return sqrt_mod(a, p); }
    int trace01(const E& a) const { return trace_mod(a, p).is_one() ? 1 : 0; }
    E theta() const { return Poly::x() % p; }
    static std::pair<Poly, Poly> rep(const E& a) { return {a, Poly()}; }
};

// k[Y]/(Y^2+Y+cbar) over k = GF(2)[x]/(p): residue field of an inert place
struct QCtx {
    Poly p, cbar;
    using E = std::pair<Poly, Poly>;  // a + b*Y
    E zero() const { return {Poly(), Poly()}; }
    E one() const { return {Poly::one(), Poly()}; }
    bool is_zero(const E& a) const { return a.first.is_zero() && a.second.is_zero(); }
    E add(const E& a, const E& b) const { return {a.first + b.first, a.second + b.second}; }
    E mul(const E& a, const E& b) const {
        Poly aa = (a.first * b.first + a.second * b.second * cbar) % p;
        Poly bb = (a.first * b.second + a.second * b.first + a.second * b.second) % p;
        return {aa, bb};
    }
    E inv(const E& a) const {
        Poly nrm = (a.first * a.first + a.first * a.second + a.second * a.second * cbar) % p;
        Poly i = inv_mod(nrm, p);
        return {(a.first + a.second) * i % p, a.second * i % p};
    }
    E sqrt(const E& a) const {
        Poly b = sqrt_mod(a.second, p);
        Poly aa = sqrt_mod((a.first + a.second * cbar) % p, p);
        return {aa, b};
    }
    int trace01(const E& a) const { return trace_mod(a.second, p).is_one() ? 1 : 0; }
    E theta() const { return {Poly::x() % p, Poly()}; }
    E gammaY() const { return {Poly(), Poly::one()}; }
    static std::pair<Poly, Poly> rep(const E& a) { return a; }
};

// truncated Laurent series: exact coefficients on [lead, end), zero below lead
template <class Cx>
struct TS {
    int lead = kZeroEnd, end = kZeroEnd;
    std::vector<typename Cx::E> c;
};

template <class Cx>
struct Eng {
    Cx K;
    int wcap;

    using E = typename Cx::E;
    using S = TS<Cx>;

    S zero_s() const { return S{}; }

    void trim(S& s) const {
        std::size_t i = 0;
        while (i < s.c.size() && K.is_zero(s.c[i])) ++i;
        if (i) {
            s.c.erase(s.c.begin(), s.c.begin() + long(i));
            s.lead += int(i);
        }
        if (s.c.empty()) s.lead = s.end;
    }

    void cap(S& s) const {
        if (!s.c.empty() && s.end - s.lead > wcap) {
            s.c.resize(std::size_t(wcap));
            s.end = s.lead + wcap;
        }
    }

    S from_const(const E& e, int lead = 0) const {
        S s;
        s.lead = lead;
        s.end = lead + wcap;
        s.c.assign(std::size_t(wcap), K.zero());
        s.c[0] = e;
        trim(s);
        return s;
    }

    S monomial(int k) const { return from_const(K.one(), k); }

    // theta + t
    S var_series() const {
        S s = from_const(K.theta());
        if (s.c.empty()) return monomial(1);  // theta == 0
        s.c[1] = K.one();
        return s;
    }

    S add(const S& a, const S& b) const {
        long endl = std::min(long(a.end), long(b.end));
        long la = a.c.empty() ? endl : a.lead;
        long lb = b.c.empty() ? endl : b.lead;
        long lead = std::min({la, lb, endl});
        S s;
        s.lead = int(lead);
        s.end = int(endl);
        s.c.assign(std::size_t(endl - lead), K.zero());
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            long e = a.lead + long(i);
            if (e >= endl) break;
            s.c[std::size_t(e - lead)] = K.add(s.c[std::size_t(e - lead)], a.c[i]);
        }
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            long e = b.lead + long(i);
            if (e >= endl) break;
            s.c[std::size_t(e - lead)] = K.add(s.c[std::size_t(e - lead)], b.c[i]);
        }
        trim(s);
        cap(s);
        return s;
    }

    S mul(const S& a, const S& b) const {
        long la = a.c.empty() ? a.end : a.lead;
        long lb = b.c.empty() ? b.end : b.lead;
        long endl = std::min(la + long(b.end), lb + long(a.end));
        endl = std::min(endl, long(kZeroEnd));
        if (a.c.empty() || b.c.empty()) {
            S s;
            s.lead = s.end = int(endl);
            return s;
        }
        long lead = la + lb;
        long len = std::min(endl - lead, long(wcap));
        endl = lead + len;
        S s;
        s.lead = int(lead);
        s.end = int(endl);
        s.c.assign(std::size_t(len), K.zero());
        for (std::size_t i = 0; i < a.c.size() && long(i) < len; ++i) {
            if (K.is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size() && long(i + j) < len; ++j) {
                if (K.is_zero(b.c[j])) continue;
                s.c[i + j] = K.add(s.c[i + j], K.mul(a.c[i], b.c[j]));
            }
        }
        trim(s);
        return s;
    }

    S inv(S a) const {
        trim(a);
        if (a.c.empty()) throw NeedPrec{};  // zero to window precision
        long len = long(a.c.size());
        S s;
        s.lead = -a.lead;
        s.end = int(-a.lead + len);
        s.c.assign(std::size_t(len), K.zero());
        E i0 = K.inv(a.c[0]);
        s.c[0] = i0;
        for (long k = 1; k < len; ++k) {
            E acc = K.zero();
            for (long j = 1; j <= k; ++j)
                acc = K.add(acc, K.mul(a.c[std::size_t(j)], s.c[std::size_t(k - j)]));
            s.c[std::size_t(k)] = K.mul(i0, acc);
        }
        trim(s);
        return s;
    }

    S shift(S a, int k) const {
        if (a.c.empty()) {
            a.lead = a.end = int(std::min(long(a.end) + k, long(kZeroEnd)));
            return a;
        }
        a.lead += k;
        a.end += k;
        return a;
    }

    S pow(const S& a, unsigned k) const {
        S r = from_const(K.one());
        for (unsigned i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    S poly_at(const Poly& f, const S& X) const {
        if (f.is_zero()) return zero_s();
        int d = f.degree();
        S acc = from_const(K.one());
        for (int i = d - 1; i >= 0; --i) {
            acc = mul(acc, X);
            if (f.coeff(unsigned(i))) acc = add(acc, from_const(K.one()));
        }
        return acc;
    }

    S ratfun_at(const RatFun& f, const S& X) const {
        if (f.is_zero()) return zero_s();
        return mul(poly_at(f.num, X), inv(poly_at(f.den, X)));
    }

    // w with w^2 + w = rho and residue gamma; rho regular (lead >= 0)
    S hensel(const S& rho, const E& gamma) const {
        S w = from_const(gamma);
        for (int iter = 0; iter < 64; ++iter) {
            S err = add(add(mul(w, w), w), rho);
            if (err.c.empty()) return w;
            if (err.lead <= 0) throw std::logic_error("hensel: residue does not match branch");
            w = add(w, err);
        }
        throw std::logic_error("hensel: no convergence");
    }

    // zeta(t) and eta(t) = (y+g)(t) at a ramified place of reduced order m0
    std::pair<S, S> ram_param(const RatFun& r_red, int m0) const {
        S Xw = var_series();
        S rr = ratfun_at(r_red, Xw);
        S U = shift(rr, m0);
        trim(U);
        if (U.c.empty() || U.lead != 0) throw NeedPrec{};
        unsigned h = unsigned(m0 + 1) / 2;
        S zeta = zero_s();
        for (int iter = 0; iter < wcap + 8; ++iter) {
            // U composed at w = zeta (Horner over U's exact window)
            S Uc = from_const(U.c.empty() ? K.one() : U.c.back());
            for (std::size_t i = U.c.size(); i-- > 1;) {
                Uc = mul(Uc, zeta);
                Uc = add(Uc, from_const(U.c[i - 1]));
            }
            S cand = mul(add(monomial(2), mul(monomial(1), pow(zeta, h))), inv(Uc));
            zeta = cand;
        }
        S eta = mul(monomial(1), inv(pow(zeta, h)));
        // verify the curve equation to window precision
        S X = add(from_const(K.theta()), zeta);
        S err = add(add(mul(eta, eta), eta), ratfun_at(r_red, X));
        if (!err.c.empty()) throw NeedPrec{};
        return {zeta, eta};
    }
};

struct ElemAB {
    RatFun A, B;
};

template <class Cx>
std::vector<TS<Cx>> run_pipeline(const Eng<Cx>& E, const std::vector<ElemAB>& elems,
                                 const PlaceData& pd, const typename Cx::E& branch) {
    using S = TS<Cx>;
    std::vector<S> out;
    if (pd.behavior == PlaceData::Ramified) {
        auto [zeta, eta] = E.ram_param(pd.an.r_red, pd.an.m0);
        S X = E.add(E.from_const(E.K.theta()), zeta);
        for (const auto& e : elems)
            out.push_back(E.add(E.ratfun_at(e.A, X), E.mul(E.ratfun_at(e.B, X), eta)));
    } else {
        S X = E.var_series();
        S rho = E.ratfun_at(pd.an.r_red, X);
        if (!rho.c.empty() && rho.lead < 0)
            throw std::logic_error("reduced r with a pole at an unramified place");
        S yt = E.hensel(rho, branch);
        for (const auto& e : elems)
            out.push_back(E.add(E.ratfun_at(e.A, X), E.mul(E.ratfun_at(e.B, X), yt)));
    }
    return out;
}

std::vector<ElemAB> chart_elems(const std::vector<FFElem>& fs, const PlaceData& pd) {
    std::vector<ElemAB> es;
    es.reserve(fs.size());
    for (const FFElem& f : fs) {
        auto [A, B] = chart_ab(f, pd);
        es.push_back({A, B});
    }
    return es;
}

int start_window(const PlaceData& pd, int lo, int hi) {
    int w = 2 * (hi - std::min(lo, 0)) + pd.an.m0 + 8;
    return std::max(16, w);
}

template <class Cx>
std::vector<std::vector<std::pair<Poly, Poly>>> windows_with_ctx(
    Cx K, const std::vector<FFElem>& fs, const PlaceData& pd, const typename Cx::E& branch,
    int lo, int hi) {
    auto elems = chart_elems(fs, pd);
    for (int wcap = start_window(pd, lo, hi); wcap <= (1 << 20); wcap *= 2) {
        Eng<Cx> E{K, wcap};
        try {
            auto series = run_pipeline(E, elems, pd, branch);
            bool ok = true;
            for (auto& s : series)
                if (s.end < hi) ok = false;
            if (!ok) continue;
            std::vector<std::vector<std::pair<Poly, Poly>>> out;
            for (auto& s : series) {
                std::vector<std::pair<Poly, Poly>> win;
                for (int e = lo; e < hi; ++e) {
                    if (e < s.lead || e >= s.lead + int(s.c.size()))
                        win.emplace_back(Poly(), Poly());
                    else
                        win.push_back(Cx::rep(s.c[std::size_t(e - s.lead)]));
                }
                out.push_back(std::move(win));
            }
            return out;
        } catch (NeedPrec&) {
            continue;
        }
    }
    throw std::logic_error("series window exhausted");
}

template <class Cx>
long valuation_with_ctx(Cx K, const FFElem& f, const PlaceData& pd,
                        const typename Cx::E& branch) {
    auto elems = chart_elems({f}, pd);
    for (int wcap = start_window(pd, 0, 8); wcap <= (1 << 20); wcap *= 2) {
        Eng<Cx> E{K, wcap};
        try {
            auto series = run_pipeline(E, elems, pd, branch);
            auto& s = series[0];
            if (!s.c.empty()) return s.lead;
        } catch (NeedPrec&) {
        }
    }
    throw std::logic_error("series valuation: window exhausted (zero function?)");
}

std::vector<std::vector<std::pair<Poly, Poly>>> windows_dispatch(const std::vector<FFElem>& fs,
                                                                 const PlaceData& pd, int lo,
                                                                 int hi) {
    if (pd.behavior == PlaceData::Inert) {
        QCtx K{pd.p, pd.cbar};
        return windows_with_ctx(K, fs, pd, K.gammaY(), lo, hi);
    }
    PCtx K{pd.p};
    return windows_with_ctx(K, fs, pd, pd.gamma, lo, hi);
}

}  // namespace

long series_valuation(const FFElem& f, const PlaceData& pd, const Poly& gamma_branch) {
    if (pd.behavior == PlaceData::Inert) {
        QCtx K{pd.p, pd.cbar};
        return valuation_with_ctx(K, f, pd, K.gammaY());
    }
    PCtx K{pd.p};
    return valuation_with_ctx(K, f, pd, gamma_branch);
}

std::vector<std::pair<Poly, Poly>> expand_window(const FFElem& f, const Place& P, int lo,
                                                 int hi) {
    if (hi <= lo) return {};
    return windows_dispatch({f}, *P.data(), lo, hi)[0];
}

std::vector<std::vector<std::pair<Poly, Poly>>> expand_windows_batch(const std::vector<FFElem>& fs,
                                                                     const Place& P, int lo,
                                                                     int hi) {
    return windows_dispatch(fs, *P.data(), lo, hi);
}

namespace {

template <class Cx>
WpWindow wp_strip(Cx K, std::vector<typename Cx::E> c, int lo) {
    // c[i] is the coefficient of t^(lo+i); window reaches exponent 0
    WpWindow out;
    for (;;) {
        int first = -1;
        for (int i = 0; lo + i < 0; ++i) {
            if (!K.is_zero(c[std::size_t(i)])) {
                first = i;
                break;
            }
        }
        if (first < 0) {
            out.order = 0;
            auto r = Cx::rep(c[std::size_t(-lo)]);
            out.res_a = r.first;
            out.res_b = r.second;
            out.trace01 = K.trace01(c[std::size_t(-lo)]);
            return out;
        }
        int m = -(lo + first);
        if (m % 2 == 1) {
            out.order = unsigned(m);
            out.trace01 = 0;
            return out;
        }
        auto s = K.sqrt(c[std::size_t(first)]);
        c[std::size_t(first)] = K.zero();
        std::size_t half = std::size_t(-m / 2 - lo);
        c[half] = K.add(c[half], s);
    }
}

}  // namespace

WpWindow wp_reduce_window(const FFElem& f, const Place& P, long val) {
    const PlaceData& pd = *P.data();
    int lo = int(std::min(val, 0L));
    auto win = windows_dispatch({f}, pd, lo, 1)[0];
    if (pd.behavior == PlaceData::Inert) {
        QCtx K{pd.p, pd.cbar};
        std::vector<QCtx::E> c;
        for (auto& x : win) c.push_back(x);
        return wp_strip(K, std::move(c), lo);
    }
    PCtx K{pd.p};
    std::vector<Poly> c;
    for (auto& x : win) c.push_back(x.first);
    return wp_strip(K, std::move(c), lo);
}

}  // namespace ascurve
