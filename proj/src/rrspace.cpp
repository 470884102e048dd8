#include "ascurve/rrspace.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "ascurve/gf2mat.hpp"
#include "ffield_internal.hpp"

namespace ascurve {

namespace {

struct Ansatz {
    Poly c;       // forced denominator
    int du, dv;   // degree bounds for the pure-x and the y-part numerator
};

Ansatz build_ansatz(const BaseCurve& curve, const Divisor& G,
                    const std::vector<Place>& inf_places) {
    // denominator from the positive part of G on the x-line
    std::map<Poly, long> kp;
    for (const auto& [P, n] : G.terms()) {
        if (n <= 0 || P.at_infinity()) continue;
        long need = P.is_ramified() ? (n + 1) / 2 : n;
        auto [it, fresh] = kp.emplace(P.x_poly(), need);
        if (!fresh) it->second = std::max(it->second, need);
    }
    Poly c = Poly::one();
    for (const auto& [p, k] : kp)
        for (long i = 0; i < k; ++i) c = c * p;

    long m_inf = 0, w_inf = 0;
    unsigned e_min = 2;
    FFElem y = ff_y(curve);
    for (const Place& P : inf_places) {
        m_inf = std::max(m_inf, G.coeff(P));
        w_inf = std::max(w_inf, -valuation(y, P));
        e_min = std::min(e_min, P.ram_index());
    }
    int dc = c.degree();
    int du = dc + int((m_inf + w_inf + 1 + long(e_min) - 1) / long(e_min)) + 1;
    int dv = dc + int((m_inf + 1 + long(e_min) - 1) / long(e_min)) + 1;
    return {c, du, dv};
}

}  // namespace

std::vector<FFElem> rr_basis(const BaseCurve& curve, const Divisor& G) {
    for (const auto& [P, n] : G.terms())
        if (P.is_inert())
            throw std::invalid_argument("rr_basis: inert place in divisor support: " +
                                        P.to_string());

    std::vector<Place> inf_places = places_over(curve, XSpot::infinity());
    Ansatz an = build_ansatz(curve, G, inf_places);

    // constraint places: everything above supp G, above poles of r, and infinity
    std::set<Poly> spots;
    for (const auto& [P, n] : G.terms())
        if (!P.at_infinity()) spots.insert(P.x_poly());
    if (!curve.r().is_zero())
        for (const auto& [p, e] : factorize(curve.r().den)) spots.insert(p);
    std::vector<Place> cps;
    for (const Poly& p : spots)
        for (const Place& P : places_over(curve, XSpot::finite(p))) cps.push_back(P);
    for (const Place& P : inf_places) cps.push_back(P);

    // monomial columns: y*x^0..y*x^dv, then x^0..x^du
    std::vector<FFElem> monomials;
    for (int j = 0; j <= an.dv; ++j)
        monomials.push_back(FFElem(curve, Poly::zero(), Poly::monomial(unsigned(j)), Poly::one()));
    for (int j = 0; j <= an.du; ++j)
        monomials.push_back(FFElem(curve, Poly::monomial(unsigned(j)), Poly::zero(), Poly::one()));
    std::size_t cols = monomials.size();

    // collect constraint rows
    std::vector<std::vector<std::uint64_t>> rows;
    std::size_t words = (cols + 63) / 64;
    FFElem y = ff_y(curve);
    int maxd = std::max(an.du, an.dv);
    for (const Place& P : cps) {
        long vc = P.at_infinity() ? -long(P.ram_index()) * an.c.degree()
                                  : long(P.ram_index()) * poly_val(P.x_poly(), an.c);
        long bound = vc - G.coeff(P);  // need v_P(u+vy) >= bound
        long vy = valuation(y, P);
        long lo = std::min(0L, vy) - (P.at_infinity() ? long(P.ram_index()) * maxd : 0);
        if (bound <= lo) continue;
        auto wins = expand_windows_batch(monomials, P, int(lo), int(bound));
        unsigned dbits = unsigned(P.x_poly().degree());
        std::size_t ncoef = std::size_t(bound - lo);
        for (std::size_t t = 0; t < ncoef; ++t) {
            unsigned parts = P.is_inert() ? 2 : 1;
            for (unsigned part = 0; part < parts; ++part) {
                for (unsigned bit = 0; bit < dbits; ++bit) {
                    std::vector<std::uint64_t> row(words, 0);
                    bool nonzero = false;
                    for (std::size_t j = 0; j < cols; ++j) {
                        const auto& coef = wins[j][t];
                        const Poly& rep = part ? coef.second : coef.first;
                        if (rep.coeff(bit)) {
                            row[j / 64] |= std::uint64_t(1) << (j % 64);
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
    }

    BitMat M(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < cols; ++j)
            if ((rows[r][j / 64] >> (j % 64)) & 1) M.set(r, j, true);

    auto null_basis = M.nullspace_basis();
    std::vector<FFElem> basis;
    for (const auto& vec : null_basis) {
        Poly u, v;
        for (int j = 0; j <= an.dv; ++j)
            if (BitMat::vec_get(vec, std::size_t(j))) v.set_coeff(unsigned(j), true);
        for (int j = 0; j <= an.du; ++j)
            if (BitMat::vec_get(vec, std::size_t(an.dv + 1 + j))) u.set_coeff(unsigned(j), true);
        basis.push_back(FFElem(curve, u, v, an.c));
    }
    return basis;
}

unsigned rr_dim(const BaseCurve& c, const Divisor& G) { return unsigned(rr_basis(c, G).size()); }

bool rr_member(const FFElem& f, const Divisor& G) {
    if (f.is_zero()) return true;
    return (divisor_of(f) + G).is_effective();
}

std::optional<std::uint64_t> coords_in_span(const FFElem& f, const std::vector<FFElem>& basis) {
    if (basis.size() > 64) throw std::invalid_argument("coords_in_span: basis too large");
    if (basis.empty()) return f.is_zero() ? std::optional<std::uint64_t>(0) : std::nullopt;
    // common denominator
    Poly D = Poly::one();
    auto lcm_in = [&](const Poly& d) {
        Poly g = gcd(D, d);
        D = D * (d / g);
    };
    for (const auto& b : basis) lcm_in(b.den);
    lcm_in(f.den);
    auto scaled = [&](const FFElem& g) {
        Poly s = D / g.den;
        return std::make_pair(g.u * s, g.v * s);
    };
    int maxu = -1, maxv = -1;
    std::vector<std::pair<Poly, Poly>> nums;
    for (const auto& b : basis) {
        nums.push_back(scaled(b));
        maxu = std::max(maxu, nums.back().first.degree());
        maxv = std::max(maxv, nums.back().second.degree());
    }
    auto tgt = scaled(f);
    maxu = std::max(maxu, tgt.first.degree());
    maxv = std::max(maxv, tgt.second.degree());
    std::size_t nrows = std::size_t(maxu + 1 + maxv + 1);
    BitMat M(nrows, basis.size() + 1);
    auto fill = [&](std::size_t col, const std::pair<Poly, Poly>& uv) {
        for (int i = 0; i <= maxu; ++i)
            if (uv.first.coeff(unsigned(i))) M.set(std::size_t(i), col, true);
        for (int i = 0; i <= maxv; ++i)
            if (uv.second.coeff(unsigned(i))) M.set(std::size_t(maxu + 1 + i), col, true);
    };
    for (std::size_t j = 0; j < nums.size(); ++j) fill(j, nums[j]);
    fill(basis.size(), tgt);
    auto pivots = M.rref();
    std::uint64_t coords = 0;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == basis.size()) return std::nullopt;  // target column is a pivot
        if (M.get(r, basis.size())) coords |= std::uint64_t(1) << pivots[r];
    }
    // verify
    FFElem acc = ff_zero(BaseCurve::from_data(f.c));
    for (std::size_t j = 0; j < basis.size(); ++j)
        if ((coords >> j) & 1) acc = acc + basis[j];
    if (!(acc == f)) return std::nullopt;
    return coords;
}

namespace {

// echelonize 64-bit coordinate rows; returns reduced nonzero rows, highest
// pivot first
std::vector<std::uint64_t> echelon_rows(std::vector<std::uint64_t> rows) {
    std::vector<std::uint64_t> out;
    for (int bit = 63; bit >= 0; --bit) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> bit) & 1) {
                sel = i;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::uint64_t pivot = rows[sel];
        rows.erase(rows.begin() + long(sel));
        for (auto& r : rows)
            if ((r >> bit) & 1) r ^= pivot;
        for (auto& r : out)
            if ((r >> bit) & 1) r ^= pivot;
        out.push_back(pivot);
    }
    return out;
}

}  // namespace

bool in_row_space(const std::vector<std::uint64_t>& rows, std::uint64_t v) {
    for (std::uint64_t r : rows) {
        std::uint64_t lead = std::uint64_t(1) << (63 - std::countl_zero(r));
        if (v & lead) v ^= r;
    }
    return v == 0;
}

WpSubspace wp_image_subspace(const BaseCurve& c, const Divisor& D, const Divisor& R) {
    Divisor G2 = D * 2 - R;
    auto LD = rr_basis(c, D);
    auto LDR = rr_basis(c, D - R);
    auto L2 = rr_basis(c, G2);
    if (L2.size() > 64) throw std::invalid_argument("wp_image_subspace: L(2D-R) too large");

    WpSubspace out;
    out.l2_basis = L2;
    std::vector<std::uint64_t> rows;
    for (const FFElem& b : LD) {
        FFElem w = wp_apply(b);
        if (w.is_zero()) continue;  // constants
        auto coords = coords_in_span(w, L2);
        if (!coords)
            throw std::invalid_argument(
                "wp_image_subspace: wp(L(D)) not contained in L(2D-R); wrong divisor pair");
        if (*coords) rows.push_back(*coords);
    }
    for (const FFElem& b : LDR) {
        auto coords = coords_in_span(b, L2);
        if (!coords)
            throw std::invalid_argument(
                "wp_image_subspace: L(D-R) not contained in L(2D-R); wrong divisor pair");
        if (*coords) rows.push_back(*coords);
    }
    out.row_space = echelon_rows(std::move(rows));
    out.dim = unsigned(out.row_space.size());
    for (std::uint64_t r : out.row_space) {
        FFElem acc = ff_zero(c);
        for (std::size_t j = 0; j < L2.size(); ++j)
            if ((r >> j) & 1) acc = acc + L2[j];
        out.basis.push_back(acc);
    }
    return out;
}

FFElem complement_pick(const BaseCurve& c, const Divisor& D, const Divisor& R) {
    WpSubspace sub = wp_image_subspace(c, D, R);
    std::size_t n = sub.l2_basis.size();
    if (sub.dim >= n) throw std::invalid_argument("complement_pick: subspace is not proper");
    for (std::uint64_t k = 1; k < (std::uint64_t(1) << n); ++k) {
        // lexicographic order on coordinate sequences (c0, c1, ...): c0 is the
        // most significant bit of k
        std::uint64_t coords = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((k >> (n - 1 - i)) & 1) coords |= std::uint64_t(1) << i;
        if (!in_row_space(sub.row_space, coords)) {
            FFElem acc = ff_zero(c);
            for (std::size_t j = 0; j < n; ++j)
                if ((coords >> j) & 1) acc = acc + sub.l2_basis[j];
            return acc;
        }
    }
    throw std::logic_error("complement_pick: no complement found");
}

}  // namespace ascurve
