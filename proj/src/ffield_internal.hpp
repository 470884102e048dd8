#pragma once

#include <map>

#include "ascurve/ffield.hpp"

namespace ascurve {

using SpotKey = std::pair<bool, Poly>;  // (at_infinity, chart polynomial)

struct BaseCurveData {
    RatFun r;
    RatFun r_flip;
    unsigned genus = 0;
    std::vector<XSpot> branch;
    std::map<SpotKey, SpotAnalysis> spot_cache;  // r_den factors plus infinity

    const RatFun& chart_r(bool at_inf) const { return at_inf ? r_flip : r; }
    SpotAnalysis analysis_for(const XSpot& s) const;
};

struct PlaceData {
    std::shared_ptr<const BaseCurveData> curve;
    bool at_inf = false;
    Poly p;  // chart variable irreducible (z for the infinite spot)
    enum Behavior { Split = 0, Inert = 1, Ramified = 2 } behavior = Split;
    Poly gamma;        // split: residue of y + g
    Poly cbar;         // inert: reduced residue of r
    SpotAnalysis an;   // reduction of r at the spot, chart-local
    unsigned deg = 1;  // residue degree over GF(2)
    unsigned e = 1;
};

// chart-local numerator data of f at the spot of P: f = A + B*(y + g)
std::pair<RatFun, RatFun> chart_ab(const FFElem& f, const PlaceData& pd);

// implemented in ffield_series.cpp
long series_valuation(const FFElem& f, const PlaceData& pd, const Poly& gamma_branch);

// batched Laurent windows at one place (one pipeline setup for all elements)
std::vector<std::vector<std::pair<Poly, Poly>>> expand_windows_batch(const std::vector<FFElem>& fs,
                                                                     const Place& P, int lo,
                                                                     int hi);

struct WpWindow {
    unsigned order = 0;
    Poly res_a, res_b;
    int trace01 = 0;
};
WpWindow wp_reduce_window(const FFElem& f, const Place& P, long val);

}  // namespace ascurve
