#pragma once

#include <vector>

#include "ascurve/ffield.hpp"

namespace ascurve {

// GF(2)-basis of L(G) = {f : div(f) + G >= 0} (plus 0), in reduced echelon
// form under the fixed monomial order: y-part coefficients before pure-x
// coefficients, ascending degree.  Representable support: split and ramified
// places (rational points, (p, gamma) pairs, infinite places).
std::vector<FFElem> rr_basis(const BaseCurve& c, const Divisor& G);

unsigned rr_dim(const BaseCurve& c, const Divisor& G);

bool rr_member(const FFElem& f, const Divisor& G);

// The subspace wp(L(D)) + L(D-R) inside L(2D-R), with coordinates relative
// to rr_basis(2D-R).
struct WpSubspace {
    std::vector<FFElem> l2_basis;            // basis of L(2D-R)
    std::vector<std::uint64_t> row_space;    // echelonized coordinate rows
    unsigned dim = 0;
    std::vector<FFElem> basis;               // subspace basis as functions
};

WpSubspace wp_image_subspace(const BaseCurve& c, const Divisor& D, const Divisor& R);

// coordinates of f in the span of basis, if any (GF(2) bits)
std::optional<std::uint64_t> coords_in_span(const FFElem& f, const std::vector<FFElem>& basis);

bool in_row_space(const std::vector<std::uint64_t>& rows, std::uint64_t v);

// Deterministic representative of L(2D-R) outside wp(L(D)) + L(D-R): the
// lexicographically least coordinate vector relative to rr_basis(2D-R).
FFElem complement_pick(const BaseCurve& c, const Divisor& D, const Divisor& R);

}  // namespace ascurve
