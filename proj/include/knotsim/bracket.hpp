#pragma once

#include "knotsim/braid.hpp"
#include "knotsim/laurent.hpp"
#include "knotsim/tl.hpp"

namespace knotsim {

/// Hard cap on crossings for the 2^c state sum.
inline constexpr int kStateSumMaxCrossings = 26;

/// Kauffman bracket of a braid closure by direct state-sum over all
/// smoothings. Trace closure is normalized so the unknot gives 1
/// (delta^(loops-1)); plat closure is unnormalized (delta^loops).
LaurentPoly kauffman_bracket_statesum(const BraidWord& b, ClosureKind closure = ClosureKind::Trace);

/// Same invariant through the Temperley-Lieb representation
/// Phi(s_i) = A + A^{-1} U_i; an independent route used for cross-checks.
LaurentPoly kauffman_bracket_tl(const BraidWord& b, ClosureKind closure = ClosureKind::Trace);

/// f_K = (-A^3)^{-w} <K> for the trace closure with writhe w.
LaurentPoly normalized_invariant(const BraidWord& b);

/// Jones polynomial under A = t^{-1/4}. The returned polynomial's exponents
/// are in quarter powers of t: exponent 4 means t^1, -2 means t^{-1/2}.
LaurentPoly jones_polynomial(const BraidWord& b);

/// Bracket of the colored (cabled) closure: each strand is replaced by
/// `color` parallel copies with a Jones-Wenzl projector inserted, and the
/// crossings are cabled. Evaluated numerically at the given A. Both closures
/// are unnormalized here (a single projector-colored unknot gives Delta_color).
Complex colored_bracket_cabled(const BraidWord& b, int color, Complex a_value,
                               ClosureKind closure);

/// The cabled word itself: each letter s_i^{+-1} becomes the a^2-letter block
/// braiding two adjacent bundles of `color` strands.
BraidWord cable_braid(const BraidWord& b, int color);

} // namespace knotsim
