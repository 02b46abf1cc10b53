#pragma once

#include <cstdint>
#include <vector>

#include "knotsim/braid.hpp"
#include "knotsim/chainrep.hpp"
#include "knotsim/matrix.hpp"
#include "knotsim/recoupling.hpp"

namespace knotsim {

/// The 3-strand Temperley-Lieb representation of section 4 style:
/// Phi(s_i) = A I + A^{-1} U_i on a 2-dimensional space.
struct ThreeStrandRep {
    Complex A;
    Complex d;  // loop value -A^2 - A^-2
    CMatrix U1, U2;
    CMatrix phi1, phi2;  // images of s_1, s_2

    /// Image of a 3-strand word (inverse letters use the exact TL inverse
    /// A^{-1} I + A U_i, valid whether or not the matrices are unitary).
    CMatrix word_image(const BraidWord& b) const;
};

/// Build the representation at unit-modulus A = e^{i theta}. Outside the
/// unitary window |d| >= 1 the square root sqrt(1 - d^-2) turns imaginary
/// and construction is refused unless allow_nonunitary is set.
ThreeStrandRep three_strand_rep(Complex a_value, bool allow_nonunitary = false);

/// Bracket of the trace closure of a 3-strand braid via the trace formula
/// <closure(b)> = tr(Phi(b)) + A^{I(b)} (d^2 - 2), I(b) the exponent sum.
Complex bracket_via_trace(const BraidWord& b, Complex a_value);

struct HadamardEstimate {
    int shots = 0;
    long zero_count = 0;
    double estimate = 0;        // 2 * zero_count / shots - 1
    bool imaginary_part = false;
    std::uint64_t seed = 0;
    double exact = 0;           // the matrix element part being estimated
    bool renormalized_input = false;
};

/// Probability-level simulation of the Hadamard test: Bernoulli draws with
/// p = 1/2 + 1/2 Re<psi|U|psi> (Im for the imaginary part). Non-unit psi is
/// normalized and flagged in the result.
HadamardEstimate hadamard_test(const CMatrix& u, std::vector<Complex> psi, int shots,
                               bool imaginary_part, std::uint64_t seed);

/// Colored bracket of the plat closure of an even-strand braid from the
/// chain representation: <PB>_a = B(0,...,0) * Delta_a^{n/2}, where
/// B(0,...,0) is one amplitude of the braid image on the standard plat
/// state. Labels, F-symbols and twists are drawn from ctx at color a.
Complex colored_bracket_plat(const BraidWord& b, int color, RecouplingContext& ctx);

/// Same formula in the Fibonacci model at A = e^{3 pi i/5}; the strands
/// carry the Fibonacci particle (Temperley-Lieb color 2).
Complex colored_bracket_plat_fib(const BraidWord& b);

/// Unnormalized WRT invariant of the plat closure at level r:
/// sum over a = 0..r-2 of Delta_a <L>_a.
Complex wrt_invariant(const BraidWord& b, int r);

} // namespace knotsim
