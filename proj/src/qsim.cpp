#include "knotsim/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "knotsim/fibmodel.hpp"

namespace knotsim {

namespace {

CMatrix phi_matrix(Complex front, Complex back, const CMatrix& u) {
    CMatrix m(u.rows(), u.cols());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j)
            m.at(i, j) = (i == j ? front : Complex(0)) + back * u.at(i, j);
    return m;
}

} // namespace

CMatrix ThreeStrandRep::word_image(const BraidWord& b) const {
    if (b.strands != 3) throw DomainError("three-strand representation: braid is not in B_3");
    Complex inv_a = 1.0 / A;
    CMatrix m = CMatrix::identity(2);
    for (int l : b.letters) {
        const CMatrix& u = (std::abs(l) == 1) ? U1 : U2;
        m = m * (l > 0 ? phi_matrix(A, inv_a, u) : phi_matrix(inv_a, A, u));
    }
    return m;
}

ThreeStrandRep three_strand_rep(Complex a_value, bool allow_nonunitary) {
    ThreeStrandRep rep;
    rep.A = a_value;
    rep.d = -a_value * a_value - 1.0 / (a_value * a_value);
    if (std::abs(rep.d) < 1e-12)
        throw DomainError("three_strand_rep: loop value d = 0, U_2 is undefined");
    if (std::abs(rep.d) < 1.0 - 1e-12 && !allow_nonunitary)
        throw DomainError("three_strand_rep: |d| < 1 is outside the unitary regime "
                          "(pass allow_nonunitary to proceed)");
    Complex s = std::sqrt(Complex(1.0) - 1.0 / (rep.d * rep.d));
    rep.U1 = CMatrix(2, 2);
    rep.U1.at(0, 0) = rep.d;
    rep.U2 = CMatrix(2, 2);
    rep.U2.at(0, 0) = 1.0 / rep.d;
    rep.U2.at(0, 1) = s;
    rep.U2.at(1, 0) = s;
    rep.U2.at(1, 1) = rep.d - 1.0 / rep.d;
    rep.phi1 = phi_matrix(a_value, 1.0 / a_value, rep.U1);
    rep.phi2 = phi_matrix(a_value, 1.0 / a_value, rep.U2);
    return rep;
}

Complex bracket_via_trace(const BraidWord& b, Complex a_value) {
    if (b.strands != 3) throw DomainError("bracket_via_trace: braid is not in B_3");
    // the trace formula needs no unitarity, only the algebra relations
    ThreeStrandRep rep = three_strand_rep(a_value, true);
    Complex correction = std::pow(a_value, b.exponent_sum()) * (rep.d * rep.d - 2.0);
    return rep.word_image(b).trace() + correction;
}

HadamardEstimate hadamard_test(const CMatrix& u, std::vector<Complex> psi, int shots,
                               bool imaginary_part, std::uint64_t seed) {
    if (shots < 1) throw DomainError("hadamard_test: shots must be >= 1");
    if (static_cast<int>(psi.size()) != u.cols())
        throw DomainError("hadamard_test: state dimension does not match the matrix");

    HadamardEstimate est;
    est.shots = shots;
    est.imaginary_part = imaginary_part;
    est.seed = seed;

    double norm_sq = 0;
    for (const Complex& c : psi) norm_sq += std::norm(c);
    if (norm_sq == 0) throw DomainError("hadamard_test: zero state");
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        double inv = 1.0 / std::sqrt(norm_sq);
        for (Complex& c : psi) c *= inv;
        est.renormalized_input = true;
    }

    std::vector<Complex> upsi = u.apply(psi);
    Complex amp = 0;
    for (size_t i = 0; i < psi.size(); ++i) amp += std::conj(psi[i]) * upsi[i];
    est.exact = imaginary_part ? amp.imag() : amp.real();

    double p = std::clamp(0.5 + 0.5 * est.exact, 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution zero(p);
    for (int s = 0; s < shots; ++s)
        if (zero(rng)) ++est.zero_count;
    est.estimate = 2.0 * static_cast<double>(est.zero_count) / shots - 1.0;
    return est;
}

namespace {

/// <PB>_a = conj(B(0,...,0)) * Delta_a^{n/2}. The chain representation uses
/// the positive-crossing phase lambda; the bracket's positive crossing is
/// its mirror, hence the conjugate (generator matrices are symmetric, so the
/// mirror word image is the entrywise conjugate).
Complex plat_bracket_from_rep(const BraidWord& b, const FusionSystem& fs, double delta_color) {
    if (b.strands % 2 != 0)
        throw DomainError("colored_bracket_plat: plat closure needs an even strand count");
    BraidRep rep = build_chain_rep(b.strands, 0, fs);
    std::vector<int> v0(b.strands, 0);
    for (int k = 0; k < b.strands; k += 2) v0[k] = fs.color;
    const auto& states = rep.states();
    int idx = -1;
    for (int s = 0; s < rep.dimension(); ++s)
        if (states[s] == v0) { idx = s; break; }
    if (idx < 0) throw DomainError("colored_bracket_plat: plat state not in the process space");
    Complex amp = rep.apply_word(b, idx)[idx];
    return std::conj(amp) * std::pow(delta_color, b.strands / 2.0);
}

} // namespace

Complex colored_bracket_plat(const BraidWord& b, int color, RecouplingContext& ctx) {
    if (color < 0 || color > ctx.max_label() || !ctx.admissible(color, color, 0))
        throw DomainError("colored_bracket_plat: inadmissible color");
    FusionSystem fs;
    fs.color = color;
    fs.labels.resize(ctx.max_label() + 1);
    std::iota(fs.labels.begin(), fs.labels.end(), 0);
    fs.admissible = [&ctx](int x, int y, int z) { return ctx.admissible(x, y, z); };
    fs.f_symbol = [&ctx](int a, int bb, int c, int d, int e, int f) -> double {
        try {
            return ctx.recoupling_matrix(a, bb, d, c).entry_by_labels(e, f);
        } catch (const DomainError&) {
            return 0.0;
        }
    };
    fs.twist = [&ctx, color](int c) { return ctx.braid_phase(color, color, c); };
    return plat_bracket_from_rep(b, fs, ctx.delta_n(color));
}

Complex colored_bracket_plat_fib(const BraidWord& b) {
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return plat_bracket_from_rep(b, fib_fusion_system(), phi);
}

Complex wrt_invariant(const BraidWord& b, int r) {
    RecouplingContext ctx(r);
    Complex total = 0;
    for (int a = 0; a <= ctx.max_label(); ++a)
        total += ctx.delta_n(a) * colored_bracket_plat(b, a, ctx);
    return total;
}

} // namespace knotsim
