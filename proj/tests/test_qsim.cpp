#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "knotsim/bracket.hpp"
#include "knotsim/qsim.hpp"

using namespace knotsim;

static double mat_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

TEST_CASE("three-strand representation relations") {
    Complex a = std::polar(1.0, M_PI / 10.0);
    ThreeStrandRep rep = three_strand_rep(a);
    Complex d = rep.d;
    CHECK(std::abs(rep.U1.trace() - d) < 1e-12);
    CHECK(std::abs(rep.U2.trace() - d) < 1e-12);
    CHECK(std::abs((rep.U1 * rep.U2).trace() - Complex(1.0)) < 1e-12);

    auto scaled = [&](const CMatrix& m) {
        CMatrix r = m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.at(i, j) *= d;
        return r;
    };
    CHECK(mat_diff(rep.U1 * rep.U1, scaled(rep.U1)) < 1e-10);
    CHECK(mat_diff(rep.U2 * rep.U2, scaled(rep.U2)) < 1e-10);
    CHECK(mat_diff(rep.U1 * rep.U2 * rep.U1, rep.U1) < 1e-10);
    CHECK(mat_diff(rep.U2 * rep.U1 * rep.U2, rep.U2) < 1e-10);

    CHECK(rep.phi1.unitarity_residual() < 1e-10);
    CHECK(rep.phi2.unitarity_residual() < 1e-10);
    CHECK(mat_diff(rep.phi1 * rep.phi2 * rep.phi1, rep.phi2 * rep.phi1 * rep.phi2) < 1e-10);

    // inverse letters give the exact algebra inverse
    BraidWord cancel(3, {1, -1, 2, -2});
    CHECK(mat_diff(rep.word_image(cancel), CMatrix::identity(2)) < 1e-10);
}

TEST_CASE("three-strand regime handling") {
    // theta = pi/6: d = -1, sqrt term vanishes
    ThreeStrandRep edge = three_strand_rep(std::polar(1.0, M_PI / 6.0));
    CHECK(std::abs(edge.d + 1.0) < 1e-12);
    CHECK(std::abs(edge.U2.at(0, 0) + 1.0) < 1e-12);
    // the square-root argument is ~1e-16 here, so the root itself is ~1e-8
    CHECK(std::abs(edge.U2.at(0, 1)) < 1e-7);
    CHECK(std::abs(edge.U2.at(1, 1)) < 1e-10);

    Complex outside = std::polar(1.0, 0.7);  // |d| < 1
    CHECK_THROWS_AS(three_strand_rep(outside), DomainError);
    ThreeStrandRep forced = three_strand_rep(outside, true);
    CHECK(std::abs(forced.d) < 1.0);
    // d = 0 (theta = pi/4) is singular regardless of the flag
    CHECK_THROWS_AS(three_strand_rep(std::polar(1.0, M_PI / 4.0), true), DomainError);
}

TEST_CASE("trace formula reproduces the exact bracket") {
    Complex a = std::polar(1.0, M_PI / 10.0);
    Complex d = -a * a - 1.0 / (a * a);

    BraidWord id3(3, {});
    CHECK(std::abs(bracket_via_trace(id3, a) - d * d) < 1e-10);

    BraidWord s1(3, {1});
    Complex expect = -std::pow(a, 3.0) * d;  // curl times a split circle
    CHECK(std::abs(bracket_via_trace(s1, a) - expect) < 1e-10);

    CHECK_THROWS_AS(bracket_via_trace(BraidWord(2, {1}), a), DomainError);

    std::mt19937_64 rng(5150);
    double thetas[5] = {0.05, M_PI / 10.0, M_PI / 6.0, M_PI - 0.1, M_PI - M_PI / 7.0};
    for (double th : thetas) {
        Complex av = std::polar(1.0, th);
        for (int t = 0; t < 20; ++t) {
            BraidWord w = random_braid(3, 1 + static_cast<int>(rng() % 10), rng);
            Complex exact = kauffman_bracket_statesum(w).eval(av);
            CHECK(std::abs(bracket_via_trace(w, av) - exact) < 1e-9);
        }
    }
}

TEST_CASE("hadamard test sampler") {
    CMatrix eye = CMatrix::identity(2);
    std::vector<Complex> psi{1.0, 0.0};
    HadamardEstimate sure = hadamard_test(eye, psi, 1000, false, 42);
    CHECK(sure.zero_count == 1000);
    CHECK(sure.estimate == doctest::Approx(1.0));
    CHECK(!sure.renormalized_input);

    CMatrix z(2, 2);
    z.at(0, 0) = 1.0;
    z.at(1, 1) = -1.0;
    std::vector<Complex> plus{1.0, 1.0};  // deliberately unnormalized
    HadamardEstimate mid = hadamard_test(z, plus, 10000, false, 7);
    CHECK(mid.renormalized_input);
    CHECK(mid.exact == doctest::Approx(0.0));
    CHECK(std::abs(mid.estimate) < 0.05);

    // determinism
    HadamardEstimate again = hadamard_test(z, plus, 10000, false, 7);
    CHECK(again.zero_count == mid.zero_count);

    CHECK_THROWS_AS(hadamard_test(z, {1.0, 0.0, 0.0}, 100, false, 1), DomainError);
    CHECK_THROWS_AS(hadamard_test(z, psi, 0, false, 1), DomainError);
}

TEST_CASE("hadamard estimates are statistically sound") {
    Complex a = std::polar(1.0, M_PI / 10.0);
    ThreeStrandRep rep = three_strand_rep(a);
    CMatrix u = rep.word_image(BraidWord(3, {1, 2, -1}));

    // diagonal element, 50 seeds, 4-standard-error acceptance
    const int shots = 100000;
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        HadamardEstimate est = hadamard_test(u, {1.0, 0.0}, shots, false, seed);
        double p = 0.5 + 0.5 * est.exact;
        double se = 2.0 * std::sqrt(p * (1.0 - p) / shots);
        if (std::abs(est.estimate - est.exact) <= 4.0 * se) ++within;
    }
    CHECK(within >= 48);

    // trace reconstruction from basis-state estimates (real and imaginary)
    Complex trace_est = 0;
    for (int k = 0; k < 2; ++k) {
        std::vector<Complex> ek(2, 0.0);
        ek[k] = 1.0;
        trace_est += Complex(hadamard_test(u, ek, shots, false, 11 + k).estimate,
                             hadamard_test(u, ek, shots, true, 17 + k).estimate);
    }
    CHECK(std::abs(trace_est - u.trace()) < 3.0 * std::sqrt(2.0 / static_cast<double>(shots)) * 2);
}

TEST_CASE("colored plat bracket against exact engines") {
    RecouplingContext ctx(5);
    Complex av = ctx.a_value();

    // identity in B_2: <PB>_a = Delta_a
    for (int col = 0; col <= ctx.max_label(); ++col)
        CHECK(std::abs(colored_bracket_plat(BraidWord(2, {}), col, ctx) -
                       Complex(ctx.delta_n(col))) < 1e-10);

    // single positive crossing, color 1: -A^-3 * delta
    Complex delta(ctx.delta());
    Complex one_cross = colored_bracket_plat(BraidWord(2, {1}), 1, ctx);
    CHECK(std::abs(one_cross - (-std::pow(av, -3.0) * delta)) < 1e-10);

    // color 1 equals the ordinary plat bracket
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        BraidWord w = random_braid(4, static_cast<int>(rng() % 5), rng);
        Complex exact = kauffman_bracket_statesum(w, ClosureKind::Plat).eval(av);
        CHECK(std::abs(colored_bracket_plat(w, 1, ctx) - exact) < 1e-8);
    }

    // color 2 at the root of unity equals the cabled projector evaluation
    for (int t = 0; t < 15; ++t) {
        BraidWord w = random_braid(4, static_cast<int>(rng() % 5), rng);
        Complex cabled = colored_bracket_cabled(w, 2, av, ClosureKind::Plat);
        CHECK(std::abs(colored_bracket_plat(w, 2, ctx) - cabled) < 1e-8);
    }

    CHECK_THROWS_AS(colored_bracket_plat(BraidWord(3, {}), 1, ctx), DomainError);
    CHECK_THROWS_AS(colored_bracket_plat(BraidWord(2, {}), 9, ctx), DomainError);
}

TEST_CASE("fibonacci plat bracket equals the 2-cabled oracle") {
    Complex av = std::polar(1.0, 3.0 * M_PI / 5.0);
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(colored_bracket_plat_fib(BraidWord(2, {})) - Complex(phi)) < 1e-10);

    std::mt19937_64 rng(123);
    for (int t = 0; t < 30; ++t) {
        BraidWord w = random_braid(4, static_cast<int>(rng() % 5), rng);
        Complex cabled = colored_bracket_cabled(w, 2, av, ClosureKind::Plat);
        CHECK(std::abs(colored_bracket_plat_fib(w) - cabled) < 1e-8);
    }
}

TEST_CASE("WRT invariant") {
    for (int r = 3; r <= 5; ++r) {
        RecouplingContext ctx(r);
        double expect = 0;
        for (int col = 0; col <= r - 2; ++col) expect += ctx.delta_n(col) * ctx.delta_n(col);
        CHECK(std::abs(wrt_invariant(BraidWord(2, {}), r) - Complex(expect)) < 1e-8);
    }

    // canceling-pair insertion leaves the value unchanged
    std::mt19937_64 rng(314);
    for (int t = 0; t < 5; ++t) {
        BraidWord w = random_braid(4, 3, rng);
        Complex base = wrt_invariant(w, 4);
        BraidWord padded = w;
        padded.letters.push_back(2);
        padded.letters.push_back(-2);
        CHECK(std::abs(wrt_invariant(padded, 4) - base) < 1e-8);
    }
}
