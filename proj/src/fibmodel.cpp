#include "knotsim/fibmodel.hpp"

#include <cmath>

#include "knotsim/recoupling.hpp"

namespace knotsim {

FibConstants FibConstants::standard() {
    FibConstants c;
    c.A = std::polar(1.0, 3.0 * M_PI / 5.0);
    c.delta = (1.0 + std::sqrt(5.0)) / 2.0;
    c.Delta = c.delta;
    c.tau = 1.0 / c.Delta;
    c.theta = c.delta - 1.0;
    c.T = 3.0 * c.delta - 5.0;
    c.alpha_sq = std::sqrt(c.Delta * c.Delta * c.Delta) / c.theta;
    return c;
}

CMatrix fib_F() {
    FibConstants k = FibConstants::standard();
    CMatrix f(2, 2);
    f.at(0, 0) = k.tau;
    f.at(0, 1) = std::sqrt(k.tau);
    f.at(1, 0) = std::sqrt(k.tau);
    f.at(1, 1) = -k.tau;
    return f;
}

CMatrix fib_R() {
    Complex a = FibConstants::standard().A;
    CMatrix r(2, 2);
    r.at(0, 0) = std::pow(a, 8.0);
    r.at(1, 1) = -std::pow(a, 4.0);
    return r;
}

std::pair<CMatrix, CMatrix> fib_b3_generators() {
    CMatrix f = fib_F();
    CMatrix r = fib_R();
    return {r, f * r * f};
}

FusionSystem fib_fusion_system() {
    FusionSystem fs;
    fs.color = 1;
    fs.labels = {0, 1};
    fs.admissible = [](int a, int b, int c) {
        if (a == 0) return b == c;
        if (b == 0) return a == c;
        if (c == 0) return a == b;
        return true;  // 1 x 1 -> 0 or 1
    };
    // F-moves: trivial on squares touching the vacuum label, the golden
    // F matrix on the all-1 square.
    fs.f_symbol = [adm = fs.admissible](int a, int b, int c, int d, int e, int f) -> double {
        if (!adm(a, b, e) || !adm(e, c, d) || !adm(b, c, f) || !adm(a, f, d)) return 0.0;
        if (a == 1 && b == 1 && c == 1 && d == 1) {
            double tau = 2.0 / (1.0 + std::sqrt(5.0));
            if (e == 0 && f == 0) return tau;
            if (e == 1 && f == 1) return -tau;
            return std::sqrt(tau);
        }
        return 1.0;
    };
    Complex a_val = FibConstants::standard().A;
    fs.twist = [a_val](int c) { return braid_phase(a_val, 2, 2, 2 * c); };
    return fs;
}

ProcessBasis process_basis(int n, int root) {
    if (n < 3) throw DomainError("process_basis: need n >= 3");
    ProcessBasis basis;
    basis.n = n;
    basis.root = root;
    for (const auto& chain : chain_states(n, root, fib_fusion_system()))
        basis.states.emplace_back(chain.begin() + 1, chain.end() - 1);
    return basis;
}

BraidRep fib_braid_rep(int n, int root) {
    if (n < 3) throw DomainError("fib_braid_rep: need n >= 3");
    return build_chain_rep(n, root, fib_fusion_system());
}

} // namespace knotsim
