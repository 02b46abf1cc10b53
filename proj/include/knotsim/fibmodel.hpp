#pragma once

#include <utility>
#include <vector>

#include "knotsim/chainrep.hpp"
#include "knotsim/matrix.hpp"

namespace knotsim {

/// Constants of the Fibonacci model at A = e^{3 pi i / 5}.
struct FibConstants {
    Complex A;
    double delta = 0;     // loop value -A^2 - A^-2 = golden ratio
    double Delta = 0;     // 2-projector loop value, equal to delta here
    double tau = 0;       // 1/Delta
    double theta = 0;     // theta(2,2,2) = delta - 1
    double T = 0;         // Tet(2,2,2,2,2,2) = 3 delta - 5 = -theta^2/Delta^2
    double alpha_sq = 0;  // sqrt(Delta^3)/theta, the symmetrizing weight

    static FibConstants standard();
};

/// F = [[tau, sqrt(tau)], [sqrt(tau), -tau]]; real symmetric, F^2 = I.
CMatrix fib_F();

/// Local braiding matrix R = diag(A^8, -A^4) = diag(e^{4 pi i/5}, -e^{2 pi i/5}).
CMatrix fib_R();

/// The dense B_3 pair S1 = R, S2 = F R F.
std::pair<CMatrix, CMatrix> fib_b3_generators();

/// Basis of the process space of n Fibonacci particles with total charge
/// `root`: internal label sequences (x_1..x_{n-2}) over {0,1}.
struct ProcessBasis {
    int n = 0;
    int root = 0;
    std::vector<std::vector<int>> states;  // lexicographic
};

/// Enumerate the process space V^(n)_root. For root 0 the states are the
/// binary strings with no two consecutive 0s ending in 1, so the dimension
/// is the Fibonacci number f_{n-2}. Throws DomainError for n < 3.
ProcessBasis process_basis(int n, int root = 0);

/// Fibonacci fusion data: labels {0,1}, color 1, F-symbols taken from the
/// level r = 5 recoupling theory (labels doubled to Temperley-Lieb colors).
FusionSystem fib_fusion_system();

/// Dense unitary representation of B_n on V^(n)_root. Default root 0 has
/// dimension f_{n-2}; root 1 at n = 3 reproduces (S1, S2) on a 2-dimensional
/// space. Throws DomainError for n < 3.
BraidRep fib_braid_rep(int n, int root = 0);

} // namespace knotsim
