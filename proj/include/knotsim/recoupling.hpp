#pragma once

#include <array>
#include <map>
#include <vector>

#include "knotsim/laurent.hpp"
#include "knotsim/network.hpp"

namespace knotsim {

/// Local braiding phase for a positive half-twist of the a and b legs at an
/// (a,b,c) vertex: lambda = (-1)^{(a+b-c)/2} A^{(a(a+2)+b(b+2)-c(c+2))/2}.
Complex braid_phase(Complex a_value, int a, int b, int c);

/// Recoupling matrix M[a,b,c,d]: rows indexed by internal labels i admissible
/// with (a,b,i) and (c,d,i); columns by j admissible with (a,c,j) and (b,d,j).
/// This pairing is the one under which the transpose law
/// M[a,b,c,d]^T = M[b,d,a,c] typechecks and holds. Index sets sorted ascending.
struct RecouplingMatrix {
    int a = 0, b = 0, c = 0, d = 0;
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    std::vector<std::vector<double>> entries;

    int rows() const { return static_cast<int>(row_labels.size()); }
    int cols() const { return static_cast<int>(col_labels.size()); }
    double at(int i, int j) const { return entries[i][j]; }
    /// Entry addressed by internal labels; 0 when a label is not in the set.
    double entry_by_labels(int i_label, int j_label) const;
};

struct PentagonHexagonReport {
    double pentagon_residual = 0;
    double hexagon_residual = 0;
};

/// Root of unity A = e^{i pi / 2r} with cached recoupling data.
class RecouplingContext {
public:
    explicit RecouplingContext(int r);

    int r() const { return r_; }
    Complex a_value() const { return a_; }
    double delta() const { return delta_; }  // loop value -[2]

    double quantum_int(int n) const;
    double quantum_fact(int n) const;
    /// Delta_n = (-1)^n [n+1]; vanishes at n = r-1.
    double delta_n(int n) const;

    /// Parity + triangle + a+b+c <= 2r-4 and each label <= r-2 (labels with
    /// Delta = 0 are excluded so projectors stay nonsingular).
    bool admissible(int a, int b, int c) const;
    /// Highest usable label, r-2.
    int max_label() const { return r_ - 2; }

    /// Theta network by the closed form; cached. Throws on inadmissible input.
    double theta_net(int a, int b, int c);
    /// Theta = (-1)^{(a+b+c)/2} * theta_hat with theta_hat positive real.
    double theta_hat(int a, int b, int c);
    /// Modified vertex normalization f(a,b,c) = sqrt(sqrt([a+1][b+1][c+1])/theta_hat).
    double vertex_factor(int a, int b, int c);

    /// Tetrahedron network Tet(a b i / c d j) by projector expansion at A;
    /// cached up to tetrahedral symmetry.
    double tet_net(int a, int b, int i, int c, int d, int j);

    /// Internal labels i with (x,y,i) admissible.
    std::vector<int> fusion_channels(int x, int y) const;

    RecouplingMatrix recoupling_matrix(int a, int b, int c, int d);

    Complex braid_phase(int a, int b, int c) const;

    /// Max residuals of the pentagon and hexagon identities over all label
    /// assignments drawn from label_set.
    PentagonHexagonReport pentagon_hexagon_check(const std::vector<int>& label_set);

private:
    double f_symbol(int a, int b, int c, int d, int e_label, int f_label);

    int r_;
    Complex a_;
    double delta_;
    std::map<std::array<int, 3>, double> theta_cache_;
    std::map<std::array<int, 6>, double> tet_cache_;
    std::map<std::array<int, 4>, RecouplingMatrix> matrix_cache_;
};

} // namespace knotsim
