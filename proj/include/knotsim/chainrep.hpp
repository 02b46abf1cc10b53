#pragma once

#include <functional>
#include <vector>

#include "knotsim/braid.hpp"
#include "knotsim/matrix.hpp"

namespace knotsim {

/// Fusion data needed to braid n strands all carrying the same label
/// (`color`) on a left-associated coupling tree.
struct FusionSystem {
    int color = 1;
    std::vector<int> labels;  // all labels, ascending
    std::function<bool(int, int, int)> admissible;
    /// F-symbol [F^{abc}_d]_{ef}: e the (a,b) channel, f the (b,c) channel.
    std::function<double(int, int, int, int, int, int)> f_symbol;
    /// Positive half-twist phase of two color strands in channel c.
    std::function<Complex(int)> twist;
};

/// Unitary representation of B_n on the chain (process) space of n color
/// strands with total charge `root`. Basis states are the admissible label
/// sequences p_1..p_n with p_1 = color, p_n = root, enumerated
/// lexicographically by their internal part (p_2..p_{n-1}).
class BraidRep {
public:
    int strands() const { return n_; }
    int dimension() const { return dim_; }
    const CMatrix& generator(int i) const;  // 1-based sigma_i
    const std::vector<std::vector<int>>& states() const { return states_; }

    /// rho(b): product of generator images (adjoint for negative letters).
    CMatrix word_image(const BraidWord& b) const;
    /// rho(b) applied to a basis vector, without forming the full product.
    std::vector<Complex> apply_word(const BraidWord& b, int basis_index) const;

    friend BraidRep build_chain_rep(int n, int root, const FusionSystem& fs);

private:
    int n_ = 0, dim_ = 0;
    std::vector<std::vector<int>> states_;  // full sequences p_1..p_n
    std::vector<CMatrix> gens_;
};

/// All admissible chains p_1..p_n (p_1 = color, p_n = root).
std::vector<std::vector<int>> chain_states(int n, int root, const FusionSystem& fs);

BraidRep build_chain_rep(int n, int root, const FusionSystem& fs);

} // namespace knotsim
