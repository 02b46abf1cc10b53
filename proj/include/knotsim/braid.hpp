#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotsim/errors.hpp"

namespace knotsim {

enum class ClosureKind { Trace, Plat };

/// A word in the Artin generators of B_n. A letter +k means s_k, -k means
/// s_k^{-1}, with 1 <= k <= n-1. Products read top to bottom: the first
/// letter is the topmost crossing of the diagram.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> w);

    bool empty() const { return letters.empty(); }
    int crossing_count() const { return static_cast<int>(letters.size()); }

    /// Sum of letter signs; the writhe of the trace closure under the
    /// blackboard framing.
    int exponent_sum() const;

    /// Image under B_n -> S_n. perm[i] = final position of the strand that
    /// starts at position i (0-based).
    std::vector<int> permutation() const;

    friend BraidWord operator*(const BraidWord& x, const BraidWord& y);
    bool operator==(const BraidWord& o) const {
        return strands == o.strands && letters == o.letters;
    }

    std::string format() const;
};

/// Parse "1 -2 1" style text, optionally prefixed by "n=<strands>".
/// When no header is given the strand count is max|letter| + 1 unless an
/// explicit count is passed.
BraidWord parse_braid(const std::string& text, int strands = 0);

// Equivalence moves. Each returns a new word whose trace closure is
// regular-isotopic to the input (stabilize changes the bracket by -A^{+-3}).
BraidWord move_insert_cancel(const BraidWord& b, int generator, int pos);
BraidWord move_braid_relation(const BraidWord& b, int pos);
BraidWord move_far_commute(const BraidWord& b, int pos);
BraidWord move_conjugate(const BraidWord& b, int generator);
BraidWord move_stabilize(const BraidWord& b, int sign);

/// Apply a random applicable move; returns the new word and, via curl_delta,
/// how many stabilization curls (+1 or -1 each) were introduced.
BraidWord random_equivalence_move(const BraidWord& b, std::mt19937_64& rng, int& curl_delta);

/// Uniform random word with the given letter count.
BraidWord random_braid(int strands, int length, std::mt19937_64& rng);

} // namespace knotsim
