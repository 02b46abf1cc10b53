#pragma once

#include <cstdint>
#include <optional>

#include "knotsim/quaternion.hpp"

namespace knotsim {

/// A pair of unit quaternions (g, h) intended to satisfy ghg = hgh.
struct B3Pair {
    Quaternion g;
    Quaternion h;

    /// ||ghg - hgh|| in the quaternion 4-norm.
    double braid_residual() const { return (g * h * g).dist(h * g * h); }
};

/// The rotation phi_g(P) = g P g^-1 of a pure quaternion P by a unit
/// quaternion g = a + b u. Throws DomainError for non-unit g or non-pure P.
Quaternion rotate(const Quaternion& g, const Quaternion& P);

/// Theorem 1 construction: given a^2 + b^2 = 1 (b != 0) and unit pure axes
/// u, v, the pair g = a + b u, h = a + b v satisfies the braid relation
/// iff u = v or u . v = (a^2 - b^2) / (2 b^2). Returns the pair when the
/// constraint holds (tolerance 1e-10), nullopt otherwise.
std::optional<B3Pair> theorem1_construct(double a, double b,
                                         const Quaternion& u, const Quaternion& v);

struct EulerAngles {
    double a = 0, b = 0, c = 0;
};

/// Write a unit quaternion as e^{a u} e^{b v} e^{c u} for linearly
/// independent unit pure axes u, v. Throws DomainError when u is parallel
/// to v, or when m is outside the reachable set for non-orthogonal axes.
EulerAngles euler_decompose(const Quaternion& m, const Quaternion& u, const Quaternion& v);

/// The Fibonacci B3 pair: g = e^{7 pi i/10}, h = f g f^-1 with
/// f = i tau + k sqrt(tau), tau = (sqrt(5)-1)/2.
B3Pair fibonacci_b3_quaternions();

/// Projective Frobenius distance between the SU(2) matrices of two unit
/// quaternions: min(||M - N||_F, ||M + N||_F).
double projective_distance(const Quaternion& x, const Quaternion& y);

/// Covering-radius estimate: enumerate reduced words in {g, h, g^-1, h^-1}
/// of length <= max_word_length, draw sample_count Haar-random targets from
/// the seeded generator, and return the max over targets of the min
/// projective distance to a word image.
double density_probe(const B3Pair& pair, int max_word_length, int sample_count,
                     std::uint64_t rng_seed);

} // namespace knotsim
