#include "knotsim/su2reps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "knotsim/errors.hpp"

namespace knotsim {

namespace {

constexpr double kUnitTol = 1e-10;

void require_unit(const Quaternion& q, const char* what) {
    if (std::abs(q.norm() - 1.0) > kUnitTol)
        throw DomainError(std::string(what) + ": quaternion is not unit length");
}

void require_unit_pure(const Quaternion& q, const char* what) {
    require_unit(q, what);
    if (!q.is_pure(kUnitTol))
        throw DomainError(std::string(what) + ": quaternion is not pure");
}

} // namespace

Quaternion rotate(const Quaternion& g, const Quaternion& P) {
    require_unit(g, "rotate");
    if (!P.is_pure(kUnitTol)) throw DomainError("rotate: P is not pure");
    double a = g.a;
    Quaternion bu = Quaternion::pure(g.b, g.c, g.d);
    double b = bu.norm();
    if (b <= kUnitTol) return P;  // g = +-1 acts trivially
    Quaternion u = (1.0 / b) * bu;
    // (a^2 - b^2) P + 2ab (u x P) + 2 b^2 (P . u) u  ==  g P g^-1
    return (a * a - b * b) * P + (2.0 * a * b) * cross3(u, P) +
           (2.0 * b * b * dot3(P, u)) * u;
}

std::optional<B3Pair> theorem1_construct(double a, double b,
                                         const Quaternion& u, const Quaternion& v) {
    if (b == 0.0) throw DomainError("theorem1_construct: b = 0 gives a real (degenerate) g");
    if (std::abs(a * a + b * b - 1.0) > kUnitTol)
        throw DomainError("theorem1_construct: a^2 + b^2 must be 1");
    require_unit_pure(u, "theorem1_construct");
    require_unit_pure(v, "theorem1_construct");

    B3Pair pair{Quaternion(a, 0, 0, 0) + b * u, Quaternion(a, 0, 0, 0) + b * v};
    if (u.dist(v) <= kUnitTol) return pair;  // g = h, trivially braided
    double constraint = (a * a - b * b) / (2.0 * b * b);
    if (std::abs(dot3(u, v) - constraint) <= 1e-10) return pair;
    return std::nullopt;
}

EulerAngles euler_decompose(const Quaternion& m, const Quaternion& u_in,
                            const Quaternion& v_in) {
    require_unit(m, "euler_decompose");
    require_unit_pure(u_in, "euler_decompose");
    require_unit_pure(v_in, "euler_decompose");

    // Orthonormal right-handed frame with e1 = u and v in the (e1,e2)-plane.
    double cos_alpha = dot3(u_in, v_in);
    double sin_alpha = cross3(u_in, v_in).norm();
    if (sin_alpha <= 1e-9) throw DomainError("euler_decompose: axes are parallel");
    Quaternion e1 = u_in;
    Quaternion e2 = (1.0 / sin_alpha) * (v_in - cos_alpha * u_in);
    Quaternion e3 = cross3(e1, e2);

    // In frame coordinates m = Z1 + Z2 j with Z1 = w + x i, Z2 = y + z i and
    // e^{a i} e^{b v'} e^{c i} = e^{i(a+c)} (cos b + i sin b cos(alpha))
    //                          + e^{i(a-c)} sin b sin(alpha) j.
    Quaternion p = Quaternion::pure(m.b, m.c, m.d);
    double w = m.a, x = dot3(p, e1), y = dot3(p, e2), z = dot3(p, e3);

    double sin_b = std::hypot(y, z) / sin_alpha;
    if (sin_b > 1.0 + 1e-9)
        throw DomainError("euler_decompose: element unreachable for these axes");
    sin_b = std::min(sin_b, 1.0);
    EulerAngles ang;
    ang.b = std::asin(sin_b);
    double diff = (std::hypot(y, z) > 1e-13) ? std::atan2(z, y) : 0.0;
    double inner = std::hypot(w, x);
    double sum = (inner > 1e-13)
                     ? std::atan2(x, w) - std::atan2(std::sin(ang.b) * cos_alpha, std::cos(ang.b))
                     : 0.0;
    ang.a = 0.5 * (sum + diff);
    ang.c = 0.5 * (sum - diff);

    // If the principal branch of b misses (cos b has the wrong sign), the
    // supplementary angle with recomputed sum fixes it.
    Quaternion rec = Quaternion::exp_axis(u_in, ang.a) * Quaternion::exp_axis(v_in, ang.b) *
                     Quaternion::exp_axis(u_in, ang.c);
    if (rec.dist(m) > 1e-9) {
        ang.b = M_PI - ang.b;
        sum = (inner > 1e-13)
                  ? std::atan2(x, w) - std::atan2(std::sin(ang.b) * cos_alpha, std::cos(ang.b))
                  : 0.0;
        ang.a = 0.5 * (sum + diff);
        ang.c = 0.5 * (sum - diff);
    }
    return ang;
}

B3Pair fibonacci_b3_quaternions() {
    double theta = 7.0 * M_PI / 10.0;
    Quaternion g = Quaternion::exp_axis(Quaternion::i(), theta);
    double tau = (std::sqrt(5.0) - 1.0) / 2.0;
    Quaternion f = tau * Quaternion::i() + std::sqrt(tau) * Quaternion::k();
    Quaternion h = f * g * f.inverse();
    return {g, h};
}

double projective_distance(const Quaternion& x, const Quaternion& y) {
    // Frobenius norm of the SU(2) matrix difference is sqrt(2) times the
    // quaternion 4-norm distance.
    return std::sqrt(2.0) * std::min(x.dist(y), x.dist(-y));
}

double density_probe(const B3Pair& pair, int max_word_length, int sample_count,
                     std::uint64_t rng_seed) {
    if (max_word_length < 0) throw DomainError("density_probe: negative word length");
    const Quaternion letters[4] = {pair.g, pair.h, pair.g.inverse(), pair.h.inverse()};

    std::vector<Quaternion> images{Quaternion::one()};
    std::vector<std::pair<Quaternion, int>> frontier{{Quaternion::one(), -1}};
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<std::pair<Quaternion, int>> next;
        next.reserve(frontier.size() * 3);
        for (const auto& [q, last] : frontier)
            for (int l = 0; l < 4; ++l) {
                if (last >= 0 && l == (last + 2) % 4) continue;  // reduced words only
                next.emplace_back((q * letters[l]).normalized(), l);
            }
        for (const auto& qp : next) images.push_back(qp.first);
        frontier = std::move(next);
    }

    std::mt19937_64 rng(rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double covering = 0.0;
    for (int s = 0; s < sample_count; ++s) {
        Quaternion t(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        if (t.norm() < 1e-12) { --s; continue; }
        t = t.normalized();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : images) best = std::min(best, projective_distance(q, t));
        covering = std::max(covering, best);
    }
    return covering;
}

} // namespace knotsim
