#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace knotsim {

/// Quaternion a + b i + c j + d k over doubles.
struct Quaternion {
    double a = 0, b = 0, c = 0, d = 0;

    Quaternion() = default;
    Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    /// Pure quaternion from an R^3 vector.
    static Quaternion pure(double x, double y, double z) { return {0, x, y, z}; }

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
    }
    Quaternion operator-() const { return {-a, -b, -c, -d}; }
    friend Quaternion operator*(double s, const Quaternion& q) {
        return {s * q.a, s * q.b, s * q.c, s * q.d};
    }

    // Hamilton product: ij = k, jk = i, ki = j.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
    }

    Quaternion conj() const { return {a, -b, -c, -d}; }
    double norm_sq() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm_sq()); }
    Quaternion inverse() const {
        double n2 = norm_sq();
        return {a / n2, -b / n2, -c / n2, -d / n2};
    }
    Quaternion normalized() const {
        double n = norm();
        return {a / n, b / n, c / n, d / n};
    }

    bool is_pure(double tol = 1e-12) const { return std::abs(a) <= tol; }

    double dist(const Quaternion& q) const { return (*this - q).norm(); }

    /// exp(angle * u) = cos(angle) + sin(angle) u for a unit pure u.
    static Quaternion exp_axis(const Quaternion& u, double angle) {
        Quaternion r = std::sin(angle) * u;
        r.a += std::cos(angle);
        return r;
    }

    /// SU(2) matrix entries under the basis 1 = I, i = diag(i,-i),
    /// j = [[0,1],[-1,0]], k = [[0,i],[i,0]].
    std::array<std::complex<double>, 4> su2_matrix() const {
        using C = std::complex<double>;
        return {C(a, b), C(c, d), C(-c, d), C(a, -b)};
    }
};

inline double dot3(const Quaternion& u, const Quaternion& v) {
    return u.b * v.b + u.c * v.c + u.d * v.d;
}

inline Quaternion cross3(const Quaternion& u, const Quaternion& v) {
    return Quaternion::pure(u.c * v.d - u.d * v.c, u.d * v.b - u.b * v.d, u.b * v.c - u.c * v.b);
}

} // namespace knotsim
