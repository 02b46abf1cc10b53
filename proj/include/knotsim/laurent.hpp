#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <string>

#include "knotsim/errors.hpp"

namespace knotsim {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Exact Laurent polynomial in the bracket variable A with arbitrary-precision
/// integer coefficients. Stored in canonical form: no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) {
        if (constant != 0) terms_[0] = constant;
    }
    explicit LaurentPoly(const BigInt& constant) {
        if (constant != 0) terms_[0] = constant;
    }

    /// coeff * A^exp
    static LaurentPoly monomial(const BigInt& coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }
    static LaurentPoly variable() { return monomial(1, 1); }

    /// The loop value delta = -A^2 - A^-2.
    static LaurentPoly loop_value() {
        LaurentPoly p;
        p.terms_[2] = -1;
        p.terms_[-2] = -1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r(1), base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// A -> A^-1 (mirror-image substitution): every exponent negated.
    LaurentPoly invert_variable() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    /// Evaluate at a nonzero complex value of A.
    Complex eval(Complex a) const {
        if (std::abs(a) == 0.0) throw DomainError("LaurentPoly: evaluation at A = 0");
        Complex sum = 0.0;
        for (const auto& [e, c] : terms_) {
            Complex apow = std::pow(a, e);
            sum += apow * static_cast<double>(c);
        }
        return sum;
    }

    std::string to_string() const;

private:
    void add_term(int exp, const BigInt& coeff) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (coeff != 0) terms_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, BigInt> terms_;
};

/// Ratio of two Laurent polynomials. Not reduced to lowest terms; equality is
/// by cross-multiplication, so it is representative-independent.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long constant) : num_(constant), den_(1) {}
    RationalFn(const LaurentPoly& num) : num_(num), den_(1) {}
    RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("RationalFn: zero denominator");
        normalize_light();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw DomainError("RationalFn: division by zero");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFn operator-() const { return RationalFn(-num_, den_); }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    bool operator==(const RationalFn& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    Complex eval(Complex a) const { return num_.eval(a) / den_.eval(a); }

private:
    // Strip a common monomial factor A^k and the common integer content of
    // numerator and denominator. Keeps coefficient growth in check without a
    // full polynomial gcd.
    void normalize_light();

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace knotsim
