#pragma once

#include <vector>

#include "knotsim/errors.hpp"
#include "knotsim/laurent.hpp"

namespace knotsim {

/// Small dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), d_(rows * cols, Complex(0)) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Complex& at(int i, int j) { return d_[i * cols_ + j]; }
    const Complex& at(int i, int j) const { return d_[i * cols_ + j]; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
        CMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                Complex v = a.at(i, k);
                if (v == Complex(0)) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DomainError("matrix difference: dimension mismatch");
        CMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
        return r;
    }

    CMatrix adjoint() const {
        CMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
        return r;
    }

    CMatrix conjugated() const {
        CMatrix r = *this;
        for (auto& v : r.d_) v = std::conj(v);
        return r;
    }

    Complex trace() const {
        Complex t = 0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
        return t;
    }

    /// Largest entry magnitude.
    double max_abs() const {
        double m = 0;
        for (const auto& v : d_) m = std::max(m, std::abs(v));
        return m;
    }

    double unitarity_residual() const {
        return ((*this) * adjoint() - identity(rows_)).max_abs();
    }

    /// Apply to a vector.
    std::vector<Complex> apply(const std::vector<Complex>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix apply: size mismatch");
        std::vector<Complex> r(rows_, Complex(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> d_;
};

} // namespace knotsim
