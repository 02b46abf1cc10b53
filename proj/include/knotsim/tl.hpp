#pragma once

#include <map>
#include <utility>
#include <vector>

#include "knotsim/braid.hpp"
#include "knotsim/errors.hpp"
#include "knotsim/laurent.hpp"

namespace knotsim {

/// A loopless planar Temperley-Lieb diagram on n strands: a noncrossing
/// perfect matching of 2n boundary points. Points 0..n-1 are the top row
/// (left to right), points n..2n-1 the bottom row (left to right).
class TLDiagram {
public:
    TLDiagram() = default;
    explicit TLDiagram(int n, std::vector<int> match);

    static TLDiagram identity(int n);
    /// Cup-cap at position i (1-based, 1 <= i <= n-1), identity elsewhere.
    static TLDiagram generator(int n, int i);

    int size() const { return n_; }
    const std::vector<int>& match() const { return match_; }
    int partner(int p) const { return match_[p]; }

    bool operator==(const TLDiagram& o) const { return n_ == o.n_ && match_ == o.match_; }
    bool operator<(const TLDiagram& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return match_ < o.match_;
    }

    /// Stack x above y (x's bottom row glued to y's top row). Returns the
    /// resulting diagram and the number of closed loops formed in the middle.
    static std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y);

    /// Place y to the right of x.
    static TLDiagram tensor(const TLDiagram& x, const TLDiagram& y);

    /// Loops formed by closing top k to bottom k (trace closure).
    int trace_closure_loops() const;
    /// Loops formed by capping (2k,2k+1) on top and bottom (plat closure).
    int plat_closure_loops() const;
    /// Loops formed by gluing an arbitrary planar cap matching onto both
    /// boundary rows (closure[p] must be an involution on the 2n points).
    int closure_loops(const std::vector<int>& closure) const;

private:
    int n_ = 0;
    std::vector<int> match_;
};

/// All loopless TL diagrams of size n (Catalan(n) of them).
std::vector<TLDiagram> all_tl_diagrams(int n);

// --- coefficient helpers -------------------------------------------------

inline bool coeff_is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RationalFn& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Complex& c) {
    return std::abs(c.real()) < 1e-14 && std::abs(c.imag()) < 1e-14;
}

template <class C>
C coeff_pow(const C& base, int n) {
    C r(1);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

// --- linear combinations of diagrams -------------------------------------

/// Formal linear combination of loopless TL diagrams with coefficients in C
/// (LaurentPoly, RationalFn or Complex). Closed loops are always absorbed
/// into coefficients as factors of delta.
template <class C>
class TLElement {
public:
    TLElement() = default;
    explicit TLElement(int n) : n_(n) {}

    static TLElement identity(int n) {
        TLElement e(n);
        e.terms_[TLDiagram::identity(n)] = C(1);
        return e;
    }
    static TLElement generator(int n, int i) {
        TLElement e(n);
        e.terms_[TLDiagram::generator(n, i)] = C(1);
        return e;
    }
    static TLElement single(const TLDiagram& d, const C& coeff) {
        TLElement e(d.size());
        if (!coeff_is_zero(coeff)) e.terms_[d] = coeff;
        return e;
    }

    int size() const { return n_; }
    const std::map<TLDiagram, C>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TLDiagram& d, const C& coeff) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (!coeff_is_zero(coeff)) terms_[d] = coeff;
        } else {
            it->second = it->second + coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    TLElement& operator+=(const TLElement& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }

    TLElement scaled(const C& s) const {
        TLElement r(n_);
        for (const auto& [d, c] : terms_) r.add_term(d, c * s);
        return r;
    }
    TLElement operator-() const { return scaled(C(-1)); }
    friend TLElement operator-(const TLElement& a, const TLElement& b) { return a + (-b); }

    /// Coefficient of a given diagram (zero if absent).
    C coefficient(const TLDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? C(0) : it->second;
    }

private:
    int n_ = 0;
    std::map<TLDiagram, C> terms_;
};

/// Algebra product; each middle loop contributes a factor of delta.
template <class C>
TLElement<C> tl_mul(const TLElement<C>& x, const TLElement<C>& y, const C& delta) {
    if (x.size() != y.size()) throw DomainError("tl_mul: size mismatch");
    TLElement<C> r(x.size());
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            auto [d, loops] = TLDiagram::compose(dx, dy);
            r.add_term(d, cx * cy * coeff_pow(delta, loops));
        }
    }
    return r;
}

template <class C>
TLElement<C> tl_tensor(const TLElement<C>& x, const TLElement<C>& y) {
    TLElement<C> r(x.size() + y.size());
    for (const auto& [dx, cx] : x.terms())
        for (const auto& [dy, cy] : y.terms())
            r.add_term(TLDiagram::tensor(dx, dy), cx * cy);
    return r;
}

/// Markov (closure) trace, normalized so that the unknot evaluates to 1:
/// each diagram closes to delta^(loops - 1).
template <class C>
C markov_trace(const TLElement<C>& x, const C& delta) {
    C sum(0);
    for (const auto& [d, c] : x.terms())
        sum = sum + c * coeff_pow(delta, d.trace_closure_loops() - 1);
    return sum;
}

/// Unnormalized trace closure (a single circle evaluates to delta).
template <class C>
C trace_closure_value(const TLElement<C>& x, const C& delta) {
    C sum(0);
    for (const auto& [d, c] : x.terms())
        sum = sum + c * coeff_pow(delta, d.trace_closure_loops());
    return sum;
}

/// Unnormalized plat closure value.
template <class C>
C plat_closure_value(const TLElement<C>& x, const C& delta) {
    if (x.size() % 2 != 0) throw DomainError("plat closure requires even strand count");
    C sum(0);
    for (const auto& [d, c] : x.terms())
        sum = sum + c * coeff_pow(delta, d.plat_closure_loops());
    return sum;
}

namespace detail {
inline bool coeff_is_singular(const RationalFn& c) { return c.is_zero(); }
inline bool coeff_is_singular(const Complex& c) { return std::abs(c) < 1e-9; }
} // namespace detail

/// Chebyshev-style loop polynomials: Delta_0 = 1, Delta_1 = delta,
/// Delta_{k+1} = delta*Delta_k - Delta_{k-1}. At delta = -A^2 - A^{-2} this
/// is the bracket evaluation of the closed k-strand projector.
template <class C>
C delta_poly(int k, const C& delta) {
    if (k < 0) throw DomainError("delta_poly: negative index");
    C prev(1), cur = delta;
    if (k == 0) return prev;
    for (int i = 1; i < k; ++i) {
        C next = delta * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Jones-Wenzl projector P_n by the Wenzl recursion
///   P_n = P_{n-1} - (Delta_{n-2}/Delta_{n-1}) P_{n-1} U_{n-1} P_{n-1},
/// with P_{n-1} embedded on the first n-1 strands. C must be a field
/// (RationalFn or Complex). Throws SingularProjectorError when a needed
/// Delta_k vanishes at the chosen specialization.
template <class C>
TLElement<C> jones_wenzl(int n, const C& delta) {
    if (n < 1) throw DomainError("jones_wenzl: size must be >= 1");
    TLElement<C> p = TLElement<C>::identity(1);
    for (int m = 2; m <= n; ++m) {
        TLElement<C> embedded = tl_tensor(p, TLElement<C>::identity(1));
        C dprev = delta_poly(m - 1, delta);
        if (detail::coeff_is_singular(dprev))
            throw SingularProjectorError("jones_wenzl: Delta_" + std::to_string(m - 1) +
                                         " vanishes; P_" + std::to_string(m) + " is singular");
        C ratio = delta_poly(m - 2, delta) / dprev;
        TLElement<C> u = TLElement<C>::generator(m, m - 1);
        TLElement<C> pup = tl_mul(tl_mul(embedded, u, delta), embedded, delta);
        p = embedded - pup.scaled(ratio);
    }
    return p;
}

/// Image of a braid word under Phi(s_i) = A I + A^{-1} U_i (and the inverse
/// substitution for negative letters). A and delta must be consistent:
/// delta = -A^2 - A^{-2}.
template <class C>
TLElement<C> braid_image(const BraidWord& b, const C& a_value, const C& a_inverse,
                         const C& delta) {
    TLElement<C> acc = TLElement<C>::identity(b.strands);
    for (int l : b.letters) {
        int i = std::abs(l);
        TLElement<C> factor = TLElement<C>::identity(b.strands).scaled(l > 0 ? a_value : a_inverse);
        factor += TLElement<C>::generator(b.strands, i).scaled(l > 0 ? a_inverse : a_value);
        acc = tl_mul(acc, factor, delta);
    }
    return acc;
}

} // namespace knotsim
