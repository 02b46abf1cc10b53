#include "knotsim/bracket.hpp"

#include <numeric>
#include <vector>

namespace knotsim {

namespace {

class UnionFind {
public:
    int make() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    /// Returns true when x and y were already connected (a loop closes).
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return true;
        parent_[x] = y;
        return false;
    }

private:
    std::vector<int> parent_;
};

} // namespace

LaurentPoly kauffman_bracket_statesum(const BraidWord& b, ClosureKind closure) {
    const int c = b.crossing_count();
    if (c > kStateSumMaxCrossings)
        throw ResourceCapError("state sum limited to " + std::to_string(kStateSumMaxCrossings) +
                               " crossings (got " + std::to_string(c) + ")");
    if (closure == ClosureKind::Plat && b.strands % 2 != 0)
        throw DomainError("plat closure requires an even strand count");

    const int n = b.strands;
    LaurentPoly total;
    const LaurentPoly delta = LaurentPoly::loop_value();
    for (std::uint64_t state = 0; state < (std::uint64_t(1) << c); ++state) {
        UnionFind uf;
        std::vector<int> top(n), cur(n);
        for (int k = 0; k < n; ++k) top[k] = cur[k] = uf.make();
        int loops = 0;
        int a_exp = 0;
        for (int x = 0; x < c; ++x) {
            int letter = b.letters[x];
            int i = std::abs(letter) - 1;
            // bit set: take the U_i smoothing; clear: the identity smoothing.
            bool u_smoothing = (state >> x) & 1;
            if (letter > 0)
                a_exp += u_smoothing ? -1 : 1;
            else
                a_exp += u_smoothing ? 1 : -1;
            if (u_smoothing) {
                if (uf.unite(cur[i], cur[i + 1])) ++loops;
                cur[i] = cur[i + 1] = uf.make();
            }
        }
        if (closure == ClosureKind::Trace) {
            for (int k = 0; k < n; ++k)
                if (uf.unite(top[k], cur[k])) ++loops;
        } else {
            for (int k = 0; k < n; k += 2) {
                if (uf.unite(top[k], top[k + 1])) ++loops;
                if (uf.unite(cur[k], cur[k + 1])) ++loops;
            }
        }
        int delta_power = closure == ClosureKind::Trace ? loops - 1 : loops;
        total += LaurentPoly::monomial(1, a_exp) * delta.pow(delta_power);
    }
    return total;
}

LaurentPoly kauffman_bracket_tl(const BraidWord& b, ClosureKind closure) {
    const LaurentPoly delta = LaurentPoly::loop_value();
    const LaurentPoly a = LaurentPoly::variable();
    auto img = braid_image(b, a, a.invert_variable(), delta);
    return closure == ClosureKind::Trace ? markov_trace(img, delta)
                                         : plat_closure_value(img, delta);
}

LaurentPoly normalized_invariant(const BraidWord& b) {
    // TL transfer route: exact, and not subject to the 2^c state-sum cap
    LaurentPoly bracket = kauffman_bracket_tl(b, ClosureKind::Trace);
    int w = b.exponent_sum();
    // (-A^3)^{-w}
    LaurentPoly frame = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    return frame * bracket;
}

LaurentPoly jones_polynomial(const BraidWord& b) {
    // V(t) = f_K at A = t^{-1/4}: A-exponent e becomes quarter-t exponent -e.
    return normalized_invariant(b).invert_variable();
}

BraidWord cable_braid(const BraidWord& b, int color) {
    if (color < 1) throw DomainError("cable_braid: color must be >= 1");
    BraidWord r;
    r.strands = b.strands * color;
    for (int letter : b.letters) {
        int i = std::abs(letter);
        int s = (i - 1) * color + 1;
        std::vector<int> block;
        block.reserve(color * color);
        for (int k = 0; k < color; ++k)
            for (int l = 0; l < color; ++l) block.push_back(s + color - 1 - k + l);
        if (letter > 0) {
            r.letters.insert(r.letters.end(), block.begin(), block.end());
        } else {
            for (auto it = block.rbegin(); it != block.rend(); ++it) r.letters.push_back(-*it);
        }
    }
    return r;
}

Complex colored_bracket_cabled(const BraidWord& b, int color, Complex a_value,
                               ClosureKind closure) {
    if (color < 1) throw DomainError("colored bracket: color must be >= 1");
    if (b.strands * color > 12)
        throw ResourceCapError("cabled evaluation limited to 12 total strands");
    if (closure == ClosureKind::Plat && b.strands % 2 != 0)
        throw DomainError("plat closure requires an even strand count");

    const Complex a_inv = 1.0 / a_value;
    const Complex delta = -a_value * a_value - a_inv * a_inv;
    BraidWord cabled = cable_braid(b, color);

    using E = TLElement<Complex>;
    E proj = jones_wenzl(color, delta);
    E all_proj = proj;
    for (int k = 1; k < b.strands; ++k) all_proj = tl_tensor(all_proj, proj);

    E img = braid_image(cabled, a_value, a_inv, delta);
    E total = tl_mul(all_proj, img, delta);
    if (closure == ClosureKind::Trace) return trace_closure_value(total, delta);

    // Cabled plat caps: the cap joining original strands (2k, 2k+1) becomes
    // `color` nested arcs between the two bundles.
    const int N = b.strands * color;
    std::vector<int> caps(2 * N);
    for (int k = 0; k < b.strands; k += 2) {
        for (int j = 0; j < color; ++j) {
            int lo = k * color + j, hi = (k + 2) * color - 1 - j;
            caps[lo] = hi;
            caps[hi] = lo;
            caps[N + lo] = N + hi;
            caps[N + hi] = N + lo;
        }
    }
    Complex sum = 0.0;
    for (const auto& [dg, cf] : total.terms())
        sum += cf * coeff_pow(delta, dg.closure_loops(caps));
    return sum;
}

} // namespace knotsim
