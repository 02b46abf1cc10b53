#include "knotsim/tl.hpp"

#include <functional>

namespace knotsim {

namespace {

// Circular boundary order: top row left to right, then bottom row right to
// left. Planarity of a matching is noncrossing-ness in this order.
int circular_to_point(int n, int c) { return c < n ? c : 3 * n - 1 - c; }

bool is_noncrossing(int n, const std::vector<int>& match) {
    std::vector<int> stack;
    std::vector<int> circ_of(2 * n);
    for (int c = 0; c < 2 * n; ++c) circ_of[circular_to_point(n, c)] = c;
    std::vector<char> seen(2 * n, 0);
    for (int c = 0; c < 2 * n; ++c) {
        int p = circular_to_point(n, c);
        if (seen[p]) {
            if (stack.empty() || stack.back() != match[p]) return false;
            stack.pop_back();
        } else {
            seen[p] = 1;
            seen[match[p]] = 1;
            if (circ_of[match[p]] < c) return false;  // involution violated
            stack.push_back(p);
        }
    }
    return stack.empty();
}

} // namespace

TLDiagram::TLDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
    if (n_ < 1) throw DomainError("TLDiagram: size must be positive");
    if (static_cast<int>(match_.size()) != 2 * n_)
        throw DomainError("TLDiagram: matching must cover 2n points");
    for (int p = 0; p < 2 * n_; ++p) {
        int q = match_[p];
        if (q < 0 || q >= 2 * n_ || q == p || match_[q] != p)
            throw DomainError("TLDiagram: not a perfect matching");
    }
    if (!is_noncrossing(n_, match_)) throw DomainError("TLDiagram: matching is not planar");
}

TLDiagram TLDiagram::identity(int n) {
    std::vector<int> m(2 * n);
    for (int i = 0; i < n; ++i) {
        m[i] = n + i;
        m[n + i] = i;
    }
    return TLDiagram(n, std::move(m));
}

TLDiagram TLDiagram::generator(int n, int i) {
    if (i < 1 || i > n - 1) throw DomainError("TLDiagram::generator: index out of range");
    std::vector<int> m(2 * n);
    for (int k = 0; k < n; ++k) {
        m[k] = n + k;
        m[n + k] = k;
    }
    int a = i - 1, b = i;  // 0-based strand positions of the cup-cap
    m[a] = b;
    m[b] = a;
    m[n + a] = n + b;
    m[n + b] = n + a;
    return TLDiagram(n, std::move(m));
}

std::pair<TLDiagram, int> TLDiagram::compose(const TLDiagram& x, const TLDiagram& y) {
    if (x.n_ != y.n_) throw DomainError("TLDiagram::compose: size mismatch");
    const int n = x.n_;
    // Vertices: final boundary points 0..2n-1 (top of x, bottom of y) and
    // middle points 2n..3n-1 (x's bottom glued to y's top). Each middle point
    // has one x-arc and one y-arc; paths alternate between the two.
    const int M = 2 * n;
    std::vector<int> x_edge(3 * n, -1), y_edge(3 * n, -1);
    auto x_end = [&](int p) { return p < n ? p : M + (p - n); };
    auto y_end = [&](int p) { return p < n ? M + p : p; };
    for (int p = 0; p < 2 * n; ++p) {
        x_edge[x_end(p)] = x_end(x.match_[p]);
        y_edge[y_end(p)] = y_end(y.match_[p]);
    }

    std::vector<char> mid_seen(n, 0);
    std::vector<int> result(2 * n, -1);
    for (int f = 0; f < 2 * n; ++f) {
        if (result[f] >= 0) continue;
        bool via_x = f < n;
        int cur = via_x ? x_edge[f] : y_edge[f];
        while (cur >= M) {
            mid_seen[cur - M] = 1;
            cur = via_x ? y_edge[cur] : x_edge[cur];
            via_x = !via_x;
        }
        result[f] = cur;
        result[cur] = f;
    }

    int loops = 0;
    for (int m = 0; m < n; ++m) {
        if (mid_seen[m]) continue;
        ++loops;
        int cur = M + m;
        bool via_x = true;
        do {
            mid_seen[cur - M] = 1;
            cur = via_x ? x_edge[cur] : y_edge[cur];
            via_x = !via_x;
        } while (cur != M + m);
    }
    return {TLDiagram(n, std::move(result)), loops};
}

TLDiagram TLDiagram::tensor(const TLDiagram& x, const TLDiagram& y) {
    const int nx = x.n_, ny = y.n_, n = nx + ny;
    auto remap_x = [&](int p) { return p < nx ? p : n + (p - nx); };
    auto remap_y = [&](int p) { return p < ny ? nx + p : n + nx + (p - ny); };
    std::vector<int> m(2 * n);
    for (int p = 0; p < 2 * nx; ++p) m[remap_x(p)] = remap_x(x.match_[p]);
    for (int p = 0; p < 2 * ny; ++p) m[remap_y(p)] = remap_y(y.match_[p]);
    return TLDiagram(n, std::move(m));
}

namespace {

int cycles_of_two_matchings(const std::vector<int>& m1, const std::vector<int>& m2) {
    const int sz = static_cast<int>(m1.size());
    std::vector<char> seen(sz, 0);
    int cycles = 0;
    for (int s = 0; s < sz; ++s) {
        if (seen[s]) continue;
        ++cycles;
        int cur = s;
        bool use_first = true;
        do {
            seen[cur] = 1;
            cur = use_first ? m1[cur] : m2[cur];
            use_first = !use_first;
        } while (cur != s);
    }
    return cycles;
}

} // namespace

int TLDiagram::closure_loops(const std::vector<int>& closure) const {
    if (static_cast<int>(closure.size()) != 2 * n_)
        throw DomainError("closure_loops: matching must cover 2n points");
    return cycles_of_two_matchings(match_, closure);
}

int TLDiagram::trace_closure_loops() const {
    std::vector<int> closure(2 * n_);
    for (int i = 0; i < n_; ++i) {
        closure[i] = n_ + i;
        closure[n_ + i] = i;
    }
    return cycles_of_two_matchings(match_, closure);
}

int TLDiagram::plat_closure_loops() const {
    if (n_ % 2 != 0) throw DomainError("plat closure requires even strand count");
    std::vector<int> closure(2 * n_);
    for (int i = 0; i < n_; i += 2) {
        closure[i] = i + 1;
        closure[i + 1] = i;
        closure[n_ + i] = n_ + i + 1;
        closure[n_ + i + 1] = n_ + i;
    }
    return cycles_of_two_matchings(match_, closure);
}

std::vector<TLDiagram> all_tl_diagrams(int n) {
    // Enumerate noncrossing matchings in the circular boundary order, then
    // translate circular indices back to point labels.
    // Noncrossing matchings in the circular order correspond to balanced
    // parenthesis strings: an opener pairs with its matching closer.
    std::vector<TLDiagram> out;
    std::vector<int> kind(2 * n);  // +1 open, -1 close
    std::function<void(int, int)> rec = [&](int pos, int depth) {
        if (pos == 2 * n) {
            std::vector<int> stack, circ_match(2 * n);
            for (int c = 0; c < 2 * n; ++c) {
                if (kind[c] > 0) {
                    stack.push_back(c);
                } else {
                    circ_match[c] = stack.back();
                    circ_match[stack.back()] = c;
                    stack.pop_back();
                }
            }
            std::vector<int> m(2 * n);
            for (int c = 0; c < 2 * n; ++c)
                m[circular_to_point(n, c)] = circular_to_point(n, circ_match[c]);
            out.emplace_back(n, std::move(m));
            return;
        }
        int remaining = 2 * n - pos;
        if (depth < remaining) {
            kind[pos] = 1;
            rec(pos + 1, depth + 1);
        }
        if (depth > 0) {
            kind[pos] = -1;
            rec(pos + 1, depth - 1);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace knotsim
