#include "knotsim/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace knotsim {

namespace {

// Phase formula without admissibility guard (internal use inside sums where
// inadmissible terms are multiplied by zero anyway).
Complex phase_unchecked(Complex a_value, int a, int b, int c) {
    long e = (static_cast<long>(a) * (a + 2) + static_cast<long>(b) * (b + 2) -
              static_cast<long>(c) * (c + 2)) / 2;
    Complex v = std::polar(1.0, std::arg(a_value) * static_cast<double>(e));
    return ((a + b - c) / 2) % 2 != 0 ? -v : v;
}

} // namespace

Complex braid_phase(Complex a_value, int a, int b, int c) {
    if (!vertex_compatible(a, b, c))
        throw DomainError("braid_phase: (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ") is not a vertex");
    return phase_unchecked(a_value, a, b, c);
}

double RecouplingMatrix::entry_by_labels(int i_label, int j_label) const {
    auto ri = std::find(row_labels.begin(), row_labels.end(), i_label);
    auto cj = std::find(col_labels.begin(), col_labels.end(), j_label);
    if (ri == row_labels.end() || cj == col_labels.end()) return 0.0;
    return entries[ri - row_labels.begin()][cj - col_labels.begin()];
}

RecouplingContext::RecouplingContext(int r) : r_(r) {
    if (r < 3) throw DomainError("RecouplingContext: r must be >= 3");
    a_ = std::polar(1.0, M_PI / (2.0 * r));
    delta_ = -2.0 * std::cos(M_PI / r);  // -A^2 - A^-2 = -[2]
}

double RecouplingContext::quantum_int(int n) const {
    return std::sin(n * M_PI / r_) / std::sin(M_PI / r_);
}

double RecouplingContext::quantum_fact(int n) const {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= quantum_int(k);
    return f;
}

double RecouplingContext::delta_n(int n) const {
    if (n < 0) throw DomainError("delta_n: negative index");
    double v = quantum_int(n + 1);
    return n % 2 != 0 ? -v : v;
}

bool RecouplingContext::admissible(int a, int b, int c) const {
    if (!vertex_compatible(a, b, c)) return false;
    if (a + b + c > 2 * r_ - 4) return false;
    // individual labels above r-2 would carry a vanishing Delta
    return a <= r_ - 2 && b <= r_ - 2 && c <= r_ - 2;
}

double RecouplingContext::theta_net(int a, int b, int c) {
    if (!admissible(a, b, c))
        throw DomainError("theta_net: inadmissible triple (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    auto it = theta_cache_.find(key);
    if (it != theta_cache_.end()) return it->second;
    int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (c + a - b) / 2;
    double v = quantum_fact(m + n + p + 1) * quantum_fact(n) * quantum_fact(m) * quantum_fact(p) /
               (quantum_fact(m + n) * quantum_fact(n + p) * quantum_fact(p + m));
    if ((m + n + p) % 2 != 0) v = -v;
    theta_cache_[key] = v;
    return v;
}

double RecouplingContext::theta_hat(int a, int b, int c) {
    double v = theta_net(a, b, c);
    if (((a + b + c) / 2) % 2 != 0) v = -v;
    if (v <= 0)
        throw DomainError("theta_hat: expected a positive value for an admissible triple");
    return v;
}

double RecouplingContext::vertex_factor(int a, int b, int c) {
    double prod = quantum_int(a + 1) * quantum_int(b + 1) * quantum_int(c + 1);
    return std::sqrt(std::sqrt(prod) / theta_hat(a, b, c));
}

double RecouplingContext::tet_net(int a, int b, int i, int c, int d, int j) {
    if (!admissible(a, b, i) || !admissible(c, d, i) || !admissible(a, d, j) ||
        !admissible(b, c, j))
        throw DomainError("tet_net: inadmissible vertex labels");

    // Canonical cache key: lexicographic minimum over the tetrahedral
    // symmetry orbit of (a,b,i,c,d,j).
    using Key = std::array<int, 6>;
    auto g1 = [](Key k) { return Key{k[3], k[4], k[2], k[0], k[1], k[5]}; };  // (ab)<->(cd)
    auto g2 = [](Key k) { return Key{k[1], k[0], k[2], k[4], k[3], k[5]}; };  // a<->b, c<->d
    auto g3 = [](Key k) { return Key{k[0], k[4], k[5], k[3], k[1], k[2]}; };  // i<->j, b<->d
    Key start{a, b, i, c, d, j};
    std::set<Key> orbit{start};
    std::vector<Key> frontier{start};
    while (!frontier.empty()) {
        Key k = frontier.back();
        frontier.pop_back();
        for (Key nk : {g1(k), g2(k), g3(k)})
            if (orbit.insert(nk).second) frontier.push_back(nk);
    }
    Key key = *orbit.begin();
    auto it = tet_cache_.find(key);
    if (it != tet_cache_.end()) return it->second;

    Complex v = evaluate_closed_network(Network::tetrahedron(a, b, i, c, d, j), a_);
    if (std::abs(v.imag()) > 1e-9)
        throw DomainError("tet_net: evaluation produced a non-real value");
    tet_cache_[key] = v.real();
    return v.real();
}

std::vector<int> RecouplingContext::fusion_channels(int x, int y) const {
    std::vector<int> out;
    for (int c = std::abs(x - y); c <= std::min(x + y, r_ - 2); c += 2)
        if (admissible(x, y, c)) out.push_back(c);
    return out;
}

RecouplingMatrix RecouplingContext::recoupling_matrix(int a, int b, int c, int d) {
    std::array<int, 4> key{a, b, c, d};
    auto cached = matrix_cache_.find(key);
    if (cached != matrix_cache_.end()) return cached->second;

    RecouplingMatrix m;
    m.a = a;
    m.b = b;
    m.c = c;
    m.d = d;
    for (int i : fusion_channels(a, b))
        if (admissible(c, d, i)) m.row_labels.push_back(i);
    for (int j : fusion_channels(a, c))
        if (admissible(b, d, j)) m.col_labels.push_back(j);
    if (m.row_labels.empty() || m.col_labels.empty())
        throw DomainError("recoupling_matrix: empty index set for (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
                          ")");

    double denom = std::sqrt(quantum_int(a + 1) * quantum_int(b + 1) * quantum_int(c + 1) *
                             quantum_int(d + 1));
    if (((a + b + c + d) / 2) % 2 != 0) denom = -denom;

    m.entries.assign(m.row_labels.size(), std::vector<double>(m.col_labels.size(), 0.0));
    for (size_t ri = 0; ri < m.row_labels.size(); ++ri) {
        int i = m.row_labels[ri];
        for (size_t cj = 0; cj < m.col_labels.size(); ++cj) {
            int j = m.col_labels[cj];
            // tet vertices (a,b,i), (d,c,i), (a,c,j), (b,d,j)
            double mod_tet = tet_net(a, b, i, d, c, j) * vertex_factor(a, b, i) *
                             vertex_factor(c, d, i) * vertex_factor(a, c, j) *
                             vertex_factor(b, d, j);
            m.entries[ri][cj] = mod_tet / denom;
        }
    }
    matrix_cache_[key] = m;
    return m;
}

Complex RecouplingContext::braid_phase(int a, int b, int c) const {
    if (!admissible(a, b, c))
        throw DomainError("braid_phase: inadmissible triple");
    return phase_unchecked(a_, a, b, c);
}

double RecouplingContext::f_symbol(int a, int b, int c, int d, int e_label, int f_label) {
    // [F^{abc}_d]_{ef}: e fuses (a,b), f fuses (b,c), both coupling to d.
    // Realized as M[a,b,d,c]: rows (a,b,i) & (d,c,i), columns (a,d,j) & (b,c,j).
    bool rows_ok = false, cols_ok = false;
    for (int i : fusion_channels(a, b))
        if (admissible(c, d, i)) rows_ok = true;
    for (int j : fusion_channels(a, d))
        if (admissible(b, c, j)) cols_ok = true;
    if (!rows_ok || !cols_ok) return 0.0;
    return recoupling_matrix(a, b, d, c).entry_by_labels(e_label, f_label);
}

PentagonHexagonReport RecouplingContext::pentagon_hexagon_check(
    const std::vector<int>& label_set) {
    PentagonHexagonReport rep;
    const auto& S = label_set;

    // Pentagon: [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk}
    //           = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}
    for (int a : S)
        for (int b : S)
            for (int c : S)
                for (int d : S)
                    for (int e : S)
                        for (int f : S)
                            for (int g : S)
                                for (int k : S)
                                    for (int l : S) {
                                        double lhs = f_symbol(f, c, d, e, g, l) *
                                                     f_symbol(a, b, l, e, f, k);
                                        double rhs = 0.0;
                                        for (int h : S)
                                            rhs += f_symbol(a, b, c, g, f, h) *
                                                   f_symbol(a, h, d, e, g, k) *
                                                   f_symbol(b, c, d, k, h, l);
                                        rep.pentagon_residual =
                                            std::max(rep.pentagon_residual, std::abs(lhs - rhs));
                                    }

    // Hexagon: lambda(c,a,e) M[a,c,b,d]_{eg} lambda(c,b,g)
    //          = sum_f M[c,a,b,d]_{ef} lambda(c,f,d) M[a,b,c,d]_{fg}
    for (int a : S)
        for (int b : S)
            for (int c : S)
                for (int d : S)
                    for (int e : S)
                        for (int g : S) {
                            Complex lhs = phase_unchecked(a_, c, a, e) *
                                          f_symbol(a, c, b, d, e, g) *
                                          phase_unchecked(a_, c, b, g);
                            Complex rhs = 0.0;
                            for (int f : S)
                                rhs += f_symbol(c, a, b, d, e, f) * phase_unchecked(a_, c, f, d) *
                                       f_symbol(a, b, c, d, f, g);
                            rep.hexagon_residual =
                                std::max(rep.hexagon_residual, std::abs(lhs - rhs));
                        }
    return rep;
}

} // namespace knotsim
