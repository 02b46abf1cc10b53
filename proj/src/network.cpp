#include "knotsim/network.hpp"

#include <algorithm>
#include <map>

namespace knotsim {

bool vertex_compatible(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    return a + b >= c && b + c >= a && c + a >= b;
}

Network Network::loop(int a) {
    Network n;
    n.edges.push_back({a, true});
    return n;
}

Network Network::theta(int a, int b, int c) {
    // Edges drawn left to right between two vertices, a on top, b in the
    // middle, c at the bottom; end 0 at the left vertex, end 1 at the right.
    Network n;
    n.edges = {{a, false}, {b, false}, {c, false}};
    n.vertices.push_back({{EdgeEndRef{1, 0}, EdgeEndRef{0, 0}, EdgeEndRef{2, 0}}});  // left: b,a,c
    n.vertices.push_back({{EdgeEndRef{0, 1}, EdgeEndRef{1, 1}, EdgeEndRef{2, 1}}});  // right: a,b,c
    return n;
}

Network Network::tetrahedron(int a, int b, int i, int c, int d, int j) {
    // Square drawing: vertex 0 = (a,b,i) top-left, vertex 1 = (c,d,i)
    // bottom-right, vertex 2 = (a,d,j) bottom-left, vertex 3 = (b,c,j)
    // top-right. Edge i is the inner diagonal, edge j runs outside the
    // square from vertex 2 around the bottom-right to vertex 3.
    Network n;
    // edge indices: 0=a (left side), 1=b (top), 2=c (right side),
    // 3=d (bottom), 4=i (diagonal), 5=j (outer arc)
    n.edges = {{a, false}, {b, false}, {c, false}, {d, false}, {i, false}, {j, false}};
    const EdgeEndRef A0{0, 0}, A1{0, 1};
    const EdgeEndRef B0{1, 0}, B1{1, 1};
    const EdgeEndRef C0{2, 0}, C1{2, 1};
    const EdgeEndRef D0{3, 0}, D1{3, 1};
    const EdgeEndRef I0{4, 0}, I1{4, 1};
    const EdgeEndRef J0{5, 0}, J1{5, 1};
    n.vertices.push_back({{B0, A0, I0}});  // top-left, ccw: b(east), a(south), i(southeast)
    n.vertices.push_back({{C0, I1, D0}});  // bottom-right, ccw: c(north), i(northwest), d(west)
    n.vertices.push_back({{D1, A1, J0}});  // bottom-left, ccw: d(east), a(north), j(southwest)
    n.vertices.push_back({{J1, B1, C1}});  // top-right, ccw: j(east), b(west), c(south)
    return n;
}

namespace {

struct EndInfo {
    int vertex = -1;  // -1 when the edge is closed
};

} // namespace

Complex evaluate_closed_network(const Network& net, Complex a_value) {
    const Complex a_inv = 1.0 / a_value;
    const Complex delta = -a_value * a_value - a_inv * a_inv;
    const int ne = static_cast<int>(net.edges.size());

    // Global point ids: edge e with label L owns points base[e] .. base[e]+2L-1
    // in projector coordinates (top strand t = point t, bottom strand t =
    // point L + t). End 0's ccw port t is strand t; end 1's ccw port t is
    // strand L-1-t (the band flips seen from the far vertex).
    std::vector<int> base(ne + 1, 0);
    for (int e = 0; e < ne; ++e) base[e + 1] = base[e] + 2 * net.edges[e].label;
    const int total = base[ne];

    auto port_point = [&](const EdgeEndRef& ref, int t) {
        int L = net.edges[ref.edge].label;
        int strand = ref.end == 0 ? t : L - 1 - t;
        return base[ref.edge] + (ref.end == 0 ? strand : L + strand);
    };

    // Build the fixed wiring from vertices and closed loops.
    std::vector<int> wiring(total, -1);
    std::vector<std::array<bool, 2>> end_used(ne, {false, false});
    auto connect = [&](int p, int q) {
        if (p == q || wiring[p] != -1 || wiring[q] != -1)
            throw DomainError("network: inconsistent wiring (bad rotation system)");
        wiring[p] = q;
        wiring[q] = p;
    };

    for (const auto& v : net.vertices) {
        std::array<int, 3> lbl{};
        for (int s = 0; s < 3; ++s) {
            const auto& ref = v.ends[s];
            if (ref.edge < 0 || ref.edge >= ne) throw DomainError("network: bad edge reference");
            if (net.edges[ref.edge].closed)
                throw DomainError("network: closed loop edge cannot meet a vertex");
            if (end_used[ref.edge][ref.end])
                throw DomainError("network: edge end used twice");
            end_used[ref.edge][ref.end] = true;
            lbl[s] = net.edges[ref.edge].label;
        }
        if (!vertex_compatible(lbl[0], lbl[1], lbl[2]))
            throw DomainError("network: inadmissible vertex labels (" + std::to_string(lbl[0]) +
                              "," + std::to_string(lbl[1]) + "," + std::to_string(lbl[2]) + ")");
        for (int s = 0; s < 3; ++s) {
            const auto& x = v.ends[s];
            const auto& y = v.ends[(s + 1) % 3];
            int ax = lbl[s], ay = lbl[(s + 1) % 3], az = lbl[(s + 2) % 3];
            int m = (ax + ay - az) / 2;
            for (int t = 0; t < m; ++t) connect(port_point(x, ax - 1 - t), port_point(y, t));
        }
    }
    for (int e = 0; e < ne; ++e) {
        int L = net.edges[e].label;
        if (net.edges[e].closed) {
            for (int k = 0; k < L; ++k) connect(base[e] + k, base[e] + L + k);
        } else if (L > 0 && (!end_used[e][0] || !end_used[e][1])) {
            throw DomainError("network: edge " + std::to_string(e) + " has a free end");
        }
    }

    // Expand each projector once.
    std::map<int, TLElement<Complex>> projectors;
    for (const auto& e : net.edges)
        if (e.label > 0 && !projectors.count(e.label))
            projectors.emplace(e.label, jones_wenzl(e.label, delta));

    // Transfer sum: process edges one at a time; a state is the pairing of
    // still-open points induced by everything already plumbed.
    using State = std::vector<int>;
    std::map<State, Complex> states;
    states.emplace(wiring, Complex(1.0));

    for (int e = 0; e < ne; ++e) {
        int L = net.edges[e].label;
        if (L == 0) continue;
        const auto& proj = projectors.at(L);
        std::map<State, Complex> next;
        for (const auto& [st, coeff] : states) {
            for (const auto& [dg, dcoeff] : proj.terms()) {
                State s = st;
                int loops = 0;
                const auto& m = dg.match();
                for (int p = 0; p < 2 * L; ++p) {
                    int q = m[p];
                    if (q < p) continue;  // each arc once
                    int gp = base[e] + p, gq = base[e] + q;
                    int x = s[gp], y = s[gq];
                    s[gp] = s[gq] = -1;
                    if (x == gq) {
                        ++loops;
                    } else {
                        s[x] = y;
                        s[y] = x;
                    }
                }
                Complex add = coeff * dcoeff * coeff_pow(delta, loops);
                auto [it, inserted] = next.emplace(std::move(s), add);
                if (!inserted) it->second += add;
            }
        }
        states = std::move(next);
    }

    Complex result = 0.0;
    for (const auto& [st, coeff] : states) result += coeff;
    return result;
}

} // namespace knotsim
