#pragma once

#include <array>
#include <vector>

#include "knotsim/laurent.hpp"
#include "knotsim/tl.hpp"

namespace knotsim {

/// Reference to one end of an edge (end 0 or 1).
struct EdgeEndRef {
    int edge = -1;
    int end = 0;
};

/// Trivalent vertex: the three incident edge ends in counterclockwise
/// rotation order (planar embedding via rotation system).
struct NetworkVertex {
    std::array<EdgeEndRef, 3> ends;
};

struct NetworkEdge {
    int label = 0;
    bool closed = false;  // a free loop with no endpoints
};

/// A closed trivalent network with projector-labeled edges. Only closed
/// networks (no dangling edge ends) can be evaluated.
struct Network {
    std::vector<NetworkEdge> edges;
    std::vector<NetworkVertex> vertices;

    /// Unknotted circle carrying the a-strand projector; evaluates to Delta_a.
    static Network loop(int a);
    /// Two vertices joined by three edges labeled a, b, c.
    static Network theta(int a, int b, int c);
    /// Tetrahedron with vertex triples (a,b,i), (c,d,i), (a,d,j), (b,c,j).
    static Network tetrahedron(int a, int b, int i, int c, int d, int j);
};

/// True when (a, b, c) can meet at a trivalent vertex: a+b+c even and the
/// triangle inequalities hold. (Root-of-unity bounds are checked by the
/// recoupling layer, not here.)
bool vertex_compatible(int a, int b, int c);

/// Bracket evaluation of a closed network at the given A: every edge is
/// expanded into its Jones-Wenzl projector, vertices wire the strands
/// planarly, and each closed loop contributes delta = -A^2 - A^-2.
/// Unnormalized: the empty network gives 1, a 1-labeled loop gives delta.
Complex evaluate_closed_network(const Network& net, Complex a_value);

} // namespace knotsim
