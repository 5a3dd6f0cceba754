#pragma once

#include "nonrep/embedding.hpp"

namespace fixtures {

inline nonrep::RotationSystem triangle() {
    nonrep::RotationSystem rs;
    rs.graph = nonrep::Graph(3);
    rs.graph.add_edge(0, 1);
    rs.graph.add_edge(1, 2);
    rs.graph.add_edge(0, 2);
    rs.rotation = {{1, 2}, {2, 0}, {0, 1}};
    rs.outer_face = {0, 1, 2};
    return rs;
}

inline nonrep::RotationSystem square() {
    nonrep::RotationSystem rs;
    rs.graph = nonrep::Graph(4);
    rs.graph.add_edge(0, 1);
    rs.graph.add_edge(1, 2);
    rs.graph.add_edge(2, 3);
    rs.graph.add_edge(0, 3);
    rs.rotation = {{1, 3}, {2, 0}, {3, 1}, {0, 2}};
    rs.outer_face = {0, 1, 2, 3};
    return rs;
}

inline nonrep::RotationSystem k4() {
    nonrep::RotationSystem rs;
    rs.graph = nonrep::Graph(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) rs.graph.add_edge(u, v);
    rs.rotation = {{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}};
    rs.outer_face = {0, 1, 2};
    return rs;
}

// Octahedron: apexes 0 and 5 joined through the 4-cycle 1-2-3-4.
inline nonrep::RotationSystem octahedron() {
    nonrep::RotationSystem rs;
    rs.graph = nonrep::Graph(6);
    for (int v : {1, 2, 3, 4}) {
        rs.graph.add_edge(0, v);
        rs.graph.add_edge(v, 5);
    }
    rs.graph.add_edge(1, 2);
    rs.graph.add_edge(2, 3);
    rs.graph.add_edge(3, 4);
    rs.graph.add_edge(1, 4);
    rs.rotation = {{1, 4, 3, 2}, {0, 2, 5, 4}, {0, 3, 5, 1},
                   {0, 4, 5, 2}, {0, 1, 5, 3}, {1, 2, 3, 4}};
    rs.outer_face = {0, 1, 2};
    return rs;
}

}  // namespace fixtures
