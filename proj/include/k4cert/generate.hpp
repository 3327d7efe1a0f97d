#pragma once

// Named and random graph families for the test corpus and the CLI: complete
// graphs, cycles, wheels, the Mycielski construction, seeded G(n,p), and a
// few fixed named graphs.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "k4cert/graph.hpp"

namespace k4cert {

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, pairs);
}

// n vertices total: hub 0 joined to the rim cycle 1..n-1.
inline Graph wheel_graph(int n) {
    if (n < 4) throw std::invalid_argument("wheel_graph: n must be >= 4");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i) {
        pairs.emplace_back(0, i);
        pairs.emplace_back(i, i == n - 1 ? 1 : i + 1);
    }
    return Graph::from_edge_list(n, pairs);
}

// Mycielskian of base: originals 0..n-1, shadows n..2n-1, apex 2n. Raises the
// chromatic number by one without creating new triangles.
inline Graph mycielskian(const Graph& base) {
    const int n = base.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : base.edges()) {
        pairs.emplace_back(e.u, e.v);
        pairs.emplace_back(e.u, n + e.v);
        pairs.emplace_back(e.v, n + e.u);
    }
    for (int i = 0; i < n; ++i) pairs.emplace_back(n + i, 2 * n);
    return Graph::from_edge_list(2 * n + 1, pairs);
}

// G(n,p) with a fixed draw order (pairs (i,j), i<j, lexicographic) and a
// platform-independent threshold test, so a seed pins the graph exactly.
inline Graph gnp_random(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp_random: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp_random: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0)); // 2^53
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() >> 11) < threshold) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

// Outer cycle 0..4, spokes to 5..9, inner pentagram.
inline Graph petersen_graph() {
    return Graph::from_edge_list(10, {{0, 1},
                                      {1, 2},
                                      {2, 3},
                                      {3, 4},
                                      {4, 0},
                                      {0, 5},
                                      {1, 6},
                                      {2, 7},
                                      {3, 8},
                                      {4, 9},
                                      {5, 7},
                                      {7, 9},
                                      {9, 6},
                                      {6, 8},
                                      {8, 5}});
}

// Two rhombi sharing vertex 0, far tips 3 and 6 joined. 7 vertices, 11 edges,
// chromatic number 4.
inline Graph moser_spindle() {
    return Graph::from_edge_list(
        7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
}

// Mycielskian of C5: triangle-free and 4-chromatic.
inline Graph grotzsch_graph() { return mycielskian(cycle_graph(5)); }

} // namespace k4cert
