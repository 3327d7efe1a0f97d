#pragma once

// BFS machinery: connected components under vertex exclusion, bipartiteness
// with an explicit odd cycle on failure, and deterministic multi-source
// shortest paths. All traversals visit neighbors in ascending id order.

#include <climits>
#include <cstddef>
#include <stdexcept>
#include <variant>

#include "k4cert/check.hpp"
#include "k4cert/graph.hpp"

namespace k4cert {

struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
};

namespace detail {

inline void check_members_in_range(const Graph& g, const VertexSet& s, const char* what) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                        " out of range");
}

} // namespace detail

// Maximal connected vertex sets of g after removing `excluded`, ordered by
// smallest member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& excluded) {
    detail::check_members_in_range(g, excluded, "components");
    const int n = g.vertex_count();
    std::vector<char> blocked = excluded.mask(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> result;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (blocked[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        queue.assign(1, s);
        seen[static_cast<std::size_t>(s)] = 1;
        std::vector<int> comp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            comp.push_back(c);
            for (int w : g.neighbors(c)) {
                if (blocked[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
        result.emplace_back(std::move(comp));
    }
    return result;
}

// Either a proper 2-class partition of the subgraph induced on `allowed`, or
// an odd cycle inside it. The cycle is recovered by walking the two endpoints
// of an intra-layer edge up to their common BFS ancestor.
inline std::variant<Bipartition, CycleRecord> bipartite_or_odd_cycle(const Graph& g,
                                                                     const VertexSet& allowed) {
    detail::check_members_in_range(g, allowed, "bipartite_or_odd_cycle");
    const int n = g.vertex_count();
    std::vector<char> in = allowed.mask(n);
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;

    for (int s = 0; s < n; ++s) {
        if (!in[static_cast<std::size_t>(s)] || side[static_cast<std::size_t>(s)] >= 0) continue;
        queue.assign(1, s);
        side[static_cast<std::size_t>(s)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            for (int w : g.neighbors(c)) {
                if (!in[static_cast<std::size_t>(w)]) continue;
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(c)];
                    parent[static_cast<std::size_t>(w)] = c;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(c)] + 1;
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(c)]) {
                    // Intra-layer edge (c,w): walk both ends to the common
                    // ancestor; the two tree paths plus this edge close an
                    // odd cycle (depths have equal parity).
                    std::vector<int> up_c{c};
                    std::vector<int> up_w{w};
                    int a = c;
                    int b = w;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
                        a = parent[static_cast<std::size_t>(a)];
                        up_c.push_back(a);
                    }
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
                        b = parent[static_cast<std::size_t>(b)];
                        up_w.push_back(b);
                    }
                    while (a != b) {
                        a = parent[static_cast<std::size_t>(a)];
                        up_c.push_back(a);
                        b = parent[static_cast<std::size_t>(b)];
                        up_w.push_back(b);
                    }
                    std::vector<int> cyc = up_c; // [c .. ancestor]
                    for (std::size_t i = up_w.size() - 1; i-- > 0;)
                        cyc.push_back(up_w[i]); // [.. w], closed by edge (w,c)
                    CycleRecord rec{std::move(cyc)};
                    detail::require(rec.odd() && rec.length() >= 3,
                                    "recovered cycle is not odd");
                    return rec;
                }
            }
        }
    }

    Bipartition bp;
    for (int v : allowed)
        (side[static_cast<std::size_t>(v)] == 0 ? bp.side_a : bp.side_b).insert(v);
    return bp;
}

// Shortest path from `sources` to `targets` through `allowed` vertices only;
// among all shortest paths, the lexicographically smallest vertex sequence.
// Returns nothing when no target is reachable.
inline std::optional<PathRecord> shortest_path_between_sets(const Graph& g,
                                                            const VertexSet& sources,
                                                            const VertexSet& targets,
                                                            const VertexSet& allowed) {
    if (sources.empty() || targets.empty())
        throw std::invalid_argument("shortest_path_between_sets: empty endpoint set");
    detail::check_members_in_range(g, allowed, "shortest_path_between_sets");
    if (!sources.is_subset_of(allowed) || !targets.is_subset_of(allowed))
        throw std::invalid_argument("shortest_path_between_sets: endpoints must lie in allowed");

    const int n = g.vertex_count();
    std::vector<char> in = allowed.mask(n);
    std::vector<int> dist_to_target(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int t : targets) {
        dist_to_target[static_cast<std::size_t>(t)] = 0;
        queue.push_back(t);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (int w : g.neighbors(c)) {
            if (!in[static_cast<std::size_t>(w)] || dist_to_target[static_cast<std::size_t>(w)] >= 0)
                continue;
            dist_to_target[static_cast<std::size_t>(w)] =
                dist_to_target[static_cast<std::size_t>(c)] + 1;
            queue.push_back(w);
        }
    }

    int best = INT_MAX;
    int start = -1;
    for (int s : sources) {
        int d = dist_to_target[static_cast<std::size_t>(s)];
        if (d >= 0 && d < best) {
            best = d;
            start = s;
        }
    }
    if (start < 0) return std::nullopt;

    // Greedy descent along dist_to_target keeps the sequence lexicographically
    // minimal position by position.
    std::vector<int> path{start};
    int cur = start;
    while (dist_to_target[static_cast<std::size_t>(cur)] > 0) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (in[static_cast<std::size_t>(w)] &&
                dist_to_target[static_cast<std::size_t>(w)] ==
                    dist_to_target[static_cast<std::size_t>(cur)] - 1) {
                next = w;
                break;
            }
        }
        detail::require(next >= 0, "BFS distance field has no descent");
        path.push_back(next);
        cur = next;
    }
    return PathRecord{std::move(path)};
}

// True when x and y lie in the same component of g.
inline bool connected(const Graph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw std::invalid_argument("connected: vertex out of range");
    if (x == y) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> queue{x};
    seen[static_cast<std::size_t>(x)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.neighbors(queue[head])) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            if (w == y) return true;
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
        }
    }
    return false;
}

} // namespace k4cert
