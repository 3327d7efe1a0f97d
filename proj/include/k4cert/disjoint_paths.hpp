#pragma once

// Two paths from a to x and from a to y sharing only the vertex a, found as a
// 2-unit max flow with unit vertex capacities (split every vertex into an
// in/out pair; augment along shortest residual paths in ascending id order).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "k4cert/check.hpp"
#include "k4cert/graph.hpp"

namespace k4cert {

namespace detail {

struct FlowArc {
    int to;
    int cap;
    int flow;
    int rev; // index of the reverse arc in net[to]
};

inline void add_arc(std::vector<std::vector<FlowArc>>& net, int from, int to, int cap) {
    net[static_cast<std::size_t>(from)].push_back(
        {to, cap, 0, static_cast<int>(net[static_cast<std::size_t>(to)].size())});
    net[static_cast<std::size_t>(to)].push_back(
        {from, 0, 0, static_cast<int>(net[static_cast<std::size_t>(from)].size()) - 1});
}

inline bool augment_unit(std::vector<std::vector<FlowArc>>& net, int source, int sink) {
    std::vector<std::pair<int, int>> via(net.size(), {-1, -1}); // (node, arc index) reaching each node
    std::vector<char> seen(net.size(), 0);
    std::vector<int> queue{source};
    seen[static_cast<std::size_t>(source)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        const auto& arcs = net[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const FlowArc& a = arcs[i];
            if (a.cap - a.flow <= 0 || seen[static_cast<std::size_t>(a.to)]) continue;
            seen[static_cast<std::size_t>(a.to)] = 1;
            via[static_cast<std::size_t>(a.to)] = {c, static_cast<int>(i)};
            if (a.to == sink) {
                for (int node = sink; node != source;) {
                    auto [from, idx] = via[static_cast<std::size_t>(node)];
                    FlowArc& fwd = net[static_cast<std::size_t>(from)][static_cast<std::size_t>(idx)];
                    fwd.flow += 1;
                    net[static_cast<std::size_t>(fwd.to)][static_cast<std::size_t>(fwd.rev)].flow -= 1;
                    node = from;
                }
                return true;
            }
            queue.push_back(a.to);
        }
    }
    return false;
}

} // namespace detail

// Paths (a..x, a..y), vertex-disjoint except at a, or nothing when every such
// pair is blocked (equivalently, a does not lie on any simple x-y path).
inline std::optional<std::pair<PathRecord, PathRecord>> two_fan(const Graph& g, int a, int x,
                                                                int y) {
    if (!g.has_vertex(a) || !g.has_vertex(x) || !g.has_vertex(y))
        throw std::invalid_argument("two_fan: vertex out of range");
    if (a == x || a == y || x == y)
        throw std::invalid_argument("two_fan: a, x, y must be pairwise distinct");

    const int n = g.vertex_count();
    auto in_node = [](int v) { return 2 * v; };
    auto out_node = [](int v) { return 2 * v + 1; };
    const int sink = 2 * n;

    std::vector<std::vector<detail::FlowArc>> net(static_cast<std::size_t>(2 * n + 1));
    for (int v = 0; v < n; ++v)
        if (v != a) detail::add_arc(net, in_node(v), out_node(v), 1);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) detail::add_arc(net, out_node(v), in_node(w), 1);
    detail::add_arc(net, out_node(x), sink, 1);
    detail::add_arc(net, out_node(y), sink, 1);

    int flow = 0;
    for (int round = 0; round < 2; ++round)
        if (detail::augment_unit(net, out_node(a), sink)) ++flow;
    if (flow < 2) return std::nullopt;

    // Follow the two units of flow out of a; unit vertex capacities make each
    // walk simple and the two walks interior-disjoint.
    std::vector<PathRecord> paths;
    for (auto& arc : net[static_cast<std::size_t>(out_node(a))]) {
        if (arc.cap != 1 || arc.flow != 1) continue;
        std::vector<int> verts{a};
        int node = arc.to;
        arc.flow = 0; // consume so the second trace cannot reuse it
        for (int steps = 0; node != sink; ++steps) {
            detail::require(steps <= 2 * n, "flow trace failed to reach the sink");
            detail::require(node % 2 == 0, "flow trace expected an in-node");
            verts.push_back(node / 2);
            int out = node + 1;
            int next = -1;
            for (auto& cand : net[static_cast<std::size_t>(out)]) {
                if (cand.cap == 1 && cand.flow == 1) {
                    cand.flow = 0;
                    next = cand.to;
                    break;
                }
            }
            detail::require(next >= 0, "flow conservation broken during trace");
            node = next;
        }
        paths.push_back(PathRecord{std::move(verts)});
    }
    detail::require(paths.size() == 2, "two units of flow must yield two paths");

    if (paths[0].back() == x) {
        detail::require(paths[1].back() == y, "fan paths must end at x and y");
        return std::make_pair(std::move(paths[0]), std::move(paths[1]));
    }
    detail::require(paths[0].back() == y && paths[1].back() == x, "fan paths must end at x and y");
    return std::make_pair(std::move(paths[1]), std::move(paths[0]));
}

} // namespace k4cert
