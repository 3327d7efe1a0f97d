#pragma once

// Biconnected blocks, articulation vertices, and the set of vertices lying on
// at least one simple x-y path (the union of the blocks along the block-cut
// tree path between x's and y's blocks).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "k4cert/check.hpp"
#include "k4cert/graph.hpp"
#include "k4cert/search.hpp"

namespace k4cert {

struct BlockCutDecomposition {
    std::vector<VertexSet> blocks;           // one entry per biconnected block
    std::vector<char> is_articulation;       // per vertex
    std::vector<std::vector<int>> blocks_of; // vertex id -> indices into blocks
};

// Iterative lowpoint DFS with an edge stack; a new block is emitted every time
// a child subtree cannot reach above its attachment vertex.
inline BlockCutDecomposition biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    BlockCutDecomposition out;
    out.is_articulation.assign(static_cast<std::size_t>(n), 0);
    out.blocks_of.assign(static_cast<std::size_t>(n), {});

    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> stack;

    auto pop_block = [&](int p, int v) {
        std::vector<int> verts;
        while (true) {
            detail::require(!edge_stack.empty(), "block pop ran past the edge stack");
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == p && b == v) break;
        }
        out.blocks.emplace_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.assign(1, Frame{root, 0});
        int root_children = 0;

        while (!stack.empty()) {
            Frame& fr = stack.back();
            const int v = fr.v;
            const auto& nb = g.neighbors(v);
            if (fr.next < nb.size()) {
                int w = nb[fr.next++];
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    edge_stack.emplace_back(v, w);
                    parent[static_cast<std::size_t>(w)] = v;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back(Frame{w, 0});
                } else if (w != parent[static_cast<std::size_t>(v)] &&
                           disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                    // back edge, pushed exactly once
                    edge_stack.emplace_back(v, w);
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) continue;
                int p = stack.back().v;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
                    if (p != root) out.is_articulation[static_cast<std::size_t>(p)] = 1;
                    pop_block(p, v);
                }
            }
        }
        if (root_children >= 2) out.is_articulation[static_cast<std::size_t>(root)] = 1;
    }

    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (int v : out.blocks[b])
            out.blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
    return out;
}

// All vertices lying on at least one simple x-y path; empty when x and y are
// disconnected (then no such path exists at all).
inline VertexSet xy_path_vertices(const Graph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw std::invalid_argument("xy_path_vertices: vertex out of range");
    if (x == y) throw std::invalid_argument("xy_path_vertices: x and y must differ");
    if (!connected(g, x, y)) return VertexSet{};

    BlockCutDecomposition bc = biconnected_blocks(g);
    const int block_count = static_cast<int>(bc.blocks.size());

    // Block-cut tree: block nodes 0..B-1, then one node per articulation vertex.
    std::vector<int> cut_node(static_cast<std::size_t>(g.vertex_count()), -1);
    int node_count = block_count;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (bc.is_articulation[static_cast<std::size_t>(v)]) cut_node[static_cast<std::size_t>(v)] = node_count++;

    std::vector<std::vector<int>> tree(static_cast<std::size_t>(node_count));
    for (int b = 0; b < block_count; ++b)
        for (int v : bc.blocks[static_cast<std::size_t>(b)])
            if (bc.is_articulation[static_cast<std::size_t>(v)]) {
                tree[static_cast<std::size_t>(b)].push_back(cut_node[static_cast<std::size_t>(v)]);
                tree[static_cast<std::size_t>(cut_node[static_cast<std::size_t>(v)])].push_back(b);
            }

    auto node_of = [&](int v) {
        if (bc.is_articulation[static_cast<std::size_t>(v)]) return cut_node[static_cast<std::size_t>(v)];
        const auto& bl = bc.blocks_of[static_cast<std::size_t>(v)];
        detail::require(bl.size() == 1, "non-articulation vertex must lie in exactly one block");
        return bl.front();
    };

    const int start = node_of(x);
    const int goal = node_of(y);
    std::vector<int> prev(static_cast<std::size_t>(node_count), -2);
    std::vector<int> queue{start};
    prev[static_cast<std::size_t>(start)] = -1;
    for (std::size_t head = 0; head < queue.size() && prev[static_cast<std::size_t>(goal)] == -2;
         ++head) {
        for (int w : tree[static_cast<std::size_t>(queue[head])]) {
            if (prev[static_cast<std::size_t>(w)] != -2) continue;
            prev[static_cast<std::size_t>(w)] = queue[head];
            queue.push_back(w);
        }
    }
    detail::require(prev[static_cast<std::size_t>(goal)] != -2,
                    "x and y connected but their block-cut tree nodes are not");

    VertexSet result;
    for (int node = goal; node != -1; node = prev[static_cast<std::size_t>(node)])
        if (node < block_count) result = result.unite(bc.blocks[static_cast<std::size_t>(node)]);
    return result;
}

} // namespace k4cert
