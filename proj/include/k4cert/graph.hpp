#pragma once

// Undirected simple graphs over dense vertex ids 0..n-1, plus the small
// vertex-set / path / cycle records the rest of the library passes around.

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k4cert {

// Unordered edge, stored with u < v so (min,max) ordering is the natural one.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw std::invalid_argument("edge endpoints must differ (loop at vertex " +
                                        std::to_string(a) + ")");
    }

    bool touches(int vertex) const { return u == vertex || v == vertex; }
    int other(int vertex) const { return vertex == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of vertex identifiers. Membership is interpreted against
// whatever graph the set is used with; bounds are checked at the use site.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    static VertexSet of(std::initializer_list<int> vs) { return VertexSet(std::vector<int>(vs)); }

    static VertexSet full(int n) {
        std::vector<int> vs(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
        VertexSet s;
        s.members_ = std::move(vs);
        return s;
    }

    bool contains(int v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    void insert(int v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it == members_.end() || *it != v) members_.insert(it, v);
    }

    bool empty() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    int smallest() const { return members_.front(); }

    // Characteristic vector over 0..n-1; members outside that range are ignored.
    std::vector<char> mask(int n) const {
        std::vector<char> m(static_cast<std::size_t>(n), 0);
        for (int v : members_)
            if (v >= 0 && v < n) m[static_cast<std::size_t>(v)] = 1;
        return m;
    }

    bool intersects(const VertexSet& other) const {
        auto a = members_.begin();
        auto b = other.members_.begin();
        while (a != members_.end() && b != other.members_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    VertexSet intersect(const VertexSet& other) const {
        VertexSet out;
        std::set_intersection(members_.begin(), members_.end(),
                              other.members_.begin(), other.members_.end(),
                              std::back_inserter(out.members_));
        return out;
    }

    VertexSet unite(const VertexSet& other) const {
        VertexSet out;
        std::set_union(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end(),
                       std::back_inserter(out.members_));
        return out;
    }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
};

class Graph {
public:
    Graph() = default;

    // Duplicate pairs collapse to one edge; loops and out-of-range endpoints
    // are rejected.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [a, b] : pairs) {
            if (a == b)
                throw std::invalid_argument("loop at vertex " + std::to_string(a));
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            g.adj_[static_cast<std::size_t>(a)].push_back(b);
            g.adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        g.normalize();
        return g;
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(edges.size());
        for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
        return from_edge_list(n, pairs);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool has_edge(int a, int b) const {
        if (!has_vertex(a) || !has_vertex(b)) return false;
        const auto& nb = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    // Ascending neighbor list; every traversal in the library walks it in order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // All edges in ascending (min endpoint, max endpoint) order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[static_cast<std::size_t>(v)])
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    Graph without_edge(const Edge& e) const {
        if (!has_edge(e))
            throw std::invalid_argument("without_edge: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") not present");
        Graph g = *this;
        auto drop = [](std::vector<int>& nb, int t) {
            nb.erase(std::lower_bound(nb.begin(), nb.end(), t));
        };
        drop(g.adj_[static_cast<std::size_t>(e.u)], e.v);
        drop(g.adj_[static_cast<std::size_t>(e.v)], e.u);
        g.m_ -= 1;
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (!has_vertex(v))
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }

    void normalize() {
        m_ = 0;
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            m_ += static_cast<int>(nb.size());
        }
        m_ /= 2;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Same vertex universe as g, keeping only edges with both endpoints in `keep`
// and, when given, excluding `drop`. Vertices outside `keep` become isolated.
inline Graph restricted_graph(const Graph& g, const VertexSet& keep,
                              const std::optional<Edge>& drop = std::nullopt) {
    std::vector<char> in = keep.mask(g.vertex_count());
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) {
        if (!in[static_cast<std::size_t>(e.u)] || !in[static_cast<std::size_t>(e.v)]) continue;
        if (drop && e == *drop) continue;
        pairs.emplace_back(e.u, e.v);
    }
    return Graph::from_edge_list(g.vertex_count(), pairs);
}

// Ordered sequence of distinct vertices, consecutive ones adjacent in the host.
struct PathRecord {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    bool contains(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    bool valid_in(const Graph& g) const {
        if (vertices.empty()) return false;
        std::vector<int> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (int v : vertices)
            if (!g.has_vertex(v)) return false;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
        return true;
    }

    friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

// Cyclic sequence of distinct vertices; consecutive (cyclically) adjacent.
struct CycleRecord {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool odd() const { return vertices.size() % 2 == 1; }
    bool contains(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    VertexSet vertex_set() const { return VertexSet(vertices); }

    // e joins cyclically consecutive vertices of this record.
    bool has_cycle_edge(const Edge& e) const {
        const std::size_t k = vertices.size();
        for (std::size_t i = 0; i < k; ++i) {
            int a = vertices[i];
            int b = vertices[(i + 1) % k];
            if (std::min(a, b) == e.u && std::max(a, b) == e.v) return true;
        }
        return false;
    }

    bool valid_in(const Graph& g) const {
        if (vertices.size() < 3) return false;
        std::vector<int> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (int v : vertices)
            if (!g.has_vertex(v)) return false;
        const std::size_t k = vertices.size();
        for (std::size_t i = 0; i < k; ++i)
            if (!g.has_edge(vertices[i], vertices[(i + 1) % k])) return false;
        return true;
    }

    friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

} // namespace k4cert
