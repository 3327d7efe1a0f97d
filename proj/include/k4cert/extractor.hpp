#pragma once

// From an edge-critical pair (h, xy, pi) to the four branch sets of a K4
// minor. Every step of the construction is guarded by hard assertions: each
// "or else chi(h) <= 3" contradiction in the underlying argument is a
// k4cert::internal_error here, never a recovery path.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "k4cert/block_cut.hpp"
#include "k4cert/check.hpp"
#include "k4cert/coloring.hpp"
#include "k4cert/critical.hpp"
#include "k4cert/disjoint_paths.hpp"
#include "k4cert/graph.hpp"
#include "k4cert/search.hpp"

namespace k4cert {

// ------------------------------------------------------------------ types --

// Three-class vertex partition with exactly one permitted monochromatic edge
// whose endpoints lie in class 1. Houses both pi and rho.
struct TriPartition {
    std::vector<int> class_of;        // vertex -> 1, 2 or 3
    std::array<VertexSet, 3> classes; // classes[i] holds class i+1

    const VertexSet& cls(int c) const { return classes[static_cast<std::size_t>(c - 1)]; }
    Coloring as_coloring() const { return Coloring{3, class_of}; }

    friend bool operator==(const TriPartition&, const TriPartition&) = default;
};

inline TriPartition make_tri_partition(std::vector<int> class_of) {
    TriPartition tp;
    tp.classes = {};
    for (std::size_t v = 0; v < class_of.size(); ++v) {
        int c = class_of[v];
        if (c < 1 || c > 3)
            throw std::invalid_argument("tri-partition class out of range at vertex " +
                                        std::to_string(v));
        tp.classes[static_cast<std::size_t>(c - 1)].insert(static_cast<int>(v));
    }
    tp.class_of = std::move(class_of);
    return tp;
}

// Shortest connection between the two odd-cycle sides: u in class 2, v in
// class 3, joined by a path avoiding class 1.
struct Linkage {
    int u;
    int v;
    PathRecord p;
};

// Contiguous arc of C3 through v whose endpoints (and only they) lie on C2.
struct QCarving {
    int w;
    int z;
    PathRecord q;
};

enum class BranchPair { h1_h2 = 0, h1_h3, h1_h4, h2_h3, h2_h4, h3_h4 };

inline const char* branch_pair_name(BranchPair p) {
    switch (p) {
        case BranchPair::h1_h2: return "h1-h2";
        case BranchPair::h1_h3: return "h1-h3";
        case BranchPair::h1_h4: return "h1-h4";
        case BranchPair::h2_h3: return "h2-h3";
        case BranchPair::h2_h4: return "h2-h4";
        case BranchPair::h3_h4: return "h3-h4";
    }
    return "?";
}

// Indices of the two sets joined by each pair, in BranchPair order.
inline std::pair<int, int> branch_pair_members(BranchPair p) {
    switch (p) {
        case BranchPair::h1_h2: return {0, 1};
        case BranchPair::h1_h3: return {0, 2};
        case BranchPair::h1_h4: return {0, 3};
        case BranchPair::h2_h3: return {1, 2};
        case BranchPair::h2_h4: return {1, 3};
        case BranchPair::h3_h4: return {2, 3};
    }
    return {-1, -1};
}

struct BranchDecomposition {
    std::array<VertexSet, 4> sets;      // h1..h4
    std::array<Edge, 6> witness_edges;  // indexed by BranchPair

    const VertexSet& set(int i) const { return sets[static_cast<std::size_t>(i - 1)]; }
    const Edge& witness(BranchPair p) const {
        return witness_edges[static_cast<std::size_t>(p)];
    }
};

// Exactly one of: a proper 3-coloring of the input, or a K4 minor in it.
struct Certificate {
    std::variant<Coloring, BranchDecomposition> value;

    bool is_coloring() const { return std::holds_alternative<Coloring>(value); }
    const Coloring& coloring() const { return std::get<Coloring>(value); }
    const BranchDecomposition& minor() const { return std::get<BranchDecomposition>(value); }
};

// Everything the construction touched, for tracing and audits.
struct ExtractionTrace {
    Graph h;
    Edge xy;
    TriPartition pi;
    TriPartition rho;
    VertexSet a_set; // class-2 vertices on odd cycles of h - rho3
    VertexSet b_set; // class-3 vertices on odd cycles of h - rho2
    Linkage link;
    CycleRecord c2;
    CycleRecord c3;
    QCarving carving;
    Edge e;
};

struct ExtractionResult {
    Certificate certificate;
    std::optional<ExtractionTrace> trace; // engaged iff the certificate is a minor
};

// ------------------------------------------------------------- operations --

// Relabel the witness's colors so the class containing x and y is class 1 and
// the other two classes follow first appearance in vertex order.
inline TriPartition partition_pi(const Graph& h, const Edge& xy, const Coloring& witness) {
    if (witness.k != 3)
        throw std::invalid_argument("partition_pi: witness must use palette 1..3");
    if (!h.has_edge(xy))
        throw std::invalid_argument("partition_pi: xy is not an edge of h");
    if (!verify_coloring(h, witness, {xy}))
        throw std::invalid_argument("partition_pi: witness is not proper on h - xy");
    detail::require(witness.color_of(xy.u) == witness.color_of(xy.v),
                    "pi(x) != pi(y): witness would properly 3-color h");

    std::vector<int> to_class(4, 0);
    to_class[static_cast<std::size_t>(witness.color_of(xy.u))] = 1;
    int next = 2;
    std::vector<int> class_of(witness.assignment.size(), 0);
    for (std::size_t v = 0; v < witness.assignment.size(); ++v) {
        int c = witness.assignment[v];
        if (to_class[static_cast<std::size_t>(c)] == 0) to_class[static_cast<std::size_t>(c)] = next++;
        class_of[v] = to_class[static_cast<std::size_t>(c)];
    }
    TriPartition tp = make_tri_partition(std::move(class_of));
    detail::require(tp.class_of[static_cast<std::size_t>(xy.u)] == 1 &&
                        tp.class_of[static_cast<std::size_t>(xy.v)] == 1,
                    "x and y must land in class 1");
    return tp;
}

// Class-2 vertices on some odd cycle of h - rho3, and class-3 vertices on
// some odd cycle of h - rho2. Removing xy leaves both of those subgraphs
// bipartite, so every odd cycle in them passes through xy, and the odd-cycle
// vertices are exactly the vertices on simple x-y paths avoiding xy.
inline std::pair<VertexSet, VertexSet> odd_cycle_vertex_sets(const Graph& h, const Edge& xy,
                                                             const TriPartition& rho) {
    if (!verify_coloring(h, rho.as_coloring(), {xy}))
        throw std::invalid_argument("odd_cycle_vertex_sets: rho is not proper off xy");

    const VertexSet allow12 = rho.cls(1).unite(rho.cls(2));
    const VertexSet allow13 = rho.cls(1).unite(rho.cls(3));
    const Graph g12 = restricted_graph(h, allow12, xy);
    const Graph g13 = restricted_graph(h, allow13, xy);

    detail::require(std::holds_alternative<Bipartition>(bipartite_or_odd_cycle(g12, allow12)),
                    "h - rho3 has an odd cycle avoiding xy");
    detail::require(std::holds_alternative<Bipartition>(bipartite_or_odd_cycle(g13, allow13)),
                    "h - rho2 has an odd cycle avoiding xy");

    VertexSet a = xy_path_vertices(g12, xy.u, xy.v).intersect(rho.cls(2));
    VertexSet b = xy_path_vertices(g13, xy.u, xy.v).intersect(rho.cls(3));
    detail::require(!a.empty(), "no class-2 vertex lies on an odd cycle of h - rho3");
    detail::require(!b.empty(), "no class-3 vertex lies on an odd cycle of h - rho2");
    return {std::move(a), std::move(b)};
}

// rho keeps class 1 and swaps classes 2/3 inside every component of h - pi1
// that contains no vertex from an odd cycle of h - pi3.
inline TriPartition build_rho(const Graph& h, const Edge& xy, const TriPartition& pi) {
    if (static_cast<int>(pi.class_of.size()) != h.vertex_count())
        throw std::invalid_argument("build_rho: partition does not match h");
    if (!verify_coloring(h, pi.as_coloring(), {xy}) ||
        pi.class_of[static_cast<std::size_t>(xy.u)] != 1 ||
        pi.class_of[static_cast<std::size_t>(xy.v)] != 1)
        throw std::invalid_argument("build_rho: pi violates its invariants");

    const VertexSet& pi1 = pi.cls(1);
    const VertexSet allow12 = pi1.unite(pi.cls(2));
    const VertexSet allow13 = pi1.unite(pi.cls(3));

    // h - pi3 and h - pi2 must each contain an odd cycle.
    detail::require(std::holds_alternative<CycleRecord>(bipartite_or_odd_cycle(h, allow12)),
                    "h - pi3 is bipartite, so h would be 3-colorable");
    detail::require(std::holds_alternative<CycleRecord>(bipartite_or_odd_cycle(h, allow13)),
                    "h - pi2 is bipartite, so h would be 3-colorable");

    const std::vector<VertexSet> comps = components(h, pi1);

    // Vertices on odd cycles of h - pi3: all such cycles pass through xy.
    const Graph g12 = restricted_graph(h, allow12, xy);
    const VertexSet on_odd = xy_path_vertices(g12, xy.u, xy.v);

    std::vector<int> class_of = pi.class_of;
    for (const VertexSet& comp : comps) {
        if (comp.intersects(on_odd)) continue;
        for (int v : comp)
            class_of[static_cast<std::size_t>(v)] = class_of[static_cast<std::size_t>(v)] == 2 ? 3 : 2;
    }
    TriPartition rho = make_tri_partition(std::move(class_of));

    detail::require(rho.cls(1) == pi1, "rho must keep class 1");
    detail::require(verify_coloring(h, rho.as_coloring(), {xy}),
                    "swapping introduced a monochromatic edge other than xy");
    detail::require(components(h, rho.cls(1)) == comps,
                    "components of h - pi1 and h - rho1 must coincide");

    // Some component of h - rho1 must now see odd cycles on both sides.
    auto [a, b] = odd_cycle_vertex_sets(h, xy, rho);
    bool common = false;
    for (const VertexSet& comp : comps)
        if (comp.intersects(a) && comp.intersects(b)) {
            common = true;
            break;
        }
    detail::require(common,
                    "no component of h - rho1 meets odd cycles of both h - rho3 and h - rho2");
    return rho;
}

// Closest pair (u,v) over a x b within h - rho1, with the connecting path.
inline Linkage select_linkage(const Graph& h, const TriPartition& rho, const VertexSet& a,
                              const VertexSet& b) {
    if (!a.is_subset_of(rho.cls(2)) || !b.is_subset_of(rho.cls(3)))
        throw std::invalid_argument("select_linkage: a must lie in class 2 and b in class 3");
    const VertexSet allowed = rho.cls(2).unite(rho.cls(3));
    auto p = shortest_path_between_sets(h, a, b, allowed);
    detail::require(p.has_value(), "no component of h - rho1 meets both odd-cycle sets");
    int u = p->front();
    int v = p->back();
    return Linkage{u, v, std::move(*p)};
}

namespace detail {

// Odd cycle through `seed` and the edge xy inside the given side of h: a
// two-fan from seed to x and y, closed by xy. Both fan paths cross between
// the bipartition sides an odd number of times, so the cycle is odd.
inline CycleRecord cycle_through(const Graph& h, const Edge& xy, const VertexSet& allow,
                                 int seed) {
    const Graph side = restricted_graph(h, allow, xy);
    auto fan = two_fan(side, seed, xy.u, xy.v);
    require(fan.has_value(), "two-fan from odd-cycle vertex to x,y failed");
    const auto& [to_x, to_y] = *fan;
    std::vector<int> cyc(to_x.vertices.rbegin(), to_x.vertices.rend()); // [x .. seed]
    cyc.insert(cyc.end(), to_y.vertices.begin() + 1, to_y.vertices.end()); // [.. y]
    CycleRecord rec{std::move(cyc)};
    require(rec.valid_in(h), "fan cycle is not a cycle of h");
    require(rec.odd(), "cycle through xy came out even");
    require(rec.has_cycle_edge(xy), "cycle must use the edge xy");
    require(rec.contains(seed), "cycle must pass through its seed vertex");
    return rec;
}

} // namespace detail

// C2: odd cycle through u and xy inside h - rho3. C3: odd cycle through v and
// xy inside h - rho2.
inline std::pair<CycleRecord, CycleRecord> realize_cycles(const Graph& h, const Edge& xy,
                                                          const TriPartition& rho, int u, int v) {
    if (rho.class_of[static_cast<std::size_t>(u)] != 2 ||
        rho.class_of[static_cast<std::size_t>(v)] != 3)
        throw std::invalid_argument("realize_cycles: u must be class 2 and v class 3");

    CycleRecord c2 = detail::cycle_through(h, xy, rho.cls(1).unite(rho.cls(2)), u);
    CycleRecord c3 = detail::cycle_through(h, xy, rho.cls(1).unite(rho.cls(3)), v);

    for (int t : c2.vertices)
        detail::require(rho.class_of[static_cast<std::size_t>(t)] != 3, "C2 must avoid class 3");
    for (int t : c3.vertices)
        detail::require(rho.class_of[static_cast<std::size_t>(t)] != 2, "C3 must avoid class 2");
    detail::require(!c3.contains(u), "u lies on C3");
    detail::require(!c2.contains(v), "v lies on C2");
    return {std::move(c2), std::move(c3)};
}

// Walk from v along C3 in both cyclic directions (smaller neighbor first),
// stopping at the first vertex of C2; the two arcs concatenate into q.
inline QCarving carve_q(const CycleRecord& c3, const CycleRecord& c2, int v) {
    if (!c3.contains(v)) throw std::invalid_argument("carve_q: v must lie on C3");
    if (c2.contains(v)) throw std::invalid_argument("carve_q: v must avoid C2");

    const auto& cyc = c3.vertices;
    const int len = c3.length();
    const VertexSet on_c2 = c2.vertex_set();
    int pv = 0;
    while (cyc[static_cast<std::size_t>(pv)] != v) ++pv;

    auto walk = [&](int dir) {
        std::vector<int> arc{v};
        for (int step = 1; step < len; ++step) {
            int t = cyc[static_cast<std::size_t>((((pv + dir * step) % len) + len) % len)];
            arc.push_back(t);
            if (on_c2.contains(t)) return arc;
        }
        detail::require(false, "walk around C3 never met C2; the cycles do not share x,y");
        return arc;
    };

    const int nb_next = cyc[static_cast<std::size_t>((pv + 1) % len)];
    const int nb_prev = cyc[static_cast<std::size_t>((pv + len - 1) % len)];
    const int dir_first = nb_next < nb_prev ? 1 : -1;
    std::vector<int> arc_w = walk(dir_first);
    std::vector<int> arc_z = walk(-dir_first);

    const int w = arc_w.back();
    const int z = arc_z.back();
    detail::require(w != z, "the two walk arcs reached the same C2 vertex");

    std::vector<int> q(arc_w.rbegin(), arc_w.rend()); // [w .. v]
    q.insert(q.end(), arc_z.begin() + 1, arc_z.end()); // [.. z]
    QCarving out{w, z, PathRecord{std::move(q)}};

    detail::require(out.q.vertices.size() >= 3, "q must contain v strictly between w and z");
    std::vector<int> sorted = out.q.vertices;
    std::sort(sorted.begin(), sorted.end());
    detail::require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                    "the two walk arcs overlap beyond v");
    for (std::size_t i = 1; i + 1 < out.q.vertices.size(); ++i)
        detail::require(!on_c2.contains(out.q.vertices[i]), "internal vertex of q lies on C2");
    return out;
}

namespace detail {

// The two arcs of c2 after removing the vertex u and the edge e.
inline std::pair<std::vector<int>, std::vector<int>> split_cycle_at(const CycleRecord& c2,
                                                                    const Edge& e, int u) {
    const auto& cyc = c2.vertices;
    const int len = c2.length();
    int pu = 0;
    while (cyc[static_cast<std::size_t>(pu)] != u) ++pu;

    std::vector<int> order; // the cycle opened right after u
    order.reserve(static_cast<std::size_t>(len - 1));
    for (int i = 1; i < len; ++i) order.push_back(cyc[static_cast<std::size_t>((pu + i) % len)]);

    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        int a = order[k];
        int b = order[k + 1];
        if (std::min(a, b) == e.u && std::max(a, b) == e.v) {
            return {std::vector<int>(order.begin(), order.begin() + static_cast<long>(k) + 1),
                    std::vector<int>(order.begin() + static_cast<long>(k) + 1, order.end())};
        }
    }
    require(false, "e is not an edge of c2 - u");
    return {};
}

} // namespace detail

// An edge e of c2, not incident to u, such that w and z land in different
// components of c2 - {e, u}. When removing {xy, u} already separates them,
// e = xy; otherwise e is the first cycle edge between w and z along the
// x-to-y traversal of c2 that avoids the edge xy (reflected to start at y
// when both lie on the y side of u, roles of w and z swapped when needed).
inline Edge choose_separating_edge(const CycleRecord& c2, const Edge& xy, int u, int w, int z) {
    if (!c2.contains(u) || !c2.contains(w) || !c2.contains(z))
        throw std::invalid_argument("choose_separating_edge: u, w, z must lie on c2");
    detail::require(u != w && u != z,
                    "u coincides with an endpoint of Q; u should never lie on C3");
    if (u == xy.u || u == xy.v)
        throw std::invalid_argument("choose_separating_edge: u must differ from x and y");
    detail::require(c2.has_cycle_edge(xy), "xy must be a cycle edge of c2");

    const auto& cyc = c2.vertices;
    const int len = c2.length();
    int px = 0;
    while (cyc[static_cast<std::size_t>(px)] != xy.u) ++px;
    const int dir = cyc[static_cast<std::size_t>((px + 1) % len)] == xy.v ? -1 : 1;

    std::vector<int> trav; // x first, y last, edge xy not traversed
    trav.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        trav.push_back(cyc[static_cast<std::size_t>((((px + dir * i) % len) + len) % len)]);
    detail::require(trav.back() == xy.v, "traversal of c2 must end at y");

    std::unordered_map<int, int> pos;
    for (int i = 0; i < len; ++i) pos[trav[static_cast<std::size_t>(i)]] = i;

    const bool w_before_u = pos[w] < pos[u];
    const bool z_before_u = pos[z] < pos[u];

    Edge e = xy;
    if (w_before_u == z_before_u) {
        if (!w_before_u) { // both on the y side: reflect so they precede u again
            std::reverse(trav.begin(), trav.end());
            for (int i = 0; i < len; ++i) pos[trav[static_cast<std::size_t>(i)]] = i;
        }
        const int first = std::min(pos[w], pos[z]);
        e = Edge(trav[static_cast<std::size_t>(first)], trav[static_cast<std::size_t>(first) + 1]);
    }

    detail::require(!e.touches(u), "separating edge must not be incident to u");
    auto [arc1, arc2] = detail::split_cycle_at(c2, e, u);
    const VertexSet s1{std::vector<int>(arc1)};
    const VertexSet s2{std::vector<int>(arc2)};
    detail::require((s1.contains(w) && s2.contains(z)) || (s1.contains(z) && s2.contains(w)),
                    "removing {e, u} from c2 must separate w from z");
    return e;
}

// H1 = Q - {w,z}, H2 = P - {v}, H3/H4 = the components of C2 - {e, u}, with
// one recorded witness edge per pair of sets.
inline BranchDecomposition assemble_branch_sets(const CycleRecord& c2, const Edge& e, int u,
                                                const PathRecord& p, int v, const PathRecord& q,
                                                int w, int z) {
    detail::require(p.vertices.size() >= 2 && p.front() == u && p.back() == v,
                    "p must run from u to v");
    detail::require(q.vertices.size() >= 3 && q.front() == w && q.back() == z,
                    "q must run from w to z with interior vertices");

    VertexSet h1{std::vector<int>(q.vertices.begin() + 1, q.vertices.end() - 1)};
    VertexSet h2{std::vector<int>(p.vertices.begin(), p.vertices.end() - 1)};
    auto [arc1, arc2] = detail::split_cycle_at(c2, e, u);
    VertexSet s1{std::vector<int>(arc1)};
    VertexSet s2{std::vector<int>(arc2)};
    detail::require(s1.contains(w) != s2.contains(w), "w must lie in exactly one arc");
    VertexSet h3 = s1.contains(w) ? s1 : s2;
    VertexSet h4 = s1.contains(w) ? s2 : s1;
    detail::require(h4.contains(z) && !h3.contains(z), "z must lie in the other arc");

    const std::array<VertexSet, 4> sets{h1, h2, h3, h4};
    for (const VertexSet& s : sets) detail::require(!s.empty(), "branch sets must be nonempty");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            detail::require(!sets[i].intersects(sets[j]), "branch sets must be disjoint");

    // u's neighbors along c2 end up one in each of h3, h4.
    const auto& cyc = c2.vertices;
    const int len = c2.length();
    int pu = 0;
    while (cyc[static_cast<std::size_t>(pu)] != u) ++pu;
    const int na = cyc[static_cast<std::size_t>((pu + 1) % len)];
    const int nb = cyc[static_cast<std::size_t>((pu + len - 1) % len)];
    detail::require(h3.contains(na) != h3.contains(nb),
                    "u's cycle neighbors must split between h3 and h4");
    const int to_h3 = h3.contains(na) ? na : nb;
    const int to_h4 = h3.contains(na) ? nb : na;
    detail::require(h4.contains(to_h4), "u's second cycle neighbor must land in h4");

    const std::size_t qlen = q.vertices.size();
    const std::size_t plen = p.vertices.size();
    BranchDecomposition bd{
        sets,
        {Edge(p.vertices[plen - 2], v),      // h1-h2: last edge of P
         Edge(q.vertices[1], w),             // h1-h3: first edge of Q
         Edge(q.vertices[qlen - 2], z),      // h1-h4: last edge of Q
         Edge(u, to_h3),                     // h2-h3
         Edge(u, to_h4),                     // h2-h4
         e}};                                // h3-h4

    for (int pi = 0; pi < 6; ++pi) {
        auto [i, j] = branch_pair_members(static_cast<BranchPair>(pi));
        const Edge& we = bd.witness_edges[static_cast<std::size_t>(pi)];
        bool straight = sets[static_cast<std::size_t>(i)].contains(we.u) &&
                        sets[static_cast<std::size_t>(j)].contains(we.v);
        bool crossed = sets[static_cast<std::size_t>(i)].contains(we.v) &&
                       sets[static_cast<std::size_t>(j)].contains(we.u);
        detail::require(straight || crossed, "witness edge endpoints must span its pair");
    }
    return bd;
}

// -------------------------------------------------------------- pipeline --

// Full dichotomy: a proper 3-coloring of g when one exists, otherwise a K4
// minor built through the critical pair. Total for every simple graph.
inline ExtractionResult extract_certified(const Graph& g) {
    if (auto col = find_proper_coloring(g, 3))
        return {Certificate{std::move(*col)}, std::nullopt};

    CriticalPair cp = extract_critical_pair(g);
    const Edge xy = cp.xy;
    TriPartition pi = partition_pi(cp.h, xy, cp.pi_witness);
    TriPartition rho = build_rho(cp.h, xy, pi);
    auto [a_set, b_set] = odd_cycle_vertex_sets(cp.h, xy, rho);
    Linkage link = select_linkage(cp.h, rho, a_set, b_set);
    auto [c2, c3] = realize_cycles(cp.h, xy, rho, link.u, link.v);

    // The closest-pair choice forces P's interior off both cycles: an interior
    // vertex on C2 would itself be an odd-cycle vertex strictly closer to v.
    for (std::size_t i = 1; i + 1 < link.p.vertices.size(); ++i) {
        int t = link.p.vertices[static_cast<std::size_t>(i)];
        detail::require(!c2.contains(t) && !c3.contains(t),
                        "internal vertex of P lies on C2 or C3; (u,v) was not closest");
    }

    QCarving qc = carve_q(c3, c2, link.v);
    Edge e = choose_separating_edge(c2, xy, link.u, qc.w, qc.z);
    BranchDecomposition bd =
        assemble_branch_sets(c2, e, link.u, link.p, link.v, qc.q, qc.w, qc.z);

    ExtractionTrace trace{std::move(cp.h), xy,  std::move(pi), std::move(rho),
                          std::move(a_set),    std::move(b_set), link,
                          std::move(c2),       std::move(c3),    qc, e};
    return {Certificate{std::move(bd)}, std::move(trace)};
}

inline Certificate extract_k4_minor(const Graph& g) {
    return extract_certified(g).certificate;
}

} // namespace k4cert
