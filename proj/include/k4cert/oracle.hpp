#pragma once

// Independent verification: certificate checking against the original graph,
// a K4-minor-freeness test by series-parallel reduction, and an exhaustive
// minor finder for cross-validation at small sizes. Nothing here reuses the
// extractor's machinery.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "k4cert/extractor.hpp"
#include "k4cert/graph.hpp"

namespace k4cert {

struct VerificationReport {
    struct Failure {
        std::string check;
        std::string detail;
    };
    bool ok = true;
    std::vector<Failure> failures;

    void fail(std::string check, std::string detail) {
        ok = false;
        failures.push_back({std::move(check), std::move(detail)});
    }
};

// Checks, independently of how bd was produced: the four sets are nonempty,
// in range, pairwise disjoint, each induces a connected subgraph of g, and
// every pair is joined by a g-edge (the recorded witness in particular).
inline VerificationReport verify_k4_minor(const Graph& g, const BranchDecomposition& bd) {
    VerificationReport rep;
    const int n = g.vertex_count();

    for (int i = 0; i < 4; ++i) {
        const VertexSet& s = bd.set(i + 1);
        if (s.empty()) rep.fail("nonempty", "h" + std::to_string(i + 1) + " is empty");
        for (int v : s)
            if (v < 0 || v >= n)
                rep.fail("vertex-range", "h" + std::to_string(i + 1) + " contains vertex " +
                                             std::to_string(v));
    }
    if (!rep.ok) return rep;

    std::vector<int> owner(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < 4; ++i)
        for (int v : bd.set(i + 1)) {
            if (owner[static_cast<std::size_t>(v)] != 0)
                rep.fail("disjoint", "vertex " + std::to_string(v) + " lies in h" +
                                         std::to_string(owner[static_cast<std::size_t>(v)]) +
                                         " and h" + std::to_string(i + 1));
            owner[static_cast<std::size_t>(v)] = i + 1;
        }

    for (int i = 0; i < 4; ++i) {
        const VertexSet& s = bd.set(i + 1);
        std::vector<int> queue{s.smallest()};
        std::set<int> seen{s.smallest()};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : g.neighbors(queue[head]))
                if (s.contains(w) && seen.insert(w).second) queue.push_back(w);
        if (static_cast<int>(seen.size()) != s.size())
            rep.fail("connected", "h" + std::to_string(i + 1) + " does not induce a connected subgraph");
    }

    for (int pi = 0; pi < 6; ++pi) {
        const auto pair = static_cast<BranchPair>(pi);
        auto [i, j] = branch_pair_members(pair);
        const VertexSet& si = bd.sets[static_cast<std::size_t>(i)];
        const VertexSet& sj = bd.sets[static_cast<std::size_t>(j)];

        bool joined = false;
        for (int v : si) {
            for (int w : g.neighbors(v))
                if (sj.contains(w)) {
                    joined = true;
                    break;
                }
            if (joined) break;
        }
        if (!joined)
            rep.fail("pair-edge", std::string(branch_pair_name(pair)) + " has no joining edge");

        const Edge& we = bd.witness(pair);
        bool spans = (si.contains(we.u) && sj.contains(we.v)) ||
                     (si.contains(we.v) && sj.contains(we.u));
        if (!g.has_edge(we) || !spans)
            rep.fail("witness-edge", std::string(branch_pair_name(pair)) + " witness (" +
                                         std::to_string(we.u) + "," + std::to_string(we.v) +
                                         ") is not a spanning edge of g");
    }
    return rep;
}

// Series-parallel reduction: repeatedly delete vertices of degree <= 1 and
// suppress degree-2 vertices (joining their neighbors, no parallel edges).
// The graph has no K4 minor exactly when the reduction deletes everything.
// The lowest-id qualifying vertex goes first; the result is order-independent.
inline bool is_k4_minor_free(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int alive_count = n;

    std::set<int> candidates;
    for (int v = 0; v < n; ++v)
        if (adj[static_cast<std::size_t>(v)].size() <= 2) candidates.insert(v);

    auto refresh = [&](int v) {
        if (alive[static_cast<std::size_t>(v)] && adj[static_cast<std::size_t>(v)].size() <= 2)
            candidates.insert(v);
        else
            candidates.erase(v);
    };

    while (!candidates.empty()) {
        const int v = *candidates.begin();
        candidates.erase(candidates.begin());
        auto& nb = adj[static_cast<std::size_t>(v)];
        alive[static_cast<std::size_t>(v)] = 0;
        --alive_count;
        if (nb.size() == 2) {
            auto it = nb.begin();
            const int a = *it;
            const int b = *std::next(it);
            adj[static_cast<std::size_t>(a)].erase(v);
            adj[static_cast<std::size_t>(b)].erase(v);
            adj[static_cast<std::size_t>(a)].insert(b);
            adj[static_cast<std::size_t>(b)].insert(a);
            refresh(a);
            refresh(b);
        } else {
            for (int w : nb) {
                adj[static_cast<std::size_t>(w)].erase(v);
                refresh(w);
            }
        }
        nb.clear();
    }
    return alive_count == 0;
}

namespace detail {

class MinorSearch {
public:
    explicit MinorSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
            adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
        }
    }

    std::optional<BranchDecomposition> run() {
        if (assign(0, 0)) return build();
        return std::nullopt;
    }

private:
    static std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

    std::uint32_t nbhd_inclusive(std::uint32_t mask) const {
        std::uint32_t nb = mask;
        for (int v = 0; v < n_; ++v)
            if (mask & bit(v)) nb |= adj_[static_cast<std::size_t>(v)];
        return nb;
    }

    bool sets_joined(std::uint32_t a, std::uint32_t b) const {
        for (int v = 0; v < n_; ++v)
            if (a & bit(v)) {
                if (adj_[static_cast<std::size_t>(v)] & b) return true;
            }
        return false;
    }

    // A set is dead when it splits into parts some of which can never attach
    // to a vertex still unassigned; a pair is dead when no edge can ever span
    // it even using every unassigned vertex.
    bool viable(int next_vertex, int used) const {
        std::uint32_t unassigned = 0;
        for (int v = next_vertex; v < n_; ++v) unassigned |= bit(v);
        for (int s = 0; s < used; ++s) {
            std::uint32_t mask = set_mask_[static_cast<std::size_t>(s)];
            if (mask == 0) continue;
            std::uint32_t rest = mask;
            while (rest) {
                std::uint32_t comp = rest & (~rest + 1);
                while (true) {
                    std::uint32_t grown = comp | (nbhd_inclusive(comp) & mask);
                    if (grown == comp) break;
                    comp = grown;
                }
                rest &= ~comp;
                if (comp != mask && !(nbhd_inclusive(comp) & unassigned)) return false;
            }
        }
        for (int s = 0; s < used; ++s)
            for (int t = s + 1; t < used; ++t) {
                std::uint32_t a = set_mask_[static_cast<std::size_t>(s)];
                std::uint32_t b = set_mask_[static_cast<std::size_t>(t)];
                if (a == 0 || b == 0) continue;
                if (sets_joined(a, b)) continue;
                if (!sets_joined(a | unassigned, b | unassigned)) return false;
            }
        return true;
    }

    bool assign(int v, int used) {
        if (v == n_) return complete();
        const int cap = std::min(4, used + 1);
        for (int lab = 1; lab <= cap; ++lab) {
            set_mask_[static_cast<std::size_t>(lab - 1)] |= bit(v);
            if (viable(v + 1, std::max(used, lab)) && assign(v + 1, std::max(used, lab)))
                return true;
            set_mask_[static_cast<std::size_t>(lab - 1)] &= ~bit(v);
        }
        return assign(v + 1, used); // leave v unused
    }

    bool complete() const {
        for (int s = 0; s < 4; ++s) {
            std::uint32_t mask = set_mask_[static_cast<std::size_t>(s)];
            if (mask == 0) return false;
            std::uint32_t reach = mask & (~mask + 1);
            while (true) {
                std::uint32_t grown = reach | (nbhd_inclusive(reach) & mask);
                if (grown == reach) break;
                reach = grown;
            }
            if (reach != mask) return false;
        }
        for (int s = 0; s < 4; ++s)
            for (int t = s + 1; t < 4; ++t)
                if (!sets_joined(set_mask_[static_cast<std::size_t>(s)],
                                 set_mask_[static_cast<std::size_t>(t)]))
                    return false;
        return true;
    }

    BranchDecomposition build() const {
        std::array<VertexSet, 4> sets;
        for (int s = 0; s < 4; ++s) {
            std::vector<int> vs;
            for (int v = 0; v < n_; ++v)
                if (set_mask_[static_cast<std::size_t>(s)] & bit(v)) vs.push_back(v);
            sets[static_cast<std::size_t>(s)] = VertexSet(std::move(vs));
        }
        auto smallest_witness = [&](int i, int j) {
            for (int v : sets[static_cast<std::size_t>(i)])
                for (int w : g_.neighbors(v))
                    if (sets[static_cast<std::size_t>(j)].contains(w)) return Edge(v, w);
            throw internal_error("completed minor search lost a pair edge");
        };
        return BranchDecomposition{
            sets,
            {smallest_witness(0, 1), smallest_witness(0, 2), smallest_witness(0, 3),
             smallest_witness(1, 2), smallest_witness(1, 3), smallest_witness(2, 3)}};
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint32_t> adj_;
    std::array<std::uint32_t, 4> set_mask_{0, 0, 0, 0};
};

} // namespace detail

// Exhaustive search for a K4 branch decomposition; vertices are considered in
// id order, sets are introduced in first-use order, and dead branches are cut
// when a set can no longer become connected or a pair can no longer be joined.
inline std::optional<BranchDecomposition> brute_force_k4_minor(const Graph& g) {
    if (g.vertex_count() > 10)
        throw std::invalid_argument("brute_force_k4_minor: graph too large (max 10 vertices)");
    detail::MinorSearch search(g);
    return search.run();
}

} // namespace k4cert
