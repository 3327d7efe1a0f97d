#pragma once

// Exact k-colorability with witness. Backtracking search with DSATUR-style
// dynamic ordering: highest saturation first, ties by higher degree, then
// lowest id. Color classes are introduced in first-use order, which pins the
// first vertex to color 1 and kills color symmetry; the witness is therefore
// the same on every run.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "k4cert/graph.hpp"

namespace k4cert {

struct Coloring {
    int k = 0;
    std::vector<int> assignment; // vertex -> color in 1..k

    int color_of(int v) const { return assignment[static_cast<std::size_t>(v)]; }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// True iff every monochromatic edge of g under c lies in allowed_mono.
inline bool verify_coloring(const Graph& g, const Coloring& c,
                            const std::vector<Edge>& allowed_mono = {}) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("verify_coloring: coloring does not cover every vertex");
    for (int v = 0; v < g.vertex_count(); ++v) {
        int col = c.assignment[static_cast<std::size_t>(v)];
        if (col < 1 || col > c.k)
            throw std::invalid_argument("verify_coloring: vertex " + std::to_string(v) +
                                        " unassigned or out of palette");
    }
    std::vector<Edge> allowed = allowed_mono;
    std::sort(allowed.begin(), allowed.end());
    for (const Edge& e : g.edges()) {
        if (c.assignment[static_cast<std::size_t>(e.u)] !=
            c.assignment[static_cast<std::size_t>(e.v)])
            continue;
        if (!std::binary_search(allowed.begin(), allowed.end(), e)) return false;
    }
    return true;
}

namespace detail {

class ColorSearch {
public:
    ColorSearch(const Graph& g, int k)
        : g_(g), k_(k), n_(g.vertex_count()),
          color_(static_cast<std::size_t>(n_), 0),
          sat_mask_(static_cast<std::size_t>(n_), 0),
          sat_count_(static_cast<std::size_t>(n_),
                     std::vector<std::uint16_t>(static_cast<std::size_t>(k + 1), 0)) {}

    bool run() { return extend(0, 0); }
    std::vector<int> take_assignment() { return std::move(color_); }

private:
    bool extend(int colored, int used) {
        if (colored == n_) return true;
        const int v = pick();
        const int cap = std::min(used + 1, k_);
        for (int c = 1; c <= cap; ++c) {
            if (sat_mask_[static_cast<std::size_t>(v)] & (std::uint64_t{1} << (c - 1))) continue;
            color_[static_cast<std::size_t>(v)] = c;
            mark(v, c, +1);
            if (extend(colored + 1, std::max(used, c))) return true;
            mark(v, c, -1);
            color_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    int pick() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0) continue;
            int sat = std::popcount(sat_mask_[static_cast<std::size_t>(v)]);
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void mark(int v, int c, int delta) {
        for (int w : g_.neighbors(v)) {
            if (color_[static_cast<std::size_t>(w)] != 0) continue;
            std::uint16_t& cnt = sat_count_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
            if (delta > 0) {
                if (cnt++ == 0) sat_mask_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << (c - 1);
            } else {
                if (--cnt == 0) sat_mask_[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << (c - 1));
            }
        }
    }

    const Graph& g_;
    int k_;
    int n_;
    std::vector<int> color_;
    std::vector<std::uint64_t> sat_mask_;
    std::vector<std::vector<std::uint16_t>> sat_count_;
};

} // namespace detail

// A proper k-coloring of g, or nothing when none exists. Total and
// deterministic; callers wanting wall-clock limits impose them outside.
inline std::optional<Coloring> find_proper_coloring(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_proper_coloring: k must be positive");
    if (k > 64) throw std::invalid_argument("find_proper_coloring: k above 64 is unsupported");
    if (g.vertex_count() == 0) return Coloring{k, {}};
    detail::ColorSearch search(g, k);
    if (!search.run()) return std::nullopt;
    return Coloring{k, search.take_assignment()};
}

} // namespace k4cert
