#pragma once

// Reduce a non-3-colorable graph to an edge-critical core: a graph h with
// chi(h) = 4 in which deleting any single edge restores 3-colorability,
// together with its smallest edge xy and a 3-coloring of h - xy.

#include <stdexcept>
#include <utility>

#include "k4cert/check.hpp"
#include "k4cert/coloring.hpp"
#include "k4cert/graph.hpp"

namespace k4cert {

struct CriticalPair {
    Graph h;             // same vertex set as the input, edge subset
    Edge xy;             // smallest edge of h; chi(h - xy) = 3
    Coloring pi_witness; // proper 3-coloring of h - xy with equal colors on x and y
};

// Edges are scanned in ascending (min,max) order and deleted whenever the
// remainder still has no proper 3-coloring; a pass with no deletion is the
// fixed point. Deletion only ever makes a graph easier to color, so once an
// edge survives a pass its removal stays 3-colorable forever.
inline CriticalPair extract_critical_pair(const Graph& g) {
    if (find_proper_coloring(g, 3))
        throw std::invalid_argument(
            "extract_critical_pair: graph is 3-colorable; emit the coloring instead");

    Graph h = g;
    bool deleted = true;
    while (deleted) {
        deleted = false;
        for (const Edge& f : h.edges()) {
            Graph trial = h.without_edge(f);
            if (!find_proper_coloring(trial, 3)) {
                h = std::move(trial);
                deleted = true;
            }
        }
    }

    auto remaining = h.edges();
    detail::require(!remaining.empty(), "a graph with no edges cannot fail 3-coloring");
    const Edge xy = remaining.front();

    auto witness = find_proper_coloring(h.without_edge(xy), 3);
    detail::require(witness.has_value(), "edge-critical core must be 3-colorable after deleting xy");
    detail::require(witness->color_of(xy.u) == witness->color_of(xy.v),
                    "pi(x) != pi(y): the witness would 3-color h itself");
    return CriticalPair{std::move(h), xy, std::move(*witness)};
}

} // namespace k4cert
