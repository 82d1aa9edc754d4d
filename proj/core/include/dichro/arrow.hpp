#pragma once

// Vertex partition relations D -> (D0)^1_r: every r-colouring of V(D) has a
// colour class whose induced subdigraph contains a copy of D0.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dichro/digraph.hpp"
#include "dichro/orientation.hpp"  // CapExceeded

namespace dichro {

struct ArrowReport {
    bool holds = false;
    // Present iff !holds: a colouring (values < r) with no monochromatic target.
    std::optional<std::vector<std::uint32_t>> witness_colouring;
    // Partial colourings visited by the search.
    std::uint64_t checked_colourings = 0;
    // arrows_all only: index of the target that failed.
    std::optional<std::size_t> failed_target;
};

struct ArrowOptions {
    // Search-node cap; CapExceeded when hit.
    std::uint64_t node_cap = 200'000'000;
};

// Throws CapExceeded when n > 64 or the node cap is hit; std::invalid_argument when r == 0.
ArrowReport arrows(const Digraph& d, const Digraph& target, std::size_t r, const ArrowOptions& options = {});

// Some class contains some target. An empty target list never arrows.
ArrowReport arrows_any(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                       const ArrowOptions& options = {});

// arrows(d, t, r) for every target t. An empty target list arrows vacuously.
ArrowReport arrows_all(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                       const ArrowOptions& options = {});

// Independent re-check that no colour class of `colouring` contains any target.
bool verify_arrow_witness(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                          std::span<const std::uint32_t> colouring);

}  // namespace dichro
