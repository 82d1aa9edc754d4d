#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

// Partition of V(D) into acyclic classes, each with a topological order.
struct AcyclicPartition {
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::vector<Vertex>> topo_orders;

    std::size_t size() const noexcept { return classes.size(); }
};

// Partition of V(G) into independent sets.
struct ColourPartition {
    std::vector<std::vector<Vertex>> classes;

    std::size_t size() const noexcept { return classes.size(); }
};

struct ArcBipartition {
    std::vector<Arc> forward;
    std::vector<Arc> backward;
    std::vector<Vertex> order;
};

enum class SolveStatus {
    Exact,
    // Budget or timeout hit; lower_bound is proven, upper_bound is the best found.
    Exceeded,
    // satisfice run: a partition within budget exists, optimality not proven.
    WithinBudget,
};

struct SolveOptions {
    // Only partitions with at most this many classes are searched for.
    std::optional<std::size_t> budget;
    std::optional<std::chrono::milliseconds> timeout;
    // With a budget: return as soon as any partition within budget is found.
    bool satisfice = false;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

template <class Certificate>
struct SolveResult {
    SolveStatus status = SolveStatus::Exact;
    std::size_t lower_bound = 0;
    // Classes in the best certificate found; 0 if none.
    std::size_t upper_bound = 0;
    std::optional<Certificate> certificate;
    SolveStats stats;

    bool exact() const noexcept { return status == SolveStatus::Exact; }
    // Exact value; only meaningful when exact().
    std::size_t value() const noexcept { return upper_bound; }
};

using DichromaticResult = SolveResult<AcyclicPartition>;
using ChromaticResult = SolveResult<ColourPartition>;

// Exact dichromatic number by branch and bound over acyclic class assignments.
DichromaticResult dichromatic_number(const Digraph& d, const SolveOptions& options = {});

// Exact chromatic number by the same search with independence as the class test.
ChromaticResult chromatic_number(const Graph& g, const SolveOptions& options = {});

// Re-checks the certificate arc by arc; independent of the solver.
bool verify_acyclic_partition(const Digraph& d, const AcyclicPartition& cert);

bool verify_colour_partition(const Graph& g, const ColourPartition& cert);

// Forward arcs go left-to-right in the order; both classes are acyclic.
// Default order is 0..n-1. Throws std::invalid_argument on a non-permutation.
ArcBipartition arc_bipartition(const Digraph& d, std::optional<std::span<const Vertex>> order = std::nullopt);

// max over |W| <= size_cap of chi(D[W]); enumerates every such W.
// Throws std::invalid_argument when size_cap > n or n > 30.
std::size_t max_dichromatic_over_induced(const Digraph& d, std::size_t size_cap);

// Builds a certificate from a colour assignment (colour[v] < k); nullopt if
// some class is cyclic.
std::optional<AcyclicPartition> acyclic_partition_from_colouring(const Digraph& d,
                                                                 std::span<const std::uint32_t> colour);

}  // namespace dichro
