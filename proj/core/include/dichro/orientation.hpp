#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_edge_cap = 30;

// Enumerates all 2^m orientations of g in Gray-code order over the edge
// direction vector: bit e of the code set means edge e = {u < v} is oriented
// v -> u. Consecutive orientations differ in exactly one edge.
class OrientationStream {
public:
    // Throws CapExceeded when g has more than edge_cap edges.
    explicit OrientationStream(const Graph& g, std::size_t edge_cap = default_edge_cap);
    // Orientations with Gray-code index in [first, last).
    OrientationStream(const Graph& g, std::uint64_t first, std::uint64_t last,
                      std::size_t edge_cap = default_edge_cap);

    std::optional<Digraph> next();

    std::uint64_t total() const noexcept { return std::uint64_t{1} << graph_.size(); }
    // Edge flipped to reach the most recent orientation from the one before; nullopt for the first.
    std::optional<std::size_t> last_flipped() const noexcept { return last_flipped_; }
    // Direction code of the most recent orientation.
    std::uint64_t code() const noexcept { return code_; }

private:
    Graph graph_;
    std::uint64_t first_;
    std::uint64_t index_;
    std::uint64_t last_;
    std::uint64_t code_ = 0;
    std::optional<std::size_t> last_flipped_;
};

// Orientation of g whose edge e is reversed iff bit e of code is set.
Digraph orient_by_code(const Graph& g, std::uint64_t code);

enum class DchrMode { Auto, Exhaustive, Heuristic };

struct DchrOptions {
    DchrMode mode = DchrMode::Auto;
    std::size_t edge_cap = default_edge_cap;
    // Stop as soon as an orientation reaches this value.
    std::optional<std::size_t> stop_at;
    std::uint64_t seed = 0x5eed;
    std::size_t restarts = 8;
    std::size_t max_flips = 2000;
    // Accepted flips between exact evaluations during local search.
    std::size_t eval_period = 16;
    // Maximum length of cycles counted by the local-search surrogate.
    std::size_t surrogate_length = 4;
    std::optional<std::chrono::milliseconds> solver_timeout;
    // Worker threads for exhaustive enumeration.
    std::size_t jobs = 1;
};

struct DchrResult {
    std::size_t value = 0;
    Digraph witness;
    // True iff every orientation was examined (or the upper bound chi(G) was reached).
    bool exhaustive = false;
    std::uint64_t orientations_examined = 0;
};

// max chi(D) over orientations D of g. Exhaustive when m <= edge_cap (Auto),
// otherwise a lower bound from multi-start arc-flip local search.
DchrResult dchr(const Graph& g, const DchrOptions& options = {});

// Orientation with a directed cycle: some cycle oriented cyclically, all other
// edges from lower to higher index. nullopt when g is a forest.
std::optional<Digraph> cycle_orientation(const Graph& g);

// Edge {a < b} becomes a -> b when f(a, b) == 0 and b -> a otherwise.
using PairColouring = std::function<int(Vertex, Vertex)>;
Digraph orient_by_pair_colouring(const Graph& g, const PairColouring& f);

// Number of directed cycles of length <= max_length (each counted once).
std::uint64_t count_short_cycles(const Digraph& d, std::size_t max_length);

// ---------------------------------------------------------------- ENL scans

struct EnlRecord {
    std::string graph_id;
    std::size_t chromatic = 0;
    bool considered = false;  // chromatic >= chr_min
    std::size_t dchr_lower_bound = 0;
    std::optional<Digraph> witness;
    bool exhaustive = false;
    bool reached_target = false;
};

struct EnlReport {
    std::size_t chr_min = 0;
    std::size_t target_k = 0;
    std::vector<EnlRecord> records;
    std::size_t considered = 0;
    std::size_t failures = 0;
    // Failures found without exhaustive search; these may be search misses.
    std::size_t inconclusive = 0;
    // min chi(G) over considered graphs that failed the target.
    std::optional<std::size_t> min_failing_chromatic;
};

struct NamedGraph {
    std::string id;
    Graph graph;
};

struct EnlOptions {
    DchrOptions dchr;
    std::optional<std::chrono::milliseconds> solver_timeout;
    std::size_t jobs = 1;
};

// For each graph with chi(G) >= chr_min, searches for an orientation with
// chi(D) >= target_k; every witness is re-checked as an orientation and re-solved.
EnlReport enl_scan(const std::vector<NamedGraph>& family, std::size_t chr_min, std::size_t target_k,
                   const EnlOptions& options = {});

// All graphs on exactly n vertices (n <= 7) up to isomorphism, optionally only
// connected ones. Ids are "n<n>_<index>".
std::vector<NamedGraph> all_graphs(std::size_t n, bool connected_only);

// Concatenation of all_graphs(i, connected_only) for i = 1..max_n.
std::vector<NamedGraph> all_graphs_up_to(std::size_t max_n, bool connected_only);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace dichro
