#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dichro {

using Vertex = std::uint32_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    auto operator<=>(const Arc&) const = default;
};

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

enum class GraphErrorKind { SelfLoop, Digon, DuplicateArc, VertexOutOfRange };

std::string to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, Vertex u, Vertex v);

    GraphErrorKind kind() const noexcept { return kind_; }
    Vertex u() const noexcept { return u_; }
    Vertex v() const noexcept { return v_; }

private:
    GraphErrorKind kind_;
    Vertex u_;
    Vertex v_;
};

// Finite loop-free, digon-free digraph on vertices 0..n-1. Immutable once built.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    // Throws GraphError on loops, digons, duplicates or out-of-range endpoints.
    Digraph(std::size_t n, std::span<const Arc> arcs);
    Digraph(std::size_t n, std::initializer_list<Arc> arcs)
        : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    std::size_t order() const noexcept { return out_.size(); }
    std::size_t size() const noexcept { return arcs_.size(); }

    bool has_arc(Vertex u, Vertex v) const;
    std::span<const Vertex> out(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in(Vertex v) const { return in_[v]; }
    std::size_t degree(Vertex v) const { return out_[v].size() + in_[v].size(); }

    // Lexicographically sorted.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool operator==(const Digraph& other) const {
        return order() == other.order() && arcs_ == other.arcs_;
    }

private:
    friend class DigraphBuilder;

    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

// Incremental construction with per-arc validation.
class DigraphBuilder {
public:
    explicit DigraphBuilder(std::size_t n);

    void add_arc(Vertex u, Vertex v);
    bool contains(Vertex u, Vertex v) const;
    std::size_t order() const noexcept { return n_; }

    Digraph build() &&;

private:
    static std::uint64_t key(Vertex u, Vertex v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    std::size_t n_;
    std::vector<Arc> arcs_;
    std::unordered_set<std::uint64_t> seen_;
};

// Finite simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    // Throws GraphError on loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    bool has_edge(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    // Sorted, each edge with u < v.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool operator==(const Graph& other) const {
        return order() == other.order() && edges_ == other.edges_;
    }

private:
    friend class GraphBuilder;

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    void add_edge(Vertex u, Vertex v);
    std::size_t order() const noexcept { return n_; }

    Graph build() &&;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> seen_;
};

// Injective vertex map source -> target; map[v] is the image of source vertex v.
struct Embedding {
    std::vector<Vertex> map;
};

struct AcyclicityResult {
    bool acyclic = false;
    // All arcs point forward in this order; present iff acyclic.
    std::optional<std::vector<Vertex>> order;
};

struct InducedSubdigraph {
    Digraph digraph;
    // labels[i] is the original vertex of induced vertex i (increasing).
    std::vector<Vertex> labels;
};

AcyclicityResult is_acyclic(const Digraph& d);

// Shortest directed cycle length, or nullopt for acyclic digraphs.
std::optional<std::size_t> digirth(const Digraph& d);

Digraph reverse(const Digraph& d);

// W may be unsorted and contain duplicates; throws std::out_of_range on bad vertices.
InducedSubdigraph induced(const Digraph& d, std::span<const Vertex> w);

bool is_orientation_of(const Digraph& d, const Graph& g);

Graph underlying_graph(const Digraph& d);

// Merges b into a. shared[i] = (vertex of a, vertex of b) identifies the two.
// Result: a's vertices keep their indices; b's unshared vertices follow in
// increasing order. Throws GraphError(Digon) when both directions appear and
// std::invalid_argument when the identification is not injective.
Digraph digraph_union(const Digraph& a, const Digraph& b,
                      std::span<const std::pair<Vertex, Vertex>> shared);

// Subgraph (not necessarily induced) embedding by backtracking.
std::optional<Embedding> find_embedding(const Digraph& source, const Digraph& target);

// Same, restricted to target vertices with allowed[v] != 0. Empty span = all.
std::optional<Embedding> find_embedding(const Digraph& source, const Digraph& target,
                                        std::span<const std::uint8_t> allowed);

// Independent check that e is injective and arc-preserving.
bool is_embedding(const Digraph& source, const Digraph& target, const Embedding& e);

}  // namespace dichro
