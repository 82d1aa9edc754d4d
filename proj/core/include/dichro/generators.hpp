#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

class InvalidSize : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Graph complete_graph(std::size_t n);

// Vertices (k, i) for k < n, i in {0, 1}, indexed 2k + i.
// Graph: (k,0)-(l,1) for k <= l. half_fwd: arcs (k,0) -> (l,1). half_back: reversed.
Graph half_graph(std::size_t n);
Digraph half_fwd(std::size_t n);
Digraph half_back(std::size_t n);

// Colex ranking of the k-subsets of {0..m-1}.
class ShiftVertexIndex {
public:
    ShiftVertexIndex(std::size_t k, std::size_t m);

    std::size_t k() const noexcept { return k_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t size() const noexcept { return size_; }

    // subset must be strictly increasing with entries < m.
    std::size_t rank(std::span<const Vertex> subset) const;
    std::vector<Vertex> unrank(std::size_t index) const;

private:
    std::uint64_t binomial(std::size_t n, std::size_t r) const;

    std::size_t k_;
    std::size_t m_;
    std::size_t size_;
    std::vector<std::vector<std::uint64_t>> pascal_;
};

struct ShiftGraph {
    Graph graph;
    ShiftVertexIndex index;
};

// Vertices: k-subsets of {0..m-1}; {x_0..x_{k-1}} ~ {x_1..x_k} for every
// increasing x_0 < ... < x_k. Requires 2 <= k and m >= k + 1.
ShiftGraph shift_graph(std::size_t k, std::size_t m);

// Throws InvalidSize for n < 3.
Digraph directed_cycle(std::size_t n);
// Throws InvalidSize for n < 1.
Digraph directed_path(std::size_t n);

// Orientation of K_n; edge {i < j} visited in lexicographic order, one coin each.
Digraph random_tournament(std::size_t n, std::uint64_t seed);

// Digraph of digirth exactly k+1 grown by cycle amalgamation of k+1 twins of
// the current digraph over small random roots, until it has >= target_n
// vertices. Requires k >= 3 and target_n >= k + 2.
Digraph sparse_sample(std::size_t target_n, std::size_t k, std::uint64_t seed);

// Each vertex pair, in random order, becomes an arc with probability p in a
// random direction; arcs that would close a directed cycle shorter than
// min_digirth are skipped.
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed, std::size_t min_digirth = 0);

}  // namespace dichro
