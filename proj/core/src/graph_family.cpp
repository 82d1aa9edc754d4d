// Built-in family of all small graphs up to isomorphism.
//
// Graphs on n vertices are grown from those on n-1 by attaching a new vertex
// to every neighbour subset, then deduplicated by a canonical code: the least
// edge bitmask over all relabelings that sort vertices by an isomorphism
// invariant (degree, then sorted neighbour degrees). Isomorphic graphs share
// the same set of such relabelings, so the minimum is canonical.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dichro/orientation.hpp"

namespace dichro {

namespace {

constexpr std::size_t max_builtin_order = 7;

using Code = std::uint32_t;  // 21 pair bits suffice for n <= 7

constexpr unsigned pair_bit(unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

struct SmallGraph {
    std::size_t n = 0;
    Code code = 0;

    bool edge(unsigned i, unsigned j) const { return (code >> pair_bit(i, j)) & 1U; }
};

Code canonical_code(const SmallGraph& g) {
    const std::size_t n = g.n;
    std::vector<unsigned> degree(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (i != j && g.edge(i, j)) ++degree[i];
        }
    }
    using Key = std::pair<unsigned, std::vector<unsigned>>;
    std::vector<Key> key(n);
    for (unsigned i = 0; i < n; ++i) {
        key[i].first = degree[i];
        for (unsigned j = 0; j < n; ++j) {
            if (i != j && g.edge(i, j)) key[i].second.push_back(degree[j]);
        }
        std::sort(key[i].second.begin(), key[i].second.end());
    }
    std::vector<unsigned> sorted(n);
    std::iota(sorted.begin(), sorted.end(), 0U);
    std::stable_sort(sorted.begin(), sorted.end(), [&](unsigned a, unsigned b) { return key[a] > key[b]; });

    // Blocks of equal key; every relabeling permutes vertices within blocks.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && key[sorted[j]] == key[sorted[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    Code best = ~Code{0};
    std::vector<unsigned> perm = sorted;  // perm[new label] = old vertex
    auto evaluate = [&] {
        Code c = 0;
        for (unsigned a = 0; a < n; ++a) {
            for (unsigned b = a + 1; b < n; ++b) {
                if (g.edge(perm[a], perm[b])) c |= Code{1} << pair_bit(a, b);
            }
        }
        best = std::min(best, c);
    };
    auto recurse = [&](auto&& self, std::size_t block) -> void {
        if (block == blocks.size()) {
            evaluate();
            return;
        }
        const auto [lo, hi] = blocks[block];
        std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo), perm.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            self(self, block + 1);
        } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                       perm.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    recurse(recurse, 0);
    return best;
}

std::set<Code> canonical_codes(std::size_t n) {
    static std::mutex mutex;
    static std::vector<std::set<Code>> table{{0}};
    std::lock_guard lock(mutex);
    while (table.size() <= n) {
        const std::size_t m = table.size();
        const auto last = static_cast<unsigned>(m - 1);
        std::set<Code> next;
        for (Code base : table[m - 1]) {
            for (Code nbrs = 0; nbrs < (Code{1} << last); ++nbrs) {
                SmallGraph g{m, base};
                for (unsigned i = 0; i < last; ++i) {
                    if ((nbrs >> i) & 1U) g.code |= Code{1} << pair_bit(i, last);
                }
                next.insert(canonical_code(g));
            }
        }
        table.push_back(std::move(next));
    }
    return table[n];
}

Graph to_graph(const SmallGraph& g) {
    std::vector<Edge> edges;
    for (unsigned j = 1; j < g.n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
            if (g.edge(i, j)) edges.push_back({i, j});
        }
    }
    return Graph(g.n, edges);
}

}  // namespace

std::vector<NamedGraph> all_graphs(std::size_t n, bool connected_only) {
    if (n > max_builtin_order) {
        throw std::invalid_argument("all_graphs: built-in enumeration covers n <= " +
                                    std::to_string(max_builtin_order));
    }
    std::vector<NamedGraph> out;
    if (n == 0) return out;
    std::size_t index = 0;
    for (Code code : canonical_codes(n)) {
        Graph g = to_graph({n, code});
        if (connected_only && !is_connected(g)) continue;
        out.push_back({"n" + std::to_string(n) + "_" + std::to_string(index++), std::move(g)});
    }
    return out;
}

std::vector<NamedGraph> all_graphs_up_to(std::size_t max_n, bool connected_only) {
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto part = all_graphs(n, connected_only);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

}  // namespace dichro
