#include "dichro/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dichro/amalgam.hpp"
#include "dichro/random.hpp"

namespace dichro {

Graph complete_graph(std::size_t n) {
    if (n < 1) throw InvalidSize("complete_graph: n must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, edges);
}

Graph half_graph(std::size_t n) {
    if (n < 1) throw InvalidSize("half_graph: n must be at least 1");
    std::vector<Edge> edges;
    for (Vertex k = 0; k < n; ++k) {
        for (Vertex l = k; l < n; ++l) edges.push_back({2 * k, 2 * l + 1});
    }
    return Graph(2 * n, edges);
}

Digraph half_fwd(std::size_t n) {
    if (n < 1) throw InvalidSize("half_fwd: n must be at least 1");
    std::vector<Arc> arcs;
    for (Vertex k = 0; k < n; ++k) {
        for (Vertex l = k; l < n; ++l) arcs.push_back({2 * k, 2 * l + 1});
    }
    return Digraph(2 * n, arcs);
}

Digraph half_back(std::size_t n) { return reverse(half_fwd(n)); }

// ---------------------------------------------------------------- shift graphs

ShiftVertexIndex::ShiftVertexIndex(std::size_t k, std::size_t m) : k_(k), m_(m) {
    pascal_.assign(m + 1, std::vector<std::uint64_t>(k + 2, 0));
    for (std::size_t i = 0; i <= m; ++i) {
        pascal_[i][0] = 1;
        for (std::size_t j = 1; j <= std::min(i, k + 1); ++j) {
            pascal_[i][j] = pascal_[i - 1][j - 1] + (j <= i - 1 ? pascal_[i - 1][j] : 0);
        }
    }
    size_ = static_cast<std::size_t>(binomial(m, k));
}

std::uint64_t ShiftVertexIndex::binomial(std::size_t n, std::size_t r) const {
    if (r > n) return 0;
    return pascal_[n][r];
}

std::size_t ShiftVertexIndex::rank(std::span<const Vertex> subset) const {
    if (subset.size() != k_) throw std::invalid_argument("ShiftVertexIndex::rank: wrong subset size");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k_; ++i) {
        if (subset[i] >= m_ || (i > 0 && subset[i] <= subset[i - 1])) {
            throw std::invalid_argument("ShiftVertexIndex::rank: subset not increasing within range");
        }
        r += binomial(subset[i], i + 1);
    }
    return static_cast<std::size_t>(r);
}

std::vector<Vertex> ShiftVertexIndex::unrank(std::size_t index) const {
    if (index >= size_) throw std::out_of_range("ShiftVertexIndex::unrank: index out of range");
    std::vector<Vertex> subset(k_);
    std::uint64_t rest = index;
    std::size_t hi = m_;
    for (std::size_t i = k_; i-- > 0;) {
        // Largest x < hi with C(x, i+1) <= rest.
        std::size_t x = hi - 1;
        while (binomial(x, i + 1) > rest) --x;
        subset[i] = static_cast<Vertex>(x);
        rest -= binomial(x, i + 1);
        hi = x;
    }
    return subset;
}

ShiftGraph shift_graph(std::size_t k, std::size_t m) {
    if (k < 2 || m < k + 1) throw InvalidSize("shift_graph: need k >= 2 and m >= k + 1");
    ShiftVertexIndex index(k, m);
    std::vector<Edge> edges;
    std::vector<Vertex> tuple(k + 1);
    std::iota(tuple.begin(), tuple.end(), Vertex{0});
    // Walk all increasing (k+1)-tuples of {0..m-1}.
    for (;;) {
        const auto a = static_cast<Vertex>(index.rank(std::span<const Vertex>(tuple.data(), k)));
        const auto b = static_cast<Vertex>(index.rank(std::span<const Vertex>(tuple.data() + 1, k)));
        edges.push_back({std::min(a, b), std::max(a, b)});

        std::size_t i = k + 1;
        while (i > 0 && tuple[i - 1] == m - (k + 1) + (i - 1)) --i;
        if (i == 0) break;
        ++tuple[i - 1];
        for (std::size_t j = i; j <= k; ++j) tuple[j] = tuple[j - 1] + 1;
    }
    return {Graph(index.size(), edges), std::move(index)};
}

// ---------------------------------------------------------------- cycles, paths, tournaments

Digraph directed_cycle(std::size_t n) {
    if (n < 3) throw InvalidSize("directed_cycle: n must be at least 3");
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Digraph(n, arcs);
}

Digraph directed_path(std::size_t n) {
    if (n < 1) throw InvalidSize("directed_path: n must be at least 1");
    std::vector<Arc> arcs;
    for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
    return Digraph(n, arcs);
}

Digraph random_tournament(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw InvalidSize("random_tournament: n must be at least 1");
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) arcs.push_back(rng.coin() ? Arc{v, u} : Arc{u, v});
    }
    return Digraph(n, arcs);
}

// ---------------------------------------------------------------- sparse sampler

Digraph sparse_sample(std::size_t target_n, std::size_t k, std::uint64_t seed) {
    if (k < 3) throw InvalidSize("sparse_sample: k must be at least 3");
    if (target_n < k + 2) throw InvalidSize("sparse_sample: target_n must be at least k + 2");
    SplitMix64 rng(seed);
    const std::size_t copies = k + 1;

    Digraph d = directed_cycle(k + 1);
    while (d.order() < target_n) {
        const std::size_t n = d.order();
        const std::size_t root_size = std::max<std::size_t>(1, std::min<std::size_t>(3, n / 4));
        std::vector<Vertex> vertices(n);
        std::iota(vertices.begin(), vertices.end(), Vertex{0});
        rng.shuffle(std::span<Vertex>(vertices));
        std::vector<Vertex> root(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(root_size));
        std::sort(root.begin(), root.end());
        const Vertex alpha = vertices[root_size + rng.below(n - root_size)];

        const TwinFamily family = make_twin_family(d, root, copies);
        std::vector<Label> reps(copies);
        for (std::size_t j = 0; j < copies; ++j) reps[j] = family.psi(0, j, alpha);
        d = cycle_amalgamate(family, reps, k).digraph;
    }

    const auto g = digirth(d);
    if (!g || *g <= k) throw std::logic_error("sparse_sample: digirth invariant violated");
    return d;
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed, std::size_t min_digirth) {
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    rng.shuffle(std::span<std::pair<Vertex, Vertex>>(pairs));

    std::vector<std::vector<Vertex>> out(n);
    std::vector<Arc> arcs;
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> queue;

    // Shortest path length from `from` to `to`, giving up beyond `limit`.
    auto distance = [&](Vertex from, Vertex to, std::size_t limit) {
        std::fill(dist.begin(), dist.end(), unreached);
        queue.assign(1, from);
        dist[from] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            if (x == to) return dist[x];
            if (dist[x] >= limit) continue;
            for (Vertex w : out[x]) {
                if (dist[w] == unreached) {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        return unreached;
    };

    for (auto [u, v] : pairs) {
        if (!rng.bernoulli(p)) continue;
        if (rng.coin()) std::swap(u, v);
        // u -> v closes a cycle of length dist(v, u) + 1.
        if (min_digirth > 0) {
            const auto back = distance(v, u, min_digirth);
            if (back != unreached && back + 1 < min_digirth) continue;
        }
        out[u].push_back(v);
        arcs.push_back({u, v});
    }
    return Digraph(n, arcs);
}

}  // namespace dichro
