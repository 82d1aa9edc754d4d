#include "dichro/digraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "vertex_set.hpp"

namespace dichro {

std::string to_string(GraphErrorKind kind) {
    switch (kind) {
        case GraphErrorKind::SelfLoop: return "self-loop";
        case GraphErrorKind::Digon: return "digon";
        case GraphErrorKind::DuplicateArc: return "duplicate arc";
        case GraphErrorKind::VertexOutOfRange: return "vertex out of range";
    }
    return "unknown";
}

GraphError::GraphError(GraphErrorKind kind, Vertex u, Vertex v)
    : std::runtime_error(to_string(kind) + " (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
      kind_(kind),
      u_(u),
      v_(v) {}

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(std::size_t n) : out_(n), in_(n) {}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) {
    DigraphBuilder b(n);
    for (const auto& a : arcs) b.add_arc(a.tail, a.head);
    *this = std::move(b).build();
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& row = out_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

DigraphBuilder::DigraphBuilder(std::size_t n) : n_(n) {}

void DigraphBuilder::add_arc(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw GraphError(GraphErrorKind::VertexOutOfRange, u, v);
    if (u == v) throw GraphError(GraphErrorKind::SelfLoop, u, v);
    if (seen_.contains(key(u, v))) throw GraphError(GraphErrorKind::DuplicateArc, u, v);
    if (seen_.contains(key(v, u))) throw GraphError(GraphErrorKind::Digon, u, v);
    seen_.insert(key(u, v));
    arcs_.push_back({u, v});
}

bool DigraphBuilder::contains(Vertex u, Vertex v) const { return seen_.contains(key(u, v)); }

Digraph DigraphBuilder::build() && {
    Digraph d(n_);
    std::sort(arcs_.begin(), arcs_.end());
    for (const auto& a : arcs_) {
        d.out_[a.tail].push_back(a.head);
        d.in_[a.head].push_back(a.tail);
    }
    for (auto& row : d.in_) std::sort(row.begin(), row.end());
    d.arcs_ = std::move(arcs_);
    return d;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (const auto& e : edges) b.add_edge(e.u, e.v);
    *this = std::move(b).build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw GraphError(GraphErrorKind::VertexOutOfRange, u, v);
    if (u == v) throw GraphError(GraphErrorKind::SelfLoop, u, v);
    if (u > v) std::swap(u, v);
    const std::uint64_t k = (static_cast<std::uint64_t>(u) << 32) | v;
    if (!seen_.insert(k).second) throw GraphError(GraphErrorKind::DuplicateArc, u, v);
    edges_.push_back({u, v});
}

Graph GraphBuilder::build() && {
    Graph g(n_);
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.edges_ = std::move(edges_);
    return g;
}

// ---------------------------------------------------------------- queries

AcyclicityResult is_acyclic(const Digraph& d) {
    const std::size_t n = d.order();
    std::vector<std::size_t> indeg(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        indeg[v] = d.in(v).size();
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        const Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : d.out(v)) {
            if (--indeg[w] == 0) ready.push(w);
        }
    }
    if (order.size() != n) return {false, std::nullopt};
    return {true, std::move(order)};
}

std::optional<std::size_t> digirth(const Digraph& d) {
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    const std::size_t n = d.order();
    std::size_t best = unreached;
    std::vector<std::size_t> dist(n, unreached);
    std::vector<Vertex> queue;
    queue.reserve(n);

    for (Vertex s = 0; s < n && best > 3; ++s) {
        if (d.in(s).empty() || d.out(s).empty()) continue;
        std::fill(dist.begin(), dist.end(), unreached);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        // BFS from s; the first in-neighbour of s reached closes the shortest cycle through s.
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            if (dist[u] + 1 >= best) break;
            bool closed = false;
            for (Vertex w : d.out(u)) {
                if (w == s) {
                    best = dist[u] + 1;
                    closed = true;
                    break;
                }
                if (dist[w] == unreached) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
            if (closed) break;
        }
    }
    if (best == unreached) return std::nullopt;
    return best;
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const auto& a : d.arcs()) arcs.push_back({a.head, a.tail});
    return Digraph(d.order(), arcs);
}

InducedSubdigraph induced(const Digraph& d, std::span<const Vertex> w) {
    std::vector<Vertex> labels(w.begin(), w.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (!labels.empty() && labels.back() >= d.order()) {
        throw std::out_of_range("induced: vertex " + std::to_string(labels.back()) + " out of range");
    }
    constexpr auto absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> index(d.order(), absent);
    for (Vertex i = 0; i < labels.size(); ++i) index[labels[i]] = i;

    std::vector<Arc> arcs;
    for (Vertex i = 0; i < labels.size(); ++i) {
        for (Vertex h : d.out(labels[i])) {
            if (index[h] != absent) arcs.push_back({i, index[h]});
        }
    }
    return {Digraph(labels.size(), arcs), std::move(labels)};
}

bool is_orientation_of(const Digraph& d, const Graph& g) {
    if (d.order() != g.order() || d.size() != g.size()) return false;
    for (const auto& a : d.arcs()) {
        if (!g.has_edge(a.tail, a.head)) return false;
    }
    // Sizes agree and digons are impossible, so each edge is covered exactly once.
    return true;
}

Graph underlying_graph(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(d.size());
    for (const auto& a : d.arcs()) edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    return Graph(d.order(), edges);
}

Digraph digraph_union(const Digraph& a, const Digraph& b,
                      std::span<const std::pair<Vertex, Vertex>> shared) {
    constexpr auto absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> b_to_merged(b.order(), absent);
    std::vector<char> a_used(a.order(), 0);
    for (const auto& [va, vb] : shared) {
        if (va >= a.order() || vb >= b.order()) {
            throw std::invalid_argument("digraph_union: identified vertex out of range");
        }
        if (a_used[va] || b_to_merged[vb] != absent) {
            throw std::invalid_argument("digraph_union: identification is not injective");
        }
        a_used[va] = 1;
        b_to_merged[vb] = va;
    }
    Vertex next = static_cast<Vertex>(a.order());
    for (Vertex v = 0; v < b.order(); ++v) {
        if (b_to_merged[v] == absent) b_to_merged[v] = next++;
    }

    DigraphBuilder builder(next);
    for (const auto& arc : a.arcs()) builder.add_arc(arc.tail, arc.head);
    for (const auto& arc : b.arcs()) {
        const Vertex u = b_to_merged[arc.tail];
        const Vertex v = b_to_merged[arc.head];
        if (builder.contains(u, v)) continue;
        builder.add_arc(u, v);
    }
    return std::move(builder).build();
}

// ---------------------------------------------------------------- embedding

namespace {

template <class Set>
class EmbeddingSearch {
public:
    EmbeddingSearch(const Digraph& source, const Digraph& target, std::span<const std::uint8_t> allowed)
        : source_(source),
          target_(target),
          rows_(target),
          allowed_(target.order()),
          used_(target.order()),
          map_(source.order(), unmapped) {
        for (Vertex v = 0; v < target.order(); ++v) {
            if (allowed.empty() || allowed[v] != 0) allowed_.set(v);
        }
        order_.resize(source.order());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
            return source.degree(x) > source.degree(y);
        });
    }

    std::optional<Embedding> run() {
        if (source_.order() > allowed_.count()) return std::nullopt;
        if (!extend(0)) return std::nullopt;
        return Embedding{map_};
    }

private:
    static constexpr Vertex unmapped = std::numeric_limits<Vertex>::max();

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex u = order_[depth];

        Set candidates = allowed_;
        candidates.andnot(used_);
        for (Vertex w : source_.out(u)) {
            if (map_[w] != unmapped) candidates &= rows_.in[map_[w]];
        }
        for (Vertex w : source_.in(u)) {
            if (map_[w] != unmapped) candidates &= rows_.out[map_[w]];
        }

        const std::size_t need_out = source_.out(u).size();
        const std::size_t need_in = source_.in(u).size();
        while (candidates.any()) {
            const Vertex t = candidates.pop_first();
            if (target_.out(t).size() < need_out || target_.in(t).size() < need_in) continue;
            map_[u] = t;
            used_.set(t);
            if (extend(depth + 1)) return true;
            used_.reset(t);
            map_[u] = unmapped;
        }
        return false;
    }

    const Digraph& source_;
    const Digraph& target_;
    detail::BitRows<Set> rows_;
    Set allowed_;
    Set used_;
    std::vector<Vertex> map_;
    std::vector<Vertex> order_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Digraph& source, const Digraph& target) {
    return find_embedding(source, target, {});
}

std::optional<Embedding> find_embedding(const Digraph& source, const Digraph& target,
                                        std::span<const std::uint8_t> allowed) {
    if (!allowed.empty() && allowed.size() != target.order()) {
        throw std::invalid_argument("find_embedding: allowed mask has wrong size");
    }
    return detail::with_vertex_set(target.order(), [&]<class Set>() {
        return EmbeddingSearch<Set>(source, target, allowed).run();
    });
}

bool is_embedding(const Digraph& source, const Digraph& target, const Embedding& e) {
    if (e.map.size() != source.order()) return false;
    std::vector<char> hit(target.order(), 0);
    for (Vertex img : e.map) {
        if (img >= target.order() || hit[img]) return false;
        hit[img] = 1;
    }
    for (const auto& a : source.arcs()) {
        if (!target.has_arc(e.map[a.tail], e.map[a.head])) return false;
    }
    return true;
}

}  // namespace dichro
