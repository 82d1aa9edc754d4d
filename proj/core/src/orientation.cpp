#include "dichro/orientation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

#include "dichro/partition.hpp"
#include "dichro/random.hpp"

namespace dichro {

// ---------------------------------------------------------------- enumeration

OrientationStream::OrientationStream(const Graph& g, std::size_t edge_cap)
    : OrientationStream(g, 0, g.size() < 64 ? std::uint64_t{1} << g.size() : 0, edge_cap) {}

OrientationStream::OrientationStream(const Graph& g, std::uint64_t first, std::uint64_t last, std::size_t edge_cap)
    : graph_(g), first_(first), index_(first), last_(last) {
    if (g.size() > edge_cap || g.size() >= 63) {
        throw CapExceeded("orientation enumeration: " + std::to_string(g.size()) + " edges exceeds cap " +
                          std::to_string(edge_cap));
    }
    last_ = std::min(last_, total());
}

std::optional<Digraph> OrientationStream::next() {
    if (index_ >= last_) return std::nullopt;
    const std::uint64_t code = index_ ^ (index_ >> 1);
    last_flipped_ = index_ > first_ ? std::optional<std::size_t>(std::countr_zero(index_)) : std::nullopt;
    code_ = code;
    ++index_;
    return orient_by_code(graph_, code);
}

Digraph orient_by_code(const Graph& g, std::uint64_t code) {
    std::vector<Arc> arcs;
    arcs.reserve(g.size());
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const bool flipped = e < 64 && ((code >> e) & 1U);
        arcs.push_back(flipped ? Arc{edges[e].v, edges[e].u} : Arc{edges[e].u, edges[e].v});
    }
    return Digraph(g.order(), arcs);
}

// ---------------------------------------------------------------- helpers

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
    Vertex find(Vertex x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<Vertex> parent_;
};

std::vector<std::uint32_t> colouring_of(const AcyclicPartition& p, std::size_t n) {
    std::vector<std::uint32_t> colour(n, 0);
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        for (Vertex v : p.classes[c]) colour[v] = static_cast<std::uint32_t>(c);
    }
    return colour;
}

bool class_still_acyclic(const Digraph& d, std::span<const std::uint32_t> colour, std::uint32_t c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < colour.size(); ++v) {
        if (colour[v] == c) members.push_back(v);
    }
    return is_acyclic(induced(d, members).digraph).acyclic;
}

// Exact chi with an optional timeout; on timeout the proven lower bound.
std::size_t solve_value(const Digraph& d, std::optional<std::chrono::milliseconds> timeout, bool* exact) {
    SolveOptions opts;
    opts.timeout = timeout;
    const auto r = dichromatic_number(d, opts);
    if (exact) *exact = r.exact();
    return r.exact() ? r.value() : r.lower_bound;
}

struct SharedBest {
    std::atomic<std::size_t> value{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> all_verified{true};
    std::mutex mutex;
    Digraph witness;
    std::size_t witness_value = 0;
    std::atomic<std::uint64_t> examined{0};

    void offer(std::size_t v, const Digraph& d) {
        std::lock_guard lock(mutex);
        if (v > witness_value || witness_value == 0) {
            witness_value = std::max(witness_value, v);
            witness = d;
        }
        std::size_t cur = value.load();
        while (v > cur && !value.compare_exchange_weak(cur, v)) {
        }
    }
};

void exhaustive_range(const Graph& g, std::uint64_t first, std::uint64_t last, std::size_t ceiling,
                      const DchrOptions& options, SharedBest& shared) {
    OrientationStream stream(g, first, last, options.edge_cap);
    std::vector<std::uint32_t> prev_colour;
    std::size_t prev_classes = 0;
    std::uint64_t examined = 0;

    while (auto d = stream.next()) {
        if (shared.stop.load(std::memory_order_relaxed)) break;
        ++examined;
        const std::size_t best = shared.value.load(std::memory_order_relaxed);

        // The previous certificate survives a single flip unless the flipped
        // edge lies inside one class and closes a cycle there.
        if (!prev_colour.empty() && prev_classes <= best && stream.last_flipped()) {
            const auto& e = g.edges()[*stream.last_flipped()];
            if (prev_colour[e.u] != prev_colour[e.v] || class_still_acyclic(*d, prev_colour, prev_colour[e.u])) {
                continue;
            }
        }

        SolveOptions probe;
        probe.budget = best;
        probe.satisfice = true;
        probe.timeout = options.solver_timeout;
        const auto r = dichromatic_number(*d, probe);
        if (r.status != SolveStatus::Exceeded) {
            prev_colour = colouring_of(*r.certificate, d->order());
            prev_classes = r.certificate->size();
            continue;
        }
        if (r.lower_bound <= best) {
            // Timed out before deciding; this orientation stays unverified.
            shared.all_verified = false;
            prev_colour.clear();
            continue;
        }

        SolveOptions full;
        full.timeout = options.solver_timeout;
        const auto exact = dichromatic_number(*d, full);
        if (!exact.exact()) shared.all_verified = false;
        const std::size_t value = exact.exact() ? exact.value() : exact.lower_bound;
        shared.offer(value, *d);
        prev_colour = colouring_of(*exact.certificate, d->order());
        prev_classes = exact.certificate->size();
        if (value >= ceiling || (options.stop_at && value >= *options.stop_at)) {
            shared.stop = true;
        }
    }
    shared.examined += examined;
}

// Simple directed paths from `from` to `to` of length 1..max_len in adj,
// avoiding `to` internally.
std::uint64_t count_paths(const std::vector<std::vector<Vertex>>& out, const std::vector<char>& adj, std::size_t n,
                          Vertex from, Vertex to, std::size_t max_len, std::vector<char>& on_path) {
    if (max_len == 0) return 0;
    std::uint64_t total = 0;
    if (adj[from * n + to]) ++total;
    if (max_len == 1) return total;
    on_path[from] = 1;
    for (Vertex w : out[from]) {
        if (!adj[from * n + w] || on_path[w] || w == to) continue;
        total += count_paths(out, adj, n, w, to, max_len - 1, on_path);
    }
    on_path[from] = 0;
    return total;
}

DchrResult heuristic_dchr(const Graph& g, std::size_t ceiling, const DchrOptions& options) {
    const std::size_t n = g.order();
    const auto& edges = g.edges();
    SplitMix64 rng(options.seed);
    DchrResult best;
    best.witness = orient_by_code(g, 0);
    best.value = n > 0 ? 1 : 0;

    // Undirected neighbour lists; adj holds the current orientation.
    std::vector<std::vector<Vertex>> nbrs(n);
    for (Vertex v = 0; v < n; ++v) nbrs[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());
    std::vector<char> adj(n * n, 0);
    std::vector<char> on_path(n, 0);
    std::vector<char> dir(edges.size(), 0);

    auto current = [&] {
        std::vector<Arc> arcs;
        arcs.reserve(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            arcs.push_back(dir[e] ? Arc{edges[e].v, edges[e].u} : Arc{edges[e].u, edges[e].v});
        }
        return Digraph(n, arcs);
    };
    auto evaluate = [&] {
        ++best.orientations_examined;
        auto d = current();
        const std::size_t value = solve_value(d, options.solver_timeout, nullptr);
        if (value > best.value) {
            best.value = value;
            best.witness = std::move(d);
        }
    };
    auto done = [&] {
        return best.value >= ceiling || (options.stop_at && best.value >= *options.stop_at);
    };

    std::vector<std::size_t> edge_order(edges.size());
    std::iota(edge_order.begin(), edge_order.end(), std::size_t{0});
    const std::size_t cycle_len = std::max<std::size_t>(options.surrogate_length, 3);

    for (std::size_t restart = 0; restart < options.restarts && !done(); ++restart) {
        std::fill(adj.begin(), adj.end(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            dir[e] = rng.coin() ? 1 : 0;
            const auto [t, h] = dir[e] ? std::pair{edges[e].v, edges[e].u} : std::pair{edges[e].u, edges[e].v};
            adj[t * n + h] = 1;
        }
        evaluate();

        std::size_t flips = 0;
        std::size_t accepted = 0;
        bool improved = true;
        while (improved && flips < options.max_flips && !done()) {
            improved = false;
            rng.shuffle(std::span<std::size_t>(edge_order));
            for (std::size_t e : edge_order) {
                if (++flips > options.max_flips) break;
                const auto [t, h] = dir[e] ? std::pair{edges[e].v, edges[e].u} : std::pair{edges[e].u, edges[e].v};
                // Short cycles through t->h are paths h ~> t; after the flip, paths t ~> h.
                const auto before = count_paths(nbrs, adj, n, h, t, cycle_len - 1, on_path);
                adj[t * n + h] = 0;
                const auto after = count_paths(nbrs, adj, n, t, h, cycle_len - 1, on_path);
                if (after > before) {
                    adj[h * n + t] = 1;
                    dir[e] ^= 1;
                    improved = true;
                    if (++accepted % std::max<std::size_t>(options.eval_period, 1) == 0) {
                        evaluate();
                        if (done()) break;
                    }
                } else {
                    adj[t * n + h] = 1;
                }
            }
        }
        evaluate();
    }
    best.exhaustive = best.value >= ceiling;
    return best;
}

}  // namespace

// ---------------------------------------------------------------- dchr

DchrResult dchr(const Graph& g, const DchrOptions& options) {
    if (g.order() == 0) return {0, Digraph(0), true, 0};

    // chi(D) <= chi(G) for every orientation: independent sets are acyclic.
    SolveOptions chr_opts;
    chr_opts.timeout = options.solver_timeout;
    const auto chr = chromatic_number(g, chr_opts);
    const std::size_t ceiling = chr.upper_bound;

    const bool exhaustive = options.mode == DchrMode::Exhaustive ||
                            (options.mode == DchrMode::Auto && g.size() <= options.edge_cap);
    if (!exhaustive) {
        if (is_forest(g)) return {1, orient_by_code(g, 0), true, 0};
        return heuristic_dchr(g, ceiling, options);
    }
    if (g.size() > options.edge_cap) {
        throw CapExceeded("dchr: " + std::to_string(g.size()) + " edges exceeds cap " +
                          std::to_string(options.edge_cap));
    }

    SharedBest shared;
    const std::uint64_t total = std::uint64_t{1} << g.size();
    const std::size_t jobs = std::clamp<std::uint64_t>(options.jobs, 1, total);
    if (jobs == 1) {
        exhaustive_range(g, 0, total, ceiling, options, shared);
    } else {
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::uint64_t first = j * chunk;
            const std::uint64_t last = std::min(total, first + chunk);
            if (first >= last) break;
            workers.emplace_back([&, first, last] { exhaustive_range(g, first, last, ceiling, options, shared); });
        }
        for (auto& w : workers) w.join();
    }

    DchrResult r;
    r.value = shared.witness_value;
    r.witness = std::move(shared.witness);
    r.orientations_examined = shared.examined.load();
    const bool stopped_early = shared.stop.load();
    r.exhaustive = shared.all_verified.load() && (!stopped_early || r.value >= ceiling);
    return r;
}

// ---------------------------------------------------------------- explicit orientations

std::optional<Digraph> cycle_orientation(const Graph& g) {
    const std::size_t n = g.order();
    DisjointSets sets(n);
    std::vector<std::vector<Vertex>> forest(n);
    for (const auto& e : g.edges()) {
        if (sets.unite(e.u, e.v)) {
            forest[e.u].push_back(e.v);
            forest[e.v].push_back(e.u);
            continue;
        }
        // e closes a cycle: the forest path from e.v to e.u plus the edge itself.
        std::vector<Vertex> parent(n, static_cast<Vertex>(n));
        std::vector<Vertex> queue{e.v};
        parent[e.v] = e.v;
        for (std::size_t head = 0; head < queue.size() && parent[e.u] == n; ++head) {
            for (Vertex w : forest[queue[head]]) {
                if (parent[w] == n) {
                    parent[w] = queue[head];
                    queue.push_back(w);
                }
            }
        }
        // Path e.u -> parent -> ... -> e.v, then e.v -> e.u closes it.
        std::vector<Arc> cycle_arcs;
        for (Vertex x = e.u; x != e.v; x = parent[x]) cycle_arcs.push_back({x, parent[x]});
        cycle_arcs.push_back({e.v, e.u});

        DigraphBuilder b(n);
        for (const auto& a : cycle_arcs) b.add_arc(a.tail, a.head);
        for (const auto& f : g.edges()) {
            if (!b.contains(f.u, f.v) && !b.contains(f.v, f.u)) b.add_arc(f.u, f.v);
        }
        return std::move(b).build();
    }
    return std::nullopt;
}

Digraph orient_by_pair_colouring(const Graph& g, const PairColouring& f) {
    std::vector<Arc> arcs;
    arcs.reserve(g.size());
    for (const auto& e : g.edges()) {
        arcs.push_back(f(e.u, e.v) == 0 ? Arc{e.u, e.v} : Arc{e.v, e.u});
    }
    return Digraph(g.order(), arcs);
}

std::uint64_t count_short_cycles(const Digraph& d, std::size_t max_length) {
    const std::size_t n = d.order();
    std::uint64_t total = 0;
    std::vector<char> on_path(n, 0);
    // Each cycle is counted from its least vertex.
    auto dfs = [&](auto&& self, Vertex start, Vertex v, std::size_t len) -> void {
        for (Vertex w : d.out(v)) {
            if (w == start) {
                ++total;
                continue;
            }
            if (w < start || on_path[w] || len + 1 >= max_length) continue;
            on_path[w] = 1;
            self(self, start, w, len + 1);
            on_path[w] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = 1;
        dfs(dfs, s, s, 0);
        on_path[s] = 0;
    }
    return total;
}

// ---------------------------------------------------------------- ENL scans

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    DisjointSets sets(g.order());
    std::size_t components = g.order();
    for (const auto& e : g.edges()) {
        if (sets.unite(e.u, e.v)) --components;
    }
    return components == 1;
}

bool is_forest(const Graph& g) {
    DisjointSets sets(g.order());
    for (const auto& e : g.edges()) {
        if (!sets.unite(e.u, e.v)) return false;
    }
    return true;
}

namespace {

EnlRecord scan_one(const NamedGraph& item, std::size_t chr_min, std::size_t target_k, const EnlOptions& options) {
    EnlRecord rec;
    rec.graph_id = item.id;
    const Graph& g = item.graph;

    SolveOptions chr_opts;
    chr_opts.timeout = options.solver_timeout;
    const auto chr = chromatic_number(g, chr_opts);
    rec.chromatic = chr.exact() ? chr.value() : chr.lower_bound;
    rec.considered = rec.chromatic >= chr_min;
    if (!rec.considered) return rec;

    if (auto seed = cycle_orientation(g)) {
        bool exact = false;
        const std::size_t value = solve_value(*seed, options.solver_timeout, &exact);
        rec.dchr_lower_bound = value;
        rec.witness = std::move(seed);
        rec.reached_target = value >= target_k;
    }
    if (!rec.reached_target) {
        auto opts = options.dchr;
        opts.stop_at = target_k;
        auto r = dchr(g, opts);
        if (r.value >= rec.dchr_lower_bound) {
            rec.dchr_lower_bound = r.value;
            rec.witness = std::move(r.witness);
        }
        rec.exhaustive = r.exhaustive;
        rec.reached_target = rec.dchr_lower_bound >= target_k;
    }

    if (rec.witness) {
        if (!is_orientation_of(*rec.witness, g)) {
            throw std::logic_error("enl_scan: witness for " + item.id + " is not an orientation");
        }
        bool exact = false;
        const std::size_t check = solve_value(*rec.witness, options.solver_timeout, &exact);
        if (check < rec.dchr_lower_bound) {
            throw std::logic_error("enl_scan: witness for " + item.id + " does not attain its claimed value");
        }
    }
    return rec;
}

}  // namespace

EnlReport enl_scan(const std::vector<NamedGraph>& family, std::size_t chr_min, std::size_t target_k,
                   const EnlOptions& options) {
    EnlReport report;
    report.chr_min = chr_min;
    report.target_k = target_k;
    report.records.resize(family.size());

    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(family.size(), 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            report.records[i] = scan_one(family[i], chr_min, target_k, options);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (std::size_t j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < family.size(); i = next++) {
                    report.records[i] = scan_one(family[i], chr_min, target_k, options);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    for (const auto& rec : report.records) {
        if (!rec.considered) continue;
        ++report.considered;
        if (rec.reached_target) continue;
        ++report.failures;
        if (!rec.exhaustive) ++report.inconclusive;
        if (!report.min_failing_chromatic || rec.chromatic < *report.min_failing_chromatic) {
            report.min_failing_chromatic = rec.chromatic;
        }
    }
    return report;
}

}  // namespace dichro
