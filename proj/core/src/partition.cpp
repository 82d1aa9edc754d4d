#include "dichro/partition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vertex_set.hpp"

namespace dichro {

namespace {

using Clock = std::chrono::steady_clock;

template <class Set>
struct AcyclicClassTest {
    detail::BitRows<Set> rows;

    explicit AcyclicClassTest(const Digraph& d) : rows(d) {}

    // Adding v to cls keeps it acyclic iff nothing in cls reachable from v
    // (inside cls) is an in-neighbour of v.
    bool admits(const Set& cls, Vertex v) const {
        Set target = rows.in[v];
        target &= cls;
        if (target.none()) return true;
        Set reach = rows.out[v];
        reach &= cls;
        if (reach.none()) return true;
        if (reach.intersects(target)) return false;
        Set frontier = reach;
        while (frontier.any()) {
            const Vertex x = frontier.pop_first();
            Set next = rows.out[x];
            next &= cls;
            next.andnot(reach);
            if (next.none()) continue;
            if (next.intersects(target)) return false;
            reach |= next;
            frontier |= next;
        }
        return true;
    }
};

template <class Set>
struct IndependentClassTest {
    std::vector<Set> adj;

    explicit IndependentClassTest(const Graph& g) : adj(g.order(), Set(g.order())) {
        for (const auto& e : g.edges()) {
            adj[e.u].set(e.v);
            adj[e.v].set(e.u);
        }
    }

    bool admits(const Set& cls, Vertex v) const { return !adj[v].intersects(cls); }
};

struct SearchOutcome {
    std::size_t lower_bound = 0;
    std::size_t best = 0;  // classes in best_colour, 0 if none
    std::vector<std::uint32_t> best_colour;
    bool complete = true;  // search space exhausted (or closed by the lower bound)
    bool satisficed = false;
    SolveStats stats;
};

// Assigns vertices in a fixed order to an existing class or to the next new
// one; new classes are only opened with index equal to the current count.
template <class Set, class ClassTest>
class PartitionSearch {
public:
    PartitionSearch(std::size_t n, std::vector<Vertex> order, const ClassTest& test, const SolveOptions& options)
        : n_(n),
          order_(std::move(order)),
          test_(test),
          options_(options),
          classes_(n, Set(n)),
          colour_(n, 0) {}

    SearchOutcome run(std::size_t lower_bound) {
        out_.lower_bound = lower_bound;
        if (options_.timeout) deadline_ = Clock::now() + *options_.timeout;

        greedy();
        const std::size_t greedy_k = out_.best;
        const std::size_t cap = options_.budget ? *options_.budget : n_;
        if (options_.satisfice && options_.budget && greedy_k <= cap && greedy_k > lower_bound) {
            out_.satisficed = true;
            return std::move(out_);
        }
        if (greedy_k > cap) {
            // Only look for partitions within budget; keep greedy as a fallback certificate.
            greedy_fallback_ = out_.best_colour;
            out_.best = cap + 1;
            out_.best_colour.clear();
        }
        if (out_.best > lower_bound) {
            for (auto& c : classes_) c.clear();
            search(0, 0);
        }
        if (out_.best_colour.empty()) {
            if (out_.complete) out_.lower_bound = std::max(out_.lower_bound, cap + 1);
            out_.best = greedy_k;
            out_.best_colour = std::move(greedy_fallback_);
            out_.complete = false;
        }
        return std::move(out_);
    }

private:
    void greedy() {
        std::size_t used = 0;
        for (Vertex v : order_) {
            std::size_t c = 0;
            while (c < used && !test_.admits(classes_[c], v)) ++c;
            if (c == used) ++used;
            classes_[c].set(v);
            colour_[v] = static_cast<std::uint32_t>(c);
        }
        out_.best = used;
        out_.best_colour = colour_;
    }

    void search(std::size_t depth, std::size_t used) {
        if (stop_ || used >= out_.best) return;
        if ((++out_.stats.nodes & 0x3ff) == 0 && deadline_ && Clock::now() > *deadline_) {
            stop_ = true;
            out_.complete = false;
            out_.stats.timed_out = true;
            return;
        }
        if (depth == n_) {
            out_.best = used;
            out_.best_colour = colour_;
            if (used <= out_.lower_bound) {
                stop_ = true;
            } else if (options_.satisfice && options_.budget) {
                stop_ = true;
                out_.satisficed = true;
            }
            return;
        }
        const Vertex v = order_[depth];
        for (std::size_t c = 0; c < used; ++c) {
            if (!test_.admits(classes_[c], v)) continue;
            classes_[c].set(v);
            colour_[v] = static_cast<std::uint32_t>(c);
            search(depth + 1, used);
            classes_[c].reset(v);
            if (stop_ || used >= out_.best) return;
        }
        if (used + 1 < out_.best) {
            classes_[used].set(v);
            colour_[v] = static_cast<std::uint32_t>(used);
            search(depth + 1, used + 1);
            classes_[used].reset(v);
        }
    }

    std::size_t n_;
    std::vector<Vertex> order_;
    const ClassTest& test_;
    SolveOptions options_;
    std::vector<Set> classes_;
    std::vector<std::uint32_t> colour_;
    std::vector<std::uint32_t> greedy_fallback_;
    std::optional<Clock::time_point> deadline_;
    bool stop_ = false;
    SearchOutcome out_;
};

template <class G>
std::vector<Vertex> degree_order(const G& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::vector<std::vector<Vertex>> classes_from(std::span<const std::uint32_t> colour, std::size_t k) {
    std::vector<std::vector<Vertex>> classes(k);
    for (Vertex v = 0; v < colour.size(); ++v) classes[colour[v]].push_back(v);
    return classes;
}

std::vector<Vertex> class_topological_order(const Digraph& d, std::span<const Vertex> cls) {
    auto sub = induced(d, cls);
    auto res = is_acyclic(sub.digraph);
    if (!res.acyclic) return {};
    std::vector<Vertex> order;
    order.reserve(cls.size());
    for (Vertex i : *res.order) order.push_back(sub.labels[i]);
    return order;
}

// Greedy clique; a sound lower bound for the chromatic number.
std::size_t greedy_clique_bound(const Graph& g) {
    std::size_t best = g.order() > 0 ? 1 : 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<Vertex> clique{s};
        std::vector<Vertex> cand(g.neighbours(s).begin(), g.neighbours(s).end());
        std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (Vertex c : cand) {
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.has_edge(x, c); })) {
                clique.push_back(c);
            }
        }
        best = std::max(best, clique.size());
    }
    return best;
}

template <class Certificate>
SolveResult<Certificate> finish(SearchOutcome&& o, Certificate cert) {
    SolveResult<Certificate> r;
    r.status = o.satisficed ? SolveStatus::WithinBudget : o.complete ? SolveStatus::Exact : SolveStatus::Exceeded;
    r.lower_bound = (o.complete && !o.satisficed) ? o.best : o.lower_bound;
    r.upper_bound = o.best;
    r.certificate = std::move(cert);
    r.stats = o.stats;
    return r;
}

}  // namespace

DichromaticResult dichromatic_number(const Digraph& d, const SolveOptions& options) {
    const std::size_t n = d.order();
    if (n == 0) return DichromaticResult{SolveStatus::Exact, 0, 0, AcyclicPartition{}, {}};

    const auto acyclic = is_acyclic(d);
    if (acyclic.acyclic) {
        AcyclicPartition cert;
        cert.classes.push_back({});
        cert.classes[0].resize(n);
        std::iota(cert.classes[0].begin(), cert.classes[0].end(), Vertex{0});
        cert.topo_orders.push_back(*acyclic.order);
        if (options.budget && *options.budget < 1) {
            return DichromaticResult{SolveStatus::Exceeded, 1, 1, std::move(cert), {}};
        }
        return DichromaticResult{SolveStatus::Exact, 1, 1, std::move(cert), {}};
    }

    auto outcome = detail::with_vertex_set(n, [&]<class Set>() {
        AcyclicClassTest<Set> test(d);
        return PartitionSearch<Set, AcyclicClassTest<Set>>(n, degree_order(d), test, options).run(2);
    });

    AcyclicPartition cert;
    cert.classes = classes_from(outcome.best_colour, outcome.best);
    for (const auto& cls : cert.classes) cert.topo_orders.push_back(class_topological_order(d, cls));
    return finish(std::move(outcome), std::move(cert));
}

ChromaticResult chromatic_number(const Graph& g, const SolveOptions& options) {
    const std::size_t n = g.order();
    if (n == 0) return ChromaticResult{SolveStatus::Exact, 0, 0, ColourPartition{}, {}};

    auto outcome = detail::with_vertex_set(n, [&]<class Set>() {
        IndependentClassTest<Set> test(g);
        return PartitionSearch<Set, IndependentClassTest<Set>>(n, degree_order(g), test, options)
            .run(greedy_clique_bound(g));
    });
    ColourPartition cert{classes_from(outcome.best_colour, outcome.best)};
    return finish(std::move(outcome), std::move(cert));
}

bool verify_acyclic_partition(const Digraph& d, const AcyclicPartition& cert) {
    const std::size_t n = d.order();
    if (cert.topo_orders.size() != cert.classes.size()) return false;
    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> class_of(n, unassigned);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        if (cert.classes[c].empty()) return false;
        for (Vertex v : cert.classes[c]) {
            if (v >= n || class_of[v] != unassigned) return false;
            class_of[v] = c;
        }
    }
    if (std::count(class_of.begin(), class_of.end(), unassigned) != 0) return false;

    std::vector<std::size_t> position(n, unassigned);
    for (std::size_t c = 0; c < cert.topo_orders.size(); ++c) {
        const auto& order = cert.topo_orders[c];
        if (order.size() != cert.classes[c].size()) return false;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex v = order[i];
            if (v >= n || class_of[v] != c || position[v] != unassigned) return false;
            position[v] = i;
        }
    }
    for (const auto& a : d.arcs()) {
        if (class_of[a.tail] == class_of[a.head] && position[a.tail] >= position[a.head]) return false;
    }
    return true;
}

bool verify_colour_partition(const Graph& g, const ColourPartition& cert) {
    const std::size_t n = g.order();
    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> class_of(n, unassigned);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        if (cert.classes[c].empty()) return false;
        for (Vertex v : cert.classes[c]) {
            if (v >= n || class_of[v] != unassigned) return false;
            class_of[v] = c;
        }
    }
    if (std::count(class_of.begin(), class_of.end(), unassigned) != 0) return false;
    for (const auto& e : g.edges()) {
        if (class_of[e.u] == class_of[e.v]) return false;
    }
    return true;
}

ArcBipartition arc_bipartition(const Digraph& d, std::optional<std::span<const Vertex>> order) {
    const std::size_t n = d.order();
    ArcBipartition out;
    if (order) {
        out.order.assign(order->begin(), order->end());
    } else {
        out.order.resize(n);
        std::iota(out.order.begin(), out.order.end(), Vertex{0});
    }
    if (out.order.size() != n) throw std::invalid_argument("arc_bipartition: order is not a permutation");
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = out.order[i];
        if (v >= n || position[v] != n) throw std::invalid_argument("arc_bipartition: order is not a permutation");
        position[v] = i;
    }
    for (const auto& a : d.arcs()) {
        (position[a.tail] < position[a.head] ? out.forward : out.backward).push_back(a);
    }
    return out;
}

std::size_t max_dichromatic_over_induced(const Digraph& d, std::size_t size_cap) {
    const std::size_t n = d.order();
    if (size_cap > n) throw std::invalid_argument("max_dichromatic_over_induced: size_cap exceeds n");
    if (n > 30) throw std::invalid_argument("max_dichromatic_over_induced: n > 30");
    std::size_t best = 0;
    std::vector<Vertex> w;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > size_cap) continue;
        w.clear();
        for (Vertex v = 0; v < n; ++v) {
            if ((mask >> v) & 1U) w.push_back(v);
        }
        const auto sub = induced(d, w);
        best = std::max(best, dichromatic_number(sub.digraph).value());
    }
    return best;
}

std::optional<AcyclicPartition> acyclic_partition_from_colouring(const Digraph& d,
                                                                 std::span<const std::uint32_t> colour) {
    if (colour.size() != d.order()) return std::nullopt;
    std::uint32_t k = 0;
    for (auto c : colour) k = std::max(k, c + 1);
    AcyclicPartition cert;
    for (auto& cls : classes_from(colour, k)) {
        if (cls.empty()) continue;
        auto order = class_topological_order(d, cls);
        if (order.size() != cls.size()) return std::nullopt;
        cert.classes.push_back(std::move(cls));
        cert.topo_orders.push_back(std::move(order));
    }
    return cert;
}

}  // namespace dichro
