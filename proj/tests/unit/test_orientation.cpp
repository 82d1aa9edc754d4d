#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "dichro/generators.hpp"
#include "dichro/orientation.hpp"
#include "dichro/partition.hpp"

using namespace dichro;

namespace {

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        const Vertex a = 5 + i;
        const Vertex b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    return Graph(10, edges);
}

std::size_t chi(const Digraph& d) { return dichromatic_number(d).value(); }

// Max chi over all orientations, each solved by the colouring oracle.
std::size_t brute_dchr(const Graph& g) {
    std::size_t best = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.size()); ++code) {
        best = std::max(best, oracle::dichromatic(orient_by_code(g, code)));
    }
    return best;
}

}  // namespace

TEST_CASE("orientation stream of K3: 8 orientations, 2 cyclic, 6 transitive") {
    OrientationStream s(complete_graph(3));
    CHECK(s.total() == 8);
    std::set<std::vector<Arc>> seen;
    int cyclic = 0;
    int transitive = 0;
    std::optional<std::uint64_t> prev_code;
    while (auto d = s.next()) {
        CHECK(is_orientation_of(*d, complete_graph(3)));
        seen.insert(d->arcs());
        (oracle::has_cycle(*d) ? cyclic : transitive)++;
        if (prev_code) {
            CHECK(std::popcount(*prev_code ^ s.code()) == 1);
            REQUIRE(s.last_flipped());
            CHECK((*prev_code ^ s.code()) == (std::uint64_t{1} << *s.last_flipped()));
        } else {
            CHECK_FALSE(s.last_flipped());
        }
        prev_code = s.code();
    }
    CHECK(seen.size() == 8);
    CHECK(cyclic == 2);
    CHECK(transitive == 6);
}

TEST_CASE("orientation stream edge cases") {
    SUBCASE("single edge") {
        OrientationStream s(Graph(2, {{0, 1}}));
        int count = 0;
        while (s.next()) ++count;
        CHECK(count == 2);
    }
    SUBCASE("empty graph") {
        OrientationStream s(Graph(4));
        int count = 0;
        while (auto d = s.next()) {
            CHECK(d->size() == 0);
            ++count;
        }
        CHECK(count == 1);
    }
    SUBCASE("cap") { CHECK_THROWS_AS(OrientationStream(complete_graph(9), 30), CapExceeded); }
    SUBCASE("ranges cover the stream disjointly") {
        const auto g = complete_graph(4);
        std::set<std::vector<Arc>> seen;
        for (std::uint64_t start = 0; start < 64; start += 20) {
            OrientationStream s(g, start, std::min<std::uint64_t>(start + 20, 64));
            while (auto d = s.next()) CHECK(seen.insert(d->arcs()).second);
        }
        CHECK(seen.size() == 64);
    }
}

TEST_CASE("dchr fixed values") {
    SUBCASE("K3") {
        const auto r = dchr(complete_graph(3));
        CHECK(r.value == 2);
        CHECK(r.exhaustive);
        CHECK(is_orientation_of(r.witness, complete_graph(3)));
        CHECK(oracle::has_cycle(r.witness));
    }
    SUBCASE("K4") {
        const auto r = dchr(complete_graph(4));
        CHECK(r.value == 2);
        CHECK(r.exhaustive);
        CHECK(brute_dchr(complete_graph(4)) == 2);
    }
    SUBCASE("tree") {
        Graph tree(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
        CHECK(dchr(tree).value == 1);
    }
    SUBCASE("C5") { CHECK(dchr(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).value == 2); }
    SUBCASE("K7 reaches 3") {
        DchrOptions o;
        o.mode = DchrMode::Heuristic;
        o.seed = 11;
        const auto r = dchr(complete_graph(7), o);
        CHECK(r.value == 3);
        CHECK(is_orientation_of(r.witness, complete_graph(7)));
        CHECK(oracle::dichromatic(r.witness) == 3);
    }
}

TEST_CASE("property: exhaustive dchr agrees with orientation-by-orientation brute force") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 2 + rng() % 5;
        auto g = oracle::random_graph(n, 0.6, rng);
        if (g.size() > 10) continue;
        DchrOptions o;
        o.mode = DchrMode::Exhaustive;
        const auto r = dchr(g, o);
        CAPTURE(iter);
        CHECK(r.value == brute_dchr(g));
        CHECK(is_orientation_of(r.witness, g));
        CHECK(oracle::dichromatic(r.witness) == r.value);
        CHECK((r.value <= 1) == is_forest(g));
    }
}

TEST_CASE("parallel exhaustive dchr matches the sequential value") {
    const auto g = complete_graph(5);
    DchrOptions o;
    o.mode = DchrMode::Exhaustive;
    const auto seq = dchr(g, o);
    o.jobs = 4;
    const auto par = dchr(g, o);
    CHECK(seq.value == par.value);
    CHECK(chi(par.witness) == par.value);
}

TEST_CASE("cycle_orientation") {
    SUBCASE("K3") {
        const auto d = cycle_orientation(complete_graph(3));
        REQUIRE(d);
        CHECK(chi(*d) == 2);
    }
    SUBCASE("path") { CHECK_FALSE(cycle_orientation(Graph(4, {{0, 1}, {1, 2}, {2, 3}}))); }
    SUBCASE("Petersen") {
        const auto g = petersen();
        REQUIRE(g.size() == 15);
        const auto d = cycle_orientation(g);
        REQUIRE(d);
        CHECK(is_orientation_of(*d, g));
        CHECK(chi(*d) >= 2);
        CHECK(*oracle::digirth(*d) >= 5);
    }
    SUBCASE("property: every graph with a cycle gets a directed cycle") {
        std::mt19937_64 rng(12);
        for (int iter = 0; iter < 200; ++iter) {
            const auto g = oracle::random_graph(1 + rng() % 9, 0.3, rng);
            const auto d = cycle_orientation(g);
            CHECK(d.has_value() == !is_forest(g));
            if (d) {
                CHECK(is_orientation_of(*d, g));
                CHECK(oracle::has_cycle(*d));
            }
        }
    }
}

TEST_CASE("orient_by_pair_colouring") {
    const auto k4 = complete_graph(4);
    const auto zero = orient_by_pair_colouring(k4, [](Vertex, Vertex) { return 0; });
    const auto one = orient_by_pair_colouring(k4, [](Vertex, Vertex) { return 1; });
    CHECK(chi(zero) == 1);
    CHECK(chi(one) == 1);
    CHECK(one == reverse(zero));

    const auto k7 = complete_graph(7);
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        const auto salt = rng();
        auto f = [salt](Vertex a, Vertex b) { return static_cast<int>(((a * 31 + b) * salt >> 40) & 1U); };
        auto g = [&](Vertex a, Vertex b) { return 1 - f(a, b); };
        const auto d = orient_by_pair_colouring(k7, f);
        CHECK(is_orientation_of(d, k7));
        CHECK(chi(orient_by_pair_colouring(k7, g)) == chi(d));
        CHECK(chi(d) == oracle::dichromatic(d));
    }
}

TEST_CASE("count_short_cycles") {
    CHECK(count_short_cycles(directed_cycle(4), 3) == 0);
    CHECK(count_short_cycles(directed_cycle(4), 4) == 1);
    // 3-cycles 0,2,3 and 1,3,0; one Hamiltonian cycle.
    Digraph k4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    CHECK(count_short_cycles(k4, 3) == 2);
    CHECK(count_short_cycles(k4, 4) == 3);
}

TEST_CASE("graph families") {
    CHECK(all_graphs(1, false).size() == 1);
    CHECK(all_graphs(3, false).size() == 4);
    CHECK(all_graphs(4, false).size() == 11);
    CHECK(all_graphs(5, false).size() == 34);
    CHECK(all_graphs(6, false).size() == 156);
    CHECK(all_graphs(4, true).size() == 6);
    CHECK(all_graphs(5, true).size() == 21);
    CHECK(all_graphs(6, true).size() == 112);
    CHECK(all_graphs_up_to(6, true).size() == 1 + 1 + 2 + 6 + 21 + 112);
    for (const auto& ng : all_graphs(5, true)) CHECK(is_connected(ng.graph));
    CHECK(all_graphs(3, true)[0].id.rfind("n3_", 0) == 0);
    CHECK_THROWS(all_graphs(8, false));
}

TEST_CASE("enl_scan on small families") {
    SUBCASE("chromatic at least 3 always reaches 2") {
        const auto fam = all_graphs_up_to(5, true);
        const auto rep = enl_scan(fam, 3, 2);
        CHECK(rep.failures == 0);
        CHECK(rep.considered > 0);
        for (const auto& rec : rep.records) {
            if (!rec.considered) continue;
            REQUIRE(rec.witness);
            CHECK(rec.reached_target);
        }
    }
    SUBCASE("trees all fail") {
        std::vector<NamedGraph> trees = {{"p4", Graph(4, {{0, 1}, {1, 2}, {2, 3}})},
                                         {"star", Graph(4, {{0, 1}, {0, 2}, {0, 3}})}};
        const auto rep = enl_scan(trees, 1, 2);
        CHECK(rep.failures == 2);
        CHECK(rep.inconclusive == 0);
        CHECK(rep.min_failing_chromatic == 2);
    }
}
