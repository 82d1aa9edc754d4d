#include <doctest.h>

#include <random>

#include "../support/families.hpp"
#include "../support/oracles.hpp"
#include "dichro/amalgam.hpp"
#include "dichro/generators.hpp"

using namespace dichro;

namespace {

AmalgamErrorKind error_kind(auto&& f) {
    try {
        f();
    } catch (const AmalgamError& e) {
        return e.kind();
    }
    FAIL("no AmalgamError");
    return AmalgamErrorKind::InvalidFamily;
}

// C5 with arc 4 -> 0 removed: a path 0..4.
Digraph c5_minus_arc() { return Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("make_twin relabels non-root vertices in order") {
    const Vertex root[] = {0};
    const auto twin = make_twin(directed_path(3), root, 3);
    CHECK(twin.copy.labels == std::vector<Label>{0, 3, 4});
    CHECK(twin.image == std::vector<Label>{0, 3, 4});
    CHECK(twin.copy.digraph == directed_path(3));
}

TEST_CASE("make_twin with the whole vertex set as root is the identity") {
    const auto d = directed_cycle(4);
    const Vertex root[] = {0, 1, 2, 3};
    const auto twin = make_twin(d, root, 10);
    CHECK(twin.copy.digraph == d);
    CHECK(twin.image == std::vector<Label>{0, 1, 2, 3});
}

TEST_CASE("make_twin of an open five-cycle over its endpoints") {
    const auto d = c5_minus_arc();
    const Vertex root[] = {0, 4};
    const auto twin = make_twin(d, root, 5);
    CHECK(twin.image == std::vector<Label>{0, 5, 6, 7, 4});
    // Arc check of the isomorphism: every arc of d maps to an arc of the copy.
    for (const auto& a : d.arcs()) {
        const auto u = twin.copy.index_of(twin.image[a.tail]);
        const auto v = twin.copy.index_of(twin.image[a.head]);
        REQUIRE(u);
        REQUIRE(v);
        CHECK(twin.copy.digraph.has_arc(*u, *v));
    }
    CHECK(twin.copy.digraph.size() == d.size());
}

TEST_CASE("make_twin rejects bad roots and colliding offsets") {
    const Vertex bad[] = {7};
    CHECK_THROWS_AS(make_twin(directed_path(3), bad, 3), std::invalid_argument);
    const Vertex root[] = {2};
    CHECK_THROWS_AS(make_twin(directed_path(3), root, 1), std::invalid_argument);
}

TEST_CASE("amalgamate two open paths over their endpoints") {
    const Vertex root[] = {0, 2};
    const auto fam = make_twin_family(directed_path(3), root, 2);
    REQUIRE_FALSE(fam.violation());
    const auto u = amalgamate(fam).digraph;
    CHECK(u.order() == 4);
    CHECK(u.size() == 4);
    CHECK(is_acyclic(u).acyclic);
}

TEST_CASE("undirected analogue fails: two glued paths of length two form C4") {
    // Gluing graphs over a shared root: 0-1-2 and 0-3-2 share the endpoints.
    Graph glued(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}});
    CHECK(oracle::cycle_lengths(glued) == std::set<std::size_t>{4});
}

TEST_CASE("amalgamate keeps digirth of digirth-5 members") {
    const auto d = directed_cycle(5);
    const Vertex root[] = {0, 2};
    const auto fam = make_twin_family(d, root, 2);
    const auto u = amalgamate(fam).digraph;
    const auto g = digirth(u);
    REQUIRE(g);
    CHECK(*g > 4);
    CHECK(g == oracle::digirth(u));
}

TEST_CASE("amalgamate reports the violated clause") {
    TwinFamily fam(LabeledDigraph::identity(directed_path(3)), {0});
    // Second member shares non-root label 1.
    fam.add_member(LabeledDigraph{directed_path(3), {0, 1, 9}}, {0, 1, 9});
    const auto why = fam.violation();
    REQUIRE(why);
    CHECK(why->find("non-root") != std::string::npos);
    CHECK(error_kind([&] { amalgamate(fam); }) == AmalgamErrorKind::InvalidFamily);
    CHECK_NOTHROW(amalgamate(fam, AmalgamOptions{true}));
}

TEST_CASE("twin family detects non-isomorphic members and root drift") {
    SUBCASE("arc missing") {
        TwinFamily fam(LabeledDigraph::identity(directed_path(3)), {0});
        fam.add_member(LabeledDigraph{Digraph(3, {{0, 1}}), {0, 5, 6}}, {0, 5, 6});
        CHECK(fam.violation());
    }
    SUBCASE("root not fixed") {
        TwinFamily fam(LabeledDigraph::identity(directed_path(3)), {0});
        fam.add_member(LabeledDigraph{directed_path(3), {0, 5, 6}}, {5, 0, 6});
        CHECK(fam.violation());
    }
    SUBCASE("root label missing") {
        TwinFamily fam(LabeledDigraph::identity(directed_path(3)), {0});
        fam.add_member(LabeledDigraph{directed_path(3), {4, 5, 6}}, {4, 5, 6});
        CHECK(fam.violation());
    }
}

TEST_CASE("psi composes through the base member") {
    const Vertex root[] = {1};
    const auto fam = make_twin_family(directed_cycle(4), root, 3);
    for (Label l : fam.member(1).labels) {
        CHECK(fam.psi(2, 1, fam.psi(1, 2, l)) == l);
        CHECK(fam.psi(0, 2, fam.psi(1, 0, l)) == fam.psi(1, 2, l));
    }
    CHECK(fam.psi(1, 2, 1) == 1);
    CHECK_THROWS_AS(fam.psi(1, 2, 2), std::out_of_range);
}

TEST_CASE("cycle_amalgamate of single arcs sharing their head") {
    const Digraph arc(2, {{0, 1}});
    const Vertex root[] = {1};
    const auto fam = make_twin_family(arc, root, 4);
    std::vector<Label> reps;
    for (std::size_t j = 0; j < 4; ++j) reps.push_back(fam.psi(0, j, 0));
    const auto out = cycle_amalgamate(fam, reps, 3).digraph;
    CHECK(digirth(out) == 4);
    CHECK(find_embedding(directed_cycle(4), out).has_value());
}

TEST_CASE("cycle_amalgamate errors") {
    const Digraph arc(2, {{0, 1}});
    const Vertex root[] = {1};
    SUBCASE("too few copies") {
        const auto fam = make_twin_family(arc, root, 3);
        const Label reps[] = {0, 2, 3};
        CHECK(error_kind([&] { cycle_amalgamate(fam, reps, 3); }) == AmalgamErrorKind::TooFewCopies);
    }
    SUBCASE("representative in the root") {
        const auto fam = make_twin_family(arc, root, 4);
        const Label reps[] = {1, 1, 1, 1};
        CHECK(error_kind([&] { cycle_amalgamate(fam, reps, 3); }) == AmalgamErrorKind::InvalidReps);
    }
    SUBCASE("incoherent representatives") {
        const auto fam = make_twin_family(Digraph(3, {{0, 1}, {2, 1}}), root, 4);
        std::vector<Label> reps;
        for (std::size_t j = 0; j < 4; ++j) reps.push_back(fam.psi(0, j, 0));
        reps[2] = fam.psi(0, 2, 2);
        CHECK(error_kind([&] { cycle_amalgamate(fam, reps, 3); }) == AmalgamErrorKind::InvalidReps);
    }
    SUBCASE("members with short cycles") {
        const Vertex r0[] = {0};
        const auto fam = make_twin_family(directed_cycle(3), r0, 4);
        std::vector<Label> reps;
        for (std::size_t j = 0; j < 4; ++j) reps.push_back(fam.psi(0, j, 1));
        CHECK(error_kind([&] { cycle_amalgamate(fam, reps, 3); }) == AmalgamErrorKind::InvalidFamily);
    }
}

TEST_CASE("cycle_amalgamate of digirth-5 members, m = 5, k = 3") {
    const Vertex root[] = {0};
    const auto fam = make_twin_family(directed_cycle(5), root, 5);
    std::vector<Label> reps;
    for (std::size_t j = 0; j < 5; ++j) reps.push_back(fam.psi(0, j, 2));
    const auto out = cycle_amalgamate(fam, reps, 3).digraph;
    const auto g = oracle::digirth(out);
    REQUIRE(g);
    CHECK(*g > 3);
    CHECK((*g == 4 || *g == 5));
    CHECK(digirth(out) == g);
}

TEST_CASE("no_short_twin_path") {
    SUBCASE("twins of a digirth-5 member") {
        const Vertex root[] = {0, 2};
        const auto fam = make_twin_family(directed_cycle(5), root, 2);
        const auto u = amalgamate(fam);
        for (Label l : fam.member(0).labels) {
            const auto a = u.index_of(l);
            const auto b = u.index_of(fam.psi(0, 1, l));
            CHECK(no_short_twin_path(u.digraph, *a, *b, 4));
            CHECK(no_short_twin_path(u.digraph, *b, *a, 4));
        }
    }
    SUBCASE("same vertex") { CHECK(no_short_twin_path(directed_cycle(3), 0, 0, 3)); }
    SUBCASE("twin arcs sharing a head") {
        const Digraph d(3, {{0, 2}, {1, 2}});
        CHECK(no_short_twin_path(d, 0, 1, 1));
    }
    SUBCASE("a short path is found") {
        CHECK_FALSE(no_short_twin_path(directed_path(4), 0, 3, 3));
        CHECK(no_short_twin_path(directed_path(4), 0, 3, 2));
    }
}

TEST_CASE("property: random hand-built twin families obey the amalgamation guarantees") {
    std::mt19937_64 rng(55);
    for (std::size_t k : {3U, 4U, 5U}) {
        for (int iter = 0; iter < 40; ++iter) {
            const std::size_t m = k + 1 + rng() % 3;
            auto rf = families::random_twin_family(k, m, 10, rng);
            const auto& fam = rf.family;
            CAPTURE(k);
            CAPTURE(iter);
            REQUIRE_FALSE(fam.violation());

            const auto u = amalgamate(fam);
            const auto gu = digirth(u.digraph);
            CHECK((!gu || *gu > k));
            for (std::size_t v = 0; v < rf.base_order; ++v) {
                for (std::size_t i = 0; i < m; ++i) {
                    const auto a = *u.index_of(fam.psi(0, i, v));
                    for (std::size_t j = 0; j < m; ++j) {
                        const auto b = *u.index_of(fam.psi(0, j, v));
                        CHECK(no_short_twin_path(u.digraph, a, b, k));
                    }
                }
            }

            Label alpha = 0;
            while (std::binary_search(fam.root().begin(), fam.root().end(), alpha)) ++alpha;
            std::vector<Label> reps;
            for (std::size_t j = 0; j < m; ++j) reps.push_back(fam.psi(0, j, alpha));
            const auto c = cycle_amalgamate(fam, reps, k).digraph;
            const auto gc = digirth(c);
            REQUIRE(gc);
            CHECK(*gc > k);
            CHECK(find_embedding(directed_cycle(m), c).has_value());
        }
    }
}
