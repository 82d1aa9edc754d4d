#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "dichro/generators.hpp"
#include "dichro/io.hpp"

using namespace dichro;

namespace {

ParseError parse_error(std::string_view text) {
    try {
        parse_digraph(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError for: " << text);
    throw;
}

}  // namespace

TEST_CASE("parse a three-cycle") {
    const auto d = parse_digraph("p digraph 3 3\na 0 1\na 1 2\na 2 0\n");
    CHECK(d == directed_cycle(3));
}

TEST_CASE("comments, blank lines, CRLF and a missing final newline are accepted") {
    const auto d = parse_digraph("c hello\r\n\r\np digraph 3 2\r\nc mid\na 0 1\n\n  a   1 2");
    CHECK(d == directed_path(3));
}

TEST_CASE("parse errors carry line numbers and kinds") {
    auto e = parse_error("p digraph 2 2\na 0 1\na 1 0\n");
    CHECK(e.kind() == ParseErrorKind::Digon);
    CHECK(e.line() == 3);

    e = parse_error("p digraph 2 1\na 0 0\n");
    CHECK(e.kind() == ParseErrorKind::SelfLoop);

    e = parse_error("p digraph 2 2\na 0 1\na 0 1\n");
    CHECK(e.kind() == ParseErrorKind::DuplicateArc);

    e = parse_error("p digraph 2 1\na 0 5\n");
    CHECK(e.kind() == ParseErrorKind::VertexOutOfRange);
    CHECK(e.line() == 2);

    e = parse_error("c x\np digraph 3 3\na 0 1\na 1 2\n");
    CHECK(e.kind() == ParseErrorKind::CountMismatch);
    CHECK(e.line() == 2);

    e = parse_error("a 0 1\n");
    CHECK(e.kind() == ParseErrorKind::MissingHeader);

    e = parse_error("");
    CHECK(e.kind() == ParseErrorKind::MissingHeader);

    e = parse_error("p digraph 2 0\np digraph 2 0\n");
    CHECK(e.kind() == ParseErrorKind::DuplicateHeader);

    e = parse_error("p digraph 2 1\ne 0 1\n");
    CHECK(e.kind() == ParseErrorKind::WrongRecordType);

    e = parse_error("p digraph 2 1\na 0 x\n");
    CHECK(e.kind() == ParseErrorKind::Syntax);

    e = parse_error("p digraph 2 1\na 0 -1\n");
    CHECK(e.kind() == ParseErrorKind::Syntax);

    e = parse_error("p graph 2 0\n");
    CHECK(e.kind() == ParseErrorKind::Syntax);

    e = parse_error("q 1 2\n");
    CHECK(e.kind() == ParseErrorKind::Syntax);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
}

TEST_CASE("graphs and families") {
    const auto g = parse_graph("p graph 3 2\ne 0 1\ne 2 1\n");
    CHECK(g == Graph(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(parse_graph("p graph 3 2\ne 0 1\ne 1 0\n"), ParseError);

    const auto fam = parse_graph_family("c id tri\np graph 3 3\ne 0 1\ne 1 2\ne 0 2\n\np graph 2 1\ne 0 1\n");
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].id == "tri");
    CHECK(fam[0].graph == complete_graph(3));
    CHECK(fam[1].id == "g1");
    CHECK(fam[1].graph.size() == 1);
    CHECK_THROWS_AS(parse_graph_family("c nothing\n"), ParseError);
}

TEST_CASE("property: parse(serialize(x)) == x") {
    std::mt19937_64 rng(90);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = rng() % 30;
        const auto d = oracle::random_digraph(n, 0.3, rng);
        CHECK(parse_digraph(serialize(d)) == d);
        const auto g = oracle::random_graph(n, 0.3, rng);
        CHECK(parse_graph(serialize(g)) == g);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = sparse_sample(40, 3 + seed % 3, seed);
        CHECK(parse_digraph(serialize(s)) == s);
        const auto t = random_tournament(15, seed);
        CHECK(parse_digraph(serialize(t)) == t);
    }
    CHECK(parse_graph(serialize(shift_graph(3, 7).graph)) == shift_graph(3, 7).graph);
    CHECK(parse_digraph(serialize(half_back(6))) == half_back(6));
}

TEST_CASE("files") {
    const std::string path = "dichro_io_test.txt";
    write_file(path, serialize(directed_cycle(4)));
    CHECK(parse_digraph(read_file(path)) == directed_cycle(4));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("/nonexistent/dir/file"), std::runtime_error);
}
