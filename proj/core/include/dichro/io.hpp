#pragma once

// Text formats.
//
//   c <comment>
//   p digraph <n> <m>        p graph <n> <m>
//   a <u> <v>                e <u> <v>
//
// Vertices are 0-based. Blank lines and comment lines may appear anywhere.
// A family file is a sequence of graph blocks, each opened by its own header.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dichro/digraph.hpp"
#include "dichro/orientation.hpp"  // NamedGraph

namespace dichro {

enum class ParseErrorKind {
    Syntax,
    MissingHeader,
    DuplicateHeader,
    CountMismatch,
    WrongRecordType,
    SelfLoop,
    Digon,
    DuplicateArc,
    VertexOutOfRange,
};

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, ParseErrorKind kind, const std::string& reason);

    std::size_t line() const noexcept { return line_; }
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    std::size_t line_;
    ParseErrorKind kind_;
};

Digraph parse_digraph(std::string_view text);
Graph parse_graph(std::string_view text);
std::vector<NamedGraph> parse_graph_family(std::string_view text);

std::string serialize(const Digraph& d);
std::string serialize(const Graph& g);

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace dichro
