#include "dichro/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace dichro {

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax error";
        case ParseErrorKind::MissingHeader: return "missing header";
        case ParseErrorKind::DuplicateHeader: return "duplicate header";
        case ParseErrorKind::CountMismatch: return "count mismatch";
        case ParseErrorKind::WrongRecordType: return "wrong record type";
        case ParseErrorKind::SelfLoop: return "self-loop";
        case ParseErrorKind::Digon: return "digon";
        case ParseErrorKind::DuplicateArc: return "duplicate arc";
        case ParseErrorKind::VertexOutOfRange: return "vertex out of range";
    }
    return "unknown";
}

ParseError::ParseError(std::size_t line, ParseErrorKind kind, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + reason),
      line_(line),
      kind_(kind) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, ParseErrorKind::Syntax, "expected a non-negative integer, got '" +
                                                              std::string(field) + "'");
    }
    return value;
}

ParseErrorKind parse_kind(GraphErrorKind kind) {
    switch (kind) {
        case GraphErrorKind::SelfLoop: return ParseErrorKind::SelfLoop;
        case GraphErrorKind::Digon: return ParseErrorKind::Digon;
        case GraphErrorKind::DuplicateArc: return ParseErrorKind::DuplicateArc;
        case GraphErrorKind::VertexOutOfRange: return ParseErrorKind::VertexOutOfRange;
    }
    return ParseErrorKind::Syntax;
}

Vertex to_vertex(std::uint64_t value, std::size_t n, std::size_t line_no) {
    if (value >= n) {
        throw ParseError(line_no, ParseErrorKind::VertexOutOfRange,
                         "vertex " + std::to_string(value) + " >= n=" + std::to_string(n));
    }
    return static_cast<Vertex>(value);
}

// Walks the records of one or more blocks of the given kind ("digraph"/"graph").
template <class Builder, class Object>
class BlockParser {
public:
    BlockParser(std::string_view kind, char record) : kind_(kind), record_(record) {}

    // on_block(object, id) is called once per completed block.
    template <class OnBlock>
    void run(std::string_view text, bool allow_many, OnBlock&& on_block) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            const std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            const auto fields = split_fields(line);
            if (fields.empty()) {
                if (eol == text.size()) break;
                continue;
            }
            const auto tag = fields[0];
            if (tag == "c") {
                if (fields.size() >= 3 && fields[1] == "id") pending_id_ = std::string(fields[2]);
            } else if (tag == "p") {
                if (builder_) {
                    if (!allow_many) {
                        throw ParseError(line_no, ParseErrorKind::DuplicateHeader, "second header line");
                    }
                    finish(on_block);
                }
                header(fields, line_no);
            } else if (tag.size() == 1 && (tag[0] == 'a' || tag[0] == 'e')) {
                if (tag[0] != record_) {
                    throw ParseError(line_no, ParseErrorKind::WrongRecordType,
                                     "'" + std::string(tag) + "' record in a " + std::string(kind_) + " file");
                }
                if (!builder_) throw ParseError(line_no, ParseErrorKind::MissingHeader, "record before header");
                record(fields, line_no);
            } else {
                throw ParseError(line_no, ParseErrorKind::Syntax, "unknown line type '" + std::string(tag) + "'");
            }
            if (eol == text.size()) break;
        }
        if (!builder_) {
            if (allow_many && blocks_ > 0) return;
            throw ParseError(line_no, ParseErrorKind::MissingHeader, "no 'p " + std::string(kind_) + "' header");
        }
        finish(on_block);
    }

private:
    void header(const std::vector<std::string_view>& fields, std::size_t line_no) {
        if (fields.size() != 4 || fields[1] != kind_) {
            throw ParseError(line_no, ParseErrorKind::Syntax, "expected 'p " + std::string(kind_) + " <n> <m>'");
        }
        n_ = static_cast<std::size_t>(parse_number(fields[2], line_no));
        m_ = static_cast<std::size_t>(parse_number(fields[3], line_no));
        header_line_ = line_no;
        count_ = 0;
        builder_.emplace(n_);
        id_ = pending_id_ ? *pending_id_ : "g" + std::to_string(blocks_);
        pending_id_.reset();
    }

    void record(const std::vector<std::string_view>& fields, std::size_t line_no) {
        if (fields.size() != 3) throw ParseError(line_no, ParseErrorKind::Syntax, "expected two endpoints");
        const Vertex u = to_vertex(parse_number(fields[1], line_no), n_, line_no);
        const Vertex v = to_vertex(parse_number(fields[2], line_no), n_, line_no);
        try {
            if constexpr (std::is_same_v<Builder, DigraphBuilder>) {
                builder_->add_arc(u, v);
            } else {
                builder_->add_edge(u, v);
            }
        } catch (const GraphError& e) {
            throw ParseError(line_no, parse_kind(e.kind()), e.what());
        }
        ++count_;
    }

    template <class OnBlock>
    void finish(OnBlock& on_block) {
        if (count_ != m_) {
            throw ParseError(header_line_, ParseErrorKind::CountMismatch,
                             "header declares " + std::to_string(m_) + " records, found " + std::to_string(count_));
        }
        Object obj = std::move(*builder_).build();
        builder_.reset();
        ++blocks_;
        on_block(std::move(obj), id_);
    }

    std::string_view kind_;
    char record_;
    std::optional<Builder> builder_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t count_ = 0;
    std::size_t header_line_ = 0;
    std::size_t blocks_ = 0;
    std::string id_;
    std::optional<std::string> pending_id_;
};

}  // namespace

Digraph parse_digraph(std::string_view text) {
    Digraph out;
    BlockParser<DigraphBuilder, Digraph>("digraph", 'a').run(text, false, [&](Digraph d, const std::string&) {
        out = std::move(d);
    });
    return out;
}

Graph parse_graph(std::string_view text) {
    Graph out;
    BlockParser<GraphBuilder, Graph>("graph", 'e').run(text, false, [&](Graph g, const std::string&) {
        out = std::move(g);
    });
    return out;
}

std::vector<NamedGraph> parse_graph_family(std::string_view text) {
    std::vector<NamedGraph> out;
    BlockParser<GraphBuilder, Graph>("graph", 'e').run(text, true, [&](Graph g, const std::string& id) {
        out.push_back({id, std::move(g)});
    });
    return out;
}

std::string serialize(const Digraph& d) {
    std::ostringstream os;
    os << "p digraph " << d.order() << ' ' << d.size() << '\n';
    for (const auto& a : d.arcs()) os << "a " << a.tail << ' ' << a.head << '\n';
    return os.str();
}

std::string serialize(const Graph& g) {
    std::ostringstream os;
    os << "p graph " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace dichro
