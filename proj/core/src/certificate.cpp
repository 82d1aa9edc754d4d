#include "dichro/certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include "dichro/io.hpp"

#ifndef DICHRO_VERSION
#define DICHRO_VERSION "unknown"
#endif

namespace dichro {

std::string artifact_version() { return DICHRO_VERSION; }

Json to_json(const RunManifest& manifest) {
    Json j = Json::object();
    j["command_line"] = manifest.command_line;
    j["seeds"] = manifest.seeds;
    j["parameters"] = manifest.parameters;
    j["wall_seconds"] = manifest.wall_seconds;
    j["version"] = manifest.version;
    return j;
}

namespace {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Json arcs_to_json(std::span<const Arc> arcs) {
    Json out = Json::array();
    for (const auto& a : arcs) out.push_back({a.tail, a.head});
    return out;
}

}  // namespace

InstanceFingerprint fingerprint(const Digraph& d) { return {d.order(), d.size(), fnv1a64(serialize(d))}; }

InstanceFingerprint fingerprint(const Graph& g) { return {g.order(), g.size(), fnv1a64(serialize(g))}; }

Json to_json(const InstanceFingerprint& fp) {
    Json j = Json::object();
    j["n"] = fp.n;
    j["m"] = fp.m;
    j["fnv1a64"] = hex64(fp.hash);
    return j;
}

Json digraph_to_json(const Digraph& d) {
    Json j = Json::object();
    j["n"] = d.order();
    j["arcs"] = arcs_to_json(d.arcs());
    return j;
}

Json dichromatic_certificate(const Digraph& d, const AcyclicPartition& cert, const RunManifest& manifest) {
    Json j = Json::object();
    j["kind"] = "dichromatic";
    j["k"] = cert.size();
    j["classes"] = cert.classes;
    j["topo_orders"] = cert.topo_orders;
    j["instance"] = to_json(fingerprint(d));
    j["manifest"] = to_json(manifest);
    return j;
}

Json chromatic_certificate(const Graph& g, const ColourPartition& cert, const RunManifest& manifest) {
    Json j = Json::object();
    j["kind"] = "chromatic";
    j["k"] = cert.size();
    j["classes"] = cert.classes;
    j["instance"] = to_json(fingerprint(g));
    j["manifest"] = to_json(manifest);
    return j;
}

Json bipartition_certificate(const Digraph& d, const ArcBipartition& cert, const RunManifest& manifest) {
    Json j = Json::object();
    j["kind"] = "arc_bipartition";
    j["order"] = cert.order;
    j["forward"] = arcs_to_json(cert.forward);
    j["backward"] = arcs_to_json(cert.backward);
    j["instance"] = to_json(fingerprint(d));
    j["manifest"] = to_json(manifest);
    return j;
}

Json arrow_certificate(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                       std::span<const std::uint32_t> colouring, const RunManifest& manifest) {
    Json j = Json::object();
    j["kind"] = "arrow";
    j["holds"] = false;
    j["r"] = r;
    Json ts = Json::array();
    for (const auto& t : targets) ts.push_back(digraph_to_json(t));
    j["targets"] = std::move(ts);
    j["witness_colouring"] = std::vector<std::uint32_t>(colouring.begin(), colouring.end());
    j["instance"] = to_json(fingerprint(d));
    j["manifest"] = to_json(manifest);
    return j;
}

std::string emit_certificate(const Json& cert) { return cert.dump(2) + "\n"; }

// ---------------------------------------------------------------- verification

namespace {

struct Rejected {};

class Checker {
public:
    explicit Checker(const Json& cert) : cert_(cert) {}

    [[noreturn]] void reject(std::string message) {
        diagnostics.push_back(std::move(message));
        throw Rejected{};
    }

    const Json& field(const char* name) {
        if (!cert_.is_object() || !cert_.contains(name)) reject(std::string("missing field '") + name + "'");
        return cert_.at(name);
    }

    std::uint64_t unsigned_value(const Json& j, const std::string& where) {
        if (!j.is_number_unsigned()) reject(where + ": expected a non-negative integer");
        return j.get<std::uint64_t>();
    }

    Vertex vertex(const Json& j, std::size_t n, const std::string& where) {
        const auto v = unsigned_value(j, where);
        if (v >= n) reject(where + ": vertex " + std::to_string(v) + " out of range");
        return static_cast<Vertex>(v);
    }

    std::vector<Vertex> vertex_list(const Json& j, std::size_t n, const std::string& where) {
        if (!j.is_array()) reject(where + ": expected an array");
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            out.push_back(vertex(j[i], n, where + "[" + std::to_string(i) + "]"));
        }
        return out;
    }

    std::vector<std::vector<Vertex>> vertex_lists(const Json& j, std::size_t n, const std::string& where) {
        if (!j.is_array()) reject(where + ": expected an array of arrays");
        std::vector<std::vector<Vertex>> out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            out.push_back(vertex_list(j[i], n, where + "[" + std::to_string(i) + "]"));
        }
        return out;
    }

    std::vector<Arc> arc_list(const Json& j, std::size_t n, const std::string& where) {
        if (!j.is_array()) reject(where + ": expected an array of arcs");
        std::vector<Arc> out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto pair = vertex_list(j[i], n, where + "[" + std::to_string(i) + "]");
            if (pair.size() != 2) reject(where + "[" + std::to_string(i) + "]: expected [tail, head]");
            out.push_back({pair[0], pair[1]});
        }
        return out;
    }

    void check_instance(const InstanceFingerprint& actual) {
        const Json& inst = field("instance");
        if (!inst.is_object() || !inst.contains("n") || !inst.contains("m") || !inst.contains("fnv1a64") ||
            !inst["fnv1a64"].is_string()) {
            reject("instance: malformed fingerprint");
        }
        const auto n = unsigned_value(inst["n"], "instance.n");
        const auto m = unsigned_value(inst["m"], "instance.m");
        if (n != actual.n || m != actual.m || inst["fnv1a64"].get<std::string>() != hex64(actual.hash)) {
            reject("instance: fingerprint does not match the instance file (file has n=" + std::to_string(actual.n) +
                   ", m=" + std::to_string(actual.m) + ")");
        }
    }

    // Every vertex in exactly one nonempty class.
    void check_partition(const std::vector<std::vector<Vertex>>& classes, std::size_t n) {
        std::vector<std::uint8_t> seen(n, 0);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].empty()) reject("classes[" + std::to_string(c) + "] is empty");
            for (Vertex v : classes[c]) {
                if (seen[v]) reject("vertex " + std::to_string(v) + " appears more than once");
                seen[v] = 1;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (!seen[v]) reject("vertex " + std::to_string(v) + " is in no class");
        }
    }

    void check_k(std::size_t classes) {
        const auto k = unsigned_value(field("k"), "k");
        if (k != classes) {
            reject("k=" + std::to_string(k) + " but " + std::to_string(classes) + " classes are given");
        }
    }

    std::vector<std::string> diagnostics;

private:
    const Json& cert_;
};

void verify_dichromatic(Checker& ck, const Digraph& d) {
    ck.check_instance(fingerprint(d));
    const auto n = d.order();
    const auto classes = ck.vertex_lists(ck.field("classes"), n, "classes");
    const auto orders = ck.vertex_lists(ck.field("topo_orders"), n, "topo_orders");
    ck.check_k(classes.size());
    ck.check_partition(classes, n);
    if (orders.size() != classes.size()) ck.reject("topo_orders and classes differ in length");

    std::vector<std::size_t> position(n);
    std::vector<std::size_t> owner(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto a = classes[c];
        auto b = orders[c];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) ck.reject("topo_orders[" + std::to_string(c) + "] is not an ordering of classes[" +
                              std::to_string(c) + "]");
        for (std::size_t i = 0; i < orders[c].size(); ++i) {
            position[orders[c][i]] = i;
            owner[orders[c][i]] = c;
        }
    }
    for (const auto& arc : d.arcs()) {
        if (owner[arc.tail] == owner[arc.head] && position[arc.tail] > position[arc.head]) {
            ck.reject("arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) + " runs backwards in " +
                      "topo_orders[" + std::to_string(owner[arc.tail]) + "]");
        }
    }
}

void verify_chromatic(Checker& ck, const Graph& g) {
    ck.check_instance(fingerprint(g));
    const auto n = g.order();
    const auto classes = ck.vertex_lists(ck.field("classes"), n, "classes");
    ck.check_k(classes.size());
    ck.check_partition(classes, n);
    std::vector<std::size_t> owner(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (Vertex v : classes[c]) owner[v] = c;
    }
    for (const auto& e : g.edges()) {
        if (owner[e.u] == owner[e.v]) {
            ck.reject("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " inside classes[" +
                      std::to_string(owner[e.u]) + "]");
        }
    }
}

void verify_bipartition(Checker& ck, const Digraph& d) {
    ck.check_instance(fingerprint(d));
    const auto n = d.order();
    const auto order = ck.vertex_list(ck.field("order"), n, "order");
    const auto forward = ck.arc_list(ck.field("forward"), n, "forward");
    const auto backward = ck.arc_list(ck.field("backward"), n, "backward");

    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (position[order[i]] != n) ck.reject("order repeats vertex " + std::to_string(order[i]));
        position[order[i]] = i;
    }
    if (order.size() != n) ck.reject("order is not a permutation of the vertices");

    std::vector<Arc> listed;
    for (const auto& a : forward) {
        if (position[a.tail] > position[a.head]) {
            ck.reject("forward arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " goes right to left");
        }
        listed.push_back(a);
    }
    for (const auto& a : backward) {
        if (position[a.tail] < position[a.head]) {
            ck.reject("backward arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                      " goes left to right");
        }
        listed.push_back(a);
    }
    std::sort(listed.begin(), listed.end());
    const auto arcs = d.arcs();
    if (!std::equal(listed.begin(), listed.end(), arcs.begin(), arcs.end())) {
        ck.reject("forward and backward do not partition the arc set");
    }
}

void verify_arrow(Checker& ck, const Digraph& d) {
    ck.check_instance(fingerprint(d));
    const Json& holds = ck.field("holds");
    if (!holds.is_boolean() || holds.get<bool>()) ck.reject("holds: only failing relations carry a witness");
    const auto r = ck.unsigned_value(ck.field("r"), "r");
    if (r == 0) ck.reject("r must be at least 1");

    const Json& ts = ck.field("targets");
    if (!ts.is_array() || ts.empty()) ck.reject("targets: expected a nonempty array");
    std::vector<Digraph> targets;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string where = "targets[" + std::to_string(i) + "]";
        if (!ts[i].is_object() || !ts[i].contains("n") || !ts[i].contains("arcs")) ck.reject(where + ": malformed");
        const auto tn = ck.unsigned_value(ts[i]["n"], where + ".n");
        if (tn == 0) ck.reject(where + ": empty target");
        const auto arcs = ck.arc_list(ts[i]["arcs"], tn, where + ".arcs");
        if (tn > d.order()) {
            // Too large to occur in any class; still has to be a valid digraph.
            std::vector<Arc> sorted = arcs;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t a = 0; a < sorted.size(); ++a) {
                const Arc& x = sorted[a];
                if (x.tail == x.head || (a > 0 && sorted[a - 1] == x) ||
                    std::binary_search(sorted.begin(), sorted.end(), Arc{x.head, x.tail})) {
                    ck.reject(where + ": not a digraph");
                }
            }
            continue;
        }
        try {
            targets.emplace_back(tn, arcs);
        } catch (const GraphError& e) {
            ck.reject(where + ": " + e.what());
        }
    }

    const Json& col = ck.field("witness_colouring");
    if (!col.is_array() || col.size() != d.order()) ck.reject("witness_colouring: expected one colour per vertex");
    std::vector<std::uint64_t> colour(d.order());
    for (std::size_t v = 0; v < d.order(); ++v) {
        colour[v] = ck.unsigned_value(col[v], "witness_colouring[" + std::to_string(v) + "]");
        if (colour[v] >= r) ck.reject("witness_colouring[" + std::to_string(v) + "] >= r");
    }

    std::vector<std::uint8_t> allowed(d.order());
    for (std::uint64_t c = 0; c < r; ++c) {
        for (Vertex v = 0; v < d.order(); ++v) allowed[v] = colour[v] == c ? 1 : 0;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (auto emb = find_embedding(targets[t], d, allowed)) {
                std::string msg = "colour " + std::to_string(c) + " contains a copy of a target on vertices";
                for (Vertex v : emb->map) msg += " " + std::to_string(v);
                ck.reject(msg);
            }
        }
    }
}

}  // namespace

VerifyResult verify_certificate_text(std::string_view certificate_text, std::string_view instance_text) {
    Json cert;
    try {
        cert = Json::parse(certificate_text);
    } catch (const nlohmann::json::parse_error& e) {
        return {false, {std::string("certificate is not valid JSON: ") + e.what()}};
    }
    return verify_certificate(cert, instance_text);
}

VerifyResult verify_certificate(const Json& certificate, std::string_view instance_text) {
    Checker ck(certificate);
    try {
        const Json& kind = ck.field("kind");
        if (!kind.is_string()) ck.reject("kind: expected a string");
        const auto name = kind.get<std::string>();
        if (name == "dichromatic") {
            verify_dichromatic(ck, parse_digraph(instance_text));
        } else if (name == "chromatic") {
            verify_chromatic(ck, parse_graph(instance_text));
        } else if (name == "arc_bipartition") {
            verify_bipartition(ck, parse_digraph(instance_text));
        } else if (name == "arrow") {
            verify_arrow(ck, parse_digraph(instance_text));
        } else {
            ck.reject("unknown certificate kind '" + name + "'");
        }
        const Json& manifest = ck.field("manifest");
        if (!manifest.is_object()) ck.reject("manifest: expected an object");
    } catch (const Rejected&) {
        return {false, std::move(ck.diagnostics)};
    }
    return {true, std::move(ck.diagnostics)};
}

}  // namespace dichro
