// dichro: command-line front end.
//
// Exit codes: 0 computed / relation holds / certificate accepted,
// 1 relation fails / budget or cap exceeded / certificate rejected,
// 2 usage, parse or precondition error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dichro/amalgam.hpp"
#include "dichro/arrow.hpp"
#include "dichro/certificate.hpp"
#include "dichro/generators.hpp"
#include "dichro/io.hpp"
#include "dichro/orientation.hpp"
#include "dichro/partition.hpp"

using namespace dichro;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::string command_line;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    RunManifest manifest;
};

Context ctx;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    std::uint64_t s = 0;
    if (seed) {
        s = *seed;
    } else {
        std::random_device rd;
        s = (std::uint64_t{rd()} << 32) ^ rd();
        std::cerr << "seed: " << s << "\n";
    }
    ctx.manifest.seeds.push_back(s);
    return s;
}

Json finish_manifest() {
    ctx.manifest.command_line = ctx.command_line;
    ctx.manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count();
    return to_json(ctx.manifest);
}

void print(Json report) {
    report["manifest"] = finish_manifest();
    std::cout << report.dump(2) << "\n";
}

void write_cert(const std::string& path, Json cert) {
    cert["manifest"] = finish_manifest();
    write_file(path, emit_certificate(cert));
}

Digraph load_digraph(const std::string& path) { return parse_digraph(read_file(path)); }
Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::chrono::milliseconds> to_timeout(const std::optional<double>& seconds) {
    if (!seconds) return std::nullopt;
    return std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000.0));
}

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Exact: return "exact";
        case SolveStatus::Exceeded: return "exceeded";
        case SolveStatus::WithinBudget: return "within_budget";
    }
    return "unknown";
}

template <class Cert>
Json classes_json(const std::optional<Cert>& cert) {
    return cert ? Json(cert->classes) : Json(nullptr);
}

// "C5" names a directed 5-cycle; anything else is a digraph file.
Digraph load_target(const std::string& spec) {
    if (spec.size() > 1 && (spec[0] == 'C' || spec[0] == 'c') &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        return directed_cycle(std::stoul(spec.substr(1)));
    }
    return load_digraph(spec);
}

// ------------------------------------------------------------------ gen

struct GenArgs {
    std::string family;
    std::vector<std::size_t> sizes;
    bool fwd = false;
    bool back = false;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_gen(const GenArgs& a) {
    auto need = [&](std::size_t count) {
        if (a.sizes.size() != count) {
            throw UsageError("gen " + a.family + " takes " + std::to_string(count) + " size argument(s)");
        }
    };
    ctx.manifest.parameters = {{"family", a.family}, {"sizes", a.sizes}};
    std::string text;
    Json report = {{"command", "gen"}, {"family", a.family}};
    auto record = [&](const auto& obj) {
        text = serialize(obj);
        report["n"] = obj.order();
        report["m"] = obj.size();
        report["instance"] = to_json(fingerprint(obj));
    };
    if (a.family == "complete") {
        need(1);
        record(complete_graph(a.sizes[0]));
    } else if (a.family == "half") {
        need(1);
        if (a.fwd && a.back) throw UsageError("gen half: --fwd and --back are exclusive");
        if (a.fwd) {
            record(half_fwd(a.sizes[0]));
        } else if (a.back) {
            record(half_back(a.sizes[0]));
        } else {
            record(half_graph(a.sizes[0]));
        }
        report["orientation"] = a.fwd ? "fwd" : a.back ? "back" : "none";
    } else if (a.family == "shift") {
        need(2);
        record(shift_graph(a.sizes[0], a.sizes[1]).graph);
    } else if (a.family == "cycle") {
        need(1);
        record(directed_cycle(a.sizes[0]));
    } else if (a.family == "path") {
        need(1);
        record(directed_path(a.sizes[0]));
    } else if (a.family == "tournament") {
        need(1);
        record(random_tournament(a.sizes[0], resolve_seed(a.seed)));
    } else if (a.family == "sparse") {
        need(2);
        record(sparse_sample(a.sizes[0], a.sizes[1], resolve_seed(a.seed)));
    } else {
        throw UsageError("gen: unknown family '" + a.family + "'");
    }
    write_file(a.out, text);
    report["out"] = a.out;
    print(report);
    return kOk;
}

// ------------------------------------------------------------ dichrom/chrom

struct SolveArgs {
    std::string file;
    std::optional<std::size_t> budget;
    std::optional<double> timeout;
    bool satisfice = false;
    std::string cert;
};

SolveOptions solve_options(const SolveArgs& a) {
    if (a.satisfice && !a.budget) throw UsageError("--satisfice requires --budget");
    SolveOptions o;
    o.budget = a.budget;
    o.timeout = to_timeout(a.timeout);
    o.satisfice = a.satisfice;
    ctx.manifest.parameters = {{"budget", optional_size(a.budget)},
                               {"timeout_seconds", a.timeout ? Json(*a.timeout) : Json(nullptr)},
                               {"satisfice", a.satisfice}};
    return o;
}

template <class Result>
Json solve_report(const char* command, const Result& r) {
    return {{"command", command},
            {"status", status_name(r.status)},
            {"value", r.exact() ? Json(r.value()) : Json(nullptr)},
            {"lower_bound", r.lower_bound},
            {"upper_bound", r.upper_bound},
            {"classes", classes_json(r.certificate)},
            {"nodes", r.stats.nodes},
            {"timed_out", r.stats.timed_out}};
}

int exit_for(SolveStatus s) { return s == SolveStatus::Exceeded ? kFails : kOk; }

int run_dichrom(const SolveArgs& a) {
    const auto d = load_digraph(a.file);
    const auto r = dichromatic_number(d, solve_options(a));
    auto report = solve_report("dichrom", r);
    report["topo_orders"] = r.certificate ? Json(r.certificate->topo_orders) : Json(nullptr);
    report["instance"] = to_json(fingerprint(d));
    if (!a.cert.empty() && r.certificate) write_cert(a.cert, dichromatic_certificate(d, *r.certificate, ctx.manifest));
    print(report);
    return exit_for(r.status);
}

int run_chrom(const SolveArgs& a) {
    const auto g = load_graph(a.file);
    const auto r = chromatic_number(g, solve_options(a));
    auto report = solve_report("chrom", r);
    report["instance"] = to_json(fingerprint(g));
    if (!a.cert.empty() && r.certificate) write_cert(a.cert, chromatic_certificate(g, *r.certificate, ctx.manifest));
    print(report);
    return exit_for(r.status);
}

// ------------------------------------------------------------------ dchr

struct DchrArgs {
    std::string file;
    bool exhaustive = false;
    bool heuristic = false;
    std::optional<std::uint64_t> seed;
    std::size_t restarts = DchrOptions{}.restarts;
    std::size_t edge_cap = default_edge_cap;
    std::optional<std::size_t> stop_at;
    std::optional<double> timeout;
    std::size_t jobs = 1;
};

DchrOptions dchr_options(const DchrArgs& a) {
    if (a.exhaustive && a.heuristic) throw UsageError("--exhaustive and --heuristic are exclusive");
    DchrOptions o;
    o.mode = a.exhaustive ? DchrMode::Exhaustive : a.heuristic ? DchrMode::Heuristic : DchrMode::Auto;
    o.edge_cap = a.edge_cap;
    o.stop_at = a.stop_at;
    o.restarts = a.restarts;
    o.solver_timeout = to_timeout(a.timeout);
    o.jobs = a.jobs;
    // Auto may fall back to the heuristic, so it needs a seed as well.
    if (!a.exhaustive) o.seed = resolve_seed(a.seed);
    return o;
}

int run_dchr(const DchrArgs& a) {
    const auto g = load_graph(a.file);
    const auto o = dchr_options(a);
    ctx.manifest.parameters = {{"mode", a.exhaustive ? "exhaustive" : a.heuristic ? "heuristic" : "auto"},
                               {"restarts", a.restarts},
                               {"edge_cap", a.edge_cap},
                               {"stop_at", optional_size(a.stop_at)},
                               {"jobs", a.jobs}};
    const auto r = dchr(g, o);
    print({{"command", "dchr"},
           {"value", r.value},
           {"exhaustive", r.exhaustive},
           {"orientations_examined", r.orientations_examined},
           {"witness", digraph_to_json(r.witness)},
           {"instance", to_json(fingerprint(g))}});
    return kOk;
}

// ---------------------------------------------------------------- digirth

int run_digirth(const std::string& file) {
    const auto d = load_digraph(file);
    const auto g = digirth(d);
    print({{"command", "digirth"},
           {"digirth", optional_size(g)},
           {"acyclic", !g.has_value()},
           {"instance", to_json(fingerprint(d))}});
    return kOk;
}

// ------------------------------------------------------------------ arrow

struct ArrowArgs {
    std::string file;
    std::vector<std::string> targets;
    std::size_t r = 0;
    bool any = false;
    bool all = false;
    std::uint64_t node_cap = ArrowOptions{}.node_cap;
    std::string cert;
};

int run_arrow(const ArrowArgs& a) {
    if (a.any && a.all) throw UsageError("--any and --all are exclusive");
    if (a.targets.empty()) throw UsageError("arrow needs at least one --target");
    if (!a.any && !a.all && a.targets.size() > 1) throw UsageError("several targets need --any or --all");
    const auto d = load_digraph(a.file);
    std::vector<Digraph> targets;
    for (const auto& t : a.targets) targets.push_back(load_target(t));
    ArrowOptions o;
    o.node_cap = a.node_cap;
    const std::string mode = a.any ? "any" : a.all ? "all" : "single";
    ctx.manifest.parameters = {{"mode", mode}, {"r", a.r}, {"targets", a.targets}, {"node_cap", a.node_cap}};

    const auto rep = a.all ? arrows_all(d, targets, a.r, o)
                     : a.any ? arrows_any(d, targets, a.r, o)
                             : arrows(d, targets[0], a.r, o);
    Json report = {{"command", "arrow"},
                   {"mode", mode},
                   {"r", a.r},
                   {"targets", a.targets},
                   {"holds", rep.holds},
                   {"witness_colouring", rep.witness_colouring ? Json(*rep.witness_colouring) : Json(nullptr)},
                   {"checked_colourings", rep.checked_colourings},
                   {"failed_target", optional_size(rep.failed_target)},
                   {"instance", to_json(fingerprint(d))}};
    if (!a.cert.empty() && rep.witness_colouring) {
        // For --all the witness only avoids the failing target.
        std::vector<Digraph> avoided = targets;
        if (rep.failed_target) avoided = {targets[*rep.failed_target]};
        write_cert(a.cert, arrow_certificate(d, avoided, a.r, *rep.witness_colouring, ctx.manifest));
    }
    print(report);
    return rep.holds ? kOk : kFails;
}

// ------------------------------------------------------------------ amalg

struct AmalgArgs {
    std::string file;
    std::size_t root_size = 0;
    std::size_t copies = 0;
    std::size_t k = 0;
    std::optional<Vertex> rep;
    bool no_cycle = false;
    std::string out;
};

int run_amalg(const AmalgArgs& a) {
    const auto d = load_digraph(a.file);
    if (a.root_size >= d.order()) throw UsageError("--root-size must be smaller than the member order");
    std::vector<Vertex> root(a.root_size);
    for (Vertex v = 0; v < a.root_size; ++v) root[v] = v;
    const Vertex rep = a.rep.value_or(static_cast<Vertex>(a.root_size));
    if (rep < a.root_size || rep >= d.order()) throw UsageError("--rep must be a non-root vertex");
    ctx.manifest.parameters = {{"root_size", a.root_size}, {"copies", a.copies}, {"k", a.k},
                               {"rep", rep},           {"cycle", !a.no_cycle}};

    const auto family = make_twin_family(d, root, a.copies);
    LabeledDigraph result;
    if (a.no_cycle) {
        result = amalgamate(family);
    } else {
        std::vector<Label> reps;
        for (std::size_t j = 0; j < family.size(); ++j) reps.push_back(family.psi(0, j, static_cast<Label>(rep)));
        result = cycle_amalgamate(family, reps, a.k);
    }
    const auto before = digirth(d);
    const auto after = digirth(result.digraph);
    Json report = {{"command", "amalg"},
                   {"digirth_before", optional_size(before)},
                   {"digirth_after", optional_size(after)},
                   {"m", a.copies},
                   {"k", a.k},
                   {"contains_m_cycle", a.copies >= 2 && find_embedding(directed_cycle(a.copies), result.digraph).has_value()},
                   {"n", result.digraph.order()},
                   {"arcs", result.digraph.size()},
                   {"instance", to_json(fingerprint(result.digraph))}};
    if (!a.out.empty()) {
        write_file(a.out, serialize(result.digraph));
        report["out"] = a.out;
    }
    print(report);
    return kOk;
}

// ----------------------------------------------------------------- sparse

struct SparseArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::uint64_t> seed;
    double chi_timeout = 10.0;
    std::string out;
};

int run_sparse(const SparseArgs& a) {
    const auto seed = resolve_seed(a.seed);
    ctx.manifest.parameters = {{"target_n", a.n}, {"k", a.k}, {"chi_timeout_seconds", a.chi_timeout}};
    const auto d = sparse_sample(a.n, a.k, seed);
    SolveOptions o;
    o.timeout = to_timeout(a.chi_timeout);
    const auto r = dichromatic_number(d, o);
    Json report = {{"command", "sparse"},
                   {"n", d.order()},
                   {"arcs", d.size()},
                   {"k", a.k},
                   {"digirth", optional_size(digirth(d))},
                   {"chi_status", status_name(r.status)},
                   {"chi_lower_bound", r.lower_bound},
                   {"chi_upper_bound", r.upper_bound},
                   {"instance", to_json(fingerprint(d))}};
    if (!a.out.empty()) {
        write_file(a.out, serialize(d));
        report["out"] = a.out;
    }
    print(report);
    return kOk;
}

// --------------------------------------------------------------- enl-scan

struct EnlArgs {
    std::string file;
    std::optional<std::size_t> builtin;
    bool all_graphs = false;
    std::size_t chr_min = 3;
    std::size_t target = 2;
    std::optional<std::uint64_t> seed;
    std::optional<double> timeout;
    std::size_t jobs = 1;
    std::string out;
};

int run_enl(const EnlArgs& a) {
    if (a.builtin.has_value() == !a.file.empty()) throw UsageError("enl-scan takes a family file or --builtin n");
    std::vector<NamedGraph> family;
    if (a.builtin) {
        if (*a.builtin > 7) throw UsageError("--builtin supports n <= 7");
        family = all_graphs_up_to(*a.builtin, !a.all_graphs);
    } else {
        family = parse_graph_family(read_file(a.file));
    }
    EnlOptions o;
    o.dchr.seed = resolve_seed(a.seed);
    o.solver_timeout = to_timeout(a.timeout);
    o.jobs = a.jobs;
    ctx.manifest.parameters = {{"source", a.builtin ? "builtin" : a.file},
                               {"builtin_n", optional_size(a.builtin)},
                               {"connected_only", !a.all_graphs},
                               {"chr_min", a.chr_min},
                               {"target", a.target},
                               {"jobs", a.jobs}};
    const auto rep = enl_scan(family, a.chr_min, a.target, o);

    Json records = Json::array();
    for (const auto& rec : rep.records) {
        if (!rec.considered) continue;
        records.push_back({{"graph_id", rec.graph_id},
                           {"chromatic", rec.chromatic},
                           {"dchr_lower_bound", rec.dchr_lower_bound},
                           {"reached_target", rec.reached_target},
                           {"exhaustive", rec.exhaustive},
                           {"witness", rec.witness ? digraph_to_json(*rec.witness) : Json(nullptr)}});
    }
    Json report = {{"command", "enl-scan"},
                   {"chr_min", rep.chr_min},
                   {"target", rep.target_k},
                   {"graphs", family.size()},
                   {"considered", rep.considered},
                   {"failures", rep.failures},
                   {"inconclusive", rep.inconclusive},
                   {"min_failing_chromatic", optional_size(rep.min_failing_chromatic)},
                   {"records", records}};
    if (!a.out.empty()) {
        Json file_report = report;
        file_report["manifest"] = finish_manifest();
        write_file(a.out, file_report.dump(2) + "\n");
        report.erase("records");
        report["out"] = a.out;
    }
    print(report);
    return rep.failures == 0 ? kOk : kFails;
}

// ------------------------------------------------------------------ edge2

struct Edge2Args {
    std::string file;
    std::vector<Vertex> order;
    std::string cert;
};

int run_edge2(const Edge2Args& a) {
    const auto d = load_digraph(a.file);
    ctx.manifest.parameters = {{"order", a.order.empty() ? Json(nullptr) : Json(a.order)}};
    std::optional<std::span<const Vertex>> order;
    if (!a.order.empty()) order = std::span<const Vertex>(a.order);
    const auto b = arc_bipartition(d, order);
    auto arcs = [](const std::vector<Arc>& as) {
        Json out = Json::array();
        for (const auto& x : as) out.push_back({x.tail, x.head});
        return out;
    };
    const bool fwd_ok = is_acyclic(Digraph(d.order(), b.forward)).acyclic;
    const bool back_ok = is_acyclic(Digraph(d.order(), b.backward)).acyclic;
    if (!a.cert.empty()) write_cert(a.cert, bipartition_certificate(d, b, ctx.manifest));
    print({{"command", "edge2"},
           {"order", b.order},
           {"forward", arcs(b.forward)},
           {"backward", arcs(b.backward)},
           {"forward_acyclic", fwd_ok},
           {"backward_acyclic", back_ok},
           {"instance", to_json(fingerprint(d))}});
    return fwd_ok && back_ok ? kOk : kFails;
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& cert_path, const std::string& instance_path) {
    const auto res = verify_certificate_text(read_file(cert_path), read_file(instance_path));
    print({{"command", "verify"}, {"ok", res.ok}, {"diagnostics", res.diagnostics}});
    return res.ok ? kOk : kFails;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    ctx.command_line = join_args(argc, argv);

    CLI::App app{"Dichromatic number toolkit"};
    app.set_version_flag("--version", artifact_version());
    app.require_subcommand(1);
    int code = kOk;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("family", gen.family, "complete|half|shift|cycle|path|tournament|sparse")->required();
    gen_cmd->add_option("sizes", gen.sizes, "Size parameters (n, or k m / n k)")->required();
    gen_cmd->add_flag("--fwd", gen.fwd, "half: forward orientation");
    gen_cmd->add_flag("--back", gen.back, "half: backward orientation");
    gen_cmd->add_option("--seed", gen.seed, "Seed for tournament and sparse");
    gen_cmd->add_option("--out", gen.out, "Output file")->required();
    gen_cmd->callback([&] { code = run_gen(gen); });

    SolveArgs dichrom;
    SolveArgs chrom;
    for (auto [name, args, desc] : {std::tuple{"dichrom", &dichrom, "Dichromatic number of a digraph"},
                                    std::tuple{"chrom", &chrom, "Chromatic number of a graph"}}) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("file", args->file)->required()->check(CLI::ExistingFile);
        cmd->add_option("--budget", args->budget, "Search only partitions with at most this many classes");
        cmd->add_option("--timeout", args->timeout, "Seconds before giving up with bounds");
        cmd->add_flag("--satisfice", args->satisfice, "Stop at the first partition within the budget");
        cmd->add_option("--cert", args->cert, "Write a certificate JSON here");
    }
    app.get_subcommand("dichrom")->callback([&] { code = run_dichrom(dichrom); });
    app.get_subcommand("chrom")->callback([&] { code = run_chrom(chrom); });

    DchrArgs dc;
    auto* dchr_cmd = app.add_subcommand("dchr", "Maximum dichromatic number over orientations of a graph");
    dchr_cmd->add_option("file", dc.file)->required()->check(CLI::ExistingFile);
    dchr_cmd->add_flag("--exhaustive", dc.exhaustive, "Enumerate all orientations");
    dchr_cmd->add_flag("--heuristic", dc.heuristic, "Local search over orientations");
    dchr_cmd->add_option("--seed", dc.seed);
    dchr_cmd->add_option("--restarts", dc.restarts, "Heuristic restarts");
    dchr_cmd->add_option("--edge-cap", dc.edge_cap, "Largest edge count enumerated exhaustively");
    dchr_cmd->add_option("--stop-at", dc.stop_at, "Stop once this value is reached");
    dchr_cmd->add_option("--timeout", dc.timeout, "Seconds per exact solve");
    dchr_cmd->add_option("--jobs", dc.jobs, "Worker threads for exhaustive enumeration")->check(CLI::PositiveNumber);
    dchr_cmd->callback([&] { code = run_dchr(dc); });

    std::string digirth_file;
    auto* digirth_cmd = app.add_subcommand("digirth", "Length of the shortest directed cycle");
    digirth_cmd->add_option("file", digirth_file)->required()->check(CLI::ExistingFile);
    digirth_cmd->callback([&] { code = run_digirth(digirth_file); });

    ArrowArgs ar;
    auto* arrow_cmd = app.add_subcommand("arrow", "Decide D -> (targets)^1_r");
    arrow_cmd->add_option("file", ar.file)->required()->check(CLI::ExistingFile);
    arrow_cmd->add_option("--target,--targets", ar.targets, "Target digraph file or Cn")->required();
    arrow_cmd->add_option("-r", ar.r, "Number of colours")->required()->check(CLI::PositiveNumber);
    arrow_cmd->add_flag("--any", ar.any, "Some class contains some target");
    arrow_cmd->add_flag("--all", ar.all, "Holds for every target separately");
    arrow_cmd->add_option("--node-cap", ar.node_cap, "Search-node cap");
    arrow_cmd->add_option("--cert", ar.cert, "Write the witness colouring certificate here");
    arrow_cmd->callback([&] { code = run_arrow(ar); });

    AmalgArgs am;
    auto* amalg_cmd = app.add_subcommand("amalg", "Amalgamate twin copies of a member digraph");
    amalg_cmd->add_option("file", am.file)->required()->check(CLI::ExistingFile);
    amalg_cmd->add_option("--root-size", am.root_size, "Vertices 0..s-1 form the root")->required();
    amalg_cmd->add_option("--copies,-m", am.copies, "Number of twins")->required()->check(CLI::PositiveNumber);
    amalg_cmd->add_option("--k", am.k, "Members must have digirth > k")->required();
    amalg_cmd->add_option("--rep", am.rep, "Non-root vertex carrying the long cycle");
    amalg_cmd->add_flag("--no-cycle", am.no_cycle, "Plain union without the long cycle");
    amalg_cmd->add_option("--out", am.out, "Write the amalgam here");
    amalg_cmd->callback([&] { code = run_amalg(am); });

    SparseArgs sp;
    auto* sparse_cmd = app.add_subcommand("sparse", "Sample a digraph of digirth k+1 by cycle amalgamation");
    sparse_cmd->add_option("n", sp.n)->required();
    sparse_cmd->add_option("k", sp.k)->required();
    sparse_cmd->add_option("--seed", sp.seed);
    sparse_cmd->add_option("--chi-timeout", sp.chi_timeout, "Seconds spent bounding chi");
    sparse_cmd->add_option("--out", sp.out, "Write the sample here");
    sparse_cmd->callback([&] { code = run_sparse(sp); });

    EnlArgs en;
    auto* enl_cmd = app.add_subcommand("enl-scan", "Search for high-dichromatic orientations across a family");
    enl_cmd->add_option("file", en.file, "Graph family file")->check(CLI::ExistingFile);
    enl_cmd->add_option("--builtin", en.builtin, "All graphs on at most n <= 7 vertices");
    enl_cmd->add_flag("--all-graphs", en.all_graphs, "Include disconnected built-in graphs");
    enl_cmd->add_option("--chr-min", en.chr_min, "Only graphs with chi(G) >= c")->required();
    enl_cmd->add_option("--target", en.target, "Wanted dichromatic number")->required();
    enl_cmd->add_option("--seed", en.seed);
    enl_cmd->add_option("--timeout", en.timeout, "Seconds per exact solve");
    enl_cmd->add_option("--jobs", en.jobs)->check(CLI::PositiveNumber);
    enl_cmd->add_option("--out", en.out, "Write the full report here");
    enl_cmd->callback([&] { code = run_enl(en); });

    Edge2Args e2;
    auto* edge2_cmd = app.add_subcommand("edge2", "Split the arcs into two acyclic classes");
    edge2_cmd->add_option("file", e2.file)->required()->check(CLI::ExistingFile);
    edge2_cmd->add_option("--order", e2.order, "Vertex order (default 0..n-1)")->delimiter(',');
    edge2_cmd->add_option("--cert", e2.cert, "Write a certificate JSON here");
    edge2_cmd->callback([&] { code = run_edge2(e2); });

    std::string cert_file;
    std::string instance_file;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate against an instance");
    verify_cmd->add_option("certificate", cert_file)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("instance", instance_file)->required()->check(CLI::ExistingFile);
    verify_cmd->callback([&] { code = run_verify(cert_file, instance_file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "exceeded: " << e.what() << "\n";
        return kFails;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
