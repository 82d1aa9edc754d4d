// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// Tolerances are exact (zero failures, exact equality) everywhere; each
// criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "../support/certs.hpp"
#include "../support/families.hpp"
#include "../support/oracles.hpp"
#include "dichro/amalgam.hpp"
#include "dichro/arrow.hpp"
#include "dichro/certificate.hpp"
#include "dichro/generators.hpp"
#include "dichro/io.hpp"
#include "dichro/orientation.hpp"
#include "dichro/partition.hpp"

using namespace dichro;
using Seconds = std::chrono::duration<double>;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::size_t exact_chi(const Digraph& d, bool& ok) {
    const auto r = dichromatic_number(d);
    if (!r.exact() || !r.certificate || !verify_acyclic_partition(d, *r.certificate)) ok = false;
    return r.value();
}

// ---------------------------------------------------------------- 1
Outcome f2_equals_3() {
    std::size_t considered = 0;
    std::size_t failures = 0;
    for (const auto& ng : all_graphs_up_to(6, true)) {
        const auto chr = chromatic_number(ng.graph);
        if (!chr.exact() || !verify_colour_partition(ng.graph, *chr.certificate)) ++failures;
        if (chr.value() < 3) continue;
        ++considered;
        const auto d = cycle_orientation(ng.graph);
        if (!d || !is_orientation_of(*d, ng.graph)) {
            ++failures;
            continue;
        }
        bool ok = true;
        if (exact_chi(*d, ok) < 2 || !ok) ++failures;
    }
    return {failures == 0 && considered > 0,
            std::to_string(considered) + " connected graphs with chi >= 3, " + std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- 2
TwinFamily prefix(const TwinFamily& fam, std::size_t m) {
    TwinFamily out(fam.member(0), fam.root());
    const auto& base = fam.member(0).labels;
    for (std::size_t j = 1; j < m; ++j) {
        std::vector<Label> image;
        for (Label l : base) image.push_back(fam.psi(0, j, l));
        out.add_member(fam.member(j), image);
    }
    return out;
}

Outcome lemma_suite() {
    std::size_t families_checked = 0;
    std::size_t violations = 0;
    std::mt19937_64 rng(0x1e22a21);
    for (std::size_t k : {3U, 4U, 5U}) {
        for (int i = 0; i < 500; ++i) {
            TwinFamily fam = [&] {
                if (i % 2 == 0) return families::random_twin_family(k, k + 3, 15, rng).family;
                const std::size_t n = 2 + rng() % 14;
                const auto base = random_digraph(n, 0.35, rng(), k + 1);
                std::vector<Vertex> root;
                for (Vertex v = 0; v + 1 < n; ++v) {
                    if (rng() % 3 == 0) root.push_back(v);
                }
                return make_twin_family(base, root, k + 3);
            }();
            ++families_checked;
            const auto& member = fam.member(0).digraph;
            const auto gm = digirth(member);
            if ((gm && *gm <= k) || member.order() > 15 || fam.violation()) {
                ++violations;
                continue;
            }

            const auto u = amalgamate(fam);
            if (const auto g = digirth(u.digraph); g && *g <= k) ++violations;
            for (Label l : fam.member(0).labels) {
                for (std::size_t a = 0; a < fam.size(); ++a) {
                    for (std::size_t b = 0; b < fam.size(); ++b) {
                        const auto va = *u.index_of(fam.psi(0, a, l));
                        const auto vb = *u.index_of(fam.psi(0, b, l));
                        if (!no_short_twin_path(u.digraph, va, vb, k)) ++violations;
                    }
                }
            }

            std::vector<Label> non_root;
            for (Label l : fam.member(0).labels) {
                if (!std::binary_search(fam.root().begin(), fam.root().end(), l)) non_root.push_back(l);
            }
            const Label alpha = non_root[rng() % non_root.size()];
            for (std::size_t m = k + 1; m <= k + 3; ++m) {
                const auto sub = prefix(fam, m);
                std::vector<Label> reps;
                for (std::size_t j = 0; j < m; ++j) reps.push_back(sub.psi(0, j, alpha));
                const auto c = cycle_amalgamate(sub, reps, k).digraph;
                const auto g = digirth(c);
                if (!g || *g <= k) ++violations;
                if (!find_embedding(directed_cycle(m), c)) ++violations;
            }
        }
    }
    return {violations == 0, std::to_string(families_checked) + " families (k = 3,4,5; m = k+1..k+3), " +
                                 std::to_string(violations) + " violations"};
}

// ---------------------------------------------------------------- 3
Outcome rev_invariance() {
    std::mt19937_64 rng(0x4e5);
    std::size_t mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 12;
        const double p = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
        const auto d = oracle::random_digraph(n, p, rng);
        bool ok = true;
        if (exact_chi(d, ok) != exact_chi(reverse(d), ok) || !ok) ++mismatches;
    }
    return {mismatches == 0, "200 digraphs, n <= 12, " + std::to_string(mismatches) + " mismatches"};
}

// ---------------------------------------------------------------- 4
Outcome arc_bipartitions() {
    std::mt19937_64 rng(0xb1);
    std::size_t failures = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 30;
        const auto d = oracle::random_digraph(n, std::uniform_real_distribution<double>(0.1, 1.0)(rng), rng);
        for (int o = 0; o < 3; ++o) {
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), Vertex{0});
            std::shuffle(order.begin(), order.end(), rng);
            const auto b = arc_bipartition(d, std::span<const Vertex>(order));
            if (b.forward.size() + b.backward.size() != d.size()) ++failures;
            if (!is_acyclic(Digraph(n, b.forward)).acyclic || !is_acyclic(Digraph(n, b.backward)).acyclic) ++failures;
        }
    }
    return {failures == 0, "500 digraphs x 3 orders, n <= 30, " + std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- 5
Outcome compactness() {
    std::mt19937_64 rng(0xc0c0);
    std::size_t failures = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng() % 9;
        const auto d = oracle::random_digraph(n, std::uniform_real_distribution<double>(0.3, 1.0)(rng), rng);
        bool ok = true;
        const auto k = exact_chi(d, ok);
        if (!ok || max_dichromatic_over_induced(d, n) != k) ++failures;
        for (int w = 0; w < 50; ++w) {
            std::vector<Vertex> subset;
            for (Vertex v = 0; v < n; ++v) {
                if (rng() % 2) subset.push_back(v);
            }
            if (exact_chi(induced(d, subset).digraph, ok) > k || !ok) ++failures;
        }
    }
    return {failures == 0, "100 digraphs, n <= 9, 50 subsets each, " + std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- 6
Outcome definitional_identity() {
    std::mt19937_64 rng(0xde);
    std::vector<Digraph> cycles;
    for (std::size_t len = 3; len <= 7; ++len) cycles.push_back(directed_cycle(len));
    std::size_t disagreements = 0;
    std::size_t holds = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng() % 7;
        const auto d = oracle::random_digraph(n, std::uniform_real_distribution<double>(0.3, 1.0)(rng), rng);
        bool ok = true;
        const auto k = exact_chi(d, ok);
        if (!ok) ++disagreements;
        for (std::size_t r : {1U, 2U}) {
            const auto rep = arrows_any(d, cycles, r);
            if (rep.holds != (k > r)) ++disagreements;
            if (rep.holds) ++holds;
            if (!rep.holds && !verify_arrow_witness(d, cycles, r, *rep.witness_colouring)) ++disagreements;
        }
    }
    return {disagreements == 0, "100 digraphs, n <= 7, r in {1,2}, " + std::to_string(holds) +
                                    " relations hold, " + std::to_string(disagreements) + " disagreements"};
}

// ---------------------------------------------------------------- 7
std::optional<nlohmann::json> run_oracle_script() {
#if defined(DICHRO_PYTHON) && defined(DICHRO_ORACLE_SCRIPT)
    const std::string cmd = std::string("\"") + DICHRO_PYTHON + "\" \"" + DICHRO_ORACLE_SCRIPT + "\"";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    if (pclose(pipe) != 0) return std::nullopt;
    try {
        return nlohmann::json::parse(out);
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
#else
    return std::nullopt;
#endif
}

Outcome small_complete_dchr() {
    std::size_t values[2] = {0, 0};
    bool ok = true;
    for (std::size_t n : {3U, 4U}) {
        const auto g = complete_graph(n);
        OrientationStream stream(g);
        std::size_t best = 0;
        while (auto d = stream.next()) best = std::max(best, exact_chi(*d, ok));
        DchrOptions o;
        o.mode = DchrMode::Exhaustive;
        const auto r = dchr(g, o);
        if (!r.exhaustive || r.value != best || !is_orientation_of(r.witness, g) || exact_chi(r.witness, ok) != best) {
            ok = false;
        }
        values[n - 3] = best;
    }
    const auto oracle = run_oracle_script();
    std::string detail = "dchr(K3) = " + std::to_string(values[0]) + ", dchr(K4) = " + std::to_string(values[1]);
    if (!oracle) return {false, detail + "; oracle script unavailable"};
    const bool agree = (*oracle)["K3"] == values[0] && (*oracle)["K4"] == values[1];
    detail += agree ? "; oracle script agrees" : "; oracle script disagrees: " + oracle->dump();
    return {ok && agree && values[0] == 2 && values[1] == 2, detail};
}

// ---------------------------------------------------------------- 8
Outcome sparse_sampler() {
    std::size_t failures = 0;
    double slowest = 0;
    for (std::size_t k : {3U, 4U, 5U}) {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const auto start = std::chrono::steady_clock::now();
            const auto d = sparse_sample(100, k, seed);
            const auto g = digirth(d);
            SolveOptions o;
            o.budget = 1;
            const auto r = dichromatic_number(d, o);
            const double secs = Seconds(std::chrono::steady_clock::now() - start).count();
            slowest = std::max(slowest, secs);
            if (d.order() < 100 || g != k + 1 || r.lower_bound < 2 || secs >= 10.0) ++failures;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", slowest);
    return {failures == 0, "150 samples, " + std::to_string(failures) + " failures, slowest " + buf + " s (< 10 s)"};
}

// ---------------------------------------------------------------- 9
Outcome certificate_mutation() {
    std::mt19937_64 rng(0x9e7);
    struct Case {
        Json cert;
        std::optional<Digraph> d;
        std::optional<Graph> g;
        std::string instance;
    };
    std::vector<Case> cases;
    RunManifest manifest;
    manifest.command_line = "acceptance";
    const Digraph c3[] = {directed_cycle(3)};
    for (int i = 0; i < 40; ++i) {
        const auto d = oracle::random_digraph(3 + rng() % 8, 0.6, rng);
        const auto s = serialize(d);
        cases.push_back({dichromatic_certificate(d, *dichromatic_number(d).certificate, manifest), d, {}, s});
        cases.push_back({bipartition_certificate(d, arc_bipartition(d), manifest), d, {}, s});
        const auto rep = arrows(d, c3[0], 2);
        if (!rep.holds) cases.push_back({arrow_certificate(d, c3, 2, *rep.witness_colouring, manifest), d, {}, s});
        const auto g = oracle::random_graph(3 + rng() % 8, 0.5, rng);
        cases.push_back({chromatic_certificate(g, *chromatic_number(g).certificate, manifest), {}, g, serialize(g)});
    }

    std::size_t rejected_ok = 0;
    std::size_t errors = 0;
    std::size_t still_valid = 0;
    for (const auto& c : cases) {
        if (!verify_certificate_text(emit_certificate(c.cert), c.instance).ok) ++errors;
    }
    std::size_t attempts = 0;
    while (rejected_ok + errors < 1000 && attempts < 100000) {
        ++attempts;
        const auto& c = cases[rng() % cases.size()];
        const auto bad = certs::mutate(c.cert, rng);
        const bool accepted = verify_certificate(bad, c.instance).ok;
        const bool valid = certs::valid(bad, c.cert, c.d ? &*c.d : nullptr, c.g ? &*c.g : nullptr);
        if (valid) {
            // The change kept every invariant; not a corruption.
            ++still_valid;
            if (!accepted) ++errors;
            continue;
        }
        if (accepted) {
            ++errors;
        } else {
            ++rejected_ok;
        }
    }
    return {errors == 0 && rejected_ok == 1000,
            std::to_string(cases.size()) + " valid certificates accepted; " + std::to_string(rejected_ok) +
                " corruptions rejected; " + std::to_string(still_valid) + " invariant-preserving edits accepted; " +
                std::to_string(errors) + " errors"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "f(2)=3 exhaustive check", 300, f2_equals_3},
        {2, "twin amalgamation property suite", 120, lemma_suite},
        {3, "rev-invariance", 120, rev_invariance},
        {4, "arc bipartition", 60, arc_bipartitions},
        {5, "finite compactness/monotonicity", 300, compactness},
        {6, "definitional identity", 300, definitional_identity},
        {7, "dchr small-complete values", 120, small_complete_dchr},
        {8, "sparse sampler", 1500, sparse_sampler},
        {9, "certificate soundness under mutation", 60, certificate_mutation},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = Seconds(std::chrono::steady_clock::now() - start).count();
        const bool pass = out.pass && secs < c.limit_seconds;
        if (!pass) ++failed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << out.detail << " ("
                  << timing << ")" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
