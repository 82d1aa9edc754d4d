#pragma once

// JSON certificates and the reproducibility manifest.
//
// Every certificate is an object whose first field is "kind" and whose last
// field is "manifest". verify_certificate re-checks a certificate against an
// instance file with plain digraph primitives; it never calls a solver.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dichro/digraph.hpp"
#include "dichro/partition.hpp"

namespace dichro {

using Json = nlohmann::ordered_json;

std::string artifact_version();

struct RunManifest {
    std::string command_line;
    std::vector<std::uint64_t> seeds;
    Json parameters = Json::object();
    double wall_seconds = 0.0;
    std::string version = artifact_version();
};

Json to_json(const RunManifest& manifest);

// Order, size and FNV-1a 64 of the canonical serialization.
struct InstanceFingerprint {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t hash = 0;

    bool operator==(const InstanceFingerprint&) const = default;
};

InstanceFingerprint fingerprint(const Digraph& d);
InstanceFingerprint fingerprint(const Graph& g);
Json to_json(const InstanceFingerprint& fp);

Json dichromatic_certificate(const Digraph& d, const AcyclicPartition& cert, const RunManifest& manifest);
Json chromatic_certificate(const Graph& g, const ColourPartition& cert, const RunManifest& manifest);
Json bipartition_certificate(const Digraph& d, const ArcBipartition& cert, const RunManifest& manifest);
// A colouring of D with r colours in which no class contains any of targets.
Json arrow_certificate(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                       std::span<const std::uint32_t> colouring, const RunManifest& manifest);

Json digraph_to_json(const Digraph& d);

// Pretty-printed with a trailing newline.
std::string emit_certificate(const Json& cert);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> diagnostics;
};

// A malformed certificate is rejected with a diagnostic. The instance is
// parsed as a digraph or graph according to the certificate kind; a
// malformed instance throws ParseError.
VerifyResult verify_certificate_text(std::string_view certificate_text, std::string_view instance_text);
VerifyResult verify_certificate(const Json& certificate, std::string_view instance_text);

}  // namespace dichro
