#pragma once

// Twin families and digirth-preserving amalgamation.
//
// A twin family is a list of isomorphic digraphs D_0..D_{m-1} on label sets
// V_0..V_{m-1} with V_i ∩ V_j = R for i != j and isomorphisms psi_{i,j} fixing
// R pointwise. If every member has digirth > k then so does their union, and
// so does the union augmented by a directed m-cycle through coherent
// representatives provided m > k.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

using Label = std::uint64_t;

// A digraph whose vertex i carries labels[i]; labels strictly increasing.
struct LabeledDigraph {
    Digraph digraph;
    std::vector<Label> labels;

    static LabeledDigraph identity(Digraph d);

    // Index of a label, or nullopt.
    std::optional<Vertex> index_of(Label l) const;
};

enum class AmalgamErrorKind { InvalidFamily, TooFewCopies, InvalidReps };

class AmalgamError : public std::runtime_error {
public:
    AmalgamError(AmalgamErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    AmalgamErrorKind kind() const noexcept { return kind_; }

private:
    AmalgamErrorKind kind_;
};

// Stores psi_{0,j} for each member; psi_{i,j} = psi_{0,j} ∘ psi_{0,i}^{-1}, so
// coherence holds by construction.
class TwinFamily {
public:
    TwinFamily(LabeledDigraph base, std::vector<Label> root);

    // image[i] = psi_{0,j}(base.labels[i]) for the new member j.
    void add_member(LabeledDigraph member, std::vector<Label> image);

    std::size_t size() const noexcept { return members_.size(); }
    const LabeledDigraph& member(std::size_t i) const { return members_.at(i); }
    const std::vector<Label>& root() const noexcept { return root_; }

    // psi_{i,j}(label); throws std::out_of_range if label is not in V_i.
    Label psi(std::size_t i, std::size_t j, Label label) const;

    // Describes the first violated invariant, or nullopt when the family is valid.
    std::optional<std::string> violation() const;

private:
    std::vector<Label> root_;
    std::vector<LabeledDigraph> members_;
    std::vector<std::vector<Label>> images_;  // images_[j][i] = psi_{0,j}(base label i)
};

struct TwinCopy {
    LabeledDigraph copy;
    // image[v] = label of the copy of vertex v.
    std::vector<Label> image;
};

// Copy of d (labels = vertex indices) that agrees on root and sends the
// non-root vertices, in increasing order, to offset, offset+1, ...
// Throws std::invalid_argument if root has out-of-range vertices or the fresh
// labels collide with root labels.
TwinCopy make_twin(const Digraph& d, std::span<const Vertex> root, Label offset);

// d as member 0 plus copies-1 twins placed on consecutive fresh label blocks.
TwinFamily make_twin_family(const Digraph& d, std::span<const Vertex> root, std::size_t copies);

struct AmalgamOptions {
    // Skip family validation and the up-front member digirth check.
    bool unchecked = false;
};

// Union of the members over the merged label set, relabeled densely in label order.
LabeledDigraph amalgamate(const TwinFamily& family, const AmalgamOptions& options = {});

// Union plus the arcs reps[i] -> reps[i+1] and reps[m-1] -> reps[0].
// reps are labels, reps[i] in V_i \ R with reps[j] = psi_{0,j}(reps[0]).
LabeledDigraph cycle_amalgamate(const TwinFamily& family, std::span<const Label> reps, std::size_t k,
                                const AmalgamOptions& options = {});

// True iff no directed path of length 1..k leads from alpha to alpha_prime.
// Paths are simple, so alpha == alpha_prime is vacuously true.
bool no_short_twin_path(const Digraph& d, Vertex alpha, Vertex alpha_prime, std::size_t k);

}  // namespace dichro
