#include "dichro/amalgam.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace dichro {

LabeledDigraph LabeledDigraph::identity(Digraph d) {
    std::vector<Label> labels(d.order());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    return {std::move(d), std::move(labels)};
}

std::optional<Vertex> LabeledDigraph::index_of(Label l) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) return std::nullopt;
    return static_cast<Vertex>(it - labels.begin());
}

// ---------------------------------------------------------------- TwinFamily

TwinFamily::TwinFamily(LabeledDigraph base, std::vector<Label> root) : root_(std::move(root)) {
    std::sort(root_.begin(), root_.end());
    root_.erase(std::unique(root_.begin(), root_.end()), root_.end());
    images_.push_back(base.labels);
    members_.push_back(std::move(base));
}

void TwinFamily::add_member(LabeledDigraph member, std::vector<Label> image) {
    members_.push_back(std::move(member));
    images_.push_back(std::move(image));
}

Label TwinFamily::psi(std::size_t i, std::size_t j, Label label) const {
    const auto idx = members_.at(i).index_of(label);
    if (!idx) throw std::out_of_range("psi: label " + std::to_string(label) + " not in member " + std::to_string(i));
    // images_[i] is a bijection from base indices onto V_i; invert it.
    const auto& img_i = images_.at(i);
    const auto it = std::find(img_i.begin(), img_i.end(), label);
    const auto base_index = static_cast<std::size_t>(it - img_i.begin());
    return images_.at(j).at(base_index);
}

std::optional<std::string> TwinFamily::violation() const {
    const std::size_t m = members_.size();
    const auto& base = members_.front();

    for (std::size_t j = 0; j < m; ++j) {
        const auto& mem = members_[j];
        if (mem.labels.size() != mem.digraph.order()) {
            return "member " + std::to_string(j) + ": label count differs from vertex count";
        }
        if (!std::is_sorted(mem.labels.begin(), mem.labels.end()) ||
            std::adjacent_find(mem.labels.begin(), mem.labels.end()) != mem.labels.end()) {
            return "member " + std::to_string(j) + ": labels not strictly increasing";
        }
        for (Label r : root_) {
            if (!mem.index_of(r)) return "root label " + std::to_string(r) + " missing from member " + std::to_string(j);
        }
    }

    // V_i ∩ V_j = R: root labels occur in every member, all others in exactly one.
    std::unordered_map<Label, std::size_t> occurrences;
    for (const auto& mem : members_) {
        for (Label l : mem.labels) ++occurrences[l];
    }
    for (const auto& [label, count] : occurrences) {
        const bool in_root = std::binary_search(root_.begin(), root_.end(), label);
        if (!in_root && count > 1) {
            return "members share non-root label " + std::to_string(label);
        }
    }

    for (std::size_t j = 0; j < m; ++j) {
        const auto& mem = members_[j];
        const auto& image = images_[j];
        if (image.size() != base.digraph.order() || mem.digraph.order() != base.digraph.order()) {
            return "psi_{0," + std::to_string(j) + "}: size mismatch";
        }
        std::vector<Vertex> to_index(image.size());
        std::vector<char> hit(mem.digraph.order(), 0);
        for (std::size_t i = 0; i < image.size(); ++i) {
            const auto idx = mem.index_of(image[i]);
            if (!idx || hit[*idx]) return "psi_{0," + std::to_string(j) + "}: not a bijection";
            hit[*idx] = 1;
            to_index[i] = *idx;
            const bool in_root = std::binary_search(root_.begin(), root_.end(), base.labels[i]);
            if (in_root && image[i] != base.labels[i]) {
                return "psi_{0," + std::to_string(j) + "}: not the identity on the root";
            }
        }
        if (mem.digraph.size() != base.digraph.size()) {
            return "psi_{0," + std::to_string(j) + "}: arc counts differ";
        }
        for (const auto& a : base.digraph.arcs()) {
            if (!mem.digraph.has_arc(to_index[a.tail], to_index[a.head])) {
                return "psi_{0," + std::to_string(j) + "}: not a digraph isomorphism";
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- twins

TwinCopy make_twin(const Digraph& d, std::span<const Vertex> root, Label offset) {
    std::vector<char> in_root(d.order(), 0);
    for (Vertex r : root) {
        if (r >= d.order()) throw std::invalid_argument("make_twin: root vertex out of range");
        in_root[r] = 1;
    }
    std::vector<Label> image(d.order());
    Label next = offset;
    for (Vertex v = 0; v < d.order(); ++v) {
        image[v] = in_root[v] ? Label{v} : next++;
    }
    if (next > offset) {
        for (Vertex r : root) {
            if (r >= offset && r < next) throw std::invalid_argument("make_twin: fresh labels collide with root");
        }
    }

    std::vector<Label> labels = image;
    std::sort(labels.begin(), labels.end());
    std::vector<Vertex> to_index(d.order());
    for (Vertex v = 0; v < d.order(); ++v) {
        to_index[v] = static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), image[v]) - labels.begin());
    }
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const auto& a : d.arcs()) arcs.push_back({to_index[a.tail], to_index[a.head]});

    return {{Digraph(d.order(), arcs), std::move(labels)}, std::move(image)};
}

TwinFamily make_twin_family(const Digraph& d, std::span<const Vertex> root, std::size_t copies) {
    std::vector<Label> root_labels(root.begin(), root.end());
    TwinFamily family(LabeledDigraph::identity(d), root_labels);
    std::vector<char> in_root(d.order(), 0);
    for (Vertex r : root) {
        if (r >= d.order()) throw std::invalid_argument("make_twin_family: root vertex out of range");
        in_root[r] = 1;
    }
    const auto fresh = static_cast<Label>(std::count(in_root.begin(), in_root.end(), 0));
    for (std::size_t j = 1; j < copies; ++j) {
        auto twin = make_twin(d, root, d.order() + (j - 1) * fresh);
        family.add_member(std::move(twin.copy), std::move(twin.image));
    }
    return family;
}

// ---------------------------------------------------------------- amalgamation

namespace {

struct Merged {
    std::vector<Label> labels;
    DigraphBuilder builder;
};

Merged merge_members(const TwinFamily& family) {
    std::vector<Label> labels;
    for (std::size_t j = 0; j < family.size(); ++j) {
        const auto& l = family.member(j).labels;
        labels.insert(labels.end(), l.begin(), l.end());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    DigraphBuilder builder(labels.size());
    auto index = [&](Label l) {
        return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    for (std::size_t j = 0; j < family.size(); ++j) {
        const auto& mem = family.member(j);
        for (const auto& a : mem.digraph.arcs()) {
            const Vertex u = index(mem.labels[a.tail]);
            const Vertex v = index(mem.labels[a.head]);
            if (!builder.contains(u, v)) builder.add_arc(u, v);
        }
    }
    return {std::move(labels), std::move(builder)};
}

void require_valid(const TwinFamily& family) {
    if (family.size() == 0) throw AmalgamError(AmalgamErrorKind::InvalidFamily, "empty twin family");
    if (auto why = family.violation()) throw AmalgamError(AmalgamErrorKind::InvalidFamily, *why);
}

}  // namespace

LabeledDigraph amalgamate(const TwinFamily& family, const AmalgamOptions& options) {
    if (!options.unchecked) require_valid(family);
    auto merged = merge_members(family);
    return {std::move(merged.builder).build(), std::move(merged.labels)};
}

LabeledDigraph cycle_amalgamate(const TwinFamily& family, std::span<const Label> reps, std::size_t k,
                                const AmalgamOptions& options) {
    const std::size_t m = family.size();
    if (m <= k || m < 3) {
        throw AmalgamError(AmalgamErrorKind::TooFewCopies,
                           "cycle amalgamation needs more than k copies (m=" + std::to_string(m) +
                               ", k=" + std::to_string(k) + ")");
    }
    if (reps.size() != m) throw AmalgamError(AmalgamErrorKind::InvalidReps, "need one representative per member");

    if (!options.unchecked) {
        require_valid(family);
        const auto g = digirth(family.member(0).digraph);
        if (g && *g <= k) {
            throw AmalgamError(AmalgamErrorKind::InvalidFamily,
                               "member digirth " + std::to_string(*g) + " is not > k=" + std::to_string(k));
        }
    }

    const auto& root = family.root();
    for (std::size_t i = 0; i < m; ++i) {
        if (!family.member(i).index_of(reps[i])) {
            throw AmalgamError(AmalgamErrorKind::InvalidReps, "representative " + std::to_string(i) + " not in its member");
        }
        if (std::binary_search(root.begin(), root.end(), reps[i])) {
            throw AmalgamError(AmalgamErrorKind::InvalidReps, "representative " + std::to_string(i) + " lies in the root");
        }
        if (family.psi(0, i, reps[0]) != reps[i]) {
            throw AmalgamError(AmalgamErrorKind::InvalidReps, "representatives are not coherent under psi");
        }
    }

    auto merged = merge_members(family);
    auto index = [&](Label l) {
        return static_cast<Vertex>(std::lower_bound(merged.labels.begin(), merged.labels.end(), l) -
                                   merged.labels.begin());
    };
    for (std::size_t i = 0; i < m; ++i) {
        merged.builder.add_arc(index(reps[i]), index(reps[(i + 1) % m]));
    }
    return {std::move(merged.builder).build(), std::move(merged.labels)};
}

bool no_short_twin_path(const Digraph& d, Vertex alpha, Vertex alpha_prime, std::size_t k) {
    if (alpha >= d.order() || alpha_prime >= d.order()) {
        throw std::out_of_range("no_short_twin_path: vertex out of range");
    }
    if (alpha == alpha_prime) return true;
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(d.order(), unreached);
    std::vector<Vertex> queue{alpha};
    dist[alpha] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        if (dist[u] >= k) break;
        for (Vertex w : d.out(u)) {
            if (dist[w] != unreached) continue;
            if (w == alpha_prime) return false;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return true;
}

}  // namespace dichro
