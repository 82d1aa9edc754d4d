#include "dichro/arrow.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "vertex_set.hpp"

namespace dichro {

namespace {

enum class Combine { Any, Single };

class ArrowSearch {
public:
    ArrowSearch(const Digraph& d, std::span<const Digraph> targets, std::size_t r, const ArrowOptions& options)
        : d_(d),
          targets_(targets),
          r_(r),
          options_(options),
          classes_(r),
          colour_(d.order(), 0),
          memo_(targets.size()),
          allowed_(d.order(), 0) {}

    ArrowReport run() {
        ArrowReport report;
        const bool found = colour_from(0, 0);
        report.holds = !found;
        if (found) report.witness_colouring = colour_;
        report.checked_colourings = nodes_;
        return report;
    }

private:
    static constexpr std::size_t memo_limit = 1U << 22;

    bool contains_target(detail::Mask64 cls) {
        const std::size_t size = cls.count();
        for (std::size_t t = 0; t < targets_.size(); ++t) {
            const Digraph& target = targets_[t];
            if (target.order() > size) continue;
            auto& memo = memo_[t];
            if (auto it = memo.find(cls.raw()); it != memo.end()) {
                if (it->second) return true;
                continue;
            }
            std::fill(allowed_.begin(), allowed_.end(), 0);
            cls.for_each([&](Vertex v) { allowed_[v] = 1; });
            const bool hit = find_embedding(target, d_, allowed_).has_value();
            if (memo.size() >= memo_limit) memo.clear();
            memo.emplace(cls.raw(), hit);
            if (hit) return true;
        }
        return false;
    }

    // Colour 0 goes to vertex 0 and colour c+1 first appears after colour c.
    bool colour_from(Vertex v, std::size_t used) {
        if (++nodes_ > options_.node_cap) {
            throw CapExceeded("arrow search exceeded node cap " + std::to_string(options_.node_cap));
        }
        if (v == d_.order()) return true;
        const std::size_t limit = std::min(used + 1, r_);
        for (std::size_t c = 0; c < limit; ++c) {
            detail::Mask64 next = classes_[c];
            next.set(v);
            if (contains_target(next)) continue;
            classes_[c] = next;
            colour_[v] = static_cast<std::uint32_t>(c);
            if (colour_from(v + 1, std::max(used, c + 1))) return true;
            classes_[c].reset(v);
        }
        return false;
    }

    const Digraph& d_;
    std::span<const Digraph> targets_;
    std::size_t r_;
    ArrowOptions options_;
    std::vector<detail::Mask64> classes_;
    std::vector<std::uint32_t> colour_;
    std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
    std::vector<std::uint8_t> allowed_;
    std::uint64_t nodes_ = 0;
};

void check_arguments(const Digraph& d, std::size_t r) {
    if (r == 0) throw std::invalid_argument("arrows: r must be at least 1");
    if (!detail::Mask64::fits(d.order())) {
        throw CapExceeded("arrows: " + std::to_string(d.order()) + " vertices exceeds the 64-vertex search limit");
    }
}

}  // namespace

ArrowReport arrows(const Digraph& d, const Digraph& target, std::size_t r, const ArrowOptions& options) {
    return arrows_any(d, std::span<const Digraph>(&target, 1), r, options);
}

ArrowReport arrows_any(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                       const ArrowOptions& options) {
    check_arguments(d, r);
    // The empty digraph sits inside every class, even an empty one.
    if (std::any_of(targets.begin(), targets.end(), [](const Digraph& t) { return t.order() == 0; })) {
        return ArrowReport{true, std::nullopt, 0, std::nullopt};
    }
    return ArrowSearch(d, targets, r, options).run();
}

ArrowReport arrows_all(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                       const ArrowOptions& options) {
    check_arguments(d, r);
    ArrowReport total{true, std::nullopt, 0, std::nullopt};
    for (std::size_t t = 0; t < targets.size(); ++t) {
        auto rep = arrows(d, targets[t], r, options);
        total.checked_colourings += rep.checked_colourings;
        if (!rep.holds) {
            total.holds = false;
            total.witness_colouring = std::move(rep.witness_colouring);
            total.failed_target = t;
            return total;
        }
    }
    return total;
}

bool verify_arrow_witness(const Digraph& d, std::span<const Digraph> targets, std::size_t r,
                          std::span<const std::uint32_t> colouring) {
    if (colouring.size() != d.order() || r == 0) return false;
    for (auto c : colouring) {
        if (c >= r) return false;
    }
    for (const auto& t : targets) {
        if (t.order() == 0) return false;
    }
    std::vector<std::uint8_t> allowed(d.order());
    for (std::uint32_t c = 0; c < r; ++c) {
        for (Vertex v = 0; v < d.order(); ++v) allowed[v] = colouring[v] == c ? 1 : 0;
        for (const auto& t : targets) {
            if (find_embedding(t, d, allowed)) return false;
        }
    }
    return true;
}

}  // namespace dichro
