#pragma once

// Bit-row vertex sets. Mask64 is the n <= 64 fast path; DynMask covers any n.
// Both expose the same interface so search code can be templated on the set.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro::detail {

class Mask64 {
public:
    Mask64() = default;
    explicit Mask64(std::size_t /*n*/) {}

    static constexpr bool fits(std::size_t n) { return n <= 64; }

    void set(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void reset(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    bool test(Vertex v) const { return (bits_ >> v) & 1U; }
    bool any() const { return bits_ != 0; }
    bool none() const { return bits_ == 0; }
    std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    void clear() { bits_ = 0; }

    Mask64& operator&=(const Mask64& o) { bits_ &= o.bits_; return *this; }
    Mask64& operator|=(const Mask64& o) { bits_ |= o.bits_; return *this; }
    Mask64& andnot(const Mask64& o) { bits_ &= ~o.bits_; return *this; }
    bool intersects(const Mask64& o) const { return (bits_ & o.bits_) != 0; }
    bool operator==(const Mask64& o) const = default;

    // Removes and returns the lowest member. Requires any().
    Vertex pop_first() {
        const auto v = static_cast<Vertex>(std::countr_zero(bits_));
        bits_ &= bits_ - 1;
        return v;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(static_cast<Vertex>(std::countr_zero(b)));
        }
    }

    std::uint64_t raw() const { return bits_; }

private:
    std::uint64_t bits_ = 0;
};

class DynMask {
public:
    DynMask() = default;
    explicit DynMask(std::size_t n) : words_((n + 63) / 64, 0) {}

    static constexpr bool fits(std::size_t) { return true; }

    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    bool any() const {
        for (auto w : words_) {
            if (w != 0) return true;
        }
        return false;
    }
    bool none() const { return !any(); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    DynMask& operator&=(const DynMask& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynMask& operator|=(const DynMask& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynMask& andnot(const DynMask& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    bool intersects(const DynMask& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & o.words_[i]) != 0) return true;
        }
        return false;
    }
    bool operator==(const DynMask& o) const = default;

    Vertex pop_first() {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) {
                const auto v = static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
                words_[i] &= words_[i] - 1;
                return v;
            }
        }
        return 0;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::uint64_t b = words_[i]; b != 0; b &= b - 1) {
                f(static_cast<Vertex>(i * 64 + std::countr_zero(b)));
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

template <class Set>
struct BitRows {
    std::vector<Set> out;
    std::vector<Set> in;

    explicit BitRows(const Digraph& d) : out(d.order(), Set(d.order())), in(d.order(), Set(d.order())) {
        for (const auto& a : d.arcs()) {
            out[a.tail].set(a.head);
            in[a.head].set(a.tail);
        }
    }
};

// Calls f.template operator()<Set>() with the narrowest set type that fits n.
template <class F>
decltype(auto) with_vertex_set(std::size_t n, F&& f) {
    if (Mask64::fits(n)) return f.template operator()<Mask64>();
    return f.template operator()<DynMask>();
}

}  // namespace dichro::detail
