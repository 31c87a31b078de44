#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#include <bit>
#endif

namespace pact {

// Subset of a fixed finite universe (the point list of a space), packed into words.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static Bits full(std::size_t universe) {
        Bits b(universe);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // this ⊇ other
    bool contains(const Bits& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (other.w_[i] & ~w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    Bits operator|(const Bits& o) const {
        Bits r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    Bits operator&(const Bits& o) const {
        Bits r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits complement() const {
        Bits r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t b = 0; b < w_.size(); ++b) {
            std::uint64_t w = w_[b];
            while (w) {
                const int k = std::countr_zero(w);
                f(b * 64 + static_cast<std::size_t>(k));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(static_cast<int>(i)); });
        return v;
    }

    // Order matching lexicographic comparison of the sorted member lists;
    // with points stored sorted this equals lexicographic order on point names.
    static bool lex_less(const Bits& a, const Bits& b) {
        std::size_t ia = 0, ib = 0;
        const std::size_t n = a.n_;
        while (true) {
            while (ia < n && !a.test(ia)) ++ia;
            while (ib < n && !b.test(ib)) ++ib;
            if (ib == n) return false;      // b exhausted: a >= b
            if (ia == n) return true;       // a is a strict prefix
            if (ia != ib) return ia < ib;
            ++ia;
            ++ib;
        }
    }

    struct Hash {
        std::size_t operator()(const Bits& b) const {
            std::size_t h = b.n_ * 0x9e3779b97f4a7c15ull;
            for (auto w : b.w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };

private:
    void trim() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (~std::uint64_t{0}) >> (64 - n_ % 64);
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace pact
