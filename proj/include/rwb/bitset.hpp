#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rwb {

// Fixed-capacity bitset sized at construction. Word-level compare keeps
// table equality and ordering cheap during canonicalization.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rwb
