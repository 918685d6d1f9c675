#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace crosscomp::detail {

// Fixed-width dynamic bitset for the solvers' inner loops.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size) : words_((size + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    bool none() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    /// Lowest set bit at or after `from`, or -1.
    int next(int from) const {
        int wi = from >> 6;
        if (wi >= static_cast<int>(words_.size()))
            return -1;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size()))
                return -1;
            w = words_[wi];
        }
    }
    int first() const { return next(0); }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    /// Clears bits 0..i inclusive.
    void clear_through(int i) {
        for (int wi = 0; wi < (i >> 6); ++wi)
            words_[wi] = 0;
        int r = i & 63;
        std::uint64_t keep = r == 63 ? 0 : (~std::uint64_t{0} << (r + 1));
        words_[i >> 6] &= keep;
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace crosscomp::detail
