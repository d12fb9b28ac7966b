#ifndef GB_BITSET_HPP
#define GB_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace gb {

// Fixed-capacity dynamic bitset. Adjacency rows and vertex sets use this;
// all set algebra the solvers need is word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference: *this \ o
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Lowest set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>((wi << 6) + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static Bitset of(int nbits, const std::vector<int>& members) {
        Bitset b(nbits);
        for (int v : members) b.set(v);
        return b;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    // Lexicographic order on member lists; used for deterministic sorting
    // of vertex sets.
    bool lex_less(const Bitset& o) const {
        int a = next(0), b = o.next(0);
        while (a != -1 && b != -1) {
            if (a != b) return a < b;
            a = next(a + 1);
            b = o.next(b + 1);
        }
        return a == -1 && b != -1;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gb

#endif
