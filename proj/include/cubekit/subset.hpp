#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cubekit {

/// A subset of a domain {0, ..., width-1} stored as packed 64-bit words.
///
/// The width itself is not stored: two subsets are only comparable when they
/// were created for the same width (same word count). Up to 64 elements the
/// storage is inline.
class Subset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Subset() = default;

    /// Empty subset of a `width`-element domain.
    explicit Subset(std::size_t width) : words_(word_count_for(width), Word{0}) {}

    static std::size_t word_count_for(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

    static Subset full(std::size_t width) {
        Subset s(width);
        for (std::size_t i = 0; i < s.words_.size(); ++i) {
            s.words_[i] = ~Word{0};
        }
        s.trim(width);
        return s;
    }

    static Subset singleton(std::size_t width, std::size_t element) {
        Subset s(width);
        s.set(element);
        return s;
    }

    /// Subset whose first 64 elements are given by `mask`.
    static Subset from_mask(std::size_t width, Word mask) {
        Subset s(width);
        if (!s.words_.empty()) {
            s.words_[0] = mask;
            s.trim(width);
        }
        return s;
    }

    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1}; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (Word w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    [[nodiscard]] bool empty() const {
        for (Word w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool is_subset_of(const Subset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~other.words_[i]) != 0) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool intersects(const Subset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & other.words_[i]) != 0) {
                return true;
            }
        }
        return false;
    }

    /// Complement relative to a `width`-element domain.
    [[nodiscard]] Subset complement(std::size_t width) const {
        Subset s = *this;
        for (auto& w : s.words_) {
            w = ~w;
        }
        s.trim(width);
        return s;
    }

    Subset& operator&=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Subset& operator|=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Subset& operator^=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    Subset& operator-=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }
    friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

    friend bool operator==(const Subset& a, const Subset& b) { return a.words_ == b.words_; }

    /// Calls `fn(i)` for every member index in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                fn(w * kWordBits + bit);
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// Index of the smallest member; undefined on the empty set.
    [[nodiscard]] std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return words_.size() * kWordBits;
    }

    [[nodiscard]] std::size_t word_count() const { return words_.size(); }
    [[nodiscard]] Word word(std::size_t i) const { return words_[i]; }
    /// Bits of the first 64 elements; 0 for a zero-width subset.
    [[nodiscard]] Word low_word() const { return words_.empty() ? Word{0} : words_[0]; }

    [[nodiscard]] std::size_t hash() const {
        std::size_t seed = words_.size();
        for (Word w : words_) {
            seed ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        }
        return seed;
    }

private:
    void trim(std::size_t width) {
        const std::size_t rem = width % kWordBits;
        if (rem != 0 && !words_.empty()) {
            words_.back() &= (Word{1} << rem) - 1;
        }
    }

    boost::container::small_vector<Word, 1> words_;
};

/// Canonical member order: by cardinality, then lexicographically on the sorted
/// index lists (the set holding the lowest index of the symmetric difference is smaller).
inline bool canonical_less(const Subset& a, const Subset& b) {
    const std::size_t ca = a.count();
    const std::size_t cb = b.count();
    if (ca != cb) {
        return ca < cb;
    }
    for (std::size_t w = 0; w < a.word_count(); ++w) {
        const Subset::Word diff = a.word(w) ^ b.word(w);
        if (diff != 0) {
            const Subset::Word lowest = diff & (~diff + 1);
            return (a.word(w) & lowest) != 0;
        }
    }
    return false;
}

struct SubsetHash {
    std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace cubekit
