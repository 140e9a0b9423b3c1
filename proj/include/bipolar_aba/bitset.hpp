#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace baba {

/// Fixed-width dynamic bit set. Binary operations require equal sizes.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) noexcept
    {
        assert(i < size_);
        words_[i >> 6] |= bit(i);
    }
    void reset(std::size_t i) noexcept
    {
        assert(i < size_);
        words_[i >> 6] &= ~bit(i);
    }
    [[nodiscard]] bool test(std::size_t i) const noexcept
    {
        assert(i < size_);
        return (words_[i >> 6] & bit(i)) != 0;
    }
    void clear() noexcept
    {
        for (auto & w : words_)
            w = 0;
    }

    [[nodiscard]] bool any() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return true;
        return false;
    }
    [[nodiscard]] bool none() const noexcept { return !any(); }

    [[nodiscard]] std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool intersects(const Bitset & other) const noexcept
    {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    [[nodiscard]] bool is_subset_of(const Bitset & other) const noexcept
    {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    Bitset & operator|=(const Bitset & other) noexcept
    {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    Bitset & operator&=(const Bitset & other) noexcept
    {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    /// Removes every bit set in `other`.
    Bitset & operator-=(const Bitset & other) noexcept
    {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    [[nodiscard]] std::size_t find_first() const noexcept { return find_from(0); }
    [[nodiscard]] std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

    template <typename F_>
    void for_each(F_ && f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word != 0) {
                auto tz = static_cast<std::size_t>(std::countr_zero(word));
                f(w * 64 + tz);
                word &= word - 1;
            }
        }
    }

    [[nodiscard]] std::size_t hash() const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
        for (auto w : words_)
            h = (h ^ w) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const Bitset &, const Bitset &) = default;

private:
    static constexpr std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i & 63); }

    [[nodiscard]] std::size_t find_from(std::size_t i) const noexcept
    {
        if (i >= size_)
            return npos;
        std::size_t w = i >> 6;
        auto word = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (word != 0)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size())
                return npos;
            word = words_[w];
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }
inline Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
inline Bitset operator-(Bitset a, const Bitset & b) { return a -= b; }

} // namespace baba
