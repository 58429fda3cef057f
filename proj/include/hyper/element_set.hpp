#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyper {

using Element = int;

/// Largest carrier the library handles. Matrix rings over order-4 bases
/// (4^4 = 256 elements) are the biggest structures built.
inline constexpr int kMaxOrder = 256;

/// Fixed-width membership bitset over {0..kMaxOrder-1}.
class ElementSet {
public:
    static constexpr int kWords = kMaxOrder / 64;

    constexpr ElementSet() = default;
    ElementSet(std::initializer_list<Element> elems)
    {
        for (Element e : elems)
            insert(e);
    }

    static ElementSet singleton(Element e)
    {
        ElementSet s;
        s.insert(e);
        return s;
    }

    /// {0..order-1}
    static ElementSet full(int order)
    {
        ElementSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (order >= lo + 64)
                s.words_[w] = ~std::uint64_t{0};
            else if (order > lo)
                s.words_[w] = (std::uint64_t{1} << (order - lo)) - 1;
        }
        return s;
    }

    static ElementSet from_vector(const std::vector<Element>& elems)
    {
        ElementSet s;
        for (Element e : elems)
            s.insert(e);
        return s;
    }

    void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
    [[nodiscard]] bool contains(Element e) const
    {
        return (words_[e >> 6] >> (e & 63)) & 1U;
    }

    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    [[nodiscard]] int size() const
    {
        int n = 0;
        for (auto w : words_)
            n += std::popcount(w);
        return n;
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] Element first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] != 0)
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    [[nodiscard]] bool is_subset_of(const ElementSet& other) const
    {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }

    [[nodiscard]] bool intersects(const ElementSet& other) const
    {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & other.words_[w]) != 0)
                return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    ElementSet& operator-=(const ElementSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Orders by cardinality first, then by the sorted member list.
    friend bool canonical_less(const ElementSet& a, const ElementSet& b)
    {
        int sa = a.size();
        int sb = b.size();
        if (sa != sb)
            return sa < sb;
        return a.members() < b.members();
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = std::countr_zero(bits);
                f(static_cast<Element>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] std::vector<Element> members() const
    {
        std::vector<Element> out;
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    /// "{0,2,4}"
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::size_t hash() const
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

std::string format_elements(const std::vector<Element>& elems);

}  // namespace hyper
