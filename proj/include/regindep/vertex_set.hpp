#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace regindep {

using Vertex = int;

/// Fixed-universe bitset over vertices 0..universe-1.
///
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> members)
        : VertexSet(universe)
    {
        for (Vertex v : members)
            insert(v);
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// |*this ∩ other| without materializing the intersection.
    int intersection_size(const VertexSet& other) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool intersects(const VertexSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Smallest member, or -1 when empty.
    Vertex first() const { return next(0); }

    /// Smallest member >= from, or -1.
    Vertex next(Vertex from) const
    {
        if (from >= universe_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size())
                return -1;
            w = words_[wi];
        }
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        for (Vertex v = first(); v >= 0; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    static std::size_t word_count(int universe)
    {
        return (static_cast<std::size_t>(universe) + 63) / 64;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace regindep
