#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace hf {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Largest host the library handles; every vertex set fits one machine word.
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

inline constexpr VertexMask prefix_mask(int n) noexcept
{
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Value-type vertex set over 0..63. Iteration is always ascending.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(VertexMask rest) : rest_(rest) {}
        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        VertexMask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(VertexMask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs) insert(v);
    }
    static VertexSet from_vector(const std::vector<Vertex>& vs)
    {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }
    /// {first, ..., last-1}
    static VertexSet range(Vertex first, Vertex last)
    {
        return VertexSet(prefix_mask(last) & ~prefix_mask(first));
    }

    constexpr VertexMask mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(Vertex v) const { return v >= 0 && v < kMaxVertices && (bits_ & bit(v)); }
    void insert(Vertex v) { bits_ |= bit(v); }
    void erase(Vertex v) { bits_ &= ~bit(v); }
    Vertex front() const { return std::countr_zero(bits_); }
    Vertex back() const { return 63 - std::countl_zero(bits_); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    bool operator==(const VertexSet&) const = default;

    /// "{0,1,2}"
    std::string to_string() const
    {
        std::string out = "{";
        bool first = true;
        for (Vertex v : *this) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

private:
    VertexMask bits_ = 0;
};

} // namespace hf
