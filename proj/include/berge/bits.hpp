#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace berge {

// Vertex sets are bitsets over 0..63. All desk-scale instances fit, and
// subset/intersection tests are single instructions.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline VertexSet with(VertexSet s, int v) { return s | (VertexSet{1} << v); }

inline VertexSet without(VertexSet s, int v) { return s & ~(VertexSet{1} << v); }

inline VertexSet single(int v) { return VertexSet{1} << v; }

inline bool subset_of(VertexSet a, VertexSet b) { return (a & b) == a; }

inline int lowest(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void for_each_bit(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet vector_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s = with(s, v);
    return s;
}

inline VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Lexicographic order on the ascending vertex lists the bitsets encode;
// a proper prefix sorts first.
inline bool edge_lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// All size-p subsets of the elements of s, in lexicographic order.
template <typename F>
void for_each_subset_of_size(VertexSet s, int p, F&& f) {
    std::vector<int> elems = set_to_vector(s);
    int m = static_cast<int>(elems.size());
    if (p < 0 || p > m) return;
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    while (true) {
        VertexSet sub = 0;
        for (int i : idx) sub = with(sub, elems[i]);
        f(sub);
        int i = p - 1;
        while (i >= 0 && idx[i] == m - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace berge
