#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace conic {

using VertexIndex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline VertexSet make_vertex_set(std::size_t universe, const std::vector<VertexIndex>& members) {
    VertexSet s(universe);
    for (VertexIndex v : members) s.set(v);
    return s;
}

inline std::vector<VertexIndex> indices_of(const VertexSet& s) {
    std::vector<VertexIndex> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(i);
    return out;
}

/// Lexicographic order on the sorted member lists (not the bitset's own order).
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.find_first();
    auto ib = b.find_first();
    while (ia != VertexSet::npos && ib != VertexSet::npos) {
        if (ia != ib) return ia < ib;
        ia = a.find_next(ia);
        ib = b.find_next(ib);
    }
    return ia == VertexSet::npos && ib != VertexSet::npos;
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::vector<std::uint64_t> blocks;
        blocks.reserve(s.num_blocks());
        boost::to_block_range(s, std::back_inserter(blocks));
        std::size_t seed = s.size();
        boost::hash_range(seed, blocks.begin(), blocks.end());
        return seed;
    }
};

}  // namespace conic
