#pragma once

// Tiles: hyperedges of the auxiliary hypergraphs H1 and H2. A tile vertex is
// either a P-side vertex set (host-vertex set: a host edge slot, a same-side
// pair, or a k-set / doubled k-set in the hypergraph case) or a colored set
// (vertex copies v^i resp. (k-1)-sets plus a color). Both shapes pack into a
// single 64-bit key so matchings reduce to sorted-vector disjointness.

#include <cstdint>
#include <string>
#include <vector>

#include "oddramsey/coloring.hpp"
#include "oddramsey/host.hpp"

namespace oddramsey {

using TileVertexKey = std::uint64_t;

// Key layout: [color+1 : 16 bits][six vertex bytes, ascending, 0xFF padded].
// color+1 == 0 marks a plain vertex set (P side). Host vertex ids must stay
// below 0xFF, which holds for every instance within the enumeration guards.
inline TileVertexKey make_set_key(std::vector<Vertex> verts, int color = -1) {
    std::sort(verts.begin(), verts.end());
    TileVertexKey k = static_cast<TileVertexKey>(color + 1) << 48;
    for (std::size_t i = 0; i < 6; ++i) {
        const std::uint64_t b = i < verts.size() ? static_cast<std::uint64_t>(verts[i]) : 0xFFull;
        k |= b << (8 * (5 - i));
    }
    return k;
}

inline int key_color(TileVertexKey k) { return static_cast<int>(k >> 48) - 1; }

inline std::vector<Vertex> key_vertices(TileVertexKey k) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < 6; ++i) {
        const std::uint64_t b = (k >> (8 * (5 - i))) & 0xFF;
        if (b != 0xFF) out.push_back(static_cast<Vertex>(b));
    }
    return out;
}

enum class TileKind : std::uint8_t { H1, H2 };

struct Tile {
    TileKind kind = TileKind::H1;
    int color = -1;                        // the single color this tile applies
    std::vector<TileVertexKey> verts;      // sorted tile-vertex keys
    std::vector<EdgeId> colored_edges;     // sorted host edges it colors

    // Construction provenance, used for dumps and degree formulas.
    // Graph H1: sides[0]=side in X (sorted), sides[1]=the removed matching
    //   partner in Y aligned with sides[0] (i.e. sides[0][i] -- sides[1][i]
    //   is removed). Hyper H1: sides[j][l] = vertex of part j with label l.
    // H2: sides empty.
    std::vector<std::vector<Vertex>> sides;

    bool shares_vertex(const Tile& other) const {
        std::size_t i = 0, j = 0;
        while (i < verts.size() && j < other.verts.size()) {
            if (verts[i] == other.verts[j]) return true;
            if (verts[i] < other.verts[j]) ++i; else ++j;
        }
        return false;
    }
};

// H2 tile: one host edge plus its reserve-colored companions (v^i copies in
// the graph case, colored (k-1)-subsets in the hypergraph case).
Tile build_h2_tile(const HostInstance& host, const Palette& palette, EdgeId edge, int color);

struct PairCodegree {
    std::uint64_t max = 0;
    TileVertexKey a = 0, b = 0;  // an attaining pair
};

// Debug dump lines (one per tile), formats:
//   graph:  "H1 color=<i> X={..} Y={..} M={..}" / "H2 edge=<id> color=<i>"
//   hyper:  "H1k color=<i> parts=[{..};{..}] labels=[..]" / "H2k edge=<id> color=<i>"
std::string dump_tile(const HostInstance& host, const Tile& tile);

}  // namespace oddramsey
