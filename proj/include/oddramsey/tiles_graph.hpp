#pragma once

// Graph-case tile system: H1 tiles are monochromatic copies of
// K_{t+1,t+1} minus a perfect matching, H2 tiles color single edges with
// reserve colors. Includes exact degree counting against the closed forms.

#include <optional>

#include "oddramsey/coloring.hpp"
#include "oddramsey/report.hpp"
#include "oddramsey/tile.hpp"

namespace oddramsey {

// One H1 tile template: (t+1)-subsets of X and Y, the removed perfect
// matching between them, and an N1 color.
struct GraphTileTemplate {
    std::vector<Vertex> side_x;   // sorted (t+1)-subset of X
    std::vector<Vertex> match_y;  // match_y[i] is the Y-vertex matched (and removed) with side_x[i]
    int color = 0;
};

struct GraphTileConfig {
    HostInstance host;            // bipartite
    Palette palette;
    double epsilon = 0.0;
    ExactRatio d;                 // n^(2t+1) / t!
    int ell = 0;                  // 2t
    std::uint64_t guard = 100'000'000;

    static GraphTileConfig make(int n, int t, std::optional<double> eps = std::nullopt,
                                std::optional<double> delta = std::nullopt,
                                std::optional<int> n1 = std::nullopt,
                                std::optional<int> n2 = std::nullopt);
    std::uint64_t h1_tile_count() const;  // C(n,t+1)^2 * (t+1)! * n1
};

Tile build_h1_tile(const HostInstance& host, const GraphTileTemplate& tmpl);

void for_each_h1_tile(const GraphTileConfig& cfg, const std::function<void(const Tile&)>& fn);
std::vector<Tile> enumerate_h1_tiles(const GraphTileConfig& cfg);
Tile sample_h1_tile(const GraphTileConfig& cfg, Rng& rng);

enum class GraphVertexKind { ColoredCopy, EdgeSlot, SameSidePair };

// Exact degree of one tile vertex by exhaustive enumeration.
std::uint64_t h1_degree(const GraphTileConfig& cfg, TileVertexKey vertex);
// The closed forms from the degree computation:
//   ColoredCopy   -> C(n,t+1) * C(n-1,t) * (t+1)!
//   EdgeSlot      -> C(n-1,t)^2 * t * t! * n1
//   SameSidePair  -> C(n-2,t-1) * C(n,t+1) * (t+1)! * n1
std::uint64_t h1_degree_formula(const GraphTileConfig& cfg, GraphVertexKind kind);

PairCodegree h1_pair_codegree_max(const GraphTileConfig& cfg);

ConditionReport condition_report(const GraphTileConfig& cfg);

}  // namespace oddramsey
