#pragma once

// Hypergraph-case tile system: H1 tiles come from labeled transversal
// systems of K^(k)_{k+1,..,k+1}, H2 tiles color single hyperedges. The k=2
// instance is tile-for-tile identical to the graph system at t=2.

#include <optional>

#include "oddramsey/coloring.hpp"
#include "oddramsey/report.hpp"
#include "oddramsey/tile.hpp"

namespace oddramsey {

// labeled[j][l] = the vertex of part j carrying label l (l in 0..k).
// Canonical form: part 0 is labeled in ascending vertex order; two labelings
// that differ by a common label permutation describe the same tile.
struct TransversalTemplate {
    std::vector<std::vector<Vertex>> labeled;  // k parts x (k+1) labels
    int color = 0;
};

struct HyperTileConfig {
    HostInstance host;  // k-partite
    Palette palette;
    double epsilon = 0.0;
    ExactRatio d;  // n^(k^2+1) / 2
    int ell = 6;   // <= 2 H1 + <= 4 H2 tiles per conflict
    std::uint64_t guard = 100'000'000;

    static HyperTileConfig make(int n, int k, std::optional<double> eps = std::nullopt,
                                std::optional<double> delta = std::nullopt,
                                std::optional<int> n1 = std::nullopt,
                                std::optional<int> n2 = std::nullopt);
    std::uint64_t h1_tile_count() const;  // C(n,k+1)^k * ((k+1)!)^(k-1) * n1
};

// Uniformity of an H1 tile: (k+1)! + k*C(k+1,2)*(k-1)*(k-1)! + k*(k+1)!/2.
std::uint64_t hyper_uniformity(int k);

Tile build_hyper_tile(const HostInstance& host, const TransversalTemplate& tmpl);

void for_each_hyper_tile(const HyperTileConfig& cfg, const std::function<void(const Tile&)>& fn);
std::vector<Tile> enumerate_hyper_tiles(const HyperTileConfig& cfg);
Tile sample_hyper_tile(const HyperTileConfig& cfg, Rng& rng);

enum class HyperVertexKind { FullTransversal, DoubledSet, ColoredSet };

std::uint64_t hyper_degree(const HyperTileConfig& cfg, TileVertexKey vertex);
// Exact closed forms for the three vertex shapes:
//   FullTransversal -> C(n-1,k)^k * (k!)^k * n1
//   DoubledSet      -> C(n-2,k-1) * C(n-1,k)^(k-2) * C(n,k+1)
//                       * (k+1)! * (k-1)! * (k!)^(k-2) * n1
//   ColoredSet      -> C(n-1,k)^(k-1) * C(n,k+1) * ((k+1)!/2) * (k!)^(k-1)
std::uint64_t hyper_degree_formula(const HyperTileConfig& cfg, HyperVertexKind kind);

PairCodegree hyper_pair_codegree_max(const HyperTileConfig& cfg);

ConditionReport hyper_condition_report(const HyperTileConfig& cfg);

}  // namespace oddramsey
