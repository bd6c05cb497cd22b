#include "oddramsey/tiles_graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace oddramsey {

GraphTileConfig GraphTileConfig::make(int n, int t, std::optional<double> eps,
                                      std::optional<double> delta, std::optional<int> n1,
                                      std::optional<int> n2) {
    GraphTileConfig cfg;
    cfg.host = HostInstance::bipartite(n, t);
    cfg.epsilon = eps.value_or(default_epsilon(cfg.host));
    const double dlt = delta.value_or(default_delta(cfg.host));
    cfg.palette = Palette::defaults(cfg.host, dlt);
    if (n1) cfg.palette.n1 = *n1;
    if (n2) cfg.palette.n2 = *n2;
    cfg.d.num = upow(static_cast<std::uint64_t>(n), static_cast<unsigned>(2 * t + 1));
    cfg.d.den = factorial(static_cast<unsigned>(t));
    cfg.ell = 2 * t;
    return cfg;
}

std::uint64_t GraphTileConfig::h1_tile_count() const {
    const unsigned n = static_cast<unsigned>(host.n);
    const unsigned t1 = static_cast<unsigned>(host.t + 1);
    const std::uint64_t c = binomial(n, t1);
    return c * c * factorial(t1) * static_cast<std::uint64_t>(palette.n1);
}

Tile build_h1_tile(const HostInstance& host, const GraphTileTemplate& tmpl) {
    const int t1 = static_cast<int>(tmpl.side_x.size());
    if (t1 != host.t + 1) throw std::invalid_argument("side_x must have t+1 vertices");
    if (tmpl.match_y.size() != tmpl.side_x.size())
        throw std::invalid_argument("matching must pair every side_x vertex");
    for (Vertex x : tmpl.side_x)
        if (host.part_of(x) != 0) throw std::invalid_argument("side_x vertex not in part X");
    std::vector<Vertex> side_y = tmpl.match_y;
    std::sort(side_y.begin(), side_y.end());
    if (std::adjacent_find(side_y.begin(), side_y.end()) != side_y.end())
        throw std::invalid_argument("removed matching is not a bijection");
    for (Vertex y : side_y)
        if (host.part_of(y) != 1) throw std::invalid_argument("matched vertex not in part Y");

    Tile tile;
    tile.kind = TileKind::H1;
    tile.color = tmpl.color;
    tile.sides = {tmpl.side_x, tmpl.match_y};

    for (int i = 0; i < t1; ++i)
        for (int j = 0; j < t1; ++j) {
            const Vertex x = tmpl.side_x[static_cast<std::size_t>(i)];
            const Vertex y = side_y[static_cast<std::size_t>(j)];
            if (tmpl.match_y[static_cast<std::size_t>(i)] == y) continue;  // removed edge
            tile.colored_edges.push_back(host.edge_id2(x, y));
            tile.verts.push_back(make_set_key({x, y}));
        }
    for (Vertex v : tmpl.side_x) tile.verts.push_back(make_set_key({v}, tmpl.color));
    for (Vertex v : side_y) tile.verts.push_back(make_set_key({v}, tmpl.color));
    for (int i = 0; i < t1; ++i)
        for (int j = i + 1; j < t1; ++j) {
            tile.verts.push_back(make_set_key({tmpl.side_x[static_cast<std::size_t>(i)], tmpl.side_x[static_cast<std::size_t>(j)]}));
            tile.verts.push_back(make_set_key({side_y[static_cast<std::size_t>(i)], side_y[static_cast<std::size_t>(j)]}));
        }
    std::sort(tile.verts.begin(), tile.verts.end());
    std::sort(tile.colored_edges.begin(), tile.colored_edges.end());
    return tile;
}

void for_each_h1_tile(const GraphTileConfig& cfg, const std::function<void(const Tile&)>& fn) {
    if (cfg.h1_tile_count() > cfg.guard) throw GuardExceeded("H1 enumeration guard exceeded");
    const HostInstance& host = cfg.host;
    const int n = host.n;
    const int t1 = host.t + 1;
    if (t1 > n) return;
    GraphTileTemplate tmpl;
    for_each_subset(n, t1, [&](const std::vector<int>& xs) {
        tmpl.side_x.clear();
        for (int x : xs) tmpl.side_x.push_back(host.vertex(0, x));
        for_each_subset(n, t1, [&](const std::vector<int>& ys) {
            std::vector<Vertex> perm;
            for (int y : ys) perm.push_back(host.vertex(1, y));
            std::sort(perm.begin(), perm.end());
            do {
                tmpl.match_y = perm;
                for (tmpl.color = 0; tmpl.color < cfg.palette.n1; ++tmpl.color)
                    fn(build_h1_tile(host, tmpl));
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    });
}

std::vector<Tile> enumerate_h1_tiles(const GraphTileConfig& cfg) {
    std::vector<Tile> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cfg.h1_tile_count(), cfg.guard)));
    for_each_h1_tile(cfg, [&](const Tile& t) { out.push_back(t); });
    return out;
}

Tile sample_h1_tile(const GraphTileConfig& cfg, Rng& rng) {
    const HostInstance& host = cfg.host;
    const int t1 = host.t + 1;
    if (t1 > host.n) throw std::invalid_argument("no H1 tiles exist: n < t+1");
    GraphTileTemplate tmpl;
    for (int x : sample_subset(rng, host.n, t1)) tmpl.side_x.push_back(host.vertex(0, x));
    std::vector<Vertex> ys;
    for (int y : sample_subset(rng, host.n, t1)) ys.push_back(host.vertex(1, y));
    shuffle_vec(ys, rng);
    tmpl.match_y = ys;
    tmpl.color = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cfg.palette.n1)));
    return build_h1_tile(host, tmpl);
}

std::uint64_t h1_degree(const GraphTileConfig& cfg, TileVertexKey vertex) {
    std::uint64_t count = 0;
    for_each_h1_tile(cfg, [&](const Tile& t) {
        if (std::binary_search(t.verts.begin(), t.verts.end(), vertex)) ++count;
    });
    return count;
}

std::uint64_t h1_degree_formula(const GraphTileConfig& cfg, GraphVertexKind kind) {
    const unsigned n = static_cast<unsigned>(cfg.host.n);
    const unsigned t = static_cast<unsigned>(cfg.host.t);
    const std::uint64_t n1 = static_cast<std::uint64_t>(cfg.palette.n1);
    switch (kind) {
        case GraphVertexKind::ColoredCopy:
            return binomial(n, t + 1) * binomial(n - 1, t) * factorial(t + 1);
        case GraphVertexKind::EdgeSlot:
            return binomial(n - 1, t) * binomial(n - 1, t) * t * factorial(t) * n1;
        case GraphVertexKind::SameSidePair:
            return binomial(n - 2, t - 1) * binomial(n, t + 1) * factorial(t + 1) * n1;
    }
    return 0;
}

namespace {

struct U128Hash {
    std::size_t operator()(unsigned __int128 v) const {
        const std::uint64_t lo = static_cast<std::uint64_t>(v);
        const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
        std::uint64_t x = lo ^ (hi + 0x9e3779b97f4a7c15ull + (lo << 6) + (lo >> 2));
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace

PairCodegree h1_pair_codegree_max(const GraphTileConfig& cfg) {
    std::unordered_map<unsigned __int128, std::uint64_t, U128Hash> counts;
    for_each_h1_tile(cfg, [&](const Tile& t) {
        for (std::size_t i = 0; i < t.verts.size(); ++i)
            for (std::size_t j = i + 1; j < t.verts.size(); ++j) {
                unsigned __int128 key = (static_cast<unsigned __int128>(t.verts[i]) << 64) | t.verts[j];
                ++counts[key];
            }
    });
    PairCodegree best;
    for (const auto& [key, c] : counts)
        if (c > best.max) {
            best.max = c;
            best.a = static_cast<TileVertexKey>(key >> 64);
            best.b = static_cast<TileVertexKey>(key);
        }
    return best;
}

namespace {

std::string fmt(long double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

ConditionReport condition_report(const GraphTileConfig& cfg) {
    const HostInstance& host = cfg.host;
    const int n = host.n;
    const long double d = cfg.d.value();
    const long double eps = cfg.epsilon;
    const long double e4 = eps * eps * eps * eps;

    // one enumeration pass for all H1 degrees
    std::unordered_map<TileVertexKey, std::uint64_t> deg;
    for_each_h1_tile(cfg, [&](const Tile& t) {
        for (TileVertexKey v : t.verts) ++deg[v];
    });
    auto deg_of = [&](TileVertexKey k) -> std::uint64_t {
        auto it = deg.find(k);
        return it == deg.end() ? 0 : it->second;
    };

    std::uint64_t min_p = ~std::uint64_t{0}, max_p = 0;
    for (int a = 0; a < 2 * n; ++a)
        for (int b = a + 1; b < 2 * n; ++b) {
            const std::uint64_t dd = deg_of(make_set_key({a, b}));
            min_p = std::min(min_p, dd);
            max_p = std::max(max_p, dd);
        }
    std::uint64_t min_q = ~std::uint64_t{0}, max_q = 0;
    for (int v = 0; v < 2 * n; ++v)
        for (int c = 0; c < cfg.palette.n1; ++c) {
            const std::uint64_t dd = deg_of(make_set_key({v}, c));
            min_q = std::min(min_q, dd);
            max_q = std::max(max_q, dd);
        }
    const std::uint64_t delta2 = h1_pair_codegree_max(cfg).max;

    // H2 quantities by direct enumeration
    std::unordered_map<TileVertexKey, std::uint64_t> h2deg;
    std::unordered_map<unsigned __int128, std::uint64_t, U128Hash> h2pair;
    const long edge_total = host.edge_count();
    for (EdgeId e = 0; e < edge_total; ++e)
        for (int c = cfg.palette.n1; c < cfg.palette.total(); ++c) {
            const Tile t = build_h2_tile(host, cfg.palette, e, c);
            for (TileVertexKey v : t.verts) ++h2deg[v];
            // pairs (P-vertex, R-vertex) within this tile
            const TileVertexKey slot = t.verts.front();  // keys sort P-set first? not guaranteed
            for (TileVertexKey v : t.verts)
                if (key_color(v) < 0)
                    for (TileVertexKey w : t.verts)
                        if (key_color(w) >= 0) {
                            unsigned __int128 key = (static_cast<unsigned __int128>(v) << 64) | w;
                            ++h2pair[key];
                        }
            (void)slot;
        }
    std::uint64_t delta_r_h2 = 0, delta_p_h2 = ~std::uint64_t{0}, h2_pair_max = 0;
    for (const auto& [k, c] : h2deg) {
        if (key_color(k) >= 0)
            delta_r_h2 = std::max(delta_r_h2, c);
        else
            delta_p_h2 = std::min(delta_p_h2, c);
    }
    if (cfg.palette.n2 == 0) delta_p_h2 = 0;
    for (const auto& [k, c] : h2pair) h2_pair_max = std::max(h2_pair_max, c);

    ConditionReport rep;
    rep.system = "graph";
    rep.params = {{"n", n},          {"t", host.t},        {"n1", cfg.palette.n1},
                  {"n2", cfg.palette.n2}, {"eps", static_cast<double>(eps)},
                  {"delta", cfg.palette.delta}, {"d_num", cfg.d.num}, {"d_den", cfg.d.den}};

    const long double h1_lo = d - std::pow(d, 1.0L - eps);
    rep.checks.push_back({"delta_P(H1)", static_cast<long double>(min_p),
                          "d - d^(1-eps) = " + fmt(h1_lo), h1_lo,
                          static_cast<long double>(min_p) >= h1_lo, "(H1) lower"});
    rep.checks.push_back({"Delta(H1)", static_cast<long double>(std::max(max_p, max_q)),
                          "d = " + fmt(d), d, static_cast<long double>(std::max(max_p, max_q)) <= d,
                          "(H1) upper"});
    rep.checks.push_back({"delta_Q(H1)", static_cast<long double>(min_q),
                          "d - d^(1-eps) = " + fmt(h1_lo), h1_lo,
                          static_cast<long double>(min_q) >= h1_lo,
                          "Q-side measured separately"});
    const long double b2 = std::pow(d, 1.0L - eps);
    rep.checks.push_back({"Delta_2(H1)", static_cast<long double>(delta2),
                          "d^(1-eps) = " + fmt(b2), b2, static_cast<long double>(delta2) <= b2,
                          "(H2)"});
    const long double b3 = std::pow(d, e4) * static_cast<long double>(delta_p_h2);
    rep.checks.push_back({"Delta_R(H2)", static_cast<long double>(delta_r_h2),
                          "d^(eps^4)*delta_P(H2) = " + fmt(b3), b3,
                          static_cast<long double>(delta_r_h2) <= b3, "(H3)"});
    rep.checks.push_back({"delta_P(H2)", static_cast<long double>(delta_p_h2),
                          "ceil(n^delta) = " + fmt(static_cast<long double>(cfg.palette.n2)),
                          static_cast<long double>(cfg.palette.n2),
                          delta_p_h2 == static_cast<std::uint64_t>(cfg.palette.n2), "definition"});
    const long double b4 = std::pow(d, -eps) * static_cast<long double>(delta_p_h2);
    rep.checks.push_back({"max d(x,v) over H2", static_cast<long double>(h2_pair_max),
                          "d^(-eps)*delta_P(H2) = " + fmt(b4), b4,
                          static_cast<long double>(h2_pair_max) <= b4, "(H4)"});
    return rep;
}

}  // namespace oddramsey
