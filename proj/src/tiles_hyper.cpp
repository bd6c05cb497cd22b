#include "oddramsey/tiles_hyper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace oddramsey {

HyperTileConfig HyperTileConfig::make(int n, int k, std::optional<double> eps,
                                      std::optional<double> delta, std::optional<int> n1,
                                      std::optional<int> n2) {
    HyperTileConfig cfg;
    cfg.host = HostInstance::hypergraph(n, k);
    cfg.epsilon = eps.value_or(default_epsilon(cfg.host));
    const double dlt = delta.value_or(default_delta(cfg.host));
    cfg.palette = Palette::defaults(cfg.host, dlt);
    if (n1) cfg.palette.n1 = *n1;
    if (n2) cfg.palette.n2 = *n2;
    cfg.d.num = upow(static_cast<std::uint64_t>(n), static_cast<unsigned>(k * k + 1));
    cfg.d.den = 2;
    cfg.ell = 6;
    return cfg;
}

std::uint64_t HyperTileConfig::h1_tile_count() const {
    const unsigned n = static_cast<unsigned>(host.n);
    const unsigned k = static_cast<unsigned>(host.k);
    const std::uint64_t subsets = binomial(n, k + 1);
    std::uint64_t total = static_cast<std::uint64_t>(palette.n1);
    for (unsigned j = 0; j < k; ++j) total *= subsets;
    for (unsigned j = 0; j + 1 < k; ++j) total *= factorial(k + 1);
    return total;
}

std::uint64_t hyper_uniformity(int k) {
    const unsigned ku = static_cast<unsigned>(k);
    return factorial(ku + 1) + ku * binomial(ku + 1, 2) * (ku - 1) * factorial(ku - 1) +
           ku * factorial(ku + 1) / 2;
}

Tile build_hyper_tile(const HostInstance& host, const TransversalTemplate& tmpl) {
    const int k = host.k;
    if (static_cast<int>(tmpl.labeled.size()) != k)
        throw std::invalid_argument("template needs one labeled subset per part");
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(tmpl.labeled[static_cast<std::size_t>(j)].size()) != k + 1)
            throw std::invalid_argument("each part needs k+1 labeled vertices");
        auto sorted = tmpl.labeled[static_cast<std::size_t>(j)];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("labeling within a part is not a bijection");
        for (Vertex v : sorted)
            if (host.part_of(v) != j) throw std::invalid_argument("labeled vertex in wrong part");
    }

    Tile tile;
    tile.kind = TileKind::H1;
    tile.color = tmpl.color;
    tile.sides = tmpl.labeled;

    // A-vertices with all k vertices in distinct parts: the transversal
    // k-sets, which are the host edges this tile colors.
    {
        std::vector<Vertex> pick(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int j, unsigned used) -> void {
            if (j == k) {
                std::vector<Vertex> vs = pick;
                tile.verts.push_back(make_set_key(vs));
                tile.colored_edges.push_back(host.edge_id(pick));
                return;
            }
            for (int l = 0; l <= k; ++l) {
                if (used & (1u << l)) continue;
                pick[static_cast<std::size_t>(j)] = tmpl.labeled[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
                self(self, j + 1, used | (1u << l));
            }
        };
        rec(rec, 0, 0);
    }

    // A-vertices with one doubled part and one missed part, labels distinct.
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            if (q == p) continue;
            for (int l1 = 0; l1 <= k; ++l1)
                for (int l2 = l1 + 1; l2 <= k; ++l2) {
                    std::vector<Vertex> pick{tmpl.labeled[static_cast<std::size_t>(p)][static_cast<std::size_t>(l1)],
                                             tmpl.labeled[static_cast<std::size_t>(p)][static_cast<std::size_t>(l2)]};
                    auto rec = [&](auto&& self, int j, unsigned used) -> void {
                        if (j == k) {
                            tile.verts.push_back(make_set_key(pick));
                            return;
                        }
                        if (j == p || j == q) {
                            self(self, j + 1, used);
                            return;
                        }
                        for (int l = 0; l <= k; ++l) {
                            if (used & (1u << l)) continue;
                            pick.push_back(tmpl.labeled[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
                            self(self, j + 1, used | (1u << l));
                            pick.pop_back();
                        }
                    };
                    rec(rec, 0, (1u << l1) | (1u << l2));
                }
        }

    // B-vertices: one omitted part, a transversal (k-1)-set, plus the color.
    for (int q = 0; q < k; ++q) {
        std::vector<Vertex> pick;
        auto rec = [&](auto&& self, int j, unsigned used) -> void {
            if (j == k) {
                tile.verts.push_back(make_set_key(pick, tmpl.color));
                return;
            }
            if (j == q) {
                self(self, j + 1, used);
                return;
            }
            for (int l = 0; l <= k; ++l) {
                if (used & (1u << l)) continue;
                pick.push_back(tmpl.labeled[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
                self(self, j + 1, used | (1u << l));
                pick.pop_back();
            }
        };
        rec(rec, 0, 0);
    }

    std::sort(tile.verts.begin(), tile.verts.end());
    tile.verts.erase(std::unique(tile.verts.begin(), tile.verts.end()), tile.verts.end());
    std::sort(tile.colored_edges.begin(), tile.colored_edges.end());
    return tile;
}

namespace {

template <typename Fn>
void for_each_labeling_rec(const HostInstance& host, const HyperTileConfig& cfg,
                           TransversalTemplate& tmpl, int j, Fn&& fn) {
    const int k = host.k;
    if (j == k) {
        for (tmpl.color = 0; tmpl.color < cfg.palette.n1; ++tmpl.color)
            fn(build_hyper_tile(host, tmpl));
        return;
    }
    // part 0 keeps its sorted labeling (canonical form); later parts range
    // over all permutations
    std::vector<Vertex>& lab = tmpl.labeled[static_cast<std::size_t>(j)];
    std::sort(lab.begin(), lab.end());
    if (j == 0) {
        for_each_labeling_rec(host, cfg, tmpl, j + 1, fn);
        return;
    }
    do {
        for_each_labeling_rec(host, cfg, tmpl, j + 1, fn);
    } while (std::next_permutation(lab.begin(), lab.end()));
}

}  // namespace

void for_each_hyper_tile(const HyperTileConfig& cfg, const std::function<void(const Tile&)>& fn) {
    if (cfg.h1_tile_count() > cfg.guard) throw GuardExceeded("hyper H1 enumeration guard exceeded");
    const HostInstance& host = cfg.host;
    const int k = host.k;
    const int n = host.n;
    if (k + 1 > n) return;
    TransversalTemplate tmpl;
    tmpl.labeled.assign(static_cast<std::size_t>(k), {});
    std::vector<std::vector<int>> chosen(static_cast<std::size_t>(k));
    auto rec_subsets = [&](auto&& self, int j) -> void {
        if (j == k) {
            for (int m = 0; m < k; ++m) {
                tmpl.labeled[static_cast<std::size_t>(m)].clear();
                for (int v : chosen[static_cast<std::size_t>(m)])
                    tmpl.labeled[static_cast<std::size_t>(m)].push_back(host.vertex(m, v));
            }
            for_each_labeling_rec(host, cfg, tmpl, 0, fn);
            return;
        }
        for_each_subset(n, k + 1, [&](const std::vector<int>& sub) {
            chosen[static_cast<std::size_t>(j)] = sub;
            self(self, j + 1);
        });
    };
    rec_subsets(rec_subsets, 0);
}

std::vector<Tile> enumerate_hyper_tiles(const HyperTileConfig& cfg) {
    std::vector<Tile> out;
    for_each_hyper_tile(cfg, [&](const Tile& t) { out.push_back(t); });
    return out;
}

Tile sample_hyper_tile(const HyperTileConfig& cfg, Rng& rng) {
    const HostInstance& host = cfg.host;
    const int k = host.k;
    if (k + 1 > host.n) throw std::invalid_argument("no H1 tiles exist: n < k+1");
    TransversalTemplate tmpl;
    tmpl.labeled.assign(static_cast<std::size_t>(k), {});
    for (int j = 0; j < k; ++j) {
        for (int v : sample_subset(rng, host.n, k + 1))
            tmpl.labeled[static_cast<std::size_t>(j)].push_back(host.vertex(j, v));
        if (j > 0) shuffle_vec(tmpl.labeled[static_cast<std::size_t>(j)], rng);
    }
    tmpl.color = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cfg.palette.n1)));
    return build_hyper_tile(host, tmpl);
}

std::uint64_t hyper_degree(const HyperTileConfig& cfg, TileVertexKey vertex) {
    std::uint64_t count = 0;
    for_each_hyper_tile(cfg, [&](const Tile& t) {
        if (std::binary_search(t.verts.begin(), t.verts.end(), vertex)) ++count;
    });
    return count;
}

std::uint64_t hyper_degree_formula(const HyperTileConfig& cfg, HyperVertexKind kind) {
    const unsigned n = static_cast<unsigned>(cfg.host.n);
    const unsigned k = static_cast<unsigned>(cfg.host.k);
    const std::uint64_t n1 = static_cast<std::uint64_t>(cfg.palette.n1);
    auto powu = [](std::uint64_t b, unsigned e) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e; ++i) r *= b;
        return r;
    };
    switch (kind) {
        case HyperVertexKind::FullTransversal:
            return powu(binomial(n - 1, k), k) * powu(factorial(k), k) * n1;
        case HyperVertexKind::DoubledSet:
            return binomial(n - 2, k - 1) * powu(binomial(n - 1, k), k - 2) * binomial(n, k + 1) *
                   factorial(k + 1) * factorial(k - 1) * powu(factorial(k), k - 2) * n1;
        case HyperVertexKind::ColoredSet:
            return powu(binomial(n - 1, k), k - 1) * binomial(n, k + 1) * (factorial(k + 1) / 2) *
                   powu(factorial(k), k - 1);
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

std::string fmt(long double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

PairCodegree hyper_pair_codegree_max(const HyperTileConfig& cfg) {
    const std::uint64_t work = cfg.h1_tile_count() * hyper_uniformity(cfg.host.k) *
                               hyper_uniformity(cfg.host.k);
    if (work > cfg.guard) throw GuardExceeded("hyper pair codegree guard exceeded");
    std::unordered_map<unsigned __int128, std::uint64_t, U128Hash> counts;
    for_each_hyper_tile(cfg, [&](const Tile& t) {
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

ConditionReport hyper_condition_report(const HyperTileConfig& cfg) {
    const HostInstance& host = cfg.host;
    const int n = host.n;
    const int k = host.k;
    const long double d = cfg.d.value();
    const long double eps = cfg.epsilon;
    const long double e4 = eps * eps * eps * eps;

    std::unordered_map<TileVertexKey, std::uint64_t> deg;
    for_each_hyper_tile(cfg, [&](const Tile& t) {
        for (TileVertexKey v : t.verts) ++deg[v];
    });
    auto deg_of = [&](TileVertexKey key) -> std::uint64_t {
        auto it = deg.find(key);
        return it == deg.end() ? 0 : it->second;
    };

    // minimum over every A-vertex of the host; maximum over everything seen
    std::uint64_t min_p = ~std::uint64_t{0}, max_all = 0, min_q = ~std::uint64_t{0};
    for_each_edge(host, [&](const HostEdge& e) {
        min_p = std::min(min_p, deg_of(make_set_key(e.vertices)));
    });
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            if (q == p) continue;
            std::vector<int> others;
            for (int j = 0; j < k; ++j)
                if (j != p && j != q) others.push_back(j);
            for_each_subset(n, 2, [&](const std::vector<int>& two) {
                std::vector<int> asn(others.size(), 0);
                auto rec = [&](auto&& self, std::size_t i) -> void {
                    if (i == others.size()) {
                        std::vector<Vertex> vs{host.vertex(p, two[0]), host.vertex(p, two[1])};
                        for (std::size_t m = 0; m < others.size(); ++m)
                            vs.push_back(host.vertex(others[m], asn[m]));
                        min_p = std::min(min_p, deg_of(make_set_key(vs)));
                        return;
                    }
                    for (asn[i] = 0; asn[i] < n; ++asn[i]) self(self, i + 1);
                };
                rec(rec, 0);
            });
        }
    for (const auto& [key, c] : deg) {
        max_all = std::max(max_all, c);
        if (key_color(key) >= 0) min_q = std::min(min_q, c);
    }
    if (deg.empty()) min_p = min_q = 0;
    const std::uint64_t delta2 = hyper_pair_codegree_max(cfg).max;

    // H2 measurements
    std::unordered_map<TileVertexKey, std::uint64_t> h2deg;
    std::uint64_t h2_pair_max = 0;
    {
        std::unordered_map<unsigned __int128, std::uint64_t, U128Hash> h2pair;
        const long edge_total = host.edge_count();
        for (EdgeId e = 0; e < edge_total; ++e)
            for (int c = cfg.palette.n1; c < cfg.palette.total(); ++c) {
                const Tile t = build_h2_tile(host, cfg.palette, e, c);
                for (TileVertexKey v : t.verts) ++h2deg[v];
                for (TileVertexKey v : t.verts)
                    if (key_color(v) < 0)
                        for (TileVertexKey w : t.verts)
                            if (key_color(w) >= 0)
                                ++h2pair[(static_cast<unsigned __int128>(v) << 64) | w];
            }
        for (const auto& [key, c] : h2pair) h2_pair_max = std::max(h2_pair_max, c);
    }
    std::uint64_t delta_r_h2 = 0, delta_p_h2 = ~std::uint64_t{0};
    for (const auto& [key, c] : h2deg) {
        if (key_color(key) >= 0)
            delta_r_h2 = std::max(delta_r_h2, c);
        else
            delta_p_h2 = std::min(delta_p_h2, c);
    }
    if (cfg.palette.n2 == 0) delta_p_h2 = 0;

    ConditionReport rep;
    rep.system = "hypergraph";
    rep.params = {{"n", n},          {"k", k},
                  {"n1", cfg.palette.n1}, {"n2", cfg.palette.n2},
                  {"eps", static_cast<double>(eps)}, {"delta", cfg.palette.delta},
                  {"d_num", cfg.d.num}, {"d_den", cfg.d.den}};

    const long double h1_lo = d - std::pow(d, 1.0L - eps);
    rep.checks.push_back({"delta_P(H1)", static_cast<long double>(min_p),
                          "d - d^(1-eps) = " + fmt(h1_lo), h1_lo,
                          static_cast<long double>(min_p) >= h1_lo, "(H1) lower"});
    rep.checks.push_back({"Delta(H1)", static_cast<long double>(max_all), "d = " + fmt(d), d,
                          static_cast<long double>(max_all) <= d, "(H1) upper"});
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
    rep.checks.push_back({"max d(T,S) over H2", static_cast<long double>(h2_pair_max),
                          "d^(-eps)*delta_P(H2) = " + fmt(b4), b4,
                          static_cast<long double>(h2_pair_max) <= b4, "(H4)"});
    return rep;
}

}  // namespace oddramsey
