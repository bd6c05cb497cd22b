#include "oddramsey/odd.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddramsey {

bool copy_fully_colored(const TargetCopy& copy, const Coloring& col) {
    for (EdgeId e : copy.edges)
        if (col.color(e) == kUncolored) return false;
    return true;
}

ClassProfile class_profile(const HostInstance&, const TargetCopy& copy, const Coloring& col) {
    ClassProfile p;
    for (EdgeId e : copy.edges) {
        const int c = col.color(e);
        if (c == kUncolored) throw std::invalid_argument("class_profile: uncolored edge inside copy");
        ++p.mult[c];
        ++p.total;
    }
    return p;
}

bool is_bad(const HostInstance& host, const TargetCopy& copy, const Coloring& col) {
    return class_profile(host, copy, col).all_even();
}

namespace {

TargetCopy induced_subcopy(const HostInstance& host, const TargetCopy& parent,
                           const std::vector<Vertex>& fan_subset) {
    TargetCopy c = parent;
    c.fan = fan_subset;
    std::sort(c.fan.begin(), c.fan.end());
    c.edges.clear();
    for (Vertex y : c.fan) {
        c.edges.push_back(host.edge_id2(c.pair_p[0], y));
        c.edges.push_back(host.edge_id2(c.pair_p[1], y));
    }
    return c;
}

// Canonical split: lexicographically least nonempty proper fan subset that
// contains fan[0] and induces a bad copy with a bad complement.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> find_bad_split(
    const HostInstance& host, const TargetCopy& copy, const Coloring& col) {
    const int r = static_cast<int>(copy.fan.size());
    if (r < 2) return std::nullopt;
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> best;
    for (int s = 1; s <= r - 1 && !best; ++s) {
        for_each_subset(r - 1, s - 1, [&](const std::vector<int>& rest) {
            if (best) return;
            std::vector<Vertex> a{copy.fan[0]};
            std::vector<bool> taken(static_cast<std::size_t>(r), false);
            taken[0] = true;
            for (int i : rest) {
                a.push_back(copy.fan[static_cast<std::size_t>(i + 1)]);
                taken[static_cast<std::size_t>(i + 1)] = true;
            }
            std::vector<Vertex> b;
            for (int i = 0; i < r; ++i)
                if (!taken[static_cast<std::size_t>(i)]) b.push_back(copy.fan[static_cast<std::size_t>(i)]);
            const TargetCopy ca = induced_subcopy(host, copy, a);
            const TargetCopy cb = induced_subcopy(host, copy, b);
            if (is_bad(host, ca, col) && is_bad(host, cb, col)) best = std::make_pair(a, b);
        });
    }
    return best;
}

void decompose_rec(const HostInstance& host, const TargetCopy& copy, const Coloring& col,
                   std::vector<BadCopy>& out) {
    auto split = find_bad_split(host, copy, col);
    if (!split) {
        BadCopy bc;
        bc.copy = copy;
        bc.profile = class_profile(host, copy, col);
        bc.irreducible = Reducibility::Irreducible;
        out.push_back(bc);
        return;
    }
    decompose_rec(host, induced_subcopy(host, copy, split->first), col, out);
    decompose_rec(host, induced_subcopy(host, copy, split->second), col, out);
}

}  // namespace

std::optional<Decomposition> decompose_irreducible(const HostInstance& host, const TargetCopy& copy,
                                                   const Coloring& col) {
    if (host.kind != HostKind::BipartiteGraph)
        throw std::invalid_argument("reducibility is defined for graph targets only");
    if (!is_bad(host, copy, col)) throw std::invalid_argument("decompose_irreducible: copy not bad");
    if (!find_bad_split(host, copy, col)) return std::nullopt;
    Decomposition d;
    decompose_rec(host, copy, col, d.parts);
    std::sort(d.parts.begin(), d.parts.end(), [](const BadCopy& a, const BadCopy& b) {
        if (a.copy.fan.size() != b.copy.fan.size()) return a.copy.fan.size() < b.copy.fan.size();
        return a.copy.fan < b.copy.fan;
    });
    return d;
}

bool is_reducible(const HostInstance& host, const TargetCopy& copy, const Coloring& col) {
    if (host.kind != HostKind::BipartiteGraph)
        throw std::invalid_argument("reducibility is defined for graph targets only");
    if (!is_bad(host, copy, col)) throw std::invalid_argument("is_reducible: copy not bad");
    return find_bad_split(host, copy, col).has_value();
}

namespace {

std::optional<BadCopy> scan_bad(const HostInstance& host, const Coloring& col, bool allow_partial) {
    const int r = host.kind == HostKind::BipartiteGraph ? host.t : 2;
    std::optional<BadCopy> found;
    for_each_target_copy(host, r, [&](const TargetCopy& c) {
        if (found) return;
        if (!copy_fully_colored(c, col)) {
            if (allow_partial) return;
            throw std::invalid_argument("find_bad_target: partial coloring");
        }
        auto p = class_profile(host, c, col);
        if (p.all_even()) {
            BadCopy bc;
            bc.copy = c;
            bc.profile = std::move(p);
            bc.irreducible = Reducibility::NotApplicable;
            if (host.kind == HostKind::BipartiteGraph)
                bc.irreducible = is_reducible(host, c, col) ? Reducibility::Reducible
                                                            : Reducibility::Irreducible;
            found = std::move(bc);
        }
    });
    return found;
}

}  // namespace

std::optional<BadCopy> find_bad_target(const HostInstance& host, const Coloring& col) {
    return scan_bad(host, col, false);
}

std::optional<BadCopy> find_bad_target_partial(const HostInstance& host, const Coloring& col) {
    return scan_bad(host, col, true);
}

std::optional<BadCopy> pigeonhole_witness(const HostInstance& host, const Coloring& col, int t) {
    if (host.kind != HostKind::BipartiteGraph)
        throw std::invalid_argument("pigeonhole_witness: graph host required");
    if (!col.total()) throw std::invalid_argument("pigeonhole_witness: partial coloring");
    const int n = host.n;
    // pair side in part pp, fan vertices in the other part
    for (int pp = 0; pp < 2; ++pp) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const Vertex uu = host.vertex(pp, u);
                const Vertex vv = host.vertex(pp, v);
                std::vector<Vertex> fan;
                for (int x = 0; x < n && static_cast<int>(fan.size()) < t; ++x) {
                    const Vertex xx = host.vertex(1 - pp, x);
                    if (col.color(host.edge_id2(xx, uu)) == col.color(host.edge_id2(xx, vv)))
                        fan.push_back(xx);
                }
                if (static_cast<int>(fan.size()) == t) {
                    TargetCopy c;
                    c.part_p = pp;
                    c.part_q = 1 - pp;
                    c.pair_p[0] = uu;
                    c.pair_p[1] = vv;
                    c.fan = fan;
                    c.edges.clear();
                    for (Vertex y : c.fan) {
                        c.edges.push_back(host.edge_id2(c.pair_p[0], y));
                        c.edges.push_back(host.edge_id2(c.pair_p[1], y));
                    }
                    BadCopy bc;
                    bc.copy = c;
                    bc.profile = class_profile(host, c, col);
                    bc.irreducible = is_reducible(host, c, col) ? Reducibility::Reducible
                                                                : Reducibility::Irreducible;
                    return bc;
                }
            }
    }
    return std::nullopt;
}

std::optional<BadCopy> hypergraph_lower_bound_witness(const HostInstance& host, const Coloring& col) {
    if (host.kind != HostKind::KPartiteHypergraph)
        throw std::invalid_argument("hypergraph_lower_bound_witness: hypergraph host required");
    if (!col.total()) throw std::invalid_argument("hypergraph_lower_bound_witness: partial coloring");
    const int n = host.n;
    const int k = host.k;
    const HostInstance link = HostInstance::bipartite(n, 2);

    std::vector<int> pref(static_cast<std::size_t>(k - 2), 0);
    std::vector<Vertex> verts(static_cast<std::size_t>(k));
    std::optional<BadCopy> found;
    auto rec = [&](auto&& self, int j) -> void {
        if (found) return;
        if (j == k - 2) {
            // project onto the K_{n,n} spanned by parts k-2 and k-1
            Coloring proj(link, col.palette);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    for (int m = 0; m < k - 2; ++m) verts[static_cast<std::size_t>(m)] = host.vertex(m, pref[static_cast<std::size_t>(m)]);
                    verts[static_cast<std::size_t>(k - 2)] = host.vertex(k - 2, a);
                    verts[static_cast<std::size_t>(k - 1)] = host.vertex(k - 1, b);
                    proj.set(link.edge_id2(link.vertex(0, a), link.vertex(1, b)),
                             col.color(host.edge_id(verts)));
                }
            auto w = pigeonhole_witness(link, proj, 2);
            if (!w) return;
            // lift back to the host
            TargetCopy c;
            c.part_p = k - 2;
            c.part_q = k - 1;
            c.prefix.clear();
            for (int m = 0; m < k - 2; ++m) c.prefix.push_back(host.vertex(m, pref[static_cast<std::size_t>(m)]));
            const TargetCopy& lw = w->copy;
            // link pair side may be in either link part
            const int lp = lw.part_p;  // 0 -> host part k-2, 1 -> host part k-1
            Vertex pa0 = host.vertex(k - 2 + lp, link.local(lw.pair_p[0]));
            Vertex pa1 = host.vertex(k - 2 + lp, link.local(lw.pair_p[1]));
            Vertex pb0 = host.vertex(k - 2 + (1 - lp), link.local(lw.fan[0]));
            Vertex pb1 = host.vertex(k - 2 + (1 - lp), link.local(lw.fan[1]));
            if (lp == 0) {
                c.pair_p[0] = pa0; c.pair_p[1] = pa1;
                c.pair_q[0] = std::min(pb0, pb1); c.pair_q[1] = std::max(pb0, pb1);
            } else {
                c.pair_p[0] = std::min(pb0, pb1); c.pair_p[1] = std::max(pb0, pb1);
                c.pair_q[0] = pa0; c.pair_q[1] = pa1;
            }
            c.edges.clear();
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    for (int m = 0; m < k - 2; ++m) verts[static_cast<std::size_t>(m)] = c.prefix[static_cast<std::size_t>(m)];
                    verts[static_cast<std::size_t>(k - 2)] = c.pair_p[a];
                    verts[static_cast<std::size_t>(k - 1)] = c.pair_q[b];
                    c.edges.push_back(host.edge_id(verts));
                }
            BadCopy bc;
            bc.copy = c;
            bc.profile = class_profile(host, c, col);
            bc.irreducible = Reducibility::NotApplicable;
            found = std::move(bc);
            return;
        }
        for (int v = 0; v < n && !found; ++v) {
            pref[static_cast<std::size_t>(j)] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace oddramsey
