#include "oddramsey/host.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddramsey {

HostInstance HostInstance::bipartite(int n, int t) {
    if (n < 1) throw std::invalid_argument("bipartite host needs n >= 1");
    if (t < 2) throw std::invalid_argument("graph target needs t >= 2");
    HostInstance h;
    h.kind = HostKind::BipartiteGraph;
    h.n = n;
    h.t = t;
    h.k = 2;
    return h;
}

HostInstance HostInstance::hypergraph(int n, int k) {
    if (n < 1) throw std::invalid_argument("hypergraph host needs n >= 1");
    if (k < 2) throw std::invalid_argument("hypergraph host needs k >= 2");
    HostInstance h;
    h.kind = HostKind::KPartiteHypergraph;
    h.n = n;
    h.k = k;
    h.t = 2;
    return h;
}

long HostInstance::edge_count() const {
    long c = 1;
    for (int j = 0; j < parts(); ++j) c *= n;
    return c;
}

EdgeId HostInstance::edge_id(const std::vector<Vertex>& verts) const {
    if (static_cast<int>(verts.size()) != parts())
        throw std::invalid_argument("edge must have one vertex per part");
    EdgeId id = 0;
    for (int j = 0; j < parts(); ++j) {
        Vertex v = verts[static_cast<std::size_t>(j)];
        if (part_of(v) != j) throw std::invalid_argument("edge vertex in wrong part");
        id = id * n + local(v);
    }
    return id;
}

EdgeId HostInstance::edge_id2(Vertex x, Vertex y) const {
    if (part_of(x) > part_of(y)) std::swap(x, y);
    return static_cast<EdgeId>(local(x)) * n + local(y);
}

std::vector<Vertex> HostInstance::edge_vertices(EdgeId id) const {
    std::vector<Vertex> verts(static_cast<std::size_t>(parts()));
    for (int j = parts() - 1; j >= 0; --j) {
        verts[static_cast<std::size_t>(j)] = vertex(j, static_cast<int>(id % n));
        id /= n;
    }
    return verts;
}

void for_each_edge(const HostInstance& host, const std::function<void(const HostEdge&)>& fn) {
    const long total = host.edge_count();
    HostEdge e;
    for (EdgeId id = 0; id < total; ++id) {
        e.id = id;
        e.vertices = host.edge_vertices(id);
        fn(e);
    }
}

std::vector<HostEdge> enumerate_edges(const HostInstance& host) {
    std::vector<HostEdge> out;
    out.reserve(static_cast<std::size_t>(host.edge_count()));
    for_each_edge(host, [&](const HostEdge& e) { out.push_back(e); });
    return out;
}

namespace {

void fill_graph_copy_edges(const HostInstance& host, TargetCopy& c) {
    c.edges.clear();
    for (Vertex y : c.fan) {
        c.edges.push_back(host.edge_id2(c.pair_p[0], y));
        c.edges.push_back(host.edge_id2(c.pair_p[1], y));
    }
}

void fill_hyper_copy_edges(const HostInstance& host, TargetCopy& c) {
    c.edges.clear();
    std::vector<Vertex> verts(static_cast<std::size_t>(host.parts()));
    int pi = 0;
    for (int j = 0; j < host.parts(); ++j)
        if (j != c.part_p && j != c.part_q) verts[static_cast<std::size_t>(j)] = c.prefix[static_cast<std::size_t>(pi++)];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            verts[static_cast<std::size_t>(c.part_p)] = c.pair_p[a];
            verts[static_cast<std::size_t>(c.part_q)] = c.pair_q[b];
            c.edges.push_back(host.edge_id(verts));
        }
}

}  // namespace

void for_each_target_copy(const HostInstance& host, int r,
                          const std::function<void(const TargetCopy&)>& fn) {
    const int n = host.n;
    if (host.kind == HostKind::BipartiteGraph) {
        if (r < 1 || r > host.t) throw std::invalid_argument("target width r out of range [1, t]");
        if (r > n) return;
        TargetCopy c;
        for (int pp = 0; pp < 2; ++pp) {
            c.part_p = pp;
            c.part_q = 1 - pp;
            for_each_subset(n, 2, [&](const std::vector<int>& pair) {
                c.pair_p[0] = host.vertex(pp, pair[0]);
                c.pair_p[1] = host.vertex(pp, pair[1]);
                for_each_subset(n, r, [&](const std::vector<int>& fan) {
                    c.fan.clear();
                    for (int f : fan) c.fan.push_back(host.vertex(1 - pp, f));
                    fill_graph_copy_edges(host, c);
                    fn(c);
                });
            });
        }
    } else {
        const int k = host.k;
        TargetCopy c;
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q) {
                c.part_p = p;
                c.part_q = q;
                // prefix: one vertex in each part other than p, q
                std::vector<int> other;
                for (int j = 0; j < k; ++j)
                    if (j != p && j != q) other.push_back(j);
                std::vector<int> pref(other.size(), 0);
                auto rec = [&](auto&& self, std::size_t i) -> void {
                    if (i == other.size()) {
                        c.prefix.clear();
                        for (std::size_t m = 0; m < other.size(); ++m)
                            c.prefix.push_back(host.vertex(other[m], pref[m]));
                        for_each_subset(n, 2, [&](const std::vector<int>& a) {
                            c.pair_p[0] = host.vertex(p, a[0]);
                            c.pair_p[1] = host.vertex(p, a[1]);
                            for_each_subset(n, 2, [&](const std::vector<int>& b) {
                                c.pair_q[0] = host.vertex(q, b[0]);
                                c.pair_q[1] = host.vertex(q, b[1]);
                                fill_hyper_copy_edges(host, c);
                                fn(c);
                            });
                        });
                        return;
                    }
                    for (pref[i] = 0; pref[i] < n; ++pref[i]) self(self, i + 1);
                };
                rec(rec, 0);
            }
    }
}

std::vector<TargetCopy> enumerate_target_copies(const HostInstance& host, int r) {
    std::vector<TargetCopy> out;
    for_each_target_copy(host, r, [&](const TargetCopy& c) { out.push_back(c); });
    return out;
}

bool copy_less(const TargetCopy& a, const TargetCopy& b) {
    auto key = [](const TargetCopy& c) {
        std::vector<int> k{c.part_p, c.part_q};
        for (Vertex v : c.prefix) k.push_back(v);
        k.push_back(c.pair_p[0]);
        k.push_back(c.pair_p[1]);
        k.push_back(c.pair_q[0]);
        k.push_back(c.pair_q[1]);
        for (Vertex v : c.fan) k.push_back(v);
        return k;
    };
    return key(a) < key(b);
}

bool copy_eq(const TargetCopy& a, const TargetCopy& b) {
    return !copy_less(a, b) && !copy_less(b, a);
}

void for_each_copy_through(const HostInstance& host, const std::vector<EdgeId>& edge_ids, int r,
                           const std::function<void(const TargetCopy&)>& fn) {
    const int n = host.n;
    if (host.kind == HostKind::BipartiteGraph) {
        if (r < 1 || r > host.t) throw std::invalid_argument("target width r out of range [1, t]");
        if (r > n) return;
        TargetCopy c;
        for (EdgeId id : edge_ids) {
            auto verts = host.edge_vertices(id);
            // the listed edge joins pair vertex `verts[pp]` and a fan vertex
            for (int pp = 0; pp < 2; ++pp) {
                c.part_p = pp;
                c.part_q = 1 - pp;
                const Vertex px = verts[static_cast<std::size_t>(pp)];
                const Vertex fy = verts[static_cast<std::size_t>(1 - pp)];
                for (int o = 0; o < n; ++o) {
                    Vertex other = host.vertex(pp, o);
                    if (other == px) continue;
                    c.pair_p[0] = std::min(px, other);
                    c.pair_p[1] = std::max(px, other);
                    // fan = {fy} plus any (r-1)-subset of the remaining part
                    std::vector<int> rest;
                    for (int f = 0; f < n; ++f)
                        if (host.vertex(1 - pp, f) != fy) rest.push_back(f);
                    for_each_subset(static_cast<int>(rest.size()), r - 1,
                                    [&](const std::vector<int>& sel) {
                                        c.fan.clear();
                                        c.fan.push_back(fy);
                                        for (int s : sel) c.fan.push_back(host.vertex(1 - pp, rest[static_cast<std::size_t>(s)]));
                                        std::sort(c.fan.begin(), c.fan.end());
                                        fill_graph_copy_edges(host, c);
                                        fn(c);
                                    });
                }
            }
        }
    } else {
        const int k = host.k;
        TargetCopy c;
        for (EdgeId id : edge_ids) {
            auto verts = host.edge_vertices(id);
            for (int p = 0; p < k; ++p)
                for (int q = p + 1; q < k; ++q) {
                    c.part_p = p;
                    c.part_q = q;
                    c.prefix.clear();
                    for (int j = 0; j < k; ++j)
                        if (j != p && j != q) c.prefix.push_back(verts[static_cast<std::size_t>(j)]);
                    const Vertex a0 = verts[static_cast<std::size_t>(p)];
                    const Vertex b0 = verts[static_cast<std::size_t>(q)];
                    for (int a = 0; a < n; ++a) {
                        Vertex av = host.vertex(p, a);
                        if (av == a0) continue;
                        c.pair_p[0] = std::min(a0, av);
                        c.pair_p[1] = std::max(a0, av);
                        for (int b = 0; b < n; ++b) {
                            Vertex bv = host.vertex(q, b);
                            if (bv == b0) continue;
                            c.pair_q[0] = std::min(b0, bv);
                            c.pair_q[1] = std::max(b0, bv);
                            fill_hyper_copy_edges(host, c);
                            fn(c);
                        }
                    }
                }
        }
    }
}

std::vector<TargetCopy> copies_through_edges(const HostInstance& host,
                                             const std::vector<EdgeId>& edge_ids, int r) {
    if (edge_ids.empty()) throw std::invalid_argument("copies_through_edges: empty edge set");
    std::vector<TargetCopy> out;
    for_each_copy_through(host, edge_ids, r, [&](const TargetCopy& c) { out.push_back(c); });
    std::sort(out.begin(), out.end(), copy_less);
    out.erase(std::unique(out.begin(), out.end(), copy_eq), out.end());
    return out;
}

}  // namespace oddramsey
