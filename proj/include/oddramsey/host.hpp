#pragma once

// Host structures: the balanced complete bipartite graph K_{n,n} and the
// complete k-partite k-uniform hypergraph K^(k)_{n,..,n}, with dense edge
// indexing, plus the target copies (K_{2,r} grids and K_{1,..,1,2,2}).

#include <cstdint>
#include <functional>
#include <vector>

#include "oddramsey/util.hpp"

namespace oddramsey {

using Vertex = int;   // global vertex id; part j occupies [j*n, (j+1)*n)
using EdgeId = long;  // dense edge index in [0, n^k)

enum class HostKind { BipartiteGraph, KPartiteHypergraph };

struct HostInstance {
    HostKind kind = HostKind::BipartiteGraph;
    int n = 0;  // vertices per part
    int t = 2;  // target width K_{2,t} (graph case)
    int k = 2;  // number of parts / uniformity (hypergraph case; graph has 2)

    static HostInstance bipartite(int n, int t);
    static HostInstance hypergraph(int n, int k);

    int parts() const { return kind == HostKind::BipartiteGraph ? 2 : k; }
    long edge_count() const;
    int part_of(Vertex v) const { return v / n; }
    int local(Vertex v) const { return v % n; }
    Vertex vertex(int part, int local) const { return part * n + local; }

    // Mixed-radix edge index; verts holds one vertex per part, in part order.
    EdgeId edge_id(const std::vector<Vertex>& verts) const;
    EdgeId edge_id2(Vertex x, Vertex y) const;  // graph convenience (either order)
    std::vector<Vertex> edge_vertices(EdgeId id) const;
};

struct HostEdge {
    EdgeId id = 0;
    std::vector<Vertex> vertices;  // one per part, ascending part index
};

// A copy of the target: K_{2,r} (graph) or K_{1,..,1,2,2} (hypergraph).
//
// Graph case: the pair side lives in part `part_p`, the r-set (fan) in the
// other part. Copies are oriented: the same edge set with the pair side in X
// vs in Y counts as two copies.
// Hypergraph case: `part_p` < `part_q` hold the two pairs, `prefix` has one
// vertex in each remaining part; the copy has the 4 grid edges.
struct TargetCopy {
    int part_p = 0;
    int part_q = 1;
    Vertex pair_p[2] = {0, 0};       // pair in part_p (graph: the size-2 side)
    Vertex pair_q[2] = {0, 0};       // hypergraph only
    std::vector<Vertex> fan;         // graph only: r-set in part_q
    std::vector<Vertex> prefix;      // hypergraph only: k-2 fixed vertices
    std::vector<EdgeId> edges;       // 2r (graph) or 4 (hypergraph) member edges

    int r(const HostInstance& host) const {
        return host.kind == HostKind::BipartiteGraph ? static_cast<int>(fan.size()) : 2;
    }
};

std::vector<HostEdge> enumerate_edges(const HostInstance& host);
void for_each_edge(const HostInstance& host, const std::function<void(const HostEdge&)>& fn);

// All copies of the r-target (graph: K_{2,r}; hypergraph: r ignored), in a
// fixed deterministic order. Graph count: 2*C(n,2)*C(n,r); hypergraph count:
// C(k,2)*n^(k-2)*C(n,2)^2.
std::vector<TargetCopy> enumerate_target_copies(const HostInstance& host, int r);
void for_each_target_copy(const HostInstance& host, int r,
                          const std::function<void(const TargetCopy&)>& fn);

// Exactly the copies containing at least one of the given edges, each once,
// in the same deterministic order as enumerate_target_copies.
std::vector<TargetCopy> copies_through_edges(const HostInstance& host,
                                             const std::vector<EdgeId>& edge_ids, int r);

// Visitation form used on hot paths; may call fn more than once per copy.
void for_each_copy_through(const HostInstance& host, const std::vector<EdgeId>& edge_ids, int r,
                           const std::function<void(const TargetCopy&)>& fn);

// Deterministic total order on copies (enumeration order); used to dedupe.
bool copy_less(const TargetCopy& a, const TargetCopy& b);
bool copy_eq(const TargetCopy& a, const TargetCopy& b);

}  // namespace oddramsey
