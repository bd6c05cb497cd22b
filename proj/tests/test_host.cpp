#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "oddramsey/coloring.hpp"
#include "oddramsey/host.hpp"

using namespace oddramsey;

namespace {

// Independent oracle: count K_{2,r} copies by direct nested loops over
// vertex subsets (bitmask fans), sharing no code with the library enumerator.
long oracle_graph_copy_count(int n, int r) {
    long count = 0;
    for (int orient = 0; orient < 2; ++orient)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (unsigned m = 0; m < (1u << n); ++m)
                    if (__builtin_popcount(m) == r) ++count;
    return count;
}

long oracle_hyper_copy_count(int n, int k) {
    long pairs2 = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) ++pairs2;
    long partpairs = 0;
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q) ++partpairs;
    long pref = 1;
    for (int j = 0; j < k - 2; ++j) pref *= n;
    return partpairs * pref * pairs2 * pairs2;
}

}  // namespace

TEST_CASE("edge enumeration counts and ordering") {
    auto b2 = HostInstance::bipartite(2, 2);
    CHECK(enumerate_edges(b2).size() == 4);

    auto h32 = HostInstance::hypergraph(2, 3);
    CHECK(enumerate_edges(h32).size() == 8);

    auto b6 = HostInstance::bipartite(6, 2);
    auto edges = enumerate_edges(b6);
    REQUIRE(edges.size() == 36);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(edges[i].id == static_cast<EdgeId>(i));
        if (i > 0) CHECK(edges[i].id > edges[i - 1].id);
    }
}

TEST_CASE("edge id bijectivity for n <= 8, k <= 4") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 8; ++n) {
            if (k == 4 && n > 6) continue;  // keep runtime sane; 6^4 covers the pattern
            auto h = k == 2 ? HostInstance::bipartite(n, 2) : HostInstance::hypergraph(n, k);
            std::set<EdgeId> ids;
            for_each_edge(h, [&](const HostEdge& e) {
                auto roundtrip = h.edge_id(e.vertices);
                CHECK(roundtrip == e.id);
                for (int j = 0; j < h.parts(); ++j)
                    CHECK(h.part_of(e.vertices[static_cast<std::size_t>(j)]) == j);
                ids.insert(e.id);
            });
            CHECK(static_cast<long>(ids.size()) == h.edge_count());
            CHECK(*ids.begin() == 0);
            CHECK(*ids.rbegin() == h.edge_count() - 1);
        }
}

TEST_CASE("graph target copy enumeration matches the oracle") {
    auto b2 = HostInstance::bipartite(2, 2);
    CHECK(enumerate_target_copies(b2, 2).size() == 2);  // one per orientation

    auto b4 = HostInstance::bipartite(4, 2);
    CHECK(enumerate_target_copies(b4, 2).size() == 72);  // 2*6*6

    for (int n = 2; n <= 6; ++n)
        for (int t = 2; t <= 3; ++t)
            for (int r = 1; r <= t; ++r) {
                auto h = HostInstance::bipartite(n, t);
                auto copies = enumerate_target_copies(h, r);
                CHECK(static_cast<long>(copies.size()) == oracle_graph_copy_count(n, r));
                // no duplicates, everything well-formed
                for (std::size_t i = 1; i < copies.size(); ++i)
                    CHECK(copy_less(copies[i - 1], copies[i]));
                for (const auto& c : copies) {
                    CHECK(static_cast<int>(c.edges.size()) == 2 * r);
                    std::set<EdgeId> es(c.edges.begin(), c.edges.end());
                    CHECK(es.size() == c.edges.size());
                }
            }
}

TEST_CASE("hypergraph target copy enumeration matches the oracle") {
    auto h22 = HostInstance::hypergraph(2, 2);
    CHECK(enumerate_target_copies(h22, 2).size() == 1);

    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 6; ++n) {
            auto h = HostInstance::hypergraph(n, k);
            auto copies = enumerate_target_copies(h, 2);
            CHECK(static_cast<long>(copies.size()) == oracle_hyper_copy_count(n, k));
            for (const auto& c : copies) {
                CHECK(c.edges.size() == 4);
                std::set<EdgeId> es(c.edges.begin(), c.edges.end());
                CHECK(es.size() == 4);
            }
        }
}

TEST_CASE("copies_through_edges equals filtering the full enumeration") {
    auto b2 = HostInstance::bipartite(2, 2);
    auto through0 = copies_through_edges(b2, {0}, 2);
    CHECK(through0.size() == 2);  // both orientations pass through edge 0

    auto b4 = HostInstance::bipartite(4, 2);
    // r=1 through a single edge: 2*(n-1)=6 copies of K_{2,1}
    CHECK(copies_through_edges(b4, {5}, 1).size() == 6);

    // filter oracle on a few hosts
    auto check_filter = [](const HostInstance& h, const std::vector<EdgeId>& es, int r) {
        auto fast = copies_through_edges(h, es, r);
        std::vector<TargetCopy> slow;
        for (const auto& c : enumerate_target_copies(h, r)) {
            bool hit = false;
            for (EdgeId e : c.edges)
                for (EdgeId q : es)
                    if (e == q) hit = true;
            if (hit) slow.push_back(c);
        }
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(copy_eq(fast[i], slow[i]));
    };
    check_filter(b4, {0, 7}, 2);
    check_filter(b4, {3}, 1);
    check_filter(HostInstance::hypergraph(3, 3), {0, 13}, 2);

    // edge_ids = all edges reproduces the full enumeration
    std::vector<EdgeId> all;
    for (long e = 0; e < b4.edge_count(); ++e) all.push_back(e);
    auto through_all = copies_through_edges(b4, all, 2);
    auto full = enumerate_target_copies(b4, 2);
    std::sort(full.begin(), full.end(), copy_less);
    REQUIRE(through_all.size() == full.size());
    for (std::size_t i = 0; i < full.size(); ++i) CHECK(copy_eq(through_all[i], full[i]));
}

TEST_CASE("coloring file round trip") {
    auto host = HostInstance::bipartite(2, 2);
    Palette pal;
    pal.n1 = 1;
    pal.n2 = 1;
    Coloring col(host, pal);
    for (EdgeId e = 0; e < 4; ++e) col.set(e, 0);

    std::ostringstream out;
    write_coloring(out, host, col);
    const std::string bytes = out.str();

    std::istringstream in(bytes);
    auto parsed = read_coloring(in);
    CHECK(parsed.host.n == 2);
    CHECK(parsed.coloring.total());

    std::ostringstream out2;
    write_coloring(out2, parsed.host, parsed.coloring);
    CHECK(out2.str() == bytes);  // byte-identical round trip
}

TEST_CASE("coloring file rejects malformed input") {
    auto host = HostInstance::bipartite(2, 2);
    Palette pal;
    pal.n1 = 1;
    pal.n2 = 1;
    Coloring col(host, pal);
    for (EdgeId e = 0; e < 4; ++e) col.set(e, 0);
    std::ostringstream out;
    write_coloring(out, host, col);
    const std::string good = out.str();

    // color id beyond the palette
    {
        std::string bad = good;
        bad.replace(bad.find("\n0 0\n"), 5, "\n0 9\n");
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_coloring(in), ParseError);
    }
    // missing edge line
    {
        std::string bad = good.substr(0, good.rfind("3 0\n"));
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_coloring(in), ParseError);
    }
    // duplicate edge line
    {
        std::string bad = good + "3 0\n";
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_coloring(in), ParseError);
    }
    // missing trailing newline
    {
        std::string bad = good.substr(0, good.size() - 1);
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_coloring(in), ParseError);
    }
    // uncolored entries are legal
    {
        std::string ok = good;
        ok.replace(ok.find("\n2 0\n"), 5, "\n2 -\n");
        std::istringstream in(ok);
        auto parsed = read_coloring(in);
        CHECK_FALSE(parsed.coloring.total());
        CHECK(parsed.coloring.uncolored_count() == 1);
    }
}
