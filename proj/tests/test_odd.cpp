#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oddramsey/odd.hpp"
#include "oddramsey/util.hpp"

using namespace oddramsey;

namespace {

Palette small_palette(int n1, int n2) {
    Palette p;
    p.n1 = n1;
    p.n2 = n2;
    return p;
}

// Coloring of K_{n,n} from a row-major color list (x-major, y-minor).
Coloring make_coloring(const HostInstance& h, const std::vector<int>& colors, int n1, int n2) {
    Coloring c(h, small_palette(n1, n2));
    for (std::size_t e = 0; e < colors.size(); ++e) c.set(static_cast<EdgeId>(e), colors[e]);
    return c;
}

TargetCopy graph_copy(const HostInstance& h, std::vector<int> pair_x, std::vector<int> fan_y) {
    TargetCopy c;
    c.part_p = 0;
    c.part_q = 1;
    c.pair_p[0] = h.vertex(0, pair_x[0]);
    c.pair_p[1] = h.vertex(0, pair_x[1]);
    for (int y : fan_y) c.fan.push_back(h.vertex(1, y));
    for (Vertex y : c.fan) {
        c.edges.push_back(h.edge_id2(c.pair_p[0], y));
        c.edges.push_back(h.edge_id2(c.pair_p[1], y));
    }
    return c;
}

// Brute-force reducibility oracle: try every set partition of the fan into
// >= 2 blocks and test whether all blocks induce bad copies.
bool oracle_reducible(const HostInstance& h, const TargetCopy& copy, const Coloring& col) {
    const int r = static_cast<int>(copy.fan.size());
    bool red = false;
    for_each_partition(r, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks < 2 || red) return;
        bool all_bad = true;
        for (int b = 0; b < blocks && all_bad; ++b) {
            TargetCopy part = copy;
            part.fan.clear();
            for (int i = 0; i < r; ++i)
                if (rgs[static_cast<std::size_t>(i)] == b) part.fan.push_back(copy.fan[static_cast<std::size_t>(i)]);
            part.edges.clear();
            for (Vertex y : part.fan) {
                part.edges.push_back(h.edge_id2(part.pair_p[0], y));
                part.edges.push_back(h.edge_id2(part.pair_p[1], y));
            }
            if (!is_bad(h, part, col)) all_bad = false;
        }
        if (all_bad) red = true;
    });
    return red;
}

}  // namespace

TEST_CASE("class profiles and badness") {
    auto h = HostInstance::bipartite(2, 2);
    // edges: 0=x0y0 1=x0y1 2=x1y0 3=x1y1
    auto copy = graph_copy(h, {0, 1}, {0, 1});

    // colors (a,a,b,b) on (x0y0, x1y0, x0y1, x1y1)
    auto c1 = make_coloring(h, {0, 1, 0, 1}, 2, 0);
    auto p1 = class_profile(h, copy, c1);
    CHECK(p1.mult.at(0) == 2);
    CHECK(p1.mult.at(1) == 2);
    CHECK(p1.total == 4);
    CHECK(is_bad(h, copy, c1));

    // colors (a,b,b,b)
    auto c2 = make_coloring(h, {0, 1, 1, 1}, 2, 0);
    auto p2 = class_profile(h, copy, c2);
    CHECK(p2.mult.at(0) == 1);
    CHECK(p2.mult.at(1) == 3);
    CHECK_FALSE(is_bad(h, copy, c2));

    // monochromatic -> {c:4}
    auto c3 = make_coloring(h, {0, 0, 0, 0}, 1, 0);
    CHECK(class_profile(h, copy, c3).mult.at(0) == 4);
    CHECK(is_bad(h, copy, c3));

    // hypergraph target all one color -> {c:4}
    auto h3 = HostInstance::hypergraph(2, 3);
    Coloring call(h3, small_palette(1, 0));
    for (EdgeId e = 0; e < h3.edge_count(); ++e) call.set(e, 0);
    auto copies = enumerate_target_copies(h3, 2);
    REQUIRE_FALSE(copies.empty());
    CHECK(class_profile(h3, copies[0], call).mult.at(0) == 4);
    CHECK(is_bad(h3, copies[0], call));

    // uncolored edge inside the copy is an error
    Coloring part(h, small_palette(2, 0));
    part.set(0, 0);
    CHECK_THROWS_AS(class_profile(h, copy, part), std::invalid_argument);
}

TEST_CASE("decompose_irreducible on the three canonical examples") {
    auto h = HostInstance::bipartite(2, 2);
    auto copy = graph_copy(h, {0, 1}, {0, 1});

    // x0y0=a x1y0=a x0y1=b x1y1=b: columns monochromatic, reducible into two K_{2,1}
    auto red = make_coloring(h, {0, 1, 0, 1}, 2, 0);
    auto dec = decompose_irreducible(h, copy, red);
    REQUIRE(dec.has_value());
    CHECK(dec->parts.size() == 2);
    for (const auto& part : dec->parts) {
        CHECK(part.copy.fan.size() == 1);
        CHECK(part.irreducible == Reducibility::Irreducible);
        CHECK(part.profile.all_even());
    }

    // x0y0=a x0y1=a x1y0=b x1y1=b: rows monochromatic, irreducible
    auto irr = make_coloring(h, {0, 0, 1, 1}, 2, 0);
    CHECK_FALSE(decompose_irreducible(h, copy, irr).has_value());

    // bad K_{2,1} is irreducible by definition
    auto k21 = graph_copy(h, {0, 1}, {0});
    auto mono = make_coloring(h, {0, 0, 0, 0}, 1, 0);
    CHECK_FALSE(decompose_irreducible(h, k21, mono).has_value());

    // errors: copy not bad; hypergraph target
    auto notbad = make_coloring(h, {0, 1, 1, 1}, 2, 0);
    CHECK_THROWS_AS(decompose_irreducible(h, copy, notbad), std::invalid_argument);
    auto h3 = HostInstance::hypergraph(2, 3);
    auto hcopy = enumerate_target_copies(h3, 2)[0];
    Coloring call(h3, small_palette(1, 0));
    for (EdgeId e = 0; e < h3.edge_count(); ++e) call.set(e, 0);
    CHECK_THROWS_AS(decompose_irreducible(h3, hcopy, call), std::invalid_argument);
}

TEST_CASE("decomposition validity against the partition oracle") {
    // all colorings of K_{2,r} for r <= 4 with up to 3 colors, n = 6 host
    auto h = HostInstance::bipartite(6, 4);
    Rng rng(12345);
    for (int r = 2; r <= 4; ++r) {
        auto copy = graph_copy(h, {0, 2}, [&] {
            std::vector<int> f;
            for (int i = 0; i < r; ++i) f.push_back(i);
            return f;
        }());
        const int m = 2 * r;
        std::vector<int> colors(static_cast<std::size_t>(m), 0);
        // exhaust 3^(2r) colorings
        long total = 1;
        for (int i = 0; i < m; ++i) total *= 3;
        for (long code = 0; code < total; ++code) {
            long c = code;
            Coloring col(h, small_palette(3, 0));
            for (int i = 0; i < m; ++i) {
                colors[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
                c /= 3;
            }
            for (int i = 0; i < m; ++i) col.set(copy.edges[static_cast<std::size_t>(i)], colors[static_cast<std::size_t>(i)]);
            if (!is_bad(h, copy, col)) continue;
            auto dec = decompose_irreducible(h, copy, col);
            const bool oracle = oracle_reducible(h, copy, col);
            CHECK(dec.has_value() == oracle);
            if (dec) {
                // parts are bad, irreducible, partition the fan, sizes ascending
                std::vector<Vertex> seen;
                std::size_t prev = 0;
                for (const auto& part : dec->parts) {
                    CHECK(is_bad(h, part.copy, col));
                    CHECK_FALSE(oracle_reducible(h, part.copy, col));
                    CHECK(part.copy.fan.size() >= prev);
                    prev = part.copy.fan.size();
                    CHECK(part.copy.fan.size() < copy.fan.size());
                    for (Vertex v : part.copy.fan) seen.push_back(v);
                }
                CHECK(dec->parts.size() >= 2);
                std::sort(seen.begin(), seen.end());
                CHECK(seen == copy.fan);
            }
        }
    }
}

TEST_CASE("find_bad_target basics") {
    auto h = HostInstance::bipartite(2, 2);
    Coloring mono(h, small_palette(1, 0));
    for (EdgeId e = 0; e < 4; ++e) mono.set(e, 0);
    auto bad = find_bad_target(h, mono);
    REQUIRE(bad.has_value());
    CHECK(bad->profile.mult.at(0) == 4);

    // recolor one edge: classes of size 1 and 3 are odd
    Coloring fixed = mono;
    fixed.palette.n1 = 2;
    fixed.set(0, 1);
    CHECK_FALSE(find_bad_target(h, fixed).has_value());

    Coloring partial(h, small_palette(1, 0));
    partial.set(0, 0);
    CHECK_THROWS_AS(find_bad_target(h, partial), std::invalid_argument);
    CHECK_FALSE(find_bad_target_partial(h, partial).has_value());
}

TEST_CASE("every 2-coloring of K_{4,4} has a bad K_{2,2} (exhaustive)") {
    auto h = HostInstance::bipartite(4, 2);
    const int edges = 16;
    for (std::uint32_t mask = 0;; ++mask) {
        Coloring col(h, small_palette(2, 0));
        for (int e = 0; e < edges; ++e) col.set(e, (mask >> e) & 1u);
        CHECK(find_bad_target(h, col).has_value());
        auto w = pigeonhole_witness(h, col, 2);
        REQUIRE(w.has_value());
        CHECK(w->profile.all_even());
        if (mask == 0xFFFF) break;
    }
}

TEST_CASE("pigeonhole witness examples") {
    auto h = HostInstance::bipartite(2, 2);
    // (a,a,b,b) on (x0y0, x1y0, x0y1, x1y1): both per-y cherries monochromatic
    auto col = make_coloring(h, {0, 1, 0, 1}, 2, 0);
    auto w = pigeonhole_witness(h, col, 2);
    REQUIRE(w.has_value());
    CHECK(w->copy.fan.size() == 2);
    CHECK(w->profile.all_even());

    // randomized check at n=6, t=2 with 3 = floor(6/2) colors: a witness must
    // always exist
    auto h6 = HostInstance::bipartite(6, 2);
    Rng rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        Coloring c(h6, small_palette(3, 0));
        for (EdgeId e = 0; e < h6.edge_count(); ++e)
            c.set(e, static_cast<int>(uniform_below(rng, 3)));
        auto ww = pigeonhole_witness(h6, c, 2);
        REQUIRE(ww.has_value());
        CHECK(is_bad(h6, ww->copy, c));
    }
}

TEST_CASE("hypergraph lower bound witness") {
    // k=2 reduces to the graph pigeonhole witness
    auto h2 = HostInstance::hypergraph(4, 2);
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Coloring c(h2, small_palette(2, 0));
        for (EdgeId e = 0; e < h2.edge_count(); ++e)
            c.set(e, static_cast<int>(uniform_below(rng, 2)));
        auto w = hypergraph_lower_bound_witness(h2, c);
        REQUIRE(w.has_value());
        CHECK(is_bad(h2, w->copy, c));
    }

    // k=3, n=4: any 2-coloring leaves every link 2-colored, witness guaranteed
    auto h3 = HostInstance::hypergraph(4, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Coloring c(h3, small_palette(2, 0));
        for (EdgeId e = 0; e < h3.edge_count(); ++e)
            c.set(e, static_cast<int>(uniform_below(rng, 2)));
        auto w = hypergraph_lower_bound_witness(h3, c);
        REQUIRE(w.has_value());
        CHECK(is_bad(h3, w->copy, c));
        CHECK(w->copy.edges.size() == 4);
    }

    // k=3, n=2: give every link four distinct colors; no witness exists
    auto h32 = HostInstance::hypergraph(2, 3);
    Coloring c(h32, small_palette(8, 0));
    for (EdgeId e = 0; e < h32.edge_count(); ++e) c.set(e, static_cast<int>(e % 4) + 4 * (static_cast<int>(e) / 4));
    CHECK_FALSE(hypergraph_lower_bound_witness(h32, c).has_value());
    CHECK_FALSE(find_bad_target(h32, c).has_value());
}

TEST_CASE("witness badness is re-checked for every search op") {
    auto h = HostInstance::bipartite(3, 2);
    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        Coloring c(h, small_palette(2, 0));
        for (EdgeId e = 0; e < h.edge_count(); ++e)
            c.set(e, static_cast<int>(uniform_below(rng, 2)));
        if (auto b = find_bad_target(h, c)) CHECK(is_bad(h, b->copy, c));
        if (auto w = pigeonhole_witness(h, c, 2)) CHECK(is_bad(h, w->copy, c));
    }
}
