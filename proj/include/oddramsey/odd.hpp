#pragma once

// Odd-color-class calculus: class profiles, badness, reducibility of bad
// K_{2,r} copies, bad-copy search, and the lower-bound pigeonhole witness.

#include <map>
#include <optional>

#include "oddramsey/coloring.hpp"
#include "oddramsey/host.hpp"

namespace oddramsey {

// Color multiset of one copy's edges; only colors actually present appear.
struct ClassProfile {
    std::map<int, int> mult;
    int total = 0;

    bool all_even() const {
        for (const auto& [c, m] : mult)
            if (m % 2 != 0) return false;
        return true;
    }
};

enum class Reducibility { Irreducible, Reducible, NotApplicable };

struct BadCopy {
    TargetCopy copy;
    ClassProfile profile;
    Reducibility irreducible = Reducibility::NotApplicable;
};

// A partition of a bad K_{2,r} into irreducible bad copies on the same pair
// side, sizes ascending.
struct Decomposition {
    std::vector<BadCopy> parts;
};

ClassProfile class_profile(const HostInstance& host, const TargetCopy& copy, const Coloring& col);
bool is_bad(const HostInstance& host, const TargetCopy& copy, const Coloring& col);

// True iff the copy is fully colored (no kUncolored edge).
bool copy_fully_colored(const TargetCopy& copy, const Coloring& col);

// Graph case only; requires is_bad. nullopt means the copy is irreducible;
// otherwise one canonical decomposition into irreducible bad parts.
std::optional<Decomposition> decompose_irreducible(const HostInstance& host, const TargetCopy& copy,
                                                   const Coloring& col);

// Convenience: reducibility verdict for a bad graph copy.
bool is_reducible(const HostInstance& host, const TargetCopy& copy, const Coloring& col);

// Scans enumerate_target_copies (r=t for graphs, the fixed hypergraph
// target) and returns the first bad copy in enumeration order, or nullopt.
// Requires a total coloring.
std::optional<BadCopy> find_bad_target(const HostInstance& host, const Coloring& col);

// Same scan for partial colorings: copies with uncolored edges are skipped.
std::optional<BadCopy> find_bad_target_partial(const HostInstance& host, const Coloring& col);

// Lower-bound witness: a pair u,v in one part and t vertices in the other,
// each cherry {x_i u, x_i v} monochromatic; the induced K_{2,t} is bad.
// Guaranteed non-null when at most floor(n/t) distinct colors are used.
std::optional<BadCopy> pigeonhole_witness(const HostInstance& host, const Coloring& col, int t);

// Hypergraph analogue: fixes k-2 prefix vertices (one per leading part),
// projects onto the last-two-parts link and runs pigeonhole_witness with
// t=2; returns the lifted 4-edge bad copy.
std::optional<BadCopy> hypergraph_lower_bound_witness(const HostInstance& host, const Coloring& col);

}  // namespace oddramsey
