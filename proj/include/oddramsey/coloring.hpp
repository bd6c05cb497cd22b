#pragma once

// Palettes (main colors N1, reserve colors N2) and edge colorings, with the
// plain-text coloring file format.

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "oddramsey/host.hpp"

namespace oddramsey {

inline constexpr int kUncolored = -1;

// N1 occupies color ids [0, n1); N2 occupies [n1, n1+n2).
struct Palette {
    int n1 = 0;
    int n2 = 0;
    double delta = 0.0;  // exponent used to size n2 (informational)

    int total() const { return n1 + n2; }
    bool in_n1(int c) const { return c >= 0 && c < n1; }
    bool in_n2(int c) const { return c >= n1 && c < n1 + n2; }

    // Graph default: n1 = ceil(n/t); hypergraph default: n1 = ceil(n/2).
    // Both cases: n2 = ceil(n^delta).
    static Palette defaults(const HostInstance& host, double delta);
};

// Default delta: midpoint of the paper's admissible interval for the host.
double default_delta(const HostInstance& host);
double default_epsilon(const HostInstance& host);

struct Coloring {
    Palette palette;
    std::vector<int> assignment;  // edge id -> color id or kUncolored

    Coloring() = default;
    Coloring(const HostInstance& host, Palette p)
        : palette(p), assignment(static_cast<std::size_t>(host.edge_count()), kUncolored) {}

    int color(EdgeId e) const { return assignment[static_cast<std::size_t>(e)]; }
    void set(EdgeId e, int c) { assignment[static_cast<std::size_t>(e)] = c; }
    bool total() const;
    long uncolored_count() const;
    int distinct_colors_used() const;
};

// Coloring file (UTF-8 text):
//   odd-ramsey v1 kind=<bg|kh> n=<n> t=<t> k=<k> n1=<n1> n2=<n2>
// then one line per edge "<edge-id> <color-id|->" in ascending edge id, every
// edge listed exactly once, trailing newline required.
struct ColoringFile {
    HostInstance host;
    Coloring coloring;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

ColoringFile read_coloring(std::istream& in);
ColoringFile read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const HostInstance& host, const Coloring& coloring);
void write_coloring_file(const std::string& path, const HostInstance& host, const Coloring& coloring);

}  // namespace oddramsey
