#include "oddramsey/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace oddramsey {

double default_epsilon(const HostInstance& host) {
    if (host.kind == HostKind::BipartiteGraph) return 1.0 / (2.0 * host.t + 3.0);
    return 1.0 / (host.k * host.k + 2.0);
}

double default_delta(const HostInstance& host) {
    if (host.kind == HostKind::BipartiteGraph) {
        const double eps = default_epsilon(host);
        const double lo = 1.0 - (2.0 * host.t + 1.0) * eps * eps * eps * eps;
        return (lo + 1.0) / 2.0;
    }
    const double k2 = static_cast<double>(host.k) * host.k;
    const double lo = std::max({1.0 - (k2 + 1.0) / (2.0 * std::pow(k2 + 2.0, 4)),
                                (k2 + 1.0) / (k2 + 2.0),
                                0.5 * (1.0 + (k2 + 1.0) / (k2 + 2.0))});
    return (lo + 1.0) / 2.0;
}

Palette Palette::defaults(const HostInstance& host, double delta) {
    Palette p;
    p.delta = delta;
    const int n = host.n;
    if (host.kind == HostKind::BipartiteGraph)
        p.n1 = static_cast<int>((n + host.t - 1) / host.t);
    else
        p.n1 = (n + 1) / 2;
    p.n2 = static_cast<int>(std::ceil(std::pow(static_cast<double>(n), delta)));
    return p;
}

bool Coloring::total() const {
    return std::find(assignment.begin(), assignment.end(), kUncolored) == assignment.end();
}

long Coloring::uncolored_count() const {
    return static_cast<long>(std::count(assignment.begin(), assignment.end(), kUncolored));
}

int Coloring::distinct_colors_used() const {
    std::set<int> s;
    for (int c : assignment)
        if (c != kUncolored) s.insert(c);
    return static_cast<int>(s.size());
}

void write_coloring(std::ostream& out, const HostInstance& host, const Coloring& col) {
    out << "odd-ramsey v1 kind=" << (host.kind == HostKind::BipartiteGraph ? "bg" : "kh")
        << " n=" << host.n << " t=" << host.t << " k=" << host.parts()
        << " n1=" << col.palette.n1 << " n2=" << col.palette.n2 << "\n";
    const long total = host.edge_count();
    for (EdgeId e = 0; e < total; ++e) {
        out << e << ' ';
        const int c = col.color(e);
        if (c == kUncolored)
            out << '-';
        else
            out << c;
        out << '\n';
    }
}

void write_coloring_file(const std::string& path, const HostInstance& host, const Coloring& col) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_coloring(f, host, col);
}

namespace {

// key=value fields of the header line
std::string header_field(const std::string& header, const std::string& key, int line) {
    const std::string pat = key + "=";
    auto pos = header.find(pat);
    if (pos == std::string::npos) throw ParseError(line, "missing header field " + key);
    pos += pat.size();
    auto end = header.find(' ', pos);
    if (end == std::string::npos) end = header.size();
    return header.substr(pos, end - pos);
}

int parse_int(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, "bad integer for " + what + ": '" + s + "'");
    }
}

}  // namespace

ColoringFile read_coloring(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (content.empty()) throw ParseError(1, "empty file");
    if (content.back() != '\n') throw ParseError(1, "missing trailing newline");

    std::istringstream ss(content);
    std::string header;
    std::getline(ss, header);
    int line = 1;
    if (header.rfind("odd-ramsey v1 ", 0) != 0) throw ParseError(1, "bad header magic");

    const std::string kind = header_field(header, "kind", line);
    const int n = parse_int(header_field(header, "n", line), line, "n");
    const int t = parse_int(header_field(header, "t", line), line, "t");
    const int k = parse_int(header_field(header, "k", line), line, "k");
    const int n1 = parse_int(header_field(header, "n1", line), line, "n1");
    const int n2 = parse_int(header_field(header, "n2", line), line, "n2");

    ColoringFile out;
    if (kind == "bg")
        out.host = HostInstance::bipartite(n, t);
    else if (kind == "kh")
        out.host = HostInstance::hypergraph(n, k);
    else
        throw ParseError(1, "unknown kind '" + kind + "'");
    if (n1 < 0 || n2 < 0) throw ParseError(1, "negative palette size");

    Palette pal;
    pal.n1 = n1;
    pal.n2 = n2;
    out.coloring = Coloring(out.host, pal);

    const long total = out.host.edge_count();
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    std::string ln;
    while (std::getline(ss, ln)) {
        ++line;
        if (ln.empty()) throw ParseError(line, "empty line");
        std::istringstream ls(ln);
        long eid = -1;
        std::string colstr;
        if (!(ls >> eid >> colstr)) throw ParseError(line, "expected '<edge-id> <color|->'");
        std::string extra;
        if (ls >> extra) throw ParseError(line, "trailing characters");
        if (eid < 0 || eid >= total) throw ParseError(line, "edge id out of range");
        if (seen[static_cast<std::size_t>(eid)]) throw ParseError(line, "duplicate edge line");
        seen[static_cast<std::size_t>(eid)] = true;
        if (colstr == "-") {
            out.coloring.set(eid, kUncolored);
        } else {
            const int c = parse_int(colstr, line, "color");
            if (c < 0 || c >= pal.total())
                throw ParseError(line, "palette mismatch: color " + std::to_string(c) +
                                           " outside [0, " + std::to_string(pal.total()) + ")");
            out.coloring.set(eid, c);
        }
    }
    for (long e = 0; e < total; ++e)
        if (!seen[static_cast<std::size_t>(e)])
            throw ParseError(line + 1, "missing edge line for edge " + std::to_string(e));
    // lines must be ascending: with every id present exactly once, ascending
    // order is equivalent to id == running index; re-check cheaply.
    {
        std::istringstream rs(content);
        std::string skip;
        std::getline(rs, skip);
        long expect = 0;
        int l2 = 1;
        while (std::getline(rs, ln)) {
            ++l2;
            std::istringstream ls(ln);
            long eid;
            ls >> eid;
            if (eid != expect) throw ParseError(l2, "edge lines not in ascending order");
            ++expect;
        }
    }
    return out;
}

ColoringFile read_coloring_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_coloring(f);
}

}  // namespace oddramsey
