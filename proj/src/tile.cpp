#include "oddramsey/tile.hpp"

#include <sstream>
#include <stdexcept>

namespace oddramsey {

Tile build_h2_tile(const HostInstance& host, const Palette& palette, EdgeId edge, int color) {
    if (!palette.in_n2(color)) throw std::invalid_argument("H2 tile color must come from N2");
    Tile tile;
    tile.kind = TileKind::H2;
    tile.color = color;
    tile.colored_edges = {edge};
    const auto vs = host.edge_vertices(edge);
    tile.verts.push_back(make_set_key(vs));
    if (host.kind == HostKind::BipartiteGraph) {
        tile.verts.push_back(make_set_key({vs[0]}, color));
        tile.verts.push_back(make_set_key({vs[1]}, color));
    } else {
        // one colored (k-1)-subset per omitted coordinate
        for (std::size_t omit = 0; omit < vs.size(); ++omit) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != omit) sub.push_back(vs[i]);
            tile.verts.push_back(make_set_key(sub, color));
        }
    }
    std::sort(tile.verts.begin(), tile.verts.end());
    return tile;
}

std::string dump_tile(const HostInstance& host, const Tile& tile) {
    std::ostringstream os;
    const bool graph = host.kind == HostKind::BipartiteGraph;
    auto set_str = [](const std::vector<Vertex>& vs) {
        std::ostringstream s;
        s << '{';
        for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? "," : "") << vs[i];
        s << '}';
        return s.str();
    };
    if (tile.kind == TileKind::H2) {
        os << (graph ? "H2" : "H2k") << " edge=" << tile.colored_edges.front()
           << " color=" << tile.color;
        return os.str();
    }
    if (graph) {
        std::vector<Vertex> sy = tile.sides[1];
        std::sort(sy.begin(), sy.end());
        os << "H1 color=" << tile.color << " X=" << set_str(tile.sides[0]) << " Y=" << set_str(sy)
           << " M={";
        for (std::size_t i = 0; i < tile.sides[0].size(); ++i)
            os << (i ? "," : "") << tile.sides[0][i] << '-' << tile.sides[1][i];
        os << '}';
        return os.str();
    }
    os << "H1k color=" << tile.color << " parts=[";
    for (std::size_t j = 0; j < tile.sides.size(); ++j) {
        std::vector<Vertex> p = tile.sides[j];
        std::sort(p.begin(), p.end());
        os << (j ? ";" : "") << set_str(p);
    }
    os << "] labels=[";
    for (std::size_t j = 0; j < tile.sides.size(); ++j) {
        os << (j ? ";" : "");
        for (std::size_t l = 0; l < tile.sides[j].size(); ++l)
            os << (l ? "," : "") << tile.sides[j][l];
    }
    os << ']';
    return os.str();
}

}  // namespace oddramsey
