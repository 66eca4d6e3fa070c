#include <sstream>

#include "json.hpp"
#include "pscirc/embedding.hpp"

namespace pscirc {

namespace {

nlohmann::json dart_json(const Dart& d) {
    return {{"curve", d.curve}, {"edge", d.edge_index}, {"dir", d.forward ? "fwd" : "bwd"}};
}

}  // namespace

std::string export_graph_json(const IntersectionMatrix& a) {
    const EmbeddedGraph g(a);
    const auto faces = trace_faces(g);
    const int L = g.row_length();

    nlohmann::json j;
    j["format"] = "pscirc-graph";
    j["version"] = 1;
    j["labels"] = g.labels();

    j["vertices"] = nlohmann::json::array();
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const Vertex& vx = g.vertices()[v];
        j["vertices"].push_back({{"id", static_cast<int>(v)},
                                 {"plus", {{"curve", vx.i}, {"pos", vx.p}}},
                                 {"minus", {{"curve", vx.j}, {"pos", vx.q}}}});
    }

    j["edges"] = nlohmann::json::array();
    for (int label : g.labels())
        for (int p = 0; p < L; ++p)
            j["edges"].push_back({{"curve", label},
                                  {"edge", p},
                                  {"from", g.vertex_at(label, p)},
                                  {"to", g.vertex_at(label, (p + 1) % L)}});

    j["rotations"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        nlohmann::json darts = nlohmann::json::array();
        for (const Dart& d : g.rotation(v)) darts.push_back(dart_json(d));
        j["rotations"].push_back({{"vertex", v}, {"ccw", darts}});
    }

    j["faces"] = nlohmann::json::array();
    for (std::size_t f = 0; f < faces.size(); ++f) {
        nlohmann::json darts = nlohmann::json::array();
        for (const Dart& d : faces[f].darts) darts.push_back(dart_json(d));
        j["faces"].push_back({{"id", static_cast<int>(f)}, {"darts", darts}});
    }
    return j.dump(2) + "\n";
}

std::string export_graph_dot(const IntersectionMatrix& a) {
    const EmbeddedGraph g(a);
    const auto faces = trace_faces(g);
    std::ostringstream out;
    out << "// pscirc-graph 1\n";
    out << "// faces: " << faces.size() << "\n";
    for (std::size_t f = 0; f < faces.size(); ++f) {
        out << "// face " << f << ":";
        for (const Dart& d : faces[f].darts) out << " " << d.to_string();
        out << "\n";
    }
    out << "graph arrangement {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Vertex& vx = g.vertices()[static_cast<std::size_t>(v)];
        out << "  v" << v << " [label=\"" << vx.i << "x" << vx.j << "\"];\n";
    }
    const int L = g.row_length();
    for (int label : g.labels())
        for (int p = 0; p < L; ++p)
            out << "  v" << g.vertex_at(label, p) << " -- v" << g.vertex_at(label, (p + 1) % L)
                << " [label=\"" << label << "." << p << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace pscirc
