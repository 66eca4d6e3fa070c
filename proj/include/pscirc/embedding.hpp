#ifndef PSCIRC_EMBEDDING_HPP
#define PSCIRC_EMBEDDING_HPP

#include <array>
#include <string>
#include <vector>

#include "pscirc/matrix.hpp"

namespace pscirc {

/// A crossing: row i position p holds +j, row j position q holds -i.
struct Vertex {
    int i = 0, p = 0, j = 0, q = 0;
    bool operator==(const Vertex&) const = default;
};

/// Half-edge of edge (curve, edge_index). The forward dart is based at the
/// crossing at position edge_index and points along the curve's orientation;
/// the backward dart is based at position edge_index + 1 and points against it.
struct Dart {
    int curve = 0;
    int edge_index = 0;
    bool forward = true;

    Dart reversed() const { return {curve, edge_index, !forward}; }
    bool operator==(const Dart&) const = default;
    friend bool operator<(const Dart& a, const Dart& b) {
        if (a.curve != b.curve) return a.curve < b.curve;
        if (a.edge_index != b.edge_index) return a.edge_index < b.edge_index;
        return a.forward && !b.forward;
    }
    std::string to_string() const {
        return std::to_string(curve) + ":" + std::to_string(edge_index) + (forward ? ":f" : ":b");
    }
};

/// One boundary orbit of the face-tracing permutation, rotated to start at
/// its minimal dart.
struct FaceWalk {
    std::vector<Dart> darts;
};

/// The arrangement graph with its rotation system: crossings as degree-4
/// vertices, curve segments as edges, and at each vertex the counterclockwise
/// order of the four incident darts.
class EmbeddedGraph {
  public:
    explicit EmbeddedGraph(const IntersectionMatrix& a);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(labels_.size()) * row_length_; }
    int row_length() const { return row_length_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::array<Dart, 4>& rotation(int vertex_id) const {
        return rotations_[static_cast<std::size_t>(vertex_id)];
    }

    /// Vertex at position pos of curve `label`'s row.
    int vertex_at(int label, int pos) const;
    /// Vertex the dart is based at.
    int base_vertex(const Dart& d) const;
    /// Rotation successor (counterclockwise) of a dart at its base vertex.
    Dart rotation_successor(const Dart& d) const;
    /// The face-tracing step: rotation successor of the reversal.
    Dart next_in_face(const Dart& d) const { return rotation_successor(d.reversed()); }

  private:
    std::vector<int> labels_;
    int row_length_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<std::array<Dart, 4>> rotations_;
    std::vector<int> vertex_of_;  // (curve index, pos) -> vertex id
};

EmbeddedGraph build_embedded_graph(const IntersectionMatrix& a);

/// Orbits of next_in_face, sorted by minimal dart; they partition the darts.
std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g);

/// Genus of the unique cellular embedding: g = (2 - V + E - F) / 2.
int genus(const IntersectionMatrix& a);

/// True iff genus is 0. For n >= 2 the arrangement graph is connected (every
/// pair of curves crosses), every embedding of a connected graph in the
/// sphere is cellular, and the cellular genus is unique, so
/// sphere-embeddability coincides with genus 0.
bool is_sphere_embeddable_direct(const IntersectionMatrix& a);

/// Structured export: labels, vertices, edges, rotation orders, face walks.
/// Field names are documented in docs/formats.md and stable.
std::string export_graph_json(const IntersectionMatrix& a);

/// DOT export of the arrangement graph, face walks in comments.
std::string export_graph_dot(const IntersectionMatrix& a);

}  // namespace pscirc

#endif
