#include "pscirc/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pscirc {

EmbeddedGraph::EmbeddedGraph(const IntersectionMatrix& a) {
    if (a.n() < 2) throw DomainError("embedded graph requires n >= 2");
    if (auto v = validate(a)) throw ValidationError(*v);
    labels_ = a.labels();
    row_length_ = a.row_length();
    const int n = a.n();
    const int L = row_length_;
    vertex_of_.assign(static_cast<std::size_t>(n * L), -1);

    for (int ai = 0; ai < n; ++ai) {
        const Row& row = a.row_at(ai);
        for (int p = 0; p < L; ++p) {
            const SignedEntry& e = row[static_cast<std::size_t>(p)];
            if (e.sign != Sign::plus) continue;  // one vertex per plus entry
            const int bi = a.label_index(e.label);
            const Row& brow = a.row_at(bi);
            int q = -1;
            const SignedEntry partner(labels_[static_cast<std::size_t>(ai)], Sign::minus);
            for (int bp = 0; bp < L; ++bp)
                if (brow[static_cast<std::size_t>(bp)] == partner) q = bp;
            if (q < 0) throw std::logic_error("vertex pairing failure on a validated matrix");

            const int id = static_cast<int>(vertices_.size());
            const int la = labels_[static_cast<std::size_t>(ai)];
            const int lb = labels_[static_cast<std::size_t>(bi)];
            vertices_.push_back(Vertex{la, p, lb, q});
            vertex_of_[static_cast<std::size_t>(ai * L + p)] = id;
            vertex_of_[static_cast<std::size_t>(bi * L + q)] = id;

            // Counterclockwise: (out_i, in_j, in_i, out_j); curve j crosses
            // curve i from the left here, so j's incoming dart sits on i's left.
            const Dart out_i{la, p, true};
            const Dart in_j{lb, (q + L - 1) % L, false};
            const Dart in_i{la, (p + L - 1) % L, false};
            const Dart out_j{lb, q, true};
            rotations_.push_back({out_i, in_j, in_i, out_j});
        }
    }
    assert(static_cast<int>(vertices_.size()) == n * (n - 1));
}

int EmbeddedGraph::vertex_at(int label, int pos) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw DomainError("unknown curve label");
    const int ci = static_cast<int>(it - labels_.begin());
    if (pos < 0 || pos >= row_length_) throw DomainError("position out of range");
    return vertex_of_[static_cast<std::size_t>(ci * row_length_ + pos)];
}

int EmbeddedGraph::base_vertex(const Dart& d) const {
    return d.forward ? vertex_at(d.curve, d.edge_index)
                     : vertex_at(d.curve, (d.edge_index + 1) % row_length_);
}

Dart EmbeddedGraph::rotation_successor(const Dart& d) const {
    const auto& rot = rotations_[static_cast<std::size_t>(base_vertex(d))];
    for (int s = 0; s < 4; ++s)
        if (rot[static_cast<std::size_t>(s)] == d) return rot[static_cast<std::size_t>((s + 1) % 4)];
    throw std::logic_error("dart not found in its base vertex rotation");
}

EmbeddedGraph build_embedded_graph(const IntersectionMatrix& a) { return EmbeddedGraph(a); }

std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g) {
    std::vector<Dart> all;
    for (int label : g.labels())
        for (int p = 0; p < g.row_length(); ++p) {
            all.push_back(Dart{label, p, true});
            all.push_back(Dart{label, p, false});
        }
    std::sort(all.begin(), all.end());

    std::vector<FaceWalk> walks;
    std::vector<bool> used(all.size(), false);
    auto index_of = [&](const Dart& d) {
        return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), d) - all.begin());
    };
    for (std::size_t s = 0; s < all.size(); ++s) {
        if (used[s]) continue;
        FaceWalk walk;
        Dart d = all[s];
        do {
            used[index_of(d)] = true;
            walk.darts.push_back(d);
            d = g.next_in_face(d);
        } while (!(d == all[s]));
        walks.push_back(std::move(walk));
    }
    // Darts are visited in ascending order, so each walk already starts at its
    // minimal dart and walks are sorted by their minimal dart.
    return walks;
}

int genus(const IntersectionMatrix& a) {
    if (a.n() <= 1) return 0;
    const EmbeddedGraph g(a);
    const int V = g.vertex_count();
    const int E = g.edge_count();
    const int F = static_cast<int>(trace_faces(g).size());
    const int doubled = 2 - V + E - F;
    if (doubled < 0 || doubled % 2 != 0)
        throw std::logic_error("Euler characteristic parity violation");
    return doubled / 2;
}

bool is_sphere_embeddable_direct(const IntersectionMatrix& a) { return genus(a) == 0; }

}  // namespace pscirc
