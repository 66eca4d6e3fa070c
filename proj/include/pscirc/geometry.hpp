#ifndef PSCIRC_GEOMETRY_HPP
#define PSCIRC_GEOMETRY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pscirc/matrix.hpp"

namespace pscirc {

/// A proper circle, oriented counterclockwise.
struct Circle {
    double cx = 0.0;
    double cy = 0.0;
    double r = 1.0;
};

class GeometryError : public std::runtime_error {
  public:
    enum class Kind { tangent, disjoint, nested, near_coincident, sampling_exhausted };

    GeometryError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Labelled circles plus the degeneracy tolerance. Degeneracies (tangency,
/// disjoint or nested pairs, near-coincident intersection points) are hard
/// errors, never silently perturbed.
struct CircleArrangement {
    std::vector<std::pair<int, Circle>> circles;  // distinct positive labels
    double epsilon = 1e-9;
};

/// Parse ".circ" text: one `<label>: <cx> <cy> <r>` line per circle;
/// `#` comments and blank lines are ignored.
CircleArrangement parse_circles(std::string_view text);

/// Walk each circle counterclockwise from angle 0 and record each crossing:
/// +k when the crossing circle comes from the left (cross product of the
/// tangents is negative), -k from the right. The result always validates;
/// genuine circles also make it consistent with genus 0.
IntersectionMatrix matrix_from_circles(const CircleArrangement& c);

/// Same construction with selected circles walked clockwise (their crossing
/// signs flip on both sides); reversing exactly one circle realizes reorient
/// geometrically.
IntersectionMatrix matrix_from_circles_oriented(const CircleArrangement& c,
                                                const std::vector<bool>& reversed);

/// Rejection-samples centers in a disc and radii in a bounded interval until
/// every pair crosses properly with margin 10 * epsilon. Deterministic for a
/// fixed seed.
CircleArrangement random_arrangement(int n, std::uint64_t seed);

}  // namespace pscirc

#endif
