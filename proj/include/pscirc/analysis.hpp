#ifndef PSCIRC_ANALYSIS_HPP
#define PSCIRC_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pscirc/matrix.hpp"

namespace pscirc {

/// Normalized matrix encoding: labels renamed to 1..n, every row rotated to
/// its least rotation, minimized lexicographically over all n! relabelings.
/// Two matrices are combinatorially isomorphic iff their forms are equal.
class CanonicalForm {
  public:
    CanonicalForm() = default;
    CanonicalForm(int n, std::vector<std::int8_t> keys);

    int n() const { return n_; }
    const std::vector<std::int8_t>& keys() const { return keys_; }

    IntersectionMatrix to_matrix() const;
    /// ".psm" text with a `# canonical` header comment.
    std::string to_psm() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.keys_ < b.keys_;
    }

  private:
    int n_ = 0;
    std::vector<std::int8_t> keys_;
};

/// Brute-force canonicalization; n <= 8 (factorial search).
CanonicalForm canonical_form(const IntersectionMatrix& a);

bool are_isomorphic(const IntersectionMatrix& a, const IntersectionMatrix& b);

/// Canonical forms of all 4-submatrices, keyed by label subset.
struct QuadProfile {
    std::vector<std::pair<std::vector<int>, CanonicalForm>> entries;

    /// Sorted multiset view, for comparison and export.
    std::vector<CanonicalForm> sorted_forms() const;
};

QuadProfile quad_profile(const IntersectionMatrix& a);  // n >= 4

struct QuadIsoResult {
    bool isomorphic = false;
    /// Set when an input is inconsistent: the labelled-4-subarrangement
    /// criterion is only a theorem for strict arrangements.
    bool advisory = false;
};

/// Label bijection search: true iff some pi maps every labelled 4-submatrix
/// of a onto the corresponding labelled 4-submatrix of b (rows equal up to
/// rotation after applying pi). Backtracking with quad-profile pruning.
QuadIsoResult iso_via_quads(const IntersectionMatrix& a, const IntersectionMatrix& b);

struct SphereViaQuadsResult {
    bool embeddable = false;
    /// Lexicographically first 4-subset whose submatrix has genus > 0.
    std::optional<std::vector<int>> witness;
};

/// Sphere-embeddability through 4-subarrangements: every 4-submatrix must
/// have genus 0. For n < 4 this delegates to the direct genus test.
SphereViaQuadsResult is_sphere_embeddable_via_quads(const IntersectionMatrix& a);

/// Matrix of a pseudo-great-circle arrangement on the sphere: every row is
/// cyclically antipodal (entry at p + n - 1 is the negation of the entry at
/// p), the matrix is consistent, and its genus is 0.
bool is_uniform_oriented_matroid(const IntersectionMatrix& a);

/// The five isomorphism types of consistent 3-matrices. Delta is the unique
/// reorientation-closed type; the other four form one reorientation orbit and
/// carry conventional names: alpha = the least canonical form among the
/// orbit's non-fixed members, epsilon = alpha reoriented on all curves,
/// beta/gamma = the remaining two in ascending canonical order.
enum class TripleType { alpha, beta, gamma, delta, epsilon };

const char* to_string(TripleType t);

/// Requires n == 3 and a consistent matrix.
TripleType classify_triple(const IntersectionMatrix& a);

/// The five reference forms, indexed by type.
const CanonicalForm& triple_reference_form(TripleType t);

}  // namespace pscirc

#endif
