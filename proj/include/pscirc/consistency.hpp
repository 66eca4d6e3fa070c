#ifndef PSCIRC_CONSISTENCY_HPP
#define PSCIRC_CONSISTENCY_HPP

#include <optional>
#include <vector>

#include "pscirc/matrix.hpp"

namespace pscirc {

/// A Def.-3 failure. At every crossing of curves i and k, both rows record
/// whether the crossing lies on the arc of the third curve j (the stretch
/// between +j and -j); a witness is a crossing where the two rows disagree.
struct ConsistencyWitness {
    int i = 0, j = 0, k = 0;          // pairwise distinct labels
    SignedEntry offending_entry;      // the +-i entry in row k
    bool side_in_row_k = false;       // +-i lies between +j and -j in row k
    bool side_in_row_i = false;       // the partner -+k lies between +j and -j in row i
};

/// True iff, walking `row` cyclically starting immediately after the +j
/// entry, x is met strictly before the -j entry. x must not be +-j.
bool is_between(const Row& row, const SignedEntry& x, int j);

/// Def.-3 scan over all triples, in (k, j, i, crossing) lexicographic order
/// with labels ascending; for fixed (k,j,i) the crossing where i appears
/// negatively in row k is examined first. Returns the first witness, or
/// nullopt when the matrix is consistent. n <= 2 is vacuously consistent.
std::optional<ConsistencyWitness> check_consistency(const IntersectionMatrix& a);

/// Theorem: a matrix is strictly embeddable into some closed orientable
/// surface iff it is consistent.
bool strictly_embeddable(const IntersectionMatrix& a);

/// Labels {i,j,k} of an inconsistent 3-submatrix, when one exists.
std::optional<std::vector<int>> inconsistent_triple(const IntersectionMatrix& a);

}  // namespace pscirc

#endif
