#ifndef PSCIRC_DENSE_HPP
#define PSCIRC_DENSE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pscirc/matrix.hpp"

// Compact fixed-capacity representation over labels 1..n used by the
// enumeration, canonicalization and acceptance hot paths. Entries are stored
// as order keys: +k -> k-1, -k -> n+k-1, so lexicographic key comparison is
// the project-wide entry order (plus before minus, labels ascending).
namespace pscirc::dense {

constexpr int kMaxN = 8;
constexpr int kMaxL = 2 * (kMaxN - 1);

inline int make_key(int label, Sign sign, int n) {
    return sign == Sign::plus ? label - 1 : n + label - 1;
}
inline int key_label(int key, int n) { return key < n ? key + 1 : key - n + 1; }
inline Sign key_sign(int key, int n) { return key < n ? Sign::plus : Sign::minus; }
inline int key_negate(int key, int n) { return key < n ? key + n : key - n; }

struct Dense {
    int n = 0;
    int L = 0;  // 2(n-1)
    std::array<std::int8_t, kMaxN * kMaxL> keys{};

    std::int8_t at(int row, int pos) const { return keys[static_cast<std::size_t>(row * L + pos)]; }
    std::int8_t& at(int row, int pos) { return keys[static_cast<std::size_t>(row * L + pos)]; }

    friend bool operator==(const Dense& a, const Dense& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n * a.L; ++i)
            if (a.keys[static_cast<std::size_t>(i)] != b.keys[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    // Lexicographic on (n, flattened keys).
    friend bool operator<(const Dense& a, const Dense& b) {
        if (a.n != b.n) return a.n < b.n;
        for (int i = 0; i < a.n * a.L; ++i) {
            if (a.keys[static_cast<std::size_t>(i)] != b.keys[static_cast<std::size_t>(i)])
                return a.keys[static_cast<std::size_t>(i)] < b.keys[static_cast<std::size_t>(i)];
        }
        return false;
    }
};

/// Relabels m's labels to their ranks 1..n. Requires n <= 8 and a valid matrix.
Dense from_matrix(const IntersectionMatrix& m);
IntersectionMatrix to_matrix(const Dense& d);

/// Per-row entry positions: pos(row, key) in 0..L-1, or -1.
struct PosIndex {
    int n = 0;
    int L = 0;
    std::array<std::int8_t, kMaxN * 2 * kMaxN> pos{};

    explicit PosIndex(const Dense& d);
    int operator()(int row, int key) const {
        return pos[static_cast<std::size_t>(row * 2 * n + key)];
    }
};

/// Def.-3 betweenness on a position index: met strictly after +j and strictly
/// before -j when walking the row cyclically. j is a 0-based rank here.
inline bool between(const PosIndex& px, int row, int key, int j_rank) {
    const int pj = px(row, j_rank);              // key of +(j) is j_rank itself
    const int mj = px(row, px.n + j_rank);       // key of -(j)
    const int x = px(row, key);
    const int L = px.L;
    return ((x - pj + L) % L) < ((mj - pj + L) % L);
}

struct Witness {
    int i = 0, j = 0, k = 0;  // 0-based ranks
    std::int8_t key_in_row_k = 0;
    bool side_in_row_k = false;
    bool side_in_row_i = false;
};

/// First Def.-3 failure in (k, j, i, crossing) scan order, or nullopt.
/// For fixed (k,j,i) the two crossings of curves i,k are examined in the
/// order (-i in row k) then (+i in row k).
std::optional<Witness> find_inconsistency(const Dense& d);
bool consistent(const Dense& d);

/// Orbit count of the face-tracing permutation next(d) = sigma(reverse(d)).
int face_count(const Dense& d);  // requires n >= 2
int genus(const Dense& d);       // n == 1 reports 0

/// Every row satisfies row[p + n - 1] == -row[p] cyclically.
bool all_rows_antipodal(const Dense& d);
/// 0-based index of the first non-antipodal row, or -1.
int first_non_antipodal_row(const Dense& d);

/// Submatrix on a rank subset (ascending); remaining labels re-ranked 1..m.
Dense submatrix_ranks(const Dense& d, const std::vector<int>& ranks);

/// Reorient every curve whose 0-based rank bit is set in `mask`: those rows
/// are reversed and negated, and their labels are negated everywhere else.
Dense reorient_mask(const Dense& d, unsigned mask);

/// Mirror image: every entry negated, row orders unchanged.
Dense mirror(const Dense& d);

/// Normal form of a single matrix: every row rotated to start at its minimal
/// key (rows have pairwise-distinct entries, so this is the least rotation).
Dense min_rotated(const Dense& d);

/// Canonical form: minimum over all n! relabelings of the min-rotated
/// encoding. Input need not be min-rotated.
Dense canonical(const Dense& d);

/// True iff d (already min-rotated) equals its own canonical form.
bool is_self_canonical(const Dense& d);

}  // namespace pscirc::dense

#endif
