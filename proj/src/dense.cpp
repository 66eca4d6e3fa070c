#include "pscirc/dense.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace pscirc::dense {

Dense from_matrix(const IntersectionMatrix& m) {
    const int n = m.n();
    if (n > kMaxN) throw DomainError("dense form supports at most n = 8 curves");
    Dense d;
    d.n = n;
    d.L = n >= 2 ? 2 * (n - 1) : 0;
    for (int r = 0; r < n; ++r) {
        const Row& row = m.row_at(r);
        for (int p = 0; p < d.L; ++p) {
            const SignedEntry& e = row[static_cast<std::size_t>(p)];
            int rank = m.label_index(e.label);
            assert(rank >= 0);
            d.at(r, p) = static_cast<std::int8_t>(make_key(rank + 1, e.sign, n));
        }
    }
    return d;
}

IntersectionMatrix to_matrix(const Dense& d) {
    std::map<int, Row> rows;
    for (int r = 0; r < d.n; ++r) {
        Row row;
        for (int p = 0; p < d.L; ++p) {
            int key = d.at(r, p);
            row.emplace_back(key_label(key, d.n), key_sign(key, d.n));
        }
        rows[r + 1] = std::move(row);
    }
    return IntersectionMatrix(std::move(rows));
}

PosIndex::PosIndex(const Dense& d) : n(d.n), L(d.L) {
    pos.fill(-1);
    for (int r = 0; r < n; ++r)
        for (int p = 0; p < L; ++p)
            pos[static_cast<std::size_t>(r * 2 * n + d.at(r, p))] = static_cast<std::int8_t>(p);
}

std::optional<Witness> find_inconsistency(const Dense& d) {
    if (d.n < 3) return std::nullopt;
    const PosIndex px(d);
    const int n = d.n;
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            for (int i = 0; i < n; ++i) {
                if (i == k || i == j) continue;
                for (int c = 0; c < 2; ++c) {
                    // c = 0: (-i in row k, +k in row i); c = 1: the other crossing.
                    const int key_ik = c == 0 ? n + i : i;
                    const int key_ki = c == 0 ? k : n + k;
                    const bool side_k = between(px, k, key_ik, j);
                    const bool side_i = between(px, i, key_ki, j);
                    if (side_k != side_i)
                        return Witness{i, j, k, static_cast<std::int8_t>(key_ik), side_k, side_i};
                }
            }
        }
    }
    return std::nullopt;
}

bool consistent(const Dense& d) { return !find_inconsistency(d).has_value(); }

namespace {

// Dart layout: edge(row, pos) spans positions pos -> pos+1 of its row; dart
// id = 2*(row*L + pos) + dir, dir 0 based at the position-pos vertex, dir 1
// based at the position-(pos+1) vertex.
void build_sigma(const Dense& d, std::array<std::int16_t, 2 * kMaxN * kMaxL>& sigma) {
    const int n = d.n;
    const int L = d.L;
    const PosIndex px(d);
    for (int a = 0; a < n; ++a) {
        for (int pa = 0; pa < L; ++pa) {
            const int key = d.at(a, pa);
            if (key >= n) continue;  // handle each vertex from its plus side
            const int b = key;       // rank of the crossing curve
            const int pb = px(b, n + a);  // -(a) in row b
            assert(pb >= 0);
            const int out_a = 2 * (a * L + pa);
            const int in_a = 2 * (a * L + (pa + L - 1) % L) + 1;
            const int out_b = 2 * (b * L + pb);
            const int in_b = 2 * (b * L + (pb + L - 1) % L) + 1;
            // Counterclockwise rotation (out_a, in_b, in_a, out_b): curve b
            // crosses curve a from the left at this vertex.
            sigma[static_cast<std::size_t>(out_a)] = static_cast<std::int16_t>(in_b);
            sigma[static_cast<std::size_t>(in_b)] = static_cast<std::int16_t>(in_a);
            sigma[static_cast<std::size_t>(in_a)] = static_cast<std::int16_t>(out_b);
            sigma[static_cast<std::size_t>(out_b)] = static_cast<std::int16_t>(out_a);
        }
    }
}

}  // namespace

int face_count(const Dense& d) {
    assert(d.n >= 2);
    std::array<std::int16_t, 2 * kMaxN * kMaxL> sigma{};
    build_sigma(d, sigma);
    const int darts = 2 * d.n * d.L;
    std::array<bool, 2 * kMaxN * kMaxL> seen{};
    int faces = 0;
    for (int s = 0; s < darts; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++faces;
        int t = s;
        do {
            seen[static_cast<std::size_t>(t)] = true;
            t = sigma[static_cast<std::size_t>(t ^ 1)];
        } while (t != s);
    }
    return faces;
}

int genus(const Dense& d) {
    if (d.n <= 1) return 0;
    const int V = d.n * (d.n - 1);
    const int E = d.n * d.L;
    const int F = face_count(d);
    const int doubled = 2 - V + E - F;
    assert(doubled >= 0 && doubled % 2 == 0);
    return doubled / 2;
}

int first_non_antipodal_row(const Dense& d) {
    const int half = d.n - 1;
    for (int r = 0; r < d.n; ++r)
        for (int p = 0; p < d.L; ++p)
            if (d.at(r, (p + half) % d.L) != key_negate(d.at(r, p), d.n)) return r;
    return -1;
}

bool all_rows_antipodal(const Dense& d) { return first_non_antipodal_row(d) < 0; }

Dense submatrix_ranks(const Dense& d, const std::vector<int>& ranks) {
    Dense out;
    out.n = static_cast<int>(ranks.size());
    out.L = out.n >= 2 ? 2 * (out.n - 1) : 0;
    std::array<int, kMaxN> new_rank;
    new_rank.fill(-1);
    for (int i = 0; i < out.n; ++i) new_rank[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < out.n; ++i) {
        const int r = ranks[static_cast<std::size_t>(i)];
        int q = 0;
        for (int p = 0; p < d.L; ++p) {
            const int key = d.at(r, p);
            const int nr = new_rank[static_cast<std::size_t>(key_label(key, d.n) - 1)];
            if (nr < 0) continue;
            out.at(i, q++) = static_cast<std::int8_t>(
                make_key(nr + 1, key_sign(key, d.n), out.n));
        }
        assert(q == out.L);
    }
    return out;
}

Dense reorient_mask(const Dense& d, unsigned mask) {
    Dense out = d;
    for (int r = 0; r < d.n; ++r) {
        const bool flip_row = (mask >> r) & 1u;
        for (int p = 0; p < d.L; ++p) {
            int key = flip_row ? d.at(r, d.L - 1 - p) : d.at(r, p);
            const bool flip_label = (mask >> (key_label(key, d.n) - 1)) & 1u;
            // Sign flips when exactly one of {walked curve, crossing curve}
            // is reoriented.
            if (flip_row != flip_label) key = key_negate(key, d.n);
            out.at(r, p) = static_cast<std::int8_t>(key);
        }
    }
    return out;
}

Dense mirror(const Dense& d) {
    Dense out = d;
    for (int r = 0; r < d.n; ++r)
        for (int p = 0; p < d.L; ++p)
            out.at(r, p) = static_cast<std::int8_t>(key_negate(d.at(r, p), d.n));
    return out;
}

Dense min_rotated(const Dense& d) {
    Dense out = d;
    for (int r = 0; r < d.n; ++r) {
        int best = 0;
        for (int p = 1; p < d.L; ++p)
            if (d.at(r, p) < d.at(r, best)) best = p;
        for (int p = 0; p < d.L; ++p) out.at(r, p) = d.at(r, (best + p) % d.L);
    }
    return out;
}

namespace {

// Writes relabel(d, map)'s min-rotated row for output rank `out_r` into `buf`.
// map_new[old_rank] = new rank.
inline void relabeled_row(const Dense& d, const std::array<std::int8_t, kMaxN>& map_new,
                          const std::array<std::int8_t, kMaxN>& map_old, int out_r,
                          std::int8_t* buf) {
    const int n = d.n;
    const int L = d.L;
    const int src = map_old[static_cast<std::size_t>(out_r)];
    std::int8_t tmp[kMaxL];
    int best = 0;
    for (int p = 0; p < L; ++p) {
        const int key = d.at(src, p);
        const int nl = map_new[static_cast<std::size_t>(key_label(key, n) - 1)];
        tmp[p] = static_cast<std::int8_t>(key < n ? nl : n + nl);
        if (tmp[p] < tmp[best]) best = p;
    }
    for (int p = 0; p < L; ++p) buf[p] = tmp[(best + p) % L];
}

// Compares relabel(d, map)'s encoding against `ref`; returns -1/0/+1 with
// early exit. `ref` must be min-rotated.
int compare_relabeled(const Dense& d, const std::array<std::int8_t, kMaxN>& map_new,
                      const std::array<std::int8_t, kMaxN>& map_old, const Dense& ref) {
    std::int8_t buf[kMaxL];
    for (int r = 0; r < d.n; ++r) {
        relabeled_row(d, map_new, map_old, r, buf);
        const std::int8_t* rr = &ref.keys[static_cast<std::size_t>(r * d.L)];
        for (int p = 0; p < d.L; ++p) {
            if (buf[p] != rr[p]) return buf[p] < rr[p] ? -1 : 1;
        }
    }
    return 0;
}

}  // namespace

Dense canonical(const Dense& d) {
    if (d.n > kMaxN) throw DomainError("canonical form supports at most n = 8 curves");
    Dense best = min_rotated(d);
    if (d.n < 2) return best;
    std::array<std::int8_t, kMaxN> map_new{};  // map_new[old] = new
    std::array<std::int8_t, kMaxN> map_old{};  // map_old[new] = old
    std::array<std::int8_t, kMaxN> perm{};
    for (int i = 0; i < d.n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    do {
        for (int i = 0; i < d.n; ++i) {
            map_new[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
            map_old[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                static_cast<std::int8_t>(i);
        }
        if (compare_relabeled(d, map_new, map_old, best) < 0) {
            Dense cand;
            cand.n = d.n;
            cand.L = d.L;
            for (int r = 0; r < d.n; ++r)
                relabeled_row(d, map_new, map_old, r, &cand.keys[static_cast<std::size_t>(r * d.L)]);
            best = cand;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + d.n));
    return best;
}

bool is_self_canonical(const Dense& d) {
    if (d.n < 2) return true;
    std::array<std::int8_t, kMaxN> map_new{};
    std::array<std::int8_t, kMaxN> map_old{};
    std::array<std::int8_t, kMaxN> perm{};
    for (int i = 0; i < d.n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    // Identity yields d itself; any strictly smaller relabeling disqualifies.
    while (std::next_permutation(perm.begin(), perm.begin() + d.n)) {
        for (int i = 0; i < d.n; ++i) {
            map_new[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
            map_old[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                static_cast<std::int8_t>(i);
        }
        if (compare_relabeled(d, map_new, map_old, d) < 0) return false;
    }
    return true;
}

}  // namespace pscirc::dense
