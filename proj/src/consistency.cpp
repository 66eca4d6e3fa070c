#include "pscirc/consistency.hpp"

#include <algorithm>

#include "pscirc/dense.hpp"

namespace pscirc {

bool is_between(const Row& row, const SignedEntry& x, int j) {
    if (x.label == j) throw DomainError("x must differ from +-j");
    const int L = static_cast<int>(row.size());
    int pj = -1, mj = -1, px = -1;
    for (int p = 0; p < L; ++p) {
        const SignedEntry& e = row[static_cast<std::size_t>(p)];
        if (e.label == j) (e.sign == Sign::plus ? pj : mj) = p;
        if (e == x) px = p;
    }
    if (pj < 0 || mj < 0 || px < 0) throw DomainError("row is missing +j, -j or x");
    return ((px - pj + L) % L) < ((mj - pj + L) % L);
}

std::optional<ConsistencyWitness> check_consistency(const IntersectionMatrix& a) {
    if (a.n() < 3) return std::nullopt;
    auto d = dense::from_matrix(a);
    auto w = dense::find_inconsistency(d);
    if (!w) return std::nullopt;
    const auto& labels = a.labels();
    ConsistencyWitness out;
    out.i = labels[static_cast<std::size_t>(w->i)];
    out.j = labels[static_cast<std::size_t>(w->j)];
    out.k = labels[static_cast<std::size_t>(w->k)];
    out.offending_entry = SignedEntry(out.i, dense::key_sign(w->key_in_row_k, d.n));
    out.side_in_row_k = w->side_in_row_k;
    out.side_in_row_i = w->side_in_row_i;
    return out;
}

bool strictly_embeddable(const IntersectionMatrix& a) { return !check_consistency(a).has_value(); }

std::optional<std::vector<int>> inconsistent_triple(const IntersectionMatrix& a) {
    auto w = check_consistency(a);
    if (!w) return std::nullopt;
    std::vector<int> triple{w->i, w->j, w->k};
    std::sort(triple.begin(), triple.end());
    return triple;
}

}  // namespace pscirc
