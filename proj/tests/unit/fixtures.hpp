#ifndef PSCIRC_TEST_FIXTURES_HPP
#define PSCIRC_TEST_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "pscirc/io.hpp"
#include "pscirc/matrix.hpp"

namespace fixtures {

// The unique 2-curve matrix.
inline pscirc::IntersectionMatrix m2() {
    return pscirc::parse_matrix("n 2\n1: +2 -2\n2: -1 +1\n");
}

// Three symmetric unit circles (Venn configuration); the delta type.
inline pscirc::IntersectionMatrix m_delta() {
    return pscirc::parse_matrix("n 3\n1: +2 +3 -2 -3\n2: -1 +3 +1 -3\n3: -1 -2 +1 +2\n");
}

// m_delta with row 1 replaced by (+2, -3, -2, +3): valid but inconsistent.
inline pscirc::IntersectionMatrix m_bad() {
    return pscirc::parse_matrix("n 3\n1: +2 -3 -2 +3\n2: -1 +3 +1 -3\n3: -1 -2 +1 +2\n");
}

// Random valid matrix on labels 1..n: every row an independent shuffle of its
// entry multiset.
inline pscirc::IntersectionMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::map<int, pscirc::Row> rows;
    for (int i = 1; i <= n; ++i) {
        pscirc::Row row;
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            row.emplace_back(k, pscirc::Sign::plus);
            row.emplace_back(k, pscirc::Sign::minus);
        }
        std::shuffle(row.begin(), row.end(), rng);
        rows[i] = std::move(row);
    }
    return pscirc::IntersectionMatrix(std::move(rows));
}

inline pscirc::LabelPermutation random_permutation(const std::vector<int>& labels,
                                                   std::mt19937_64& rng) {
    std::vector<int> image = labels;
    std::shuffle(image.begin(), image.end(), rng);
    std::map<int, int> m;
    for (std::size_t i = 0; i < labels.size(); ++i) m[labels[i]] = image[i];
    return pscirc::LabelPermutation(std::move(m));
}

// Same matrix with every row rotated by a random offset.
inline pscirc::IntersectionMatrix random_rotation(const pscirc::IntersectionMatrix& a,
                                                  std::mt19937_64& rng) {
    std::map<int, pscirc::Row> rows;
    for (int label : a.labels()) {
        pscirc::Row row = a.row(label);
        if (!row.empty()) {
            std::size_t off = rng() % row.size();
            std::rotate(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(off), row.end());
        }
        rows[label] = std::move(row);
    }
    return pscirc::IntersectionMatrix(std::move(rows));
}

// Swap two random positions within a random row (always stays valid).
inline pscirc::IntersectionMatrix random_transposition(const pscirc::IntersectionMatrix& a,
                                                       std::mt19937_64& rng) {
    std::map<int, pscirc::Row> rows;
    for (int label : a.labels()) rows[label] = a.row(label);
    const auto& labels = a.labels();
    int target = labels[rng() % labels.size()];
    pscirc::Row& row = rows[target];
    std::size_t p = rng() % row.size();
    std::size_t q = rng() % row.size();
    while (q == p) q = rng() % row.size();
    std::swap(row[p], row[q]);
    return pscirc::IntersectionMatrix(std::move(rows));
}

}  // namespace fixtures

#endif
