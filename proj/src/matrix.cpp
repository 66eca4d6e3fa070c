#include "pscirc/matrix.hpp"

#include <algorithm>
#include <set>

namespace pscirc {

IntersectionMatrix::IntersectionMatrix(std::map<int, Row> rows) {
    labels_.reserve(rows.size());
    rows_.reserve(rows.size());
    for (auto& [label, row] : rows) {
        labels_.push_back(label);
        rows_.push_back(std::move(row));
    }
}

int IntersectionMatrix::label_index(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

const Row& IntersectionMatrix::row(int label) const {
    int idx = label_index(label);
    if (idx < 0) throw DomainError("unknown row label " + std::to_string(label));
    return rows_[static_cast<std::size_t>(idx)];
}

bool rows_cyclically_equal(const Row& a, const Row& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(i + off) % b.size()]) return false;
    return true;
}

Row min_rotation(const Row& row) {
    if (row.empty()) return row;
    std::size_t best = 0;
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i] < row[best]) best = i;
    Row out;
    out.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out.push_back(row[(best + i) % row.size()]);
    return out;
}

bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) {
    if (a.labels_ != b.labels_) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        if (!rows_cyclically_equal(a.rows_[i], b.rows_[i])) return false;
    return true;
}

std::optional<Violation> validate(const std::map<int, Row>& rows) {
    std::set<int> labels;
    for (const auto& [label, row] : rows) {
        if (label < 1)
            return Violation{label, std::nullopt, "row labels must be positive"};
        labels.insert(label);
    }
    const int n = static_cast<int>(rows.size());
    const std::size_t want = n >= 2 ? static_cast<std::size_t>(2 * (n - 1)) : 0;
    for (const auto& [label, row] : rows) {
        if (row.size() != want)
            return Violation{label, std::nullopt,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(want)};
        std::set<std::pair<int, int>> seen;
        for (const SignedEntry& e : row) {
            if (e.label == label)
                return Violation{label, e, "row contains its own label"};
            if (!labels.count(e.label))
                return Violation{label, e, "entry label " + std::to_string(e.label) +
                                               " is not a row label"};
            if (!seen.insert({e.label, static_cast<int>(e.sign)}).second)
                return Violation{label, e, "duplicate entry " + e.to_string()};
        }
        // Right length + no duplicates + labels from the set => exactly one
        // +k and one -k for every other k, so the permutation condition holds.
    }
    return std::nullopt;
}

std::optional<Violation> validate(const IntersectionMatrix& m) {
    std::map<int, Row> rows;
    for (int label : m.labels()) rows[label] = m.row(label);
    return validate(rows);
}

ValidationError::ValidationError(Violation v)
    : std::runtime_error("row " + std::to_string(v.row_label) +
                         (v.entry ? ", entry " + v.entry->to_string() : std::string()) + ": " +
                         v.message),
      violation_(std::move(v)) {}

LabelPermutation::LabelPermutation(std::map<int, int> mapping) : map_(std::move(mapping)) {}

LabelPermutation LabelPermutation::identity(const std::vector<int>& labels) {
    std::map<int, int> m;
    for (int l : labels) m[l] = l;
    return LabelPermutation(std::move(m));
}

int LabelPermutation::apply(int label) const {
    auto it = map_.find(label);
    if (it == map_.end()) throw DomainError("permutation undefined on label " + std::to_string(label));
    return it->second;
}

LabelPermutation LabelPermutation::inverse() const {
    std::map<int, int> inv;
    for (const auto& [k, v] : map_) inv[v] = k;
    return LabelPermutation(std::move(inv));
}

bool LabelPermutation::is_bijection_on(const std::vector<int>& labels) const {
    if (map_.size() != labels.size()) return false;
    std::set<int> image;
    for (int l : labels) {
        auto it = map_.find(l);
        if (it == map_.end()) return false;
        image.insert(it->second);
    }
    return image == std::set<int>(labels.begin(), labels.end());
}

IntersectionMatrix reorient(const IntersectionMatrix& a, int j) {
    if (!a.has_label(j)) throw DomainError("unknown label " + std::to_string(j));
    std::map<int, Row> rows;
    for (int label : a.labels()) {
        Row row = a.row(label);
        if (label == j) {
            std::reverse(row.begin(), row.end());
            for (SignedEntry& e : row) e = e.negated();
        } else {
            for (SignedEntry& e : row)
                if (e.label == j) e = e.negated();
        }
        rows[label] = std::move(row);
    }
    return IntersectionMatrix(std::move(rows));
}

IntersectionMatrix reorient_all(const IntersectionMatrix& a) {
    IntersectionMatrix m = a;
    for (int label : a.labels()) m = reorient(m, label);
    return m;
}

IntersectionMatrix relabel(const IntersectionMatrix& a, const LabelPermutation& pi) {
    if (!pi.is_bijection_on(a.labels()))
        throw DomainError("permutation is not a bijection on the label set");
    std::map<int, Row> rows;
    for (int label : a.labels()) {
        Row row = a.row(label);
        for (SignedEntry& e : row) e.label = pi.apply(e.label);
        rows[pi.apply(label)] = std::move(row);
    }
    return IntersectionMatrix(std::move(rows));
}

IntersectionMatrix mirror(const IntersectionMatrix& a) {
    std::map<int, Row> rows;
    for (int label : a.labels()) {
        Row row = a.row(label);
        for (SignedEntry& e : row) e = e.negated();
        rows[label] = std::move(row);
    }
    return IntersectionMatrix(std::move(rows));
}

IntersectionMatrix submatrix_delete(const IntersectionMatrix& a, int j) {
    if (a.n() < 3) throw DomainError("submatrix_delete requires n >= 3");
    if (!a.has_label(j)) throw DomainError("unknown label " + std::to_string(j));
    std::map<int, Row> rows;
    for (int label : a.labels()) {
        if (label == j) continue;
        Row row;
        for (const SignedEntry& e : a.row(label))
            if (e.label != j) row.push_back(e);
        rows[label] = std::move(row);
    }
    return IntersectionMatrix(std::move(rows));
}

IntersectionMatrix submatrix_on(const IntersectionMatrix& a, const std::vector<int>& subset) {
    std::set<int> keep(subset.begin(), subset.end());
    for (int l : keep)
        if (!a.has_label(l)) throw DomainError("unknown label " + std::to_string(l));
    std::map<int, Row> rows;
    for (int label : a.labels()) {
        if (!keep.count(label)) continue;
        Row row;
        for (const SignedEntry& e : a.row(label))
            if (keep.count(e.label)) row.push_back(e);
        rows[label] = std::move(row);
    }
    return IntersectionMatrix(std::move(rows));
}

std::vector<std::pair<std::vector<int>, IntersectionMatrix>>
all_submatrices(const IntersectionMatrix& a, int m) {
    const int n = a.n();
    if (m < 2 || m > n) throw DomainError("submatrix size out of range");
    std::vector<std::pair<std::vector<int>, IntersectionMatrix>> out;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> subset;
        subset.reserve(static_cast<std::size_t>(m));
        for (int i : idx) subset.push_back(a.labels()[static_cast<std::size_t>(i)]);
        out.emplace_back(subset, submatrix_on(a, subset));
        int k = m - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - m + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < m; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

}  // namespace pscirc
