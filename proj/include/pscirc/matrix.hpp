#ifndef PSCIRC_MATRIX_HPP
#define PSCIRC_MATRIX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pscirc {

enum class Sign : std::uint8_t { plus = 0, minus = 1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// One crossing record: which curve crosses, and from which side it comes
/// (plus = from the left, minus = from the right).
struct SignedEntry {
    int label = 0;
    Sign sign = Sign::plus;

    SignedEntry() = default;
    SignedEntry(int label_, Sign sign_) : label(label_), sign(sign_) {}

    SignedEntry negated() const { return {label, opposite(sign)}; }

    bool operator==(const SignedEntry&) const = default;

    // Total order used everywhere (serialization anchors, canonical forms):
    // all plus entries before all minus entries, labels ascending within a sign.
    friend bool operator<(const SignedEntry& a, const SignedEntry& b) {
        if (a.sign != b.sign) return a.sign == Sign::plus;
        return a.label < b.label;
    }

    std::string to_string() const {
        return (sign == Sign::plus ? "+" : "-") + std::to_string(label);
    }
};

/// Convenience constructors: entry(+3) == entry(3), entry(-3).
inline SignedEntry entry(int signed_label) {
    return signed_label > 0 ? SignedEntry(signed_label, Sign::plus)
                            : SignedEntry(-signed_label, Sign::minus);
}

using Row = std::vector<SignedEntry>;

class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// First Def.-2 violation found in a candidate row map.
struct Violation {
    int row_label = 0;
    std::optional<SignedEntry> entry;  // offending entry, when one exists
    std::string message;
};

/// n cyclic rows of 2(n-1) signed entries; rows are stored with an arbitrary
/// anchor position but all semantics are cyclic. Immutable after construction.
class IntersectionMatrix {
  public:
    IntersectionMatrix() = default;
    explicit IntersectionMatrix(std::map<int, Row> rows);

    int n() const { return static_cast<int>(labels_.size()); }
    int row_length() const { return n() >= 2 ? 2 * (n() - 1) : 0; }

    const std::vector<int>& labels() const { return labels_; }
    bool has_label(int label) const { return label_index(label) >= 0; }
    /// Index of a label in ascending order, or -1.
    int label_index(int label) const;

    const Row& row(int label) const;
    const Row& row_at(int index) const { return rows_[static_cast<std::size_t>(index)]; }
    const std::vector<Row>& rows() const { return rows_; }

    /// Matrices compare equal up to per-row rotation.
    friend bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b);

  private:
    std::vector<int> labels_;  // ascending
    std::vector<Row> rows_;    // parallel to labels_
};

/// True iff b is some rotation of a.
bool rows_cyclically_equal(const Row& a, const Row& b);

/// Rotation of `row` starting at its minimal entry (entries in a row are
/// pairwise distinct, so this is the lexicographically least rotation).
Row min_rotation(const Row& row);

/// Def.-2 check: every row i must be a permutation of {+k, -k : k != i}.
/// Returns the first violation in ascending row-label order, or nullopt.
std::optional<Violation> validate(const std::map<int, Row>& rows);
std::optional<Violation> validate(const IntersectionMatrix& m);

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(Violation v);
    const Violation& violation() const { return violation_; }

  private:
    Violation violation_;
};

/// Bijection on a label set.
class LabelPermutation {
  public:
    LabelPermutation() = default;
    explicit LabelPermutation(std::map<int, int> mapping);

    static LabelPermutation identity(const std::vector<int>& labels);

    int apply(int label) const;
    LabelPermutation inverse() const;
    const std::map<int, int>& mapping() const { return map_; }

    /// True iff the domain is exactly `labels` and the image set equals it.
    bool is_bijection_on(const std::vector<int>& labels) const;

  private:
    std::map<int, int> map_;
};

/// Reverse curve j's walk direction: row j is reversed and negated, and the
/// entries +-j in every other row are negated in place.
IntersectionMatrix reorient(const IntersectionMatrix& a, int j);

/// Reorient every curve (net effect: every row reversed, signs unchanged).
IntersectionMatrix reorient_all(const IntersectionMatrix& a);

/// Row i becomes row pi(i), every entry +-k becomes +-pi(k).
IntersectionMatrix relabel(const IntersectionMatrix& a, const LabelPermutation& pi);

/// Mirror image (orientation-reversing homeomorphism of the surface):
/// every entry negated, row orders unchanged.
IntersectionMatrix mirror(const IntersectionMatrix& a);

/// A_j*: delete row j and all entries +-j from the other rows. Requires n >= 3.
IntersectionMatrix submatrix_delete(const IntersectionMatrix& a, int j);

/// The m-submatrix on an explicit label subset (equals iterated deletes).
IntersectionMatrix submatrix_on(const IntersectionMatrix& a, const std::vector<int>& subset);

/// All m-submatrices, one per m-element label subset, subsets in
/// lexicographic order. Requires 2 <= m <= n.
std::vector<std::pair<std::vector<int>, IntersectionMatrix>>
all_submatrices(const IntersectionMatrix& a, int m);

}  // namespace pscirc

#endif
