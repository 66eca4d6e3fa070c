#include "pscirc/analysis.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "pscirc/consistency.hpp"
#include "pscirc/dense.hpp"
#include "pscirc/embedding.hpp"
#include "pscirc/io.hpp"

namespace pscirc {

CanonicalForm::CanonicalForm(int n, std::vector<std::int8_t> keys) : n_(n), keys_(std::move(keys)) {
    assert(static_cast<int>(keys_.size()) == (n_ >= 2 ? n_ * 2 * (n_ - 1) : 0));
}

IntersectionMatrix CanonicalForm::to_matrix() const {
    dense::Dense d;
    d.n = n_;
    d.L = n_ >= 2 ? 2 * (n_ - 1) : 0;
    std::copy(keys_.begin(), keys_.end(), d.keys.begin());
    return dense::to_matrix(d);
}

std::string CanonicalForm::to_psm() const {
    return serialize_matrix(to_matrix(), {"canonical"});
}

CanonicalForm canonical_form(const IntersectionMatrix& a) {
    if (a.n() > dense::kMaxN)
        throw DomainError("canonical_form supports at most n = 8 curves (factorial search)");
    if (auto v = validate(a)) throw ValidationError(*v);
    dense::Dense c = dense::canonical(dense::from_matrix(a));
    std::vector<std::int8_t> keys(c.keys.begin(), c.keys.begin() + c.n * c.L);
    return CanonicalForm(c.n, std::move(keys));
}

bool are_isomorphic(const IntersectionMatrix& a, const IntersectionMatrix& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<CanonicalForm> QuadProfile::sorted_forms() const {
    std::vector<CanonicalForm> forms;
    forms.reserve(entries.size());
    for (const auto& [subset, form] : entries) forms.push_back(form);
    std::sort(forms.begin(), forms.end());
    return forms;
}

QuadProfile quad_profile(const IntersectionMatrix& a) {
    if (a.n() < 4) throw DomainError("quad_profile requires n >= 4");
    QuadProfile profile;
    for (auto& [subset, sub] : all_submatrices(a, 4))
        profile.entries.emplace_back(subset, canonical_form(sub));
    return profile;
}

namespace {

// Canonical forms of the 4-submatrices containing each label, sorted.
std::map<int, std::vector<CanonicalForm>> label_signatures(const QuadProfile& profile,
                                                           const std::vector<int>& labels) {
    std::map<int, std::vector<CanonicalForm>> sig;
    for (int l : labels) sig[l] = {};
    for (const auto& [subset, form] : profile.entries)
        for (int l : subset) sig[l].push_back(form);
    for (auto& [l, forms] : sig) std::sort(forms.begin(), forms.end());
    return sig;
}

struct QuadIsoSearch {
    const IntersectionMatrix& a;
    const IntersectionMatrix& b;
    std::vector<int> a_labels;
    std::vector<int> b_labels;
    std::map<int, int> pi;
    std::set<int> used;

    bool labelled_subs_match(int new_label) const {
        // Check every fully-assigned 4-subset containing new_label.
        std::vector<int> assigned;
        for (const auto& [k, v] : pi) assigned.push_back(k);
        const int m = static_cast<int>(assigned.size());
        if (m < 4) return true;
        std::vector<int> idx{0, 1, 2, 3};
        while (true) {
            std::vector<int> subset;
            for (int i : idx) subset.push_back(assigned[static_cast<std::size_t>(i)]);
            if (std::find(subset.begin(), subset.end(), new_label) != subset.end() &&
                !one_sub_matches(subset))
                return false;
            int k = 3;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - 4 + k) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int i = k + 1; i < 4; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
        return true;
    }

    bool one_sub_matches(const std::vector<int>& subset) const {
        std::vector<int> image;
        for (int l : subset) image.push_back(pi.at(l));
        std::sort(image.begin(), image.end());
        const IntersectionMatrix sa = submatrix_on(a, subset);
        const IntersectionMatrix sb = submatrix_on(b, image);
        for (int l : subset) {
            Row mapped = sa.row(l);
            for (SignedEntry& e : mapped) e.label = pi.at(e.label);
            if (!rows_cyclically_equal(mapped, sb.row(pi.at(l)))) return false;
        }
        return true;
    }

    bool extend(std::size_t depth, const std::map<int, std::vector<CanonicalForm>>& sig_a,
                const std::map<int, std::vector<CanonicalForm>>& sig_b) {
        if (depth == a_labels.size()) return true;
        const int l = a_labels[depth];
        for (int cand : b_labels) {
            if (used.count(cand)) continue;
            if (sig_a.at(l) != sig_b.at(cand)) continue;
            pi[l] = cand;
            used.insert(cand);
            if (labelled_subs_match(l) && extend(depth + 1, sig_a, sig_b)) return true;
            pi.erase(l);
            used.erase(cand);
        }
        return false;
    }
};

}  // namespace

QuadIsoResult iso_via_quads(const IntersectionMatrix& a, const IntersectionMatrix& b) {
    if (a.n() < 4 || b.n() < 4) throw DomainError("iso_via_quads requires n >= 4");
    if (a.n() != b.n()) throw DomainError("iso_via_quads requires matrices of equal size");
    QuadIsoResult result;
    result.advisory = check_consistency(a).has_value() || check_consistency(b).has_value();

    const QuadProfile pa = quad_profile(a);
    const QuadProfile pb = quad_profile(b);
    if (pa.sorted_forms() != pb.sorted_forms()) return result;

    QuadIsoSearch search{a, b, a.labels(), b.labels(), {}, {}};
    result.isomorphic =
        search.extend(0, label_signatures(pa, a.labels()), label_signatures(pb, b.labels()));
    return result;
}

SphereViaQuadsResult is_sphere_embeddable_via_quads(const IntersectionMatrix& a) {
    SphereViaQuadsResult result;
    if (a.n() < 4) {
        result.embeddable = is_sphere_embeddable_direct(a);
        return result;
    }
    for (auto& [subset, sub] : all_submatrices(a, 4)) {
        if (genus(sub) != 0) {
            result.embeddable = false;
            result.witness = subset;
            return result;
        }
    }
    result.embeddable = true;
    return result;
}

bool is_uniform_oriented_matroid(const IntersectionMatrix& a) {
    if (a.n() <= 1) return true;
    const dense::Dense d = dense::from_matrix(a);
    return dense::all_rows_antipodal(d) && dense::consistent(d) && dense::genus(d) == 0;
}

const char* to_string(TripleType t) {
    switch (t) {
        case TripleType::alpha: return "alpha";
        case TripleType::beta: return "beta";
        case TripleType::gamma: return "gamma";
        case TripleType::delta: return "delta";
        case TripleType::epsilon: return "epsilon";
    }
    return "?";
}

namespace {

struct TripleRefs {
    std::map<std::vector<std::int8_t>, TripleType> by_keys;
    std::array<CanonicalForm, 5> forms;
};

std::vector<std::int8_t> key_vec(const dense::Dense& d) {
    return std::vector<std::int8_t>(d.keys.begin(), d.keys.begin() + d.n * d.L);
}

// The 3-curve census is tiny; derive the five consistent genus-0 classes and
// fix the naming convention once.
const TripleRefs& triple_refs() {
    static TripleRefs refs;
    static std::once_flag once;
    std::call_once(once, [] {
        std::set<dense::Dense> classes;
        std::array<std::int8_t, 4> base{};  // entries of row r: keys of {+-a, +-b}
        dense::Dense d;
        d.n = 3;
        d.L = 4;
        std::array<std::array<std::int8_t, 4>, 3> rows{};
        for (int r = 0; r < 3; ++r) {
            int q = 0;
            for (int other = 0; other < 3; ++other) {
                if (other == r) continue;
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(q++)] =
                    static_cast<std::int8_t>(other);  // +label
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(q++)] =
                    static_cast<std::int8_t>(3 + other);  // -label
            }
        }
        (void)base;
        std::array<std::array<std::int8_t, 4>, 3> perm = rows;
        auto fill = [&](int r, auto&& self) -> void {
            if (r == 3) {
                for (int i = 0; i < 3; ++i)
                    for (int p = 0; p < 4; ++p)
                        d.at(i, p) = perm[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
                if (!dense::consistent(d) || dense::genus(d) != 0) return;
                classes.insert(dense::canonical(d));
                return;
            }
            std::sort(perm[static_cast<std::size_t>(r)].begin(),
                      perm[static_cast<std::size_t>(r)].end());
            do {
                self(r + 1, self);
            } while (std::next_permutation(perm[static_cast<std::size_t>(r)].begin(),
                                           perm[static_cast<std::size_t>(r)].end()));
        };
        fill(0, fill);
        if (classes.size() != 5)
            throw std::logic_error("expected exactly 5 consistent genus-0 3-classes");

        // Delta: the unique class closed under all 8 reorientation patterns.
        auto is_closed = [&](const dense::Dense& c) {
            for (unsigned mask = 1; mask < 8; ++mask)
                if (!(dense::canonical(dense::reorient_mask(c, mask)) == c)) return false;
            return true;
        };
        const dense::Dense* delta = nullptr;
        std::vector<const dense::Dense*> orbit;
        for (const auto& c : classes) {
            if (is_closed(c)) {
                if (delta) throw std::logic_error("two reorientation-closed 3-classes");
                delta = &c;
            } else {
                orbit.push_back(&c);
            }
        }
        if (!delta || orbit.size() != 4)
            throw std::logic_error("expected one closed class and an orbit of four");

        // alpha: least class moved by whole-arrangement reorientation;
        // epsilon: its image; beta/gamma: the rest, ascending.
        const dense::Dense* alpha = nullptr;
        dense::Dense epsilon_form;
        for (const dense::Dense* c : orbit) {
            dense::Dense img = dense::canonical(dense::reorient_mask(*c, 7));
            if (!(img == *c)) {
                alpha = c;
                epsilon_form = img;
                break;
            }
        }
        if (!alpha) throw std::logic_error("no orbit member moved by reorient-all");
        std::vector<dense::Dense> rest;
        for (const dense::Dense* c : orbit)
            if (!(*c == *alpha) && !(*c == epsilon_form)) rest.push_back(*c);
        if (rest.size() != 2) throw std::logic_error("alpha/epsilon assignment failed");
        std::sort(rest.begin(), rest.end());

        auto put = [&](TripleType t, const dense::Dense& c) {
            refs.by_keys[key_vec(c)] = t;
            refs.forms[static_cast<std::size_t>(t)] = CanonicalForm(3, key_vec(c));
        };
        put(TripleType::alpha, *alpha);
        put(TripleType::beta, rest[0]);
        put(TripleType::gamma, rest[1]);
        put(TripleType::delta, *delta);
        put(TripleType::epsilon, epsilon_form);
    });
    return refs;
}

}  // namespace

TripleType classify_triple(const IntersectionMatrix& a) {
    if (a.n() != 3) throw DomainError("classify_triple requires n == 3");
    if (check_consistency(a).has_value())
        throw DomainError("classify_triple requires a consistent matrix");
    const CanonicalForm form = canonical_form(a);
    const auto& refs = triple_refs();
    auto it = refs.by_keys.find(form.keys());
    if (it == refs.by_keys.end())
        throw std::logic_error("consistent 3-matrix not among the five reference classes");
    return it->second;
}

const CanonicalForm& triple_reference_form(TripleType t) {
    return triple_refs().forms[static_cast<std::size_t>(t)];
}

}  // namespace pscirc
