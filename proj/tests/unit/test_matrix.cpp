#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "pscirc/matrix.hpp"

using namespace pscirc;

TEST_CASE("signed entry order: plus before minus, labels ascending") {
    CHECK(entry(1) < entry(2));
    CHECK(entry(2) < entry(-1));
    CHECK(entry(-1) < entry(-2));
    CHECK(entry(3).to_string() == "+3");
    CHECK(entry(-3).to_string() == "-3");
    CHECK(entry(3).negated() == entry(-3));
}

TEST_CASE("cyclic row helpers") {
    Row r{entry(2), entry(3), entry(-2), entry(-3)};
    Row rot{entry(-2), entry(-3), entry(2), entry(3)};
    CHECK(rows_cyclically_equal(r, rot));
    CHECK(min_rotation(rot) == r);
    Row other{entry(2), entry(-3), entry(-2), entry(3)};
    CHECK(!rows_cyclically_equal(r, other));
}

TEST_CASE("validate accepts the reference matrices") {
    CHECK(!validate(fixtures::m2()));
    CHECK(!validate(fixtures::m_delta()));
    CHECK(!validate(fixtures::m_bad()));  // inconsistent but structurally valid
}

TEST_CASE("validate reports the first offending row and entry") {
    std::map<int, Row> rows;
    rows[1] = {entry(2), entry(-2), entry(2), entry(-3)};  // duplicate +2
    rows[2] = {entry(-1), entry(3), entry(1), entry(-3)};
    rows[3] = {entry(-1), entry(-2), entry(1), entry(2)};
    auto v = validate(rows);
    REQUIRE(v.has_value());
    CHECK(v->row_label == 1);
    REQUIRE(v->entry.has_value());
    CHECK(*v->entry == entry(2));
}

TEST_CASE("validate rejects foreign labels and own label") {
    std::map<int, Row> rows;
    rows[1] = {entry(2), entry(-2)};
    rows[2] = {entry(1), entry(-7)};
    auto v = validate(rows);
    REQUIRE(v.has_value());
    CHECK(v->row_label == 2);

    rows[2] = {entry(2), entry(-2)};
    v = validate(rows);
    REQUIRE(v.has_value());
    CHECK(v->row_label == 2);
}

TEST_CASE("reorient: stated rule on m2") {
    auto r = reorient(fixtures::m2(), 2);
    CHECK(rows_cyclically_equal(r.row(1), {entry(-2), entry(2)}));
    CHECK(rows_cyclically_equal(r.row(2), {entry(1), entry(-1)}));
}

TEST_CASE("reorient is an involution") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            auto a = fixtures::random_matrix(n, rng);
            int j = a.labels()[rng() % a.labels().size()];
            CHECK(reorient(reorient(a, j), j) == a);
        }
    }
}

TEST_CASE("reorient unknown label") {
    CHECK_THROWS_AS(reorient(fixtures::m2(), 9), DomainError);
}

TEST_CASE("relabel identity and inverse law") {
    std::mt19937_64 rng(11);
    auto a = fixtures::m_delta();
    CHECK(relabel(a, LabelPermutation::identity(a.labels())) == a);
    for (int rep = 0; rep < 20; ++rep) {
        auto b = fixtures::random_matrix(5, rng);
        auto pi = fixtures::random_permutation(b.labels(), rng);
        CHECK(relabel(relabel(b, pi), pi.inverse()) == b);
    }
}

TEST_CASE("relabel rejects non-bijections") {
    auto a = fixtures::m2();
    CHECK_THROWS_AS(relabel(a, LabelPermutation(std::map<int, int>{{1, 2}, {2, 2}})), DomainError);
    CHECK_THROWS_AS(relabel(a, LabelPermutation(std::map<int, int>{{1, 2}})), DomainError);
}

TEST_CASE("submatrix_delete(m_delta, 3) is m2") {
    auto sub = submatrix_delete(fixtures::m_delta(), 3);
    CHECK(sub == fixtures::m2());
}

TEST_CASE("submatrix_delete preconditions") {
    CHECK_THROWS_AS(submatrix_delete(fixtures::m2(), 1), DomainError);
    CHECK_THROWS_AS(submatrix_delete(fixtures::m_delta(), 9), DomainError);
}

TEST_CASE("deletion preserves validity and is order-independent") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = fixtures::random_matrix(5, rng);
        int j = a.labels()[rng() % 5];
        int k = a.labels()[rng() % 5];
        while (k == j) k = a.labels()[rng() % 5];
        auto once = submatrix_delete(a, j);
        CHECK(!validate(once));
        CHECK(submatrix_delete(once, k) == submatrix_delete(submatrix_delete(a, k), j));
    }
}

TEST_CASE("all_submatrices") {
    auto subs = all_submatrices(fixtures::m_delta(), 2);
    CHECK(subs.size() == 3);
    CHECK(subs[0].first == std::vector<int>{1, 2});
    CHECK(subs[1].first == std::vector<int>{1, 3});
    CHECK(subs[2].first == std::vector<int>{2, 3});

    auto whole = all_submatrices(fixtures::m_delta(), 3);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].second == fixtures::m_delta());

    std::mt19937_64 rng(17);
    auto a = fixtures::random_matrix(5, rng);
    auto quads = all_submatrices(a, 4);
    CHECK(quads.size() == 5);
    for (const auto& [subset, sub] : quads) {
        std::vector<int> others;
        for (int l : a.labels())
            if (std::find(subset.begin(), subset.end(), l) == subset.end()) others.push_back(l);
        REQUIRE(others.size() == 1);
        CHECK(sub == submatrix_delete(a, others[0]));
    }
    CHECK_THROWS_AS(all_submatrices(a, 1), DomainError);
    CHECK_THROWS_AS(all_submatrices(a, 6), DomainError);
}

TEST_CASE("structural invariants under reorient and relabel") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto a = fixtures::random_matrix(n, rng);
        CHECK(static_cast<int>(a.row(1).size()) == 2 * (n - 1));
        int j = a.labels()[rng() % a.labels().size()];
        CHECK(!validate(reorient(a, j)));
        CHECK(!validate(relabel(a, fixtures::random_permutation(a.labels(), rng))));
    }
}

TEST_CASE("reorient commutes with deletion of a different label") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = fixtures::random_matrix(4, rng);
        int j = a.labels()[rng() % 4];
        int k = a.labels()[rng() % 4];
        while (k == j) k = a.labels()[rng() % 4];
        CHECK(submatrix_delete(reorient(a, j), k) == reorient(submatrix_delete(a, k), j));
    }
}

TEST_CASE("operations are cyclic-rotation invariant") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = fixtures::random_matrix(4, rng);
        auto b = fixtures::random_rotation(a, rng);
        CHECK(a == b);
        int j = a.labels()[rng() % 4];
        CHECK(reorient(a, j) == reorient(b, j));
        CHECK(submatrix_delete(a, j) == submatrix_delete(b, j));
        auto pi = fixtures::random_permutation(a.labels(), rng);
        CHECK(relabel(a, pi) == relabel(b, pi));
    }
}

TEST_CASE("reorient_all reverses rows and keeps signs") {
    auto a = fixtures::m_delta();
    auto r = reorient_all(a);
    for (int label : a.labels()) {
        Row reversed = a.row(label);
        std::reverse(reversed.begin(), reversed.end());
        CHECK(rows_cyclically_equal(r.row(label), reversed));
    }
}
