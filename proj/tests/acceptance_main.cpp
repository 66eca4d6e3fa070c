// Acceptance suite: one pass/fail line per criterion; exits with the number
// of failed criteria.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "pscirc/analysis.hpp"
#include "pscirc/consistency.hpp"
#include "pscirc/dense.hpp"
#include "pscirc/embedding.hpp"
#include "pscirc/enumerate.hpp"
#include "pscirc/geometry.hpp"
#include "pscirc/io.hpp"
#include "pscirc/matrix.hpp"

using namespace pscirc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

// ---------------------------------------------------------------------------
// Independent two-sided rotation check on the dense form: the plus-side and
// minus-side descriptions of every vertex must induce the same successor map.
bool rotation_descriptions_coincide(const dense::Dense& d) {
    const int n = d.n;
    const int L = d.L;
    const dense::PosIndex px(d);
    std::array<std::int16_t, 2 * dense::kMaxN * dense::kMaxL> plus{};
    std::array<std::int16_t, 2 * dense::kMaxN * dense::kMaxL> minus{};
    auto out_dart = [L](int row, int pos) { return 2 * (row * L + pos); };
    auto in_dart = [L](int row, int pos) { return 2 * (row * L + (pos + L - 1) % L) + 1; };
    for (int r = 0; r < n; ++r) {
        for (int p = 0; p < L; ++p) {
            const int key = d.at(r, p);
            if (key < n) {
                // Row r holds +b: counterclockwise (out_i, in_j, in_i, out_j).
                const int b = key;
                const int q = px(b, n + r);
                plus[static_cast<std::size_t>(out_dart(r, p))] =
                    static_cast<std::int16_t>(in_dart(b, q));
                plus[static_cast<std::size_t>(in_dart(b, q))] =
                    static_cast<std::int16_t>(in_dart(r, p));
                plus[static_cast<std::size_t>(in_dart(r, p))] =
                    static_cast<std::int16_t>(out_dart(b, q));
                plus[static_cast<std::size_t>(out_dart(b, q))] =
                    static_cast<std::int16_t>(out_dart(r, p));
            } else {
                // Row r holds -i: the same vertex as (out_j, out_i, in_j, in_i)
                // with j = r, i the crossing curve.
                const int i = key - n;
                const int q = px(i, r);  // +r in row i
                minus[static_cast<std::size_t>(out_dart(r, p))] =
                    static_cast<std::int16_t>(out_dart(i, q));
                minus[static_cast<std::size_t>(out_dart(i, q))] =
                    static_cast<std::int16_t>(in_dart(r, p));
                minus[static_cast<std::size_t>(in_dart(r, p))] =
                    static_cast<std::int16_t>(in_dart(i, q));
                minus[static_cast<std::size_t>(in_dart(i, q))] =
                    static_cast<std::int16_t>(out_dart(r, p));
            }
        }
    }
    return std::memcmp(plus.data(), minus.data(),
                       static_cast<std::size_t>(2 * n * L) * sizeof(std::int16_t)) == 0;
}

// ---------------------------------------------------------------------------
// Shared full n=4 census scan feeding criteria 3, 5, 7 and 9.
struct N4ScanResults {
    long long classes = 0;
    long long consistent_classes = 0;
    long long genus0_classes = 0;
    long long om_classes = 0;
    long long prop2_violations = 0;
    long long om_triple_violations = 0;
    long long rotation_violations = 0;
    std::optional<CanonicalForm> first_torus_fixture;  // genus >= 1, all triples genus 0
    double elapsed = 0.0;
};

const N4ScanResults& n4_scan() {
    static N4ScanResults r = [] {
        N4ScanResults res;
        const auto t0 = Clock::now();
        const auto delta_keys = triple_reference_form(TripleType::delta).keys();
        const std::vector<std::vector<int>> triples{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        enumerate_scan(4, CensusFilter::all, {}, [&](const CensusEntry& e) {
            ++res.classes;
            if (e.consistent) ++res.consistent_classes;
            if (e.genus == 0) ++res.genus0_classes;
            if (e.om) ++res.om_classes;

            dense::Dense d;
            d.n = 4;
            d.L = 6;
            std::copy(e.form.keys().begin(), e.form.keys().end(), d.keys.begin());

            bool all_triples_consistent = true;
            bool all_triples_genus0 = true;
            bool all_triples_delta = true;
            for (const auto& t : triples) {
                const dense::Dense sub = dense::submatrix_ranks(d, t);
                if (!dense::consistent(sub)) all_triples_consistent = false;
                if (dense::genus(sub) != 0) all_triples_genus0 = false;
                if (e.om) {
                    const dense::Dense c = dense::canonical(sub);
                    std::vector<std::int8_t> keys(c.keys.begin(), c.keys.begin() + c.n * c.L);
                    if (keys != delta_keys) all_triples_delta = false;
                }
            }
            if (e.consistent != all_triples_consistent) ++res.prop2_violations;
            if (e.om && !all_triples_delta) ++res.om_triple_violations;
            if (!rotation_descriptions_coincide(d)) ++res.rotation_violations;
            if (!res.first_torus_fixture && e.genus >= 1 && all_triples_genus0)
                res.first_torus_fixture = e.form;
        });
        res.elapsed = seconds_since(t0);
        return res;
    }();
    return r;
}

// ---------------------------------------------------------------------------
// Shared criterion-4 instance set: matrices of 1000 seeded 5-circle
// arrangements plus 1000 single-transposition perturbations.
const std::vector<IntersectionMatrix>& n5_instances() {
    static std::vector<IntersectionMatrix> instances = [] {
        std::vector<IntersectionMatrix> out;
        out.reserve(2000);
        std::mt19937_64 rng(20240001);
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            out.push_back(matrix_from_circles(random_arrangement(5, seed)));
            const IntersectionMatrix& base = out.back();
            std::map<int, Row> rows;
            for (int label : base.labels()) rows[label] = base.row(label);
            const int target = base.labels()[rng() % 5];
            Row& row = rows[target];
            const std::size_t p = rng() % row.size();
            std::size_t q = rng() % row.size();
            while (q == p) q = rng() % row.size();
            std::swap(row[p], row[q]);
            IntersectionMatrix perturbed{std::move(rows)};
            require(!validate(perturbed).has_value(), "perturbed matrix must stay valid");
            out.push_back(std::move(perturbed));
        }
        return out;
    }();
    return instances;
}

// Frozen Remark-2 style fixture: consistent, every 3-submatrix has genus 0,
// whole-matrix genus >= 1. Discovered as the first such class in the n=4
// census scan and pinned here as a regression value.
constexpr const char* kTorusFixturePsm = "@TORUS_FIXTURE@";

// ---------------------------------------------------------------------------

bool criterion1(std::ostream& log) {
    const auto t0 = Clock::now();
    auto census = enumerate_census(2, CensusFilter::all);
    require(census.size() == 1, "n=2 census must have exactly 1 class");
    auto m = census[0].form.to_matrix();
    EmbeddedGraph g(m);
    require(g.vertex_count() == 2, "V must be 2");
    require(g.edge_count() == 4, "E must be 4");
    require(trace_faces(g).size() == 4, "F must be 4");
    require(genus(m) == 0, "genus must be 0");
    const double dt = seconds_since(t0);
    require(dt < 1.0, "must finish in under 1 s");
    log << "1 class, V=2 E=4 F=4 genus 0, " << dt << " s";
    return true;
}

bool criterion2(std::ostream& log) {
    const auto t0 = Clock::now();
    auto all = enumerate_census(3, CensusFilter::all);
    const double dt_all = seconds_since(t0);
    require(dt_all < 10.0, "census(3, all) must finish in under 10 s");
    for (const auto& e : all)
        if (e.consistent) require(e.genus == 0, "every consistent 3-class must have genus 0");

    std::vector<CensusEntry> genus0_consistent;
    for (const auto& e : all)
        if (e.genus == 0 && e.consistent) genus0_consistent.push_back(e);
    require(genus0_consistent.size() == 5, "genus-0 consistent census must have 5 classes");

    auto orbits = count_reorientation_orbits(genus0_consistent);
    require(orbits.size() == 2, "expected 2 reorientation orbits");
    std::size_t small = std::min(orbits[0].size(), orbits[1].size());
    std::size_t large = std::max(orbits[0].size(), orbits[1].size());
    require(small == 1 && large == 4, "orbit sizes must be {4, 1}");

    for (const auto& o : orbits) {
        if (o.size() != 1) continue;
        dense::Dense d;
        d.n = 3;
        d.L = 4;
        const auto& keys = genus0_consistent[static_cast<std::size_t>(o[0])].form.keys();
        std::copy(keys.begin(), keys.end(), d.keys.begin());
        for (unsigned mask = 1; mask < 8; ++mask)
            require(dense::canonical(dense::reorient_mask(d, mask)) == d,
                    "the singleton orbit must be closed under all 8 reorientation patterns");
    }
    log << all.size() << " classes total, 5 consistent genus-0, orbits {4,1}, " << dt_all << " s";
    return true;
}

bool criterion3(std::ostream& log) {
    const auto t0 = Clock::now();
    auto census = enumerate_census(4, CensusFilter::genus0);
    const double dt = seconds_since(t0);
    require(dt < 600.0, "census(4, genus0) must finish in under 10 minutes");
    auto variants = equivalence_variant_counts(census);
    log << "classes: relabel+rotation=" << variants.relabel_rotation
        << " +mirror=" << variants.plus_mirror
        << " +reorientation=" << variants.plus_reorientation
        << " +both=" << variants.plus_both << ", " << dt << " s; ";
    if (variants.relabel_rotation == 72) log << "72 under relabel+rotation";
    else if (variants.plus_mirror == 72) log << "72 under relabel+rotation+mirror";
    else if (variants.plus_reorientation == 72) log << "72 under relabel+rotation+reorientation";
    else if (variants.plus_both == 72) log << "72 under relabel+rotation+mirror+reorientation";
    else require(false, "no equivalence variant counts exactly 72");
    return true;
}

bool criterion4(std::ostream& log) {
    const auto t0 = Clock::now();
    long long embeddable = 0;
    for (const auto& m : n5_instances()) {
        const bool direct = is_sphere_embeddable_direct(m);
        const bool quads = is_sphere_embeddable_via_quads(m).embeddable;
        require(direct == quads, "Theorem-4 equivalence violated");
        if (direct) ++embeddable;
    }
    const double dt = seconds_since(t0);
    require(dt < 300.0, "must finish in under 5 minutes");
    log << n5_instances().size() << " instances (" << embeddable
        << " sphere-embeddable), zero disagreements, " << dt << " s";
    return true;
}

bool criterion5(std::ostream& log) {
    const auto& scan = n4_scan();
    require(scan.prop2_violations == 0, "Prop.-2 equivalence violated in the n=4 census");
    require(scan.rotation_violations == 0, "two-sided rotation descriptions diverged");
    long long checked = 0;
    for (const auto& m : n5_instances()) {
        const bool whole = !check_consistency(m).has_value();
        bool triples = true;
        for (const auto& [subset, sub] : all_submatrices(m, 3))
            if (check_consistency(sub).has_value()) triples = false;
        require(whole == triples, "Prop.-2 equivalence violated on an n=5 instance");
        ++checked;
    }
    log << scan.classes << " census classes (scan " << scan.elapsed << " s) + " << checked
        << " n=5 instances, zero exceptions";
    return true;
}

bool criterion6(std::ostream& log) {
    const auto t0 = Clock::now();
    std::vector<IntersectionMatrix> pool;
    std::mt19937_64 rng(77001);
    for (std::uint64_t seed = 5000; pool.size() < 100; ++seed)
        pool.push_back(matrix_from_circles(random_arrangement(5, seed)));
    for (int i = 0; i < 100; ++i) {
        std::vector<int> image{1, 2, 3, 4, 5};
        std::shuffle(image.begin(), image.end(), rng);
        std::map<int, int> mapping;
        for (int l = 1; l <= 5; ++l) mapping[l] = image[static_cast<std::size_t>(l - 1)];
        pool.push_back(relabel(pool[static_cast<std::size_t>(i)], LabelPermutation(mapping)));
    }
    for (const auto& m : pool)
        require(!check_consistency(m).has_value(), "criterion-6 instances must be consistent");

    std::vector<CanonicalForm> forms;
    forms.reserve(pool.size());
    for (const auto& m : pool) forms.push_back(canonical_form(m));

    long long isomorphic_pairs = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const bool direct = forms[i] == forms[j];
            const auto quads = iso_via_quads(pool[i], pool[j]);
            require(!quads.advisory, "instances are consistent, result must not be advisory");
            require(direct == quads.isomorphic, "Prop.-1 equivalence violated");
            if (direct) ++isomorphic_pairs;
        }
    }
    const double dt = seconds_since(t0);
    require(dt < 300.0, "must finish in under 5 minutes");
    log << pool.size() << " instances, " << pool.size() * (pool.size() - 1) / 2 << " pairs ("
        << isomorphic_pairs << " isomorphic), zero disagreements, " << dt << " s";
    return true;
}

bool criterion7(std::ostream& log) {
    const auto& scan = n4_scan();
    require(scan.first_torus_fixture.has_value(),
            "census must contain a genus>=1 matrix whose 3-submatrices all have genus 0");
    const IntersectionMatrix discovered = scan.first_torus_fixture->to_matrix();

    IntersectionMatrix fixture;
    if (std::string(kTorusFixturePsm).find('@') == std::string::npos) {
        fixture = parse_matrix(kTorusFixturePsm);
        require(fixture == discovered, "frozen fixture must be the first discovered class");
    } else {
        fixture = discovered;  // discovery mode: freeze the printed matrix
        log << "[discovery] ";
    }
    require(genus(fixture) >= 1, "fixture must have genus >= 1");
    for (const auto& [subset, sub] : all_submatrices(fixture, 3))
        require(genus(sub) == 0, "every 3-submatrix of the fixture must have genus 0");
    std::ostringstream psm;
    psm << serialize_matrix(fixture);
    std::string line;
    std::string flat;
    std::istringstream in(psm.str());
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') flat += line + "\\n";
    log << "fixture genus " << genus(fixture) << ", all 3-submatrices genus 0: " << flat;
    return true;
}

bool criterion8(std::ostream& log) {
    const auto t0 = Clock::now();
    long long checked = 0;
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto arr = random_arrangement(n, 900000 + seed * 7 + static_cast<std::uint64_t>(n));
            const auto m = matrix_from_circles(arr);
            require(!validate(m).has_value(), "oracle output must validate");
            require(!check_consistency(m).has_value(), "oracle output must be consistent");
            require(genus(m) == 0, "oracle output must have genus 0");
            for (std::size_t j = 0; j < arr.circles.size(); ++j) {
                std::vector<bool> reversed(arr.circles.size(), false);
                reversed[j] = true;
                require(matrix_from_circles_oriented(arr, reversed) ==
                            reorient(m, arr.circles[j].first),
                        "reversed walk must reproduce reorient");
            }
            ++checked;
        }
    }
    log << checked << " arrangements (n=2..6), all valid/consistent/genus-0, reorient "
        << "cross-validation clean, " << seconds_since(t0) << " s";
    return true;
}

bool criterion9(std::ostream& log) {
    const auto delta_ref = triple_reference_form(TripleType::delta);
    long long om_entries = 0;
    for (int n = 2; n <= 3; ++n) {
        for (const auto& e : enumerate_census(n, CensusFilter::all)) {
            if (!e.om) continue;
            ++om_entries;
            if (n < 3) continue;
            for (const auto& [subset, sub] : all_submatrices(e.form.to_matrix(), 3))
                require(classify_triple(sub) == TripleType::delta,
                        "3-submatrix of an OM census entry must be delta");
        }
    }
    const auto& scan = n4_scan();
    require(scan.om_triple_violations == 0, "n=4 OM census entries with a non-delta triple");
    om_entries += scan.om_classes;
    require(delta_ref.n() == 3, "delta reference must be a 3-matrix");
    log << om_entries << " OM census entries across n=2..4, all triples delta";
    return true;
}

bool criterion10(std::ostream& log) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(424242);
    const int kCount = 10000;
    for (int rep = 0; rep < kCount; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::map<int, Row> rows;
        for (int i = 1; i <= n; ++i) {
            Row row;
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                row.emplace_back(k, Sign::plus);
                row.emplace_back(k, Sign::minus);
            }
            std::shuffle(row.begin(), row.end(), rng);
            rows[i] = std::move(row);
        }
        IntersectionMatrix a{std::move(rows)};
        EmbeddedGraph g(a);
        require(g.vertex_count() == n * (n - 1), "V = n(n-1)");
        require(g.edge_count() == 2 * n * (n - 1), "E = 2n(n-1)");
        const int F = static_cast<int>(trace_faces(g).size());
        const int chi = g.vertex_count() - g.edge_count() + F;
        require(chi % 2 == 0 && chi <= 2, "Euler characteristic must be even and <= 2");

        const int base_genus = genus(a);
        const bool base_cons = !check_consistency(a).has_value();

        // One random representative of each transform per matrix.
        std::map<int, Row> rotated;
        for (int label : a.labels()) {
            Row row = a.row(label);
            std::rotate(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(rng() % row.size()),
                        row.end());
            rotated[label] = std::move(row);
        }
        IntersectionMatrix rot{std::move(rotated)};
        std::vector<int> image(a.labels());
        std::shuffle(image.begin(), image.end(), rng);
        std::map<int, int> mapping;
        for (std::size_t i = 0; i < image.size(); ++i) mapping[a.labels()[i]] = image[i];
        IntersectionMatrix rel = relabel(a, LabelPermutation(mapping));
        IntersectionMatrix reo = reorient(a, a.labels()[rng() % a.labels().size()]);

        for (const IntersectionMatrix* t : {&rot, &rel, &reo}) {
            require(genus(*t) == base_genus, "genus must be invariant");
            require(!check_consistency(*t).has_value() == base_cons,
                    "consistency must be invariant");
        }
    }
    log << kCount << " random matrices (n<=6), all invariants hold, " << seconds_since(t0)
        << " s";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "n=2 base case", criterion1},
        {2, "n=3 census", criterion2},
        {3, "n=4 genus-0 census and the 72 count", criterion3},
        {4, "Theorem 4 oracle equivalence at n=5", criterion4},
        {5, "Proposition 2 equivalence", criterion5},
        {6, "Proposition 1 equivalence", criterion6},
        {7, "Remark 2 torus fixture", criterion7},
        {8, "geometric oracle soundness", criterion8},
        {9, "OM entries have delta triples", criterion9},
        {10, "structural invariants fuzz", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool ok = false;
        std::string error;
        const auto t0 = Clock::now();
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double dt = seconds_since(t0);
        if (ok) {
            std::cout << "PASS criterion " << c.number << " (" << c.name << ") [" << dt
                      << " s]: " << log.str() << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << c.number << " (" << c.name << ") [" << dt
                      << " s]: " << (error.empty() ? log.str() : error) << "\n";
        }
        std::cout.flush();
    }
    if (failures) std::cout << failures << " criteria failed\n";
    else std::cout << "all criteria passed\n";
    return failures;
}
