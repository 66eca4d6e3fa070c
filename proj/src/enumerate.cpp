#include "pscirc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "pscirc/dense.hpp"
#include "pscirc/io.hpp"

namespace pscirc {

using dense::Dense;
using dense::kMaxL;
using dense::kMaxN;

const char* to_string(CensusFilter f) {
    switch (f) {
        case CensusFilter::all: return "all";
        case CensusFilter::consistent: return "consistent";
        case CensusFilter::genus0: return "genus0";
        case CensusFilter::om: return "om";
    }
    return "?";
}

CensusFilter census_filter_from_string(const std::string& name) {
    if (name == "all") return CensusFilter::all;
    if (name == "consistent") return CensusFilter::consistent;
    if (name == "genus0") return CensusFilter::genus0;
    if (name == "om") return CensusFilter::om;
    throw DomainError("unknown census filter '" + name + "'");
}

namespace {

// One anchored row: rotation fixed by placing the minimal entry first.
struct RowCandidate {
    std::array<std::int8_t, kMaxL> keys{};
    std::array<std::int8_t, 2 * kMaxN> pos{};       // key -> position, -1 absent
    std::array<std::int8_t, kMaxL> best_as_row1{};  // least relabeled-as-row-1 encoding
    bool antipodal = false;
};

// Least encoding this row can contribute as row 1 of a relabeled matrix:
// anchor at each plus entry, number labels by first occurrence (greedy
// per-position minimization is optimal since signs are fixed).
void compute_best_as_row1(const std::int8_t* keys, int n, int L, std::int8_t* out) {
    std::array<std::int8_t, kMaxL> cand{};
    bool have = false;
    for (int a = 0; a < L; ++a) {
        if (keys[a] >= n) continue;  // anchors are plus entries
        std::array<std::int8_t, kMaxN> number{};
        number.fill(-1);
        int next = 2;
        for (int p = 0; p < L; ++p) {
            const int key = keys[(a + p) % L];
            const int rank = dense::key_label(key, n) - 1;
            if (number[static_cast<std::size_t>(rank)] < 0)
                number[static_cast<std::size_t>(rank)] = static_cast<std::int8_t>(next++);
            const int num = number[static_cast<std::size_t>(rank)];
            cand[static_cast<std::size_t>(p)] =
                static_cast<std::int8_t>(key < n ? num - 1 : n + num - 1);
        }
        if (!have || std::memcmp(cand.data(), out, static_cast<std::size_t>(L)) < 0) {
            std::memcpy(out, cand.data(), static_cast<std::size_t>(L));
            have = true;
        }
    }
}

// All anchored permutations of row `rank`'s entry multiset, ascending.
std::vector<RowCandidate> build_family(int n, int rank) {
    const int L = 2 * (n - 1);
    std::vector<std::int8_t> tail;
    for (int other = 0; other < n; ++other) {
        if (other == rank) continue;
        tail.push_back(static_cast<std::int8_t>(other));      // +label
        tail.push_back(static_cast<std::int8_t>(n + other));  // -label
    }
    std::sort(tail.begin(), tail.end());
    const std::int8_t anchor = tail.front();
    tail.erase(tail.begin());

    std::vector<RowCandidate> family;
    do {
        RowCandidate c;
        c.keys[0] = anchor;
        for (int p = 1; p < L; ++p) c.keys[static_cast<std::size_t>(p)] = tail[static_cast<std::size_t>(p - 1)];
        c.pos.fill(-1);
        for (int p = 0; p < L; ++p) c.pos[static_cast<std::size_t>(c.keys[static_cast<std::size_t>(p)])] =
            static_cast<std::int8_t>(p);
        compute_best_as_row1(c.keys.data(), n, L, c.best_as_row1.data());
        c.antipodal = true;
        for (int p = 0; p < L && c.antipodal; ++p)
            if (c.keys[static_cast<std::size_t>((p + n - 1) % L)] !=
                dense::key_negate(c.keys[static_cast<std::size_t>(p)], n))
                c.antipodal = false;
        family.push_back(c);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return family;
}

inline bool between_cand(const RowCandidate& row, int key, int j_rank, int n, int L) {
    const int pj = row.pos[static_cast<std::size_t>(j_rank)];
    const int mj = row.pos[static_cast<std::size_t>(n + j_rank)];
    const int px = row.pos[static_cast<std::size_t>(key)];
    return ((px - pj + L) % L) < ((mj - pj + L) % L);
}

// Def.-3 conditions for all triples whose maximal rank is `r`.
bool consistent_with_new_row(const std::vector<const RowCandidate*>& rows, int r, int n, int L) {
    for (int k = 0; k <= r; ++k) {
        for (int j = 0; j <= r; ++j) {
            if (j == k) continue;
            for (int i = 0; i <= r; ++i) {
                if (i == k || i == j) continue;
                if (k != r && j != r && i != r) continue;
                for (int c = 0; c < 2; ++c) {
                    const int key_ik = c == 0 ? n + i : i;
                    const int key_ki = c == 0 ? k : n + k;
                    if (between_cand(*rows[static_cast<std::size_t>(k)], key_ik, j, n, L) !=
                        between_cand(*rows[static_cast<std::size_t>(i)], key_ki, j, n, L))
                        return false;
                }
            }
        }
    }
    return true;
}

struct SearchContext {
    int n;
    int L;
    CensusFilter filter;
    bool consistency_pruning;
    std::vector<std::vector<RowCandidate>> families;
};

void emit_leaf(const SearchContext& ctx, const std::vector<const RowCandidate*>& rows,
               std::vector<CensusEntry>& out) {
    Dense d;
    d.n = ctx.n;
    d.L = ctx.L;
    for (int r = 0; r < ctx.n; ++r)
        std::memcpy(&d.keys[static_cast<std::size_t>(r * ctx.L)],
                    rows[static_cast<std::size_t>(r)]->keys.data(),
                    static_cast<std::size_t>(ctx.L));
    if (!dense::is_self_canonical(d)) return;

    const bool pruned_consistent =
        ctx.consistency_pruning && ctx.filter != CensusFilter::all;
    bool consistent = pruned_consistent ? true : dense::consistent(d);
    if (ctx.filter != CensusFilter::all && !consistent) return;

    const int g = dense::genus(d);
    if ((ctx.filter == CensusFilter::genus0 || ctx.filter == CensusFilter::om) && g != 0) return;

    bool antipodal = true;
    for (int r = 0; r < ctx.n && antipodal; ++r)
        antipodal = rows[static_cast<std::size_t>(r)]->antipodal;
    if (ctx.filter == CensusFilter::om && !antipodal) return;

    CensusEntry entry;
    entry.n = ctx.n;
    entry.genus = g;
    entry.consistent = consistent;
    entry.om = antipodal && consistent && g == 0;
    std::vector<std::int8_t> keys(d.keys.begin(), d.keys.begin() + ctx.n * ctx.L);
    entry.form = CanonicalForm(ctx.n, std::move(keys));
    out.push_back(std::move(entry));
}

void search_rows(const SearchContext& ctx, std::vector<const RowCandidate*>& rows, int r,
                 const std::int8_t* row1_keys, std::vector<CensusEntry>& out) {
    if (r == ctx.n) {
        emit_leaf(ctx, rows, out);
        return;
    }
    const bool want_consistent = ctx.consistency_pruning && ctx.filter != CensusFilter::all;
    const bool want_antipodal = ctx.filter == CensusFilter::om;
    for (const RowCandidate& cand : ctx.families[static_cast<std::size_t>(r)]) {
        if (want_antipodal && !cand.antipodal) continue;
        // A relabeling sending this row to row 1 would beat the candidate.
        if (std::memcmp(cand.best_as_row1.data(), row1_keys, static_cast<std::size_t>(ctx.L)) < 0)
            continue;
        rows[static_cast<std::size_t>(r)] = &cand;
        if (want_consistent && r >= 2 && !consistent_with_new_row(rows, r, ctx.n, ctx.L)) continue;
        search_rows(ctx, rows, r + 1, row1_keys, out);
    }
}

int resolve_workers(const EnumerateOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("PSCIRC_SHARDS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 2;
}

}  // namespace

void enumerate_scan(int n, CensusFilter filter, const EnumerateOptions& opts,
                    const std::function<void(const CensusEntry&)>& emit) {
    if (n < 2 || n > 5) throw DomainError("census supports 2 <= n <= 5");
    if (n == 5 && !opts.allow_long_running)
        throw DomainError("n = 5 exhaustive enumeration must be enabled explicitly "
                          "(it is a long-running search)");

    SearchContext ctx;
    ctx.n = n;
    ctx.L = 2 * (n - 1);
    ctx.filter = filter;
    ctx.consistency_pruning = opts.use_consistency_pruning;
    for (int r = 0; r < n; ++r) ctx.families.push_back(build_family(n, r));

    const auto& row1_family = ctx.families[0];
    std::vector<int> row1_live;
    for (std::size_t i = 0; i < row1_family.size(); ++i) {
        if (opts.row1_restrict >= 0 && static_cast<int>(i) != opts.row1_restrict) continue;
        if (filter == CensusFilter::om && !row1_family[i].antipodal) continue;
        // Row 1 must already be the least possible first row.
        if (std::memcmp(row1_family[i].best_as_row1.data(), row1_family[i].keys.data(),
                        static_cast<std::size_t>(ctx.L)) < 0)
            continue;
        row1_live.push_back(static_cast<int>(i));
    }

    // Shards: one per live row-1 candidate, processed by a worker pool and
    // emitted in shard order so the output is deterministic and ascending.
    const int shard_count = static_cast<int>(row1_live.size());
    std::vector<std::vector<CensusEntry>> results(static_cast<std::size_t>(shard_count));
    std::vector<char> done(static_cast<std::size_t>(shard_count), 0);
    std::atomic<int> next_shard{0};
    std::mutex m;
    std::condition_variable cv;

    auto worker = [&] {
        while (true) {
            const int s = next_shard.fetch_add(1);
            if (s >= shard_count) return;
            std::vector<const RowCandidate*> rows(static_cast<std::size_t>(ctx.n), nullptr);
            rows[0] = &row1_family[static_cast<std::size_t>(row1_live[static_cast<std::size_t>(s)])];
            search_rows(ctx, rows, 1, rows[0]->keys.data(), results[static_cast<std::size_t>(s)]);
            {
                std::lock_guard<std::mutex> lock(m);
                done[static_cast<std::size_t>(s)] = 1;
            }
            cv.notify_all();
        }
    };

    const int nworkers = std::min(resolve_workers(opts), std::max(shard_count, 1));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);

    for (int s = 0; s < shard_count; ++s) {
        {
            std::unique_lock<std::mutex> lock(m);
            cv.wait(lock, [&] { return done[static_cast<std::size_t>(s)] != 0; });
        }
        for (const CensusEntry& e : results[static_cast<std::size_t>(s)]) emit(e);
        results[static_cast<std::size_t>(s)].clear();
        results[static_cast<std::size_t>(s)].shrink_to_fit();
    }
    for (auto& t : pool) t.join();
}

std::vector<CensusEntry> enumerate_census(int n, CensusFilter filter,
                                          const EnumerateOptions& opts) {
    std::vector<CensusEntry> out;
    enumerate_scan(n, filter, opts, [&](const CensusEntry& e) { out.push_back(e); });
    return out;
}

namespace {

Dense dense_of(const CanonicalForm& form) {
    Dense d;
    d.n = form.n();
    d.L = d.n >= 2 ? 2 * (d.n - 1) : 0;
    std::copy(form.keys().begin(), form.keys().end(), d.keys.begin());
    return d;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    long long group_count() {
        long long c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

std::map<std::vector<std::int8_t>, int> index_by_form(const std::vector<CensusEntry>& entries) {
    std::map<std::vector<std::int8_t>, int> index;
    for (std::size_t i = 0; i < entries.size(); ++i)
        index[entries[i].form.keys()] = static_cast<int>(i);
    return index;
}

int lookup_image(const std::map<std::vector<std::int8_t>, int>& index, const Dense& image) {
    const Dense c = dense::canonical(image);
    auto it = index.find(std::vector<std::int8_t>(c.keys.begin(), c.keys.begin() + c.n * c.L));
    if (it == index.end())
        throw DomainError("entry list is not closed under the requested transforms");
    return it->second;
}

}  // namespace

std::vector<std::vector<int>> count_reorientation_orbits(const std::vector<CensusEntry>& entries) {
    if (entries.empty()) return {};
    const int n = entries.front().n;
    for (const auto& e : entries)
        if (e.n != n) throw DomainError("entries must share n");
    auto index = index_by_form(entries);
    UnionFind uf(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Dense d = dense_of(entries[i].form);
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            uf.unite(static_cast<int>(i), lookup_image(index, dense::reorient_mask(d, mask)));
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i)
        groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

VariantCounts equivalence_variant_counts(const std::vector<CensusEntry>& entries) {
    VariantCounts counts;
    counts.relabel_rotation = static_cast<long long>(entries.size());
    if (entries.empty()) return counts;
    const int n = entries.front().n;
    auto index = index_by_form(entries);

    UnionFind with_mirror(entries.size());
    UnionFind with_reorient(entries.size());
    UnionFind with_both(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Dense d = dense_of(entries[i].form);
        const int mi = lookup_image(index, dense::mirror(d));
        with_mirror.unite(static_cast<int>(i), mi);
        with_both.unite(static_cast<int>(i), mi);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            const Dense r = dense::reorient_mask(d, mask);
            const int ri = lookup_image(index, r);
            with_reorient.unite(static_cast<int>(i), ri);
            with_both.unite(static_cast<int>(i), ri);
            with_both.unite(static_cast<int>(i), lookup_image(index, dense::mirror(r)));
        }
    }
    counts.plus_mirror = with_mirror.group_count();
    counts.plus_reorientation = with_reorient.group_count();
    counts.plus_both = with_both.group_count();
    return counts;
}

std::string census_block(const CensusEntry& entry) {
    std::ostringstream out;
    out << "# genus: " << entry.genus << "\n";
    out << "# consistent: " << (entry.consistent ? "yes" : "no") << "\n";
    out << "# om: " << (entry.om ? "yes" : "no") << "\n";
    out << serialize_matrix(entry.form.to_matrix());
    return out.str();
}

}  // namespace pscirc
