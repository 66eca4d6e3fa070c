#ifndef PSCIRC_ENUMERATE_HPP
#define PSCIRC_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "pscirc/analysis.hpp"

namespace pscirc {

enum class CensusFilter { all, consistent, genus0, om };

const char* to_string(CensusFilter f);
CensusFilter census_filter_from_string(const std::string& name);

struct CensusEntry {
    CanonicalForm form;
    int n = 0;
    int genus = 0;
    bool consistent = false;
    bool om = false;
};

struct EnumerateOptions {
    /// n = 5 exhaustive enumeration is combinatorially enormous; callers must
    /// opt in explicitly.
    bool allow_long_running = false;
    /// Worker count; 0 = PSCIRC_SHARDS env var, else hardware concurrency.
    int workers = 0;
    /// Testing knobs: disable the partial-consistency prune, or restrict the
    /// search to a single row-1 candidate (-1 = no restriction).
    bool use_consistency_pruning = true;
    int row1_restrict = -1;
};

/// Streams every isomorphism class (canonical-form representative) of valid
/// n-matrices passing the filter, in ascending canonical order. The callback
/// runs on the calling thread. 2 <= n <= 4, or n = 5 with allow_long_running.
void enumerate_scan(int n, CensusFilter filter, const EnumerateOptions& opts,
                    const std::function<void(const CensusEntry&)>& emit);

std::vector<CensusEntry> enumerate_census(int n, CensusFilter filter,
                                          const EnumerateOptions& opts = {});

/// Partition of the classes under the 2^n reorientation maps composed with
/// canonicalization. Groups are index sets into `entries`, each sorted, and
/// ordered by their smallest member. All entries must share n, and the list
/// must be closed under reorientation (any filtered census is).
std::vector<std::vector<int>> count_reorientation_orbits(const std::vector<CensusEntry>& entries);

/// Class counts under the four candidate equivalences.
struct VariantCounts {
    long long relabel_rotation = 0;   // what canonical_form quotients by
    long long plus_mirror = 0;        // + mirror image
    long long plus_reorientation = 0; // + curve reorientations
    long long plus_both = 0;
};

VariantCounts equivalence_variant_counts(const std::vector<CensusEntry>& entries);

/// Census text output: one ".psm" block per class, preceded by
/// `# genus:` / `# consistent:` / `# om:` header comments.
std::string census_block(const CensusEntry& entry);

}  // namespace pscirc

#endif
