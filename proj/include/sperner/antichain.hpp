#pragma once

#include "sperner/flow.hpp"
#include "sperner/poset.hpp"

namespace sperner {

// Pairwise incomparable elements, ascending.
struct AntichainWitness {
    std::vector<int> elements;
};

// Maximum antichain by Dilworth duality: minimum chain cover of the
// comparability DAG via bipartite matching, antichain read off the
// minimum vertex cover.
AntichainWitness max_antichain(const RankedPoset& p);

// Maximum size of a union of k antichains (equivalently, of a subset with
// no chain of k+1 elements).  Brute force over subsets; refuses posets
// larger than the budget.
long k_family_size(const RankedPoset& p, int k, int brute_force_budget = 20);

enum class SpernerVerdict { Positive, Negative, Inconclusive };

// POSITIVE: a normalized flow with nu = 1 exists, so the poset is strongly
// Sperner.  NEGATIVE: an antichain beats every rank size.  INCONCLUSIVE:
// neither; flow nonexistence does not refute the Sperner property.
struct SpernerReport {
    SpernerVerdict verdict = SpernerVerdict::Inconclusive;
    std::optional<FlowCertificate> certificate;
    std::optional<AntichainWitness> antichain;
    std::optional<LayerFailure> failure;
    // exact comparison per k when |P| is small enough to brute-force:
    // (k, max k-family, sum of the k largest rank sizes)
    std::vector<std::tuple<int, long, long>> k_family_table;
};

SpernerReport sperner_report(const RankedPoset& p);

std::string verdict_name(SpernerVerdict v);

}  // namespace sperner
