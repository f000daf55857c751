#pragma once

#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "sperner/poset.hpp"

namespace sperner {

// Exact flow values for one bipartite layer (P_i, P_{i+1}); edges carry
// poset element ids.  Zero-valued edges are omitted.
struct LayerFlow {
    int rank = 0;
    std::vector<std::tuple<int, int, Rat>> edges;
};

// Per-layer certificate: for every x in P_i the outgoing values sum to
// nu(x)/nu(P_i), for every y in P_{i+1} the incoming values sum to
// nu(y)/nu(P_{i+1}); all values nonnegative exact rationals.
struct FlowCertificate {
    std::vector<LayerFlow> layers;
};

// Hall violation: nu(S)/nu(A) > nu(N(S))/nu(B), exact.
struct CutWitness {
    std::vector<int> subset;
    std::vector<int> neighborhood;
    Rat lhs, rhs;
};

struct LayerFailure {
    int rank = 0;
    CutWitness cut;
};

// Decide feasibility of one layer exactly: scale both sides to a common
// integer grid, run integral max-flow, read the certificate or the
// min-cut off the result.
std::variant<LayerFlow, CutWitness> layer_flow(const std::vector<int>& a_side,
                                               const std::vector<int>& b_side,
                                               const std::vector<std::pair<int, int>>& edges,
                                               const WeightFunction& nu);

// Normalized flow on every consecutive rank pair, or the first failing
// layer with its cut witness.
std::variant<FlowCertificate, LayerFailure> normalized_flow(const RankedPoset& p,
                                                            const WeightFunction& nu);

// Re-evaluates both equation families from scratch; independent of how
// the certificate came to be.
bool verify_flow(const RankedPoset& p, const WeightFunction& nu, const FlowCertificate& cert);

// Distribute a verified quotient flow uniformly over the Hasse edges
// between fibers.  The result is re-verified against nu = 1 before it is
// returned; biregularity failures raise NotAutomorphismActionError.
FlowCertificate lift_flow_from_quotient(const RankedPoset& p, const std::vector<int>& orbit_of,
                                        const FlowCertificate& quotient_cert);

}  // namespace sperner
