#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sperner/bitmat.hpp"
#include "sperner/poly.hpp"
#include "sperner/rational.hpp"

namespace sperner {

// Witness that no rank function exists: one element reachable from the
// minimum by two cover paths of different lengths, both paths included.
struct RankConflict {
    int element = -1;
    std::vector<int> path_short;  // element sequence starting at the minimum
    std::vector<int> path_long;
};

// Nonnegative rational weight per element.
using WeightFunction = std::vector<Rat>;

// Finite poset stored as its Hasse diagram.  Covers are kept transitively
// irredundant; element labels stay out of the hot loops.
class RankedPoset {
public:
    RankedPoset() = default;

    // Generic path: cycle check, transitive reduction of the input
    // relation, rank attempt.  Throws StructuralError on a cycle.
    static RankedPoset from_covers(std::vector<std::string> labels,
                                   std::vector<std::pair<int, int>> covers);

    // Trusted path for layered constructions: covers connect consecutive
    // ranks only, hence are already irredundant.  Validated by assertion.
    static RankedPoset from_ranked_covers(std::vector<std::string> labels,
                                          std::vector<std::pair<int, int>> covers,
                                          std::vector<int> ranks);

    int size() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<std::vector<int>>& up() const { return up_; }
    const std::vector<std::vector<int>>& down() const { return down_; }

    bool has_rank_function() const { return !ranks_.empty(); }
    const std::vector<int>& ranks() const { return ranks_; }
    int rank_of(int v) const { return ranks_[v]; }
    int max_rank() const { return max_rank_; }
    const std::optional<RankConflict>& rank_conflict() const { return conflict_; }
    int minimal_element_count() const { return minimal_count_; }

    // Elements per rank, only when ranked.
    const std::vector<std::vector<int>>& rank_decomposition() const;

    // Strict order relation as a bit matrix (transitive closure of the
    // covers), built on first use and cached.
    const BitMatrix& closure() const;

    bool less(int u, int v) const { return closure().get(u, v); }
    bool comparable(int u, int v) const { return u == v || less(u, v) || less(v, u); }

private:
    void build_adjacency();

    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> ranks_;
    int max_rank_ = -1;
    int minimal_count_ = 0;
    std::optional<RankConflict> conflict_;
    std::vector<std::vector<int>> by_rank_;
    mutable std::shared_ptr<const BitMatrix> closure_;
};

// Rank function, or the conflict witness.  Throws StructuralError when the
// poset does not have a unique minimal element.
std::variant<std::vector<int>, RankConflict> is_ranked(const RankedPoset& p);

// Exact rank sizes; throws StateError when unranked.
RankPolynomial rank_polynomial(const RankedPoset& p);

// Cartesian product with product weights; refuses results larger than the
// element budget.
std::pair<RankedPoset, WeightFunction> poset_product(const RankedPoset& p, const WeightFunction& wp,
                                                     const RankedPoset& q, const WeightFunction& wq,
                                                     long element_budget = 10000000L);

// Quotient by an orbit partition (orbit id per element).  Orbits must be
// rank-constant; weights of the quotient are the orbit sizes.
std::pair<RankedPoset, WeightFunction> poset_quotient(const RankedPoset& p,
                                                      const std::vector<int>& orbit_of);

// Claw poset C_n: one bottom element under an antichain of n-1 elements.
RankedPoset claw(int n);

WeightFunction unit_weights(int n);

// nu of a set of elements.
Rat weight_of(const WeightFunction& w, const std::vector<int>& elems);

// nu(P_i)^2 >= nu(P_{i-1}) * nu(P_{i+1}) for all i, exact comparison.
bool is_log_concave(const RankedPoset& p, const WeightFunction& w);

}  // namespace sperner
