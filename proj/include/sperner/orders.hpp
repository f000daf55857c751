#pragma once

#include <optional>

#include "sperner/group.hpp"
#include "sperner/poset.hpp"

namespace sperner {

enum class OrderKind { Prefix, Codim, Absolute };

OrderKind parse_order_kind(const std::string& s);
std::string order_kind_name(OrderKind k);

// Prefix order: u <= v iff l(u) + l(u^-1 v) = l(v).  Ranked by reflection
// length; covers are the pairs u <| ut with t a reflection raising the
// length by one.
RankedPoset build_prefix_order(const GroupSource& g);

// Codimension order: the full pairwise relation
// codim(u) + codim(u^-1 v) = codim(v), transitively reduced.  The result
// carries a rank function only when one exists.
RankedPoset build_codim_order(const GroupSource& g);

struct OrderDisagreement {
    int u = -1, v = -1;
    bool prefix_le = false, codim_le = false;
};

// true iff the two relations are identical as sets of pairs.
bool orders_agree(const GroupSource& g, OrderDisagreement* first_diff = nullptr);

// The common order when the two agree; throws DomainError otherwise.
RankedPoset build_absolute_order(const GroupSource& g);

RankedPoset build_order(const GroupSource& g, OrderKind kind);

// Reflection partition T_1 | ... | T_n of G(m,1,n) together with the factor
// tuple of every element.  blocks[j] lists the reflections of T_{j+1}
// (empty when jm - 1 = 0); factors[w][j] is an element index or -1 for id.
struct ClawLabeling {
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> factors;
};

// Unique peel-off factorization w = x_1 x_2 ... x_n with x_j in T_j or id;
// the number of non-identity factors equals the reflection length.
std::vector<GmpnElement> claw_decompose(const GmpnGroup& g, const GmpnElement& w);

// Builds the labeling and verifies the coarsening: factor tuples biject
// with the group, tuple rank equals reflection length, and every claw
// cover holds in the prefix order.  A verification failure raises
// InternalConsistencyError and must never happen.
ClawLabeling claw_embedding(const GmpnGroup& g);

// The coarsening itself as a poset on the group elements.
RankedPoset claw_product_poset(const GmpnGroup& g, const ClawLabeling& labeling);

// For G(2,2,n): a partition of the reflections into blocks of sizes
// 1,3,...,2n-3,n-1 that carries a claw-product coarsening of abs(W), or
// nullopt when none exists.
std::optional<std::vector<std::vector<int>>> claw_partition_search(const GmpnGroup& g);

}  // namespace sperner
