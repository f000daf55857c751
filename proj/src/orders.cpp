#include "sperner/orders.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "sperner/errors.hpp"

namespace sperner {

OrderKind parse_order_kind(const std::string& s) {
    std::string t;
    for (char c : s) t += char(std::tolower(c));
    if (t == "prefix" || t == "pre") return OrderKind::Prefix;
    if (t == "codim" || t == "co") return OrderKind::Codim;
    if (t == "abs" || t == "absolute") return OrderKind::Absolute;
    throw ParameterError("unknown order kind `" + s + "` (expected prefix|codim|abs)");
}

std::string order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Prefix: return "prefix";
        case OrderKind::Codim: return "codim";
        case OrderKind::Absolute: return "abs";
    }
    return "?";
}

RankedPoset build_prefix_order(const GroupSource& g) {
    int n = int(g.order());
    std::vector<int> len(n);
    for (int w = 0; w < n; ++w) len[w] = g.reflection_length(w);
    std::vector<std::string> labels(n);
    for (int w = 0; w < n; ++w) labels[w] = g.label(w);
    std::vector<std::pair<int, int>> covers;
    for (int u = 0; u < n; ++u)
        for (int t : g.reflections()) {
            int v = g.multiply(u, t);
            if (len[v] == len[u] + 1) covers.emplace_back(u, v);
        }
    return RankedPoset::from_ranked_covers(std::move(labels), std::move(covers), std::move(len));
}

RankedPoset build_codim_order(const GroupSource& g) {
    int n = int(g.order());
    std::vector<int> cod(n);
    for (int w = 0; w < n; ++w) cod[w] = g.codim(w);
    std::vector<std::string> labels(n);
    for (int w = 0; w < n; ++w) labels[w] = g.label(w);
    std::vector<std::pair<int, int>> relation;
    for (int u = 0; u < n; ++u) {
        int iu = g.inverse(u);
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (cod[u] + cod[g.multiply(iu, v)] == cod[v]) relation.emplace_back(u, v);
        }
    }
    return RankedPoset::from_covers(std::move(labels), std::move(relation));
}

bool orders_agree(const GroupSource& g, OrderDisagreement* first_diff) {
    int n = int(g.order());
    std::vector<int> len(n), cod(n);
    for (int w = 0; w < n; ++w) {
        len[w] = g.reflection_length(w);
        cod[w] = g.codim(w);
    }
    for (int u = 0; u < n; ++u) {
        int iu = g.inverse(u);
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            int w = g.multiply(iu, v);
            bool pre = len[u] + len[w] == len[v];
            bool co = cod[u] + cod[w] == cod[v];
            if (pre != co) {
                if (first_diff) *first_diff = {u, v, pre, co};
                return false;
            }
        }
    }
    return true;
}

RankedPoset build_absolute_order(const GroupSource& g) {
    OrderDisagreement diff;
    if (!orders_agree(g, &diff))
        throw DomainError("prefix and codimension orders differ on " + g.name() + ": pair (" +
                          g.label(diff.u) + ", " + g.label(diff.v) + ") has prefix<=" +
                          (diff.prefix_le ? "true" : "false") + " but codim<=" +
                          (diff.codim_le ? "true" : "false"));
    return build_prefix_order(g);
}

RankedPoset build_order(const GroupSource& g, OrderKind kind) {
    switch (kind) {
        case OrderKind::Prefix: return build_prefix_order(g);
        case OrderKind::Codim: return build_codim_order(g);
        case OrderKind::Absolute: return build_absolute_order(g);
    }
    throw ParameterError("unknown order kind");
}

std::vector<GmpnElement> claw_decompose(const GmpnGroup& g, const GmpnElement& w) {
    if (g.p() != 1)
        throw ParameterError("claw decomposition is defined for G(m,1,n), not " + std::to_string(g.m()) +
                             "," + std::to_string(g.p()) + "," + std::to_string(g.n()));
    int n = g.n(), m = g.m();
    g.index_of(w);  // membership check
    std::vector<GmpnElement> factors(n, gmpn_identity(n));
    GmpnElement cur = w;
    for (int pos = n - 1; pos >= 0; --pos) {
        if (cur.sigma[pos] == pos && cur.a[pos] == 0) continue;  // already fixes (.,pos)
        // j = sigma^-1(pos); the unique t in T_{pos+1} maps (c,j) to (c-atil,pos)
        int j = 0;
        while (cur.sigma[j] != pos) ++j;
        int atil = (m - cur.a[j]) % m;
        GmpnElement t = gmpn_identity(n);
        if (j != pos) {
            std::swap(t.sigma[j], t.sigma[pos]);
            t.a[j] = (m - atil) % m;
            t.a[pos] = atil;
        } else {
            t.a[pos] = (m - atil) % m;
        }
        factors[pos] = t;
        cur = gmpn_multiply(m, cur, gmpn_inverse(m, t));
        if (cur.sigma[pos] != pos || cur.a[pos] != 0)
            throw InternalConsistencyError("peel-off step failed to fix the last coordinate");
    }
    return factors;
}

namespace {

// T-block of a reflection of G(m,1,n): the largest moved 1-based index.
int claw_block_of(const GmpnElement& t) {
    int n = int(t.a.size());
    for (int k = n - 1; k >= 0; --k)
        if (t.sigma[k] != k || t.a[k] != 0) return k + 1;
    throw InternalConsistencyError("identity passed as a reflection");
}

}  // namespace

ClawLabeling claw_embedding(const GmpnGroup& g) {
    if (g.p() != 1) throw ParameterError("claw embedding is defined for G(m,1,n)");
    int n = g.n(), m = g.m();
    ClawLabeling lab;
    lab.blocks.assign(n, {});
    for (int t : g.reflections()) lab.blocks[claw_block_of(g.element(t)) - 1].push_back(t);
    for (int j = 1; j <= n; ++j)
        if (int(lab.blocks[j - 1].size()) != j * m - 1)
            throw InternalConsistencyError("|T_" + std::to_string(j) + "| = " +
                                           std::to_string(lab.blocks[j - 1].size()) + ", expected " +
                                           std::to_string(j * m - 1));
    long N = g.order();
    lab.factors.assign(N, {});
    std::set<std::vector<int>> distinct;
    const GmpnElement id = gmpn_identity(n);
    for (long w = 0; w < N; ++w) {
        auto factors = claw_decompose(g, g.element(int(w)));
        std::vector<int> tuple(n, -1);
        int nonid = 0;
        GmpnElement prod = id;
        for (int j = 0; j < n; ++j) {
            if (factors[j] == id) continue;
            int idx = g.index_of(factors[j]);
            if (claw_block_of(factors[j]) != j + 1)
                throw InternalConsistencyError("factor outside its claw block");
            tuple[j] = idx;
            ++nonid;
            prod = gmpn_multiply(m, prod, factors[j]);
        }
        if (g.index_of(prod) != int(w))
            throw InternalConsistencyError("claw factors do not multiply back to the element");
        if (nonid != g.reflection_length(int(w)))
            throw InternalConsistencyError("claw factor count differs from reflection length");
        distinct.insert(tuple);
        lab.factors[w] = std::move(tuple);
    }
    if (long(distinct.size()) != N)
        throw InternalConsistencyError("claw factor tuples are not distinct");
    // claw-product covers must hold in the prefix order (subword property)
    for (long w = 0; w < N; ++w) {
        int lw = g.reflection_length(int(w));
        for (int j = 0; j < n; ++j) {
            if (lab.factors[w][j] < 0) continue;
            GmpnElement sub = gmpn_identity(n);
            for (int k = 0; k < n; ++k)
                if (k != j && lab.factors[w][k] >= 0)
                    sub = gmpn_multiply(m, sub, g.element(lab.factors[w][k]));
            int u = g.index_of(sub);
            int diff = g.multiply(g.inverse(u), int(w));
            if (g.reflection_length(u) + g.reflection_length(diff) != lw)
                throw InternalConsistencyError("claw cover fails in the prefix order");
        }
    }
    return lab;
}

RankedPoset claw_product_poset(const GmpnGroup& g, const ClawLabeling& lab) {
    long N = g.order();
    int n = g.n();
    std::vector<std::string> labels(N);
    std::vector<int> ranks(N);
    // tuple -> element lookup through the peeled factors
    std::map<std::vector<int>, int> of_tuple;
    for (long w = 0; w < N; ++w) {
        labels[w] = g.label(int(w));
        ranks[w] = g.reflection_length(int(w));
        of_tuple[lab.factors[w]] = int(w);
    }
    std::vector<std::pair<int, int>> covers;
    for (long w = 0; w < N; ++w) {
        for (int j = 0; j < n; ++j) {
            if (lab.factors[w][j] < 0) continue;
            std::vector<int> sub = lab.factors[w];
            sub[j] = -1;
            covers.emplace_back(of_tuple.at(sub), int(w));
        }
    }
    return RankedPoset::from_ranked_covers(std::move(labels), std::move(covers), std::move(ranks));
}

namespace {

struct DnReflection {
    int idx;      // element index
    int i, j;     // phi(t) = {i,j}, 0-based, i < j
    bool dotted;  // a_i = a_j = 1
};

// Backtracking over the blocks, largest first.  Within a block the phi
// images must be distinct pairs that pairwise intersect; for n >= 4 the
// proof's bound |T_k| <= n-1 rules the large blocks out immediately.
struct PartitionSearch {
    int n;
    std::vector<DnReflection> refl;
    std::vector<int> sizes;        // required block sizes, by block id
    std::vector<int> order;        // block ids, largest size first
    std::vector<int> assign;       // reflection -> block id or -1
    std::vector<std::vector<int>> members;  // per block, reflection positions

    bool feasible_size(int s) const {
        // a pairwise-intersecting family of distinct pairs on [n] is a star
        // (size <= n-1) or a triangle (size 3)
        return s <= std::max(n - 1, 3);
    }

    bool block_ok(int b, int cand) const {
        const auto& r = refl[cand];
        for (int pos : members[b]) {
            const auto& s = refl[pos];
            if (s.i == r.i && s.j == r.j) {
                if (s.dotted == r.dotted) throw InternalConsistencyError("duplicate reflection");
                return false;  // phi not injective on the block
            }
            if (s.i != r.i && s.i != r.j && s.j != r.i && s.j != r.j) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> claw_partition_search(const GmpnGroup& g) {
    if (g.m() != 2 || g.p() != 2 || g.n() < 2)
        throw ParameterError("claw partition search is defined for G(2,2,n), n >= 2");
    int n = g.n();
    PartitionSearch ps;
    ps.n = n;
    for (int t : g.reflections()) {
        const GmpnElement& e = g.element(t);
        DnReflection r;
        r.idx = t;
        r.i = -1;
        for (int k = 0; k < n; ++k)
            if (e.sigma[k] != k) {
                if (r.i < 0)
                    r.i = k;
                else
                    r.j = k;
            }
        r.dotted = e.a[r.i] != 0;
        ps.refl.push_back(r);
    }
    ps.sizes.resize(n);
    for (int k = 1; k <= n - 1; ++k) ps.sizes[k - 1] = 2 * k - 1;
    ps.sizes[n - 1] = n - 1;
    ps.order.resize(n);
    for (int b = 0; b < n; ++b) ps.order[b] = b;
    std::sort(ps.order.begin(), ps.order.end(),
              [&](int a, int b) { return ps.sizes[a] > ps.sizes[b]; });
    for (int s : ps.sizes)
        if (!ps.feasible_size(s)) return std::nullopt;  // the n >= 4 pruning rule
    ps.assign.assign(ps.refl.size(), -1);
    ps.members.assign(n, {});

    // enumerate surviving candidates until one passes full verification
    std::function<bool(size_t, int)> fill_verified = [&](size_t oi, int from) -> bool {
        if (oi == ps.order.size()) {
            // full order-embedding verification: ascending-block products
            // biject with W and are reduced
            long N = g.order();
            std::vector<char> hit(N, 0);
            long count = 0;
            std::function<bool(int, int, int)> walk = [&](int block, int prod, int nonid) -> bool {
                if (block == n) {
                    if (hit[prod]) return false;
                    if (g.reflection_length(prod) != nonid) return false;
                    hit[prod] = 1;
                    ++count;
                    return true;
                }
                if (!walk(block + 1, prod, nonid)) return false;
                for (int pos : ps.members[block])
                    if (!walk(block + 1, g.multiply(prod, ps.refl[pos].idx), nonid + 1)) return false;
                return true;
            };
            return walk(0, g.identity_index(), 0) && count == N;
        }
        int b = ps.order[oi];
        int need = ps.sizes[b] - int(ps.members[b].size());
        if (need == 0) return fill_verified(oi + 1, 0);
        for (int cand = from; cand < int(ps.refl.size()); ++cand) {
            if (ps.assign[cand] != -1) continue;
            if (!ps.block_ok(b, cand)) continue;
            ps.assign[cand] = b;
            ps.members[b].push_back(cand);
            if (fill_verified(oi, cand + 1)) return true;
            ps.members[b].pop_back();
            ps.assign[cand] = -1;
        }
        return false;
    };
    if (!fill_verified(0, 0)) return std::nullopt;
    std::vector<std::vector<int>> blocks(n);
    for (int b = 0; b < n; ++b) {
        for (int pos : ps.members[b]) blocks[b].push_back(ps.refl[pos].idx);
        std::sort(blocks[b].begin(), blocks[b].end());
    }
    return blocks;
}

}  // namespace sperner
