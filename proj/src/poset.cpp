#include "sperner/poset.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <queue>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

// Topological order of a cover digraph; throws on cycles.
std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& up) {
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : up[v]) ++indeg[w];
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : up[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    if (int(order.size()) != n) throw StructuralError("cover relation contains a cycle");
    return order;
}

BitMatrix closure_of(int n, const std::vector<std::vector<int>>& up) {
    BitMatrix succ(n);
    std::vector<int> order = topo_order(n, up);
    // reverse topological: successors of v = union over covers
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        for (int w : up[v]) {
            succ.set(v, w);
            succ.or_row(v, w);
        }
    }
    return succ;
}

}  // namespace

void RankedPoset::build_adjacency() {
    int n = size();
    up_.assign(n, {});
    down_.assign(n, {});
    for (auto [lo, hi] : covers_) {
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());
    minimal_count_ = 0;
    for (int v = 0; v < n; ++v)
        if (down_[v].empty()) ++minimal_count_;
    // rank attempt: propagate from the unique minimal element
    ranks_.clear();
    conflict_.reset();
    max_rank_ = -1;
    by_rank_.clear();
    if (minimal_count_ != 1) {
        if (n == 0) minimal_count_ = 0;
        return;
    }
    int root = -1;
    for (int v = 0; v < n; ++v)
        if (down_[v].empty()) root = v;
    std::vector<int> rank(n, -1), parent(n, -1);
    rank[root] = 0;
    std::queue<int> q;
    q.push(root);
    auto path_to = [&](int v) {
        std::vector<int> path;
        for (int x = v; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    };
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : up_[v]) {
            if (rank[w] == -1) {
                rank[w] = rank[v] + 1;
                parent[w] = v;
                q.push(w);
            } else if (rank[w] != rank[v] + 1) {
                RankConflict c;
                c.element = w;
                std::vector<int> via = path_to(v);
                via.push_back(w);
                std::vector<int> direct = path_to(w);
                if (via.size() < direct.size()) {
                    c.path_short = via;
                    c.path_long = direct;
                } else {
                    c.path_short = direct;
                    c.path_long = via;
                }
                conflict_ = c;
                return;
            }
        }
    }
    ranks_ = rank;
    for (int v = 0; v < n; ++v) max_rank_ = std::max(max_rank_, ranks_[v]);
    by_rank_.assign(max_rank_ + 1, {});
    for (int v = 0; v < n; ++v) by_rank_[ranks_[v]].push_back(v);
}

RankedPoset RankedPoset::from_covers(std::vector<std::string> labels,
                                     std::vector<std::pair<int, int>> covers) {
    int n = int(labels.size());
    std::vector<std::vector<int>> up(n);
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n)
            throw StructuralError("cover index out of range");
        if (lo == hi) throw StructuralError("cover relation contains a loop");
        up[lo].push_back(hi);
    }
    BitMatrix succ = closure_of(n, up);
    BitMatrix pred(n);
    for (int v = 0; v < n; ++v)
        succ.for_each_in_row(v, [&](int w) { pred.set(w, v); });
    // covers of the closure: (u,v) related with nothing strictly between
    std::vector<std::pair<int, int>> reduced;
    for (int u = 0; u < n; ++u)
        succ.for_each_in_row(u, [&](int v) {
            if (!succ.rows_intersect(u, pred, v)) reduced.emplace_back(u, v);
        });
    std::sort(reduced.begin(), reduced.end());
    RankedPoset p;
    p.labels_ = std::move(labels);
    p.covers_ = std::move(reduced);
    p.build_adjacency();
    return p;
}

RankedPoset RankedPoset::from_ranked_covers(std::vector<std::string> labels,
                                            std::vector<std::pair<int, int>> covers,
                                            std::vector<int> ranks) {
    RankedPoset p;
    for (auto [lo, hi] : covers)
        if (ranks[hi] != ranks[lo] + 1)
            throw StructuralError("layered constructor fed a non-layer cover");
    p.labels_ = std::move(labels);
    p.covers_ = std::move(covers);
    std::sort(p.covers_.begin(), p.covers_.end());
    p.build_adjacency();
    if (p.ranks_ != ranks) {
        // propagation must reproduce the supplied ranks exactly
        throw StructuralError("supplied rank function disagrees with cover propagation");
    }
    return p;
}

const std::vector<std::vector<int>>& RankedPoset::rank_decomposition() const {
    if (!has_rank_function()) throw StateError("poset has no rank function");
    return by_rank_;
}

const BitMatrix& RankedPoset::closure() const {
    auto cached = std::atomic_load(&closure_);
    if (!cached) {
        auto built = std::make_shared<const BitMatrix>(closure_of(size(), up_));
        std::atomic_compare_exchange_strong(&closure_, &cached, std::shared_ptr<const BitMatrix>(built));
        cached = std::atomic_load(&closure_);
    }
    return *cached;
}

std::variant<std::vector<int>, RankConflict> is_ranked(const RankedPoset& p) {
    if (p.size() == 0) throw StructuralError("empty poset");
    if (p.minimal_element_count() != 1)
        throw StructuralError("poset has " + std::to_string(p.minimal_element_count()) +
                              " minimal elements; rank propagation needs exactly one");
    if (p.has_rank_function()) return p.ranks();
    return *p.rank_conflict();
}

RankPolynomial rank_polynomial(const RankedPoset& p) {
    if (!p.has_rank_function()) throw StateError("rank polynomial of an unranked poset");
    RankPolynomial poly(p.max_rank() + 1, Int(0));
    for (int v = 0; v < p.size(); ++v) poly[p.rank_of(v)] += 1;
    return poly;
}

std::pair<RankedPoset, WeightFunction> poset_product(const RankedPoset& p, const WeightFunction& wp,
                                                     const RankedPoset& q, const WeightFunction& wq,
                                                     long element_budget) {
    if (!p.has_rank_function() || !q.has_rank_function())
        throw StateError("product requires ranked factors");
    long np = p.size(), nq = q.size();
    if (np * nq > element_budget)
        throw ResourceError("product would have " + std::to_string(np * nq) +
                            " elements, over the budget of " + std::to_string(element_budget));
    int n = int(np * nq);
    auto id = [&](int a, int b) { return a * int(nq) + b; };
    std::vector<std::string> labels(n);
    std::vector<int> ranks(n);
    WeightFunction w(n);
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b) {
            labels[id(a, b)] = "(" + p.labels()[a] + "," + q.labels()[b] + ")";
            ranks[id(a, b)] = p.rank_of(a) + q.rank_of(b);
            w[id(a, b)] = wp[a] * wq[b];
        }
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b) {
            for (int a2 : p.up()[a]) covers.emplace_back(id(a, b), id(a2, b));
            for (int b2 : q.up()[b]) covers.emplace_back(id(a, b), id(a, b2));
        }
    return {RankedPoset::from_ranked_covers(std::move(labels), std::move(covers), std::move(ranks)),
            std::move(w)};
}

std::pair<RankedPoset, WeightFunction> poset_quotient(const RankedPoset& p,
                                                      const std::vector<int>& orbit_of) {
    if (!p.has_rank_function()) throw StateError("quotient requires a ranked poset");
    if (int(orbit_of.size()) != p.size()) throw ParameterError("partition size mismatch");
    int k = 0;
    for (int o : orbit_of) k = std::max(k, o + 1);
    std::vector<int> orank(k, -1), osize(k, 0), orep(k, -1);
    for (int v = 0; v < p.size(); ++v) {
        int o = orbit_of[v];
        if (o < 0) throw ParameterError("negative orbit id");
        if (orank[o] == -1) {
            orank[o] = p.rank_of(v);
            orep[o] = v;
        } else if (orank[o] != p.rank_of(v)) {
            throw NotAutomorphismActionError("orbit spans ranks " + std::to_string(orank[o]) +
                                             " and " + std::to_string(p.rank_of(v)));
        }
        ++osize[o];
    }
    for (int o = 0; o < k; ++o)
        if (osize[o] == 0) throw ParameterError("empty orbit id " + std::to_string(o));
    std::vector<std::pair<int, int>> covers;
    for (auto [lo, hi] : p.covers()) covers.emplace_back(orbit_of[lo], orbit_of[hi]);
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    std::vector<std::string> labels(k);
    WeightFunction w(k);
    for (int o = 0; o < k; ++o) {
        labels[o] = p.labels()[orep[o]];
        w[o] = Rat(osize[o]);
    }
    return {RankedPoset::from_ranked_covers(std::move(labels), std::move(covers), std::move(orank)),
            std::move(w)};
}

RankedPoset claw(int n) {
    if (n < 2) throw ParameterError("claw poset needs n >= 2");
    std::vector<std::string> labels(n);
    std::vector<int> ranks(n, 1);
    ranks[0] = 0;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        labels[i] = "x" + std::to_string(i);
        if (i > 0) covers.emplace_back(0, i);
    }
    return RankedPoset::from_ranked_covers(std::move(labels), std::move(covers), std::move(ranks));
}

WeightFunction unit_weights(int n) { return WeightFunction(n, Rat(1)); }

Rat weight_of(const WeightFunction& w, const std::vector<int>& elems) {
    Rat s(0);
    for (int e : elems) s += w[e];
    return s;
}

bool is_log_concave(const RankedPoset& p, const WeightFunction& w) {
    if (!p.has_rank_function()) throw StateError("log-concavity requires a rank function");
    const auto& ranks = p.rank_decomposition();
    std::vector<Rat> nu(ranks.size(), Rat(0));
    for (size_t i = 0; i < ranks.size(); ++i) nu[i] = weight_of(w, ranks[i]);
    for (size_t i = 1; i + 1 < ranks.size(); ++i)
        if (nu[i] * nu[i] < nu[i - 1] * nu[i + 1]) return false;
    return true;
}

}  // namespace sperner
