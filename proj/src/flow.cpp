#include "sperner/flow.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

// Dinic over exact integer capacities.  Adjacency kept in insertion order
// and augmentation scans lowest index first, so results are deterministic.
class Dinic {
public:
    explicit Dinic(int n) : adj_(n), level_(n), ptr_(n) {}

    int add_edge(int a, int b, Int cap) {
        int id = int(edges_.size());
        edges_.push_back({b, std::move(cap)});
        adj_[a].push_back(id);
        edges_.push_back({a, Int(0)});
        adj_[b].push_back(id + 1);
        return id;
    }

    const Int& residual(int edge_id) const { return edges_[edge_id].cap; }
    Int flow_through(int edge_id, const Int& original) const { return original - edges_[edge_id].cap; }

    Int max_flow(int s, int t) {
        Int total(0);
        while (bfs(s, t)) {
            std::fill(ptr_.begin(), ptr_.end(), 0);
            while (true) {
                Int pushed = dfs(s, t, Int(-1));
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    // vertices reachable from s in the residual graph
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : adj_[v]) {
                const Edge& e = edges_[id];
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    stack.push_back(e.to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        Int cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        level_[s] = 0;
        std::vector<int> q{s};
        for (size_t head = 0; head < q.size(); ++head) {
            int v = q[head];
            for (int id : adj_[v]) {
                const Edge& e = edges_[id];
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    q.push_back(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    Int dfs(int v, int t, Int pushed) {
        if (v == t) return pushed;
        for (int& i = ptr_[v]; i < int(adj_[v].size()); ++i) {
            int id = adj_[v][i];
            Edge& e = edges_[id];
            if (e.cap == 0 || level_[e.to] != level_[v] + 1) continue;
            Int take = (pushed < 0 || e.cap < pushed) ? e.cap : pushed;
            Int got = dfs(e.to, t, take);
            if (got > 0) {
                e.cap -= got;
                edges_[id ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> ptr_;
};

}  // namespace

std::variant<LayerFlow, CutWitness> layer_flow(const std::vector<int>& a_side,
                                               const std::vector<int>& b_side,
                                               const std::vector<std::pair<int, int>>& edges,
                                               const WeightFunction& nu) {
    if (a_side.empty() || b_side.empty())
        throw ParameterError("degenerate layer: one side is empty");
    Rat nu_a = weight_of(nu, a_side), nu_b = weight_of(nu, b_side);
    if (nu_a == 0 || nu_b == 0)
        throw ParameterError("degenerate layer: a side has total weight zero");

    std::map<int, int> a_pos, b_pos;
    for (size_t i = 0; i < a_side.size(); ++i) a_pos[a_side[i]] = int(i);
    for (size_t i = 0; i < b_side.size(); ++i) b_pos[b_side[i]] = int(i);

    // scale supplies nu(a)/nu(A) and demands nu(b)/nu(B) to one integer grid
    std::vector<Rat> supply, demand;
    Int scale(1);
    for (int a : a_side) {
        supply.push_back(nu[a] / nu_a);
        scale = int_lcm(scale, rat_den(supply.back()));
    }
    for (int b : b_side) {
        demand.push_back(nu[b] / nu_b);
        scale = int_lcm(scale, rat_den(demand.back()));
    }

    int na = int(a_side.size()), nb = int(b_side.size());
    int source = 0, sink = na + nb + 1;
    Dinic dinic(na + nb + 2);
    for (int i = 0; i < na; ++i)
        dinic.add_edge(source, 1 + i, rat_num(supply[i]) * (scale / rat_den(supply[i])));
    std::vector<int> edge_ids;
    for (auto [x, y] : edges) {
        auto ia = a_pos.find(x);
        auto ib = b_pos.find(y);
        if (ia == a_pos.end() || ib == b_pos.end())
            throw ParameterError("layer edge endpoint outside the layer");
        edge_ids.push_back(dinic.add_edge(1 + ia->second, 1 + na + ib->second, scale));
    }
    for (int j = 0; j < nb; ++j)
        dinic.add_edge(1 + na + j, sink, rat_num(demand[j]) * (scale / rat_den(demand[j])));

    Int flow = dinic.max_flow(source, sink);
    if (flow == scale) {
        LayerFlow out;
        for (size_t e = 0; e < edges.size(); ++e) {
            Int f = dinic.flow_through(edge_ids[e], scale);
            if (f != 0) out.edges.emplace_back(edges[e].first, edges[e].second, make_rat(f, scale));
        }
        return out;
    }
    // min cut: S = reachable A-vertices; with unsaturated middle edges the
    // reachable B-vertices are exactly the neighborhood of S
    std::vector<char> seen = dinic.reachable(source);
    CutWitness cut;
    for (int i = 0; i < na; ++i)
        if (seen[1 + i]) cut.subset.push_back(a_side[i]);
    for (int j = 0; j < nb; ++j)
        if (seen[1 + na + j]) cut.neighborhood.push_back(b_side[j]);
    cut.lhs = weight_of(nu, cut.subset) / nu_a;
    cut.rhs = weight_of(nu, cut.neighborhood) / nu_b;
    if (!(cut.lhs > cut.rhs))
        throw InternalConsistencyError("min cut does not witness a Hall violation");
    return cut;
}

namespace {

// covers between P_i and P_{i+1}, in stored cover order
std::vector<std::vector<std::pair<int, int>>> covers_by_rank(const RankedPoset& p) {
    std::vector<std::vector<std::pair<int, int>>> layers(std::max(p.max_rank(), 0));
    for (auto [lo, hi] : p.covers()) layers[p.rank_of(lo)].emplace_back(lo, hi);
    return layers;
}

}  // namespace

std::variant<FlowCertificate, LayerFailure> normalized_flow(const RankedPoset& p,
                                                            const WeightFunction& nu) {
    if (!p.has_rank_function()) throw StateError("normalized flow needs a ranked poset");
    const auto& decomp = p.rank_decomposition();
    auto layers = covers_by_rank(p);
    FlowCertificate cert;
    for (int i = 0; i + 1 <= p.max_rank(); ++i) {
        auto res = layer_flow(decomp[i], decomp[i + 1], layers[i], nu);
        if (std::holds_alternative<CutWitness>(res))
            return LayerFailure{i, std::get<CutWitness>(std::move(res))};
        LayerFlow lf = std::get<LayerFlow>(std::move(res));
        lf.rank = i;
        cert.layers.push_back(std::move(lf));
    }
    return cert;
}

bool verify_flow(const RankedPoset& p, const WeightFunction& nu, const FlowCertificate& cert) {
    if (!p.has_rank_function()) return false;
    if (p.max_rank() == 0)
        return std::all_of(cert.layers.begin(), cert.layers.end(),
                           [](const LayerFlow& lf) { return lf.edges.empty(); });
    // edge values per layer; reject duplicates, non-cover edges, negatives
    std::vector<std::map<std::pair<int, int>, Rat>> values(p.max_rank());
    std::vector<char> layer_seen(p.max_rank(), 0);
    std::set<std::pair<int, int>> hasse(p.covers().begin(), p.covers().end());
    for (const LayerFlow& lf : cert.layers) {
        if (lf.rank < 0 || lf.rank >= p.max_rank()) return false;
        if (layer_seen[lf.rank]) return false;
        layer_seen[lf.rank] = 1;
        for (const auto& [x, y, v] : lf.edges) {
            if (x < 0 || y < 0 || x >= p.size() || y >= p.size()) return false;
            if (p.rank_of(x) != lf.rank || p.rank_of(y) != lf.rank + 1) return false;
            if (!hasse.count({x, y})) return false;
            if (v < 0) return false;
            if (!values[lf.rank].emplace(std::make_pair(x, y), v).second) return false;
        }
    }
    const auto& decomp = p.rank_decomposition();
    for (int i = 0; i < p.max_rank(); ++i) {
        Rat nu_a = weight_of(nu, decomp[i]), nu_b = weight_of(nu, decomp[i + 1]);
        if (nu_a == 0 || nu_b == 0) return false;
        std::map<int, Rat> out_sum, in_sum;
        for (const auto& [edge, v] : values[i]) {
            out_sum[edge.first] += v;
            in_sum[edge.second] += v;
        }
        for (int x : decomp[i])
            if (out_sum[x] != nu[x] / nu_a) return false;
        for (int y : decomp[i + 1])
            if (in_sum[y] != nu[y] / nu_b) return false;
    }
    return true;
}

FlowCertificate lift_flow_from_quotient(const RankedPoset& p, const std::vector<int>& orbit_of,
                                        const FlowCertificate& quotient_cert) {
    auto [q, wq] = poset_quotient(p, orbit_of);
    if (!verify_flow(q, wq, quotient_cert))
        throw DomainError("quotient certificate does not verify; refusing to lift");

    // fiber edge lists and biregularity for every quotient cover pair
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> fiber_edges;
    for (auto [lo, hi] : p.covers())
        fiber_edges[{orbit_of[lo], orbit_of[hi]}].emplace_back(lo, hi);
    std::vector<long> orbit_size(q.size(), 0);
    for (int v = 0; v < p.size(); ++v) ++orbit_size[orbit_of[v]];
    for (const auto& [pair, list] : fiber_edges) {
        auto [o, o2] = pair;
        std::map<int, long> updeg, downdeg;
        for (auto [x, y] : list) {
            ++updeg[x];
            ++downdeg[y];
        }
        if (long(updeg.size()) != orbit_size[o] || long(downdeg.size()) != orbit_size[o2])
            throw NotAutomorphismActionError("fiber bipartite graph is not biregular (isolated vertex)");
        long du = updeg.begin()->second, dd = downdeg.begin()->second;
        for (const auto& [x, d] : updeg)
            if (d != du) throw NotAutomorphismActionError("fiber bipartite graph is not up-biregular");
        for (const auto& [y, d] : downdeg)
            if (d != dd) throw NotAutomorphismActionError("fiber bipartite graph is not down-biregular");
    }

    // distribute each quotient edge value uniformly over its fiber edges
    FlowCertificate lifted;
    lifted.layers.assign(std::max(p.max_rank(), 0), {});
    for (int i = 0; i < p.max_rank(); ++i) lifted.layers[i].rank = i;
    for (const LayerFlow& lf : quotient_cert.layers) {
        for (const auto& [o, o2, val] : lf.edges) {
            if (val == 0) continue;
            auto it = fiber_edges.find({o, o2});
            if (it == fiber_edges.end())
                throw InternalConsistencyError("quotient certificate edge has no fiber edges");
            Rat each = val / Rat(long(it->second.size()));
            for (auto [x, y] : it->second)
                lifted.layers[p.rank_of(x)].edges.emplace_back(x, y, each);
        }
    }
    for (auto& layer : lifted.layers)
        std::sort(layer.edges.begin(), layer.edges.end(),
                  [](const auto& a, const auto& b) {
                      return std::make_pair(std::get<0>(a), std::get<1>(a)) <
                             std::make_pair(std::get<0>(b), std::get<1>(b));
                  });
    if (!verify_flow(p, unit_weights(p.size()), lifted))
        throw InternalConsistencyError("lifted certificate failed verification");
    return lifted;
}

}  // namespace sperner
