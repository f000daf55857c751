#include "sperner/antichain.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

// Hopcroft-Karp maximum matching; deterministic with ordered adjacency.
class HopcroftKarp {
public:
    HopcroftKarp(int n_left, int n_right)
        : nl_(n_left), adj_(n_left), match_l_(n_left, -1), match_r_(n_right, -1) {}

    void add_edge(int l, int r) { adj_[l].push_back(r); }

    int solve() {
        int matching = 0;
        while (bfs()) {
            for (int l = 0; l < nl_; ++l)
                if (match_l_[l] < 0 && dfs(l)) ++matching;
        }
        return matching;
    }

    const std::vector<int>& match_left() const { return match_l_; }
    const std::vector<int>& match_right() const { return match_r_; }

private:
    bool bfs() {
        std::queue<int> q;
        dist_.assign(nl_, -1);
        for (int l = 0; l < nl_; ++l)
            if (match_l_[l] < 0) {
                dist_[l] = 0;
                q.push(l);
            }
        bool found = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[l]) {
                int l2 = match_r_[r];
                if (l2 < 0) {
                    found = true;
                } else if (dist_[l2] < 0) {
                    dist_[l2] = dist_[l] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    }

    bool dfs(int l) {
        for (int r : adj_[l]) {
            int l2 = match_r_[r];
            if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        dist_[l] = -1;
        return false;
    }

    int nl_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_, dist_;
};

}  // namespace

AntichainWitness max_antichain(const RankedPoset& p) {
    int n = p.size();
    const BitMatrix& lt = p.closure();
    HopcroftKarp hk(n, n);
    for (int u = 0; u < n; ++u) lt.for_each_in_row(u, [&](int v) { hk.add_edge(u, v); });
    int matching = hk.solve();

    // Koenig: Z = unmatched left vertices plus everything reachable by
    // alternating paths; the antichain is {v : v_L in Z, v_R not in Z}.
    std::vector<char> zl(n, 0), zr(n, 0);
    std::queue<int> q;
    for (int l = 0; l < n; ++l)
        if (hk.match_left()[l] < 0) {
            zl[l] = 1;
            q.push(l);
        }
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        lt.for_each_in_row(l, [&](int r) {
            if (zr[r]) return;
            zr[r] = 1;
            int l2 = hk.match_right()[r];
            if (l2 >= 0 && !zl[l2]) {
                zl[l2] = 1;
                q.push(l2);
            }
        });
    }
    AntichainWitness w;
    for (int v = 0; v < n; ++v)
        if (zl[v] && !zr[v]) w.elements.push_back(v);
    if (int(w.elements.size()) != n - matching)
        throw InternalConsistencyError("antichain size disagrees with the matching bound");
    for (size_t i = 0; i < w.elements.size(); ++i)
        for (size_t j = i + 1; j < w.elements.size(); ++j)
            if (p.comparable(w.elements[i], w.elements[j]))
                throw InternalConsistencyError("antichain witness contains a comparable pair");
    return w;
}

long k_family_size(const RankedPoset& p, int k, int brute_force_budget) {
    int n = p.size();
    if (n > brute_force_budget)
        throw ResourceError("k-family brute force limited to " + std::to_string(brute_force_budget) +
                            " elements, poset has " + std::to_string(n));
    if (k <= 0) return 0;
    const BitMatrix& lt = p.closure();
    // topological order (by number of strict predecessors, which is a
    // linear extension since u < v implies pred(u) subset-of pred(v))
    std::vector<uint32_t> pred(n, 0);
    for (int u = 0; u < n; ++u) lt.for_each_in_row(u, [&](int v) { pred[v] |= uint32_t(1) << u; });
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = __builtin_popcount(pred[a]), cb = __builtin_popcount(pred[b]);
        return ca != cb ? ca < cb : a < b;
    });
    long best = 0;
    std::vector<int> height(n, 0);
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        // longest chain within s, elements scanned in topological order
        bool ok = true;
        for (int v : order) {
            if (!(s >> v & 1)) continue;
            int h = 1;
            uint32_t ps = pred[v] & s;
            while (ps) {
                int u = __builtin_ctz(ps);
                ps &= ps - 1;
                h = std::max(h, height[u] + 1);
            }
            height[v] = h;
            if (h > k) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

SpernerReport sperner_report(const RankedPoset& p) {
    if (!p.has_rank_function()) throw StateError("Sperner report needs a ranked poset");
    SpernerReport report;
    WeightFunction unit = unit_weights(p.size());
    auto flow = normalized_flow(p, unit);
    if (std::holds_alternative<FlowCertificate>(flow)) {
        report.verdict = SpernerVerdict::Positive;
        report.certificate = std::get<FlowCertificate>(std::move(flow));
        return report;
    }
    long largest_rank = 0;
    for (const auto& level : p.rank_decomposition())
        largest_rank = std::max(largest_rank, long(level.size()));
    AntichainWitness anti = max_antichain(p);
    if (long(anti.elements.size()) > largest_rank) {
        report.verdict = SpernerVerdict::Negative;
        report.antichain = std::move(anti);
        return report;
    }
    report.verdict = SpernerVerdict::Inconclusive;
    report.failure = std::get<LayerFailure>(std::move(flow));
    if (p.size() <= 20) {
        std::vector<long> sizes;
        for (const auto& level : p.rank_decomposition()) sizes.push_back(long(level.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        long acc = 0;
        for (int k = 1; k <= p.max_rank() + 1; ++k) {
            acc += sizes[k - 1];
            report.k_family_table.emplace_back(k, k_family_size(p, k), acc);
        }
    }
    return report;
}

std::string verdict_name(SpernerVerdict v) {
    switch (v) {
        case SpernerVerdict::Positive: return "POSITIVE";
        case SpernerVerdict::Negative: return "NEGATIVE";
        case SpernerVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

}  // namespace sperner
