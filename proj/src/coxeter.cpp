#include "sperner/coxeter.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

using Vec = std::vector<QuadraticNumber>;

struct TypeData {
    int rank;
    long order;
    int num_roots;
    std::vector<std::vector<QuadraticNumber>> gram;
};

QuadraticNumber cos_pi_5_twice()  // 2*cos(pi/5) = (1+sqrt5)/2
{
    return {make_rat(1, 2), make_rat(1, 2)};
}

TypeData type_data(CoxeterType t) {
    auto q = [](long num, long den) { return QuadraticNumber(make_rat(num, den)); };
    switch (t) {
        case CoxeterType::H3: {
            // diagram 5-3, unit simple roots, B(a_i,a_j) = -cos(pi/m_ij)
            QuadraticNumber c5 = cos_pi_5_twice() / QuadraticNumber(2);
            std::vector<Vec> g = {{q(1, 1), -c5, q(0, 1)},
                                  {-c5, q(1, 1), q(-1, 2)},
                                  {q(0, 1), q(-1, 2), q(1, 1)}};
            return {3, 120, 30, g};
        }
        case CoxeterType::H4: {
            QuadraticNumber c5 = cos_pi_5_twice() / QuadraticNumber(2);
            std::vector<Vec> g = {{q(1, 1), -c5, q(0, 1), q(0, 1)},
                                  {-c5, q(1, 1), q(-1, 2), q(0, 1)},
                                  {q(0, 1), q(-1, 2), q(1, 1), q(-1, 2)},
                                  {q(0, 1), q(0, 1), q(-1, 2), q(1, 1)}};
            return {4, 14400, 120, g};
        }
        case CoxeterType::F4: {
            // Bourbaki simple roots e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
            std::vector<Vec> g = {{q(2, 1), q(-1, 1), q(0, 1), q(0, 1)},
                                  {q(-1, 1), q(2, 1), q(-1, 1), q(0, 1)},
                                  {q(0, 1), q(-1, 1), q(1, 1), q(-1, 2)},
                                  {q(0, 1), q(0, 1), q(-1, 2), q(1, 1)}};
            return {4, 1152, 48, g};
        }
        case CoxeterType::E6: {
            // Bourbaki numbering: chain 1-3-4-5-6 with 2 attached to 4
            std::vector<Vec> g(6, Vec(6, q(0, 1)));
            for (int i = 0; i < 6; ++i) g[i][i] = q(2, 1);
            auto link = [&](int i, int j) { g[i - 1][j - 1] = g[j - 1][i - 1] = q(-1, 1); };
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            link(2, 4);
            return {6, 51840, 72, g};
        }
    }
    throw ParameterError("unknown Coxeter type");
}

bool vec_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int s = (a[i] - b[i]).sign();
        if (s != 0) return s < 0;
    }
    return false;
}

}  // namespace

CoxeterType parse_coxeter_type(const std::string& s) {
    std::string t;
    for (char c : s) t += char(std::tolower(c));
    if (t == "h3") return CoxeterType::H3;
    if (t == "f4") return CoxeterType::F4;
    if (t == "h4") return CoxeterType::H4;
    if (t == "e6") return CoxeterType::E6;
    if (t == "e7" || t == "e8")
        throw NotSupportedError(t + " is out of scope at desk scale: enumerating the full group (" +
                                std::string(t == "e7" ? "2903040" : "696729600") +
                                " elements) and its cover relations is infeasible here");
    throw ParameterError("unknown group spec `" + s + "` (expected g(m,p,n), h3, f4, h4 or e6)");
}

std::string coxeter_type_name(CoxeterType t) {
    switch (t) {
        case CoxeterType::H3: return "h3";
        case CoxeterType::F4: return "f4";
        case CoxeterType::H4: return "h4";
        case CoxeterType::E6: return "e6";
    }
    return "?";
}

RootSystemGroup::RootSystemGroup(CoxeterType type, double time_budget_seconds) : type_(type) {
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    TypeData data = type_data(type);
    rank_ = data.rank;
    gram_ = data.gram;

    auto inner = [&](const Vec& u, const Vec& v) {
        QuadraticNumber s;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) s = s + u[i] * gram_[i][j] * v[j];
        return s;
    };
    auto reflect = [&](const Vec& root, const Vec& v) {
        QuadraticNumber coef = (QuadraticNumber(2) * inner(root, v)) / inner(root, root);
        Vec out(v);
        for (int i = 0; i < rank_; ++i) out[i] = out[i] - coef * root[i];
        return out;
    };

    // close the simple roots under the simple reflections
    std::vector<Vec> simples(rank_, Vec(rank_, QuadraticNumber(0)));
    for (int i = 0; i < rank_; ++i) simples[i][i] = QuadraticNumber(1);
    std::map<std::vector<std::pair<std::string, std::string>>, int> seen;
    auto key_of = [&](const Vec& v) {
        std::vector<std::pair<std::string, std::string>> k;
        for (const auto& c : v) k.emplace_back(c.x.get_str(), c.y.get_str());
        return k;
    };
    std::vector<Vec> pool;
    std::queue<int> work;
    for (int i = 0; i < rank_; ++i) {
        seen[key_of(simples[i])] = int(pool.size());
        pool.push_back(simples[i]);
        work.push(i);
    }
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        for (int i = 0; i < rank_; ++i) {
            Vec img = reflect(simples[i], pool[v]);
            auto k = key_of(img);
            if (!seen.count(k)) {
                seen[k] = int(pool.size());
                pool.push_back(img);
                work.push(seen[k]);
            }
        }
        if (int(pool.size()) > data.num_roots)
            throw InternalConsistencyError("root closure exceeded the expected count for " + name());
    }
    if (int(pool.size()) != data.num_roots)
        throw InternalConsistencyError("root closure of " + name() + " found " +
                                       std::to_string(pool.size()) + " roots, expected " +
                                       std::to_string(data.num_roots));
    std::sort(pool.begin(), pool.end(), vec_less);
    roots_ = std::move(pool);
    std::map<std::vector<std::pair<std::string, std::string>>, int> root_of;
    for (size_t i = 0; i < roots_.size(); ++i) root_of[key_of(roots_[i])] = int(i);
    simple_root_index_.resize(rank_);
    for (int i = 0; i < rank_; ++i) simple_root_index_[i] = root_of.at(key_of(simples[i]));

    int nr = num_roots();
    auto perm_of_reflection = [&](const Vec& root) {
        std::vector<uint8_t> perm(nr);
        for (int r = 0; r < nr; ++r) perm[r] = uint8_t(root_of.at(key_of(reflect(root, roots_[r]))));
        return perm;
    };
    std::vector<std::vector<uint8_t>> gens(rank_);
    for (int i = 0; i < rank_; ++i) gens[i] = perm_of_reflection(simples[i]);

    // breadth-first closure of the simple reflections
    std::vector<uint8_t> id(nr);
    std::iota(id.begin(), id.end(), 0);
    element_of_[id] = 0;
    elements_.push_back(id);
    word_parent_.push_back(-1);
    word_gen_.push_back(-1);
    for (size_t head = 0; head < elements_.size(); ++head) {
        if ((head & 1023) == 0 && elapsed() > time_budget_seconds)
            throw ResourceError(name() + " enumeration exceeded the time budget of " +
                                std::to_string(time_budget_seconds) + "s");
        std::vector<uint8_t> cur = elements_[head];  // copy: elements_ may reallocate
        for (int g = 0; g < rank_; ++g) {
            std::vector<uint8_t> next(nr);
            for (int r = 0; r < nr; ++r) next[r] = cur[gens[g][r]];
            auto [it, fresh] = element_of_.try_emplace(next, int(elements_.size()));
            if (fresh) {
                elements_.push_back(std::move(next));
                word_parent_.push_back(int(head));
                word_gen_.push_back(g);
            }
        }
    }
    if (order() != data.order)
        throw InternalConsistencyError(name() + " closure found " + std::to_string(order()) +
                                       " elements, expected " + std::to_string(data.order));

    // one reflection per +/- root pair
    std::vector<int> refl;
    for (int r = 0; r < nr; ++r) {
        Vec neg(rank_);
        for (int i = 0; i < rank_; ++i) neg[i] = -roots_[r][i];
        if (root_of.at(key_of(neg)) < r) continue;  // canonical representative only
        refl.push_back(element_of_.at(perm_of_reflection(roots_[r])));
    }
    std::sort(refl.begin(), refl.end());
    reflections_ = std::move(refl);
    if (int(reflections_.size()) != nr / 2)
        throw InternalConsistencyError("reflection count mismatch for " + name());
}

int RootSystemGroup::element_index(const std::vector<uint8_t>& perm) const {
    auto it = element_of_.find(perm);
    if (it == element_of_.end())
        throw InternalConsistencyError("permutation is not an element of " + name());
    return it->second;
}

int RootSystemGroup::multiply(int u, int w) const {
    const auto& pu = elements_[u];
    const auto& pw = elements_[w];
    std::vector<uint8_t> r(pu.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = pu[pw[i]];
    return element_index(r);
}

int RootSystemGroup::inverse(int w) const {
    const auto& pw = elements_[w];
    std::vector<uint8_t> r(pw.size());
    for (size_t i = 0; i < r.size(); ++i) r[pw[i]] = uint8_t(i);
    return element_index(r);
}

void RootSystemGroup::build_length_table() const {
    std::call_once(length_once_, [&] {
        lengths_.assign(elements_.size(), -1);
        std::queue<int> q;
        lengths_[0] = 0;
        q.push(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int t : reflections_) {
                int v = multiply(u, t);
                if (lengths_[v] == -1) {
                    lengths_[v] = lengths_[u] + 1;
                    q.push(v);
                }
            }
        }
    });
}

int RootSystemGroup::reflection_length(int w) const {
    build_length_table();
    return lengths_[w];
}

std::vector<std::vector<QuadraticNumber>> RootSystemGroup::matrix_of(int w) const {
    std::vector<std::vector<QuadraticNumber>> mat(rank_, Vec(rank_, QuadraticNumber(0)));
    for (int j = 0; j < rank_; ++j) {
        const Vec& img = roots_[elements_[w][simple_root_index_[j]]];
        for (int i = 0; i < rank_; ++i) mat[i][j] = img[i];
    }
    return mat;
}

int RootSystemGroup::codim(int w) const {
    std::call_once(codim_once_, [&] { codims_.assign(elements_.size(), -1); });
    if (codims_[w] >= 0) return codims_[w];
    auto mat = matrix_of(w);
    for (int i = 0; i < rank_; ++i) mat[i][i] = mat[i][i] - QuadraticNumber(1);
    // exact Gaussian elimination
    int rank = 0;
    int row = 0;
    for (int col = 0; col < rank_ && row < rank_; ++col) {
        int pivot = -1;
        for (int r = row; r < rank_; ++r)
            if (!mat[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(mat[row], mat[pivot]);
        for (int r = row + 1; r < rank_; ++r) {
            if (mat[r][col].is_zero()) continue;
            QuadraticNumber f = mat[r][col] / mat[row][col];
            for (int c = col; c < rank_; ++c) mat[r][c] = mat[r][c] - f * mat[row][c];
        }
        ++row;
        ++rank;
    }
    codims_[w] = rank;
    return rank;
}

std::string RootSystemGroup::label(int w) const {
    if (w == 0) return "e";
    std::string s;
    std::vector<int> gens;
    for (int x = w; x != 0; x = word_parent_[x]) gens.push_back(word_gen_[x]);
    std::reverse(gens.begin(), gens.end());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += "*";
        s += "s" + std::to_string(gens[i] + 1);
    }
    return s;
}

std::vector<std::vector<int>> RootSystemGroup::conjugacy_orbits(const std::vector<int>& S) const {
    std::vector<char> in_s(elements_.size(), 0), done(elements_.size(), 0);
    for (int s : S) in_s[s] = 1;
    std::vector<std::vector<int>> orbits;
    for (int s : S) {
        if (done[s]) continue;
        std::vector<int> orbit;
        std::queue<int> q;
        done[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            orbit.push_back(x);
            for (int t : reflections_) {
                int y = multiply(multiply(t, x), inverse(t));
                if (!in_s[y]) throw DomainError("set is not closed under conjugation");
                if (!done[y]) {
                    done[y] = 1;
                    q.push(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<int> RootSystemGroup::conjugacy_partition() const {
    std::vector<int> all(elements_.size());
    std::iota(all.begin(), all.end(), 0);
    auto orbits = conjugacy_orbits(all);
    std::vector<int> orbit_of(elements_.size(), -1);
    for (size_t o = 0; o < orbits.size(); ++o)
        for (int v : orbits[o]) orbit_of[v] = int(o);
    return orbit_of;
}

}  // namespace sperner
