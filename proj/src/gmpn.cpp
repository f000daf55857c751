#include "sperner/gmpn.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace sperner {

GmpnElement gmpn_identity(int n) {
    GmpnElement e;
    e.a.assign(n, 0);
    e.sigma.resize(n);
    std::iota(e.sigma.begin(), e.sigma.end(), 0);
    return e;
}

GmpnElement gmpn_multiply(int m, const GmpnElement& u, const GmpnElement& w) {
    int n = int(w.a.size());
    if (int(u.a.size()) != n) throw ParameterError("multiply: mismatched group parameters");
    GmpnElement r;
    r.a.resize(n);
    r.sigma.resize(n);
    for (int k = 0; k < n; ++k) {
        r.sigma[k] = u.sigma[w.sigma[k]];
        r.a[k] = (w.a[k] + u.a[w.sigma[k]]) % m;
    }
    return r;
}

GmpnElement gmpn_inverse(int m, const GmpnElement& w) {
    int n = int(w.a.size());
    GmpnElement r;
    r.a.resize(n);
    r.sigma.resize(n);
    for (int k = 0; k < n; ++k) r.sigma[w.sigma[k]] = k;
    for (int k = 0; k < n; ++k) r.a[k] = (m - w.a[r.sigma[k]]) % m;
    return r;
}

int cycle_sign_count(const GmpnElement& w, int m) {
    int n = int(w.a.size());
    int t0 = 0;
    std::vector<char> seen(n, 0);
    for (int k = 0; k < n; ++k) {
        if (seen[k]) continue;
        int sum = 0;
        for (int j = k; !seen[j]; j = w.sigma[j]) {
            seen[j] = 1;
            sum = (sum + w.a[j]) % m;
        }
        if (sum == 0) ++t0;
    }
    return t0;
}

int fixed_space_codim(const GmpnElement& w, int m) {
    return int(w.a.size()) - cycle_sign_count(w, m);
}

std::string format_element(const GmpnElement& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.a[i]);
    }
    s += "|";
    for (size_t i = 0; i < w.sigma.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.sigma[i] + 1);
    }
    s += "]";
    return s;
}

GmpnElement parse_element(const std::string& text, int m) {
    auto bad = [&](const std::string& why) {
        return ParameterError("element `" + text + "`: " + why +
                              " (expected [a1,...,an|s1,...,sn])");
    };
    size_t lb = text.find('['), bar = text.find('|'), rb = text.find(']');
    if (lb == std::string::npos || bar == std::string::npos || rb == std::string::npos ||
        !(lb < bar && bar < rb))
        throw bad("missing [, | or ]");
    auto parse_ints = [&](const std::string& part) {
        std::vector<int> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw bad("non-integer entry `" + item + "`");
            }
        }
        return out;
    };
    GmpnElement w;
    w.a = parse_ints(text.substr(lb + 1, bar - lb - 1));
    w.sigma = parse_ints(text.substr(bar + 1, rb - bar - 1));
    if (w.a.size() != w.sigma.size() || w.a.empty()) throw bad("a and sigma lengths differ");
    int n = int(w.a.size());
    std::vector<char> seen(n, 0);
    for (int& s : w.sigma) {
        if (s < 1 || s > n || seen[s - 1]) throw bad("sigma is not a permutation of 1..n");
        seen[s - 1] = 1;
        s -= 1;
    }
    for (int& x : w.a) x = ((x % m) + m) % m;
    return w;
}

GmpnGroup::GmpnGroup(int m, int p, int n, long element_budget) : m_(m), p_(p), n_(n) {
    if (m < 1 || p < 1 || n < 1) throw ParameterError("G(m,p,n) needs m,p,n >= 1");
    if (m % p != 0)
        throw ParameterError("G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                             std::to_string(n) + "): p must divide m");
    fact_.resize(n + 1);
    fact_[0] = 1;
    __int128 f = 1;
    for (int k = 1; k <= n; ++k) {
        f *= k;
        if (f > element_budget * __int128(p)) throw ResourceError("G(m,p,n) enumeration over budget");
        fact_[k] = long(f);
    }
    mpow_.resize(n + 1);
    __int128 mk = 1;
    mpow_[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mk *= m;
        if (mk * fact_[n] > element_budget * __int128(p))
            throw ResourceError("G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                                std::to_string(n) + ") enumeration over budget of " +
                                std::to_string(element_budget) + " elements");
        mpow_[k] = long(mk);
    }
    long full = mpow_[n] * fact_[n];
    code_to_index_.assign(full, -1);
    elements_.reserve(full / p);
    // lexicographic on (a, sigma): a-codes ascending, permutations in
    // one-line lexicographic order within each a-vector
    std::vector<int> a(n, 0);
    GmpnElement w;
    for (long acode = 0; acode < mpow_[n]; ++acode) {
        int sum = 0;
        for (int x : a) sum += x;
        if (sum % p == 0) {
            w.a = a;
            w.sigma.resize(n);
            std::iota(w.sigma.begin(), w.sigma.end(), 0);
            do {
                code_to_index_[full_space_code(w)] = int32_t(elements_.size());
                elements_.push_back(w);
            } while (std::next_permutation(w.sigma.begin(), w.sigma.end()));
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++a[i] < m) break;
            a[i] = 0;
        }
    }
    // reflections: type (1) sigma=(i,j), a_i=-a_j; type (2) single p|a_i != 0
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int c = 0; c < m; ++c) {
                GmpnElement t = gmpn_identity(n);
                std::swap(t.sigma[i], t.sigma[j]);
                t.a[i] = c;
                t.a[j] = (m - c) % m;
                reflections_.push_back(index_of(t));
            }
    for (int i = 0; i < n; ++i)
        for (int c = p; c < m; c += p) {
            GmpnElement t = gmpn_identity(n);
            t.a[i] = c;
            reflections_.push_back(index_of(t));
        }
    std::sort(reflections_.begin(), reflections_.end());
}

long GmpnGroup::full_space_code(const GmpnElement& w) const {
    long acode = 0;
    for (int i = 0; i < n_; ++i) acode = acode * m_ + w.a[i];
    // Lehmer rank of sigma (lexicographic one-line order)
    long rank = 0;
    for (int i = 0; i < n_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (w.sigma[j] < w.sigma[i]) ++smaller;
        rank += smaller * fact_[n_ - 1 - i];
    }
    return acode * fact_[n_] + rank;
}

int GmpnGroup::index_of(const GmpnElement& w) const {
    if (int(w.a.size()) != n_) throw ParameterError("element has wrong rank for this group");
    for (int x : w.a)
        if (x < 0 || x >= m_) throw DomainError("residue out of range");
    int32_t idx = code_to_index_[full_space_code(w)];
    if (idx < 0) throw DomainError("element " + format_element(w) + " is not in G(" +
                                   std::to_string(m_) + "," + std::to_string(p_) + "," +
                                   std::to_string(n_) + ")");
    return idx;
}

int GmpnGroup::multiply(int u, int w) const {
    return index_of(gmpn_multiply(m_, elements_[u], elements_[w]));
}

int GmpnGroup::inverse(int w) const {
    std::call_once(inverse_once_, [&] {
        inverses_.resize(elements_.size());
        for (size_t i = 0; i < elements_.size(); ++i)
            inverses_[i] = index_of(gmpn_inverse(m_, elements_[i]));
    });
    return inverses_[w];
}

void GmpnGroup::build_length_table() const {
    std::call_once(length_once_, [&] {
        if (p_ == 1) {
            lengths_.resize(elements_.size());
            for (size_t i = 0; i < elements_.size(); ++i)
                lengths_[i] = n_ - cycle_sign_count(elements_[i], m_);
            return;
        }
        // breadth-first layering over the reflection Cayley graph
        lengths_.assign(elements_.size(), -1);
        std::queue<int> q;
        lengths_[identity_index()] = 0;
        q.push(identity_index());
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

int GmpnGroup::reflection_length(int w) const {
    if (p_ == 1) return n_ - cycle_sign_count(elements_[w], m_);
    build_length_table();
    return lengths_[w];
}

int GmpnGroup::reflection_length(const GmpnElement& w) const {
    if (p_ == 1) return int(w.a.size()) - cycle_sign_count(w, m_);
    return reflection_length(index_of(w));
}

std::vector<std::vector<int>> GmpnGroup::conjugacy_orbits(const std::vector<int>& S) const {
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
                // reflections generate, so generator conjugation suffices
                int y = multiply(multiply(t, x), inverse(t));
                if (!in_s[y])
                    throw DomainError("set is not closed under conjugation: " + label(x) +
                                      " conjugates to " + label(y));
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

std::vector<int> GmpnGroup::conjugacy_partition() const {
    std::vector<int> all(elements_.size());
    std::iota(all.begin(), all.end(), 0);
    auto orbits = conjugacy_orbits(all);
    std::vector<int> orbit_of(elements_.size(), -1);
    for (size_t o = 0; o < orbits.size(); ++o)
        for (int v : orbits[o]) orbit_of[v] = int(o);
    return orbit_of;
}

}  // namespace sperner
