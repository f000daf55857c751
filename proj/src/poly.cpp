#include "sperner/poly.hpp"

#include <algorithm>

namespace sperner {

RankPolynomial poly_mul(const RankPolynomial& a, const RankPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    RankPolynomial c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

RankPolynomial poly_pow(const RankPolynomial& a, int e) {
    RankPolynomial r{Int(1)};
    RankPolynomial base = a;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

std::string poly_str(const RankPolynomial& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += p[i].get_str();
        } else {
            if (p[i] != 1) s += p[i].get_str() + "*";
            s += "q";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

int poly_argmax(const RankPolynomial& p) {
    int best = 0;
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[best]) best = int(i);
    return best;
}

Int poly_sum(const RankPolynomial& p) {
    Int s(0);
    for (const Int& c : p) s += c;
    return s;
}

namespace {

// p = (1+eq)*r exactly with nonnegative integer r?  Synthetic division:
// r_0 = p_0, r_k = p_k - e*r_{k-1}, remainder must vanish.
std::optional<RankPolynomial> divide_linear(const RankPolynomial& p, const Int& e) {
    RankPolynomial r(p.size() - 1, Int(0));
    Int carry(0);
    for (size_t k = 0; k + 1 < p.size(); ++k) {
        r[k] = p[k] - carry;
        if (r[k] < 0) return std::nullopt;
        carry = e * r[k];
    }
    if (p.back() != carry) return std::nullopt;
    return r;
}

std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> divs;
    Int i(1);
    while (i * i <= n) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
        ++i;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool factor_rec(const RankPolynomial& p, std::vector<Int>& out) {
    if (p.size() == 1) return p[0] == 1;
    if (p[0] != 1) return false;
    if (p.back() <= 0) return false;
    for (const Int& e : positive_divisors(p.back())) {
        auto q = divide_linear(p, e);
        if (!q) continue;
        out.push_back(e);
        if (factor_rec(*q, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Int>> factor_exponents(const RankPolynomial& p) {
    if (p.empty() || p[0] != 1) return std::nullopt;
    RankPolynomial trimmed = p;
    while (trimmed.size() > 1 && trimmed.back() == 0) trimmed.pop_back();
    std::vector<Int> out;
    if (!factor_rec(trimmed, out)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sperner
