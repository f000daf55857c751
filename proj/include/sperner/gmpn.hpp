#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "sperner/errors.hpp"

namespace sperner {

// Element of G(m,p,n): w = [a_1,...,a_n | sigma] acting on (Z/mZ) x [n] by
// w(b,k) = (b + a_k, sigma(k)).  Residues stored as least nonnegative
// representatives; sigma is 0-based one-line notation internally.
struct GmpnElement {
    std::vector<int> a;
    std::vector<int> sigma;

    bool operator==(const GmpnElement&) const = default;
};

GmpnElement gmpn_identity(int n);

// (u*w)(x) = u(w(x))
GmpnElement gmpn_multiply(int m, const GmpnElement& u, const GmpnElement& w);
GmpnElement gmpn_inverse(int m, const GmpnElement& w);

// Number of cycles of sigma whose a-labels sum to 0 mod m (t_0).
int cycle_sign_count(const GmpnElement& w, int m);

// codim of the fixed space: n - t_0 (a cycle contributes a fixed
// coordinate direction exactly when its sign vanishes).
int fixed_space_codim(const GmpnElement& w, int m);

// Text format `[a1,...,an|s1,...,sn]`, sigma 1-based one-line.
std::string format_element(const GmpnElement& w);
GmpnElement parse_element(const std::string& text, int m);

// Enumerated descriptor for G(m,p,n).  Immutable after construction; the
// lazily built tables (lengths, codims, inverses) are memoized once.
class GmpnGroup {
public:
    GmpnGroup(int m, int p, int n, long element_budget = 10000000L);
    GmpnGroup(const GmpnGroup&) = delete;
    GmpnGroup& operator=(const GmpnGroup&) = delete;

    int m() const { return m_; }
    int p() const { return p_; }
    int n() const { return n_; }
    long order() const { return long(elements_.size()); }

    const std::vector<GmpnElement>& elements() const { return elements_; }
    const GmpnElement& element(int i) const { return elements_[i]; }
    int identity_index() const { return 0; }

    // Canonical index (lexicographic on (a, sigma)); throws DomainError for
    // non-members.
    int index_of(const GmpnElement& w) const;

    // Reflection indices, ascending.
    const std::vector<int>& reflections() const { return reflections_; }

    int multiply(int u, int w) const;
    int inverse(int w) const;

    // Shi's formula n - t_0 for p = 1; BFS distance in the Cayley graph of
    // the reflections otherwise (table built on first use).
    int reflection_length(int w) const;
    int reflection_length(const GmpnElement& w) const;

    int codim(int w) const { return fixed_space_codim(elements_[w], m_); }

    std::string label(int w) const { return format_element(elements_[w]); }

    // Orbit partition of S under conjugation by the whole group.  S must be
    // conjugation-closed; orbits are listed in order of first appearance.
    std::vector<std::vector<int>> conjugacy_orbits(const std::vector<int>& S) const;

    // Orbit id per element for the conjugation action on all of G.
    std::vector<int> conjugacy_partition() const;

private:
    long full_space_code(const GmpnElement& w) const;
    void build_length_table() const;

    int m_, p_, n_;
    std::vector<GmpnElement> elements_;
    std::vector<int32_t> code_to_index_;
    std::vector<int> reflections_;
    std::vector<long> fact_;   // fact_[k] = k!
    std::vector<long> mpow_;   // mpow_[k] = m^k

    mutable std::once_flag length_once_, inverse_once_;
    mutable std::vector<int> lengths_;
    mutable std::vector<int> inverses_;
};

}  // namespace sperner
