#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sperner/quadratic.hpp"

namespace sperner {

enum class CoxeterType { H3, F4, H4, E6 };

CoxeterType parse_coxeter_type(const std::string& s);  // h3|f4|h4|e6; e7/e8 not supported
std::string coxeter_type_name(CoxeterType t);

// Exceptional Coxeter group realized as permutations of its root system.
// Roots live in the simple-root coordinate basis with the exact Gram form
// of the type; matrices are assembled per element only when a codimension
// is requested.
class RootSystemGroup {
public:
    explicit RootSystemGroup(CoxeterType type, double time_budget_seconds = 60.0);
    RootSystemGroup(const RootSystemGroup&) = delete;
    RootSystemGroup& operator=(const RootSystemGroup&) = delete;

    CoxeterType type() const { return type_; }
    std::string name() const { return coxeter_type_name(type_); }
    int rank() const { return rank_; }
    long order() const { return long(elements_.size()); }
    int num_roots() const { return int(roots_.size()); }

    int identity_index() const { return 0; }
    const std::vector<int>& reflections() const { return reflections_; }

    int multiply(int u, int w) const;
    int inverse(int w) const;

    // BFS distance in the reflection Cayley graph; table built on first use.
    int reflection_length(int w) const;

    // rank of (M_w - I) by exact Gaussian elimination; by Carter's theorem
    // this doubles as the reflection length.
    int codim(int w) const;

    // matrix of w in the simple-root basis (column j = image of alpha_j)
    std::vector<std::vector<QuadraticNumber>> matrix_of(int w) const;

    std::string label(int w) const;  // word in the simple reflections

    std::vector<std::vector<int>> conjugacy_orbits(const std::vector<int>& S) const;
    std::vector<int> conjugacy_partition() const;

    const std::vector<std::vector<QuadraticNumber>>& roots() const { return roots_; }

private:
    struct PermHash {
        size_t operator()(const std::vector<uint8_t>& v) const {
            size_t h = 1469598103934665603ull;
            for (uint8_t b : v) {
                h ^= b;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    int root_index(const std::vector<QuadraticNumber>& v) const;
    int element_index(const std::vector<uint8_t>& perm) const;
    void build_length_table() const;

    CoxeterType type_;
    int rank_;
    std::vector<std::vector<QuadraticNumber>> gram_;
    std::vector<std::vector<QuadraticNumber>> roots_;
    std::vector<int> simple_root_index_;              // index of alpha_j in roots_
    std::vector<std::vector<uint8_t>> elements_;      // root permutations
    std::unordered_map<std::vector<uint8_t>, int, PermHash> element_of_;
    std::vector<int> reflections_;
    std::vector<int> word_parent_, word_gen_;         // BFS tree for labels

    mutable std::once_flag length_once_, codim_once_;
    mutable std::vector<int> lengths_;
    mutable std::vector<int> codims_;
};

}  // namespace sperner
