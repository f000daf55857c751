#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sperner/rational.hpp"

namespace sperner {

// Rank generating function F(P,q): coefficient i is |P_i|, exact integers.
using RankPolynomial = std::vector<Int>;

RankPolynomial poly_mul(const RankPolynomial& a, const RankPolynomial& b);
RankPolynomial poly_pow(const RankPolynomial& a, int e);
std::string poly_str(const RankPolynomial& p);

// Index of the largest coefficient; ties broken toward the lower index.
int poly_argmax(const RankPolynomial& p);

Int poly_sum(const RankPolynomial& p);

// If p = (1+e_1 q)...(1+e_k q) with positive integers e_i, return the
// multiset {e_i} sorted ascending; otherwise nullopt.  Backtracks over
// divisors of the current leading coefficient, dividing out (1+eq) by
// synthetic division with an exactness check at every step.
std::optional<std::vector<Int>> factor_exponents(const RankPolynomial& p);

}  // namespace sperner
