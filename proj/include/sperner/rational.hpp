#pragma once

#include <gmpxx.h>

#include <string>

#include "sperner/errors.hpp"

namespace sperner {

// Exact arithmetic everywhere: big integers and rationals from GMP.
// No floating point enters any poset or flow computation.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int int_lcm(const Int& a, const Int& b) {
    Int g, l;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g == 0) return 0;
    l = a / g * b;
    if (l < 0) l = -l;
    return l;
}

inline Rat parse_rat(const std::string& num, const std::string& den) {
    try {
        return make_rat(Int(num), Int(den));
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational: " + num + "/" + den);
    } catch (const ParameterError&) {
        throw SchemaError("malformed rational: " + num + "/" + den);
    }
}

}  // namespace sperner
