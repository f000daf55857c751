#pragma once

#include <string>

#include "sperner/rational.hpp"

namespace sperner {

// Exact element of Q(sqrt(5)): x + y*sqrt(5).  The crystallographic types
// only ever populate x, so the same type serves as plain rationals there.
// Equality is exact, never tolerance-based.
struct QuadraticNumber {
    Rat x, y;

    QuadraticNumber() : x(0), y(0) {}
    QuadraticNumber(long v) : x(v), y(0) {}
    QuadraticNumber(Rat v) : x(std::move(v)), y(0) {}
    QuadraticNumber(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const QuadraticNumber& o) const { return x == o.x && y == o.y; }

    QuadraticNumber operator+(const QuadraticNumber& o) const { return {x + o.x, y + o.y}; }
    QuadraticNumber operator-(const QuadraticNumber& o) const { return {x - o.x, y - o.y}; }
    QuadraticNumber operator-() const { return {-x, -y}; }
    QuadraticNumber operator*(const QuadraticNumber& o) const {
        return {x * o.x + 5 * y * o.y, x * o.y + y * o.x};
    }
    QuadraticNumber operator/(const QuadraticNumber& o) const {
        // multiply by the conjugate; norm x^2 - 5y^2 is nonzero for o != 0
        Rat norm = o.x * o.x - 5 * o.y * o.y;
        if (norm == 0) throw ParameterError("division by zero in Q(sqrt 5)");
        return {(x * o.x - 5 * y * o.y) / norm, (y * o.x - x * o.y) / norm};
    }

    // sign of the real value x + y*sqrt(5), exactly
    int sign() const {
        int sx = sgn(x), sy = sgn(y);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // opposite signs: compare x^2 against 5 y^2
        Rat xx = x * x, yy5 = 5 * y * y;
        if (xx == yy5) return 0;  // impossible for nonzero x,y (sqrt5 irrational)
        return (xx > yy5) ? sx : sy;
    }

    bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }

    std::string str() const {
        if (y == 0) return x.get_str();
        return x.get_str() + "+" + y.get_str() + "r5";
    }

private:
    static int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
};

}  // namespace sperner
