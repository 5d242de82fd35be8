#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wtop/ext_weight.hpp"

namespace wtop {

/// An exact element a + b*sqrt(d) of a real quadratic field, with rational
/// a, b and squarefree d > 1 (d is 0 whenever b = 0, i.e. for rationals).
/// Elements of different fields cannot be mixed.
struct QuadExt {
    Rational a, b;
    std::int64_t d = 0;

    QuadExt() = default;
    QuadExt(Rational rational) : a(std::move(rational)) {}
    QuadExt(Rational a_, Rational b_, std::int64_t d_);

    bool is_rational() const { return b == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    int sign() const;  // exact sign of the real value

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    Integer floor() const;

    /// "(p+q√d)/r" with integers p, q and positive r, or a plain rational.
    std::string to_string() const;
};

/// Squarefree core: d = s^2 * core with core squarefree; returns (core, s).
std::pair<std::int64_t, std::int64_t> squarefree_core(std::int64_t d);

/// theta = (p + q*sqrt(d))/r, canonical: gcd-reduced, r > 0, d squarefree,
/// q != 0 (so theta is irrational).
struct QuadraticIrrational {
    Integer p, q, r;
    std::int64_t d = 2;

    QuadExt value() const;
};

QuadraticIrrational make_quadratic_irrational(Integer p, Integer q, Integer r, std::int64_t d);

struct CFExpansion {
    std::vector<Integer> preperiod;
    std::vector<Integer> period;  // minimal, from the first repeated complete quotient
};

/// Regular continued fraction with its eventual period, computed by exact
/// iteration of the complete quotients x -> 1/(x - floor x); states repeat
/// by Lagrange's theorem.
CFExpansion cf_expansion(const QuadraticIrrational& theta);

/// Convergents h_k / k_k of a digit sequence, for cross-checking.
std::vector<std::pair<Integer, Integer>> convergents(const std::vector<Integer>& digits);

}  // namespace wtop
