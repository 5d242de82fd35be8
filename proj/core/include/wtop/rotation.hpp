#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtop/quadratic.hpp"

namespace wtop {

/// An element m + n*theta of the translation group G_theta = Z + theta Z.
struct GElement {
    Integer m, n;

    friend bool operator==(const GElement& a, const GElement& b) {
        return a.m == b.m && a.n == b.n;
    }
    friend GElement operator+(const GElement& a, const GElement& b) {
        return {a.m + b.m, a.n + b.n};
    }
};

QuadExt g_value(const GElement& e, const QuadraticIrrational& theta);

/// Weight w(x) = x when x >= 0 and infinity otherwise, valued in the
/// quadratic field extended by infinity.
struct QWeight {
    bool infinite = false;
    QuadExt value;  // meaningful when finite

    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
    friend bool operator==(const QWeight& a, const QWeight& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
};

QWeight g_weight(const GElement& e, const QuadraticIrrational& theta);

/// The first `count` elements of {m + n theta >= 0 : |m|, |n| <= coeff_bound}
/// sorted by weight (starting at 0). The box is part of the semantics:
/// G_theta+ itself is dense in [0, oo), with positive elements arbitrarily
/// close to 0 along the continued-fraction convergents, so a global
/// "first N by weight" does not exist.
std::vector<GElement> enumerate_g_plus(const QuadraticIrrational& theta, std::size_t count,
                                       const Integer& coeff_bound = Integer(64));

/// A feasible path of the irrational rotation w-space, recorded by the
/// forward displacements of its increasing segments before projection.
struct ProjectedPath {
    QuadraticIrrational theta;
    std::vector<QuadExt> segments;  // each >= 0
};

struct LiftResult {
    QuadExt endpoint;
    QuadExt weight;  // total displacement of the unique lift
    bool loop = false;
    std::optional<GElement> loop_class;  // set when the path closes up
};

/// The unique increasing lift starting at the given basepoint: endpoint and
/// weight are the summed displacements; the path is a loop iff the total
/// displacement lies in G_theta.
LiftResult lift_path(const ProjectedPath& path, const QuadExt& basepoint);

/// Decides whether a field element equals m + n*theta for integers m, n.
std::optional<GElement> g_membership(const QuadExt& v, const QuadraticIrrational& theta);

struct FundamentalMonoid {
    QuadraticIrrational theta;
    std::vector<GElement> elements;  // sorted by weight, starting at the unit
    std::vector<QWeight> weights;
};

/// Loop classes at any basepoint: the first `count` elements of G_theta+
/// within the coefficient box, by weight, optionally truncated to weights
/// <= cap. (The full set of classes below any positive cap is infinite
/// since G_theta is dense, so the presentation is count- and box-limited.)
FundamentalMonoid fundamental_monoid(const QuadraticIrrational& theta, std::size_t count,
                                     const std::optional<Rational>& cap = std::nullopt,
                                     const Integer& coeff_bound = Integer(64));

struct IsometricVerdict {
    bool isomorphic = false;
    char sign = '+';       // theta' = integer + sign * theta
    Integer integer = 0;
};

/// theta' in Z + theta or Z - theta, decided exactly with a certificate.
IsometricVerdict classify_isometric(const QuadraticIrrational& theta,
                                    const QuadraticIrrational& theta_prime);

struct LipschitzVerdict {
    bool isomorphic = false;
    std::vector<std::string> word;  // tokens "R", "T", "T-1", applied left to right
};

/// GL(2,Z)-conjugacy via common continued-fraction tails; a positive verdict
/// carries an R/T word mapping theta to theta', validated exactly.
LipschitzVerdict classify_lipschitz(const QuadraticIrrational& theta,
                                    const QuadraticIrrational& theta_prime);

QuadExt apply_word(const std::vector<std::string>& word, const QuadExt& value);

struct GL2Z {
    Integer a, b, c, d;  // t -> (a t + b) / (c t + d), |ad - bc| = 1
};

QuadExt gl2z_apply(const GL2Z& matrix, const QuadExt& value);

}  // namespace wtop
