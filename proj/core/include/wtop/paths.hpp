#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wtop/delta_space.hpp"
#include "wtop/ext_weight.hpp"

namespace wtop {

enum class ModelKind { DeltaLine, DeltaInterval, DeltaCircle };

/// A closed-form directed-metric model: the directed line d(x,y) = y-x for
/// x <= y (else oo), a directed interval, or the directed circle with
/// d(x,y) = (y-x) mod 1. Tensor powers carry the l1 metric; `reversed`
/// selects the opposite model.
struct AnalyticModel {
    ModelKind kind = ModelKind::DeltaLine;
    Rational lo = 0, hi = 1;  // interval bounds
    std::size_t power = 1;
    bool reversed = false;

    static AnalyticModel line(std::size_t power = 1) { return {ModelKind::DeltaLine, 0, 1, power, false}; }
    static AnalyticModel interval(Rational lo, Rational hi, std::size_t power = 1);
    static AnalyticModel circle() { return {ModelKind::DeltaCircle, 0, 1, 1, false}; }

    AnalyticModel opposite() const {
        AnalyticModel m = *this;
        m.reversed = !m.reversed;
        return m;
    }
    bool same_as(const AnalyticModel& o) const;

    /// Exact distance between two points (coordinate vectors; circle
    /// coordinates are lifts, the point being the lift mod 1).
    ExtWeight distance(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

/// Piecewise-affine path: strictly increasing rational times 0 = t0 < ... <
/// tp = 1 and one carrier point per breakpoint, affinely interpolated.
struct PLPath {
    AnalyticModel model;
    std::vector<Rational> times;
    std::vector<std::vector<Rational>> values;
};

/// Finite walk through a finite delta-metric space, the discrete stand-in
/// for a path; partition sums run over its vertices.
struct ChainPath {
    FiniteDeltaSpace space;
    std::vector<std::size_t> vertices;
};

PLPath validate_path(PLPath path);
ChainPath validate_chain(ChainPath chain);

/// sup over t0 < t1 of d(a(t0), a(t1)), in closed form.
ExtWeight span(const PLPath& path);
ExtWeight span(const ChainPath& chain);

/// sup over partitions of the partition sum; infinite as soon as some
/// coordinate segment moves against the direction.
ExtWeight length(const PLPath& path);
ExtWeight length(const ChainPath& chain);

/// Least lambda with d(a(t), a(t')) <= lambda * (t' - t): the fastest
/// segment's l1 speed, or infinity for a backward segment.
ExtWeight lipschitz_weight_of_path(const PLPath& path);

/// Standard halving concatenation; requires a(1) = b(0) in the same model.
PLPath concatenate(const PLPath& a, const PLPath& b);

/// Time reversal t -> 1 - t, landing in the opposite model.
PLPath reflect(const PLPath& path);

struct LatticeCheck {
    std::string equation;
    bool pass;
    std::string witness;  // failing sample, empty when pass
};

struct LatticeReport {
    std::vector<LatticeCheck> checks;
    bool all_pass;
};

/// Verifies the lattice equations of the directed interval (faces,
/// degeneracy, connections max/min, interchange) and the reflection
/// identities, as exact identities on the rational grid {0,1/16,...,1}^2.
/// All maps involved are piecewise affine with breakpoints on that grid,
/// so grid equality implies function equality.
LatticeReport interval_lattice_check();

}  // namespace wtop
