#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wtop/ext_weight.hpp"

namespace wtop {

/// A finite generalized (directed) metric space: labelled points and a
/// square ExtWeight matrix with d[i][i] = 0 and the triangle inequality.
/// Symmetry is not assumed.
struct FiniteDeltaSpace {
    std::vector<std::string> points;
    std::vector<std::vector<ExtWeight>> d;

    std::size_t size() const { return points.size(); }
    std::size_t index_of(const std::string& label) const;  // throws UnknownLabel
    const ExtWeight& dist(std::size_t i, std::size_t j) const { return d[i][j]; }
};

/// A map of underlying point sets between two spaces.
struct PointMap {
    const FiniteDeltaSpace* source = nullptr;
    const FiniteDeltaSpace* target = nullptr;
    std::vector<std::size_t> assignment;  // source index -> target index
};

/// An unordered relation on the points of one space, given by label pairs.
struct PointRelation {
    std::vector<std::pair<std::string, std::string>> pairs;
};

/// Checks both axioms; returns the space. Throws ReflexivityViolation or
/// TriangleViolation with the witnessing indices.
FiniteDeltaSpace validate(FiniteDeltaSpace space);

/// Checks the axioms without throwing; true iff valid.
bool is_valid(const FiniteDeltaSpace& space);

/// l-infinity metric on tuples (categorical product).
FiniteDeltaSpace product(const std::vector<FiniteDeltaSpace>& spaces);

/// l1 metric on tuples (monoidal tensor).
FiniteDeltaSpace tensor(const std::vector<FiniteDeltaSpace>& spaces);

/// Disjoint union; distance across summands is infinite.
FiniteDeltaSpace sum(const std::vector<FiniteDeltaSpace>& spaces);

/// Restriction to a nonempty subset of point labels.
FiniteDeltaSpace subspace(const FiniteDeltaSpace& space, const std::vector<std::string>& subset);

struct QuotientResult {
    FiniteDeltaSpace space;
    std::vector<std::size_t> projection;  // original point index -> class index
};

/// Quotient metric: shortest paths in the auxiliary digraph whose arcs are
/// all (x -> y, d(x,y)) plus zero-weight arcs both ways between related
/// points. Classes are the closure of the relation.
QuotientResult quotient(const FiniteDeltaSpace& space, const PointRelation& rel);

/// The greatest symmetric metric below d: shortest paths where each step
/// costs min(d(a,b), d(b,a)).
FiniteDeltaSpace symmetrize(const FiniteDeltaSpace& space);

/// Transposed matrix.
FiniteDeltaSpace opposite(const FiniteDeltaSpace& space);

/// Entrywise scaling by a finite nonnegative rational; lambda * oo = oo.
FiniteDeltaSpace scale(const FiniteDeltaSpace& space, const Rational& lambda);

/// Least lambda with d(f x, f x') <= lambda * d(x, x') for all pairs;
/// infinity when no finite lambda works, 0 when nothing constrains.
ExtWeight lipschitz_weight(const PointMap& f);

struct InternalHomResult {
    FiniteDeltaSpace space;                             // one point per 1-Lipschitz map
    std::vector<std::vector<std::size_t>> assignments;  // map index -> images per Y-point
};

/// The exponential Z^Y: all 1-Lipschitz maps Y -> Z with the metric of
/// uniform convergence. Enumerates |Z|^|Y| candidates; guarded by a cap.
InternalHomResult internal_hom(const FiniteDeltaSpace& Y, const FiniteDeltaSpace& Z,
                               std::size_t cap = 1000000);

/// Among all set maps Y -> Z, the 1-Lipschitz ones (as image tuples).
std::vector<std::vector<std::size_t>> enumerate_one_lipschitz_maps(const FiniteDeltaSpace& Y,
                                                                   const FiniteDeltaSpace& Z,
                                                                   std::size_t cap = 1000000);

/// The canonical preorder x < y iff d(x,y) < oo, as a boolean matrix.
std::vector<std::vector<bool>> preorder(const FiniteDeltaSpace& space);

}  // namespace wtop
