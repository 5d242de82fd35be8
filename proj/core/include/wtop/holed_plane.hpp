#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wtop/ext_weight.hpp"
#include "wtop/weighted_category.hpp"

namespace wtop {

using PlanePoint = std::pair<Rational, Rational>;

/// An axis-aligned rectangle carrying the l1 tensor metric of the directed
/// plane, with open rectangular holes and marked points. Hole boundaries
/// are traversable; hole closures must be pairwise disjoint and contained
/// in the bounds.
struct HoledPlane {
    Rational x_lo = 0, y_lo = 0;
    Rational x_hi = 1, y_hi = 1;
    struct Rect {
        Rational x1, y1, x2, y2;  // the open rectangle (x1,x2) x (y1,y2)
    };
    std::vector<Rect> holes;
    std::vector<PlanePoint> marked;
};

HoledPlane validate_plane(HoledPlane plane);

/// The coordinate grid generated by bounds, hole corners and marked points
/// (plus any extra lines), with the edge/cell feasibility tables: a grid
/// edge is forbidden iff its relative interior meets a hole interior; a
/// cell supports swaps iff its interior misses every hole.
struct PlaneGrid {
    std::vector<Rational> xs, ys;
    std::vector<std::vector<bool>> h_edge;  // [i][j]: (xs[i],ys[j]) -> (xs[i+1],ys[j])
    std::vector<std::vector<bool>> v_edge;  // [i][j]: (xs[i],ys[j]) -> (xs[i],ys[j+1])
    std::vector<std::vector<bool>> cell;    // [i][j]: swap across cell (i,j) allowed

    std::size_t x_index(const Rational& x) const;  // throws UnknownLabel
    std::size_t y_index(const Rational& y) const;
};

PlaneGrid refine_grid(const HoledPlane& plane, const std::vector<Rational>& extra_xs = {},
                      const std::vector<Rational>& extra_ys = {});

/// The monotone staircases from one grid node to another, modulo elementary
/// swaps across hole-free cells. Paths are move strings over 'R' and 'U'.
struct ClassEnumeration {
    std::size_t path_count = 0;
    std::vector<std::string> representatives;     // lex-least member per class
    std::map<std::string, std::size_t> class_of;  // every enumerated path -> class
};

ClassEnumeration enumerate_classes(const PlaneGrid& grid, const PlanePoint& from,
                                   const PlanePoint& to, std::size_t cap = 1000000);

/// Weight of any nonempty class between two points: the l1 displacement
/// (every monotone representative attains it, so classes are geodesic).
ExtWeight class_weight(const PlanePoint& from, const PlanePoint& to);

struct FundamentalCategoryResult {
    FiniteWeightedCategory category;  // objects = marked points, in input order
    PlaneGrid grid;
    std::vector<ClassEnumeration> per_pair;         // src * n + dst
    std::vector<std::vector<std::size_t>> mor_of;   // per_pair class id -> morphism index
};

/// The fundamental weighted category of the plane on its marked points:
/// hom-sets are swap classes of monotone staircases, composition is path
/// concatenation, weights are l1 displacements (strictly additive).
FundamentalCategoryResult fundamental_category(const HoledPlane& plane,
                                               const std::vector<Rational>& extra_xs = {},
                                               const std::vector<Rational>& extra_ys = {},
                                               std::size_t cap = 1000000);

struct SimplicityReport {
    bool geodetically_simple = true;  // certified by the grid representatives
    bool one_simple = true;           // every hom-set has at most one class
};

SimplicityReport simplicity_report(const HoledPlane& plane, std::size_t cap = 1000000);

struct VanKampenReport {
    bool is_isomorphism = false;
    std::size_t pushout_morphisms = 0;
    std::size_t direct_morphisms = 0;
    std::vector<std::string> violations;
};

/// Cuts the plane along two vertical lines c1 < c2 into overlapping closed
/// pieces L = {x <= c2} and L' = {x >= c1}, computes the pushout of the
/// pieces' fundamental categories over the strip, and compares it with the
/// directly computed fundamental category, weight for weight.
VanKampenReport van_kampen_check(const HoledPlane& plane, const Rational& c1, const Rational& c2,
                                 std::size_t cap = 1000000);

/// The closed sub-plane {x_lo <= x <= x_hi} with clipped holes and the
/// marked points that survive.
HoledPlane clip_plane(const HoledPlane& plane, const Rational& new_x_lo, const Rational& new_x_hi);

}  // namespace wtop
