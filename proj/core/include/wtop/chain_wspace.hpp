#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wtop/delta_space.hpp"
#include "wtop/ext_weight.hpp"

namespace wtop {

/// A combinatorial space with weighted paths: a directed multigraph whose
/// walks carry weights satisfying w(empty) = 0, subadditivity under
/// concatenation and w(u) v w(v) <= w(u v). Weights are either LINEAR
/// (generated by per-edge weights, strictly additive) or TABLED (explicit
/// on walks up to a stored length bound, extended to longer walks by the
/// least subadditive extension).
struct ChainWSpace {
    struct Edge {
        std::size_t src = 0, dst = 0;
    };
    enum class Mode { Linear, Tabled };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    Mode mode = Mode::Linear;
    std::vector<ExtWeight> edge_weights;                  // Linear
    std::size_t bound = 0;                                // Tabled
    std::map<std::vector<std::size_t>, ExtWeight> table;  // Tabled: walk -> weight

    std::size_t vertex_index(const std::string& label) const;  // throws UnknownLabel
    bool is_walk(const std::vector<std::size_t>& walk) const;

    /// Weight of a walk given by edge indices; the empty walk weighs 0.
    /// Tabled walks beyond the bound use the least subadditive extension.
    ExtWeight weight(const std::vector<std::size_t>& walk) const;
};

ChainWSpace validate_wspace(ChainWSpace space);
bool is_valid_wspace(const ChainWSpace& space);

/// All nonempty walks of length <= maxlen, lexicographic by edge indices.
std::vector<std::vector<std::size_t>> enumerate_walks(const ChainWSpace& space,
                                                      std::size_t maxlen,
                                                      std::size_t cap = 1000000);

/// Product / tensor of two chain w-spaces: vertices are pairs, steps move
/// one or both coordinates, and a walk weighs sup (product) or sum (tensor)
/// of its two projections. The tensor of linear spaces stays linear.
ChainWSpace wspace_product(const ChainWSpace& X, const ChainWSpace& Y, std::size_t bound = 0,
                           std::size_t cap = 1000000);
ChainWSpace wspace_tensor(const ChainWSpace& X, const ChainWSpace& Y, std::size_t bound = 0,
                          std::size_t cap = 1000000);
ChainWSpace wspace_sum(const ChainWSpace& X, const ChainWSpace& Y);

/// Quotient by a vertex relation: vertices become classes and a quotient
/// walk weighs the least total source weight over decompositions into
/// lifted runs.
ChainWSpace wspace_quotient(const ChainWSpace& X,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            std::size_t bound = 0, std::size_t cap = 1000000);

/// The least strictly additive weight above w; on a validated space it is
/// generated by the single-edge weights.
ChainWSpace linearize(const ChainWSpace& X);

/// max over decompositions into contiguous subwalks of the summed part
/// weights (the defining formula; used as the linearize oracle).
ExtWeight max_decomposition_weight(const ChainWSpace& X, const std::vector<std::size_t>& walk);

/// The underlying delta-metric space: d(x,y) = inf over walks of w.
FiniteDeltaSpace delta_of(const ChainWSpace& X);

/// Span model over a delta-metric space: walks along an admissible digraph,
/// weighted by the largest distance between any earlier and later vertex.
ChainWSpace sp_of(const FiniteDeltaSpace& Y,
                  const std::vector<std::pair<std::string, std::string>>& admissible,
                  std::size_t bound = 0, std::size_t cap = 1000000);

/// Length model: per-edge distances summed (LINEAR by construction).
ChainWSpace L_of(const FiniteDeltaSpace& Y,
                 const std::vector<std::pair<std::string, std::string>>& admissible);

struct GaloisReport {
    bool counit_span = false;       // X >= sp(delta X) on all checked walks
    bool idempotent_delta = false;  // delta sp delta = delta
    bool linear_input = false;
    bool counit_length = false;      // X >= L(delta X), for linear X
    bool idempotent_delta_l = false; // via the length model
    std::vector<std::string> violations;
    bool all_pass() const { return violations.empty(); }
};

GaloisReport galois_check(const ChainWSpace& X, std::size_t check_len = 0);

struct GaloisDualReport {
    bool unit_span = false;       // delta(sp Y) >= Y entrywise
    bool idempotent_sp = false;   // sp delta sp = sp
    bool unit_length = false;     // delta(L Y) >= Y entrywise
    bool idempotent_l = false;    // L delta L = L
    std::vector<std::string> violations;
    bool all_pass() const { return violations.empty(); }
};

GaloisDualReport galois_check_dual(const FiniteDeltaSpace& Y,
                                   const std::vector<std::pair<std::string, std::string>>& adm,
                                   std::size_t check_len = 0);

struct WSpaceFlags {
    bool span_metrizable = false;
    bool length_metrizable = false;
    bool linear = false;
};

WSpaceFlags classify_wspace(const ChainWSpace& X, std::size_t check_len = 0);

struct DeltaFlags {
    bool geodetic = false;
    bool linearly_geodetic = false;
};

DeltaFlags classify_delta(const FiniteDeltaSpace& Y,
                          const std::vector<std::pair<std::string, std::string>>& adm,
                          std::size_t bound = 0);

}  // namespace wtop
