#include "wtop/delta_space.hpp"

#include <algorithm>
#include <numeric>

namespace wtop {

namespace {

/// All-pairs shortest paths over a nonnegative arc matrix, in place.
/// Diagonal is clamped to zero first (arc matrices here always allow it).
void floyd_warshall(std::vector<std::vector<ExtWeight>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i][i] = ExtWeight::zero();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i][k].is_infinite()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                ExtWeight via = a[i][k] + a[k][j];
                if (via < a[i][j]) a[i][j] = std::move(via);
            }
        }
}

std::vector<std::string> tuple_labels(const std::vector<FiniteDeltaSpace>& spaces,
                                      std::vector<std::vector<std::size_t>>& tuples) {
    std::vector<std::string> labels;
    std::vector<std::size_t> idx(spaces.size(), 0);
    while (true) {
        std::string label = "(";
        for (std::size_t c = 0; c < spaces.size(); ++c) {
            if (c) label += ",";
            label += spaces[c].points[idx[c]];
        }
        label += ")";
        labels.push_back(std::move(label));
        tuples.push_back(idx);
        std::size_t c = spaces.size();
        while (c > 0) {
            --c;
            if (++idx[c] < spaces[c].size()) break;
            idx[c] = 0;
            if (c == 0) return labels;
        }
    }
}

FiniteDeltaSpace combine(const std::vector<FiniteDeltaSpace>& spaces, bool l1) {
    if (spaces.empty()) throw ValidationError("need at least one space");
    if (spaces.size() == 1) return spaces.front();
    FiniteDeltaSpace out;
    std::vector<std::vector<std::size_t>> tuples;
    out.points = tuple_labels(spaces, tuples);
    const std::size_t n = out.points.size();
    out.d.assign(n, std::vector<ExtWeight>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ExtWeight acc = ExtWeight::zero();
            for (std::size_t c = 0; c < spaces.size(); ++c) {
                const ExtWeight& dc = spaces[c].d[tuples[i][c]][tuples[j][c]];
                acc = l1 ? acc + dc : max(acc, dc);
            }
            out.d[i][j] = std::move(acc);
        }
    return out;
}

}  // namespace

std::size_t FiniteDeltaSpace::index_of(const std::string& label) const {
    auto it = std::find(points.begin(), points.end(), label);
    if (it == points.end()) throw UnknownLabel(label);
    return static_cast<std::size_t>(it - points.begin());
}

FiniteDeltaSpace validate(FiniteDeltaSpace space) {
    const std::size_t n = space.size();
    if (space.d.size() != n) throw ValidationError("matrix row count does not match point count");
    for (const auto& row : space.d)
        if (row.size() != n) throw ValidationError("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        if (!space.d[i][i].is_zero()) throw ReflexivityViolation(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (space.d[i][j].is_infinite()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (space.d[i][j] + space.d[j][k] < space.d[i][k])
                    throw TriangleViolation(i, j, k);
        }
    return space;
}

bool is_valid(const FiniteDeltaSpace& space) {
    try {
        validate(space);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

FiniteDeltaSpace product(const std::vector<FiniteDeltaSpace>& spaces) {
    return combine(spaces, /*l1=*/false);
}

FiniteDeltaSpace tensor(const std::vector<FiniteDeltaSpace>& spaces) {
    return combine(spaces, /*l1=*/true);
}

FiniteDeltaSpace sum(const std::vector<FiniteDeltaSpace>& spaces) {
    if (spaces.empty()) throw ValidationError("need at least one space");
    if (spaces.size() == 1) return spaces.front();
    FiniteDeltaSpace out;
    for (std::size_t s = 0; s < spaces.size(); ++s)
        for (const auto& p : spaces[s].points) out.points.push_back(std::to_string(s) + ":" + p);
    const std::size_t n = out.points.size();
    out.d.assign(n, std::vector<ExtWeight>(n, ExtWeight::infinity()));
    std::size_t base = 0;
    for (const auto& sp : spaces) {
        for (std::size_t i = 0; i < sp.size(); ++i)
            for (std::size_t j = 0; j < sp.size(); ++j) out.d[base + i][base + j] = sp.d[i][j];
        base += sp.size();
    }
    return out;
}

FiniteDeltaSpace subspace(const FiniteDeltaSpace& space, const std::vector<std::string>& subset) {
    if (subset.empty()) throw ValidationError("subspace needs a nonempty subset");
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    for (const auto& l : subset) idx.push_back(space.index_of(l));
    FiniteDeltaSpace out;
    out.points = subset;
    out.d.assign(idx.size(), std::vector<ExtWeight>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.d[i][j] = space.d[idx[i]][idx[j]];
    return out;
}

QuotientResult quotient(const FiniteDeltaSpace& space, const PointRelation& rel) {
    const std::size_t n = space.size();
    // Union-find for the class decomposition.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Arc matrix: d plus zero arcs both ways between related points.
    auto arcs = space.d;
    for (const auto& [a, b] : rel.pairs) {
        std::size_t i = space.index_of(a), j = space.index_of(b);
        arcs[i][j] = ExtWeight::zero();
        arcs[j][i] = ExtWeight::zero();
        parent[find(i)] = find(j);
    }
    floyd_warshall(arcs);

    std::vector<std::size_t> root_to_class(n, n);
    QuotientResult out;
    out.projection.resize(n);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (root_to_class[r] == n) {
            root_to_class[r] = members.size();
            members.emplace_back();
        }
        out.projection[i] = root_to_class[r];
        members[out.projection[i]].push_back(i);
    }
    const std::size_t m = members.size();
    for (const auto& cls : members) {
        std::string label = "{";
        for (std::size_t k = 0; k < cls.size(); ++k) {
            if (k) label += ",";
            label += space.points[cls[k]];
        }
        label += "}";
        out.space.points.push_back(std::move(label));
    }
    out.space.d.assign(m, std::vector<ExtWeight>(m, ExtWeight::infinity()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto& cell = out.space.d[out.projection[i]][out.projection[j]];
            if (arcs[i][j] < cell) cell = arcs[i][j];
        }
    return out;
}

FiniteDeltaSpace symmetrize(const FiniteDeltaSpace& space) {
    const std::size_t n = space.size();
    FiniteDeltaSpace out = space;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.d[i][j] = min(space.d[i][j], space.d[j][i]);
    floyd_warshall(out.d);
    return out;
}

FiniteDeltaSpace opposite(const FiniteDeltaSpace& space) {
    FiniteDeltaSpace out = space;
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j) out.d[i][j] = space.d[j][i];
    return out;
}

FiniteDeltaSpace scale(const FiniteDeltaSpace& space, const Rational& lambda) {
    FiniteDeltaSpace out = space;
    for (auto& row : out.d)
        for (auto& w : row) w = w.scaled(lambda);
    return out;
}

ExtWeight lipschitz_weight(const PointMap& f) {
    const auto& X = *f.source;
    const auto& Y = *f.target;
    if (f.assignment.size() != X.size())
        throw ValidationError("point map assignment is not total on the source");
    ExtWeight best = ExtWeight::zero();
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j) {
            if (i == j) continue;
            best = max(best, lipschitz_ratio(X.d[i][j], Y.d[f.assignment[i]][f.assignment[j]]));
        }
    return best;
}

std::vector<std::vector<std::size_t>> enumerate_one_lipschitz_maps(const FiniteDeltaSpace& Y,
                                                                   const FiniteDeltaSpace& Z,
                                                                   std::size_t cap) {
    const std::size_t ny = Y.size(), nz = Z.size();
    // |Z|^|Y| candidates, checked against the cap before enumerating.
    double total = 1;
    for (std::size_t i = 0; i < ny; ++i) {
        total *= static_cast<double>(nz);
        if (total > static_cast<double>(cap))
            throw SizeLimitExceeded("internal hom enumeration exceeds cap");
    }
    std::vector<std::vector<std::size_t>> maps;
    std::vector<std::size_t> img(ny, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < ny; ++i)
            for (std::size_t j = 0; ok && j < ny; ++j)
                if (Z.d[img[i]][img[j]] > Y.d[i][j]) ok = false;
        if (ok) maps.push_back(img);
        std::size_t c = ny;
        bool done = true;
        while (c > 0) {
            --c;
            if (++img[c] < nz) {
                done = false;
                break;
            }
            img[c] = 0;
        }
        if (done) break;
    }
    return maps;
}

InternalHomResult internal_hom(const FiniteDeltaSpace& Y, const FiniteDeltaSpace& Z,
                               std::size_t cap) {
    InternalHomResult out;
    out.assignments = enumerate_one_lipschitz_maps(Y, Z, cap);
    const std::size_t m = out.assignments.size();
    for (const auto& img : out.assignments) {
        std::string label = "[";
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (i) label += ",";
            label += Z.points[img[i]];
        }
        label += "]";
        out.space.points.push_back(std::move(label));
    }
    out.space.d.assign(m, std::vector<ExtWeight>(m));
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t k = 0; k < m; ++k) {
            ExtWeight sup = ExtWeight::zero();
            for (std::size_t y = 0; y < Y.size(); ++y)
                sup = max(sup, Z.d[out.assignments[h][y]][out.assignments[k][y]]);
            out.space.d[h][k] = std::move(sup);
        }
    return out;
}

std::vector<std::vector<bool>> preorder(const FiniteDeltaSpace& space) {
    const std::size_t n = space.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = space.d[i][j].is_finite();
    return rel;
}

}  // namespace wtop
