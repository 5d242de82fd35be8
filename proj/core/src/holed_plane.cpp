#include "wtop/holed_plane.hpp"

#include <algorithm>

namespace wtop {

namespace {

std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string point_label(const PlanePoint& p) {
    return "(" + rat_str(p.first) + "," + rat_str(p.second) + ")";
}

bool in_open_rect(const HoledPlane::Rect& r, const PlanePoint& p) {
    return r.x1 < p.first && p.first < r.x2 && r.y1 < p.second && p.second < r.y2;
}

bool open_intervals_overlap(const Rational& a1, const Rational& a2, const Rational& b1,
                            const Rational& b2) {
    return a1 < b2 && b1 < a2;
}

}  // namespace

HoledPlane validate_plane(HoledPlane plane) {
    if (!(plane.x_lo < plane.x_hi) || !(plane.y_lo < plane.y_hi))
        throw ValidationError("plane bounds must be a nondegenerate rectangle");
    for (const auto& h : plane.holes) {
        if (!(h.x1 < h.x2) || !(h.y1 < h.y2))
            throw ValidationError("hole must be a nondegenerate open rectangle");
        if (h.x1 < plane.x_lo || h.x2 > plane.x_hi || h.y1 < plane.y_lo || h.y2 > plane.y_hi)
            throw ValidationError("hole closure must lie inside the bounds");
    }
    for (std::size_t a = 0; a < plane.holes.size(); ++a)
        for (std::size_t b = a + 1; b < plane.holes.size(); ++b) {
            const auto &h = plane.holes[a], &k = plane.holes[b];
            bool closures_meet =
                h.x1 <= k.x2 && k.x1 <= h.x2 && h.y1 <= k.y2 && k.y1 <= h.y2;
            if (closures_meet) throw ValidationError("holes must have pairwise disjoint closures");
        }
    for (std::size_t i = 0; i < plane.marked.size(); ++i) {
        const auto& p = plane.marked[i];
        if (p.first < plane.x_lo || p.first > plane.x_hi || p.second < plane.y_lo ||
            p.second > plane.y_hi)
            throw ValidationError("marked point " + point_label(p) + " is outside the bounds");
        for (const auto& h : plane.holes)
            if (in_open_rect(h, p))
                throw ValidationError("marked point " + point_label(p) + " lies inside a hole");
        for (std::size_t j = i + 1; j < plane.marked.size(); ++j)
            if (plane.marked[j] == p)
                throw ValidationError("duplicate marked point " + point_label(p));
    }
    return plane;
}

std::size_t PlaneGrid::x_index(const Rational& x) const {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || *it != x) throw UnknownLabel(rat_str(x));
    return static_cast<std::size_t>(it - xs.begin());
}

std::size_t PlaneGrid::y_index(const Rational& y) const {
    auto it = std::lower_bound(ys.begin(), ys.end(), y);
    if (it == ys.end() || *it != y) throw UnknownLabel(rat_str(y));
    return static_cast<std::size_t>(it - ys.begin());
}

PlaneGrid refine_grid(const HoledPlane& plane, const std::vector<Rational>& extra_xs,
                      const std::vector<Rational>& extra_ys) {
    PlaneGrid g;
    g.xs = {plane.x_lo, plane.x_hi};
    g.ys = {plane.y_lo, plane.y_hi};
    for (const auto& h : plane.holes) {
        g.xs.push_back(h.x1);
        g.xs.push_back(h.x2);
        g.ys.push_back(h.y1);
        g.ys.push_back(h.y2);
    }
    for (const auto& p : plane.marked) {
        g.xs.push_back(p.first);
        g.ys.push_back(p.second);
    }
    for (const auto& x : extra_xs)
        if (x >= plane.x_lo && x <= plane.x_hi) g.xs.push_back(x);
    for (const auto& y : extra_ys)
        if (y >= plane.y_lo && y <= plane.y_hi) g.ys.push_back(y);
    std::sort(g.xs.begin(), g.xs.end());
    g.xs.erase(std::unique(g.xs.begin(), g.xs.end()), g.xs.end());
    std::sort(g.ys.begin(), g.ys.end());
    g.ys.erase(std::unique(g.ys.begin(), g.ys.end()), g.ys.end());

    const std::size_t nx = g.xs.size(), ny = g.ys.size();
    g.h_edge.assign(nx ? nx - 1 : 0, std::vector<bool>(ny, true));
    g.v_edge.assign(nx, std::vector<bool>(ny ? ny - 1 : 0, true));
    g.cell.assign(nx ? nx - 1 : 0, std::vector<bool>(ny ? ny - 1 : 0, true));
    for (const auto& h : plane.holes) {
        for (std::size_t i = 0; i + 1 < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j)
                if (h.y1 < g.ys[j] && g.ys[j] < h.y2 &&
                    open_intervals_overlap(g.xs[i], g.xs[i + 1], h.x1, h.x2))
                    g.h_edge[i][j] = false;
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j + 1 < ny; ++j)
                if (h.x1 < g.xs[i] && g.xs[i] < h.x2 &&
                    open_intervals_overlap(g.ys[j], g.ys[j + 1], h.y1, h.y2))
                    g.v_edge[i][j] = false;
        for (std::size_t i = 0; i + 1 < nx; ++i)
            for (std::size_t j = 0; j + 1 < ny; ++j)
                if (open_intervals_overlap(g.xs[i], g.xs[i + 1], h.x1, h.x2) &&
                    open_intervals_overlap(g.ys[j], g.ys[j + 1], h.y1, h.y2))
                    g.cell[i][j] = false;
    }
    return g;
}

ClassEnumeration enumerate_classes(const PlaneGrid& grid, const PlanePoint& from,
                                   const PlanePoint& to, std::size_t cap) {
    ClassEnumeration out;
    if (to.first < from.first || to.second < from.second) return out;  // no monotone path
    const std::size_t i1 = grid.x_index(from.first), j1 = grid.y_index(from.second);
    const std::size_t i2 = grid.x_index(to.first), j2 = grid.y_index(to.second);

    std::vector<std::string> paths;
    std::string moves;
    auto dfs = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == i2 && j == j2) {
            if (paths.size() >= cap) throw SizeLimitExceeded("path enumeration exceeds cap");
            paths.push_back(moves);
            return;
        }
        if (i < i2 && grid.h_edge[i][j]) {
            moves.push_back('R');
            self(self, i + 1, j);
            moves.pop_back();
        }
        if (j < j2 && grid.v_edge[i][j]) {
            moves.push_back('U');
            self(self, i, j + 1);
            moves.pop_back();
        }
    };
    dfs(dfs, i1, j1);
    out.path_count = paths.size();

    std::map<std::string, std::size_t> index_of;
    for (std::size_t k = 0; k < paths.size(); ++k) index_of[paths[k]] = k;
    std::vector<std::size_t> parent(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) parent[k] = k;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t k = 0; k < paths.size(); ++k) {
        std::size_t i = i1, j = j1;
        for (std::size_t pos = 0; pos + 1 < paths[k].size(); ++pos) {
            if (paths[k][pos] == 'R' && paths[k][pos + 1] == 'U' && grid.cell[i][j]) {
                std::string swapped = paths[k];
                std::swap(swapped[pos], swapped[pos + 1]);
                auto it = index_of.find(swapped);
                if (it != index_of.end()) parent[find(k)] = find(it->second);
            }
            if (paths[k][pos] == 'R')
                ++i;
            else
                ++j;
        }
    }
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t k = 0; k < paths.size(); ++k) {
        std::size_t r = find(k);
        auto [it, fresh] = class_of_root.try_emplace(r, out.representatives.size());
        if (fresh) out.representatives.push_back(paths[k]);  // lex order: DFS tries R first
        out.class_of[paths[k]] = it->second;
    }
    return out;
}

ExtWeight class_weight(const PlanePoint& from, const PlanePoint& to) {
    if (to.first < from.first || to.second < from.second)
        throw ValidationError("class weight needs componentwise-ordered endpoints");
    return ExtWeight(to.first - from.first + to.second - from.second);
}

FundamentalCategoryResult fundamental_category(const HoledPlane& plane,
                                               const std::vector<Rational>& extra_xs,
                                               const std::vector<Rational>& extra_ys,
                                               std::size_t cap) {
    FundamentalCategoryResult out;
    out.grid = refine_grid(plane, extra_xs, extra_ys);
    const std::size_t n = plane.marked.size();
    auto& cat = out.category;
    for (const auto& p : plane.marked) cat.objects.push_back(point_label(p));
    out.per_pair.resize(n * n);
    out.mor_of.resize(n * n);
    cat.identity.assign(n, FiniteWeightedCategory::npos);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            auto enumed = enumerate_classes(out.grid, plane.marked[s], plane.marked[t], cap);
            auto& mor_ids = out.mor_of[s * n + t];
            for (std::size_t c = 0; c < enumed.representatives.size(); ++c) {
                FiniteWeightedCategory::Morphism m;
                m.src = s;
                m.dst = t;
                m.w = class_weight(plane.marked[s], plane.marked[t]);
                if (s == t && enumed.representatives[c].empty()) {
                    m.name = "id_" + cat.objects[s];
                    cat.identity[s] = cat.morphisms.size();
                } else {
                    m.name = cat.objects[s] + "->" + cat.objects[t] + ":" +
                             enumed.representatives[c];
                }
                mor_ids.push_back(cat.morphisms.size());
                cat.morphisms.push_back(std::move(m));
            }
            out.per_pair[s * n + t] = std::move(enumed);
        }
    const auto np = FiniteWeightedCategory::npos;
    const std::size_t m = cat.morphisms.size();
    cat.then_table.assign(m, std::vector<std::size_t>(m, np));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t c1 = 0; c1 < out.mor_of[s * n + t].size(); ++c1)
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t c2 = 0; c2 < out.mor_of[t * n + u].size(); ++c2) {
                        const std::string joined = out.per_pair[s * n + t].representatives[c1] +
                                                   out.per_pair[t * n + u].representatives[c2];
                        std::size_t cls = out.per_pair[s * n + u].class_of.at(joined);
                        cat.then_table[out.mor_of[s * n + t][c1]][out.mor_of[t * n + u][c2]] =
                            out.mor_of[s * n + u][cls];
                    }
    return out;
}

SimplicityReport simplicity_report(const HoledPlane& plane, std::size_t cap) {
    auto result = fundamental_category(plane, {}, {}, cap);
    SimplicityReport rep;
    const std::size_t n = plane.marked.size();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const auto& cls = result.per_pair[s * n + t];
            if (cls.representatives.size() > 1) rep.one_simple = false;
            // Certify each representative as a homotopic geodesic: its
            // staircase length under the l1 metric must equal the class weight.
            for (const auto& moves : cls.representatives) {
                std::size_t i = result.grid.x_index(plane.marked[s].first);
                std::size_t j = result.grid.y_index(plane.marked[s].second);
                Rational len = 0;
                for (char mv : moves) {
                    if (mv == 'R') {
                        len += result.grid.xs[i + 1] - result.grid.xs[i];
                        ++i;
                    } else {
                        len += result.grid.ys[j + 1] - result.grid.ys[j];
                        ++j;
                    }
                }
                if (!(ExtWeight(len) == class_weight(plane.marked[s], plane.marked[t])))
                    rep.geodetically_simple = false;
            }
        }
    return rep;
}

HoledPlane clip_plane(const HoledPlane& plane, const Rational& new_x_lo,
                      const Rational& new_x_hi) {
    HoledPlane out;
    out.x_lo = std::max(plane.x_lo, new_x_lo);
    out.x_hi = std::min(plane.x_hi, new_x_hi);
    out.y_lo = plane.y_lo;
    out.y_hi = plane.y_hi;
    if (!(out.x_lo < out.x_hi)) throw ValidationError("clip produces an empty plane");
    for (const auto& h : plane.holes) {
        HoledPlane::Rect c = h;
        c.x1 = std::max(c.x1, out.x_lo);
        c.x2 = std::min(c.x2, out.x_hi);
        if (c.x1 < c.x2) out.holes.push_back(c);
    }
    for (const auto& p : plane.marked)
        if (p.first >= out.x_lo && p.first <= out.x_hi) out.marked.push_back(p);
    return out;
}

VanKampenReport van_kampen_check(const HoledPlane& plane, const Rational& c1, const Rational& c2,
                                 std::size_t cap) {
    VanKampenReport rep;
    if (!(plane.x_lo < c1 && c1 < c2 && c2 < plane.x_hi))
        throw CoverViolation("need x_lo < c1 < c2 < x_hi so the open pieces cover the plane");
    // A cut through a hole interior would hand the pieces boundary strips
    // that the plane itself does not contain; hole boundaries are fine.
    for (const auto& h : plane.holes)
        for (const Rational& c : {c1, c2})
            if (h.x1 < c && c < h.x2)
                throw CoverViolation("cut line passes through a hole interior");

    HoledPlane left = clip_plane(plane, plane.x_lo, c2);
    HoledPlane right = clip_plane(plane, c1, plane.x_hi);
    HoledPlane strip = clip_plane(plane, c1, c2);
    if (strip.marked.empty())
        rep.violations.push_back("no marked points on the intersection strip");

    // All four categories are computed on restrictions of one common grid,
    // so classes transfer between them by their move strings.
    PlaneGrid common = refine_grid(plane, {c1, c2}, {});
    auto CX = fundamental_category(plane, common.xs, common.ys, cap);
    auto CL = fundamental_category(left, common.xs, common.ys, cap);
    auto CR = fundamental_category(right, common.xs, common.ys, cap);
    auto C0 = fundamental_category(strip, common.xs, common.ys, cap);

    // Inclusion-induced functors match objects by coordinates and classes by
    // move strings (all four grids agree on the strip columns).
    auto make_inclusion = [&](const FundamentalCategoryResult& sub, const HoledPlane& sub_plane,
                              const FundamentalCategoryResult& sup, const HoledPlane& sup_plane) {
        WFunctor F;
        const std::size_t ns = sub_plane.marked.size();
        F.obj.resize(ns);
        for (std::size_t i = 0; i < ns; ++i) {
            auto it = std::find(sup_plane.marked.begin(), sup_plane.marked.end(),
                                sub_plane.marked[i]);
            if (it == sup_plane.marked.end())
                throw ValidationError("marked point missing from the larger piece");
            F.obj[i] = static_cast<std::size_t>(it - sup_plane.marked.begin());
        }
        const std::size_t nsup = sup_plane.marked.size();
        F.mor.resize(sub.category.morphisms.size());
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t t = 0; t < ns; ++t) {
                const auto& cls = sub.per_pair[s * ns + t];
                for (std::size_t c = 0; c < cls.representatives.size(); ++c) {
                    const auto& sup_cls = sup.per_pair[F.obj[s] * nsup + F.obj[t]];
                    std::size_t sup_c = sup_cls.class_of.at(cls.representatives[c]);
                    F.mor[sub.mor_of[s * ns + t][c]] =
                        sup.mor_of[F.obj[s] * nsup + F.obj[t]][sup_c];
                }
            }
        return F;
    };

    WFunctor u1 = make_inclusion(C0, strip, CL, left);
    WFunctor u2 = make_inclusion(C0, strip, CR, right);
    PushoutResult po = pushout_wcat(C0.category, CL.category, CR.category, u1, u2);

    // Comparison functor pushout -> CX through the two inclusions.
    WFunctor incl_L = make_inclusion(CL, left, CX, plane);
    WFunctor incl_R = make_inclusion(CR, right, CX, plane);
    rep.pushout_morphisms = po.category.morphisms.size();
    rep.direct_morphisms = CX.category.morphisms.size();

    // Map each pushout object/morphism into CX: objects by label, morphisms
    // by composing the images of the letters of a representing word. The
    // pushout names morphisms by dot-joined generator names, which we avoid
    // relying on; instead rebuild via the injections.
    std::vector<std::size_t> obj_map(po.category.objects.size(), FiniteWeightedCategory::npos);
    for (std::size_t x = 0; x < CL.category.objects.size(); ++x)
        obj_map[po.inj1.obj[x]] = incl_L.obj[x];
    for (std::size_t x = 0; x < CR.category.objects.size(); ++x)
        obj_map[po.inj2.obj[x]] = incl_R.obj[x];

    // Images of the pushout generators under the cocone (incl_L, incl_R).
    std::vector<std::size_t> mor_map(po.category.morphisms.size(),
                                     FiniteWeightedCategory::npos);
    for (std::size_t x = 0; x < po.category.objects.size(); ++x)
        mor_map[po.category.identity[x]] = CX.category.identity[obj_map[x]];
    for (std::size_t f = 0; f < CL.category.morphisms.size(); ++f)
        mor_map[po.inj1.mor[f]] = incl_L.mor[f];
    for (std::size_t f = 0; f < CR.category.morphisms.size(); ++f)
        mor_map[po.inj2.mor[f]] = incl_R.mor[f];
    // Close under composition until every class has an image.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t a = 0; a < po.category.morphisms.size(); ++a)
            for (std::size_t b = 0; b < po.category.morphisms.size(); ++b) {
                std::size_t c = po.category.then_table[a][b];
                if (c == FiniteWeightedCategory::npos) continue;
                if (mor_map[a] == FiniteWeightedCategory::npos ||
                    mor_map[b] == FiniteWeightedCategory::npos)
                    continue;
                std::size_t img = CX.category.then_table[mor_map[a]][mor_map[b]];
                if (mor_map[c] == FiniteWeightedCategory::npos) {
                    mor_map[c] = img;
                    progress = true;
                } else if (mor_map[c] != img) {
                    rep.violations.push_back("comparison functor is not well defined at " +
                                             po.category.morphisms[c].name);
                }
            }
    }
    for (std::size_t c = 0; c < po.category.morphisms.size(); ++c)
        if (mor_map[c] == FiniteWeightedCategory::npos)
            rep.violations.push_back("pushout morphism not generated by the pieces: " +
                                     po.category.morphisms[c].name);

    // Object bijectivity.
    std::vector<std::size_t> obj_seen(CX.category.objects.size(), 0);
    for (auto o : obj_map)
        if (o != FiniteWeightedCategory::npos) ++obj_seen[o];
    for (std::size_t o = 0; o < obj_seen.size(); ++o)
        if (obj_seen[o] != 1)
            rep.violations.push_back("comparison is not bijective on objects at " +
                                     CX.category.objects[o]);

    // Hom-set bijectivity and exact weights.
    if (rep.violations.empty()) {
        std::vector<std::size_t> hits(CX.category.morphisms.size(), 0);
        for (std::size_t c = 0; c < po.category.morphisms.size(); ++c) {
            ++hits[mor_map[c]];
            if (!(po.category.morphisms[c].w == CX.category.morphisms[mor_map[c]].w))
                rep.violations.push_back("weight mismatch at " + po.category.morphisms[c].name +
                                         ": pushout " + po.category.morphisms[c].w.to_string() +
                                         " vs direct " +
                                         CX.category.morphisms[mor_map[c]].w.to_string());
        }
        for (std::size_t f = 0; f < hits.size(); ++f)
            if (hits[f] != 1)
                rep.violations.push_back("comparison is not bijective at " +
                                         CX.category.morphisms[f].name + " (hit " +
                                         std::to_string(hits[f]) + " times)");
    }
    rep.is_isomorphism = rep.violations.empty();
    return rep;
}

}  // namespace wtop
