#include "wtop/weighted_category.hpp"

#include <algorithm>
#include <map>

namespace wtop {

std::size_t FiniteWeightedCategory::object_index(const std::string& name) const {
    auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end()) throw UnknownObject(name);
    return static_cast<std::size_t>(it - objects.begin());
}

std::size_t FiniteWeightedCategory::morphism_index(const std::string& name) const {
    for (std::size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].name == name) return i;
    throw ValidationError("unknown morphism: " + name);
}

std::vector<std::size_t> FiniteWeightedCategory::hom(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].src == x && morphisms[i].dst == y) out.push_back(i);
    return out;
}

FiniteWeightedCategory validate_wcat(FiniteWeightedCategory cat) {
    const std::size_t n = cat.objects.size(), m = cat.morphisms.size();
    if (cat.identity.size() != n) throw NotACategory("one identity required per object");
    if (cat.then_table.size() != m) throw NotACategory("composition table has wrong shape");
    for (const auto& row : cat.then_table)
        if (row.size() != m) throw NotACategory("composition table has wrong shape");
    for (const auto& mor : cat.morphisms)
        if (mor.src >= n || mor.dst >= n) throw NotACategory("morphism endpoint off the objects");
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t e = cat.identity[x];
        if (e >= m || cat.morphisms[e].src != x || cat.morphisms[e].dst != x)
            throw NotACategory("identity of " + cat.objects[x] + " is not an endomorphism");
    }
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g) {
            std::size_t c = cat.then_table[f][g];
            if (!cat.composable(f, g)) {
                if (c != FiniteWeightedCategory::npos)
                    throw NotACategory("composite defined on a non-composable pair (" +
                                       cat.morphisms[f].name + ", " + cat.morphisms[g].name + ")");
                continue;
            }
            if (c == FiniteWeightedCategory::npos || c >= m)
                throw NotACategory("missing composite for (" + cat.morphisms[f].name + ", " +
                                   cat.morphisms[g].name + ")");
            if (cat.morphisms[c].src != cat.morphisms[f].src ||
                cat.morphisms[c].dst != cat.morphisms[g].dst)
                throw NotACategory("composite endpoints wrong for (" + cat.morphisms[f].name +
                                   ", " + cat.morphisms[g].name + ")");
        }
    for (std::size_t f = 0; f < m; ++f) {
        if (cat.then_table[cat.identity[cat.morphisms[f].src]][f] != f ||
            cat.then_table[f][cat.identity[cat.morphisms[f].dst]] != f)
            throw NotACategory("identity law fails at " + cat.morphisms[f].name);
    }
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g) {
            if (!cat.composable(f, g)) continue;
            for (std::size_t h = 0; h < m; ++h) {
                if (!cat.composable(g, h)) continue;
                if (cat.then_table[cat.then_table[f][g]][h] !=
                    cat.then_table[f][cat.then_table[g][h]])
                    throw NotACategory("associativity fails at (" + cat.morphisms[f].name + ", " +
                                       cat.morphisms[g].name + ", " + cat.morphisms[h].name + ")");
            }
        }
    for (std::size_t x = 0; x < n; ++x)
        if (!cat.morphisms[cat.identity[x]].w.is_zero())
            throw WeightAxiomViolation("identity of " + cat.objects[x] + " has nonzero weight");
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g) {
            if (!cat.composable(f, g)) continue;
            if (cat.morphisms[cat.then_table[f][g]].w > cat.morphisms[f].w + cat.morphisms[g].w)
                throw WeightAxiomViolation("subadditivity fails at (" + cat.morphisms[f].name +
                                           ", " + cat.morphisms[g].name + ")");
        }
    return cat;
}

bool is_valid_wcat(const FiniteWeightedCategory& cat) {
    try {
        validate_wcat(cat);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

FiniteWeightedCategory terminal_category() {
    FiniteWeightedCategory cat;
    cat.objects = {"*"};
    cat.morphisms = {{"id_*", 0, 0, ExtWeight::zero()}};
    cat.identity = {0};
    cat.then_table = {{0}};
    return cat;
}

FiniteWeightedCategory directed_interval() {
    FiniteWeightedCategory cat;
    cat.objects = {"0", "1"};
    cat.morphisms = {{"id_0", 0, 0, ExtWeight::zero()},
                     {"id_1", 1, 1, ExtWeight::zero()},
                     {"step", 0, 1, ExtWeight(Rational(1))}};
    cat.identity = {0, 1};
    const auto np = FiniteWeightedCategory::npos;
    cat.then_table = {{0, np, 2}, {np, 1, np}, {np, 2, np}};
    return cat;
}

FiniteWeightedCategory opposite_wcat(const FiniteWeightedCategory& cat) {
    FiniteWeightedCategory out = cat;
    for (auto& m : out.morphisms) std::swap(m.src, m.dst);
    const std::size_t n = cat.morphisms.size();
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) out.then_table[f][g] = cat.then_table[g][f];
    return out;
}

FiniteWeightedCategory scale_wcat(const FiniteWeightedCategory& cat, const Rational& lambda) {
    FiniteWeightedCategory out = cat;
    for (auto& m : out.morphisms) m.w = m.w.scaled(lambda);
    return out;
}

SubcategoryResult full_subcategory(const FiniteWeightedCategory& cat,
                                   const std::vector<std::size_t>& objects) {
    SubcategoryResult out;
    out.object_map = objects;
    std::vector<std::size_t> obj_pos(cat.objects.size(), FiniteWeightedCategory::npos);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i] >= cat.objects.size()) throw UnknownObject(std::to_string(objects[i]));
        obj_pos[objects[i]] = i;
        out.category.objects.push_back(cat.objects[objects[i]]);
    }
    std::vector<std::size_t> mor_pos(cat.morphisms.size(), FiniteWeightedCategory::npos);
    for (std::size_t f = 0; f < cat.morphisms.size(); ++f) {
        const auto& m = cat.morphisms[f];
        if (obj_pos[m.src] == FiniteWeightedCategory::npos ||
            obj_pos[m.dst] == FiniteWeightedCategory::npos)
            continue;
        mor_pos[f] = out.category.morphisms.size();
        out.morphism_map.push_back(f);
        out.category.morphisms.push_back({m.name, obj_pos[m.src], obj_pos[m.dst], m.w});
    }
    out.category.identity.resize(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i)
        out.category.identity[i] = mor_pos[cat.identity[objects[i]]];
    const auto np = FiniteWeightedCategory::npos;
    const std::size_t m = out.category.morphisms.size();
    out.category.then_table.assign(m, std::vector<std::size_t>(m, np));
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g) {
            if (!out.category.composable(f, g)) continue;
            out.category.then_table[f][g] =
                mor_pos[cat.then_table[out.morphism_map[f]][out.morphism_map[g]]];
        }
    return out;
}

WFunctor identity_functor(const FiniteWeightedCategory& cat) {
    WFunctor F;
    F.obj.resize(cat.objects.size());
    F.mor.resize(cat.morphisms.size());
    for (std::size_t i = 0; i < F.obj.size(); ++i) F.obj[i] = i;
    for (std::size_t i = 0; i < F.mor.size(); ++i) F.mor[i] = i;
    return F;
}

void check_functor(const FiniteWeightedCategory& C, const FiniteWeightedCategory& D,
                   const WFunctor& F) {
    if (F.obj.size() != C.objects.size() || F.mor.size() != C.morphisms.size())
        throw NotACategory("functor tables have wrong shape");
    for (std::size_t i = 0; i < F.obj.size(); ++i)
        if (F.obj[i] >= D.objects.size()) throw NotACategory("functor object image off target");
    for (std::size_t f = 0; f < F.mor.size(); ++f) {
        if (F.mor[f] >= D.morphisms.size()) throw NotACategory("functor morphism image off target");
        if (D.morphisms[F.mor[f]].src != F.obj[C.morphisms[f].src] ||
            D.morphisms[F.mor[f]].dst != F.obj[C.morphisms[f].dst])
            throw NotACategory("functor image endpoints wrong at " + C.morphisms[f].name);
    }
    for (std::size_t x = 0; x < C.objects.size(); ++x)
        if (F.mor[C.identity[x]] != D.identity[F.obj[x]])
            throw NotACategory("functor does not preserve the identity of " + C.objects[x]);
    for (std::size_t f = 0; f < F.mor.size(); ++f)
        for (std::size_t g = 0; g < F.mor.size(); ++g) {
            if (!C.composable(f, g)) continue;
            if (F.mor[C.then_table[f][g]] != D.then_table[F.mor[f]][F.mor[g]])
                throw NotACategory("functor does not preserve (" + C.morphisms[f].name + " then " +
                                   C.morphisms[g].name + ")");
        }
}

ExtWeight functor_lipschitz_weight(const FiniteWeightedCategory& C,
                                   const FiniteWeightedCategory& D, const WFunctor& F) {
    ExtWeight best = ExtWeight::zero();
    for (std::size_t f = 0; f < C.morphisms.size(); ++f)
        best = max(best, lipschitz_ratio(C.morphisms[f].w, D.morphisms[F.mor[f]].w));
    return best;
}

FiniteWeightedCategory tensor_wcat(const FiniteWeightedCategory& X,
                                   const FiniteWeightedCategory& Y) {
    FiniteWeightedCategory out;
    const std::size_t nx = X.objects.size(), ny = Y.objects.size();
    auto obj_id = [&](std::size_t a, std::size_t b) { return a * ny + b; };
    for (std::size_t a = 0; a < nx; ++a)
        for (std::size_t b = 0; b < ny; ++b)
            out.objects.push_back("(" + X.objects[a] + "," + Y.objects[b] + ")");
    const std::size_t mx = X.morphisms.size(), my = Y.morphisms.size();
    auto mor_id = [&](std::size_t f, std::size_t g) { return f * my + g; };
    for (std::size_t f = 0; f < mx; ++f)
        for (std::size_t g = 0; g < my; ++g) {
            FiniteWeightedCategory::Morphism m;
            m.name = "(" + X.morphisms[f].name + "," + Y.morphisms[g].name + ")";
            m.src = obj_id(X.morphisms[f].src, Y.morphisms[g].src);
            m.dst = obj_id(X.morphisms[f].dst, Y.morphisms[g].dst);
            m.w = X.morphisms[f].w + Y.morphisms[g].w;
            out.morphisms.push_back(std::move(m));
        }
    out.identity.resize(nx * ny);
    for (std::size_t a = 0; a < nx; ++a)
        for (std::size_t b = 0; b < ny; ++b)
            out.identity[obj_id(a, b)] = mor_id(X.identity[a], Y.identity[b]);
    const auto np = FiniteWeightedCategory::npos;
    out.then_table.assign(mx * my, std::vector<std::size_t>(mx * my, np));
    for (std::size_t f = 0; f < mx; ++f)
        for (std::size_t g = 0; g < my; ++g)
            for (std::size_t f2 = 0; f2 < mx; ++f2)
                for (std::size_t g2 = 0; g2 < my; ++g2) {
                    if (!X.composable(f, f2) || !Y.composable(g, g2)) continue;
                    out.then_table[mor_id(f, g)][mor_id(f2, g2)] =
                        mor_id(X.then_table[f][f2], Y.then_table[g][g2]);
                }
    return out;
}

std::vector<WFunctor> enumerate_functors(const FiniteWeightedCategory& C,
                                         const FiniteWeightedCategory& D, bool one_lipschitz,
                                         std::size_t cap) {
    std::vector<WFunctor> out;
    const std::size_t nc = C.objects.size(), nd = D.objects.size();
    if (nd == 0) {
        if (nc == 0) out.push_back(WFunctor{});
        return out;
    }
    std::vector<std::size_t> obj(nc, 0);
    std::size_t work = 0;
    auto bump_work = [&] {
        if (++work > cap) throw SizeLimitExceeded("functor enumeration exceeds cap");
    };
    while (true) {
        // Morphism images constrained hom-by-hom, with identities forced.
        std::vector<std::size_t> mor(C.morphisms.size(), FiniteWeightedCategory::npos);
        std::vector<std::size_t> free;  // morphisms still to assign
        bool feasible = true;
        for (std::size_t f = 0; f < C.morphisms.size(); ++f) {
            if (C.is_identity(f))
                mor[f] = D.identity[obj[C.morphisms[f].src]];
            else
                free.push_back(f);
        }
        if (feasible) {
            std::vector<std::vector<std::size_t>> cands(free.size());
            for (std::size_t k = 0; k < free.size(); ++k) {
                std::size_t f = free[k];
                for (std::size_t d = 0; d < D.morphisms.size(); ++d) {
                    if (D.morphisms[d].src != obj[C.morphisms[f].src] ||
                        D.morphisms[d].dst != obj[C.morphisms[f].dst])
                        continue;
                    if (one_lipschitz && D.morphisms[d].w > C.morphisms[f].w) continue;
                    cands[k].push_back(d);
                }
                if (cands[k].empty()) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                std::vector<std::size_t> pick(free.size(), 0);
                bool more = true;
                while (more) {
                    bump_work();
                    for (std::size_t k = 0; k < free.size(); ++k) mor[free[k]] = cands[k][pick[k]];
                    bool ok = true;
                    for (std::size_t f = 0; ok && f < C.morphisms.size(); ++f)
                        for (std::size_t g = 0; ok && g < C.morphisms.size(); ++g) {
                            if (!C.composable(f, g)) continue;
                            if (mor[C.then_table[f][g]] != D.then_table[mor[f]][mor[g]]) ok = false;
                        }
                    if (ok) out.push_back(WFunctor{obj, mor});
                    more = false;
                    for (std::size_t k = free.size(); k > 0;) {
                        --k;
                        if (++pick[k] < cands[k].size()) {
                            more = true;
                            break;
                        }
                        pick[k] = 0;
                    }
                }
            }
        }
        // Next object assignment.
        bool done = true;
        for (std::size_t k = nc; k > 0;) {
            --k;
            if (++obj[k] < nd) {
                done = false;
                break;
            }
            obj[k] = 0;
        }
        if (done) break;
    }
    return out;
}

namespace {

std::vector<WNatTrans> enumerate_nat_trans(const FiniteWeightedCategory& C,
                                           const FiniteWeightedCategory& D, const WFunctor& F,
                                           const WFunctor& G) {
    std::vector<WNatTrans> out;
    const std::size_t nc = C.objects.size();
    std::vector<std::vector<std::size_t>> cands(nc);
    for (std::size_t x = 0; x < nc; ++x) {
        cands[x] = D.hom(F.obj[x], G.obj[x]);
        if (cands[x].empty()) return out;
    }
    std::vector<std::size_t> pick(nc, 0);
    while (true) {
        WNatTrans phi;
        phi.component.resize(nc);
        for (std::size_t x = 0; x < nc; ++x) phi.component[x] = cands[x][pick[x]];
        bool natural = true;
        for (std::size_t f = 0; natural && f < C.morphisms.size(); ++f) {
            std::size_t x = C.morphisms[f].src, y = C.morphisms[f].dst;
            if (D.then_table[phi.component[x]][G.mor[f]] !=
                D.then_table[F.mor[f]][phi.component[y]])
                natural = false;
        }
        if (natural) out.push_back(std::move(phi));
        bool done = true;
        for (std::size_t k = nc; k > 0;) {
            --k;
            if (++pick[k] < cands[k].size()) {
                done = false;
                break;
            }
            pick[k] = 0;
        }
        if (done) break;
    }
    return out;
}

}  // namespace

HomWcatResult hom_wcat(const FiniteWeightedCategory& Y, const FiniteWeightedCategory& Z,
                       std::size_t cap) {
    HomWcatResult out;
    out.functors = enumerate_functors(Y, Z, /*one_lipschitz=*/true, cap);
    const std::size_t n = out.functors.size();
    auto& cat = out.category;
    for (std::size_t i = 0; i < n; ++i) cat.objects.push_back("f" + std::to_string(i));

    // Morphisms: all natural transformations between each ordered pair.
    struct Entry {
        std::size_t src, dst;
        WNatTrans phi;
    };
    std::vector<Entry> entries;
    std::map<std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>, std::size_t>
        lookup;
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
            for (auto& phi : enumerate_nat_trans(Y, Z, out.functors[h], out.functors[k])) {
                if (entries.size() >= cap)
                    throw SizeLimitExceeded("internal hom enumeration exceeds cap");
                lookup[{{h, k}, phi.component}] = entries.size();
                entries.push_back({h, k, std::move(phi)});
            }
    cat.identity.assign(n, FiniteWeightedCategory::npos);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        FiniteWeightedCategory::Morphism m;
        m.name = "n" + std::to_string(e);
        m.src = entries[e].src;
        m.dst = entries[e].dst;
        ExtWeight sup = ExtWeight::zero();
        for (auto c : entries[e].phi.component) sup = max(sup, Z.morphisms[c].w);
        m.w = std::move(sup);
        cat.morphisms.push_back(std::move(m));
        if (entries[e].src == entries[e].dst) {
            bool is_id = true;
            for (std::size_t x = 0; x < Y.objects.size(); ++x)
                if (entries[e].phi.component[x] != Z.identity[out.functors[entries[e].src].obj[x]])
                    is_id = false;
            if (is_id) cat.identity[entries[e].src] = e;
        }
    }
    const auto np = FiniteWeightedCategory::npos;
    cat.then_table.assign(entries.size(), std::vector<std::size_t>(entries.size(), np));
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = 0; b < entries.size(); ++b) {
            if (entries[a].dst != entries[b].src) continue;
            std::vector<std::size_t> comp(Y.objects.size());
            for (std::size_t x = 0; x < Y.objects.size(); ++x)
                comp[x] = Z.then_table[entries[a].phi.component[x]][entries[b].phi.component[x]];
            cat.then_table[a][b] = lookup.at({{entries[a].src, entries[b].dst}, comp});
        }
    return out;
}

void check_natural(const FiniteWeightedCategory& C, const FiniteWeightedCategory& D,
                   const WFunctor& F, const WFunctor& G, const WNatTrans& phi) {
    if (phi.component.size() != C.objects.size())
        throw NotACategory("transformation needs one component per object");
    for (std::size_t x = 0; x < C.objects.size(); ++x) {
        std::size_t c = phi.component[x];
        if (c >= D.morphisms.size() || D.morphisms[c].src != F.obj[x] ||
            D.morphisms[c].dst != G.obj[x])
            throw NotACategory("component at " + C.objects[x] + " has wrong endpoints");
    }
    for (std::size_t f = 0; f < C.morphisms.size(); ++f) {
        std::size_t x = C.morphisms[f].src, y = C.morphisms[f].dst;
        if (D.then_table[phi.component[x]][G.mor[f]] != D.then_table[F.mor[f]][phi.component[y]])
            throw NotACategory("naturality square fails at " + C.morphisms[f].name);
    }
}

NatTransWeights nat_trans_weights(const FiniteWeightedCategory& C,
                                  const FiniteWeightedCategory& D, const WFunctor& F,
                                  const WFunctor& G, const WNatTrans& phi) {
    NatTransWeights out;
    out.reduced = ExtWeight::zero();
    for (auto c : phi.component) out.reduced = max(out.reduced, D.morphisms[c].w);
    out.global = max(out.reduced, max(functor_lipschitz_weight(C, D, F),
                                      functor_lipschitz_weight(C, D, G)));
    return out;
}

FutureEquivalenceReport check_future_equivalence(const FiniteWeightedCategory& C,
                                                 const FiniteWeightedCategory& D,
                                                 const WFunctor& f, const WFunctor& g,
                                                 const WNatTrans& phi, const WNatTrans& psi) {
    FutureEquivalenceReport rep;
    auto complain = [&](const std::string& msg) { rep.violations.push_back(msg); };
    try {
        check_functor(C, D, f);
        check_functor(D, C, g);
        // gf : C -> C and fg : D -> D.
        WFunctor gf, fg;
        gf.obj.resize(C.objects.size());
        gf.mor.resize(C.morphisms.size());
        for (std::size_t x = 0; x < C.objects.size(); ++x) gf.obj[x] = g.obj[f.obj[x]];
        for (std::size_t a = 0; a < C.morphisms.size(); ++a) gf.mor[a] = g.mor[f.mor[a]];
        fg.obj.resize(D.objects.size());
        fg.mor.resize(D.morphisms.size());
        for (std::size_t y = 0; y < D.objects.size(); ++y) fg.obj[y] = f.obj[g.obj[y]];
        for (std::size_t b = 0; b < D.morphisms.size(); ++b) fg.mor[b] = f.mor[g.mor[b]];
        check_natural(C, C, identity_functor(C), gf, phi);
        check_natural(D, D, identity_functor(D), fg, psi);
        bool coherent = true;
        for (std::size_t x = 0; x < C.objects.size(); ++x)
            if (f.mor[phi.component[x]] != psi.component[f.obj[x]]) {
                coherent = false;
                complain("coherence f phi = psi f fails at " + C.objects[x]);
            }
        for (std::size_t y = 0; y < D.objects.size(); ++y)
            if (phi.component[g.obj[y]] != g.mor[psi.component[y]]) {
                coherent = false;
                complain("coherence phi g = g psi fails at " + D.objects[y]);
            }
        rep.valid = coherent;
    } catch (const ValidationError& e) {
        complain(e.what());
        rep.valid = false;
        return rep;
    }
    rep.f_weight = functor_lipschitz_weight(C, D, f);
    rep.g_weight = functor_lipschitz_weight(D, C, g);
    rep.phi_reduced = ExtWeight::zero();
    for (auto c : phi.component) rep.phi_reduced = max(rep.phi_reduced, C.morphisms[c].w);
    rep.psi_reduced = ExtWeight::zero();
    for (auto c : psi.component) rep.psi_reduced = max(rep.psi_reduced, D.morphisms[c].w);
    rep.weights_finite = rep.f_weight.is_finite() && rep.g_weight.is_finite() &&
                         rep.phi_reduced.is_finite() && rep.psi_reduced.is_finite();
    rep.units_elementary =
        rep.phi_reduced <= ExtWeight(Rational(1)) && rep.psi_reduced <= ExtWeight(Rational(1));
    rep.functors_one_lipschitz = rep.f_weight <= ExtWeight(Rational(1)) &&
                                 rep.g_weight <= ExtWeight(Rational(1));
    if (!rep.weights_finite) complain("some Lipschitz or reduced weight is infinite");
    return rep;
}

WeightedMonoid homotopy_monoid(const FiniteWeightedCategory& C, const std::string& object) {
    std::size_t x = C.object_index(object);
    WeightedMonoid out;
    std::vector<std::size_t> endo = C.hom(x, x);
    std::vector<std::size_t> pos(C.morphisms.size(), FiniteWeightedCategory::npos);
    for (std::size_t k = 0; k < endo.size(); ++k) {
        pos[endo[k]] = k;
        out.elements.push_back(C.morphisms[endo[k]].name);
        out.weights.push_back(C.morphisms[endo[k]].w);
        if (endo[k] == C.identity[x]) out.unit = k;
    }
    out.op.assign(endo.size(), std::vector<std::size_t>(endo.size()));
    for (std::size_t a = 0; a < endo.size(); ++a)
        for (std::size_t b = 0; b < endo.size(); ++b)
            out.op[a][b] = pos[C.then_table[endo[a]][endo[b]]];
    return out;
}

}  // namespace wtop
