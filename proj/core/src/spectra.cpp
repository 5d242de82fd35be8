#include <algorithm>

#include "wtop/weighted_category.hpp"

namespace wtop {

namespace {

struct RetractData {
    WFunctor reflector;
    WNatTrans unit;
    ExtWeight weight;
};

/// Tries to equip the full subcategory on `subset` with a future retract:
/// universal arrows eta_x : x -> p(x) into the subset, each of weight <= 1,
/// identity on the subset, inducing a reflector of finite Lipschitz weight.
std::optional<RetractData> try_retract(const FiniteWeightedCategory& C,
                                       const std::vector<std::size_t>& subset) {
    const std::size_t n = C.objects.size();
    std::vector<bool> in_subset(n, false);
    for (auto x : subset) in_subset[x] = true;

    const ExtWeight one{Rational(1)};
    // Universal-arrow candidates per object outside the subset.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cands(n);  // (p(x), eta_x)
    for (std::size_t x = 0; x < n; ++x) {
        if (in_subset[x]) {
            cands[x] = {{x, C.identity[x]}};
            continue;
        }
        for (auto tgt : subset)
            for (auto u : C.hom(x, tgt)) {
                if (C.morphisms[u].w > one) continue;
                // Precomposition with u must biject hom(tgt, f) onto hom(x, f)
                // for every f in the subset.
                bool universal = true;
                for (auto f : subset) {
                    auto from_tgt = C.hom(tgt, f);
                    auto from_x = C.hom(x, f);
                    if (from_tgt.size() != from_x.size()) {
                        universal = false;
                        break;
                    }
                    std::vector<std::size_t> images;
                    for (auto v : from_tgt) images.push_back(C.then(u, v));
                    std::sort(images.begin(), images.end());
                    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
                        universal = false;
                        break;
                    }
                    std::sort(from_x.begin(), from_x.end());
                    if (images != from_x) {
                        universal = false;
                        break;
                    }
                }
                if (universal) cands[x].push_back({tgt, u});
            }
        if (cands[x].empty()) return std::nullopt;
    }

    // Any combination of universal arrows; sizes here are tiny.
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        WFunctor p;
        WNatTrans eta;
        p.obj.resize(n);
        eta.component.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
            p.obj[x] = cands[x][pick[x]].first;
            eta.component[x] = cands[x][pick[x]].second;
        }
        // p on morphisms: the unique v with eta_x then v = a then eta_y.
        bool ok = true;
        p.mor.assign(C.morphisms.size(), FiniteWeightedCategory::npos);
        for (std::size_t a = 0; ok && a < C.morphisms.size(); ++a) {
            std::size_t x = C.morphisms[a].src, y = C.morphisms[a].dst;
            std::size_t rhs = C.then(a, eta.component[y]);
            std::size_t found = FiniteWeightedCategory::npos;
            for (auto v : C.hom(p.obj[x], p.obj[y]))
                if (C.then(eta.component[x], v) == rhs) {
                    if (found != FiniteWeightedCategory::npos) {
                        ok = false;  // not unique
                        break;
                    }
                    found = v;
                }
            if (found == FiniteWeightedCategory::npos) ok = false;
            p.mor[a] = found;
        }
        if (ok) {
            try {
                check_functor(C, C, p);
                check_natural(C, C, identity_functor(C), p, eta);
            } catch (const ValidationError&) {
                ok = false;
            }
        }
        if (ok) {
            ExtWeight w = functor_lipschitz_weight(C, C, p);
            if (w.is_finite()) return RetractData{std::move(p), std::move(eta), std::move(w)};
        }
        bool done = true;
        for (std::size_t k = n; k > 0;) {
            --k;
            if (++pick[k] < cands[k].size()) {
                done = false;
                break;
            }
            pick[k] = 0;
        }
        if (done) return std::nullopt;
    }
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

SpectrumResult future_spectrum(const FiniteWeightedCategory& C) {
    const std::size_t n = C.objects.size();
    const ExtWeight one{Rational(1)};
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<std::vector<std::size_t>> subsets;
        subsets_of_size(n, size, subsets);  // already in lexicographic order
        SpectrumResult result;
        bool found = false;
        for (const auto& s : subsets) {
            auto data = try_retract(C, s);
            if (!data) continue;
            if (!found) {
                found = true;
                result.objects = s;
                result.reflector = std::move(data->reflector);
                result.unit = std::move(data->unit);
                result.reflector_weight = std::move(data->weight);
                result.reflector_elementary = result.reflector_weight <= one;
            } else {
                result.multiple_minima = true;
            }
        }
        if (found) return result;
    }
    throw NoRetractFound("no reflective subcategory found (identity retract should always work)");
}

SpectrumResult past_spectrum(const FiniteWeightedCategory& C) {
    SpectrumResult dual = future_spectrum(opposite_wcat(C));
    return dual;  // objects and tables index identically into C
}

bool admits_future_retract(const FiniteWeightedCategory& C,
                           const std::vector<std::size_t>& subset) {
    return try_retract(C, subset).has_value();
}

}  // namespace wtop
