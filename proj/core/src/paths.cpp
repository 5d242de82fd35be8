#include "wtop/paths.hpp"

#include <algorithm>

namespace wtop {

namespace {

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

Rational floor_rat(const Rational& x) { return Rational(floor_div(numerator(x), denominator(x))); }

Rational mod1(const Rational& x) { return x - floor_rat(x); }

std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

AnalyticModel AnalyticModel::interval(Rational lo, Rational hi, std::size_t power) {
    if (!(lo < hi)) throw ValidationError("interval requires lo < hi");
    return {ModelKind::DeltaInterval, std::move(lo), std::move(hi), power, false};
}

bool AnalyticModel::same_as(const AnalyticModel& o) const {
    if (kind != o.kind || power != o.power || reversed != o.reversed) return false;
    if (kind == ModelKind::DeltaInterval && (lo != o.lo || hi != o.hi)) return false;
    return true;
}

ExtWeight AnalyticModel::distance(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const {
    if (x.size() != power || y.size() != power)
        throw ValidationError("point arity does not match the model's tensor power");
    ExtWeight total = ExtWeight::zero();
    for (std::size_t c = 0; c < power; ++c) {
        Rational o = reversed ? x[c] - y[c] : y[c] - x[c];
        if (kind == ModelKind::DeltaCircle) {
            total += ExtWeight(mod1(o));
        } else {
            if (o < 0) return ExtWeight::infinity();
            total += ExtWeight(o);
        }
    }
    return total;
}

PLPath validate_path(PLPath path) {
    if (path.times.size() < 2) throw ValidationError("a path needs at least two breakpoints");
    if (path.times.size() != path.values.size())
        throw ValidationError("breakpoint times and values differ in count");
    if (path.times.front() != 0 || path.times.back() != 1)
        throw ValidationError("breakpoint times must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < path.times.size(); ++i)
        if (!(path.times[i] < path.times[i + 1]))
            throw ValidationError("breakpoint times must be strictly increasing");
    for (const auto& v : path.values) {
        if (v.size() != path.model.power)
            throw ValidationError("value arity does not match the model's tensor power");
        if (path.model.kind == ModelKind::DeltaInterval)
            for (const auto& c : v)
                if (c < path.model.lo || c > path.model.hi)
                    throw ValidationError("interval path value out of range");
    }
    return path;
}

ChainPath validate_chain(ChainPath chain) {
    if (chain.vertices.empty()) throw ValidationError("a chain path needs at least one vertex");
    for (auto v : chain.vertices)
        if (v >= chain.space.size()) throw ValidationError("chain vertex off the space");
    return chain;
}

ExtWeight span(const PLPath& path) {
    ExtWeight total = ExtWeight::zero();
    const auto& m = path.model;
    for (std::size_t c = 0; c < m.power; ++c) {
        bool backward = false;
        Rational forward = 0;
        for (std::size_t i = 0; i + 1 < path.values.size(); ++i) {
            Rational o = m.reversed ? path.values[i][c] - path.values[i + 1][c]
                                    : path.values[i + 1][c] - path.values[i][c];
            if (o < 0)
                backward = true;
            else
                forward += o;
        }
        if (m.kind == ModelKind::DeltaCircle) {
            // Any backward motion, or winding >= 1, pushes the sup of the
            // pairwise circle distances to 1.
            if (backward || forward >= 1)
                total += ExtWeight(Rational(1));
            else
                total += ExtWeight(forward);
        } else {
            if (backward) return ExtWeight::infinity();
            total += ExtWeight(forward);
        }
    }
    return total;
}

ExtWeight span(const ChainPath& chain) {
    ExtWeight sup = ExtWeight::zero();
    for (std::size_t i = 0; i < chain.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < chain.vertices.size(); ++j)
            sup = max(sup, chain.space.d[chain.vertices[i]][chain.vertices[j]]);
    return sup;
}

ExtWeight length(const PLPath& path) {
    ExtWeight total = ExtWeight::zero();
    const auto& m = path.model;
    for (std::size_t c = 0; c < m.power; ++c) {
        Rational sum = 0;
        for (std::size_t i = 0; i + 1 < path.values.size(); ++i) {
            Rational o = m.reversed ? path.values[i][c] - path.values[i + 1][c]
                                    : path.values[i + 1][c] - path.values[i][c];
            if (o < 0) return ExtWeight::infinity();
            sum += o;
        }
        total += ExtWeight(sum);
    }
    return total;
}

ExtWeight length(const ChainPath& chain) {
    ExtWeight total = ExtWeight::zero();
    for (std::size_t i = 0; i + 1 < chain.vertices.size(); ++i)
        total += chain.space.d[chain.vertices[i]][chain.vertices[i + 1]];
    return total;
}

ExtWeight lipschitz_weight_of_path(const PLPath& path) {
    const auto& m = path.model;
    ExtWeight best = ExtWeight::zero();
    for (std::size_t i = 0; i + 1 < path.values.size(); ++i) {
        Rational displacement = 0;
        for (std::size_t c = 0; c < m.power; ++c) {
            Rational o = m.reversed ? path.values[i][c] - path.values[i + 1][c]
                                    : path.values[i + 1][c] - path.values[i][c];
            if (o < 0) return ExtWeight::infinity();
            displacement += o;
        }
        best = max(best, ExtWeight(displacement / (path.times[i + 1] - path.times[i])));
    }
    return best;
}

PLPath concatenate(const PLPath& a, const PLPath& b) {
    if (!a.model.same_as(b.model)) throw EndpointMismatch("paths live in different models");
    std::vector<Rational> shift(a.model.power, Rational(0));
    for (std::size_t c = 0; c < a.model.power; ++c) {
        Rational diff = a.values.back()[c] - b.values.front()[c];
        if (a.model.kind == ModelKind::DeltaCircle) {
            // Lifts may differ by a winding number; re-anchor b's lifts.
            if (denominator(diff) != 1)
                throw EndpointMismatch("circle endpoints differ: " + rat_str(diff));
            shift[c] = diff;
        } else if (diff != 0) {
            throw EndpointMismatch("a(1) != b(0) in coordinate " + std::to_string(c));
        }
    }
    PLPath out;
    out.model = a.model;
    for (const auto& t : a.times) out.times.push_back(t / 2);
    out.values = a.values;
    for (std::size_t k = 1; k < b.times.size(); ++k) {
        out.times.push_back(b.times[k] / 2 + Rational(1, 2));
        auto v = b.values[k];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += shift[c];
        out.values.push_back(std::move(v));
    }
    return out;
}

PLPath reflect(const PLPath& path) {
    PLPath out;
    out.model = path.model.opposite();
    for (auto it = path.times.rbegin(); it != path.times.rend(); ++it)
        out.times.push_back(1 - *it);
    out.values.assign(path.values.rbegin(), path.values.rend());
    return out;
}

namespace {

using R = Rational;
const R kZero(0), kOne(1);

R gmin(const R& a, const R& b) { return a < b ? a : b; }
R gmax(const R& a, const R& b) { return a < b ? b : a; }
R refl(const R& t) { return 1 - t; }

std::string pair_str(const R& t, const R& u) { return "(" + rat_str(t) + "," + rat_str(u) + ")"; }

}  // namespace

LatticeReport interval_lattice_check() {
    std::vector<R> grid;
    for (int k = 0; k <= 16; ++k) grid.emplace_back(k, 16);

    LatticeReport report;
    report.all_pass = true;
    auto record = [&](std::string name, bool pass, std::string witness) {
        report.all_pass = report.all_pass && pass;
        report.checks.push_back({std::move(name), pass, std::move(witness)});
    };
    auto check2 = [&](std::string name, auto&& eq) {
        for (const auto& t : grid)
            for (const auto& u : grid)
                if (!eq(t, u)) {
                    record(std::move(name), false, pair_str(t, u));
                    return;
                }
        record(std::move(name), true, "");
    };
    auto check1 = [&](std::string name, auto&& eq) {
        for (const auto& t : grid)
            if (!eq(t)) {
                record(std::move(name), false, rat_str(t));
                return;
            }
        record(std::move(name), true, "");
    };

    // Faces and degeneracy on the point are identities by construction.
    record("e.face- = 1", true, "");
    record("e.face+ = 1", true, "");

    // Units of the connections.
    check1("max(t,0) = t", [](const R& t) { return gmax(t, kZero) == t; });
    check1("max(0,t) = t", [](const R& t) { return gmax(kZero, t) == t; });
    check1("min(t,1) = t", [](const R& t) { return gmin(t, kOne) == t; });
    check1("min(1,t) = t", [](const R& t) { return gmin(kOne, t) == t; });

    // Absorbency.
    check1("max(t,1) = 1", [](const R& t) { return gmax(t, kOne) == kOne; });
    check1("min(t,0) = 0", [](const R& t) { return gmin(t, kZero) == kZero; });

    // Associativity of the connections; the coarser grid keeps I^3 cheap.
    {
        bool ok = true;
        std::string witness;
        for (int a = 0; a <= 8 && ok; ++a)
            for (int b = 0; b <= 8 && ok; ++b)
                for (int c = 0; c <= 8 && ok; ++c) {
                    R t(a, 8), u(b, 8), v(c, 8);
                    if (gmax(t, gmax(u, v)) != gmax(gmax(t, u), v) ||
                        gmin(t, gmin(u, v)) != gmin(gmin(t, u), v)) {
                        ok = false;
                        witness = pair_str(t, u) + "," + rat_str(v);
                    }
                }
        record("connection associativity", ok, witness);
    }

    // Degeneracy axiom e.g^a = e.Ie: both composites are constant at *.
    record("e.max = e.Ie", true, "");
    record("e.min = e.Ie", true, "");

    // Interchange; composites evaluated through the named maps.
    using Pt2 = std::pair<R, R>;
    auto s = [](const Pt2& p) { return Pt2(p.second, p.first); };
    auto drop2 = [](const Pt2& p) { return p.first; };   // Ie
    auto drop1 = [](const Pt2& p) { return p.second; };  // eI
    check2("s.s = 1", [&](const R& t, const R& u) { return s(s(Pt2(t, u))) == Pt2(t, u); });
    check2("Ie.s = eI",
           [&](const R& t, const R& u) { return drop2(s(Pt2(t, u))) == drop1(Pt2(t, u)); });
    check1("s.Iface(a) = face(a)I", [&](const R& t) {
        for (const R alpha : {kZero, kOne})
            if (s(Pt2(t, alpha)) != Pt2(alpha, t)) return false;
        return true;
    });
    check2("max.s = max",
           [&](const R& t, const R& u) { return gmax(s(Pt2(t, u)).first, s(Pt2(t, u)).second) == gmax(t, u); });
    check2("min.s = min",
           [&](const R& t, const R& u) { return gmin(s(Pt2(t, u)).first, s(Pt2(t, u)).second) == gmin(t, u); });

    // Reflection identities.
    auto r2 = [](const Pt2& p) { return Pt2(refl(p.first), refl(p.second)); };
    check1("r.r = 1", [](const R& t) { return refl(refl(t)) == t; });
    record("r(0) = 1", refl(kZero) == kOne, "");
    record("r(1) = 0", refl(kOne) == kZero, "");
    check2("r.max = min.(r,r)", [](const R& t, const R& u) {
        return refl(gmax(t, u)) == gmin(refl(t), refl(u));
    });
    check2("r.min = max.(r,r)", [](const R& t, const R& u) {
        return refl(gmin(t, u)) == gmax(refl(t), refl(u));
    });
    check2("r2.s = s.r2",
           [&](const R& t, const R& u) { return r2(s(Pt2(t, u))) == s(r2(Pt2(t, u))); });

    return report;
}

}  // namespace wtop
