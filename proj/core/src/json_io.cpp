#include "wtop/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace wtop::io {

namespace {

std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    ExtWeight w = ExtWeight::parse(s);  // reuses the "p/q" syntax
    if (w.is_infinite()) throw ParseError("expected a finite rational, got 'inf'");
    return w.value();
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

json to_json(const ExtWeight& w) { return w.to_string(); }

ExtWeight weight_from_json(const json& j) {
    if (j.is_number_integer()) return ExtWeight(Rational(j.get<long long>()));
    if (j.is_string()) return ExtWeight::parse(j.get<std::string>());
    throw ParseError("weight must be a string like \"2/3\", \"inf\" or an integer");
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational string or integer");
}

json rational_to_json(const Rational& r) { return rat_str(r); }

json to_json(const FiniteDeltaSpace& space) {
    json j;
    j["type"] = "finite_delta";
    j["points"] = space.points;
    json rows = json::array();
    for (const auto& row : space.d) {
        json cells = json::array();
        for (const auto& w : row) cells.push_back(to_json(w));
        rows.push_back(std::move(cells));
    }
    j["matrix"] = std::move(rows);
    return j;
}

FiniteDeltaSpace delta_space_from_json(const json& j) {
    FiniteDeltaSpace space;
    for (const auto& p : field(j, "points")) space.points.push_back(p.get<std::string>());
    for (const auto& row : field(j, "matrix")) {
        std::vector<ExtWeight> cells;
        for (const auto& cell : row) cells.push_back(weight_from_json(cell));
        space.d.push_back(std::move(cells));
    }
    return space;
}

json to_json(const PointRelation& rel) {
    json pairs = json::array();
    for (const auto& [a, b] : rel.pairs) pairs.push_back(json::array({a, b}));
    return json{{"pairs", std::move(pairs)}};
}

PointRelation relation_from_json(const json& j) {
    PointRelation rel;
    for (const auto& p : field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("relation pair must have two labels");
        rel.pairs.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    return rel;
}

json to_json(const PLPath& path) {
    json j;
    switch (path.model.kind) {
        case ModelKind::DeltaLine: j["model"] = "delta_line"; break;
        case ModelKind::DeltaInterval:
            j["model"] = "delta_interval";
            j["lo"] = rat_str(path.model.lo);
            j["hi"] = rat_str(path.model.hi);
            break;
        case ModelKind::DeltaCircle: j["model"] = "delta_circle"; break;
    }
    if (path.model.power != 1) j["power"] = path.model.power;
    if (path.model.reversed) j["reversed"] = true;
    json times = json::array();
    for (const auto& t : path.times) times.push_back(rat_str(t));
    j["times"] = std::move(times);
    json values = json::array();
    for (const auto& v : path.values) {
        if (path.model.power == 1) {
            values.push_back(rat_str(v[0]));
        } else {
            json coords = json::array();
            for (const auto& c : v) coords.push_back(rat_str(c));
            values.push_back(std::move(coords));
        }
    }
    j["values"] = std::move(values);
    return j;
}

PLPath path_from_json(const json& j) {
    PLPath path;
    std::string kind = field(j, "model").get<std::string>();
    std::size_t power = j.value("power", std::size_t{1});
    if (kind == "delta_line") {
        path.model = AnalyticModel::line(power);
    } else if (kind == "delta_interval") {
        path.model = AnalyticModel::interval(rational_from_json(field(j, "lo")),
                                             rational_from_json(field(j, "hi")), power);
    } else if (kind == "delta_circle") {
        path.model = AnalyticModel::circle();
        path.model.power = power;
    } else {
        throw ParseError("unknown model: " + kind);
    }
    path.model.reversed = j.value("reversed", false);
    for (const auto& t : field(j, "times")) path.times.push_back(rational_from_json(t));
    for (const auto& v : field(j, "values")) {
        std::vector<Rational> coords;
        if (v.is_array())
            for (const auto& c : v) coords.push_back(rational_from_json(c));
        else
            coords.push_back(rational_from_json(v));
        path.values.push_back(std::move(coords));
    }
    return validate_path(std::move(path));
}

json to_json(const ChainPath& chain) {
    json j;
    j["type"] = "chain_path";
    j["space"] = to_json(chain.space);
    json verts = json::array();
    for (auto v : chain.vertices) verts.push_back(chain.space.points[v]);
    j["vertices"] = std::move(verts);
    return j;
}

ChainPath chain_path_from_json(const json& j) {
    ChainPath chain;
    chain.space = validate(delta_space_from_json(field(j, "space")));
    for (const auto& v : field(j, "vertices"))
        chain.vertices.push_back(chain.space.index_of(v.get<std::string>()));
    return validate_chain(std::move(chain));
}

json to_json(const FiniteWeightedCategory& cat) {
    json j;
    j["type"] = "weighted_category";
    j["objects"] = cat.objects;
    json mors = json::array();
    for (const auto& m : cat.morphisms)
        mors.push_back(json{{"name", m.name},
                            {"src", cat.objects[m.src]},
                            {"dst", cat.objects[m.dst]},
                            {"weight", to_json(m.w)}});
    j["morphisms"] = std::move(mors);
    json ids = json::object();
    for (std::size_t x = 0; x < cat.objects.size(); ++x)
        ids[cat.objects[x]] = cat.morphisms[cat.identity[x]].name;
    j["identities"] = std::move(ids);
    json comp = json::array();
    for (std::size_t f = 0; f < cat.morphisms.size(); ++f)
        for (std::size_t g = 0; g < cat.morphisms.size(); ++g)
            if (cat.then_table[f][g] != FiniteWeightedCategory::npos)
                comp.push_back(json::array({cat.morphisms[f].name, cat.morphisms[g].name,
                                            cat.morphisms[cat.then_table[f][g]].name}));
    j["compose"] = std::move(comp);
    return j;
}

FiniteWeightedCategory wcat_from_json(const json& j) {
    FiniteWeightedCategory cat;
    for (const auto& o : field(j, "objects")) cat.objects.push_back(o.get<std::string>());
    for (const auto& m : field(j, "morphisms")) {
        FiniteWeightedCategory::Morphism mor;
        mor.name = field(m, "name").get<std::string>();
        mor.src = cat.object_index(field(m, "src").get<std::string>());
        mor.dst = cat.object_index(field(m, "dst").get<std::string>());
        mor.w = weight_from_json(field(m, "weight"));
        cat.morphisms.push_back(std::move(mor));
    }
    cat.identity.resize(cat.objects.size());
    const auto& ids = field(j, "identities");
    for (std::size_t x = 0; x < cat.objects.size(); ++x) {
        auto it = ids.find(cat.objects[x]);
        if (it == ids.end()) throw ParseError("missing identity for object " + cat.objects[x]);
        cat.identity[x] = cat.morphism_index(it->get<std::string>());
    }
    const auto np = FiniteWeightedCategory::npos;
    cat.then_table.assign(cat.morphisms.size(), std::vector<std::size_t>(cat.morphisms.size(), np));
    for (const auto& triple : field(j, "compose")) {
        if (!triple.is_array() || triple.size() != 3)
            throw ParseError("compose entries must be [f, g, f_then_g]");
        cat.then_table[cat.morphism_index(triple[0].get<std::string>())]
                      [cat.morphism_index(triple[1].get<std::string>())] =
            cat.morphism_index(triple[2].get<std::string>());
    }
    return cat;
}

json to_json(const HoledPlane& plane) {
    json j;
    j["type"] = "holed_plane";
    j["bounds"] = json::array({rat_str(plane.x_hi), rat_str(plane.y_hi)});
    if (plane.x_lo != 0 || plane.y_lo != 0)
        j["origin"] = json::array({rat_str(plane.x_lo), rat_str(plane.y_lo)});
    json holes = json::array();
    for (const auto& h : plane.holes)
        holes.push_back(
            json::array({rat_str(h.x1), rat_str(h.y1), rat_str(h.x2), rat_str(h.y2)}));
    j["holes"] = std::move(holes);
    json marked = json::array();
    for (const auto& p : plane.marked)
        marked.push_back(json::array({rat_str(p.first), rat_str(p.second)}));
    j["marked"] = std::move(marked);
    return j;
}

HoledPlane plane_from_json(const json& j) {
    HoledPlane plane;
    const auto& bounds = field(j, "bounds");
    if (!bounds.is_array() || bounds.size() != 2) throw ParseError("bounds must be [A, B]");
    plane.x_hi = rational_from_json(bounds[0]);
    plane.y_hi = rational_from_json(bounds[1]);
    if (j.contains("origin")) {
        plane.x_lo = rational_from_json(j["origin"][0]);
        plane.y_lo = rational_from_json(j["origin"][1]);
    }
    for (const auto& h : field(j, "holes")) {
        if (!h.is_array() || h.size() != 4) throw ParseError("hole must be [x1, y1, x2, y2]");
        plane.holes.push_back({rational_from_json(h[0]), rational_from_json(h[1]),
                               rational_from_json(h[2]), rational_from_json(h[3])});
    }
    for (const auto& p : field(j, "marked")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("marked point must be [x, y]");
        plane.marked.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return validate_plane(std::move(plane));
}

json to_json(const ChainWSpace& space) {
    json j;
    j["type"] = "chain_wspace";
    j["vertices"] = space.vertices;
    json edges = json::array();
    for (const auto& e : space.edges)
        edges.push_back(json::array({space.vertices[e.src], space.vertices[e.dst]}));
    j["edges"] = std::move(edges);
    json weights;
    if (space.mode == ChainWSpace::Mode::Linear) {
        weights["mode"] = "linear";
        json ew = json::array();
        for (const auto& w : space.edge_weights) ew.push_back(to_json(w));
        weights["edge_weights"] = std::move(ew);
    } else {
        weights["mode"] = "tabled";
        weights["bound"] = space.bound;
        json walks = json::array();
        for (const auto& [walk, w] : space.table)
            walks.push_back(json{{"edges", walk}, {"weight", to_json(w)}});
        weights["walks"] = std::move(walks);
    }
    j["weights"] = std::move(weights);
    return j;
}

ChainWSpace wspace_from_json(const json& j) {
    ChainWSpace space;
    for (const auto& v : field(j, "vertices")) space.vertices.push_back(v.get<std::string>());
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [src, dst]");
        space.edges.push_back(
            {space.vertex_index(e[0].get<std::string>()), space.vertex_index(e[1].get<std::string>())});
    }
    const auto& weights = field(j, "weights");
    std::string mode = field(weights, "mode").get<std::string>();
    if (mode == "linear") {
        space.mode = ChainWSpace::Mode::Linear;
        for (const auto& w : field(weights, "edge_weights"))
            space.edge_weights.push_back(weight_from_json(w));
    } else if (mode == "tabled") {
        space.mode = ChainWSpace::Mode::Tabled;
        space.bound = field(weights, "bound").get<std::size_t>();
        for (const auto& entry : field(weights, "walks")) {
            std::vector<std::size_t> walk;
            for (const auto& e : field(entry, "edges")) walk.push_back(e.get<std::size_t>());
            space.table[walk] = weight_from_json(field(entry, "weight"));
        }
    } else {
        throw ParseError("weights.mode must be 'linear' or 'tabled'");
    }
    return validate_wspace(std::move(space));
}

json to_json(const QuadraticIrrational& theta) {
    return json{{"theta",
                 {{"p", theta.p.str()}, {"q", theta.q.str()}, {"r", theta.r.str()},
                  {"d", theta.d}}}};
}

QuadraticIrrational theta_from_json(const json& j) {
    const json& t = j.contains("theta") ? j["theta"] : j;
    auto get_int = [&](const char* name) {
        const json& v = field(t, name);
        if (v.is_number_integer()) return Integer(v.get<long long>());
        return Integer(v.get<std::string>());
    };
    return make_quadratic_irrational(get_int("p"), get_int("q"), get_int("r"),
                                     field(t, "d").get<std::int64_t>());
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON syntax error in " + path + ": " + e.what());
    }
}

}  // namespace wtop::io
