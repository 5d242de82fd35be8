#include "wtop/cli.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>

#include "wtop/json_io.hpp"

namespace wtop::cli {

namespace {

using io::json;

struct Options {
    std::string format = "table";
    std::size_t cap = 1000000;
    unsigned long seed = 0;  // reserved for randomized subcommands
};

std::string approx(const Rational& r) {
    double v = static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string pretty(const ExtWeight& w) {
    if (w.is_infinite()) return "inf";
    if (denominator(w.value()) == 1) return w.to_string();
    return w.to_string() + " (~" + approx(w.value()) + ")";
}

std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

void print_space(std::ostream& out, const FiniteDeltaSpace& space, const Options& opt) {
    if (opt.format == "json") {
        out << io::to_json(space).dump(2) << "\n";
        return;
    }
    out << "points: " << space.size() << "\n";
    for (std::size_t i = 0; i < space.size(); ++i) {
        out << space.points[i] << ":";
        for (std::size_t j = 0; j < space.size(); ++j) out << " " << space.d[i][j].to_string();
        out << "\n";
    }
}

void print_wspace(std::ostream& out, const ChainWSpace& space, const Options& opt) {
    if (opt.format == "json") {
        out << io::to_json(space).dump(2) << "\n";
        return;
    }
    out << "vertices: " << space.vertices.size() << ", edges: " << space.edges.size()
        << ", mode: " << (space.mode == ChainWSpace::Mode::Linear ? "linear" : "tabled") << "\n";
    if (space.mode == ChainWSpace::Mode::Linear) {
        for (std::size_t e = 0; e < space.edges.size(); ++e)
            out << space.vertices[space.edges[e].src] << " -> "
                << space.vertices[space.edges[e].dst] << ": "
                << space.edge_weights[e].to_string() << "\n";
    } else {
        out << "bound: " << space.bound << "\n";
        for (const auto& [walk, w] : space.table) {
            out << "walk";
            for (auto e : walk) out << " " << e;
            out << ": " << w.to_string() << "\n";
        }
    }
}

Rational parse_rational_arg(const std::string& s) {
    ExtWeight w = ExtWeight::parse(s);
    if (w.is_infinite()) throw ParseError("expected a finite rational argument");
    return w.value();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& j, const char* key) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    for (const auto& p : j[key]) {
        if (!p.is_array() || p.size() != 2)
            throw ParseError(std::string(key) + " entries must be [a, b]");
        out.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    return out;
}

int cmd_validate(const std::vector<std::string>& files, const Options&, std::ostream& out) {
    for (const auto& file : files) {
        json j = io::load_json_file(file);
        std::string type = j.value("type", j.contains("theta") ? "theta" : "");
        if (type == "finite_delta") {
            auto space = validate(io::delta_space_from_json(j));
            out << file << ": valid finite_delta with " << space.size() << " points\n";
        } else if (type == "weighted_category") {
            auto cat = validate_wcat(io::wcat_from_json(j));
            out << file << ": valid weighted_category with " << cat.objects.size()
                << " objects, " << cat.morphisms.size() << " morphisms\n";
        } else if (type == "chain_wspace") {
            auto space = io::wspace_from_json(j);  // parse validates
            out << file << ": valid chain_wspace with " << space.vertices.size()
                << " vertices\n";
        } else if (type == "holed_plane") {
            auto plane = io::plane_from_json(j);
            out << file << ": valid holed_plane with " << plane.holes.size() << " holes, "
                << plane.marked.size() << " marked points\n";
        } else if (type == "theta") {
            auto theta = io::theta_from_json(j);
            out << file << ": valid quadratic irrational (" << theta.p.str() << "+"
                << theta.q.str() << "√" << theta.d << ")/" << theta.r.str() << "\n";
        } else {
            throw ParseError(file + ": unknown or missing 'type'");
        }
    }
    return 0;
}

int cmd_dmetric(const std::string& op, const std::vector<std::string>& args, Options& opt,
                std::ostream& out) {
    auto load_space = [&](const std::string& f) {
        return validate(io::delta_space_from_json(io::load_json_file(f)));
    };
    if (op == "hom-plus") {
        if (args.size() != 2) throw ParseError("hom-plus needs two weights");
        out << hom_plus(ExtWeight::parse(args[0]), ExtWeight::parse(args[1])).to_string() << "\n";
        return 0;
    }
    if (op == "product" || op == "tensor" || op == "sum") {
        std::vector<FiniteDeltaSpace> spaces;
        for (const auto& f : args) spaces.push_back(load_space(f));
        FiniteDeltaSpace result = op == "product" ? product(spaces)
                                 : op == "tensor" ? tensor(spaces)
                                                  : sum(spaces);
        print_space(out, result, opt);
        return 0;
    }
    if (op == "subspace") {
        if (args.size() != 2) throw ParseError("subspace needs a file and a label list");
        print_space(out, subspace(load_space(args[0]), split_commas(args[1])), opt);
        return 0;
    }
    if (op == "quotient") {
        if (args.size() != 2) throw ParseError("quotient needs a space and a relation file");
        auto space = load_space(args[0]);
        auto rel = io::relation_from_json(io::load_json_file(args[1]));
        auto result = quotient(space, rel);
        if (opt.format == "json") {
            json j;
            j["space"] = io::to_json(result.space);
            json proj = json::object();
            for (std::size_t i = 0; i < space.size(); ++i)
                proj[space.points[i]] = result.space.points[result.projection[i]];
            j["projection"] = std::move(proj);
            out << j.dump(2) << "\n";
        } else {
            print_space(out, result.space, opt);
        }
        return 0;
    }
    if (op == "symmetrize" || op == "opposite") {
        if (args.size() != 1) throw ParseError(op + " needs one space file");
        auto space = load_space(args[0]);
        print_space(out, op == "symmetrize" ? symmetrize(space) : opposite(space), opt);
        return 0;
    }
    if (op == "scale") {
        if (args.size() != 2) throw ParseError("scale needs a space file and a factor");
        print_space(out, scale(load_space(args[0]), parse_rational_arg(args[1])), opt);
        return 0;
    }
    if (op == "lipschitz-weight") {
        if (args.size() != 1) throw ParseError("lipschitz-weight needs a map file");
        json j = io::load_json_file(args[0]);
        FiniteDeltaSpace src = validate(io::delta_space_from_json(j.at("source")));
        FiniteDeltaSpace dst = validate(io::delta_space_from_json(j.at("target")));
        PointMap f{&src, &dst, {}};
        const auto& assign = j.at("assignment");
        for (const auto& p : src.points) {
            if (!assign.contains(p)) throw ParseError("assignment missing point " + p);
            f.assignment.push_back(dst.index_of(assign[p].get<std::string>()));
        }
        out << lipschitz_weight(f).to_string() << "\n";
        return 0;
    }
    if (op == "internal-hom") {
        if (args.size() != 2) throw ParseError("internal-hom needs Y and Z files");
        auto result = internal_hom(load_space(args[0]), load_space(args[1]), opt.cap);
        print_space(out, result.space, opt);
        return 0;
    }
    if (op == "preorder") {
        if (args.size() != 1) throw ParseError("preorder needs one space file");
        auto space = load_space(args[0]);
        auto rel = preorder(space);
        for (std::size_t i = 0; i < space.size(); ++i)
            for (std::size_t j = 0; j < space.size(); ++j)
                if (rel[i][j] && i != j)
                    out << space.points[i] << " <= " << space.points[j] << "\n";
        return 0;
    }
    throw ParseError("unknown dmetric op: " + op);
}

int cmd_paths(const std::string& op, const std::vector<std::string>& args, Options& opt,
              std::ostream& out) {
    auto is_chain = [](const json& j) { return j.value("type", "") == "chain_path"; };
    if (op == "span" || op == "length") {
        if (args.size() != 1) throw ParseError(op + " needs one path file");
        json j = io::load_json_file(args[0]);
        ExtWeight w;
        if (is_chain(j)) {
            auto chain = io::chain_path_from_json(j);
            w = op == "span" ? span(chain) : length(chain);
        } else {
            auto path = io::path_from_json(j);
            w = op == "span" ? span(path) : length(path);
        }
        out << w.to_string() << "\n";
        return 0;
    }
    if (op == "lipschitz-weight") {
        if (args.size() != 1) throw ParseError("lipschitz-weight needs one path file");
        out << lipschitz_weight_of_path(io::path_from_json(io::load_json_file(args[0]))).to_string()
            << "\n";
        return 0;
    }
    if (op == "concatenate") {
        if (args.size() != 2) throw ParseError("concatenate needs two path files");
        auto a = io::path_from_json(io::load_json_file(args[0]));
        auto b = io::path_from_json(io::load_json_file(args[1]));
        out << io::to_json(concatenate(a, b)).dump(2) << "\n";
        return 0;
    }
    if (op == "reflect") {
        if (args.size() != 1) throw ParseError("reflect needs one path file");
        out << io::to_json(reflect(io::path_from_json(io::load_json_file(args[0])))).dump(2)
            << "\n";
        return 0;
    }
    if (op == "lattice-check") {
        auto report = interval_lattice_check();
        if (opt.format == "json") {
            json checks = json::array();
            for (const auto& c : report.checks)
                checks.push_back(
                    json{{"equation", c.equation}, {"pass", c.pass}, {"witness", c.witness}});
            out << json{{"all_pass", report.all_pass}, {"checks", std::move(checks)}}.dump(2)
                << "\n";
        } else {
            for (const auto& c : report.checks) {
                out << (c.pass ? "pass" : "FAIL") << "  " << c.equation;
                if (!c.pass) out << "  witness " << c.witness;
                out << "\n";
            }
            out << (report.all_pass ? "all equations hold" : "violations found") << "\n";
        }
        return report.all_pass ? 0 : 1;
    }
    throw ParseError("unknown paths op: " + op);
}

int cmd_fundcat(const std::vector<std::string>& args, Options& opt, std::ostream& out) {
    if (args.size() != 1) throw ParseError("fundcat needs one plane file");
    HoledPlane plane = io::plane_from_json(io::load_json_file(args[0]));
    auto result = fundamental_category(plane, {}, {}, opt.cap);
    auto simplicity = simplicity_report(plane, opt.cap);
    const auto& cat = result.category;
    if (opt.format == "json") {
        json j;
        j["category"] = io::to_json(cat);
        j["geodetically_simple"] = simplicity.geodetically_simple;
        j["one_simple"] = simplicity.one_simple;
        out << j.dump(2) << "\n";
        return 0;
    }
    const std::size_t n = plane.marked.size();
    out << "objects: " << n << "\n";
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const auto& cls = result.per_pair[s * n + t];
            if (cls.representatives.empty() || (s == t && cls.representatives.size() == 1))
                continue;
            out << "hom(" << cat.objects[s] << ", " << cat.objects[t]
                << "): " << cls.representatives.size() << (cls.representatives.size() == 1 ? " class" : " classes")
                << ", weight " << pretty(class_weight(plane.marked[s], plane.marked[t])) << "\n";
        }
    // Generating arrows: not a composite of two non-identities.
    std::vector<bool> composite(cat.morphisms.size(), false);
    for (std::size_t f = 0; f < cat.morphisms.size(); ++f)
        for (std::size_t g = 0; g < cat.morphisms.size(); ++g) {
            if (!cat.composable(f, g) || cat.is_identity(f) || cat.is_identity(g)) continue;
            composite[cat.then_table[f][g]] = true;
        }
    out << "generators:\n";
    for (std::size_t f = 0; f < cat.morphisms.size(); ++f)
        if (!composite[f] && !cat.is_identity(f))
            out << "  " << cat.morphisms[f].name << "  weight " << pretty(cat.morphisms[f].w)
                << "\n";
    out << "geodetically simple: " << (simplicity.geodetically_simple ? "yes" : "no") << "\n";
    out << "1-simple: " << (simplicity.one_simple ? "yes" : "no") << "\n";
    return 0;
}

int cmd_spectrum(const std::vector<std::string>& args, Options& opt, std::ostream& out) {
    if (args.size() != 1) throw ParseError("spectrum needs one category file");
    auto cat = validate_wcat(io::wcat_from_json(io::load_json_file(args[0])));
    auto fut = future_spectrum(cat);
    auto past = past_spectrum(cat);
    auto render = [&](const SpectrumResult& s) {
        std::string txt = "{";
        for (std::size_t k = 0; k < s.objects.size(); ++k) {
            if (k) txt += ", ";
            txt += cat.objects[s.objects[k]];
        }
        txt += "}";
        if (s.multiple_minima) txt += " (not unique)";
        return txt;
    };
    if (opt.format == "json") {
        json j;
        json fo = json::array(), po = json::array();
        for (auto o : fut.objects) fo.push_back(cat.objects[o]);
        for (auto o : past.objects) po.push_back(cat.objects[o]);
        j["future"] = {{"objects", std::move(fo)}, {"multiple_minima", fut.multiple_minima}};
        j["past"] = {{"objects", std::move(po)}, {"multiple_minima", past.multiple_minima}};
        out << j.dump(2) << "\n";
    } else {
        out << "sp+ = " << render(fut) << "; sp- = " << render(past) << "\n";
    }
    return 0;
}

int cmd_wspace(const std::string& op, const std::vector<std::string>& args, Options& opt,
               std::ostream& out) {
    auto load = [&](const std::string& f) { return io::wspace_from_json(io::load_json_file(f)); };
    if (op == "product" || op == "tensor") {
        if (args.size() != 2) throw ParseError(op + " needs two files");
        auto result = op == "product" ? wspace_product(load(args[0]), load(args[1]), 0, opt.cap)
                                      : wspace_tensor(load(args[0]), load(args[1]), 0, opt.cap);
        print_wspace(out, result, opt);
        return 0;
    }
    if (op == "sum") {
        if (args.size() != 2) throw ParseError("sum needs two files");
        print_wspace(out, wspace_sum(load(args[0]), load(args[1])), opt);
        return 0;
    }
    if (op == "quotient") {
        if (args.size() != 2) throw ParseError("quotient needs a space and a relation file");
        auto rel = pairs_from_json(io::load_json_file(args[1]), "pairs");
        print_wspace(out, wspace_quotient(load(args[0]), rel, 0, opt.cap), opt);
        return 0;
    }
    if (op == "linearize") {
        if (args.size() != 1) throw ParseError("linearize needs one file");
        print_wspace(out, linearize(load(args[0])), opt);
        return 0;
    }
    if (op == "delta") {
        if (args.size() != 1) throw ParseError("delta needs one file");
        print_space(out, delta_of(load(args[0])), opt);
        return 0;
    }
    if (op == "sp" || op == "length-model") {
        if (args.size() != 1) throw ParseError(op + " needs one file with space and admissible");
        json j = io::load_json_file(args[0]);
        auto space = validate(io::delta_space_from_json(j.at("space")));
        auto adm = pairs_from_json(j, "admissible");
        print_wspace(out, op == "sp" ? sp_of(space, adm, 0, opt.cap) : L_of(space, adm), opt);
        return 0;
    }
    if (op == "galois") {
        if (args.size() != 1) throw ParseError("galois needs one file");
        auto rep = galois_check(load(args[0]));
        out << "counit X >= sp(delta X): " << (rep.counit_span ? "holds" : "FAILS") << "\n";
        out << "idempotency delta sp delta = delta: "
            << (rep.idempotent_delta ? "holds" : "FAILS") << "\n";
        if (rep.linear_input) {
            out << "counit X >= L(delta X): " << (rep.counit_length ? "holds" : "FAILS") << "\n";
            out << "idempotency delta L delta = delta: "
                << (rep.idempotent_delta_l ? "holds" : "FAILS") << "\n";
        }
        return rep.all_pass() ? 0 : 1;
    }
    if (op == "galois-dual") {
        if (args.size() != 1) throw ParseError("galois-dual needs one file");
        json j = io::load_json_file(args[0]);
        auto space = validate(io::delta_space_from_json(j.at("space")));
        auto adm = pairs_from_json(j, "admissible");
        auto rep = galois_check_dual(space, adm);
        out << "unit delta(sp Y) >= Y: " << (rep.unit_span ? "holds" : "FAILS") << "\n";
        out << "idempotency sp delta sp = sp: " << (rep.idempotent_sp ? "holds" : "FAILS") << "\n";
        out << "unit delta(L Y) >= Y: " << (rep.unit_length ? "holds" : "FAILS") << "\n";
        out << "idempotency L delta L = L: " << (rep.idempotent_l ? "holds" : "FAILS") << "\n";
        return rep.all_pass() ? 0 : 1;
    }
    if (op == "classify") {
        if (args.size() != 1) throw ParseError("classify needs one file");
        json j = io::load_json_file(args[0]);
        if (j.value("type", "") == "chain_wspace") {
            auto flags = classify_wspace(io::wspace_from_json(j));
            out << "span_metrizable: " << (flags.span_metrizable ? "yes" : "no") << "\n";
            out << "length_metrizable: " << (flags.length_metrizable ? "yes" : "no") << "\n";
            out << "linear: " << (flags.linear ? "yes" : "no") << "\n";
        } else {
            auto space = validate(io::delta_space_from_json(j.at("space")));
            auto adm = pairs_from_json(j, "admissible");
            auto flags = classify_delta(space, adm);
            out << "geodetic: " << (flags.geodetic ? "yes" : "no") << "\n";
            out << "linearly_geodetic: " << (flags.linearly_geodetic ? "yes" : "no") << "\n";
        }
        return 0;
    }
    throw ParseError("unknown wspace op: " + op);
}

int cmd_rotation_classify(const std::vector<std::string>& args, Options& opt, std::ostream& out) {
    if (args.size() != 2) throw ParseError("rotation-classify needs two theta files");
    auto t1 = io::theta_from_json(io::load_json_file(args[0]));
    auto t2 = io::theta_from_json(io::load_json_file(args[1]));
    auto iso = classify_isometric(t1, t2);
    auto lip = classify_lipschitz(t1, t2);
    if (opt.format == "json") {
        json j;
        j["isometric"] = {{"verdict", iso.isomorphic}};
        if (iso.isomorphic) {
            j["isometric"]["sign"] = std::string(1, iso.sign);
            j["isometric"]["integer"] = iso.integer.str();
        }
        j["lipschitz"] = {{"verdict", lip.isomorphic}};
        if (lip.isomorphic) j["lipschitz"]["word"] = lip.word;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "isometric: ";
    if (iso.isomorphic)
        out << "yes (theta' = " << iso.integer.str() << (iso.sign == '+' ? " + " : " - ")
            << "theta)";
    else
        out << "no";
    out << "; lipschitz: ";
    if (lip.isomorphic) {
        out << "yes (word";
        for (const auto& tok : lip.word) out << " " << tok;
        out << ")";
    } else {
        out << "no";
    }
    out << "\n";
    return 0;
}

int cmd_rotation_monoid(const std::vector<std::string>& args, Options& opt, std::ostream& out,
                        std::size_t count, const std::string& max_weight,
                        const std::string& bound) {
    if (args.size() != 1) throw ParseError("rotation-monoid needs one theta file");
    auto theta = io::theta_from_json(io::load_json_file(args[0]));
    std::optional<Rational> cap;
    if (!max_weight.empty()) cap = parse_rational_arg(max_weight);
    Integer coeff_bound = bound.empty() ? Integer(64) : Integer(bound);
    auto monoid = fundamental_monoid(theta, count, cap, coeff_bound);
    if (opt.format == "json") {
        json elems = json::array();
        for (std::size_t k = 0; k < monoid.elements.size(); ++k)
            elems.push_back(json{{"m", monoid.elements[k].m.str()},
                                 {"n", monoid.elements[k].n.str()},
                                 {"weight", monoid.weights[k].to_string()}});
        out << json{{"elements", std::move(elems)}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t k = 0; k < monoid.elements.size(); ++k)
        out << k << ": (" << monoid.elements[k].m.str() << "," << monoid.elements[k].n.str()
            << ")  weight " << monoid.weights[k].to_string() << "\n";
    return 0;
}

int cmd_vankampen(const std::vector<std::string>& args, Options& opt, std::ostream& out,
                  const std::string& cut) {
    if (args.size() != 1) throw ParseError("vankampen needs one plane file");
    auto plane = io::plane_from_json(io::load_json_file(args[0]));
    auto coords = split_commas(cut);
    if (coords.size() != 2) throw ParseError("--cut needs c1,c2");
    auto rep = van_kampen_check(plane, parse_rational_arg(coords[0]),
                                parse_rational_arg(coords[1]), opt.cap);
    if (opt.format == "json") {
        json j;
        j["is_isomorphism"] = rep.is_isomorphism;
        j["pushout_morphisms"] = rep.pushout_morphisms;
        j["direct_morphisms"] = rep.direct_morphisms;
        j["violations"] = rep.violations;
        out << j.dump(2) << "\n";
    } else {
        out << "pushout: " << rep.pushout_morphisms
            << " morphisms; direct: " << rep.direct_morphisms << " morphisms\n";
        for (const auto& v : rep.violations) out << "violation: " << v << "\n";
        out << "comparison: " << (rep.is_isomorphism ? "isometric isomorphism" : "NOT an isomorphism")
            << "\n";
    }
    return rep.is_isomorphism ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    std::vector<std::string> positional;
    std::string cut, max_weight, bound;
    std::size_t count = 10;
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto next = [&](const char* flag) {
                if (i + 1 >= args.size()) throw ParseError(std::string(flag) + " needs a value");
                return args[++i];
            };
            if (a == "--format")
                opt.format = next("--format");
            else if (a == "--cap")
                opt.cap = std::stoull(next("--cap"));
            else if (a == "--seed")
                opt.seed = std::stoul(next("--seed"));
            else if (a == "--cut")
                cut = next("--cut");
            else if (a == "--count")
                count = std::stoull(next("--count"));
            else if (a == "--max-weight")
                max_weight = next("--max-weight");
            else if (a == "--bound")
                bound = next("--bound");
            else if (!a.empty() && a[0] == '-')
                throw ParseError("unknown flag: " + a);
            else
                positional.push_back(a);
        }
        if (opt.format != "table" && opt.format != "json")
            throw ParseError("--format must be table or json");
        if (positional.empty()) {
            err << "usage: wtop <verb> [args...]\n"
                << "verbs: validate, dmetric-op, paths-op, fundcat, spectrum, wspace-op,\n"
                << "       rotation-classify, rotation-monoid, vankampen\n";
            return 2;
        }
        std::string verb = positional.front();
        std::vector<std::string> rest(positional.begin() + 1, positional.end());
        if (verb == "validate") return cmd_validate(rest, opt, out);
        if (verb == "dmetric-op") {
            if (rest.empty()) throw ParseError("dmetric-op needs an operation");
            return cmd_dmetric(rest.front(), {rest.begin() + 1, rest.end()}, opt, out);
        }
        if (verb == "paths-op") {
            if (rest.empty()) throw ParseError("paths-op needs an operation");
            return cmd_paths(rest.front(), {rest.begin() + 1, rest.end()}, opt, out);
        }
        if (verb == "fundcat") return cmd_fundcat(rest, opt, out);
        if (verb == "spectrum") return cmd_spectrum(rest, opt, out);
        if (verb == "wspace-op") {
            if (rest.empty()) throw ParseError("wspace-op needs an operation");
            return cmd_wspace(rest.front(), {rest.begin() + 1, rest.end()}, opt, out);
        }
        if (verb == "rotation-classify") return cmd_rotation_classify(rest, opt, out);
        if (verb == "rotation-monoid") return cmd_rotation_monoid(rest, opt, out, count, max_weight, bound);
        if (verb == "vankampen") return cmd_vankampen(rest, opt, out, cut);
        throw ParseError("unknown verb: " + verb);
    } catch (const SizeLimitExceeded& e) {
        err << "size cap exceeded: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wtop::cli
