#include <doctest.h>

#include "support.hpp"
#include "wtop/chain_wspace.hpp"

using namespace wtop;
using namespace wtop::testing;

namespace {

ChainWSpace single_edge(const Rational& w) {
    ChainWSpace X;
    X.vertices = {"a", "b"};
    X.edges = {{0, 1}};
    X.mode = ChainWSpace::Mode::Linear;
    X.edge_weights = {ExtWeight(w)};
    return X;
}

/// Forward path graph 0 -> 1 -> ... -> n-1 with unit weights: the chain
/// model of the weighted line.
ChainWSpace w_line(std::size_t n) {
    ChainWSpace X;
    for (std::size_t k = 0; k < n; ++k) X.vertices.push_back(std::to_string(k));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        X.edges.push_back({k, k + 1});
        X.edge_weights.push_back(ExtWeight(Rational(1)));
    }
    X.mode = ChainWSpace::Mode::Linear;
    return X;
}

/// The axes example: y = (-1,0), o = (0,0), y' = (0,1) inside the product
/// plane, with paths constrained to pass through the origin.
struct Axes {
    FiniteDeltaSpace Y;
    std::vector<std::pair<std::string, std::string>> admissible;
};

Axes axes_example() {
    Axes ax;
    ax.Y.points = {"y", "o", "y'"};
    auto inf = ExtWeight::infinity();
    // Product (l-infinity) metric of the directed plane restricted to the axes.
    ax.Y.d = {{ExtWeight::zero(), ExtWeight(Rational(1)), ExtWeight(Rational(1))},
              {inf, ExtWeight::zero(), ExtWeight(Rational(1))},
              {inf, inf, ExtWeight::zero()}};
    ax.admissible = {{"y", "o"}, {"o", "y'"}};
    return ax;
}

ChainWSpace random_linear(Rng& rng, std::size_t n) {
    ChainWSpace X;
    for (std::size_t k = 0; k < n; ++k) X.vertices.push_back("v" + std::to_string(k));
    std::uniform_int_distribution<std::size_t> vert(0, n - 1);
    std::uniform_int_distribution<int> edges(2, 4);
    int m = edges(rng);
    for (int e = 0; e < m; ++e) {
        X.edges.push_back({vert(rng), vert(rng)});
        X.edge_weights.push_back(random_weight(rng, false));
    }
    X.mode = ChainWSpace::Mode::Linear;
    return X;
}

/// Random tabled space produced by the span construction (valid by design).
ChainWSpace random_tabled(Rng& rng, std::size_t n) {
    auto Y = random_delta_space(rng, n);
    std::vector<std::pair<std::string, std::string>> adm;
    std::uniform_int_distribution<std::size_t> vert(0, n - 1);
    for (int e = 0; e < 3; ++e) {
        std::size_t a = vert(rng), b = vert(rng);
        adm.push_back({Y.points[a], Y.points[b]});
    }
    return sp_of(Y, adm, 4);
}

}  // namespace

TEST_CASE("validation of chain w-spaces") {
    CHECK(is_valid_wspace(single_edge(Rational(3))));
    CHECK(is_valid_wspace(w_line(4)));

    // Tabled space violating subadditivity.
    ChainWSpace bad;
    bad.vertices = {"a", "b", "c"};
    bad.edges = {{0, 1}, {1, 2}};
    bad.mode = ChainWSpace::Mode::Tabled;
    bad.bound = 2;
    bad.table[{0}] = ExtWeight(Rational(1));
    bad.table[{1}] = ExtWeight(Rational(1));
    bad.table[{0, 1}] = ExtWeight(Rational(3));  // > 1 + 1
    CHECK_THROWS_AS(validate_wspace(bad), ValidationError);
    bad.table[{0, 1}] = ExtWeight(Rational(1, 2));  // < max(1, 1): breaks wsp.1'
    CHECK_THROWS_AS(validate_wspace(bad), ValidationError);
    bad.table[{0, 1}] = ExtWeight(Rational(3, 2));
    CHECK(is_valid_wspace(bad));

    ChainWSpace off;
    off.vertices = {"a"};
    off.edges = {{0, 5}};
    off.mode = ChainWSpace::Mode::Linear;
    off.edge_weights = {ExtWeight::zero()};
    CHECK_THROWS_AS(validate_wspace(off), EdgeOffSpace);
}

TEST_CASE("tabled weights extend subadditively beyond the bound") {
    ChainWSpace loop;
    loop.vertices = {"a"};
    loop.edges = {{0, 0}};
    loop.mode = ChainWSpace::Mode::Tabled;
    loop.bound = 2;
    loop.table[{0}] = ExtWeight(Rational(1));
    loop.table[{0, 0}] = ExtWeight(Rational(3, 2));
    loop = validate_wspace(loop);
    // Length 3: best split is (2)+(1) = 5/2; length 4: (2)+(2) = 3.
    CHECK(loop.weight({0, 0, 0}) == ExtWeight(Rational(5, 2)));
    CHECK(loop.weight({0, 0, 0, 0}) == ExtWeight(Rational(3)));
    CHECK(loop.weight({}) == ExtWeight::zero());
}

TEST_CASE("tensor and product of single edges") {
    auto X = single_edge(Rational(1));
    auto Y = single_edge(Rational(2));
    auto tens = wspace_tensor(X, Y);
    CHECK(tens.mode == ChainWSpace::Mode::Linear);  // tensor of linear is linear
    auto prod = wspace_product(X, Y);
    // The diagonal step moves both coordinates at once.
    std::size_t diag_t = static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e < tens.edges.size(); ++e)
        if (tens.vertices[tens.edges[e].src] == "(a,a)" &&
            tens.vertices[tens.edges[e].dst] == "(b,b)")
            diag_t = e;
    REQUIRE(diag_t != static_cast<std::size_t>(-1));
    CHECK(tens.weight({diag_t}) == ExtWeight(Rational(3)));
    std::size_t diag_p = static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e < prod.edges.size(); ++e)
        if (prod.vertices[prod.edges[e].src] == "(a,a)" &&
            prod.vertices[prod.edges[e].dst] == "(b,b)")
            diag_p = e;
    CHECK(prod.weight({diag_p}) == ExtWeight(Rational(2)));
    CHECK(is_valid_wspace(tens));
    CHECK(is_valid_wspace(prod));
}

TEST_CASE("sum of chain w-spaces") {
    auto S = wspace_sum(single_edge(Rational(1)), single_edge(Rational(2)));
    CHECK(S.mode == ChainWSpace::Mode::Linear);
    CHECK(S.vertices.size() == 4);
    CHECK(S.weight({0}) == ExtWeight(Rational(1)));
    CHECK(S.weight({1}) == ExtWeight(Rational(2)));
    CHECK(is_valid_wspace(S));
    auto dS = delta_of(S);
    CHECK(dS.d[dS.index_of("0:a")][dS.index_of("1:b")] == ExtWeight::infinity());
}

TEST_CASE("quotient glues endpoints into a weighted loop") {
    auto X = single_edge(Rational(1));
    auto Q = wspace_quotient(X, {{"a", "b"}});
    CHECK(Q.vertices.size() == 1);
    CHECK(Q.weight({0}) == ExtWeight(Rational(1)));
    // n-fold iterates measure the winding length.
    CHECK(Q.weight({0, 0}) == ExtWeight(Rational(2)));
    CHECK(Q.weight({0, 0, 0}) == ExtWeight(Rational(3)));
    CHECK(is_valid_wspace(Q));

    auto trivial = wspace_quotient(X, {});
    CHECK(trivial.vertices.size() == 2);
    CHECK(trivial.weight({0}) == X.weight({0}));
}

TEST_CASE("quotient weight equals the brute-force decomposition infimum") {
    // Tabled space on a path, with several vertices glued; check the DP
    // against exhaustive enumeration over block decompositions.
    Rng rng(3131);
    for (int t = 0; t < 12; ++t) {
        auto X = random_tabled(rng, 3);
        if (X.edges.empty()) continue;
        auto Q = wspace_quotient(X, {{X.vertices[0], X.vertices[2]}}, 3);
        for (const auto& [walk, w] : Q.table) {
            // Oracle: try all block boundaries, forcing them at physical
            // discontinuities of the (unique) lifts.
            const std::size_t m = walk.size();
            ExtWeight best = ExtWeight::infinity();
            for (std::size_t mask = 0; mask < (1u << (m > 1 ? m - 1 : 0)); ++mask) {
                ExtWeight total = ExtWeight::zero();
                std::vector<std::size_t> block;
                bool ok = true;
                for (std::size_t k = 0; k < m && ok; ++k) {
                    if (!block.empty() && X.edges[block.back()].dst != X.edges[walk[k]].src) {
                        // forced boundary
                        if (!(mask & (1u << (k - 1)))) ok = false;
                    }
                    if (!ok) break;
                    block.push_back(walk[k]);
                    bool cut = k + 1 == m || (mask & (1u << k));
                    if (cut) {
                        total += X.weight(block);
                        block.clear();
                    }
                }
                if (ok && total < best) best = total;
            }
            CHECK(w == best);
        }
    }
}

TEST_CASE("linearize computes the least strictly additive majorant") {
    ChainWSpace X;
    X.vertices = {"a", "b", "c"};
    X.edges = {{0, 1}, {1, 2}};
    X.mode = ChainWSpace::Mode::Tabled;
    X.bound = 2;
    X.table[{0}] = ExtWeight(Rational(1));
    X.table[{1}] = ExtWeight(Rational(1));
    X.table[{0, 1}] = ExtWeight(Rational(1));  // subadditive, not linear
    X = validate_wspace(X);
    CHECK(max_decomposition_weight(X, {0, 1}) == ExtWeight(Rational(2)));
    auto L = linearize(X);
    CHECK(L.mode == ChainWSpace::Mode::Linear);
    CHECK(L.weight({0, 1}) == ExtWeight(Rational(2)));
    CHECK(L.weight({0}) == ExtWeight(Rational(1)));

    // Linear input is a fixed point; single edges never change.
    auto line = w_line(3);
    auto L2 = linearize(line);
    for (std::size_t e = 0; e < line.edges.size(); ++e)
        CHECK(L2.weight({e}) == line.weight({e}));
}

TEST_CASE("linearize is a closure operator on random tabled spaces") {
    Rng rng(52);
    for (int t = 0; t < 15; ++t) {
        auto X = random_tabled(rng, 3);
        auto L = linearize(X);
        CHECK(is_valid_wspace(L));
        for (const auto& walk : enumerate_walks(X, X.bound)) {
            // Extensive: L >= w; and L agrees with the defining max formula.
            CHECK(L.weight(walk) >= X.weight(walk));
            CHECK(L.weight(walk) == max_decomposition_weight(X, walk));
        }
        // Idempotent.
        auto LL = linearize(L);
        for (std::size_t e = 0; e < X.edges.size(); ++e)
            CHECK(LL.weight({e}) == L.weight({e}));
    }
}

TEST_CASE("delta_of computes walk infima") {
    auto X = single_edge(Rational(3));
    auto d = delta_of(X);
    CHECK(d.d[0][1] == ExtWeight(Rational(3)));
    CHECK(d.d[1][0] == ExtWeight::infinity());
    CHECK(is_valid(d));

    // Two parallel routes of weights 2 and 5.
    ChainWSpace par;
    par.vertices = {"a", "b"};
    par.edges = {{0, 1}, {0, 1}};
    par.mode = ChainWSpace::Mode::Linear;
    par.edge_weights = {ExtWeight(Rational(5)), ExtWeight(Rational(2))};
    CHECK(delta_of(par).d[0][1] == ExtWeight(Rational(2)));

    // A zero-weight cycle collapses distances around it.
    ChainWSpace cyc;
    cyc.vertices = {"a", "b"};
    cyc.edges = {{0, 1}, {1, 0}};
    cyc.mode = ChainWSpace::Mode::Linear;
    cyc.edge_weights = {ExtWeight::zero(), ExtWeight::zero()};
    auto dc = delta_of(cyc);
    CHECK(dc.d[0][1] == ExtWeight::zero());
    CHECK(dc.d[1][0] == ExtWeight::zero());
}

TEST_CASE("span and length models over a delta space") {
    auto line = delta_line_sample({Rational(0), Rational(1)});
    auto sp = sp_of(line, {{"0", "1"}});
    auto L = L_of(line, {{"0", "1"}});
    CHECK(sp.weight({0}) == ExtWeight(Rational(1)));
    CHECK(L.weight({0}) == ExtWeight(Rational(1)));
    CHECK(is_valid_wspace(sp));
    CHECK(is_valid_wspace(L));
    CHECK_THROWS_AS(sp_of(line, {{"0", "missing"}}), EdgeOffSpace);

    auto ax = axes_example();
    auto spA = sp_of(ax.Y, ax.admissible);
    auto lA = L_of(ax.Y, ax.admissible);
    // The through-walk y -> o -> y' has span 1 but length 2.
    CHECK(spA.weight({0, 1}) == ExtWeight(Rational(1)));
    CHECK(lA.weight({0, 1}) == ExtWeight(Rational(2)));
    // Single vertex, no edges: only the empty walk.
    FiniteDeltaSpace pt;
    pt.points = {"x"};
    pt.d = {{ExtWeight::zero()}};
    auto sp_pt = sp_of(pt, {});
    CHECK(sp_pt.weight({}) == ExtWeight::zero());
}

TEST_CASE("the axes space is geodetic but not linearly geodetic") {
    auto ax = axes_example();
    auto flags = classify_delta(ax.Y, ax.admissible);
    CHECK(flags.geodetic);
    CHECK(!flags.linearly_geodetic);
    // The defect is exactly delta(L Y)(y, y') = 2 against delta Y = 1.
    auto d_l = delta_of(L_of(ax.Y, ax.admissible));
    CHECK(d_l.d[0][2] == ExtWeight(Rational(2)));
    CHECK(ax.Y.d[0][2] == ExtWeight(Rational(1)));
    auto dual = galois_check_dual(ax.Y, ax.admissible);
    CHECK(dual.unit_span);
    CHECK(dual.unit_length);
    CHECK(dual.idempotent_sp);
    CHECK(dual.idempotent_l);
}

TEST_CASE("the chain line is metrizable in both senses") {
    auto X = w_line(4);
    auto flags = classify_wspace(X);
    CHECK(flags.span_metrizable);
    CHECK(flags.length_metrizable);
    CHECK(flags.linear);
    auto rep = galois_check(X);
    CHECK(rep.all_pass());
    CHECK(rep.linear_input);
}

TEST_CASE("a single heavy edge satisfies X = sp(delta X)") {
    auto X = single_edge(Rational(3));
    auto rep = galois_check(X);
    CHECK(rep.counit_span);
    CHECK(rep.idempotent_delta);
    auto flags = classify_wspace(X);
    CHECK(flags.span_metrizable);
    CHECK(flags.linear);
}

TEST_CASE("products of nontrivial linear spaces are not linear") {
    auto X = w_line(2);
    auto P = wspace_product(X, X, 3);
    auto flags = classify_wspace(P, 3);
    CHECK(!flags.linear);
    CHECK(is_valid_wspace(P));
}

TEST_CASE("galois inequalities and idempotency on random spaces") {
    Rng rng(6161);
    for (int t = 0; t < 12; ++t) {
        auto X = random_linear(rng, 3);
        auto rep = galois_check(X, 4);
        CHECK(rep.counit_span);
        CHECK(rep.idempotent_delta);
        if (rep.linear_input) {
            CHECK(rep.counit_length);
            CHECK(rep.idempotent_delta_l);
        }
        auto T = random_tabled(rng, 3);
        auto rep2 = galois_check(T);
        CHECK(rep2.counit_span);
        CHECK(rep2.idempotent_delta);

        auto Y = random_delta_space(rng, 3);
        std::vector<std::pair<std::string, std::string>> adm = {
            {Y.points[0], Y.points[1]}, {Y.points[1], Y.points[2]}};
        auto dual = galois_check_dual(Y, adm);
        CHECK(dual.unit_span);
        CHECK(dual.unit_length);
        CHECK(dual.idempotent_sp);
        CHECK(dual.idempotent_l);

        // Linearly geodetic implies geodetic.
        auto flags = classify_delta(Y, adm);
        if (flags.linearly_geodetic) CHECK(flags.geodetic);
    }
}

TEST_CASE("axioms hold on constructed spaces within the bound") {
    Rng rng(7272);
    for (int t = 0; t < 10; ++t) {
        auto A = random_linear(rng, 3);
        auto B = random_tabled(rng, 3);
        CHECK(is_valid_wspace(wspace_tensor(A, A, 3)));
        CHECK(is_valid_wspace(wspace_product(A, A, 3)));
        CHECK(is_valid_wspace(wspace_sum(A, B)));
        CHECK(is_valid_wspace(wspace_quotient(B, {{B.vertices[0], B.vertices[1]}}, 3)));
        CHECK(is_valid_wspace(linearize(B)));
    }
}
