#pragma once

#include <random>
#include <vector>

#include "wtop/delta_space.hpp"

namespace wtop::testing {

using Rng = std::mt19937_64;

/// Small random weights from a fixed menu, with an infinity share.
inline ExtWeight random_weight(Rng& rng, bool allow_inf = true) {
    static const Rational menu[] = {Rational(0),     Rational(1, 3), Rational(1, 2),
                                    Rational(2, 3),  Rational(1),    Rational(3, 2),
                                    Rational(2),     Rational(3),    Rational(5, 4)};
    std::uniform_int_distribution<int> pick(0, allow_inf ? 11 : 8);
    int k = pick(rng);
    if (k > 8) return ExtWeight::infinity();
    return ExtWeight(menu[k]);
}

/// Random valid delta-metric space: random arcs, then shortest-path closure
/// (the closure satisfies both axioms by construction).
inline FiniteDeltaSpace random_delta_space(Rng& rng, std::size_t n, bool allow_inf = true) {
    FiniteDeltaSpace space;
    for (std::size_t i = 0; i < n; ++i) space.points.push_back("p" + std::to_string(i));
    space.d.assign(n, std::vector<ExtWeight>(n, ExtWeight::infinity()));
    for (std::size_t i = 0; i < n; ++i) space.d[i][i] = ExtWeight::zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) space.d[i][j] = random_weight(rng, allow_inf);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExtWeight via = space.d[i][k] + space.d[k][j];
                if (via < space.d[i][j]) space.d[i][j] = via;
            }
    return space;
}

/// Brute-force infimum over chains x -> ... -> y of at most max_steps steps,
/// each step priced by `step`. Independent of the shortest-path code paths.
template <typename StepCost>
ExtWeight chain_infimum(std::size_t n, std::size_t from, std::size_t to, std::size_t max_steps,
                        StepCost step) {
    ExtWeight best = from == to ? ExtWeight::zero() : ExtWeight::infinity();
    std::vector<std::size_t> chain = {from};
    auto rec = [&](auto&& self, ExtWeight cost) -> void {
        if (chain.size() > max_steps + 1) return;
        for (std::size_t next = 0; next < n; ++next) {
            ExtWeight c = cost + step(chain.back(), next);
            if (c.is_infinite()) continue;
            chain.push_back(next);
            if (next == to && c < best) best = c;
            self(self, c);
            chain.pop_back();
        }
    };
    rec(rec, ExtWeight::zero());
    return best;
}

/// delta-line sample: d(x,y) = y - x for x <= y else infinity, on the given
/// increasing rationals.
inline FiniteDeltaSpace delta_line_sample(const std::vector<Rational>& xs) {
    FiniteDeltaSpace space;
    for (const auto& x : xs) {
        if (denominator(x) == 1)
            space.points.push_back(numerator(x).str());
        else
            space.points.push_back(numerator(x).str() + "/" + denominator(x).str());
    }
    const std::size_t n = xs.size();
    space.d.assign(n, std::vector<ExtWeight>(n, ExtWeight::infinity()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (xs[i] <= xs[j]) space.d[i][j] = ExtWeight(xs[j] - xs[i]);
    return space;
}

}  // namespace wtop::testing
