#include "wtop/rotation.hpp"

#include <algorithm>
#include <map>

namespace wtop {

QuadExt g_value(const GElement& e, const QuadraticIrrational& theta) {
    return QuadExt(Rational(e.m)) + QuadExt(Rational(e.n)) * theta.value();
}

QWeight g_weight(const GElement& e, const QuadraticIrrational& theta) {
    QuadExt v = g_value(e, theta);
    if (v.sign() < 0) return {true, {}};
    return {false, std::move(v)};
}

namespace {

Integer ceil_of(const QuadExt& v) { return -((-v).floor()); }

}  // namespace

std::vector<GElement> enumerate_g_plus(const QuadraticIrrational& theta, std::size_t count,
                                       const Integer& coeff_bound) {
    if (count == 0) return {};
    if (coeff_bound < 0) throw ValidationError("coefficient bound must be nonnegative");
    const QuadExt tv = theta.value();
    std::vector<std::pair<QuadExt, GElement>> cand;
    // Per n, only the `count` smallest nonnegative values can make the cut.
    for (Integer n = -coeff_bound; n <= coeff_bound; ++n) {
        QuadExt ntheta = QuadExt(Rational(n)) * tv;
        Integer m0 = n == 0 ? Integer(0) : ceil_of(-ntheta);
        for (Integer m = m0; m <= coeff_bound && m < m0 + Integer(count); ++m) {
            if (m < -coeff_bound) continue;
            GElement e{m, n};
            cand.push_back({g_value(e, theta), e});
        }
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<GElement> out;
    for (std::size_t i = 0; i < cand.size() && out.size() < count; ++i)
        out.push_back(cand[i].second);
    return out;
}

std::optional<GElement> g_membership(const QuadExt& v, const QuadraticIrrational& theta) {
    if (!v.is_rational() && v.d != theta.d) return std::nullopt;
    // v = m + n theta with theta = (p + q sqrt d)/r forces n = v.b r / q.
    Rational n_rat = v.b * Rational(theta.r) / Rational(theta.q);
    if (denominator(n_rat) != 1) return std::nullopt;
    Integer n = numerator(n_rat);
    Rational m_rat = v.a - Rational(n) * Rational(theta.p, theta.r);
    if (denominator(m_rat) != 1) return std::nullopt;
    return GElement{numerator(m_rat), std::move(n)};
}

LiftResult lift_path(const ProjectedPath& path, const QuadExt& basepoint) {
    LiftResult out;
    QuadExt total;
    for (const auto& seg : path.segments) {
        if (seg.sign() < 0) throw ValidationError("path segments must be forward displacements");
        total = total + seg;
    }
    out.weight = total;
    out.endpoint = basepoint + total;
    auto g = g_membership(total, path.theta);
    out.loop = g.has_value();
    out.loop_class = std::move(g);
    return out;
}

FundamentalMonoid fundamental_monoid(const QuadraticIrrational& theta, std::size_t count,
                                     const std::optional<Rational>& cap,
                                     const Integer& coeff_bound) {
    FundamentalMonoid out;
    out.theta = theta;
    for (auto& e : enumerate_g_plus(theta, count, coeff_bound)) {
        QWeight w = g_weight(e, theta);
        if (cap && (w.value - QuadExt(*cap)).sign() > 0) break;  // sorted ascending
        out.elements.push_back(e);
        out.weights.push_back(std::move(w));
    }
    return out;
}

IsometricVerdict classify_isometric(const QuadraticIrrational& theta,
                                    const QuadraticIrrational& theta_prime) {
    IsometricVerdict verdict;
    if (theta.d != theta_prime.d) return verdict;
    QuadExt diff = theta_prime.value() - theta.value();
    if (diff.is_rational() && denominator(diff.a) == 1) {
        verdict.isomorphic = true;
        verdict.sign = '+';
        verdict.integer = numerator(diff.a);
        return verdict;
    }
    QuadExt sum = theta_prime.value() + theta.value();
    if (sum.is_rational() && denominator(sum.a) == 1) {
        verdict.isomorphic = true;
        verdict.sign = '-';
        verdict.integer = numerator(sum.a);
    }
    return verdict;
}

QuadExt apply_word(const std::vector<std::string>& word, const QuadExt& value) {
    QuadExt v = value;
    for (const auto& token : word) {
        if (token == "R")
            v = QuadExt(Rational(1)) / v;
        else if (token == "T")
            v = v + QuadExt(Rational(1));
        else if (token == "T-1")
            v = v - QuadExt(Rational(1));
        else
            throw ValidationError("unknown word token: " + token);
    }
    return v;
}

namespace {

struct Expansion {
    std::vector<Integer> digits;
    std::vector<QuadExt> states;  // complete quotients x_0, x_1, ...
    std::size_t cycle_start = 0;
    // words[k]: tokens carrying x_0 to x_k (T-moves then R per step).
    std::vector<std::vector<std::string>> words;
};

Expansion expand_with_words(const QuadraticIrrational& theta) {
    Expansion out;
    QuadExt x = theta.value();
    std::map<std::pair<Rational, Rational>, std::size_t> seen;
    out.words.push_back({});
    const std::size_t max_steps = 100000, max_word = 100000;
    while (out.digits.size() < max_steps) {
        auto k = std::pair(x.a, x.b);
        auto it = seen.find(k);
        if (it != seen.end()) {
            out.cycle_start = it->second;
            return out;
        }
        seen[k] = out.states.size();
        out.states.push_back(x);
        Integer a = x.floor();
        out.digits.push_back(a);
        std::vector<std::string> w = out.words.back();
        if (abs(a) > Integer(max_word)) throw SizeLimitExceeded("certificate word exceeds cap");
        for (Integer i = 0; i < abs(a); ++i) w.push_back(a > 0 ? "T-1" : "T");
        w.push_back("R");
        if (w.size() > max_word) throw SizeLimitExceeded("certificate word exceeds cap");
        out.words.push_back(std::move(w));
        x = QuadExt(Rational(1)) / (x - QuadExt(Rational(a)));
    }
    throw Error("continued fraction failed to become periodic within the step cap");
}

std::vector<std::string> invert_word(const std::vector<std::string>& word) {
    std::vector<std::string> out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == "R")
            out.push_back("R");
        else if (*it == "T")
            out.push_back("T-1");
        else
            out.push_back("T");
    }
    return out;
}

}  // namespace

LipschitzVerdict classify_lipschitz(const QuadraticIrrational& theta,
                                    const QuadraticIrrational& theta_prime) {
    LipschitzVerdict verdict;
    if (theta.d != theta_prime.d) return verdict;  // tails live in the same field
    Expansion e1 = expand_with_words(theta);
    Expansion e2 = expand_with_words(theta_prime);
    // Common tail iff some complete quotients on the cycles coincide.
    for (std::size_t i = e1.cycle_start; i < e1.states.size(); ++i)
        for (std::size_t j = e2.cycle_start; j < e2.states.size(); ++j) {
            if (!(e1.states[i] == e2.states[j])) continue;
            verdict.isomorphic = true;
            verdict.word = e1.words[i];
            auto back = invert_word(e2.words[j]);
            verdict.word.insert(verdict.word.end(), back.begin(), back.end());
            if (!(apply_word(verdict.word, theta.value()) == theta_prime.value()))
                throw Error("internal: certificate word failed validation");
            return verdict;
        }
    return verdict;
}

QuadExt gl2z_apply(const GL2Z& matrix, const QuadExt& value) {
    Integer det = matrix.a * matrix.d - matrix.b * matrix.c;
    if (det != 1 && det != -1)
        throw NotUnimodular("matrix determinant must be +/-1, got " + det.str());
    QuadExt num = QuadExt(Rational(matrix.a)) * value + QuadExt(Rational(matrix.b));
    QuadExt den = QuadExt(Rational(matrix.c)) * value + QuadExt(Rational(matrix.d));
    return num / den;
}

}  // namespace wtop
