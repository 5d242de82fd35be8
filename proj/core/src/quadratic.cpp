#include "wtop/quadratic.hpp"

#include <boost/multiprecision/integer.hpp>

#include <map>

namespace wtop {

namespace {

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

void require_same_field(const QuadExt& x, const QuadExt& y) {
    if (x.d != 0 && y.d != 0 && x.d != y.d)
        throw IncompatibleField("cannot mix sqrt(" + std::to_string(x.d) + ") with sqrt(" +
                                std::to_string(y.d) + ")");
}

std::int64_t merged_field(const QuadExt& x, const QuadExt& y) {
    require_same_field(x, y);
    return x.d != 0 ? x.d : y.d;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> squarefree_core(std::int64_t d) {
    if (d <= 0) throw ValidationError("the radicand must be positive");
    std::int64_t core = 1, s = 1;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        int e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        for (int k = 0; k + 1 < e; k += 2) s *= p;
        if (e % 2) core *= p;
    }
    core *= d;  // leftover prime
    return {core, s};
}

QuadExt::QuadExt(Rational a_, Rational b_, std::int64_t d_) : a(std::move(a_)), b(std::move(b_)) {
    if (b == 0) {
        d = 0;
        return;
    }
    auto [core, s] = squarefree_core(d_);
    if (core <= 1) {  // a perfect square: the value is rational after all
        a += b * s;
        b = 0;
        d = 0;
    } else {
        b *= s;
        d = core;
    }
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    std::int64_t d = merged_field(x, y);
    QuadExt out;
    out.a = x.a + y.a;
    out.b = x.b + y.b;
    out.d = out.b == 0 ? 0 : d;
    return out;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator-(const QuadExt& x) {
    QuadExt out = x;
    out.a = -out.a;
    out.b = -out.b;
    return out;
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    std::int64_t d = merged_field(x, y);
    QuadExt out;
    out.a = x.a * y.a + x.b * y.b * d;
    out.b = x.a * y.b + x.b * y.a;
    out.d = out.b == 0 ? 0 : d;
    return out;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    std::int64_t d = merged_field(x, y);
    // Rationalise by the conjugate; the norm is nonzero for y != 0 because
    // sqrt(d) is irrational.
    Rational norm = y.a * y.a - y.b * y.b * d;
    if (norm == 0) throw ValidationError("division by zero in the quadratic field");
    QuadExt conj;
    conj.a = y.a / norm;
    conj.b = -y.b / norm;
    conj.d = conj.b == 0 ? 0 : d;
    return x * conj;
}

int QuadExt::sign() const {
    int sa = a == 0 ? 0 : (a > 0 ? 1 : -1);
    int sb = b == 0 ? 0 : (b > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs differ: whichever of |a| and |b| sqrt(d) is larger decides,
    // i.e. compare a^2 against b^2 d.
    Rational lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) throw ValidationError("sqrt(d) turned out rational; d not squarefree?");
    return lhs > rhs ? sa : sb;
}

Integer QuadExt::floor() const {
    // Write the value as (A + B sqrt(d)) / C with integers and C > 0.
    Integer qa = denominator(a), qb = denominator(b);
    Integer C = qa / gcd(qa, qb) * qb;
    Integer A = numerator(a) * (C / qa);
    Integer B = numerator(b) * (C / qb);
    Integer m = 0;
    if (B != 0) {
        Integer radicand = B * B * d;
        Integer s = sqrt(radicand);  // floor square root
        if (B > 0)
            m = s;
        else
            m = (s * s == radicand) ? Integer(-s) : Integer(-s - 1);
    }
    Integer k = floor_div(A + m, C);
    // floor(B sqrt d) = m pins the value into [(A+m)/C, (A+m+1)/C).
    auto at_least = [&](const Integer& n) {
        QuadExt diff = *this - QuadExt(Rational(n));
        return diff.sign() >= 0;
    };
    while (at_least(k + 1)) ++k;
    while (!at_least(k)) --k;
    return k;
}

std::string QuadExt::to_string() const {
    auto rat = [](const Rational& r) {
        if (denominator(r) == 1) return numerator(r).str();
        return numerator(r).str() + "/" + denominator(r).str();
    };
    if (b == 0) return rat(a);
    Integer qa = denominator(a), qb = denominator(b);
    Integer r = qa / gcd(qa, qb) * qb;
    Integer p = numerator(a) * (r / qa);
    Integer q = numerator(b) * (r / qb);
    return "(" + p.str() + (q < 0 ? "" : "+") + q.str() + "√" + std::to_string(d) + ")/" +
           r.str();
}

QuadExt QuadraticIrrational::value() const {
    return QuadExt(Rational(p, r), Rational(q, r), d);
}

QuadraticIrrational make_quadratic_irrational(Integer p, Integer q, Integer r, std::int64_t d) {
    if (r == 0) throw ValidationError("zero denominator");
    if (q == 0) throw ValidationError("q = 0 would make the value rational");
    auto [core, s] = squarefree_core(d);
    if (core <= 1) throw ValidationError("d must not be a perfect square");
    q *= s;
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Integer g = gcd(gcd(abs(p), abs(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    QuadraticIrrational out;
    out.p = std::move(p);
    out.q = std::move(q);
    out.r = std::move(r);
    out.d = core;
    return out;
}

CFExpansion cf_expansion(const QuadraticIrrational& theta) {
    QuadExt x = theta.value();
    auto key = [](const QuadExt& v) { return std::pair(v.a, v.b); };
    std::map<std::pair<Rational, Rational>, std::size_t> seen;
    std::vector<Integer> digits;
    const std::size_t max_steps = 100000;
    while (digits.size() < max_steps) {
        auto it = seen.find(key(x));
        if (it != seen.end()) {
            CFExpansion out;
            out.preperiod.assign(digits.begin(), digits.begin() + it->second);
            out.period.assign(digits.begin() + it->second, digits.end());
            return out;
        }
        seen[key(x)] = digits.size();
        Integer a = x.floor();
        digits.push_back(a);
        x = QuadExt(Rational(1)) / (x - QuadExt(Rational(a)));
    }
    throw Error("continued fraction failed to become periodic within the step cap");
}

std::vector<std::pair<Integer, Integer>> convergents(const std::vector<Integer>& digits) {
    std::vector<std::pair<Integer, Integer>> out;
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // h_{-2}, h_{-1}, k_{-2}, k_{-1}
    for (const auto& a : digits) {
        Integer h = a * h1 + h0, k = a * k1 + k0;
        out.push_back({h, k});
        h0 = h1;
        h1 = h;
        k0 = k1;
        k1 = k;
    }
    return out;
}

}  // namespace wtop
