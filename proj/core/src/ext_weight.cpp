#include "wtop/ext_weight.hpp"

#include <ostream>

namespace wtop {

std::string ExtWeight::to_string() const {
    if (!finite_) return "inf";
    if (denominator(value_) == 1) return numerator(value_).str();
    return numerator(value_).str() + "/" + denominator(value_).str();
}

ExtWeight ExtWeight::parse(const std::string& s) {
    if (s == "inf" || s == "oo") return infinity();
    if (s.empty()) throw ParseError("empty weight string");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return ExtWeight(Rational(Integer(s)));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in weight: " + s);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return ExtWeight(Rational(num, den));
    } catch (const std::runtime_error& e) {
        throw ParseError("bad weight string '" + s + "': " + e.what());
    }
}

ExtWeight hom_plus(const ExtWeight& mu, const ExtWeight& nu) {
    if (mu.is_infinite()) return ExtWeight::zero();
    if (nu.is_infinite()) return ExtWeight::infinity();
    Rational diff = nu.value() - mu.value();
    return diff > 0 ? ExtWeight(diff) : ExtWeight::zero();
}

ExtWeight lipschitz_ratio(const ExtWeight& source, const ExtWeight& target) {
    if (source.is_infinite()) return ExtWeight::zero();
    if (source.is_zero()) return target.is_zero() ? ExtWeight::zero() : ExtWeight::infinity();
    if (target.is_infinite()) return ExtWeight::infinity();
    return ExtWeight(target.value() / source.value());
}

std::ostream& operator<<(std::ostream& os, const ExtWeight& w) { return os << w.to_string(); }

}  // namespace wtop
