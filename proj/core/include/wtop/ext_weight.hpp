#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "wtop/errors.hpp"

namespace wtop {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An exact extended nonnegative rational: the value object of [0, oo].
///
/// Addition saturates at infinity, comparison and min/max are total, and
/// scaling follows the convention lambda * oo = oo for every finite
/// lambda >= 0 (including lambda = 0).
class ExtWeight {
public:
    ExtWeight() : finite_(true), value_(0) {}

    ExtWeight(const Rational& v) : finite_(true), value_(v) {
        if (v < 0) throw ValidationError("ExtWeight must be nonnegative: " + to_string());
    }
    ExtWeight(long v) : ExtWeight(Rational(v)) {}
    ExtWeight(int v) : ExtWeight(Rational(v)) {}

    static ExtWeight infinity() {
        ExtWeight w;
        w.finite_ = false;
        return w;
    }
    static ExtWeight zero() { return ExtWeight(); }

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }
    bool is_zero() const { return finite_ && value_ == 0; }

    /// Finite value; undefined for infinity.
    const Rational& value() const { return value_; }

    friend bool operator==(const ExtWeight& a, const ExtWeight& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtWeight& a, const ExtWeight& b) {
        if (a.finite_ && b.finite_) {
            if (a.value_ < b.value_) return std::strong_ordering::less;
            if (a.value_ > b.value_) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        if (a.finite_) return std::strong_ordering::less;
        if (b.finite_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend ExtWeight operator+(const ExtWeight& a, const ExtWeight& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtWeight(a.value_ + b.value_);
    }
    ExtWeight& operator+=(const ExtWeight& o) { return *this = *this + o; }

    /// Entrywise scaling, with lambda * oo = oo for all lambda >= 0.
    ExtWeight scaled(const Rational& lambda) const {
        if (lambda < 0) throw ValidationError("scale factor must be nonnegative");
        if (!finite_) return infinity();
        return ExtWeight(value_ * lambda);
    }

    std::string to_string() const;

    /// Parses "p/q", a plain integer string, or "inf".
    static ExtWeight parse(const std::string& s);

private:
    bool finite_;
    Rational value_;
};

inline const ExtWeight& min(const ExtWeight& a, const ExtWeight& b) { return b < a ? b : a; }
inline const ExtWeight& max(const ExtWeight& a, const ExtWeight& b) { return a < b ? b : a; }

/// Truncated subtraction, the internal hom of [0, oo]:
/// hom_plus(mu, nu) is the least lambda with lambda + mu >= nu.
ExtWeight hom_plus(const ExtWeight& mu, const ExtWeight& nu);

/// Least lambda with target <= lambda * source, i.e. one Lipschitz constraint.
/// source = 0 with target > 0 is infeasible (oo); source = oo never constrains.
ExtWeight lipschitz_ratio(const ExtWeight& source, const ExtWeight& target);

std::ostream& operator<<(std::ostream& os, const ExtWeight& w);

}  // namespace wtop
