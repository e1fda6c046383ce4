#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "tla/error.hpp"

namespace tla {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of the quadratic field Q(sqrt(d)): rat + irr * sqrt(d).
// d is a session-wide constant (default 2), a squarefree integer >= 2,
// so 1 and sqrt(d) are linearly independent over Q and coordinates are unique.
class Scalar {
public:
    Scalar() : rat_(0), irr_(0) {}
    Scalar(long v) : rat_(v), irr_(0) {}
    Scalar(Rational r) : rat_(std::move(r)), irr_(0) {}
    Scalar(Rational r, Rational i) : rat_(std::move(r)), irr_(std::move(i)) {}

    static void set_field_d(long d);
    static long field_d();

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }
    bool is_integer() const;
    bool is_half_integer() const;  // element of (1/2)Z
    // Exact numeric sign of rat + irr*sqrt(d): -1, 0, +1.
    int sign() const;
    bool is_nonneg() const { return sign() >= 0; }

    Scalar operator-() const { return Scalar(-rat_, -irr_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar conjugate() const { return Scalar(rat_, -irr_); }
    Scalar inverse() const;
    // Integer power; negative exponents go through inverse().
    Scalar pow(long e) const;

    // Canonical textual form: "p/q" with q > 0, or "p/q<+|->r/s*sqrt(d)" with r/s > 0.
    std::string str() const;
    static Scalar parse(const std::string& s);

    static Scalar sqrt_d() { return Scalar(Rational(0), Rational(1)); }

private:
    Rational rat_, irr_;
    static long d_;
};

// Deterministic total order on coordinates (not the numeric order); used for
// canonical sorting of scalar-valued keys.
bool canonical_less(const Scalar& a, const Scalar& b);

// Exact square root inside Q(sqrt(d)) if one exists; the returned root has
// nonnegative sign.
std::optional<Scalar> sqrt_in_field(const Scalar& s);

std::optional<Rational> rational_sqrt(const Rational& r);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

} // namespace tla
