#include "tla/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace tla {

long Scalar::d_ = 2;

namespace {

bool is_squarefree(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

} // namespace

void Scalar::set_field_d(long d) {
    if (d < 2 || !is_squarefree(d)) fail("FieldMismatch", "field parameter d must be a squarefree integer >= 2");
    d_ = d;
}

long Scalar::field_d() { return d_; }

bool Scalar::is_integer() const {
    return irr_ == 0 && boost::multiprecision::denominator(rat_) == 1;
}

bool Scalar::is_half_integer() const {
    if (irr_ != 0) return false;
    return boost::multiprecision::denominator(Rational(rat_ * 2)) == 1;
}

int Scalar::sign() const {
    int sr = rat_.sign();
    int si = irr_.sign();
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: compare rat^2 against irr^2 * d.
    Rational lhs = rat_ * rat_;
    Rational rhs = irr_ * irr_ * d_;
    if (lhs == rhs) return 0;  // cannot happen for squarefree d >= 2, kept for safety
    return (lhs > rhs) ? sr : si;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational r = rat_ * o.rat_ + irr_ * o.irr_ * d_;
    Rational i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    Rational norm = rat_ * rat_ - irr_ * irr_ * d_;
    if (norm == 0) fail("DivisionByZero", "scalar has no inverse: " + str());
    return Scalar(rat_ / norm, -irr_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string rational_str(const Rational& r) {
    std::string out = boost::multiprecision::numerator(r).str();
    Integer den = boost::multiprecision::denominator(r);
    if (den != 1) out += "/" + den.str();
    return out;
}

namespace {
long parse_disc(const std::string& t) {
    try {
        return std::stol(t);
    } catch (const std::exception&) {
        fail("ParseError", "bad sqrt discriminant: " + t);
    }
}
} // namespace

std::string Scalar::str() const {
    if (irr_ == 0) return rational_str(rat_);
    Rational a = irr_ < 0 ? Rational(-irr_) : irr_;
    std::string tail = rational_str(a) + "*sqrt(" + std::to_string(d_) + ")";
    if (rat_ == 0) return (irr_ < 0 ? "-" : "") + tail;
    return rational_str(rat_) + (irr_ < 0 ? "-" : "+") + tail;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail("ParseError", "empty rational");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) fail("ParseError", "zero denominator in " + s);
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("ParseError", "bad rational: " + s);
    }
}

Scalar Scalar::parse(const std::string& s) {
    if (s.empty()) fail("ParseError", "empty scalar");
    // Split at the last '+' or '-' that is not the leading sign and is followed
    // by a term containing "sqrt".
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s.find("sqrt", i) != std::string::npos) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.find("sqrt") != std::string::npos) {
            // Pure irrational part like "r/s*sqrt(d)".
            size_t star = s.find("*sqrt(");
            if (star == std::string::npos || s.back() != ')')
                fail("ParseError", "bad scalar: " + s);
            Rational coef = parse_rational(s.substr(0, star));
            long dd = parse_disc(s.substr(star + 6, s.size() - star - 7));
            if (dd != d_) fail("FieldMismatch", "sqrt(" + std::to_string(dd) + ") outside session field Q(sqrt(" + std::to_string(d_) + "))");
            return Scalar(Rational(0), coef);
        }
        return Scalar(parse_rational(s));
    }
    Rational rp = parse_rational(s.substr(0, split));
    std::string tail = s.substr(split + 1);
    size_t star = tail.find("*sqrt(");
    if (star == std::string::npos || tail.back() != ')') fail("ParseError", "bad scalar: " + s);
    Rational coef = parse_rational(tail.substr(0, star));
    long dd = parse_disc(tail.substr(star + 6, tail.size() - star - 7));
    if (dd != d_) fail("FieldMismatch", "sqrt(" + std::to_string(dd) + ") outside session field Q(sqrt(" + std::to_string(d_) + "))");
    if (s[split] == '-') coef = -coef;
    return Scalar(rp, coef);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.rat() != b.rat()) return a.rat() < b.rat();
    return a.irr() < b.irr();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer sn = boost::multiprecision::sqrt(num);
    Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<Scalar> sqrt_in_field(const Scalar& s) {
    long d = Scalar::field_d();
    if (s.is_zero()) return Scalar(0);
    if (s.sign() < 0) return std::nullopt;
    if (s.is_rational()) {
        if (auto r = rational_sqrt(s.rat())) return Scalar(*r);
        // sqrt(e) = v*sqrt(d) with v^2 = e/d.
        if (auto v = rational_sqrt(s.rat() / d)) return Scalar(Rational(0), *v);
        return std::nullopt;
    }
    // (u + v*sqrt(d))^2 = u^2 + v^2 d + 2uv sqrt(d): u^2 and v^2 d are the roots
    // of z^2 - e z + f^2 d / 4 where e = rat, f = irr.
    Rational e = s.rat(), f = s.irr();
    Rational disc = e * e - f * f * d;
    auto sq = rational_sqrt(disc);
    if (!sq) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rational z = (pick == 0) ? Rational((e + *sq) / 2) : Rational((e - *sq) / 2);
        auto u = rational_sqrt(z);
        if (!u || *u == 0) continue;
        Rational v = f / (*u * 2);
        Scalar root(*u, v);
        if (root * root == s) return (root.sign() >= 0) ? root : -root;
    }
    return std::nullopt;
}

} // namespace tla
