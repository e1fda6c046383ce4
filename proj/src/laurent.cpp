#include "tla/laurent.hpp"

namespace tla {

LaurentPoly LaurentPoly::t_plus() {
    LaurentPoly p;
    p.add_term(1, Scalar(1));
    p.add_term(-1, Scalar(1));
    return p;
}

LaurentPoly LaurentPoly::t_minus() {
    LaurentPoly p;
    p.add_term(1, Scalar(1));
    p.add_term(-1, Scalar(-1));
    return p;
}

LaurentPoly LaurentPoly::t_plus_pow(long a) {
    LaurentPoly p(Scalar(1));
    for (long i = 0; i < a; ++i) p *= t_plus();
    return p;
}

LaurentPoly LaurentPoly::t_minus_pow(long b) {
    LaurentPoly p(Scalar(1));
    for (long i = 0; i < b; ++i) p *= t_minus();
    return p;
}

LaurentPoly LaurentPoly::tp_tm(long a, long b) {
    return t_plus_pow(a) * t_minus_pow(b);
}

void LaurentPoly::add_term(long exp, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
        c_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : c_) out.c_.emplace(e, v * c);
    return out;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : c_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*t^" + std::to_string(e);
    }
    return out;
}

LaurentPoly laurent_involute(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
    return out;
}

SymSplit split_plus_minus(const LaurentPoly& p) {
    LaurentPoly inv = laurent_involute(p);
    Scalar half = Scalar(1) / Scalar(2);
    SymSplit s;
    s.plus = (p + inv).scaled(half);
    s.minus = (p - inv).scaled(half);
    return s;
}

PlusBasisExpansion to_plus_basis(const LaurentPoly& p) {
    SymSplit s = split_plus_minus(p);
    PlusBasisExpansion e;
    // Symmetric part: eliminate the top exponent with t_+^N (leading term t^N).
    LaurentPoly cur = s.plus;
    while (!cur.is_zero()) {
        long n = cur.terms().rbegin()->first;
        Scalar c = cur.terms().rbegin()->second;
        if (n < 0) fail("Internal", "symmetric part with negative top exponent");
        e.plus[n] = c;
        cur -= LaurentPoly::t_plus_pow(n).scaled(c);
    }
    // Antisymmetric part: t_+^{N-1} t_- has leading term t^N.
    cur = s.minus;
    while (!cur.is_zero()) {
        long n = cur.terms().rbegin()->first;
        Scalar c = cur.terms().rbegin()->second;
        if (n < 1) fail("Internal", "antisymmetric part with nonpositive top exponent");
        e.minus1[n - 1] = c;
        cur -= LaurentPoly::tp_tm(n - 1, 1).scaled(c);
    }
    return e;
}

LaurentPoly from_plus_basis(const PlusBasisExpansion& e) {
    LaurentPoly out;
    for (const auto& [a, c] : e.plus) out += LaurentPoly::t_plus_pow(a).scaled(c);
    for (const auto& [a, c] : e.minus1) out += LaurentPoly::tp_tm(a, 1).scaled(c);
    return out;
}

Scalar eval_laurent(const LaurentPoly& p, const Scalar& x) {
    if (x.is_zero()) fail("ZeroPoint", "cannot evaluate a Laurent polynomial at 0");
    Scalar acc(0);
    for (const auto& [e, c] : p.terms()) acc += c * x.pow(e);
    return acc;
}

} // namespace tla
