#pragma once

#include <map>
#include <string>

#include "tla/scalar.hpp"

namespace tla {

// Exact Laurent polynomial in one variable t.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Scalar& c) { add_term(0, c); }

    static LaurentPoly t_pow(long k) {
        LaurentPoly p;
        p.add_term(k, Scalar(1));
        return p;
    }
    // t_+ := t + t^{-1}, t_- := t - t^{-1}.
    static LaurentPoly t_plus();
    static LaurentPoly t_minus();
    static LaurentPoly t_plus_pow(long a);
    static LaurentPoly t_minus_pow(long b);
    // t_+^a t_-^b, the workhorse basis for the twisted families.
    static LaurentPoly tp_tm(long a, long b);

    void add_term(long exp, const Scalar& c);
    const std::map<long, Scalar>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const Scalar& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    std::map<long, Scalar> c_;  // exponent -> nonzero coefficient
};

// The involution t -> t^{-1}.
LaurentPoly laurent_involute(const LaurentPoly& p);

// p = plus + minus with plus fixed and minus negated by the involution.
struct SymSplit {
    LaurentPoly plus, minus;
};
SymSplit split_plus_minus(const LaurentPoly& p);

// Expansion over the basis {t_+^a} + {t_+^a t_-} of the (anti)symmetric parts.
struct PlusBasisExpansion {
    std::map<long, Scalar> plus;    // coefficient of t_+^a
    std::map<long, Scalar> minus1;  // coefficient of t_+^a t_-
};
PlusBasisExpansion to_plus_basis(const LaurentPoly& p);
LaurentPoly from_plus_basis(const PlusBasisExpansion& e);

// Evaluation t -> x; x = 0 is rejected (ZeroPoint) since t is invertible.
Scalar eval_laurent(const LaurentPoly& p, const Scalar& x);

} // namespace tla
