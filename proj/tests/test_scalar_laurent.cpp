#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tla/laurent.hpp"
#include "tla/scalar.hpp"

using namespace tla;

namespace {

template <class F>
std::string thrown_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

Scalar sc(long p, long q = 1) { return Scalar(Rational(p, q)); }

Scalar irr(long p, long q, long rp, long rq) { return Scalar(Rational(p, q), Rational(rp, rq)); }

} // namespace

TEST_CASE("rational scalar arithmetic is exact") {
    CHECK(sc(1, 3) + sc(1, 6) == sc(1, 2));
    CHECK(sc(2, 3) * sc(9, 4) == sc(3, 2));
    CHECK(sc(1, 2) - sc(1, 2) == Scalar(0));
    CHECK(sc(7, 5) / sc(7, 5) == Scalar(1));
    CHECK(sc(4, 2) == Scalar(2));
    CHECK((-sc(3, 4)) + sc(3, 4) == Scalar(0));
}

TEST_CASE("quadratic field arithmetic follows sqrt(2)^2 = 2") {
    REQUIRE(Scalar::field_d() == 2);
    Scalar r = Scalar::sqrt_d();
    CHECK(r * r == Scalar(2));
    // (1 + sqrt 2)(1 - sqrt 2) = -1
    CHECK(irr(1, 1, 1, 1) * irr(1, 1, -1, 1) == Scalar(-1));
    // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    CHECK(irr(1, 1, 1, 1).pow(2) == irr(3, 1, 2, 1));
    // 1/(1 + sqrt 2) = sqrt 2 - 1
    CHECK(irr(1, 1, 1, 1).inverse() == irr(-1, 1, 1, 1));
    CHECK(irr(1, 1, 1, 1).pow(-1) == irr(-1, 1, 1, 1));
    CHECK(irr(1, 1, 1, 1).conjugate() == irr(1, 1, -1, 1));
    CHECK(thrown_kind([] { Scalar(0).inverse(); }) != "");
}

TEST_CASE("scalar sign is decided exactly across the radical") {
    CHECK(Scalar(0).sign() == 0);
    CHECK(sc(-1, 100).sign() == -1);
    // sqrt 2 - 3/2 < 0 since 2 < 9/4
    CHECK(irr(-3, 2, 1, 1).sign() == -1);
    // sqrt 2 - 7/5 > 0 since 2 > 49/25
    CHECK(irr(-7, 5, 1, 1).sign() == 1);
    CHECK(irr(-7, 5, 1, 1).is_nonneg());
}

TEST_CASE("integrality predicates see through normalization") {
    CHECK(sc(4, 2).is_integer());
    CHECK(!sc(3, 2).is_integer());
    CHECK(sc(3, 2).is_half_integer());
    CHECK(sc(-5).is_half_integer());
    CHECK(!sc(1, 3).is_half_integer());
    CHECK(!irr(1, 1, 1, 1).is_integer());
    CHECK(!irr(0, 1, 1, 2).is_half_integer());
}

TEST_CASE("scalar text form round trips and rejects malformed input") {
    for (const Scalar& s : {sc(0), sc(2), sc(-1, 3), irr(1, 2, -7, 3), irr(0, 1, 1, 1)})
        CHECK(Scalar::parse(s.str()) == s);
    CHECK(Scalar::parse("10/3") == sc(10, 3));
    CHECK(Scalar::parse("-2") == sc(-2));
    CHECK(Scalar::parse("1/2+1/1*sqrt(2)") == irr(1, 2, 1, 1));
    CHECK(Scalar::parse("0/1-3/2*sqrt(2)") == irr(0, 1, -3, 2));
    CHECK_THROWS_AS(Scalar::parse("abc"), Error);
    CHECK_THROWS_AS(Scalar::parse(""), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    // The radical in the text must match the session discriminant.
    CHECK_THROWS_AS(Scalar::parse("1/1+1/1*sqrt(3)"), Error);
}

TEST_CASE("field discriminant is validated and switchable") {
    CHECK(thrown_kind([] { Scalar::set_field_d(4); }) == "FieldMismatch");
    CHECK(thrown_kind([] { Scalar::set_field_d(1); }) == "FieldMismatch");
    Scalar::set_field_d(3);
    CHECK(Scalar::sqrt_d() * Scalar::sqrt_d() == Scalar(3));
    CHECK(sqrt_in_field(Scalar(3)).has_value());
    CHECK(!sqrt_in_field(Scalar(2)).has_value());
    Scalar::set_field_d(2);
    CHECK(Scalar::field_d() == 2);
}

TEST_CASE("square roots inside the field are found with nonnegative sign") {
    CHECK(sqrt_in_field(Scalar(4)) == Scalar(2));
    CHECK(sqrt_in_field(sc(9, 4)) == sc(3, 2));
    CHECK(sqrt_in_field(Scalar(2)) == Scalar::sqrt_d());
    // 3 + 2 sqrt 2 = (1 + sqrt 2)^2
    CHECK(sqrt_in_field(irr(3, 1, 2, 1)) == irr(1, 1, 1, 1));
    CHECK(!sqrt_in_field(Scalar(3)).has_value());
    CHECK(!sqrt_in_field(Scalar(-1)).has_value());
    CHECK(sqrt_in_field(Scalar(0)) == Scalar(0));
    CHECK(rational_sqrt(Rational(49, 9)) == Rational(7, 3));
    CHECK(!rational_sqrt(Rational(2)).has_value());
}

TEST_CASE("canonical order on scalars is a strict total order") {
    std::vector<Scalar> samples = {sc(0), sc(1), sc(-1), sc(1, 2), irr(0, 1, 1, 1),
                                   irr(1, 1, -1, 1)};
    for (const auto& a : samples) {
        CHECK(!canonical_less(a, a));
        for (const auto& b : samples) {
            if (a == b) continue;
            CHECK(canonical_less(a, b) != canonical_less(b, a));
        }
    }
}

TEST_CASE("laurent products and the symmetric basis expand correctly") {
    LaurentPoly t2 = LaurentPoly::t_pow(2);
    LaurentPoly tm3 = LaurentPoly::t_pow(-3);
    CHECK(t2 * tm3 == LaurentPoly::t_pow(-1));

    // t_+^2 = t^2 + 2 + t^-2, t_-^2 = t^2 - 2 + t^-2
    LaurentPoly tp2 = LaurentPoly::t_plus_pow(2);
    LaurentPoly expect = LaurentPoly::t_pow(2) + LaurentPoly(Scalar(2)) + LaurentPoly::t_pow(-2);
    CHECK(tp2 == expect);
    LaurentPoly tmsq = LaurentPoly::t_minus_pow(2);
    CHECK(tmsq == LaurentPoly::t_pow(2) - LaurentPoly(Scalar(2)) + LaurentPoly::t_pow(-2));

    // The bridge identity t_+^2 - t_-^2 = 4.
    CHECK(tp2 - tmsq == LaurentPoly(Scalar(4)));

    // (t + 1/t)^3 = t^3 + 3t + 3/t + t^-3
    LaurentPoly tp3 = LaurentPoly::t_plus_pow(3);
    LaurentPoly want = LaurentPoly::t_pow(3) + LaurentPoly::t_pow(1).scaled(Scalar(3)) +
                       LaurentPoly::t_pow(-1).scaled(Scalar(3)) + LaurentPoly::t_pow(-3);
    CHECK(tp3 == want);

    CHECK(LaurentPoly::tp_tm(2, 1) == LaurentPoly::t_plus_pow(2) * LaurentPoly::t_minus());
}

TEST_CASE("the loop involution fixes t_plus and negates t_minus") {
    CHECK(laurent_involute(LaurentPoly::t_plus_pow(3)) == LaurentPoly::t_plus_pow(3));
    CHECK(laurent_involute(LaurentPoly::t_minus()) == -LaurentPoly::t_minus());
    CHECK(laurent_involute(LaurentPoly::tp_tm(2, 3)) == -LaurentPoly::tp_tm(2, 3));

    LaurentPoly p = LaurentPoly::t_pow(2).scaled(Scalar(3)) + LaurentPoly::t_pow(-1) +
                    LaurentPoly(Scalar(5));
    SymSplit s = split_plus_minus(p);
    CHECK(s.plus + s.minus == p);
    CHECK(laurent_involute(s.plus) == s.plus);
    CHECK(laurent_involute(s.minus) == -s.minus);

    PlusBasisExpansion e = to_plus_basis(p);
    CHECK(from_plus_basis(e) == p);
}

TEST_CASE("laurent evaluation is exact and rejects the puncture") {
    CHECK(eval_laurent(LaurentPoly::t_plus(), Scalar(2)) == sc(5, 2));
    CHECK(eval_laurent(LaurentPoly::tp_tm(1, 1), sc(1, 3)) ==
          (sc(1, 3) + sc(3)) * (sc(1, 3) - sc(3)));
    CHECK(thrown_kind([] { eval_laurent(LaurentPoly::t_plus(), Scalar(0)); }) == "ZeroPoint");
}
