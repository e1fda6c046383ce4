#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tla/lie.hpp"

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

LieAlg::Elem unit_of(const LieAlg& g, const std::string& name) {
    return LieAlg::unit(g.index_of(name));
}

long binom(int n, int k) {
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

long pow4(int e) {
    long out = 1;
    for (int i = 0; i < e; ++i) out *= 4;
    return out;
}

} // namespace

TEST_CASE("sl2 structure constants match the standard triple") {
    const LieAlg& g = LieAlg::sl2();
    CHECK(g.dim() == 3);
    auto e = unit_of(g, "e"), f = unit_of(g, "f"), h = unit_of(g, "h");
    CHECK(g.bracket(e, f) == h);
    CHECK(g.bracket(h, e) == LieAlg::Elem{{g.index_of("e"), Scalar(2)}});
    CHECK(g.bracket(h, f) == LieAlg::Elem{{g.index_of("f"), Scalar(-2)}});
    CHECK(g.bracket(e, e).empty());
    CHECK(g.family(g.index_of("f")) == Family::Neg);
    CHECK(g.family(g.index_of("h")) == Family::Cartan);
    CHECK(g.family(g.index_of("e")) == Family::Pos);
    CHECK(thrown_kind([&] { g.index_of("nope"); }) != "");
}

TEST_CASE("stored involutions are bracket automorphisms of order two") {
    for (const LieAlg* gp : {&LieAlg::sl2(), &LieAlg::sl2sl2(), &LieAlg::sl3()}) {
        const LieAlg& g = *gp;
        for (int i = 0; i < g.dim(); ++i) {
            CHECK(g.theta(g.theta_of(i)) == LieAlg::unit(i));
            for (int j = 0; j < g.dim(); ++j)
                CHECK(g.theta(g.bracket(LieAlg::unit(i), LieAlg::unit(j))) ==
                      g.bracket(g.theta_of(i), g.theta_of(j)));
        }
    }
    // The two-factor involution swaps the factors; the rank-two one folds the
    // diagram and negates the long root vectors.
    const LieAlg& gg = LieAlg::sl2sl2();
    CHECK(gg.theta_of(gg.index_of("e1")) == unit_of(gg, "e2"));
    const LieAlg& s3 = LieAlg::sl3();
    CHECK(s3.theta_of(s3.index_of("f1")) == unit_of(s3, "f2"));
    CHECK(s3.theta_of(s3.index_of("X")) ==
          LieAlg::Elem{{s3.index_of("X"), Scalar(-1)}});
}

TEST_CASE("loop brackets multiply the laurent degrees") {
    const LieAlg& g = LieAlg::sl2();
    LoopElem u = loop_tensor(g, LaurentPoly::t_pow(3), unit_of(g, "e"));
    LoopElem v = loop_tensor(g, LaurentPoly::t_pow(-1), unit_of(g, "f"));
    CHECK(loop_bracket(g, u, v) == loop_tensor(g, LaurentPoly::t_pow(2), unit_of(g, "h")));
    // Bilinearity over sums of degrees.
    LoopElem w = loop_add(u, loop_tensor(g, LaurentPoly::t_pow(1), unit_of(g, "e")));
    LoopElem expect = loop_add(loop_bracket(g, u, v),
                               loop_tensor(g, LaurentPoly::t_pow(0), unit_of(g, "h")));
    CHECK(loop_bracket(g, w, v) == expect);
}

TEST_CASE("the twist is an involutive bracket automorphism of the loop algebra") {
    for (CaseKind k : {CaseKind::DeltaA1, CaseKind::A1, CaseKind::AI1, CaseKind::AI2}) {
        const LieAlg& g = case_algebra(k);
        LoopElem u = loop_tensor(g, LaurentPoly::t_pow(2), LieAlg::unit(0));
        LoopElem v = loop_tensor(g, LaurentPoly::t_pow(-1), LieAlg::unit(g.dim() - 1));
        CHECK(loop_twist(g, loop_twist(g, u)) == u);
        CHECK(loop_twist(g, loop_bracket(g, u, v)) ==
              loop_bracket(g, loop_twist(g, u), loop_twist(g, v)));
    }
}

TEST_CASE("case plumbing names, monoids, and dimensions line up") {
    CHECK(case_from_name(case_name(CaseKind::DeltaA1)) == CaseKind::DeltaA1);
    CHECK(case_from_name(case_name(CaseKind::AI2)) == CaseKind::AI2);
    CHECK(thrown_kind([] { case_from_name("nosuch"); }) == "BadCase");
    CHECK(case_monoid(CaseKind::DeltaA1) == MonoidKind::Int);
    CHECK(case_monoid(CaseKind::A1) == MonoidKind::Nat);
    CHECK(case_monoid(CaseKind::AI1) == MonoidKind::NatPair);
    CHECK(case_monoid(CaseKind::AI2) == MonoidKind::NatPair);
    CHECK(case_algebra(CaseKind::DeltaA1).dim() == 6);
    CHECK(case_algebra(CaseKind::A1).dim() == 3);
    CHECK(case_algebra(CaseKind::AI1).dim() == 3);
    CHECK(case_algebra(CaseKind::AI2).dim() == 8);
}

TEST_CASE("pattern generators reject letters outside the case monoid") {
    CHECK(thrown_kind([] { case_x(CaseKind::A1, MonoidElem::of_int(1)); }) == "BadIndex");
    CHECK(thrown_kind([] { case_y(CaseKind::A1, MonoidElem::of_nat(-2)); }) == "BadIndex");
    CHECK(thrown_kind([] { case_w(CaseKind::AI1, MonoidElem::of_nat(1)); }) == "BadIndex");
    CHECK(thrown_kind([] { case_x(CaseKind::AI2, MonoidElem::of_pair(-1, 0)); }) == "BadIndex");
}

TEST_CASE("one multiplication-table instance per case as a spot oracle") {
    // [x_a, y_b] = w_{a+b}; the exhaustive sweep lives in the verify suite.
    {
        MonoidElem a = MonoidElem::of_int(2), b = MonoidElem::of_int(-3);
        CHECK(loop_bracket(case_algebra(CaseKind::DeltaA1), case_x(CaseKind::DeltaA1, a),
                           case_y(CaseKind::DeltaA1, b)) == case_w(CaseKind::DeltaA1, a + b));
    }
    {
        MonoidElem a = MonoidElem::of_nat(1), b = MonoidElem::of_nat(2);
        CHECK(loop_bracket(case_algebra(CaseKind::A1), case_w(CaseKind::A1, a),
                           case_x(CaseKind::A1, b)) ==
              loop_scaled(case_x(CaseKind::A1, a + b), Scalar(2)));
    }
    {
        MonoidElem a = MonoidElem::of_pair(1, 1), b = MonoidElem::of_pair(0, 2);
        CHECK(loop_bracket(case_algebra(CaseKind::AI1), case_w(CaseKind::AI1, a),
                           case_y(CaseKind::AI1, b)) ==
              loop_scaled(case_y(CaseKind::AI1, a + b), Scalar(-2)));
    }
}

TEST_CASE("the bridge t_plus^2 = t_minus^2 + 4 rewrites pair-indexed symbols") {
    // s_{a+2c, b} = sum_j C(c,j) 4^{c-j} s_{a, b+2j} for every pair-indexed family s.
    auto check_bridge = [](auto&& sym) {
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 1; c <= 2; ++c) {
                    LoopElem lhs = sym(MonoidElem::of_pair(a + 2 * c, b));
                    LoopElem rhs;
                    for (int j = 0; j <= c; ++j)
                        rhs = loop_add(rhs, loop_scaled(sym(MonoidElem::of_pair(a, b + 2 * j)),
                                                        Scalar(binom(c, j) * pow4(c - j))));
                    CHECK(lhs == rhs);
                }
    };
    check_bridge([](const MonoidElem& a) { return case_w(CaseKind::AI1, a); });
    check_bridge([](const MonoidElem& a) { return case_x(CaseKind::AI1, a); });
    check_bridge([](const MonoidElem& a) { return case_w_plus(CaseKind::AI2, a); });
    check_bridge([](const MonoidElem& a) { return case_w_minus(CaseKind::AI2, a); });
}

TEST_CASE("the folded rank-two ladder brackets form the expected triple") {
    const LieAlg& g = LieAlg::sl3();
    LoopElem E = loop_scaled(ai2_u(1, 0, 0), Scalar(-1));
    LoopElem F = ai2_u(-1, 0, 0);
    LoopElem H = ai2_u(0, 0, 0);
    CHECK(loop_bracket(g, E, F) == H);
    CHECK(loop_bracket(g, H, E) == loop_scaled(E, Scalar(2)));
    CHECK(loop_bracket(g, H, F) == loop_scaled(F, Scalar(-2)));
    CHECK(thrown_kind([] { ai2_u(2, 0, 0); }) == "BadIndex");
    CHECK(thrown_kind([] { ai2_v(3, 0, 0); }) == "BadIndex");
}
