#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tla/enveloping.hpp"

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

MonoidElem nat(long k) { return MonoidElem::of_nat(k); }
MonoidElem pr(long a, long b) { return MonoidElem::of_pair(a, b); }

} // namespace

TEST_CASE("normal ordering rewrites a raising-lowering pair into PBW form") {
    CurrentAlg ctx(MonoidKind::Nat);
    UWord w{UGen::E(nat(1), 0), UGen::F(nat(2), 0)};
    UPoly want{{UWord{UGen::F(nat(2), 0), UGen::E(nat(1), 0)}, Scalar(1)},
               {UWord{UGen::H(nat(3), 0)}, Scalar(1)}};
    CHECK(nc_normal_word(ctx, w) == want);
    // Same kinds commute, so a sorted same-kind word is already normal.
    UWord ff{UGen::F(nat(1), 0), UGen::F(nat(2), 1)};
    CHECK(nc_normal_word(ctx, ff) == UPoly{{ff, Scalar(1)}});
}

TEST_CASE("multiplication realizes the commutation relations exactly") {
    CurrentAlg ctx(MonoidKind::Nat);
    auto one = [](UGen g) { return UPoly{{UWord{g}, Scalar(1)}}; };
    UGen e = UGen::E(nat(1), 2), f = UGen::F(nat(2), 1), h = UGen::H(nat(0), 0);
    UPoly ef = nc_mul(ctx, one(e), one(f));
    UPoly fe = nc_mul(ctx, one(f), one(e));
    CHECK(nc_add<CurrentAlg>(ef, nc_scaled(fe, Scalar(-1))) ==
          UPoly{{UWord{UGen::H(nat(3), 3)}, Scalar(1)}});
    UPoly he = nc_mul(ctx, one(h), one(e));
    UPoly eh = nc_mul(ctx, one(e), one(h));
    CHECK(nc_add<CurrentAlg>(he, nc_scaled(eh, Scalar(-1))) ==
          nc_scaled(one(UGen::E(nat(1), 2)), Scalar(2)));
}

TEST_CASE("quotient reduction drops every word containing a raising letter") {
    CurrentAlg ctx(MonoidKind::Nat);
    UPoly ef{{UWord{UGen::E(nat(1), 0), UGen::F(nat(1), 0)}, Scalar(1)}};
    CHECK(nc_reduce_pos(ctx, ef) == UPoly{{UWord{UGen::H(nat(2), 0)}, Scalar(1)}});
    UPoly pure_e{{UWord{UGen::E(nat(1), 0)}, Scalar(1)}};
    CHECK(nc_reduce_pos(ctx, pure_e).empty());
}

TEST_CASE("divided powers carry the factorial normalization") {
    CurrentAlg ctx(MonoidKind::Nat);
    UPoly f{{UWord{UGen::F(nat(1), 0)}, Scalar(1)}};
    UPoly f3 = nc_divided_power(ctx, f, 3);
    UWord www{UGen::F(nat(1), 0), UGen::F(nat(1), 0), UGen::F(nat(1), 0)};
    CHECK(f3 == UPoly{{www, Scalar(Rational(1, 6))}});
    CHECK(nc_divided_power(ctx, f, 0) == UPoly{{UWord{}, Scalar(1)}});
}

TEST_CASE("the degree-raising derivation acts letterwise with the degree factor") {
    CurrentAlg ctx(MonoidKind::Nat);
    UPoly h1{{UWord{UGen::H(nat(2), 1)}, Scalar(1)}};
    CHECK(ctx.D(nat(1), h1) == UPoly{{UWord{UGen::H(nat(3), 2)}, Scalar(1)}});
    UPoly h0{{UWord{UGen::H(nat(2), 0)}, Scalar(1)}};
    CHECK(ctx.D(nat(1), h0).empty());
    UPoly fw{{UWord{UGen::F(nat(1), 1), UGen::E(nat(0), 2)}, Scalar(1)}};
    UPoly want{{UWord{UGen::F(nat(2), 2), UGen::E(nat(0), 2)}, Scalar(1)},
               {UWord{UGen::F(nat(1), 1), UGen::E(nat(1), 3)}, Scalar(2)}};
    CHECK(ctx.D(nat(1), fw) == want);
}

TEST_CASE("twisted derivation words start from the unit and apply rightmost first") {
    CurrentAlg ctx(MonoidKind::Nat);
    UPoly unit{{UWord{}, Scalar(1)}};
    CHECK(ctx.Dtilde(nat(2), unit) == UPoly{{UWord{UGen::H(nat(2), 1)}, Scalar(1)}});
    CHECK(ctx.Dtilde_word({}) == unit);
    CHECK(ctx.Dtilde_word({nat(2)}) == ctx.Dtilde(nat(2), unit));
    CHECK(ctx.Dtilde_word({nat(1), nat(2)}) == ctx.Dtilde(nat(1), ctx.Dtilde(nat(2), unit)));
}

TEST_CASE("generator validation rejects foreign letters and negative degrees") {
    CurrentAlg ctx(MonoidKind::Nat);
    CHECK(thrown_kind([&] { ctx.gen(1, MonoidElem::of_int(2), 0); }) == "BadIndex");
    CHECK(thrown_kind([&] { ctx.gen(1, nat(-1), 0); }) == "BadIndex");
    CHECK(thrown_kind([&] { ctx.gen(1, nat(1), -1); }) == "BadIndex");
}

TEST_CASE("evaluation maps generators by family and handles the degree per case") {
    CHECK(ev_gen(CaseKind::A1, UGen::H(nat(2), 5)) == case_w(CaseKind::A1, nat(2)));
    CHECK(ev_gen(CaseKind::A1, UGen::E(nat(1), 3)) == case_x(CaseKind::A1, nat(1)));
    CHECK(ev_gen(CaseKind::A1, UGen::F(nat(1), 0)) == case_y(CaseKind::A1, nat(1)));
    CHECK(ev_gen(CaseKind::DeltaA1, UGen::E(MonoidElem::of_int(-2), 7)) ==
          case_x(CaseKind::DeltaA1, MonoidElem::of_int(-2)));
    // The pair case folds the derivation degree into the antisymmetric exponent.
    CHECK(ev_gen(CaseKind::AI1, UGen::H(pr(2, 1), 3)) == case_w(CaseKind::AI1, pr(2, 4)));
    CHECK(thrown_kind([] { ev_gen(CaseKind::AI2, UGen::H(pr(0, 0), 0)); }) == "BadCase");
}

TEST_CASE("polynomial evaluation is the multiplicative extension of the letter map") {
    LoopAlg tgt(case_algebra(CaseKind::A1));
    UPoly single{{UWord{UGen::F(nat(2), 0)}, Scalar(1)}};
    CHECK(ev_poly(CaseKind::A1, tgt, single) == tgt.from_loop(case_y(CaseKind::A1, nat(2))));
    UPoly two{{UWord{UGen::F(nat(2), 0), UGen::H(nat(1), 1)}, Scalar(Rational(1, 2))}};
    LPoly want = nc_scaled(nc_mul(tgt, tgt.from_loop(case_y(CaseKind::A1, nat(2))),
                                  tgt.from_loop(case_w(CaseKind::A1, nat(1)))),
                           Scalar(Rational(1, 2)));
    CHECK(ev_poly(CaseKind::A1, tgt, two) == want);
}

TEST_CASE("cartan symbols have the expected single-letter values in every case") {
    {
        LoopAlg tgt(case_algebra(CaseKind::A1));
        CHECK(d_elem(CaseKind::A1, tgt, {}) == LPoly{{LWord{}, Scalar(1)}});
        CHECK(d_elem(CaseKind::A1, tgt, {nat(2)}) == tgt.from_loop(case_w(CaseKind::A1, nat(2))));
    }
    {
        LoopAlg tgt(case_algebra(CaseKind::AI1));
        CHECK(d_elem(CaseKind::AI1, tgt, {pr(2, 1)}) ==
              tgt.from_loop(case_w(CaseKind::AI1, pr(2, 2))));
    }
    {
        LoopAlg tgt(case_algebra(CaseKind::AI2));
        CHECK(d_elem(CaseKind::AI2, tgt, {pr(1, 2)}) ==
              tgt.from_loop(case_w_plus(CaseKind::AI2, pr(1, 2))));
        CHECK(d_elem(CaseKind::AI2, tgt, {pr(2, 1)}) ==
              nc_scaled(tgt.from_loop(case_w_minus(CaseKind::AI2, pr(2, 1))), Scalar(-1)));
    }
}

TEST_CASE("loop enveloping products realize the loop bracket") {
    const LieAlg& g = LieAlg::sl2();
    LoopAlg tgt(g);
    LoopElem u = loop_tensor(g, LaurentPoly::t_pow(2), LieAlg::unit(g.index_of("e")));
    LoopElem v = loop_tensor(g, LaurentPoly::t_pow(-1), LieAlg::unit(g.index_of("f")));
    LPoly uv = nc_mul(tgt, tgt.from_loop(u), tgt.from_loop(v));
    LPoly vu = nc_mul(tgt, tgt.from_loop(v), tgt.from_loop(u));
    CHECK(nc_add<LoopAlg>(uv, nc_scaled(vu, Scalar(-1))) ==
          tgt.from_loop(loop_bracket(g, u, v)));
}
