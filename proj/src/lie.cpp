#include "tla/lie.hpp"

#include <algorithm>

namespace tla {

int LieAlg::index_of(const std::string& basis_name) const {
    for (int i = 0; i < dim(); ++i)
        if (names_[i] == basis_name) return i;
    fail("BadBasisName", "no basis element named " + basis_name + " in " + name_);
}

static void elem_add(LieAlg::Elem& u, int i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = u.find(i);
    if (it == u.end()) {
        u.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) u.erase(it);
    }
}

LieAlg::Elem LieAlg::bracket(const Elem& u, const Elem& v) const {
    Elem out;
    for (const auto& [i, ci] : u)
        for (const auto& [j, cj] : v)
            for (const auto& [k, ck] : sc_[i][j]) elem_add(out, k, ci * cj * ck);
    return out;
}

LieAlg::Elem LieAlg::theta(const Elem& u) const {
    Elem out;
    for (const auto& [i, c] : u)
        for (const auto& [k, ck] : theta_[i]) elem_add(out, k, c * ck);
    return out;
}

void LieAlg::set_bracket(const std::string& a, const std::string& b, const Elem& val) {
    sc_[index_of(a)][index_of(b)] = val;
}

void LieAlg::finish_antisymmetrize() {
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) {
            if (!sc_[i][j].empty() && !sc_[j][i].empty())
                fail("Internal", "bracket of " + names_[i] + "," + names_[j] + " set on both sides");
            const Elem& src = sc_[i][j].empty() ? sc_[j][i] : sc_[i][j];
            Elem& dst = sc_[i][j].empty() ? sc_[i][j] : sc_[j][i];
            for (const auto& [k, c] : src) dst.emplace(k, -c);
        }
}

void LieAlg::check_jacobi() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Elem s = bracket(unit(i), bracket(unit(j), unit(k)));
                for (const auto& [c, v] : bracket(unit(j), bracket(unit(k), unit(i)))) elem_add(s, c, v);
                for (const auto& [c, v] : bracket(unit(k), bracket(unit(i), unit(j)))) elem_add(s, c, v);
                if (!s.empty()) fail("Internal", "Jacobi identity violated in " + name_);
            }
    // theta is an automorphism
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem lhs = theta(bracket(unit(i), unit(j)));
            Elem rhs = bracket(theta_[i], theta_[j]);
            for (const auto& [c, v] : rhs) elem_add(lhs, c, -v);
            if (!lhs.empty()) fail("Internal", "involution is not an automorphism of " + name_);
        }
}

LieAlg LieAlg::build_sl2() {
    LieAlg g;
    g.name_ = "sl2";
    g.names_ = {"f", "h", "e"};
    g.families_ = {Family::Neg, Family::Cartan, Family::Pos};
    g.sc_.assign(3, std::vector<Elem>(3));
    g.set_bracket("h", "e", {{2, Scalar(2)}});
    g.set_bracket("h", "f", {{0, Scalar(-2)}});
    g.set_bracket("e", "f", {{1, Scalar(1)}});
    g.finish_antisymmetrize();
    g.theta_ = {unit(0), unit(1), unit(2)};
    g.check_jacobi();
    return g;
}

LieAlg LieAlg::build_sl2sl2() {
    LieAlg g;
    g.name_ = "sl2+sl2";
    g.names_ = {"f1", "f2", "h1", "h2", "e1", "e2"};
    g.families_ = {Family::Neg, Family::Neg, Family::Cartan, Family::Cartan, Family::Pos, Family::Pos};
    g.sc_.assign(6, std::vector<Elem>(6));
    for (int s = 1; s <= 2; ++s) {
        std::string t = std::to_string(s);
        int fi = (s == 1) ? 0 : 1, hi = (s == 1) ? 2 : 3, ei = (s == 1) ? 4 : 5;
        g.set_bracket("h" + t, "e" + t, {{ei, Scalar(2)}});
        g.set_bracket("h" + t, "f" + t, {{fi, Scalar(-2)}});
        g.set_bracket("e" + t, "f" + t, {{hi, Scalar(1)}});
    }
    g.finish_antisymmetrize();
    // theta swaps the two factors
    g.theta_ = {unit(1), unit(0), unit(3), unit(2), unit(5), unit(4)};
    g.check_jacobi();
    return g;
}

LieAlg LieAlg::build_sl3() {
    LieAlg g;
    g.name_ = "sl3";
    g.names_ = {"f1", "f2", "Y", "h1", "h2", "e1", "e2", "X"};
    g.families_ = {Family::Neg, Family::Neg, Family::Neg, Family::Cartan,
                   Family::Cartan, Family::Pos, Family::Pos, Family::Pos};
    g.sc_.assign(8, std::vector<Elem>(8));
    int F1 = 0, F2 = 1, Y = 2, H1 = 3, H2 = 4, E1 = 5, E2 = 6, X = 7;
    // Conventions: Y = [f1,f2], X = [e2,e1] (so [e1,e2] = -X).
    g.set_bracket("f1", "f2", {{Y, Scalar(1)}});
    g.set_bracket("h1", "f1", {{F1, Scalar(-2)}});
    g.set_bracket("h1", "f2", {{F2, Scalar(1)}});
    g.set_bracket("h2", "f1", {{F1, Scalar(1)}});
    g.set_bracket("h2", "f2", {{F2, Scalar(-2)}});
    g.set_bracket("h1", "Y", {{Y, Scalar(-1)}});
    g.set_bracket("h2", "Y", {{Y, Scalar(-1)}});
    g.set_bracket("h1", "e1", {{E1, Scalar(2)}});
    g.set_bracket("h1", "e2", {{E2, Scalar(-1)}});
    g.set_bracket("h2", "e1", {{E1, Scalar(-1)}});
    g.set_bracket("h2", "e2", {{E2, Scalar(2)}});
    g.set_bracket("h1", "X", {{X, Scalar(1)}});
    g.set_bracket("h2", "X", {{X, Scalar(1)}});
    g.set_bracket("e1", "f1", {{H1, Scalar(1)}});
    g.set_bracket("e2", "f2", {{H2, Scalar(1)}});
    g.set_bracket("e1", "Y", {{F2, Scalar(1)}});
    g.set_bracket("e2", "Y", {{F1, Scalar(-1)}});
    g.set_bracket("f1", "X", {{E2, Scalar(-1)}});
    g.set_bracket("f2", "X", {{E1, Scalar(1)}});
    g.set_bracket("e1", "e2", {{X, Scalar(-1)}});
    g.set_bracket("X", "Y", {{H1, Scalar(1)}, {H2, Scalar(1)}});
    g.finish_antisymmetrize();
    // theta: flip the diagram, negate the long-root vectors
    g.theta_.assign(8, {});
    g.theta_[F1] = unit(F2);
    g.theta_[F2] = unit(F1);
    g.theta_[Y] = {{Y, Scalar(-1)}};
    g.theta_[H1] = unit(H2);
    g.theta_[H2] = unit(H1);
    g.theta_[E1] = unit(E2);
    g.theta_[E2] = unit(E1);
    g.theta_[X] = {{X, Scalar(-1)}};
    g.check_jacobi();
    return g;
}

const LieAlg& LieAlg::sl2() {
    static const LieAlg g = build_sl2();
    return g;
}
const LieAlg& LieAlg::sl2sl2() {
    static const LieAlg g = build_sl2sl2();
    return g;
}
const LieAlg& LieAlg::sl3() {
    static const LieAlg g = build_sl3();
    return g;
}

void loop_add_term(LoopElem& u, const LGen& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = u.find(g);
    if (it == u.end()) {
        u.emplace(g, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) u.erase(it);
    }
}

LoopElem loop_add(const LoopElem& u, const LoopElem& v) {
    LoopElem out = u;
    for (const auto& [g, c] : v) loop_add_term(out, g, c);
    return out;
}

LoopElem loop_scaled(const LoopElem& u, const Scalar& c) {
    LoopElem out;
    if (c.is_zero()) return out;
    for (const auto& [g, cc] : u) out.emplace(g, cc * c);
    return out;
}

LoopElem loop_bracket(const LieAlg& g, const LoopElem& u, const LoopElem& v) {
    LoopElem out;
    for (const auto& [gu, cu] : u)
        for (const auto& [gv, cv] : v)
            for (const auto& [k, ck] : g.bracket(gu.gi, gv.gi))
                loop_add_term(out, LGen{k, gu.k + gv.k}, cu * cv * ck);
    return out;
}

LoopElem loop_tensor(const LieAlg& g, const LaurentPoly& p, const LieAlg::Elem& x) {
    LoopElem out;
    (void)g;
    for (const auto& [k, c] : p.terms())
        for (const auto& [i, ci] : x) loop_add_term(out, LGen{i, k}, c * ci);
    return out;
}

LoopElem loop_twist(const LieAlg& g, const LoopElem& u) {
    LoopElem out;
    for (const auto& [gen, c] : u)
        for (const auto& [i, ci] : g.theta_of(gen.gi)) loop_add_term(out, LGen{i, -gen.k}, c * ci);
    return out;
}

bool loop_is_twist_fixed(const LieAlg& g, const LoopElem& u) {
    return loop_twist(g, u) == u;
}

std::string loop_str(const LieAlg& g, const LoopElem& u) {
    if (u.empty()) return "0";
    std::string s;
    for (const auto& [gen, c] : u) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*t^" + std::to_string(gen.k) + "." + g.basis_name(gen.gi);
    }
    return s;
}

CaseKind case_from_name(const std::string& s) {
    if (s == "delta_a1") return CaseKind::DeltaA1;
    if (s == "a1") return CaseKind::A1;
    if (s == "ai1") return CaseKind::AI1;
    if (s == "ai2") return CaseKind::AI2;
    fail("BadCase", "unknown case name: " + s);
}

std::string case_name(CaseKind k) {
    switch (k) {
        case CaseKind::DeltaA1: return "delta_a1";
        case CaseKind::A1: return "a1";
        case CaseKind::AI1: return "ai1";
        case CaseKind::AI2: return "ai2";
    }
    fail("BadCase", "invalid case kind");
}

MonoidKind case_monoid(CaseKind k) {
    switch (k) {
        case CaseKind::DeltaA1: return MonoidKind::Int;
        case CaseKind::A1: return MonoidKind::Nat;
        case CaseKind::AI1: return MonoidKind::NatPair;
        case CaseKind::AI2: return MonoidKind::NatPair;
    }
    fail("BadCase", "invalid case kind");
}

const LieAlg& case_algebra(CaseKind k) {
    switch (k) {
        case CaseKind::DeltaA1: return LieAlg::sl2sl2();
        case CaseKind::A1: return LieAlg::sl2();
        case CaseKind::AI1: return LieAlg::sl2();
        case CaseKind::AI2: return LieAlg::sl3();
    }
    fail("BadCase", "invalid case kind");
}

static void require_letter(CaseKind k, const MonoidElem& a) {
    if (a.kind != case_monoid(k) || !a.valid())
        fail("BadIndex", "letter " + a.str() + " invalid for case " + case_name(k));
}

// Generic pattern generator over the three sl2-based cases.
static LoopElem sl2_pattern(CaseKind k, const MonoidElem& a, const char* pos1, const char* pos2) {
    const LieAlg& g = case_algebra(k);
    switch (k) {
        case CaseKind::DeltaA1: {
            LoopElem out = loop_tensor(g, LaurentPoly::t_pow(a.x), LieAlg::unit(g.index_of(pos1)));
            return loop_add(out, loop_tensor(g, LaurentPoly::t_pow(-a.x), LieAlg::unit(g.index_of(pos2))));
        }
        case CaseKind::A1:
            return loop_tensor(g, LaurentPoly::t_plus_pow(a.x), LieAlg::unit(g.index_of(pos1)));
        case CaseKind::AI1:
            return loop_tensor(g, LaurentPoly::tp_tm(a.x, a.y), LieAlg::unit(g.index_of(pos1)));
        case CaseKind::AI2:
            fail("BadCase", "pattern generators x/y/w are not defined for case ai2");
    }
    fail("BadCase", "invalid case kind");
}

LoopElem case_x(CaseKind k, const MonoidElem& a) {
    require_letter(k, a);
    return sl2_pattern(k, a, (k == CaseKind::DeltaA1) ? "e1" : "e", "e2");
}

LoopElem case_y(CaseKind k, const MonoidElem& a) {
    require_letter(k, a);
    return sl2_pattern(k, a, (k == CaseKind::DeltaA1) ? "f1" : "f", "f2");
}

LoopElem case_w(CaseKind k, const MonoidElem& a) {
    require_letter(k, a);
    return sl2_pattern(k, a, (k == CaseKind::DeltaA1) ? "h1" : "h", "h2");
}

LoopElem case_w_plus(CaseKind k, const MonoidElem& a) {
    if (k == CaseKind::DeltaA1) {
        if (a.x < 0) fail("BadIndex", "plus-symbol exponent must be nonnegative");
        const LieAlg& g = LieAlg::sl2sl2();
        LieAlg::Elem wp{{g.index_of("h1"), Scalar(1)}, {g.index_of("h2"), Scalar(1)}};
        return loop_tensor(g, LaurentPoly::t_plus_pow(a.x), wp);
    }
    if (k == CaseKind::AI2) {
        require_letter(k, a);
        const LieAlg& g = LieAlg::sl3();
        LieAlg::Elem wp{{g.index_of("h1"), Scalar(1)}, {g.index_of("h2"), Scalar(1)}};
        return loop_tensor(g, LaurentPoly::tp_tm(a.x, a.y), wp);
    }
    fail("BadCase", "plus/minus symbols are defined for cases delta_a1 and ai2");
}

LoopElem case_w_minus(CaseKind k, const MonoidElem& a) {
    if (k == CaseKind::DeltaA1) {
        if (a.x < 0) fail("BadIndex", "minus-symbol exponent must be nonnegative");
        const LieAlg& g = LieAlg::sl2sl2();
        LieAlg::Elem wm{{g.index_of("h1"), Scalar(1)}, {g.index_of("h2"), Scalar(-1)}};
        return loop_tensor(g, LaurentPoly::tp_tm(a.x, 1), wm);
    }
    if (k == CaseKind::AI2) {
        require_letter(k, a);
        const LieAlg& g = LieAlg::sl3();
        LieAlg::Elem wm{{g.index_of("h1"), Scalar(1)}, {g.index_of("h2"), Scalar(-1)}};
        return loop_tensor(g, LaurentPoly::tp_tm(a.x, a.y), wm);
    }
    fail("BadCase", "plus/minus symbols are defined for cases delta_a1 and ai2");
}

static LieAlg::Elem ai2_u_elem(int i) {
    const LieAlg& g = LieAlg::sl3();
    switch (i) {
        case -1: return {{g.index_of("f1"), Scalar(2)}, {g.index_of("f2"), Scalar(2)}};   // 2 y_+
        case 0: return {{g.index_of("h1"), Scalar(2)}, {g.index_of("h2"), Scalar(2)}};    // 2 w_+
        case 1: return {{g.index_of("e1"), Scalar(-1)}, {g.index_of("e2"), Scalar(-1)}};  // -x_+
    }
    fail("BadIndex", "u-index must lie in {-1,0,1}");
}

static LieAlg::Elem ai2_v_elem(int i) {
    const LieAlg& g = LieAlg::sl3();
    switch (i) {
        case -2: return {{g.index_of("Y"), Scalar(4)}};                                   // 4 Y
        case -1: return {{g.index_of("f1"), Scalar(-4)}, {g.index_of("f2"), Scalar(4)}};  // -4 y_-
        case 0: return {{g.index_of("h1"), Scalar(-2)}, {g.index_of("h2"), Scalar(2)}};   // -2 w_-
        case 1: return {{g.index_of("e1"), Scalar(2)}, {g.index_of("e2"), Scalar(-2)}};   // 2 x_-
        case 2: return {{g.index_of("X"), Scalar(1)}};                                    // X
    }
    fail("BadIndex", "v-index must lie in {-2..2}");
}

LoopElem ai2_u(int i, long a, long b) {
    if (a < 0 || b < 0) fail("BadIndex", "loop position must be in the nonnegative quadrant");
    return loop_tensor(LieAlg::sl3(), LaurentPoly::tp_tm(a, b), ai2_u_elem(i));
}

LoopElem ai2_v(int i, long a, long b) {
    if (a < 0 || b < 0) fail("BadIndex", "loop position must be in the nonnegative quadrant");
    return loop_tensor(LieAlg::sl3(), LaurentPoly::tp_tm(a, b), ai2_v_elem(i));
}

} // namespace tla
