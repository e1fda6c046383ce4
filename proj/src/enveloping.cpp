#include "tla/enveloping.hpp"

namespace tla {

UGen CurrentAlg::gen(int kind, const MonoidElem& a, int n) const {
    if (a.kind != mk_ || !a.valid()) fail("BadIndex", "letter " + a.str() + " invalid for this current algebra");
    if (n < 0) fail("BadIndex", "derivation degree must be nonnegative");
    return UGen{kind, a, n};
}

std::map<UGen, Scalar> CurrentAlg::bracket(const UGen& g1, const UGen& g2) const {
    std::map<UGen, Scalar> out;
    if (g1.kind == g2.kind) return out;
    MonoidElem a = g1.a + g2.a;
    int n = g1.n + g2.n;
    auto put = [&](int kind, const Scalar& c) { out.emplace(UGen{kind, a, n}, c); };
    if (g1.kind == 1 && g2.kind == 2) put(2, Scalar(2));
    else if (g1.kind == 2 && g2.kind == 1) put(2, Scalar(-2));
    else if (g1.kind == 1 && g2.kind == 0) put(0, Scalar(-2));
    else if (g1.kind == 0 && g2.kind == 1) put(0, Scalar(2));
    else if (g1.kind == 2 && g2.kind == 0) put(1, Scalar(1));
    else if (g1.kind == 0 && g2.kind == 2) put(1, Scalar(-1));
    return out;
}

UPoly CurrentAlg::D(const MonoidElem& a, const Poly& u) {
    Poly out;
    for (const auto& [w, c] : u) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i].n == 0) continue;
            Word dw = w;
            dw[i] = UGen{w[i].kind, a + w[i].a, w[i].n + 1};
            nc_add_term(out, dw, c * Scalar(w[i].n));
        }
    }
    return nc_normalize(*this, out);
}

UPoly CurrentAlg::Dtilde(const MonoidElem& a, const Poly& u) {
    Poly h1{{Word{UGen::H(a, 1)}, Scalar(1)}};
    Poly out = nc_mul(*this, u, h1);
    for (const auto& [w, c] : D(a, u)) nc_add_term(out, w, -c);
    return out;
}

UPoly CurrentAlg::Dtilde_word(const std::vector<MonoidElem>& bfa) {
    Poly p{{Word{}, Scalar(1)}};
    for (size_t i = bfa.size(); i-- > 0;) p = Dtilde(bfa[i], p);
    return p;
}

LoopAlg::LoopAlg(const LieAlg& g) : g_(&g) {
    for (int i = 1; i < g.dim(); ++i)
        if (g.family(i - 1) > g.family(i))
            fail("Internal", "basis families must be weakly increasing for the PBW order");
}

std::map<LGen, Scalar> LoopAlg::bracket(const LGen& g1, const LGen& g2) const {
    std::map<LGen, Scalar> out;
    for (const auto& [k, c] : g_->bracket(g1.gi, g2.gi)) out.emplace(LGen{k, g1.k + g2.k}, c);
    return out;
}

LPoly LoopAlg::from_loop(const LoopElem& x) const {
    Poly out;
    for (const auto& [g, c] : x) out.emplace(Word{g}, c);
    return out;
}

LoopElem ev_gen(CaseKind k, const UGen& g) {
    MonoidElem a = g.a;
    switch (k) {
        case CaseKind::DeltaA1:
        case CaseKind::A1:
            break;  // derivation degree forgotten
        case CaseKind::AI1:
            a = MonoidElem::of_pair(g.a.x, g.a.y + g.n);
            break;
        case CaseKind::AI2:
            fail("BadCase", "case ai2 has no current-algebra evaluation");
    }
    switch (g.kind) {
        case 0: return case_y(k, a);
        case 1: return case_w(k, a);
        case 2: return case_x(k, a);
    }
    fail("BadIndex", "invalid generator kind");
}

LPoly ev_poly(CaseKind k, LoopAlg& target, const UPoly& p) {
    LPoly out;
    for (const auto& [w, c] : p) {
        LPoly prod{{LWord{}, Scalar(1)}};
        for (const auto& g : w) prod = nc_mul(target, prod, target.from_loop(ev_gen(k, g)));
        for (const auto& [ww, cc] : prod) nc_add_term(out, ww, cc * c);
    }
    return out;
}

static LPoly d_elem_ai2(LoopAlg& target, const Word& bfa) {
    if (bfa.empty()) return LPoly{{LWord{}, Scalar(1)}};
    MonoidElem head = bfa[0];
    if (bfa.size() == 1) {
        LoopElem w = (head.y % 2 == 0) ? case_w_plus(CaseKind::AI2, head)
                                       : loop_scaled(case_w_minus(CaseKind::AI2, head), Scalar(-1));
        return target.from_loop(w);
    }
    Word rest(bfa.begin() + 1, bfa.end());
    LPoly out = nc_mul(target, d_elem_ai2(target, {head}), d_elem_ai2(target, rest));
    for (size_t l = 0; l < rest.size(); ++l) {
        Word merged = rest;
        merged[l] = merged[l] + head;
        for (const auto& [w, c] : d_elem_ai2(target, merged)) nc_add_term(out, w, -c);
    }
    return out;
}

LPoly d_elem(CaseKind k, LoopAlg& target, const Word& bfa) {
    for (const auto& a : bfa)
        if (a.kind != case_monoid(k) || !a.valid())
            fail("BadIndex", "letter " + a.str() + " invalid for case " + case_name(k));
    if (k == CaseKind::AI2) return d_elem_ai2(target, bfa);
    CurrentAlg cur(case_monoid(k));
    return ev_poly(k, target, cur.Dtilde_word(bfa));
}

std::string upoly_str(const UPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    const char* kinds = "fhe";
    for (const auto& [w, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (const auto& g : w)
            s += " " + std::string(1, kinds[g.kind]) + "[" + g.a.str() + "," + std::to_string(g.n) + "]";
        if (w.empty()) s += " 1";
    }
    return s;
}

std::string lpoly_str(const LieAlg& g, const LPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (const auto& gen : w) s += " t^" + std::to_string(gen.k) + "." + g.basis_name(gen.gi);
        if (w.empty()) s += " 1";
    }
    return s;
}

} // namespace tla
