#pragma once

#include <map>
#include <string>
#include <vector>

#include "tla/lie.hpp"
#include "tla/scalar.hpp"
#include "tla/words.hpp"

namespace tla {

// Shared machinery for exact computation in enveloping algebras presented by
// generators with a PBW total order. A context supplies the generator type,
// the bracket, and the raising-family predicate; polynomials are kept in
// normal form (weakly increasing words) via the rewriting
//   ...ab... -> ...ba... + ...[a,b]...   whenever b < a,
// which terminates by the (length, inversions) well-order.

template <class Ctx>
const typename Ctx::Poly& nc_normal_word(Ctx& ctx, const typename Ctx::Word& w) {
    auto& cache = ctx.cache();
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    size_t i = 0;
    bool sorted = true;
    for (; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) {
            sorted = false;
            break;
        }
    typename Ctx::Poly out;
    if (sorted) {
        out.emplace(w, Scalar(1));
    } else {
        typename Ctx::Word sw = w;
        std::swap(sw[i], sw[i + 1]);
        out = nc_normal_word(ctx, sw);
        auto br = ctx.bracket(w[i], w[i + 1]);
        if (!br.empty()) {
            typename Ctx::Word bw(w.begin(), w.begin() + i);
            bw.push_back(w[i]);  // placeholder
            bw.insert(bw.end(), w.begin() + i + 2, w.end());
            for (const auto& [g, c] : br) {
                bw[i] = g;
                for (const auto& [ww, cc] : nc_normal_word(ctx, bw)) {
                    auto jt = out.find(ww);
                    if (jt == out.end()) {
                        out.emplace(ww, cc * c);
                    } else {
                        jt->second += cc * c;
                        if (jt->second.is_zero()) out.erase(jt);
                    }
                }
            }
        }
    }
    return cache.emplace(w, std::move(out)).first->second;
}

template <class P>
void nc_add_term(P& p, const typename P::key_type& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

template <class Ctx>
typename Ctx::Poly nc_normalize(Ctx& ctx, const typename Ctx::Poly& p) {
    typename Ctx::Poly out;
    for (const auto& [w, c] : p)
        for (const auto& [ww, cc] : nc_normal_word(ctx, w)) nc_add_term(out, ww, cc * c);
    return out;
}

template <class Ctx>
typename Ctx::Poly nc_add(const typename Ctx::Poly& a, const typename Ctx::Poly& b) {
    typename Ctx::Poly out = a;
    for (const auto& [w, c] : b) nc_add_term(out, w, c);
    return out;
}

template <class P>
P nc_scaled(const P& p, const Scalar& c) {
    P out;
    if (c.is_zero()) return out;
    for (const auto& [w, cc] : p) out.emplace(w, cc * c);
    return out;
}

template <class Ctx>
typename Ctx::Poly nc_mul(Ctx& ctx, const typename Ctx::Poly& a, const typename Ctx::Poly& b) {
    typename Ctx::Poly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            typename Ctx::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [ww, cc] : nc_normal_word(ctx, w)) nc_add_term(out, ww, cc * ca * cb);
        }
    return out;
}

template <class Ctx>
typename Ctx::Poly nc_divided_power(Ctx& ctx, const typename Ctx::Poly& base, int r) {
    typename Ctx::Poly out{{typename Ctx::Word{}, Scalar(1)}};
    Rational fact(1);
    for (int i = 1; i <= r; ++i) {
        out = nc_mul(ctx, out, base);
        fact *= i;
    }
    return nc_scaled(out, Scalar(Rational(1) / fact));
}

// Image of p in the quotient by the left ideal generated by the raising
// family. In normal form that ideal is spanned by the words containing a
// raising letter, so reduction just drops them.
template <class Ctx>
typename Ctx::Poly nc_reduce_pos(Ctx& ctx, const typename Ctx::Poly& p) {
    typename Ctx::Poly out;
    for (const auto& [w, c] : nc_normalize(ctx, p)) {
        bool has_pos = false;
        for (const auto& g : w)
            if (ctx.is_pos(g)) {
                has_pos = true;
                break;
            }
        if (!has_pos) nc_add_term(out, w, c);
    }
    return out;
}

// Generator of the auxiliary current algebra: kinds f(0) < h(1) < e(2), a
// letter of the index monoid, and a derivation degree n >= 0.
struct UGen {
    int kind = 0;
    MonoidElem a;
    int n = 0;
    auto operator<=>(const UGen&) const = default;

    static UGen F(const MonoidElem& a, int n) { return {0, a, n}; }
    static UGen H(const MonoidElem& a, int n) { return {1, a, n}; }
    static UGen E(const MonoidElem& a, int n) { return {2, a, n}; }
};

using UWord = std::vector<UGen>;
using UPoly = std::map<UWord, Scalar>;

// The current algebra over a chosen index monoid:
//   [h_{a,m}, e_{b,n}] = 2 e_{a+b,m+n},  [h_{a,m}, f_{b,n}] = -2 f_{a+b,m+n},
//   [e_{a,m}, f_{b,n}] = h_{a+b,m+n},    same kinds commute.
class CurrentAlg {
public:
    using Gen = UGen;
    using Word = UWord;
    using Poly = UPoly;

    explicit CurrentAlg(MonoidKind mk) : mk_(mk) {}
    MonoidKind monoid() const { return mk_; }

    std::map<UGen, Scalar> bracket(const UGen& g1, const UGen& g2) const;
    bool is_pos(const UGen& g) const { return g.kind == 2; }
    std::map<Word, Poly>& cache() { return cache_; }

    UGen gen(int kind, const MonoidElem& a, int n) const;

    // The degree-raising derivation D_a: x_{b,n} -> n x_{a+b,n+1}.
    Poly D(const MonoidElem& a, const Poly& u);
    // The twisted derivation: Dtilde_a(u) = u h_{a,1} - D_a(u).
    Poly Dtilde(const MonoidElem& a, const Poly& u);
    // Dtilde_{a_1} ... Dtilde_{a_r} applied to 1, rightmost factor first.
    Poly Dtilde_word(const std::vector<MonoidElem>& bfa);

private:
    MonoidKind mk_;
    std::map<Word, Poly> cache_;
};

using LWord = std::vector<LGen>;
using LPoly = std::map<LWord, Scalar>;

// Enveloping algebra of the loop algebra of a finite-dimensional g. The PBW
// order is (basis index, loop degree); each algebra lists its basis with
// families weakly increasing, so lowering < cartan < raising holds.
class LoopAlg {
public:
    using Gen = LGen;
    using Word = LWord;
    using Poly = LPoly;

    explicit LoopAlg(const LieAlg& g);
    const LieAlg& alg() const { return *g_; }

    std::map<LGen, Scalar> bracket(const LGen& g1, const LGen& g2) const;
    bool is_pos(const LGen& g) const { return g_->family(g.gi) == Family::Pos; }
    std::map<Word, Poly>& cache() { return cache_; }

    Poly from_loop(const LoopElem& x) const;

private:
    const LieAlg* g_;
    std::map<Word, Poly> cache_;
};

// Evaluation of the current algebra into the loop enveloping algebra of the
// given case; the derivation degree n is forgotten (delta_a1, a1) or folded
// into the second index coordinate (ai1). Not defined for ai2.
LoopElem ev_gen(CaseKind k, const UGen& g);
LPoly ev_poly(CaseKind k, LoopAlg& target, const UPoly& p);

// The cartan-valued symbols d_bfa: images of Dtilde_bfa(1) for the three
// sl2-patterned cases, and the parity-split recursion for ai2.
LPoly d_elem(CaseKind k, LoopAlg& target, const Word& bfa);

std::string upoly_str(const UPoly& p);
std::string lpoly_str(const LieAlg& g, const LPoly& p);

} // namespace tla
