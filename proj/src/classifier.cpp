#include "tla/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "tla/error.hpp"
#include "tla/invring.hpp"

namespace tla {

namespace {

struct CanonLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return canonical_less(a, b); }
};

// Gauss-Jordan; free variables are set to zero.  Nullopt when inconsistent.
std::optional<std::vector<Scalar>> gauss_solve(std::vector<std::vector<Scalar>> A,
                                               std::vector<Scalar> b) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && A[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[row]);
        std::swap(b[p], b[row]);
        Scalar inv = A[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) A[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            Scalar f = A[r][col];
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j) A[r][j] -= f * A[row][j];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

// Requires a verified small integer.
long to_long(const Scalar& s) {
    return boost::multiprecision::numerator(s.rat()).convert_to<long>();
}

// Integer in [-bound, bound]; guards to_long against absurd inputs.
bool is_bounded_integer(const Scalar& s, long bound) {
    return s.is_integer() && (Scalar(bound) - s).is_nonneg() && (s + Scalar(bound)).is_nonneg();
}

std::string roots_str(const std::vector<Scalar>& roots) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) os << ", ";
        os << roots[i].str();
    }
    os << "}";
    return os.str();
}

void record(ClassificationResult& r, std::string name, bool ok, std::string detail) {
    r.certificate.push_back(CheckRecord{std::move(name), ok, std::move(detail)});
}

}  // namespace

GeometricDecomposition detect_recurrence(const std::vector<Scalar>& s) {
    GeometricDecomposition out;
    long len = static_cast<long>(s.size());
    out.window = len;
    long found = -1;
    std::vector<Scalar> rec;
    for (long d = 0; 2 * d + 2 <= len; ++d) {
        if (d == 0) {
            bool zero = std::all_of(s.begin(), s.end(), [](const Scalar& v) { return v.is_zero(); });
            if (zero) {
                found = 0;
                break;
            }
            continue;
        }
        std::vector<std::vector<Scalar>> A;
        std::vector<Scalar> b;
        for (long t = d; t < len; ++t) {
            std::vector<Scalar> row(d);
            for (long i = 1; i <= d; ++i) row[i - 1] = s[t - i];
            A.push_back(std::move(row));
            b.push_back(s[t]);
        }
        if (auto q = gauss_solve(std::move(A), std::move(b))) {
            found = d;
            rec = *q;
            break;
        }
    }
    if (found < 0) {
        out.status = GeometricDecomposition::Status::Insufficient;
        out.why = "window of length " + std::to_string(len) +
                  " confirms no recurrence (order d needs 2d+2 terms)";
        return out;
    }
    out.order = found;
    out.recurrence = rec;
    if (found == 0) {
        out.pure = true;
        return out;
    }
    // z^d - q_1 z^{d-1} - ... - q_d, ascending below the monic top
    out.charpoly.assign(found, Scalar(0));
    for (long i = 0; i < found; ++i) out.charpoly[i] = -rec[found - 1 - i];
    std::string why;
    auto roots = poly_roots_in_field(out.charpoly, why);
    if (!roots) {
        out.status = GeometricDecomposition::Status::Unsupported;
        out.why = why;
        return out;
    }
    out.roots = *roots;
    bool pure = true;
    for (std::size_t i = 0; i < out.roots.size() && pure; ++i) {
        if (out.roots[i].is_zero()) pure = false;
        for (std::size_t j = i + 1; j < out.roots.size() && pure; ++j)
            if (out.roots[i] == out.roots[j]) pure = false;
    }
    out.pure = pure;
    if (!pure) return out;
    std::vector<Scalar> rts = out.roots;
    std::sort(rts.begin(), rts.end(), CanonLess{});
    std::vector<std::vector<Scalar>> M;
    std::vector<Scalar> b;
    for (long a = 0; a < found; ++a) {
        std::vector<Scalar> row;
        for (const auto& r : rts) row.push_back(r.pow(a));
        M.push_back(std::move(row));
        b.push_back(s[a]);
    }
    auto c = gauss_solve(std::move(M), std::move(b));
    if (!c) fail("Internal", "coefficient solve failed on distinct roots");
    for (std::size_t i = 0; i < rts.size(); ++i) out.terms.emplace_back(rts[i], (*c)[i]);
    for (long a = 0; a < len; ++a) {
        Scalar v(0);
        for (const auto& [r, co] : out.terms) v += co * r.pow(a);
        if (v != s[a]) fail("Internal", "decomposition failed residual confirmation");
    }
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::FiniteDimensional: return "finite_dimensional";
        case Verdict::NotFiniteDimensional: return "not_finite_dimensional";
        case Verdict::InsufficientData: return "insufficient_data";
        case Verdict::UnsupportedField: return "unsupported_field";
    }
    return "unknown";
}

namespace {

// Copies the recurrence evidence and converts detection failures into
// verdicts.  True when a pure decomposition is available.
bool adopt_decomposition(ClassificationResult& res, const GeometricDecomposition& gd,
                         const std::string& label) {
    res.recurrence = gd.recurrence;
    res.charpoly = gd.charpoly;
    if (gd.status == GeometricDecomposition::Status::Insufficient) {
        record(res, label + ".recurrence_confirmed", false, gd.why);
        res.verdict = Verdict::InsufficientData;
        res.why = label + ": " + gd.why;
        return false;
    }
    record(res, label + ".recurrence_confirmed", true, "order " + std::to_string(gd.order));
    if (gd.status == GeometricDecomposition::Status::Unsupported) {
        record(res, label + ".charpoly_splits", false, gd.why);
        res.verdict = Verdict::UnsupportedField;
        res.why = label + ": " + gd.why;
        return false;
    }
    record(res, label + ".charpoly_splits", true, roots_str(gd.roots));
    record(res, label + ".pure_geometric", gd.pure,
           gd.pure ? "roots pairwise distinct and nonzero" : "repeated root or root 0");
    if (!gd.pure) {
        res.verdict = Verdict::NotFiniteDimensional;
        res.why = label + ": decomposition has a repeated root or root 0";
        return false;
    }
    return true;
}

Scalar canonical_alpha(const Scalar& beta, const Scalar& sigma) {
    Scalar half(Rational(1, 2));
    Scalar a1 = (beta + sigma) * half;
    Scalar a2 = (beta - sigma) * half;
    return (a1 * a1 - Scalar(1)).is_nonneg() ? a1 : a2;
}

// Single-sequence logic: every coefficient a nonnegative integer, except that
// with_nu turns the roots +-2 into the free coefficients nu_{+-1}.  The
// optional comark adds the integrality constraint comark * nu in Z.
ClassificationResult classify_single(CaseKind kind, const std::vector<Scalar>& seq, bool with_nu,
                                     std::optional<long> nu_comark) {
    ClassificationResult res;
    res.kind = kind;
    auto gd = detect_recurrence(seq);
    if (!adopt_decomposition(res, gd, "w")) return res;
    bool ok = true;
    if (with_nu) {
        res.nu_plus = Scalar(0);
        res.nu_minus = Scalar(0);
    }
    for (const auto& [rho, c] : gd.terms) {
        if (with_nu && (rho == Scalar(2) || rho == Scalar(-2))) {
            bool at_two = (rho == Scalar(2));
            (at_two ? res.nu_plus : res.nu_minus) = c;
            if (nu_comark) {
                Scalar scaled = Scalar(*nu_comark) * c;
                bool fine = scaled.is_integer();
                record(res, std::string("nu_integrality[") + (at_two ? "2" : "-2") + "]", fine,
                       "comark " + std::to_string(*nu_comark) + " times " + c.str());
                ok &= fine;
            }
            continue;
        }
        bool isint = c.is_nonneg() && is_bounded_integer(c, 1000000);
        record(res, "multiplicity_nonneg_integer[" + rho.str() + "]", isint,
               "coefficient " + c.str());
        ok &= isint;
        if (!isint) continue;
        RootInfo ri;
        ri.beta = rho;
        ri.mult = to_long(c);
        if (auto sigma = sqrt_in_field(rho * rho - Scalar(4)))
            ri.alphas.assign(ri.mult, canonical_alpha(rho, *sigma));
        res.roots.push_back(std::move(ri));
    }
    res.verdict = ok ? Verdict::FiniteDimensional : Verdict::NotFiniteDimensional;
    if (!ok) res.why = "coefficient conditions violated";
    return res;
}

// Paired plus/minus logic shared by the folded-pair cases.  nu_mode frees the
// +-2 coefficients into nu in (1/2)Z>=0 and bans alpha = +-1; without it +-2
// are ordinary roots (alpha = +-1 allowed).  overall divides both sequences.
ClassificationResult classify_pair(CaseKind kind, std::vector<Scalar> plus,
                                   std::vector<Scalar> minus, bool nu_mode, long overall) {
    ClassificationResult res;
    res.kind = kind;
    if (plus.size() != minus.size())
        fail("CaseMismatch", "plus and minus windows differ in length");
    if (overall != 1) {
        Scalar inv = Scalar(overall).inverse();
        for (auto& v : plus) v *= inv;
        for (auto& v : minus) v *= inv;
        record(res, "overall_factor_removed", true,
               "divided both sequences by " + std::to_string(overall));
    }
    auto gd = detect_recurrence(plus);
    if (!adopt_decomposition(res, gd, "w_plus")) return res;
    bool ok = true;
    if (nu_mode) {
        res.nu_plus = Scalar(0);
        res.nu_minus = Scalar(0);
    }

    // The minus window must decompose over the same roots: solve on the
    // leading d entries, confirm on the remaining >= d+2.
    long d = gd.order;
    std::map<Scalar, Scalar, CanonLess> minus_coeff;
    bool span_ok = true;
    std::string span_detail = "solved on the leading terms, confirmed on the rest";
    if (d == 0) {
        for (std::size_t a = 0; a < minus.size() && span_ok; ++a)
            if (!minus[a].is_zero()) {
                span_ok = false;
                span_detail = "entry " + std::to_string(a) + " nonzero with empty plus decomposition";
            }
    } else {
        std::vector<std::vector<Scalar>> M;
        std::vector<Scalar> b;
        for (long a = 0; a < d; ++a) {
            std::vector<Scalar> row;
            for (const auto& t : gd.terms) row.push_back(t.first.pow(a));
            M.push_back(std::move(row));
            b.push_back(minus[a]);
        }
        auto c = gauss_solve(std::move(M), std::move(b));
        if (!c) fail("Internal", "minus-side solve failed on distinct roots");
        for (std::size_t i = 0; i < gd.terms.size(); ++i) minus_coeff[gd.terms[i].first] = (*c)[i];
        for (long a = d; a < static_cast<long>(minus.size()) && span_ok; ++a) {
            Scalar v(0);
            for (const auto& [r, co] : minus_coeff) v += co * r.pow(a);
            if (v != minus[a]) {
                span_ok = false;
                span_detail = "entry " + std::to_string(a) + " deviates from the plus-root span";
            }
        }
    }
    record(res, "minus_in_plus_span", span_ok, span_detail);
    ok &= span_ok;

    for (const auto& [rho, c] : gd.terms) {
        Scalar mc = minus_coeff.count(rho) ? minus_coeff[rho] : Scalar(0);
        if (rho == Scalar(2) || rho == Scalar(-2)) {
            bool at_two = (rho == Scalar(2));
            std::string tag = at_two ? "2" : "-2";
            if (nu_mode) {
                bool fine = c.is_half_integer() && c.is_nonneg();
                record(res, "nu_half_integer_nonneg[" + tag + "]", fine, "coefficient " + c.str());
                ok &= fine;
                (at_two ? res.nu_plus : res.nu_minus) = c;
            } else {
                bool isint = c.is_nonneg() && is_bounded_integer(c, 1000000);
                record(res, "multiplicity_nonneg_integer[" + tag + "]", isint,
                       "coefficient " + c.str());
                ok &= isint;
                if (isint) {
                    RootInfo ri;
                    ri.beta = rho;
                    ri.mult = to_long(c);
                    ri.minus_coeff = mc;
                    ri.j_signed = true;
                    ri.alphas.assign(ri.mult, Scalar(at_two ? 1 : -1));
                    res.roots.push_back(std::move(ri));
                }
            }
            if (span_ok) {
                bool z = mc.is_zero();
                record(res, "minus_vanishes_at[" + tag + "]", z, "minus coefficient " + mc.str());
                ok &= z;
            }
            continue;
        }
        bool isint = c.is_nonneg() && is_bounded_integer(c, 1000000);
        record(res, "multiplicity_nonneg_integer[" + rho.str() + "]", isint,
               "coefficient " + c.str());
        ok &= isint;
        if (!isint || !span_ok) continue;
        long k = to_long(c);
        RootInfo ri;
        ri.beta = rho;
        ri.mult = k;
        ri.minus_coeff = mc;
        Scalar disc = rho * rho - Scalar(4);
        if (auto sigma = sqrt_in_field(disc)) {
            // signed: the minus coefficient is j * (alpha - alpha^{-1})
            Scalar alpha = canonical_alpha(rho, *sigma);
            Scalar jv = mc / (alpha - alpha.inverse());
            bool fine = is_bounded_integer(jv, k);
            long j = 0;
            if (fine) {
                j = to_long(jv);
                fine = ((k - j) % 2 == 0);
            }
            record(res, "imbalance_integer[" + rho.str() + "]", fine,
                   "minus coefficient " + mc.str() + " needs integer j, |j| <= " +
                       std::to_string(k) + ", j = k mod 2");
            ok &= fine;
            if (fine) {
                ri.j = j;
                ri.j_signed = true;
                ri.alphas.insert(ri.alphas.end(), (k + j) / 2, alpha);
                ri.alphas.insert(ri.alphas.end(), (k - j) / 2, alpha.inverse());
            }
        } else {
            // unsigned: only c^2 = j^2 (beta^2 - 4) is checkable in the field
            Scalar ratio = (mc * mc) / disc;
            bool fine = ratio.is_rational() && ratio.is_nonneg();
            long j = 0;
            if (fine) {
                auto rt = rational_sqrt(ratio.rat());
                fine = rt.has_value() && is_bounded_integer(Scalar(*rt), k);
                if (fine) {
                    j = to_long(Scalar(*rt));
                    fine = ((k - j) % 2 == 0);
                }
            }
            record(res, "imbalance_integer[" + rho.str() + "]", fine,
                   "minus coefficient squared must be j^2 (beta^2 - 4), j <= " +
                       std::to_string(k) + ", j = k mod 2 (sign open: sqrt outside field)");
            ok &= fine;
            if (fine) {
                ri.j = j;
                ri.j_signed = false;
            }
        }
        res.roots.push_back(std::move(ri));
    }
    res.verdict = ok ? Verdict::FiniteDimensional : Verdict::NotFiniteDimensional;
    if (!ok) res.why = "pair conditions violated";
    return res;
}

// Native two-sided window: the positive half decomposes over the evaluation
// points directly; the negative half verifies against rho^{-a}.
ClassificationResult classify_native_two_sided(const std::vector<Scalar>& seq, long m) {
    ClassificationResult res;
    res.kind = CaseKind::DeltaA1;
    std::vector<Scalar> pos(seq.begin() + m, seq.end());
    auto gd = detect_recurrence(pos);
    if (!adopt_decomposition(res, gd, "w")) return res;
    bool ok = true;
    std::map<Scalar, long, CanonLess> mult;
    for (const auto& [alpha, c] : gd.terms) {
        bool isint = c.is_nonneg() && is_bounded_integer(c, 1000000);
        record(res, "multiplicity_nonneg_integer[" + alpha.str() + "]", isint,
               "coefficient " + c.str());
        ok &= isint;
        if (isint) mult[alpha] = to_long(c);
    }
    bool neg_ok = true;
    std::string neg_detail = "matches the decomposition at negative exponents";
    for (long a = 1; a <= m && neg_ok; ++a) {
        Scalar v(0);
        for (const auto& [alpha, c] : gd.terms) v += c * alpha.pow(-a);
        if (v != seq[m - a]) {
            neg_ok = false;
            neg_detail = "entry at a = -" + std::to_string(a) + " deviates";
        }
    }
    record(res, "negative_side_consistent", neg_ok, neg_detail);
    ok &= neg_ok;
    if (ok) {
        // report per Gamma-orbit: group the points into beta classes
        std::map<Scalar, RootInfo, CanonLess> classes;
        for (const auto& [alpha, k] : mult) {
            Scalar beta = alpha + alpha.inverse();
            RootInfo& ri = classes[beta];
            ri.beta = beta;
            ri.mult += k;
            ri.minus_coeff += (alpha - alpha.inverse()) * Scalar(k);
            ri.j_signed = true;
            if (alpha != Scalar(1) && alpha != Scalar(-1))
                ri.j += (alpha * alpha - Scalar(1)).is_nonneg() ? k : -k;
            ri.alphas.insert(ri.alphas.end(), k, alpha);
        }
        for (auto& [beta, ri] : classes) {
            std::sort(ri.alphas.begin(), ri.alphas.end(), CanonLess{});
            res.roots.push_back(std::move(ri));
        }
    }
    res.verdict = ok ? Verdict::FiniteDimensional : Verdict::NotFiniteDimensional;
    if (!ok) res.why = "point conditions violated";
    return res;
}

}  // namespace

ClassificationResult classify_case(CaseKind kind, const MomentData& data) {
    if (data.kind != kind)
        fail("CaseMismatch", "moment data tagged " + case_name(data.kind) +
                                 " but the classifier was invoked for " + case_name(kind));
    long m = data.a_max;
    if (m < 0) fail("CaseMismatch", "a_max must be nonnegative");
    auto need = [&](const char* key, long len) -> const std::vector<Scalar>& {
        auto it = data.sequences.find(key);
        if (it == data.sequences.end())
            fail("CaseMismatch", std::string("missing sequence \"") + key + "\"");
        if (static_cast<long>(it->second.size()) != len)
            fail("CaseMismatch", std::string("sequence \"") + key + "\" must have length " +
                                     std::to_string(len));
        return it->second;
    };
    switch (kind) {
        case CaseKind::A1:
            return classify_single(kind, need("w", m + 1), false, std::nullopt);
        case CaseKind::AI1:
            return classify_single(kind, need("w", m + 1), true, std::nullopt);
        case CaseKind::AI2:
            return classify_pair(kind, need("w_plus", m + 1), need("w_minus", m + 1), true, 1);
        case CaseKind::DeltaA1:
            if (data.sequences.count("w"))
                return classify_native_two_sided(need("w", 2 * m + 1), m);
            return classify_pair(kind, need("w_plus", m + 1), need("w_minus", m + 1), false, 1);
    }
    fail("CaseMismatch", "unknown case tag");
}

MomentData synthesize_moments(CaseKind kind, const SynthParams& p, long a_max) {
    for (const auto& a : p.alphas)
        if (a.is_zero()) fail("BadPoint", "evaluation points must be nonzero");
    if (a_max < 0) fail("BadPoint", "a_max must be nonnegative");
    MomentData md;
    md.kind = kind;
    md.a_max = a_max;
    auto beta = [](const Scalar& a) { return a + a.inverse(); };
    switch (kind) {
        case CaseKind::DeltaA1: {
            std::vector<Scalar> w;
            for (long a = -a_max; a <= a_max; ++a) {
                Scalar v(0);
                for (const auto& al : p.alphas) v += al.pow(a);
                w.push_back(v);
            }
            md.sequences["w"] = std::move(w);
            break;
        }
        case CaseKind::A1: {
            std::vector<Scalar> w;
            for (long a = 0; a <= a_max; ++a) {
                Scalar v(0);
                for (const auto& al : p.alphas) v += beta(al).pow(a);
                w.push_back(v);
            }
            md.sequences["w"] = std::move(w);
            break;
        }
        case CaseKind::AI1: {
            std::vector<Scalar> w;
            for (long a = 0; a <= a_max; ++a) {
                Scalar v = p.nu1 * Scalar(2).pow(a) + p.nu_1 * Scalar(-2).pow(a);
                for (const auto& al : p.alphas) v += beta(al).pow(a);
                w.push_back(v);
            }
            md.sequences["w"] = std::move(w);
            break;
        }
        case CaseKind::AI2: {
            std::vector<Scalar> wp, wm;
            for (long a = 0; a <= a_max; ++a) {
                Scalar vp = p.nu1 * Scalar(2).pow(a) + p.nu_1 * Scalar(-2).pow(a);
                Scalar vm(0);
                for (const auto& al : p.alphas) {
                    vp += beta(al).pow(a);
                    vm += beta(al).pow(a) * (al - al.inverse());
                }
                wp.push_back(vp);
                wm.push_back(vm);
            }
            md.sequences["w_plus"] = std::move(wp);
            md.sequences["w_minus"] = std::move(wm);
            break;
        }
    }
    return md;
}

GeneralNodeData synthesize_node(char node_case, const SynthParams& p, long a_max) {
    GeneralNodeData nd;
    auto beta = [](const Scalar& a) { return a + a.inverse(); };
    bool has_nu = (node_case == 'c' || node_case == 'd');
    bool has_minus = (node_case == 'a' || node_case == 'd');
    Scalar factor = (node_case == 'd') ? Scalar(2) : Scalar(1);
    if (node_case != 'a' && node_case != 'b' && node_case != 'c' && node_case != 'd')
        fail("CaseMismatch", "unknown node case");
    for (long a = 0; a <= a_max; ++a) {
        Scalar vp(0), vm(0);
        if (has_nu) vp = p.nu1 * Scalar(2).pow(a) + p.nu_1 * Scalar(-2).pow(a);
        for (const auto& al : p.alphas) {
            vp += beta(al).pow(a);
            if (has_minus) vm += beta(al).pow(a) * (al - al.inverse());
        }
        nd.w.push_back(factor * vp);
        if (has_minus) nd.w_minus.push_back(factor * vm);
    }
    return nd;
}

ClassificationResult classify_general(const GeneralRouting& row,
                                      const std::map<int, GeneralNodeData>& data) {
    ClassificationResult res;
    res.is_general = true;
    bool any_notfd = false, any_unsup = false, any_insuf = false;
    for (const auto& node : row.nodes) {
        auto it = data.find(node.node);
        if (it == data.end())
            fail("NodeData", "no moment data for node " + std::to_string(node.node));
        ClassificationResult nr;
        switch (node.node_case) {
            case 'a':
                nr = classify_pair(CaseKind::DeltaA1, it->second.w, it->second.w_minus, false, 1);
                break;
            case 'b':
                nr = classify_single(CaseKind::A1, it->second.w, false, std::nullopt);
                break;
            case 'c':
                nr = classify_single(CaseKind::AI1, it->second.w, true,
                                     row.zero_in_stilde ? std::nullopt
                                                        : std::optional<long>(node.comark));
                break;
            case 'd':
                nr = classify_pair(CaseKind::AI2, it->second.w, it->second.w_minus, true, 2);
                break;
            default:
                fail("UnknownDiagramRow", "node case out of range");
        }
        switch (nr.verdict) {
            case Verdict::NotFiniteDimensional: any_notfd = true; break;
            case Verdict::UnsupportedField: any_unsup = true; break;
            case Verdict::InsufficientData: any_insuf = true; break;
            case Verdict::FiniteDimensional: break;
        }
        record(res, std::string("node_") + std::to_string(node.node) + "(" + node.node_case + ")",
               nr.verdict == Verdict::FiniteDimensional, verdict_name(nr.verdict));
        if (nr.verdict != Verdict::FiniteDimensional && res.why.empty())
            res.why = "node " + std::to_string(node.node) + ": " +
                      (nr.why.empty() ? verdict_name(nr.verdict) : nr.why);
        res.node_results.emplace_back(node.node, std::move(nr));
    }
    res.verdict = any_notfd   ? Verdict::NotFiniteDimensional
                  : any_unsup ? Verdict::UnsupportedField
                  : any_insuf ? Verdict::InsufficientData
                              : Verdict::FiniteDimensional;
    return res;
}

}  // namespace tla
