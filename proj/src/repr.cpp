#include "tla/repr.hpp"

#include <algorithm>

#include "tla/error.hpp"

namespace tla {

Matrix mat_zero(int rows, int cols) {
    return Matrix(rows, std::vector<Scalar>(cols, Scalar(0)));
}

Matrix mat_identity(int n) {
    Matrix a = mat_zero(n, n);
    for (int i = 0; i < n; ++i) a[i][i] = Scalar(1);
    return a;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        fail("Internal", "matrix shape mismatch");
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        fail("Internal", "matrix product shape mismatch");
    Matrix out = mat_zero(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Matrix mat_scaled(const Matrix& a, const Scalar& c) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> mat_apply(const Matrix& a, const std::vector<Scalar>& v) {
    if (!a.empty() && a[0].size() != v.size()) fail("Internal", "matrix apply shape mismatch");
    std::vector<Scalar> out(a.size(), Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

long mat_rank(Matrix a) {
    long rank = 0;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        Scalar inv = a[row][col].inverse();
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Scalar c = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= c * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

const Matrix& MatrixRep::act(const std::string& label) const {
    auto it = action.find(label);
    if (it == action.end()) fail("BadIndex", "representation has no action for label " + label);
    return it->second;
}

static Scalar binomial(long m, long k) {
    Scalar out(1);
    for (long i = 0; i < k; ++i) out *= Scalar(m - i) / Scalar(i + 1);
    return out;
}

MatrixRep build_irrep_sl2(long m) {
    if (m < 0) fail("BadParameter", "sl2 highest weight must be nonnegative");
    int n = static_cast<int>(m) + 1;
    MatrixRep rep;
    rep.dim = n;
    rep.highest_vector = 0;
    Matrix e = mat_zero(n, n), f = mat_zero(n, n), h = mat_zero(n, n);
    for (int k = 0; k < n; ++k) {
        h[k][k] = Scalar(m - 2 * k);
        if (k > 0) e[k - 1][k] = Scalar(m - k + 1);
        if (k + 1 < n) f[k + 1][k] = Scalar(k + 1);
    }
    rep.action = {{"f", f}, {"h", h}, {"e", e}};
    rep.gram_diag.reserve(n);
    for (int k = 0; k < n; ++k) rep.gram_diag.push_back(binomial(m, k));
    return rep;
}

MatrixRep build_irrep_sl2sl2(long m1, long m2) {
    MatrixRep a = build_irrep_sl2(m1), b = build_irrep_sl2(m2);
    int n1 = a.dim, n2 = b.dim;
    int n = n1 * n2;
    auto kron_left = [&](const Matrix& x) {
        Matrix out = mat_zero(n, n);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j)
                if (!x[i][j].is_zero())
                    for (int k = 0; k < n2; ++k) out[i * n2 + k][j * n2 + k] = x[i][j];
        return out;
    };
    auto kron_right = [&](const Matrix& x) {
        Matrix out = mat_zero(n, n);
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j)
                if (!x[i][j].is_zero())
                    for (int k = 0; k < n1; ++k) out[k * n2 + i][k * n2 + j] = x[i][j];
        return out;
    };
    MatrixRep rep;
    rep.dim = n;
    rep.highest_vector = 0;
    rep.action = {{"f1", kron_left(a.act("f"))}, {"f2", kron_right(b.act("f"))},
                  {"h1", kron_left(a.act("h"))}, {"h2", kron_right(b.act("h"))},
                  {"e1", kron_left(a.act("e"))}, {"e2", kron_right(b.act("e"))}};
    rep.gram_diag.reserve(n);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) rep.gram_diag.push_back(a.gram_diag[i] * b.gram_diag[j]);
    return rep;
}

MatrixRep build_irrep_sl3_fundamental() {
    MatrixRep rep;
    rep.dim = 3;
    rep.highest_vector = 0;
    auto unit = [](int i, int j) {
        Matrix m = mat_zero(3, 3);
        m[i][j] = Scalar(1);
        return m;
    };
    Matrix e1 = unit(0, 1), e2 = unit(1, 2);
    Matrix f1 = unit(1, 0), f2 = unit(2, 1);
    Matrix h1 = mat_zero(3, 3), h2 = mat_zero(3, 3);
    h1[0][0] = Scalar(1); h1[1][1] = Scalar(-1);
    h2[1][1] = Scalar(1); h2[2][2] = Scalar(-1);
    Matrix X = mat_scaled(unit(0, 2), Scalar(-1));  // X = [e2,e1] = -E13
    Matrix Y = mat_scaled(unit(2, 0), Scalar(-1));  // Y = [f1,f2] = -E31
    rep.action = {{"f1", f1}, {"f2", f2}, {"Y", Y}, {"h1", h1},
                  {"h2", h2}, {"e1", e1}, {"e2", e2}, {"X", X}};
    rep.gram_diag = {Scalar(1), Scalar(1), Scalar(1)};
    return rep;
}

MatrixRep build_irrep_k_so3(const Scalar& nu) {
    if (!nu.is_half_integer() || !nu.is_nonneg())
        fail("BadParameter", "so3-type spin must lie in (1/2)Z>=0");
    Scalar two_nu = nu * Scalar(2);
    long m = 0;
    // two_nu is a nonnegative integer; recover it exactly.
    while (Scalar(m) != two_nu) {
        ++m;
        if (m > 1000000) fail("BadParameter", "spin too large");
    }
    // String module of the sl2-triple (x_+, 2 y_+, 2 w_+).
    MatrixRep s = build_irrep_sl2(m);
    MatrixRep rep;
    rep.dim = s.dim;
    rep.highest_vector = 0;
    Scalar half = Scalar(1) / Scalar(2);
    rep.action = {{"x_+", s.act("e")},
                  {"y_+", mat_scaled(s.act("f"), half)},
                  {"w_+", mat_scaled(s.act("h"), half)}};
    rep.gram_diag.reserve(s.dim);
    Scalar g(1);
    rep.gram_diag.push_back(g);
    // <x_+ u, v> = <u, y_+ v> forces g_k = 2^k binom(m,k).
    for (long k = 1; k <= m; ++k) rep.gram_diag.push_back(Scalar(2).pow(k) * binomial(m, k));
    return rep;
}

MatrixRep build_irrep_k_abelian(const Scalar& nu) {
    MatrixRep rep;
    rep.dim = 1;
    rep.highest_vector = 0;
    rep.action = {{"h", Matrix{{nu}}}};
    rep.gram_diag = {Scalar(1)};
    return rep;
}

static const std::vector<std::string>& expected_labels(CaseKind kind, EvalFlavor flavor) {
    static const std::vector<std::string> sl2{"f", "h", "e"};
    static const std::vector<std::string> sl2sl2{"f1", "f2", "h1", "h2", "e1", "e2"};
    static const std::vector<std::string> sl3{"f1", "f2", "Y", "h1", "h2", "e1", "e2", "X"};
    static const std::vector<std::string> k_ai1{"h"};
    static const std::vector<std::string> k_ai2{"x_+", "y_+", "w_+"};
    if (flavor == EvalFlavor::FullG) {
        switch (kind) {
            case CaseKind::DeltaA1: return sl2sl2;
            case CaseKind::A1: return sl2;
            case CaseKind::AI1: return sl2;
            case CaseKind::AI2: return sl3;
        }
    } else {
        switch (kind) {
            case CaseKind::AI1: return k_ai1;
            case CaseKind::AI2: return k_ai2;
            default: break;
        }
        fail("BadParameter", "k-only evaluation is defined for cases ai1 and ai2");
    }
    fail("BadCase", "invalid case kind");
}

EvalModule make_eval_module(CaseKind kind, MatrixRep rep, const Scalar& point,
                            EvalFlavor flavor) {
    for (const auto& label : expected_labels(kind, flavor))
        if (!rep.action.count(label))
            fail("BadParameter", "representation lacks label " + label + " required by the case");
    if (flavor == EvalFlavor::FullG) {
        if (point.is_zero()) fail("BadParameter", "evaluation point must be nonzero");
    } else {
        if (point != Scalar(1) && point != Scalar(-1))
            fail("BadParameter", "k-only evaluation point must be +-1");
    }
    return EvalModule{std::move(rep), point, flavor};
}

long TensorModule::dim() const {
    long d = 1;
    for (const auto& f : factors) d *= f.base.dim;
    return d;
}

long TensorModule::highest_index() const {
    long idx = 0;
    for (const auto& f : factors) idx = idx * f.base.dim + f.base.highest_vector;
    return idx;
}

std::vector<Scalar> TensorModule::highest() const {
    std::vector<Scalar> v(dim(), Scalar(0));
    v[highest_index()] = Scalar(1);
    return v;
}

std::vector<Scalar> TensorModule::gram_diag() const {
    std::vector<Scalar> g{Scalar(1)};
    for (const auto& f : factors) {
        std::vector<Scalar> next;
        next.reserve(g.size() * f.base.dim);
        for (const auto& a : g)
            for (const auto& b : f.base.gram_diag) next.push_back(a * b);
        g = std::move(next);
    }
    return g;
}

TensorModule make_tensor_module(CaseKind kind, std::vector<EvalModule> factors) {
    return TensorModule{kind, std::move(factors)};
}

Matrix factor_action(const EvalModule& f, CaseKind kind, const LoopElem& x) {
    const LieAlg& g = case_algebra(kind);
    if (f.flavor == EvalFlavor::FullG) {
        Matrix out = mat_zero(f.base.dim, f.base.dim);
        for (const auto& [gen, c] : x) {
            Scalar coeff = c * f.point.pow(gen.k);
            if (coeff.is_zero()) continue;
            out = mat_add(out, mat_scaled(f.base.act(g.basis_name(gen.gi)), coeff));
        }
        return out;
    }
    // Fiber of x at the point +-1, as coordinates in the basis of g.
    std::map<int, Scalar> fiber;
    for (const auto& [gen, c] : x) {
        Scalar coeff = c * f.point.pow(gen.k);
        if (!coeff.is_zero()) fiber[gen.gi] += coeff;
    }
    auto coord = [&](const char* name) {
        auto it = fiber.find(g.index_of(name));
        return it == fiber.end() ? Scalar(0) : it->second;
    };
    if (kind == CaseKind::AI1) {
        if (!coord("e").is_zero() || !coord("f").is_zero())
            fail("PointMismatch", "fiber at " + f.point.str() + " falls outside the fixed-point line");
        return mat_scaled(f.base.act("h"), coord("h"));
    }
    if (kind == CaseKind::AI2) {
        if (coord("e1") != coord("e2") || coord("f1") != coord("f2") ||
            coord("h1") != coord("h2") || !coord("X").is_zero() || !coord("Y").is_zero())
            fail("PointMismatch", "fiber at " + f.point.str() + " falls outside the fixed-point algebra");
        Matrix out = mat_scaled(f.base.act("x_+"), coord("e1"));
        out = mat_add(out, mat_scaled(f.base.act("y_+"), coord("f1")));
        out = mat_add(out, mat_scaled(f.base.act("w_+"), coord("h1")));
        return out;
    }
    fail("BadParameter", "k-only evaluation is defined for cases ai1 and ai2");
}

std::vector<Scalar> loop_action(const TensorModule& m, const LoopElem& x,
                                const std::vector<Scalar>& v) {
    if (static_cast<long>(v.size()) != m.dim()) fail("Internal", "vector length mismatch");
    std::vector<Scalar> out(v.size(), Scalar(0));
    long right = m.dim();
    for (size_t fi = 0; fi < m.factors.size(); ++fi) {
        long d = m.factors[fi].base.dim;
        right /= d;
        Matrix a = factor_action(m.factors[fi], m.kind, x);
        // Apply I (x) a (x) I where the factor has block stride `right`.
        for (long base = 0; base < static_cast<long>(v.size()); base += d * right) {
            for (long r = 0; r < right; ++r) {
                for (long i = 0; i < d; ++i) {
                    Scalar acc(0);
                    for (long j = 0; j < d; ++j) {
                        const Scalar& vj = v[base + j * right + r];
                        if (!a[i][j].is_zero() && !vj.is_zero()) acc += a[i][j] * vj;
                    }
                    out[base + i * right + r] += acc;
                }
            }
        }
    }
    return out;
}

Matrix loop_action_matrix(const TensorModule& m, const LoopElem& x) {
    long n = m.dim();
    Matrix out = mat_zero(static_cast<int>(n), static_cast<int>(n));
    std::vector<Scalar> e(n, Scalar(0));
    for (long j = 0; j < n; ++j) {
        e[j] = Scalar(1);
        std::vector<Scalar> col = loop_action(m, x, e);
        e[j] = Scalar(0);
        for (long i = 0; i < n; ++i) out[i][j] = col[i];
    }
    return out;
}

MomentData highest_weight_functional(const TensorModule& m, long a_max) {
    if (a_max < 0) fail("BadParameter", "sequence bound must be nonnegative");
    MomentData out;
    out.kind = m.kind;
    out.a_max = a_max;
    std::vector<Scalar> v = m.highest();
    long hi = m.highest_index();
    auto eigenvalue = [&](const LoopElem& x) {
        std::vector<Scalar> w = loop_action(m, x, v);
        for (long i = 0; i < static_cast<long>(w.size()); ++i)
            if (i != hi && !w[i].is_zero())
                fail("NotWeightVector", "cartan action is not scalar on the highest vector");
        return w[hi];
    };
    switch (m.kind) {
        case CaseKind::DeltaA1: {
            std::vector<Scalar> seq;
            for (long a = -a_max; a <= a_max; ++a)
                seq.push_back(eigenvalue(case_w(m.kind, MonoidElem::of_int(a))));
            out.sequences["w"] = std::move(seq);
            break;
        }
        case CaseKind::A1: {
            std::vector<Scalar> seq;
            for (long a = 0; a <= a_max; ++a)
                seq.push_back(eigenvalue(case_w(m.kind, MonoidElem::of_nat(a))));
            out.sequences["w"] = std::move(seq);
            break;
        }
        case CaseKind::AI1: {
            std::vector<Scalar> seq;
            for (long a = 0; a <= a_max; ++a)
                seq.push_back(eigenvalue(case_w(m.kind, MonoidElem::of_pair(a, 0))));
            out.sequences["w"] = std::move(seq);
            break;
        }
        case CaseKind::AI2: {
            std::vector<Scalar> plus, minus;
            for (long a = 0; a <= a_max; ++a) {
                plus.push_back(eigenvalue(case_w_plus(m.kind, MonoidElem::of_pair(a, 0))));
                minus.push_back(eigenvalue(case_w_minus(m.kind, MonoidElem::of_pair(a, 1))));
            }
            out.sequences["w_plus"] = std::move(plus);
            out.sequences["w_minus"] = std::move(minus);
            break;
        }
    }
    return out;
}

// t_+^a t_-^b tensor a fixed sl3 element, by basis names and coefficients.
static LoopElem ai2_span(long a, long b,
                         std::initializer_list<std::pair<const char*, long>> parts) {
    const LieAlg& g = LieAlg::sl3();
    LieAlg::Elem z;
    for (const auto& [name, c] : parts) z[g.index_of(name)] = Scalar(c);
    return loop_tensor(g, LaurentPoly::tp_tm(a, b), z);
}

std::vector<LoopElem> negative_family(CaseKind kind, long bound) {
    std::vector<LoopElem> out;
    switch (kind) {
        case CaseKind::DeltaA1:
            for (long a = -bound; a <= bound; ++a)
                out.push_back(case_y(kind, MonoidElem::of_int(a)));
            break;
        case CaseKind::A1:
            for (long a = 0; a <= bound; ++a)
                out.push_back(case_y(kind, MonoidElem::of_nat(a)));
            break;
        case CaseKind::AI1:
            for (long a = 0; a <= bound; ++a)
                out.push_back(case_y(kind, MonoidElem::of_pair(a, 1)));
            break;
        case CaseKind::AI2:
            for (long a = 0; a <= bound; ++a) {
                out.push_back(ai2_span(a, 0, {{"f1", 1}, {"f2", 1}}));   // y_+
                out.push_back(ai2_span(a, 1, {{"f1", 1}, {"f2", -1}}));  // y_-
                out.push_back(ai2_span(a, 1, {{"Y", 1}}));
            }
            break;
    }
    return out;
}

std::vector<LoopElem> positive_family(CaseKind kind, long bound) {
    std::vector<LoopElem> out;
    switch (kind) {
        case CaseKind::DeltaA1:
            for (long a = -bound; a <= bound; ++a)
                out.push_back(case_x(kind, MonoidElem::of_int(a)));
            break;
        case CaseKind::A1:
            for (long a = 0; a <= bound; ++a)
                out.push_back(case_x(kind, MonoidElem::of_nat(a)));
            break;
        case CaseKind::AI1:
            for (long a = 0; a <= bound; ++a)
                out.push_back(case_x(kind, MonoidElem::of_pair(a, 1)));
            break;
        case CaseKind::AI2:
            for (long a = 0; a <= bound; ++a) {
                out.push_back(ai2_span(a, 0, {{"e1", 1}, {"e2", 1}}));   // x_+
                out.push_back(ai2_span(a, 1, {{"e1", 1}, {"e2", -1}}));  // x_-
                out.push_back(ai2_span(a, 1, {{"X", 1}}));
            }
            break;
    }
    return out;
}

std::vector<LoopElem> cartan_family(CaseKind kind, long bound) {
    std::vector<LoopElem> out;
    switch (kind) {
        case CaseKind::DeltaA1:
            for (long a = -bound; a <= bound; ++a)
                out.push_back(case_w(kind, MonoidElem::of_int(a)));
            break;
        case CaseKind::A1:
            for (long a = 0; a <= bound; ++a)
                out.push_back(case_w(kind, MonoidElem::of_nat(a)));
            break;
        case CaseKind::AI1:
            for (long a = 0; a <= bound; ++a)
                out.push_back(case_w(kind, MonoidElem::of_pair(a, 0)));
            break;
        case CaseKind::AI2:
            for (long a = 0; a <= bound; ++a) {
                out.push_back(case_w_plus(kind, MonoidElem::of_pair(a, 0)));
                out.push_back(case_w_minus(kind, MonoidElem::of_pair(a, 1)));
            }
            break;
    }
    return out;
}

bool SpanBasis::insert(std::vector<Scalar> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        Scalar c = v[pivots[r]];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
    }
    long piv = -1;
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) { piv = static_cast<long>(j); break; }
    if (piv < 0) return false;
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    // Back-substitute to keep the basis reduced.
    for (size_t r = 0; r < rows.size(); ++r) {
        Scalar c = rows[r][piv];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= c * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
}

bool SpanBasis::contains(std::vector<Scalar> v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        Scalar c = v[pivots[r]];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

CyclicData cyclic_submodule(const TensorModule& m, long extra) {
    long bound = 2 * m.dim() + extra;
    std::vector<LoopElem> ops = negative_family(m.kind, bound);
    CyclicData out;
    std::vector<std::vector<Scalar>> frontier{m.highest()};
    out.basis.insert(m.highest());
    while (!frontier.empty()) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& v : frontier)
            for (const auto& op : ops) {
                std::vector<Scalar> w = loop_action(m, op, v);
                if (out.basis.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    out.dim = out.basis.dim();
    return out;
}

long simple_quotient_dim(const TensorModule& m) {
    CyclicData cyc = cyclic_submodule(m);
    std::vector<Scalar> g = m.gram_diag();
    int n = static_cast<int>(cyc.dim);
    Matrix gram = mat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar acc(0);
            for (size_t p = 0; p < g.size(); ++p) {
                const Scalar& a = cyc.basis.rows[i][p];
                const Scalar& b = cyc.basis.rows[j][p];
                if (!a.is_zero() && !b.is_zero()) acc += a * g[p] * b;
            }
            gram[i][j] = acc;
        }
    return mat_rank(std::move(gram));
}

long simple_quotient_dim_by_lattice(const TensorModule& m) {
    CyclicData cyc = cyclic_submodule(m);
    long n = m.dim();
    long bound = 2 * m.dim() + 2;

    // Joint cartan eigenvalue key per ambient coordinate; all built cartan
    // actions are diagonal.
    std::vector<LoopElem> cartans = cartan_family(m.kind, 2);
    std::vector<std::string> key(n);
    for (const auto& w : cartans) {
        Matrix a = loop_action_matrix(m, w);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (i != j && !a[i][j].is_zero())
                    fail("Internal", "lattice route requires diagonal cartan actions");
        for (long i = 0; i < n; ++i) key[i] += a[i][i].str() + "|";
    }

    // Split the cyclic basis into weight components; each must be a line.
    std::map<std::string, SpanBasis> comps;
    for (const auto& row : cyc.basis.rows) {
        std::map<std::string, std::vector<Scalar>> parts;
        for (long i = 0; i < n; ++i)
            if (!row[i].is_zero()) {
                auto& part = parts[key[i]];
                if (part.empty()) part.assign(n, Scalar(0));
                part[i] = row[i];
            }
        for (auto& [k, part] : parts) comps[k].insert(std::move(part));
    }
    std::vector<std::vector<Scalar>> lines;
    for (auto& [k, sp] : comps) {
        if (sp.dim() != 1)
            fail("Internal", "lattice route requires multiplicity-free weights on the cyclic module");
        lines.push_back(sp.rows[0]);
    }
    if (static_cast<long>(lines.size()) != cyc.dim)
        fail("Internal", "weight decomposition does not match the cyclic dimension");

    std::vector<LoopElem> ops = negative_family(m.kind, bound);
    for (const auto& op : positive_family(m.kind, bound)) ops.push_back(op);
    for (const auto& op : cartan_family(m.kind, bound)) ops.push_back(op);

    long nl = static_cast<long>(lines.size());
    std::vector<Scalar> hv = m.highest();
    SpanBasis maximal;
    for (long mask = 0; mask < (1L << nl); ++mask) {
        SpanBasis sp;
        for (long i = 0; i < nl; ++i)
            if (mask & (1L << i)) sp.insert(lines[i]);
        if (sp.contains(hv)) continue;  // a closed subspace with v would be everything
        bool closed = true;
        for (long i = 0; i < nl && closed; ++i) {
            if (!(mask & (1L << i))) continue;
            for (const auto& op : ops)
                if (!sp.contains(loop_action(m, op, lines[i]))) { closed = false; break; }
        }
        if (!closed) continue;
        for (long i = 0; i < nl; ++i)
            if (mask & (1L << i)) maximal.insert(lines[i]);
    }
    return cyc.dim - maximal.dim();
}

} // namespace tla
