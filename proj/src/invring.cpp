#include "tla/invring.hpp"

#include <algorithm>

namespace tla {

InvRing::InvRing(MonoidKind mk, int n) : mk_(mk), n_(n) {
    if (n < 0) fail("BadIndex", "point count must be nonnegative");
}

static void elem_add(InvRing::Elem& u, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = u.find(w);
    if (it == u.end()) {
        u.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) u.erase(it);
    }
}

InvRing::Elem InvRing::reduce(const Word& a) const {
    for (const auto& l : a)
        if (l.kind != mk_ || !l.valid()) fail("BadIndex", "letter " + l.str() + " invalid for this ring");
    Word nz;
    int zeros = 0;
    for (const auto& l : a) {
        if (l.is_zero()) ++zeros;
        else nz.push_back(l);
    }
    if (static_cast<int>(a.size()) > n_) return {};
    // strip zero letters one at a time: each contributes n - (remaining length)
    Rational factor(1);
    int len = static_cast<int>(a.size());
    for (int z = 0; z < zeros; ++z) {
        --len;
        factor *= (n_ - len);
    }
    if (factor == 0) return {};
    std::sort(nz.begin(), nz.end(), [](const MonoidElem& u, const MonoidElem& v) { return v < u; });
    return {{nz, Scalar(factor)}};
}

InvRing::Elem InvRing::letter_mul(const MonoidElem& a, const Elem& u) const {
    Elem out;
    for (const auto& [w, c] : u) {
        Word cat = w;
        cat.insert(cat.begin(), a);
        for (const auto& [ww, cc] : reduce(cat)) elem_add(out, ww, cc * c);
        for (size_t l = 0; l < w.size(); ++l) {
            Word merged = w;
            merged[l] = merged[l] + a;
            for (const auto& [ww, cc] : reduce(merged)) elem_add(out, ww, cc * c);
        }
    }
    return out;
}

InvRing::Elem InvRing::mul_m(const Word& a, const Word& b) const {
    // peel the first letter of a: m_{a1*rest} = m_{a1} m_rest - sum_l m_{rest + a1 at l}
    if (a.empty()) return reduce(b);
    MonoidElem head = a[0];
    Word rest(a.begin() + 1, a.end());
    Elem out = letter_mul(head, mul_m(rest, b));
    for (size_t l = 0; l < rest.size(); ++l) {
        Word merged = rest;
        merged[l] = merged[l] + head;
        for (const auto& [w, c] : mul_m(merged, b)) elem_add(out, w, -c);
    }
    return out;
}

InvRing::Elem InvRing::mul(const Elem& u, const Elem& v) const {
    Elem out;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v)
            for (const auto& [w, c] : mul_m(wu, wv)) elem_add(out, w, c * cu * cv);
    return out;
}

std::string InvRing::elem_str(const Elem& u) {
    if (u.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : u) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*m" + word_str(w);
    }
    return s;
}

static Scalar point_pow(MonoidKind mk, const Point& p, const MonoidElem& a) {
    if (mk == MonoidKind::NatPair) return p[0].pow(a.x) * p[1].pow(a.y);
    return p[0].pow(a.x);
}

Scalar m_eval(MonoidKind mk, const Word& a, const std::vector<Point>& pts) {
    int n = static_cast<int>(pts.size());
    int r = static_cast<int>(a.size());
    Scalar total(0);
    std::vector<int> tuple(r);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int depth, const Scalar& acc) -> void {
        if (depth == r) {
            total += acc;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            self(self, depth + 1, acc * point_pow(mk, pts[i], a[depth]));
            used[i] = false;
        }
    };
    rec(rec, 0, Scalar(1));
    return total;
}

// ---- polynomial roots over the field ----

static std::vector<Integer> divisors_of(const Integer& v) {
    Integer a = v < 0 ? Integer(-v) : v;
    std::vector<Integer> out;
    if (a == 0) return out;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
        if (d > 10000000) fail("Internal", "divisor enumeration over budget");
    }
    return out;
}

static Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& z) {
    Scalar acc(1), val(0);
    for (const auto& c : coeffs) {
        val += c * acc;
        acc *= z;
    }
    return val + acc;  // leading 1
}

std::optional<std::vector<Scalar>> poly_roots_in_field(const std::vector<Scalar>& coeffs,
                                                       std::string& why) {
    std::vector<Scalar> c = coeffs;
    std::vector<Scalar> roots;
    while (!c.empty()) {
        // strip zero roots
        if (c[0].is_zero()) {
            roots.emplace_back(0);
            c.erase(c.begin());
            continue;
        }
        size_t deg = c.size();
        if (deg == 1) {
            roots.push_back(-c[0]);
            c.clear();
            continue;
        }
        if (deg == 2) {
            Scalar disc = c[1] * c[1] - Scalar(4) * c[0];
            auto s = sqrt_in_field(disc);
            if (!s) {
                why = "quadratic discriminant " + disc.str() + " has no square root in the field";
                return std::nullopt;
            }
            Scalar half(Rational(1, 2));
            roots.push_back((-c[1] + *s) * half);
            roots.push_back((-c[1] - *s) * half);
            c.clear();
            continue;
        }
        // degree >= 3: rational coefficients required, find a rational root
        for (const auto& cc : c)
            if (!cc.is_rational()) {
                why = "degree " + std::to_string(deg) + " factor has an irrational coefficient";
                return std::nullopt;
            }
        Rational lcm(1);
        for (const auto& cc : c) {
            Integer den = boost::multiprecision::denominator(cc.rat());
            Integer g = boost::multiprecision::gcd(boost::multiprecision::numerator(lcm), den);
            lcm = Rational(boost::multiprecision::numerator(lcm) / g * den);
        }
        Integer scale = boost::multiprecision::numerator(lcm);
        // integer coefficients: A_i = c_i * scale, leading A_n = scale
        Integer a0 = boost::multiprecision::numerator(c[0].rat() * Rational(scale));
        std::optional<Scalar> found;
        for (const Integer& p : divisors_of(a0)) {
            for (const Integer& q : divisors_of(scale)) {
                for (int sgn = 1; sgn >= -1; sgn -= 2) {
                    Scalar cand(Rational(sgn * p, q));
                    if (poly_eval(c, cand).is_zero()) {
                        found = cand;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            why = "degree " + std::to_string(deg) + " factor has no rational root";
            return std::nullopt;
        }
        roots.push_back(*found);
        // synthetic division by (z - root), monic quotient
        std::vector<Scalar> q(deg - 1);
        Scalar carry(1);
        for (size_t i = deg - 1; i >= 1; --i) {
            carry = c[i] + carry * *found;
            q[i - 1] = carry;
        }
        c = std::move(q);
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    return roots;
}

std::vector<Scalar> newton_elementary(const std::vector<Scalar>& power_sums) {
    size_t n = power_sums.size();
    std::vector<Scalar> e(n + 1, Scalar(0));
    e[0] = Scalar(1);
    for (size_t k = 1; k <= n; ++k) {
        Scalar acc(0);
        for (size_t i = 1; i <= k; ++i) {
            Scalar term = e[k - i] * power_sums[i - 1];
            acc += (i % 2) ? term : -term;
        }
        e[k] = acc * Scalar(Rational(1, static_cast<long>(k)));
    }
    return std::vector<Scalar>(e.begin() + 1, e.end());
}

// char poly of the multiset with elementary symmetric values e: ascending
// coefficients of prod (z - x_i), leading 1 implicit.
static std::vector<Scalar> char_poly_from_elementary(const std::vector<Scalar>& e) {
    size_t n = e.size();
    std::vector<Scalar> c(n);
    for (size_t i = 0; i < n; ++i) {
        // coefficient of z^i is (-1)^(n-i) e_{n-i}
        Scalar v = e[n - i - 1];
        c[i] = ((n - i) % 2) ? -v : v;
    }
    return c;
}

static SolveResult solve_points_single(MonoidKind mk, int n, const std::map<Word, Scalar>& data) {
    SolveResult res;
    std::vector<Scalar> p;
    for (int k = 1; k <= n; ++k) {
        Word w{mk == MonoidKind::Int ? MonoidElem::of_int(k) : MonoidElem::of_nat(k)};
        auto it = data.find(w);
        if (it == data.end()) {
            res.status = SolveStatus::InsufficientData;
            res.detail = "missing value for word " + word_str(w);
            return res;
        }
        p.push_back(it->second);
    }
    std::string why;
    auto roots = poly_roots_in_field(char_poly_from_elementary(newton_elementary(p)), why);
    if (!roots) {
        res.status = SolveStatus::UnsupportedField;
        res.detail = why;
        return res;
    }
    for (const auto& r : *roots) {
        if (mk == MonoidKind::Int && r.is_zero()) {
            res.status = SolveStatus::RelationViolated;
            res.detail = "recovered point 0 is not invertible";
            return res;
        }
        res.points.push_back({r});
    }
    return res;
}

static bool vandermonde_solve(const std::vector<Scalar>& tau, const std::vector<Scalar>& rhs,
                              std::vector<Scalar>& out) {
    // solve sum_j s_j tau_j^b = rhs_b for b = 0..g-1 by Gaussian elimination
    size_t g = tau.size();
    std::vector<std::vector<Scalar>> m(g, std::vector<Scalar>(g + 1, Scalar(0)));
    for (size_t b = 0; b < g; ++b) {
        for (size_t j = 0; j < g; ++j) m[b][j] = tau[j].pow(static_cast<long>(b));
        m[b][g] = rhs[b];
    }
    for (size_t col = 0; col < g; ++col) {
        size_t piv = col;
        while (piv < g && m[piv][col].is_zero()) ++piv;
        if (piv == g) return false;
        std::swap(m[col], m[piv]);
        Scalar inv = m[col][col].inverse();
        for (size_t j = col; j <= g; ++j) m[col][j] *= inv;
        for (size_t row = 0; row < g; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Scalar f = m[row][col];
            for (size_t j = col; j <= g; ++j) m[row][j] -= f * m[col][j];
        }
    }
    out.resize(g);
    for (size_t j = 0; j < g; ++j) out[j] = m[j][g];
    return true;
}

static SolveResult solve_points_pair(int n, const std::map<Word, Scalar>& data) {
    SolveResult res;
    auto value = [&](long a, long b) -> std::optional<Scalar> {
        auto it = data.find(Word{MonoidElem::of_pair(a, b)});
        if (it == data.end()) return std::nullopt;
        return it->second;
    };
    // second coordinates from the pure-b power sums
    std::vector<Scalar> pb;
    for (int b = 1; b <= n; ++b) {
        auto v = value(0, b);
        if (!v) {
            res.status = SolveStatus::InsufficientData;
            res.detail = "missing value for word ((0," + std::to_string(b) + "))";
            return res;
        }
        pb.push_back(*v);
    }
    std::string why;
    auto gammas = poly_roots_in_field(char_poly_from_elementary(newton_elementary(pb)), why);
    if (!gammas) {
        res.status = SolveStatus::UnsupportedField;
        res.detail = why;
        return res;
    }
    // group equal second coordinates
    std::vector<Scalar> tau;
    std::vector<int> mult;
    for (const auto& g : *gammas) {
        if (!tau.empty() && tau.back() == g) {
            ++mult.back();
        } else {
            tau.push_back(g);
            ++mult.emplace_back(0);
        }
    }
    size_t g = tau.size();
    int max_mult = 0;
    for (int m : mult) max_mult = std::max(max_mult, m);
    // per-exponent Vandermonde solves give per-group power sums of the first
    // coordinates
    std::vector<std::vector<Scalar>> group_ps(g);
    for (int a = 1; a <= max_mult; ++a) {
        std::vector<Scalar> rhs;
        for (size_t b = 0; b < g; ++b) {
            auto v = value(a, static_cast<long>(b));
            if (!v) {
                res.status = SolveStatus::InsufficientData;
                res.detail = "missing value for word ((" + std::to_string(a) + "," + std::to_string(b) + "))";
                return res;
            }
            rhs.push_back(*v);
        }
        std::vector<Scalar> s;
        if (!vandermonde_solve(tau, rhs, s)) fail("Internal", "singular system for distinct values");
        for (size_t j = 0; j < g; ++j)
            if (a <= mult[j]) group_ps[j].push_back(s[j]);
    }
    for (size_t j = 0; j < g; ++j) {
        auto deltas = poly_roots_in_field(char_poly_from_elementary(newton_elementary(group_ps[j])), why);
        if (!deltas) {
            res.status = SolveStatus::UnsupportedField;
            res.detail = why;
            return res;
        }
        for (const auto& d : *deltas) res.points.push_back({d, tau[j]});
    }
    std::sort(res.points.begin(), res.points.end(), [](const Point& u, const Point& v) {
        if (u[0] != v[0]) return canonical_less(u[0], v[0]);
        return canonical_less(u[1], v[1]);
    });
    return res;
}

SolveResult solve_points(MonoidKind mk, int n, const std::map<Word, Scalar>& data) {
    for (const auto& [w, c] : data)
        for (const auto& l : w)
            if (l.kind != mk || !l.valid()) fail("BadIndex", "letter " + l.str() + " invalid for this monoid");
    SolveResult res = (mk == MonoidKind::NatPair) ? solve_points_pair(n, data)
                                                  : solve_points_single(mk, n, data);
    if (res.status != SolveStatus::Ok) return res;
    for (const auto& [w, c] : data) {
        if (m_eval(mk, w, res.points) != c) {
            res.status = SolveStatus::RelationViolated;
            res.violated = w;
            res.detail = "word " + word_str(w) + " disagrees with the recovered points";
            res.points.clear();
            return res;
        }
    }
    return res;
}

} // namespace tla
