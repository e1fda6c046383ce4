#include "tla/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "tla/error.hpp"

namespace tla {

namespace {

using Matrix = std::vector<std::vector<long>>;

Matrix blank(int m) {
    Matrix c(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; ++i) c[i][i] = 2;
    return c;
}

void edge(Matrix& c, int i, int j) {
    c[i][j] = -1;
    c[j][i] = -1;
}

// arrow i -> j with label m points at the short root j
void arrow(Matrix& c, int i, int j, long m) {
    c[i][j] = -1;
    c[j][i] = -m;
}

Matrix chain(int m) {
    Matrix c = blank(m);
    for (int i = 0; i + 1 < m; ++i) edge(c, i, i + 1);
    return c;
}

Matrix transpose(const Matrix& m) {
    int sz = static_cast<int>(m.size());
    Matrix t(sz, std::vector<long>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) t[i][j] = m[j][i];
    return t;
}

std::string sub(long v) { return std::to_string(v); }

std::string type_label(char fam, int n, int r) {
    std::ostringstream os;
    os << fam << '_';
    if (n >= 10) os << '{' << n << '}';
    else os << n;
    os << "^{(" << r << ")}";
    return os.str();
}

std::optional<std::vector<Rational>> kernel_vector(const Matrix& m) {
    int sz = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(sz, std::vector<Rational>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) a[i][j] = m[i][j];
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < sz && row < sz; ++col) {
        int p = -1;
        for (int i = row; i < sz; ++i)
            if (a[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        Rational inv = a[row][col];
        for (int j = 0; j < sz; ++j) a[row][j] /= inv;
        for (int i = 0; i < sz; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = 0; j < sz; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<int> free_cols;
    for (int col = 0; col < sz; ++col)
        if (std::find(pivots.begin(), pivots.end(), col) == pivots.end())
            free_cols.push_back(col);
    if (free_cols.size() != 1) return std::nullopt;
    int f = free_cols[0];
    std::vector<Rational> x(sz, Rational(0));
    x[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    return x;
}

std::optional<std::vector<long>> primitive_kernel(const Matrix& m) {
    auto x = kernel_vector(m);
    if (!x) return std::nullopt;
    Integer lcm_den = 1;
    for (const Rational& v : *x)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(v));
    std::vector<Integer> w;
    for (const Rational& v : *x)
        w.push_back(boost::multiprecision::numerator(Rational(v * lcm_den)));
    Integer g = 0;
    for (const Integer& v : w) g = boost::multiprecision::gcd(g, v);
    if (g == 0) return std::nullopt;
    bool any_neg = false, any_pos = false;
    for (Integer& v : w) {
        v /= g;
        if (v < 0) any_neg = true;
        if (v > 0) any_pos = true;
    }
    if (any_neg && any_pos) return std::nullopt;
    std::vector<long> out;
    for (Integer& v : w) {
        if (any_neg) v = -v;
        if (v <= 0) return std::nullopt;
        out.push_back(v.convert_to<long>());
    }
    return out;
}

// folded coweight of the orbit through j, accumulated with coefficient coef
void add_orbit_coweight(const AffineDiagram& d, int j, long coef, std::vector<long>& acc) {
    int m = d.mu[j];
    if (m == j) {
        acc[j - 1] += coef;
        return;
    }
    long f = d.finite_cartan[j - 1][m - 1] == -1 ? 2 : 1;
    acc[j - 1] += f * coef;
    acc[m - 1] += f * coef;
}

bool is_a2l_type(AffineFamily fam) {
    return fam == AffineFamily::A2Two || fam == AffineFamily::AEvenTwo;
}

void verify_tables(const AffineDiagram& d) {
    for (int i = 1; i <= d.n; ++i) {
        int m = d.mu[i];
        if (m < 1 || m > d.n || d.mu[m] != i)
            fail("Internal", "mu is not an involution on " + d.type);
        for (int j = 1; j <= d.n; ++j)
            if (d.finite_cartan[m - 1][d.mu[j] - 1] != d.finite_cartan[i - 1][j - 1])
                fail("Internal", "mu does not preserve the Cartan matrix of " + d.type);
    }
    std::vector<long> acc(d.n, 0);
    for (int j = 1; j <= d.l; ++j) add_orbit_coweight(d, j, d.comarks[j], acc);
    long scale = is_a2l_type(d.family) ? 2 : 1;
    for (int i = 0; i < d.n; ++i)
        if (-acc[i] != scale * d.h0[i])
            fail("Internal", "comark table mismatch for " + d.type);
    long pairing = 0;
    for (int p = 0; p < d.n; ++p)
        for (int q = 0; q < d.n; ++q)
            pairing += d.h0[p] * d.alpha0[q] * d.finite_cartan[p][q];
    if (pairing != -2) fail("Internal", "alpha0/h0 pairing mismatch for " + d.type);
}

void require_rank(bool ok, const std::string& label, int l) {
    if (!ok) fail("Parse", "rank " + std::to_string(l) + " out of range for " + label);
}

} // namespace

AffineDiagram affine_diagram(AffineFamily family, int l) {
    AffineDiagram d;
    d.family = family;
    d.l = l;
    switch (family) {
    case AffineFamily::A1One: {
        require_rank(l == 1, "A_1^{(1)}", l);
        d.r = 1;
        d.n = 1;
        d.type = type_label('A', 1, 1);
        d.cartan = blank(2);
        d.cartan[0][1] = d.cartan[1][0] = -2;
        d.finite_cartan = blank(1);
        break;
    }
    case AffineFamily::AOne: {
        require_rank(l >= 2, "A_l^{(1)}", l);
        d.r = 1;
        d.n = l;
        d.type = type_label('A', l, 1);
        d.cartan = blank(l + 1);
        for (int i = 0; i < l; ++i) edge(d.cartan, i, i + 1);
        edge(d.cartan, l, 0);
        d.finite_cartan = chain(l);
        break;
    }
    case AffineFamily::BOne: {
        require_rank(l >= 3, "B_l^{(1)}", l);
        d.r = 1;
        d.n = l;
        d.type = type_label('B', l, 1);
        d.cartan = blank(l + 1);
        edge(d.cartan, 0, 2);
        edge(d.cartan, 1, 2);
        for (int i = 2; i + 1 < l; ++i) edge(d.cartan, i, i + 1);
        arrow(d.cartan, l - 1, l, 2);
        d.finite_cartan = chain(l);
        arrow(d.finite_cartan, l - 2, l - 1, 2);
        break;
    }
    case AffineFamily::COne: {
        require_rank(l >= 2, "C_l^{(1)}", l);
        d.r = 1;
        d.n = l;
        d.type = type_label('C', l, 1);
        d.cartan = blank(l + 1);
        arrow(d.cartan, 0, 1, 2);
        for (int i = 1; i + 1 < l; ++i) edge(d.cartan, i, i + 1);
        arrow(d.cartan, l, l - 1, 2);
        d.finite_cartan = chain(l);
        if (l >= 2) arrow(d.finite_cartan, l - 1, l - 2, 2);
        break;
    }
    case AffineFamily::DOne: {
        require_rank(l >= 4, "D_l^{(1)}", l);
        d.r = 1;
        d.n = l;
        d.type = type_label('D', l, 1);
        d.cartan = blank(l + 1);
        edge(d.cartan, 0, 2);
        edge(d.cartan, 1, 2);
        for (int i = 2; i + 2 < l; ++i) edge(d.cartan, i, i + 1);
        edge(d.cartan, l - 2, l - 1);
        edge(d.cartan, l - 2, l);
        d.finite_cartan = blank(l);
        for (int i = 0; i + 2 < l; ++i) edge(d.finite_cartan, i, i + 1);
        edge(d.finite_cartan, l - 3, l - 1);
        break;
    }
    case AffineFamily::E6One: {
        require_rank(l == 6, "E_6^{(1)}", l);
        d.r = 1;
        d.n = 6;
        d.type = type_label('E', 6, 1);
        d.cartan = blank(7);
        edge(d.cartan, 1, 2);
        edge(d.cartan, 2, 3);
        edge(d.cartan, 3, 5);
        edge(d.cartan, 5, 6);
        edge(d.cartan, 3, 4);
        edge(d.cartan, 0, 4);
        break;
    }
    case AffineFamily::E7One: {
        require_rank(l == 7, "E_7^{(1)}", l);
        d.r = 1;
        d.n = 7;
        d.type = type_label('E', 7, 1);
        d.cartan = blank(8);
        for (int i = 0; i < 6; ++i) edge(d.cartan, i, i + 1);
        edge(d.cartan, 3, 7);
        break;
    }
    case AffineFamily::E8One: {
        require_rank(l == 8, "E_8^{(1)}", l);
        d.r = 1;
        d.n = 8;
        d.type = type_label('E', 8, 1);
        d.cartan = blank(9);
        for (int i = 0; i < 7; ++i) edge(d.cartan, i, i + 1);
        edge(d.cartan, 5, 8);
        break;
    }
    case AffineFamily::F4One: {
        require_rank(l == 4, "F_4^{(1)}", l);
        d.r = 1;
        d.n = 4;
        d.type = type_label('F', 4, 1);
        d.cartan = blank(5);
        edge(d.cartan, 0, 1);
        edge(d.cartan, 1, 2);
        arrow(d.cartan, 2, 3, 2);
        edge(d.cartan, 3, 4);
        break;
    }
    case AffineFamily::G2One: {
        require_rank(l == 2, "G_2^{(1)}", l);
        d.r = 1;
        d.n = 2;
        d.type = type_label('G', 2, 1);
        d.cartan = blank(3);
        edge(d.cartan, 0, 1);
        arrow(d.cartan, 1, 2, 3);
        break;
    }
    case AffineFamily::A2Two: {
        require_rank(l == 1, "A_2^{(2)}", l);
        d.r = 2;
        d.n = 2;
        d.type = type_label('A', 2, 2);
        d.cartan = blank(2);
        arrow(d.cartan, 0, 1, 4);
        d.finite_cartan = chain(2);
        break;
    }
    case AffineFamily::AEvenTwo: {
        require_rank(l >= 2, "A_{2l}^{(2)}", l);
        d.r = 2;
        d.n = 2 * l;
        d.type = type_label('A', 2 * l, 2);
        d.cartan = blank(l + 1);
        arrow(d.cartan, 0, 1, 2);
        for (int i = 1; i + 1 < l; ++i) edge(d.cartan, i, i + 1);
        arrow(d.cartan, l - 1, l, 2);
        d.finite_cartan = chain(d.n);
        break;
    }
    case AffineFamily::AOddTwo: {
        require_rank(l >= 3, "A_{2l-1}^{(2)}", l);
        d.r = 2;
        d.n = 2 * l - 1;
        d.type = type_label('A', 2 * l - 1, 2);
        d.cartan = blank(l + 1);
        edge(d.cartan, 0, 2);
        edge(d.cartan, 1, 2);
        for (int i = 2; i + 1 < l; ++i) edge(d.cartan, i, i + 1);
        arrow(d.cartan, l, l - 1, 2);
        d.finite_cartan = chain(d.n);
        break;
    }
    case AffineFamily::DTwo: {
        require_rank(l >= 2, "D_{l+1}^{(2)}", l);
        d.r = 2;
        d.n = l + 1;
        d.type = type_label('D', l + 1, 2);
        d.cartan = blank(l + 1);
        arrow(d.cartan, 1, 0, 2);
        for (int i = 1; i + 1 < l; ++i) edge(d.cartan, i, i + 1);
        arrow(d.cartan, l - 1, l, 2);
        d.finite_cartan = blank(d.n);
        for (int i = 0; i + 2 < l; ++i) edge(d.finite_cartan, i, i + 1);
        edge(d.finite_cartan, l - 2, l - 1);
        edge(d.finite_cartan, l - 2, l);
        break;
    }
    case AffineFamily::E6Two: {
        require_rank(l == 4, "E_6^{(2)}", l);
        d.r = 2;
        d.n = 6;
        d.type = type_label('E', 6, 2);
        d.cartan = blank(5);
        edge(d.cartan, 0, 1);
        edge(d.cartan, 1, 2);
        arrow(d.cartan, 3, 2, 2);
        edge(d.cartan, 3, 4);
        d.finite_cartan = blank(6);
        edge(d.finite_cartan, 0, 1);
        edge(d.finite_cartan, 1, 2);
        edge(d.finite_cartan, 2, 4);
        edge(d.finite_cartan, 4, 5);
        edge(d.finite_cartan, 2, 3);
        break;
    }
    }
    if (d.r == 1 && d.finite_cartan.empty()) {
        d.finite_cartan.assign(d.n, std::vector<long>(d.n));
        for (int i = 0; i < d.n; ++i)
            for (int j = 0; j < d.n; ++j) d.finite_cartan[i][j] = d.cartan[i + 1][j + 1];
    }
    d.mu.resize(d.n + 1);
    std::iota(d.mu.begin(), d.mu.end(), 0);
    switch (family) {
    case AffineFamily::A2Two:
        d.mu[1] = 2;
        d.mu[2] = 1;
        break;
    case AffineFamily::AEvenTwo:
        for (int i = 1; i <= d.n; ++i) d.mu[i] = 2 * l + 1 - i;
        break;
    case AffineFamily::AOddTwo:
        for (int i = 1; i <= d.n; ++i) d.mu[i] = 2 * l - i;
        break;
    case AffineFamily::DTwo:
        d.mu[l] = l + 1;
        d.mu[l + 1] = l;
        break;
    case AffineFamily::E6Two:
        d.mu[1] = 6;
        d.mu[6] = 1;
        d.mu[2] = 5;
        d.mu[5] = 2;
        break;
    default:
        break;
    }
    d.standard_numbering.resize(d.n + 1);
    std::iota(d.standard_numbering.begin(), d.standard_numbering.end(), 0);
    if (family == AffineFamily::E6One || family == AffineFamily::E6Two) {
        d.standard_numbering[4] = 6;
        d.standard_numbering[5] = 4;
        d.standard_numbering[6] = 5;
    }
    auto marks = primitive_kernel(d.cartan);
    auto comarks = primitive_kernel(transpose(d.cartan));
    if (!marks || !comarks)
        fail("SingularityMismatch", "Cartan matrix of " + d.type +
             " has no one-dimensional positive kernel");
    d.marks = *marks;
    d.comarks = *comarks;
    switch (family) {
    case AffineFamily::A2Two:
        d.alpha0 = {1, 1};
        d.h0 = {-1, -1};
        break;
    case AffineFamily::AEvenTwo:
        d.alpha0.assign(d.n, 1);
        d.h0.assign(d.n, -1);
        break;
    case AffineFamily::AOddTwo:
        d.alpha0.assign(d.n, 1);
        d.alpha0[d.n - 1] = 0;
        d.h0.assign(d.n, -2);
        d.h0[0] = -1;
        d.h0[d.n - 1] = -1;
        break;
    case AffineFamily::DTwo:
        d.alpha0.assign(d.n, 1);
        d.alpha0[d.n - 1] = 0;
        d.h0.assign(d.n, -2);
        d.h0[d.n - 2] = -1;
        d.h0[d.n - 1] = -1;
        break;
    case AffineFamily::E6Two:
        d.alpha0 = {1, 2, 2, 1, 1, 1};
        d.h0 = {-2, -3, -4, -2, -3, -2};
        break;
    default:
        d.alpha0.resize(d.n);
        d.h0.resize(d.n);
        for (int j = 1; j <= d.l; ++j) {
            d.alpha0[j - 1] = d.marks[j];
            d.h0[j - 1] = -d.comarks[j];
        }
        break;
    }
    verify_tables(d);
    return d;
}

AffineDiagram parse_affine_type(const std::string& label) {
    size_t i = 0;
    auto bad = [&]() -> AffineDiagram {
        fail("Parse", "unknown affine type label: " + label);
    };
    if (i >= label.size()) return bad();
    char fam = label[i++];
    if (i < label.size() && label[i] == '_') ++i;
    bool braced = i < label.size() && label[i] == '{';
    if (braced) ++i;
    size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == start) return bad();
    int n = std::stoi(label.substr(start, i - start));
    if (braced) {
        if (i >= label.size() || label[i] != '}') return bad();
        ++i;
    }
    if (label.compare(i, 3, "^{(") != 0) return bad();
    i += 3;
    if (i >= label.size() || !std::isdigit(static_cast<unsigned char>(label[i]))) return bad();
    int r = label[i++] - '0';
    if (label.compare(i, 2, ")}") != 0 || i + 2 != label.size()) return bad();
    if (r == 1) {
        switch (fam) {
        case 'A': return n == 1 ? affine_diagram(AffineFamily::A1One, 1)
                                : affine_diagram(AffineFamily::AOne, n);
        case 'B': return affine_diagram(AffineFamily::BOne, n);
        case 'C': return affine_diagram(AffineFamily::COne, n);
        case 'D': return affine_diagram(AffineFamily::DOne, n);
        case 'E':
            if (n == 6) return affine_diagram(AffineFamily::E6One, 6);
            if (n == 7) return affine_diagram(AffineFamily::E7One, 7);
            if (n == 8) return affine_diagram(AffineFamily::E8One, 8);
            return bad();
        case 'F': return n == 4 ? affine_diagram(AffineFamily::F4One, 4) : bad();
        case 'G': return n == 2 ? affine_diagram(AffineFamily::G2One, 2) : bad();
        default: return bad();
        }
    }
    if (r == 2) {
        switch (fam) {
        case 'A':
            if (n == 2) return affine_diagram(AffineFamily::A2Two, 1);
            if (n >= 4 && n % 2 == 0) return affine_diagram(AffineFamily::AEvenTwo, n / 2);
            if (n >= 5 && n % 2 == 1) return affine_diagram(AffineFamily::AOddTwo, (n + 1) / 2);
            return bad();
        case 'D': return n >= 3 ? affine_diagram(AffineFamily::DTwo, n - 1) : bad();
        case 'E': return n == 6 ? affine_diagram(AffineFamily::E6Two, 4) : bad();
        default: return bad();
        }
    }
    return bad();
}

std::pair<std::vector<long>, std::vector<long>> compute_marks(const AffineDiagram& d) {
    auto marks = primitive_kernel(d.cartan);
    auto comarks = primitive_kernel(transpose(d.cartan));
    if (!marks || !comarks)
        fail("SingularityMismatch", "Cartan matrix of " + d.type +
             " has no one-dimensional positive kernel");
    AffineDiagram checked = d;
    checked.marks = *marks;
    checked.comarks = *comarks;
    verify_tables(checked);
    return {*marks, *comarks};
}

std::vector<InvolutionRow> enumerate_rows(int max_l) {
    std::vector<InvolutionRow> rows;
    auto add = [&](AffineDiagram d, std::vector<int> s, std::string cons, std::string k,
                   int center) {
        rows.push_back(InvolutionRow{std::move(d), std::move(s), std::move(cons),
                                     std::move(k), center});
    };
    if (max_l >= 1)
        add(affine_diagram(AffineFamily::A1One, 1), {0, 1}, "l = 1", "C", 1);
    for (int l = 2; l <= max_l; ++l) {
        AffineDiagram d = affine_diagram(AffineFamily::AOne, l);
        for (int k = 1; 2 * k <= l + 1; ++k)
            add(d, {0, k}, "l >= 2, 1 <= k <= l",
                "s(gl_" + sub(k) + " + gl_" + sub(l - k + 1) + ")", 1);
    }
    for (int l = 3; l <= max_l; ++l) {
        AffineDiagram d = affine_diagram(AffineFamily::BOne, l);
        add(d, {0, 1}, "l >= 3", "C + so_" + sub(2 * l - 1), 1);
        for (int k = 2; k <= l; ++k)
            add(d, {k}, "l >= 3, 2 <= k <= l",
                "so_" + sub(2 * k) + " + so_" + sub(2 * (l - k) + 1), 0);
    }
    for (int l = 2; l <= max_l; ++l) {
        AffineDiagram d = affine_diagram(AffineFamily::COne, l);
        add(d, {0, l}, "l >= 2", "gl_" + sub(l), 1);
        for (int k = 1; k < l && 2 * k <= l; ++k)
            add(d, {k}, "l >= 2, 1 <= k < l",
                "sp_" + sub(2 * k) + " + sp_" + sub(2 * (l - k)), 0);
    }
    for (int l = 4; l <= max_l; ++l) {
        AffineDiagram d = affine_diagram(AffineFamily::DOne, l);
        add(d, {0, l}, "l >= 4", "gl_" + sub(l), 1);
        // at l = 4 every tip pair is conjugate, so {0,1} duplicates {0,l}
        if (l > 4) add(d, {0, 1}, "l >= 4", "C + so_" + sub(2 * (l - 1)), 1);
        for (int k = 2; 2 * k <= l; ++k)
            add(d, {k}, "l >= 4, 2 <= k <= l-2",
                "so_" + sub(2 * k) + " + so_" + sub(2 * (l - k)), 0);
    }
    if (max_l >= 6) {
        AffineDiagram d = affine_diagram(AffineFamily::E6One, 6);
        add(d, {0, 1}, "l = 6", "C + so_10", 1);
        add(d, {4}, "l = 6", "sl_2 + sl_6", 0);
    }
    if (max_l >= 7) {
        AffineDiagram d = affine_diagram(AffineFamily::E7One, 7);
        add(d, {1}, "l = 7", "sl_2 + so_12", 0);
        add(d, {7}, "l = 7", "sl_8", 0);
    }
    if (max_l >= 8) {
        AffineDiagram d = affine_diagram(AffineFamily::E8One, 8);
        add(d, {1}, "l = 8", "sl_2 + e_7", 0);
        add(d, {7}, "l = 8", "so_16", 0);
    }
    if (max_l >= 4) {
        AffineDiagram d = affine_diagram(AffineFamily::F4One, 4);
        add(d, {1}, "l = 4", "sl_2 + sp_6", 0);
        add(d, {4}, "l = 4", "so_9", 0);
    }
    if (max_l >= 2) {
        AffineDiagram d = affine_diagram(AffineFamily::G2One, 2);
        add(d, {1}, "l = 2", "sl_2 + sl_2", 0);
    }
    if (max_l >= 1)
        add(affine_diagram(AffineFamily::A2Two, 1), {0}, "l = 1", "so_3", 0);
    for (int l = 2; l <= max_l; ++l)
        add(affine_diagram(AffineFamily::AEvenTwo, l), {0}, "l >= 2",
            "so_" + sub(2 * l + 1), 0);
    for (int l = 3; l <= max_l; ++l) {
        AffineDiagram d = affine_diagram(AffineFamily::AOddTwo, l);
        add(d, {0}, "l >= 3", "sp_" + sub(2 * l), 0);
        add(d, {l}, "l >= 3", "so_" + sub(2 * l), 0);
    }
    for (int l = 2; l <= max_l; ++l) {
        AffineDiagram d = affine_diagram(AffineFamily::DTwo, l);
        add(d, {0}, "l >= 2", "so_" + sub(2 * l + 1), 0);
        for (int k = 1; 2 * k <= l; ++k)
            add(d, {k}, "l >= 2, 1 <= k <= l",
                "so_" + sub(2 * k + 1) + " + so_" + sub(2 * (l - k) + 1), 0);
    }
    if (max_l >= 4) {
        AffineDiagram d = affine_diagram(AffineFamily::E6Two, 4);
        add(d, {0}, "l = 4", "f_4", 0);
        add(d, {4}, "l = 4", "sp_8", 0);
    }
    for (const InvolutionRow& row : rows) {
        long sum = 0;
        for (int j : row.s_tilde) sum += row.diagram.marks[j];
        if (row.diagram.r * sum != 2)
            fail("Internal", "mark-sum constraint violated for " + row.diagram.type);
        if (row.center_dim != static_cast<int>(row.s_tilde.size()) - 1)
            fail("Internal", "center dimension mismatch for " + row.diagram.type);
    }
    return rows;
}

bool w0_check(const InvolutionRow& row) {
    const AffineDiagram& d = row.diagram;
    if (is_a2l_type(d.family))
        fail("WrongType", "the zero-node coweight relation excludes " + d.type);
    std::vector<long> acc(d.n, 0);
    for (int j = 1; j <= d.l; ++j) add_orbit_coweight(d, j, d.comarks[j], acc);
    for (int i = 0; i < d.n; ++i)
        if (d.h0[i] != -acc[i]) return false;
    return true;
}

std::vector<std::vector<int>> diagram_automorphisms(const AffineDiagram& d) {
    int m = d.l + 1;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j)
                if (d.cartan[perm[i]][perm[j]] != d.cartan[i][j]) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool rows_conjugate(const AffineDiagram& d, const std::vector<int>& s1,
                    const std::vector<int>& s2) {
    if (s1.size() != s2.size()) return false;
    std::vector<int> b = s2;
    std::sort(b.begin(), b.end());
    for (const auto& perm : diagram_automorphisms(d)) {
        std::vector<int> img;
        for (int v : s1) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        if (img == b) return true;
    }
    return false;
}

GeneralRouting routing_for_row(const AffineDiagram& d, const std::vector<int>& s_tilde) {
    std::vector<int> s = s_tilde;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        fail("UnknownDiagramRow", "repeated vertex in painted set for " + d.type);
    for (int v : s)
        if (v < 0 || v > d.l)
            fail("UnknownDiagramRow", "painted vertex out of range for " + d.type);
    long sum = 0;
    for (int v : s) sum += d.marks[v];
    if (!(d.r * sum == 2 || (d.r == 1 && s.empty())))
        fail("UnknownDiagramRow", "painted set violates the mark-sum constraint on " + d.type);
    GeneralRouting row;
    row.type = d.type;
    row.zero_in_stilde = std::find(s.begin(), s.end(), 0) != s.end();
    for (int j = 1; j <= d.l; ++j) {
        GeneralNode node;
        node.node = j;
        node.comark = d.comarks[j];
        if (d.mu[j] == j)
            node.node_case = std::find(s.begin(), s.end(), j) != s.end() ? 'c' : 'b';
        else
            node.node_case = d.finite_cartan[j - 1][d.mu[j] - 1] == -1 ? 'd' : 'a';
        row.nodes.push_back(node);
    }
    return row;
}

ClassificationResult classify_general(const AffineDiagram& d,
                                      const std::vector<int>& s_tilde,
                                      const std::map<int, GeneralNodeData>& data) {
    return classify_general(routing_for_row(d, s_tilde), data);
}

std::string rows_table(int max_l) {
    std::ostringstream os;
    for (const InvolutionRow& row : enumerate_rows(max_l)) {
        os << row.diagram.type << ", {";
        for (size_t i = 0; i < row.s_tilde.size(); ++i) {
            if (i) os << ',';
            os << row.s_tilde[i];
        }
        os << "}, " << row.constraints << ", " << row.k_desc << '\n';
    }
    return os.str();
}

} // namespace tla
