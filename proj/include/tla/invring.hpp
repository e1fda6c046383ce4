#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tla/scalar.hpp"
#include "tla/words.hpp"

namespace tla {

// The ring of symmetric functions of n points of the index monoid's variety,
// spanned by augmented monomial sums
//   m_bfa = sum over ordered tuples of distinct indices of x_{i_1}^{a_1}...
// A word is reduced to the dominant basis (at most n nonzero letters, weakly
// decreasing); words longer than n vanish and a zero letter strips off with
// factor n - (remaining length).
class InvRing {
public:
    InvRing(MonoidKind mk, int n);

    MonoidKind monoid() const { return mk_; }
    int points() const { return n_; }

    using Elem = std::map<Word, Scalar>;  // dominant words -> coefficients

    Elem reduce(const Word& a) const;               // m_bfa as a basis combination
    Elem mul(const Elem& u, const Elem& v) const;   // product in the ring
    Elem mul_m(const Word& a, const Word& b) const; // m_a * m_b

    static std::string elem_str(const Elem& u);

private:
    // m_{a} * (basis combination), via the single-letter product rule.
    Elem letter_mul(const MonoidElem& a, const Elem& u) const;

    MonoidKind mk_;
    int n_;
};

// A point of the monoid variety: one coordinate for Int/Nat, two for NatPair.
using Point = std::vector<Scalar>;

// Direct evaluation of m_bfa at a point tuple, by enumerating ordered tuples
// of distinct indices. Serves as the independent oracle for ring identities.
Scalar m_eval(MonoidKind mk, const Word& a, const std::vector<Point>& pts);

// Roots of a monic polynomial (coefficients ascending, leading 1 implicit)
// over the scalar field, with multiplicity. Quadratics use the field's square
// roots; higher degrees require rational coefficients and proceed by rational
// root elimination. On failure returns nullopt and sets why.
std::optional<std::vector<Scalar>> poly_roots_in_field(const std::vector<Scalar>& coeffs,
                                                       std::string& why);

// Power sums p_1..p_n -> elementary symmetric e_1..e_n.
std::vector<Scalar> newton_elementary(const std::vector<Scalar>& power_sums);

enum class SolveStatus { Ok, InsufficientData, RelationViolated, UnsupportedField };

struct SolveResult {
    SolveStatus status = SolveStatus::Ok;
    std::vector<Point> points;  // recovered multiset, canonically ordered
    Word violated;              // first violated word when RelationViolated
    std::string detail;
};

// Recover the point multiset from values c_bfa = m_bfa(points). For Int/Nat
// the single-letter values (k), k = 1..n are required; Int additionally
// rejects zero coordinates. For NatPair the values (0,b), b = 1..n and (a,b),
// a = 1..n, b = 0..n-1 are required. Every supplied word is then verified
// against the recovered points.
SolveResult solve_points(MonoidKind mk, int n, const std::map<Word, Scalar>& data);

} // namespace tla
