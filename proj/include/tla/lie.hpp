#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tla/laurent.hpp"
#include "tla/scalar.hpp"
#include "tla/words.hpp"

namespace tla {

// PBW family of a basis element: lowering < cartan < raising.
enum class Family { Neg = 0, Cartan = 1, Pos = 2 };

// Finite-dimensional Lie algebra with a fixed basis, exact structure constants,
// and an involution theta.
class LieAlg {
public:
    struct Desc {
        std::string name;
        std::vector<std::string> basis_names;
        std::vector<Family> families;
    };

    static const LieAlg& sl2();
    static const LieAlg& sl2sl2();
    static const LieAlg& sl3();

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name() const { return name_; }
    const std::string& basis_name(int i) const { return names_[i]; }
    Family family(int i) const { return families_[i]; }
    int index_of(const std::string& basis_name) const;

    // [b_i, b_j] as a sparse vector.
    const std::map<int, Scalar>& bracket(int i, int j) const { return sc_[i][j]; }

    using Elem = std::map<int, Scalar>;  // sparse coordinates in the basis
    Elem bracket(const Elem& u, const Elem& v) const;

    // theta as a linear involution on the basis (set per construction).
    Elem theta(const Elem& u) const;
    const Elem& theta_of(int i) const { return theta_[i]; }

    static Elem unit(int i) { return {{i, Scalar(1)}}; }

private:
    LieAlg() = default;
    void set_bracket(const std::string& a, const std::string& b, const Elem& val);
    void finish_antisymmetrize();
    void check_jacobi() const;

    std::string name_;
    std::vector<std::string> names_;
    std::vector<Family> families_;
    std::vector<std::vector<Elem>> sc_;
    std::vector<Elem> theta_;

    static LieAlg build_sl2();
    static LieAlg build_sl2sl2();
    static LieAlg build_sl3();
};

// t^k tensor b_i, a generator of the loop algebra of g.
struct LGen {
    int gi = 0;
    long k = 0;
    auto operator<=>(const LGen&) const = default;
};

// Element of L(g) = g tensor Laurent polynomials.
using LoopElem = std::map<LGen, Scalar>;

void loop_add_term(LoopElem& u, const LGen& g, const Scalar& c);
LoopElem loop_add(const LoopElem& u, const LoopElem& v);
LoopElem loop_scaled(const LoopElem& u, const Scalar& c);
LoopElem loop_bracket(const LieAlg& g, const LoopElem& u, const LoopElem& v);
// laurent tensor fixed g-element
LoopElem loop_tensor(const LieAlg& g, const LaurentPoly& p, const LieAlg::Elem& x);
// The twist of the second kind: t^k tensor x -> t^{-k} tensor theta(x).
LoopElem loop_twist(const LieAlg& g, const LoopElem& u);
bool loop_is_twist_fixed(const LieAlg& g, const LoopElem& u);
std::string loop_str(const LieAlg& g, const LoopElem& u);

// The four minimal constructions sharing the same generator pattern.
enum class CaseKind { DeltaA1, A1, AI1, AI2 };

CaseKind case_from_name(const std::string& s);  // BadCase on unknown
std::string case_name(CaseKind k);
MonoidKind case_monoid(CaseKind k);
const LieAlg& case_algebra(CaseKind k);

// Pattern generators x_a, y_a, w_a as loop elements; BadIndex when the letter
// is invalid for the case's index monoid.
LoopElem case_x(CaseKind k, const MonoidElem& a);
LoopElem case_y(CaseKind k, const MonoidElem& a);
LoopElem case_w(CaseKind k, const MonoidElem& a);

// Reformulated cartan symbols for the paired cases.
// DeltaA1: plus(a) over a>=0 uses t_+^a (h_1+h_2), minus uses t_+^a t_- (h_1-h_2).
// AI2: plus(a,b) = t_+^a t_-^b (h_1+h_2), minus(a,b) = t_+^a t_-^b (h_1-h_2).
LoopElem case_w_plus(CaseKind k, const MonoidElem& a);
LoopElem case_w_minus(CaseKind k, const MonoidElem& a);

// so3-pattern ladder elements, AI2 only: u_i for i in {-1,0,1}, v_i for i in
// {-2..2}, placed at loop position t_+^a t_-^b.
LoopElem ai2_u(int i, long a, long b);
LoopElem ai2_v(int i, long a, long b);

} // namespace tla
