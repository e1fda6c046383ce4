#pragma once

#include <map>
#include <string>
#include <vector>

#include "tla/lie.hpp"
#include "tla/scalar.hpp"

namespace tla {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix mat_zero(int rows, int cols);
Matrix mat_identity(int n);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_scaled(const Matrix& a, const Scalar& c);
bool mat_is_zero(const Matrix& a);
std::vector<Scalar> mat_apply(const Matrix& a, const std::vector<Scalar>& v);
long mat_rank(Matrix a);

// Finite-dimensional module with the action given per basis label.  Labels are
// the basis names of the acting algebra (g for full modules, the fixed-point
// subalgebra for k-modules).
struct MatrixRep {
    int dim = 0;
    std::map<std::string, Matrix> action;
    int highest_vector = 0;
    // Diagonal of the contravariant form normalized by <v,v> = 1 at the
    // highest vector; all built reps admit a diagonal one.
    std::vector<Scalar> gram_diag;

    const Matrix& act(const std::string& label) const;  // BadIndex if missing
};

// dim m+1, basis v_k = f^(k) v: e v_k = (m-k+1) v_{k-1}, f v_k = (k+1) v_{k+1},
// h v_k = (m-2k) v_k.  Labels f,h,e.
MatrixRep build_irrep_sl2(long m);
// Outer tensor of two sl2 strings.  Labels f1,f2,h1,h2,e1,e2.
MatrixRep build_irrep_sl2sl2(long m1, long m2);
// Defining sl3-module on C^3.  Labels f1,f2,Y,h1,h2,e1,e2,X.
MatrixRep build_irrep_sl3_fundamental();
// Module of the fixed-point algebra spanned by x_+, y_+, w_+ where
// (x_+, 2 y_+, 2 w_+) is an sl2-triple; w_+ has top eigenvalue nu in (1/2)Z>=0.
// Labels x_+, y_+, w_+.
MatrixRep build_irrep_k_so3(const Scalar& nu);
// One-dimensional module of the abelian fixed-point algebra C h.  Label h.
MatrixRep build_irrep_k_abelian(const Scalar& nu);

enum class EvalFlavor { FullG, KOnly };

struct EvalModule {
    MatrixRep base;
    Scalar point;
    EvalFlavor flavor = EvalFlavor::FullG;
};

// Validates the point (nonzero for full evaluation, +-1 for k-only) and the
// label set of the representation against the case.
EvalModule make_eval_module(CaseKind kind, MatrixRep rep, const Scalar& point,
                            EvalFlavor flavor);

struct TensorModule {
    CaseKind kind = CaseKind::A1;
    std::vector<EvalModule> factors;

    long dim() const;
    long highest_index() const;
    std::vector<Scalar> highest() const;
    std::vector<Scalar> gram_diag() const;
};

TensorModule make_tensor_module(CaseKind kind, std::vector<EvalModule> factors);

// Action matrix of a twisted-loop element on one factor.  Full flavor
// evaluates every Laurent coefficient at the point; k-only flavor evaluates
// the fiber at +-1 and decomposes it in the fixed-point basis (PointMismatch
// if the fiber falls outside it).
Matrix factor_action(const EvalModule& f, CaseKind kind, const LoopElem& x);

// Leibniz action over the factors.
std::vector<Scalar> loop_action(const TensorModule& m, const LoopElem& x,
                                const std::vector<Scalar>& v);
Matrix loop_action_matrix(const TensorModule& m, const LoopElem& x);

// Exact scalar sequences read off a highest-weight vector.
struct MomentData {
    CaseKind kind = CaseKind::A1;
    long a_max = 0;
    // delta_a1: "w" two-sided, index a = -a_max..a_max.
    // a1, ai1:  "w", index a = 0..a_max.
    // ai2:      "w_plus" (w_{+,a,0}) and "w_minus" (w_{-,a,1}), a = 0..a_max.
    std::map<std::string, std::vector<Scalar>> sequences;
};

// Acts with the case's cartan family on the tensor highest vector; the action
// must be scalar on it (NotWeightVector otherwise).
MomentData highest_weight_functional(const TensorModule& m, long a_max);

// Twisted-algebra basis families with index bound (per coordinate where the
// monoid is a pair).  For delta_a1 the index runs two-sided over -bound..bound.
std::vector<LoopElem> negative_family(CaseKind kind, long bound);
std::vector<LoopElem> positive_family(CaseKind kind, long bound);
std::vector<LoopElem> cartan_family(CaseKind kind, long bound);

// Row-echelon span tracker over the scalar field.
struct SpanBasis {
    std::vector<std::vector<Scalar>> rows;  // reduced echelon, unit pivots
    std::vector<long> pivots;

    long dim() const { return static_cast<long>(rows.size()); }
    // Reduces v against the span; inserts the remainder if nonzero.
    bool insert(std::vector<Scalar> v);
    bool contains(std::vector<Scalar> v) const;
};

struct CyclicData {
    SpanBasis basis;
    long dim = 0;
};

// Smallest action-closed subspace containing the tensor highest vector,
// computed by saturating under the negative family.  The index bound
// 2 dim + extra dominates the linear-recurrence order of any evaluated
// generator family, so larger indices act by linear combinations.
CyclicData cyclic_submodule(const TensorModule& m, long extra = 2);

// Dimension of the unique simple quotient of the cyclic submodule: the rank
// of the contravariant form restricted to it.
long simple_quotient_dim(const TensorModule& m);

// Independent route: enumerate the full submodule lattice of the cyclic
// submodule by brute force over weight lines.  Requires the cartan family to
// act with multiplicity-free joint eigenvalues on it (Internal otherwise).
long simple_quotient_dim_by_lattice(const TensorModule& m);

} // namespace tla
