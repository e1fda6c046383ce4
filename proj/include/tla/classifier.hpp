#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tla/repr.hpp"

namespace tla {

// Exact minimal linear recurrence and its geometric decomposition.
struct GeometricDecomposition {
    enum class Status { Ok, Insufficient, Unsupported };
    Status status = Status::Ok;
    // True when the characteristic polynomial splits into pairwise distinct
    // nonzero roots over the field; terms are only populated then.
    bool pure = false;
    long order = 0;
    long window = 0;
    std::vector<std::pair<Scalar, Scalar>> terms;  // (root, coefficient)
    std::vector<Scalar> roots;                     // with multiplicity, as factored
    std::vector<Scalar> recurrence;                // q_1..q_d: s_t = sum q_i s_{t-i}
    std::vector<Scalar> charpoly;                  // ascending c_0..c_{d-1}, monic top
    std::string why;                               // set for Insufficient/Unsupported
};

// Finds the minimal order d fitting the whole window, requiring window
// length >= 2d+2; factors the characteristic polynomial over the field and
// solves the coefficients.  All failures are values, never exceptions.
GeometricDecomposition detect_recurrence(const std::vector<Scalar>& s);

enum class Verdict { FiniteDimensional, NotFiniteDimensional, InsufficientData, UnsupportedField };
std::string verdict_name(Verdict v);

struct CheckRecord {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Per-root extracted parameters.  beta is a root of the plus sequence;
// mult its coefficient when that is a multiplicity, j the signed imbalance
// #alpha - #alpha^{-1} recovered from the minus sequence where applicable.
struct RootInfo {
    Scalar beta;
    long mult = 0;
    Scalar minus_coeff;
    long j = 0;
    bool j_signed = false;          // j's sign is determined (sqrt in field)
    std::vector<Scalar> alphas;     // materialized when beta^2-4 is a field square
};

struct ClassificationResult {
    Verdict verdict = Verdict::NotFiniteDimensional;
    CaseKind kind = CaseKind::A1;
    bool is_general = false;
    std::optional<Scalar> nu_plus, nu_minus;
    std::vector<RootInfo> roots;
    std::vector<Scalar> recurrence;
    std::vector<Scalar> charpoly;
    std::vector<CheckRecord> certificate;
    std::string why;
    std::vector<std::pair<int, ClassificationResult>> node_results;  // general only
};

// Decide finite-dimensionality of the highest weight module presented by the
// moment window, per the case's closed coefficient formulas.
ClassificationResult classify_case(CaseKind kind, const MomentData& data);

// Synthesis parameters: evaluation points alpha (nonzero field scalars) and,
// where the case allows them, the coefficients at the folded roots +-2.
struct SynthParams {
    Scalar nu1;
    Scalar nu_1;
    std::vector<Scalar> alphas;
};

// Closed-formula moment window; inverse of classification on its image.
MomentData synthesize_moments(CaseKind kind, const SynthParams& p, long a_max);

// Node routing for a general diagram row: per node j of the affine diagram
// minus the zero node, the minimal-case shape it reduces to.
//   'a' paired nodes with a_{j,mu(j)} = 0   (pair logic)
//   'b' fixed node outside S                (single logic)
//   'c' fixed node in S                     (single logic with free nu)
//   'd' paired nodes with a_{j,mu(j)} = -1  (pair logic, overall factor 2)
struct GeneralNode {
    int node = 0;
    char node_case = 'b';
    long comark = 1;  // a_j^vee
};

struct GeneralRouting {
    std::string type;
    bool zero_in_stilde = false;
    std::vector<GeneralNode> nodes;
};

struct GeneralNodeData {
    std::vector<Scalar> w;
    std::vector<Scalar> w_minus;  // present only for paired nodes
};

// Per-node sequences in the shape of the routing's case.
GeneralNodeData synthesize_node(char node_case, const SynthParams& p, long a_max);

// Routes every node to its minimal-case logic, adds the comark integrality
// constraint on nu at 'c' nodes when 0 is not in S-tilde, and conjoins the
// verdicts.
ClassificationResult classify_general(const GeneralRouting& row,
                                      const std::map<int, GeneralNodeData>& data);

} // namespace tla
