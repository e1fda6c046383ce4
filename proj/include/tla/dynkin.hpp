#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tla/classifier.hpp"

namespace tla {

// Affine diagram families, superscript encoded as One / Two.
enum class AffineFamily {
    A1One,      // A_1^{(1)}
    AOne,       // A_l^{(1)}, l >= 2
    BOne,       // B_l^{(1)}, l >= 3
    COne,       // C_l^{(1)}, l >= 2
    DOne,       // D_l^{(1)}, l >= 4
    E6One,
    E7One,
    E8One,
    F4One,
    G2One,
    A2Two,      // A_2^{(2)}
    AEvenTwo,   // A_{2l}^{(2)}, l >= 2
    AOddTwo,    // A_{2l-1}^{(2)}, l >= 3
    DTwo,       // D_{l+1}^{(2)}, l >= 2
    E6Two,      // E_6^{(2)}
};

// Affine Dynkin diagram with vertex set {0,...,l} plus the finite diagram
// {1,...,n} it folds; mu is the diagram involution on the finite vertices,
// extended by mu[0] = 0.  All coefficient vectors over the finite vertices
// are indexed 0..n-1 for vertices 1..n.
struct AffineDiagram {
    AffineFamily family = AffineFamily::A1One;
    std::string type;       // printed label, e.g. "A_5^{(2)}"
    int r = 1;              // twist order
    int l = 0;              // affine vertices {0,...,l}
    int n = 0;              // finite vertices {1,...,n}
    std::vector<std::vector<long>> cartan;         // (l+1) x (l+1)
    std::vector<std::vector<long>> finite_cartan;  // n x n
    std::vector<int> mu;                           // size n+1, mu[0] = 0
    std::vector<long> marks;                       // a_j, size l+1
    std::vector<long> comarks;                     // a_j^vee, size l+1
    std::vector<long> alpha0;                      // lowest-weight root, over 1..n
    std::vector<long> h0;                          // zero-node coweight, over 1..n
    std::vector<int> standard_numbering;           // vertex -> cited reference numbering
};

AffineDiagram affine_diagram(AffineFamily family, int l);

// Parses a printed label such as "A_5^{(2)}" or "D_{11}^{(2)}".
AffineDiagram parse_affine_type(const std::string& label);

// Primitive positive integer kernel vectors of the Cartan matrix and of its
// transpose; cross-checked against the stored coefficient tables.
std::pair<std::vector<long>, std::vector<long>> compute_marks(const AffineDiagram& d);

// One row of the involution table: painted vertex set S-tilde on a concrete
// diagram, with its rank constraints and fixed-subalgebra description.
struct InvolutionRow {
    AffineDiagram diagram;
    std::vector<int> s_tilde;
    std::string constraints;
    std::string k_desc;
    int center_dim = 0;  // = |s_tilde| - 1
};

// All table rows with l <= max_l, deduplicated up to diagram automorphism.
std::vector<InvolutionRow> enumerate_rows(int max_l);

// Verifies w_0 = -sum_j a_j^vee w_j in coweight coordinates, with w_j built
// from the mu-orbit rule.  The relation excludes type A_{2l}^{(2)}.
bool w0_check(const InvolutionRow& row);

// Permutations of {0,...,l} preserving the affine Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(const AffineDiagram& d);

// Whether some diagram automorphism maps painted set s1 onto s2.
bool rows_conjugate(const AffineDiagram& d, const std::vector<int>& s1,
                    const std::vector<int>& s2);

// Per-node minimal-case routing for a painted diagram; validates the
// mark-sum constraint r * sum_{j in S~} a_j = 2 (or r = 1 with empty S~).
GeneralRouting routing_for_row(const AffineDiagram& d, const std::vector<int>& s_tilde);

ClassificationResult classify_general(const AffineDiagram& d,
                                      const std::vector<int>& s_tilde,
                                      const std::map<int, GeneralNodeData>& data);

// Text table "type, S~, constraints, k", one line per row.
std::string rows_table(int max_l);

} // namespace tla
