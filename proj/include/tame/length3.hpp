#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/polymap.hpp"

namespace tame {

/// One shear factor over the fraction field: (X, Y+f(X)) when !x_shear,
/// (X+f(Y), Y) when x_shear; f has zero constant term.
struct PeelFactor {
    bool x_shear;
    MultiPoly f;  // univariate over K in the complementary variable
};

/// F = L ∘ D_{a,1} ∘ F_m ∘ ... ∘ F_1 with factors listed innermost first
/// (factors[0] = F_1) and adjacent factors alternating in type.
struct PeelResult {
    std::vector<Scalar> translation;  // L = (X+c, Y+d); scalars over K
    Scalar a;                         // D_{a,1} scale, over K
    std::vector<PeelFactor> factors;
};

/// Peels an automorphism of the plane over the fraction field into an
/// alternating product of elementary shears, a diagonal and a translation,
/// by Algorithm-1-style degree reduction.  When both degrees coincide the
/// reduction direction is ambiguous; both branches are explored and the
/// factorization with the fewest merged factors is returned.  Throws
/// NotAutomorphismError when every branch stalls.
PeelResult peel_over_K(const PolyMap& F);

/// Number of alternating shear factors in the reduced peel; 0 for diagonal
/// maps.  Requires an origin-preserving automorphism with a ∈ R*.
int length(const PolyMap& F);

/// The Lemma-5 payload of a length-three automorphism
/// F = (X + D(bY + A1(X)), Y + (A1(X) + A2(X + D(bY + A1(X))))/b),
/// generalized so the same structure can live over a stage ring: x_index is
/// the coordinate receiving the D-term, y_index the one receiving the
/// quotient, and every other variable acts as a coefficient.
struct Length3Data {
    Ring ring;  // base ring R of the coefficient UFD
    int nvars = 2;
    int x_index = 0;
    int y_index = 1;
    Scalar b;
    MultiPoly A1, A2;  // univariate in x_index over the stage ring, zero at 0
    MultiPoly D;       // univariate in y_index over the stage ring, zero at 0
    bool swapped = false;  // data describes swap∘F∘swap
};

/// Apply a univariate-in-`var` polynomial to an argument.
MultiPoly apply_univariate(const MultiPoly& p, int var, const MultiPoly& arg);

/// The Eq-(7)-shaped map encoded by the data (exact; divisions checked).
PolyMap reconstruct_length3(const Length3Data& data);

/// Extract (b, A1, A2, D) from a length-three F over a UFD.  Errors when the
/// length differs from 3, the peel has a nontrivial translation or diagonal,
/// or the two shear denominators are not associates.
Length3Data extract_l3(const PolyMap& F);

struct Lemma6FactorReport {
    Scalar p;
    bool divides_D = false;
    bool linear_branch = false;  // p | D-D'(0)Y, A1-A1'(0)X and A2-A2'(0)X
};

struct Lemma6Report {
    std::vector<Lemma6FactorReport> factors;
    bool integrality_36 = false;  // (A1(X)+A2(X+D(bY+A1(X))))/b in R[X,Y]
    bool integrality_37 = false;  // (A2(X)+A1(X-D(bY-A2(X))))/b in R[X,Y]
};

/// Checks the Lemma-6 dichotomy for every irreducible factor of b and the
/// two integrality claims; throws NotAutomorphismError if either fails.
Lemma6Report verify_lemma6(const Length3Data& data);

/// Conjugate data of Lemma 7: F = F1^{-1} ∘ (X+g(Y), Y) ∘ F1 with
/// F1 = (X, Y + A(X)/a) forces g(Y) = D(aY) with a | D.
struct ConjugateData {
    Scalar a;
    MultiPoly A;  // univariate in X over R
    MultiPoly D;  // univariate in Y over R
};

/// Verifies the Lemma-7 structure for a conjugate automorphism; A and a give
/// the conjugating shear.  Throws when g is not D(aY) or a does not divide D.
ConjugateData verify_lemma7(const PolyMap& F, const MultiPoly& A, const Scalar& a);

struct P1P2 {
    MultiPoly a;        // 1 + D'(0) A1'(0), a stage-ring element (constant at top level)
    Scalar b_tilde;     // radical of b
    MultiPoly P1, P2;   // F = (a X + b~ P1, Y + P2)
};

/// The rewriting F = (aX + b~ P1(X,Y), Y + P2(X,Y)) with exact divisions.
P1P2 compute_p1_p2(const Length3Data& data);

}  // namespace tame
