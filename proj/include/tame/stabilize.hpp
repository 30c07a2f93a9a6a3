#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/length3.hpp"

namespace tame {

/// Completion of the unimodular row (a, b~) to the 3x3 stage matrix
/// [[a,0,-b~],[0,1,0],[c,0,d]] with a d + b~ c = 1; c lives in the stage
/// ring, d in R.
struct UnimodularCompletion {
    MultiPoly c;
    Scalar d;
};

/// Solve a*d + b~*c = 1 for a constant scalar a (extended Euclid) or a
/// stage-ring element a (per-irreducible inversion and CRT).  Throws when the
/// row is not unimodular.
UnimodularCompletion unimodular_complete(const MultiPoly& a, const Scalar& b_tilde);

/// The stage-ring Bezout solver behind unimodular_complete: b~ squarefree in
/// R, and a mod p must be a nonzero constant for each irreducible p | b~.
/// Returns d ∈ R with a*d ≡ 1 mod b~ and c = (1 - a*d)/b~ exact.
UnimodularCompletion bezout_over_stage(const MultiPoly& a, const Scalar& b_tilde);

/// Decompose a determinant-1 linear block into elementary transvections.
/// Succeeds over Euclidean coefficient stages for constant matrices, and for
/// the stage shape whenever one of the diagonal corners is a unit; returns
/// nullopt when reduction stalls (the caller keeps a certified block).
std::optional<std::vector<TameGenerator>> decompose_linear_block(const LinearBlockGen& block,
                                                                 const Ring& ring, int nvars);

/// One stabilization stage: the data lives in `before`; all maps below are
/// in ambient before.nvars + 1 (one fresh coordinate appended).
struct StageRecord {
    Length3Data before;
    Length3Data next;          // over the stage ring, x_index = the fresh var
    Scalar b_tilde;            // radical of before.b
    MultiPoly a, c;            // stage-ring elements
    Scalar d;
    TameGenerator tau, gamma, eps2, eps3;     // forward stage moves
    LinearBlockGen A;                          // [[a,0,-b~],[0,1,0],[c,0,d]]
    std::vector<TameGenerator> A_word;         // empty when certified
    bool elementary_decomposed = false;
};

/// Construct one stage: tau, gamma, the unimodular completion, the
/// normalization moves and the next-stage data, all verified by exact
/// composition identities.  Requires b not a unit.
StageRecord make_stage(const Length3Data& data);

struct StageSummary {
    std::string a, b, b_tilde, c, d;
    bool elementary_decomposed = false;
};

/// A verifiable tame factorization of the extended automorphism.
struct Certificate {
    Ring ring;
    PolyMap original;  // 2-variable map over R
    int added_vars = 0;
    TameWord word;  // word over R in 2 + added_vars variables
    std::vector<StageSummary> stages;
    bool all_blocks_elementary = true;
    bool verified = false;
};

/// The Main Theorem engine: peels F (length 3 required), runs stabilization
/// stages until the denominator chain b -> b/rad(b) -> ... reaches a unit,
/// and emits a tame word whose exact composition equals extend(F, m) with
/// m = number of stages.
Certificate stabilize(const PolyMap& F);

/// Same engine driven by explicit Lemma-5 data in the plane (no peeling);
/// the certificate's original map is the Eq-(7) reconstruction.
Certificate stabilize_from_data(const Length3Data& data);

/// Re-evaluates the certificate word and compares against the extended
/// original, exactly.
bool verify_certificate(const Certificate& cert);

/// s(F): total multiplicity of the irreducible factors of b, the induction
/// measure of the stabilization recursion.  Zero iff b is a unit.
int s_count(const Scalar& b);

}  // namespace tame
