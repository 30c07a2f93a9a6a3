#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/polymap.hpp"

namespace tame {

/// One recorded action of the tameness loop.  Replaying `action` on `before`
/// (left composition) reproduces the next intermediate map.
struct TraceStep {
    int step;  // 0 = pre-scan, otherwise the algorithm step 4/5/6
    PolyMap before;
    TameGenerator action;
    std::string note;
};

/// Decision for membership of F in the tame subgroup over its ring.
struct TameDecision {
    bool tame = false;
    TameWord word;  // on success: evaluates exactly to the input
    int fail_step = 0;
    std::string detail;
    int obstruction_d1 = 0, obstruction_d2 = 0;  // degrees at the failing step
    std::vector<TraceStep> trace;
};

/// Searches for an affine map strictly reducing tdeg when both components
/// have the same degree d > 1.  Reduction by an affine map requires the two
/// leading forms to be proportional over the fraction field; the returned
/// generator is built from the ratio (a row operation when the ratio or its
/// inverse lies in R, a unimodular completion via extended_gcd otherwise).
std::optional<TameGenerator> affine_reduction_search(const PolyMap& F);

/// Decides membership of F = (P, Q) in the tame subgroup over a domain,
/// returning a factorization word on success and a reasoned obstruction on
/// failure.  The total degree strictly decreases at every loop pass, which
/// is the termination witness.
TameDecision tame2(const PolyMap& F);

}  // namespace tame
