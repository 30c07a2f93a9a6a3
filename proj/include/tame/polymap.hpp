#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tame/multipoly.hpp"

namespace tame {

/// An n-tuple of polynomials modelling an endomorphism of the polynomial
/// ring, i.e. a polynomial map of affine n-space.  Composition is fixed so
/// that component i of F∘G is F_i evaluated at (G_1,...,G_n): as maps,
/// (F∘G)(p) = F(G(p)).
class PolyMap {
public:
    PolyMap() : ring_(Ring::Z()), nvars_(0) {}
    PolyMap(const Ring& ring, std::vector<MultiPoly> comps);

    static PolyMap identity(const Ring& ring, int nvars);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const std::vector<MultiPoly>& components() const { return comps_; }
    const MultiPoly& component(int i) const { return comps_.at(i); }

    bool operator==(const PolyMap& o) const {
        return ring_ == o.ring_ && comps_ == o.comps_;
    }
    bool operator!=(const PolyMap& o) const { return !(*this == o); }

    bool is_identity() const;
    /// All components vanish at the origin.
    bool is_origin_preserving() const;

    /// F*(g) = g(F): the ring-morphism image of a polynomial under this map.
    MultiPoly apply(const MultiPoly& p) const;

    PolyMap to_fraction_field() const;
    PolyMap to_base_ring() const;

    std::string to_string() const;

private:
    Ring ring_;
    int nvars_;
    std::vector<MultiPoly> comps_;
};

/// (F∘G)_i = F_i(G_1,...,G_n).
PolyMap compose(const PolyMap& F, const PolyMap& G);
/// The extended map (F, X_{n+1}, ..., X_{n+m}).
PolyMap extend(const PolyMap& F, int m);
/// Exact determinant of the Jacobian matrix.
MultiPoly jacobian_det(const PolyMap& F);
/// compose(G,F) = id and compose(F,G) = id, exactly.
bool is_automorphism_witnessed(const PolyMap& F, const PolyMap& G);

// ---------------------------------------------------------------------------
// Tame generators and words

/// Adds f (not involving the target variable) to one coordinate.
struct ElementaryGen {
    int target;
    MultiPoly f;
};

/// Invertible linear action on a subset of the coordinates; entries are
/// stage-ring elements (polynomials in the remaining variables).  The
/// determinant must be a unit of the stage ring.
struct LinearBlockGen {
    std::vector<int> coords;
    std::vector<std::vector<MultiPoly>> entries;
};

struct TranslationGen {
    std::vector<Scalar> offset;
};

/// (X_1, ..., a*X_pos, ..., X_n) with a a unit.
struct DiagonalGen {
    Scalar a;
    int position = 0;
};

/// Extends the ambient space by `count` fresh identity coordinates; only
/// allowed as a leading prefix of a word.
struct AddVariablesGen {
    int count;
};

using TameGenerator =
    std::variant<ElementaryGen, LinearBlockGen, TranslationGen, DiagonalGen, AddVariablesGen>;

/// The generator as a polynomial map on `nvars` coordinates.
PolyMap generator_to_map(const TameGenerator& g, const Ring& ring, int nvars);
/// Closed-form inverse generator.
TameGenerator generator_inverse(const TameGenerator& g);
/// Same generator with polynomial payloads widened to `nvars` variables.
TameGenerator generator_extended(const TameGenerator& g, int nvars);
/// Construction-time checks (elementary f avoids target, block det a unit...).
void validate_generator(const TameGenerator& g, const Ring& ring, int nvars);

/// Ordered sequence of tame generators.  eval() composes left to right, the
/// first listed generator outermost: eval([g1,...,gk]) = g1∘g2∘...∘gk.
class TameWord {
public:
    TameWord() : ring_(Ring::Z(), 0) {}
    TameWord(const Ring& ring, int initial_nvars) : ring_(ring, initial_nvars) {}
    TameWord(const Ring& ring, int initial_nvars, std::vector<TameGenerator> gens);

    const Ring& ring() const { return ring_.first; }
    int initial_nvars() const { return ring_.second; }
    /// Variable count after all AddVariables prefixes.
    int ambient_nvars() const;
    const std::vector<TameGenerator>& generators() const { return gens_; }
    size_t size() const { return gens_.size(); }

    void push_back(TameGenerator g);

    PolyMap eval() const;
    TameWord inverted() const;

private:
    std::pair<Ring, int> ring_;
    std::vector<TameGenerator> gens_;
};

inline PolyMap eval_word(const TameWord& w) { return w.eval(); }
inline TameWord invert_word(const TameWord& w) { return w.inverted(); }

}  // namespace tame
