#pragma once

#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tame/scalar.hpp"

namespace tame {

/// Exponent vector over the map variables (X, Y, W, Z1, ...).  The parameter
/// t is never a map variable; it lives inside Scalar coefficients.
using Expo = std::vector<int>;

inline int expo_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lexicographic order: compare total degree first, then exponents
/// left to right (X before Y before W ...).  The map's rbegin() is the
/// leading term.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// total_degree of the zero polynomial: a sentinel below every integer.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over a declared coefficient domain:
/// a finite map from exponent vectors to nonzero coefficients.  Two
/// polynomials are equal iff their term maps are equal (canonical form).
class MultiPoly {
public:
    MultiPoly() : ring_(Ring::Z()), nvars_(0) {}
    MultiPoly(const Ring& ring, int nvars) : ring_(ring), nvars_(nvars) {}

    static MultiPoly zero(const Ring& ring, int nvars) { return MultiPoly(ring, nvars); }
    static MultiPoly constant(const Ring& ring, int nvars, const Scalar& c);
    static MultiPoly constant(const Ring& ring, int nvars, long c);
    static MultiPoly variable(const Ring& ring, int nvars, int var);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const std::map<Expo, Scalar, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The coefficient of the constant term (zero if absent).
    Scalar constant_term() const;
    /// Requires is_constant().
    Scalar constant_value() const;
    Scalar coeff(const Expo& e) const;
    /// True if no term uses variable `var`.
    bool independent_of(int var) const;

    void set_coeff(const Expo& e, const Scalar& c);
    void add_term(const Expo& e, const Scalar& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly mul_scalar(const Scalar& s) const;
    MultiPoly pow(unsigned long e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Exact quotient; throws InexactDivisionError unless o | *this.
    MultiPoly exact_div(const MultiPoly& o) const;
    bool divisible_by(const MultiPoly& o) const;

    /// Image under the ring morphism sending variable i to args[i].
    MultiPoly substitute(const std::vector<MultiPoly>& args) const;
    /// Substitute a single variable, fixing the others.
    MultiPoly substitute_one(int var, const MultiPoly& value) const;

    MultiPoly derivative(int var) const;
    MultiPoly eval_at_zero(int var) const;

    int degree(int var) const;
    /// Total degree in the map variables; kNegInfinity for the zero polynomial.
    int total_degree() const;
    /// Sum of the maximal-total-degree terms; requires a nonzero polynomial.
    MultiPoly leading_form() const;

    /// gcd of all coefficients (canonical associate); UFD coefficients only.
    Scalar content() const;

    /// Over a fraction field: f = A/b with A over the base ring, b canonical
    /// in R and gcd(content(A), b) = 1.
    std::pair<MultiPoly, Scalar> clear_denominators() const;

    /// View with the fraction-field descriptor.
    MultiPoly to_fraction_field() const;
    /// Check all coefficients are integral and drop the fraction flag.
    MultiPoly to_base_ring() const;
    /// Same polynomial in a wider ambient variable list (new vars unused).
    MultiPoly extended(int new_nvars) const;

    /// Canonical text: graded-lex descending, variables X, Y, W, Z1, Z2, ...
    std::string to_string() const;
    static std::string var_name(int i);

private:
    void check_compatible(const MultiPoly& o, const char* where) const;
    Ring ring_;
    int nvars_;
    std::map<Expo, Scalar, GrlexLess> terms_;
};

MultiPoly operator*(const Scalar& s, const MultiPoly& p);

}  // namespace tame
