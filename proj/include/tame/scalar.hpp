#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "tame/ring.hpp"
#include "tame/tpoly.hpp"

namespace tame {

/// Default trial-division bound for integer factorization.
inline constexpr unsigned long kDefaultFactorBound = 1000000;
/// Default degree bound accepted by Q[t] irreducible factorization.
inline constexpr int kDefaultTDegreeBound = 4;

/// Process-wide factor bound; reads/writes the value used by callers that do
/// not pass an explicit bound (the CLI's --factor-bound).
unsigned long factor_bound();
void set_factor_bound(unsigned long bound);

/// An element of a declared coefficient domain: Z, Q, Q[t], or their fraction
/// fields.  Values are stored fully reduced: fractions with positive
/// denominator, rational functions with monic denominator.  The canonical
/// associate of a nonzero integer is positive, of a nonzero t-polynomial is
/// monic.
class Scalar {
public:
    Scalar() : ring_(Ring::Z()), q_(0) {}
    explicit Scalar(const Ring& ring) : ring_(ring), q_(0) {}
    Scalar(const Ring& ring, long v);
    Scalar(const Ring& ring, const mpq_class& v);
    Scalar(const Ring& ring, const mpz_class& v);
    Scalar(const Ring& ring, TPoly v);
    Scalar(const Ring& ring, RatFunc v);

    static Scalar zero(const Ring& ring) { return Scalar(ring); }
    static Scalar one(const Ring& ring) { return Scalar(ring, 1); }
    static Scalar t(const Ring& ring);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    /// Fraction-mode value that actually lies in the base ring.
    bool is_integral() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(unsigned long e) const;
    /// Multiplicative inverse; requires a unit (or field mode and nonzero).
    Scalar inverse() const;
    /// Exact quotient in the ring; throws InexactDivisionError if o does not
    /// divide *this (field mode divides by any nonzero element).
    Scalar exact_div(const Scalar& o) const;
    bool divisible_by(const Scalar& o) const;

    /// Euclidean division (Z and Q[t] only): *this = q*o + r with |r| < |o|
    /// resp. deg r < deg o.
    std::pair<Scalar, Scalar> divmod(const Scalar& o) const;

    /// x = unit() * canonical(); canonical() is the positive/monic associate.
    Scalar canonical() const;
    Scalar unit_part() const;

    /// Canonical-associate gcd; gcd(0,0) = 0.  UFD mode only.
    static Scalar gcd(const Scalar& x, const Scalar& y);
    /// u*x + v*y = g = gcd(x,y) exactly; Euclidean descriptors only.
    static void extended_gcd(const Scalar& x, const Scalar& y, Scalar& g, Scalar& u, Scalar& v);
    /// Squarefree canonical associate (product of distinct irreducible
    /// factors); radical of a unit is 1.  Requires b != 0.
    static Scalar radical(const Scalar& b, unsigned long bound = factor_bound());
    /// Irreducible factorization up to a unit: b = unit * prod p_i^{s_i} with
    /// the p_i canonical and pairwise non-associate.  Throws FactorBoundError
    /// when the search bound is exceeded.
    static std::vector<std::pair<Scalar, int>> factor_irreducibles(
        const Scalar& b, unsigned long bound = factor_bound(),
        int tdeg_bound = kDefaultTDegreeBound);

    /// View in Frac(R); identity on fields.
    Scalar to_fraction_field() const;
    /// Check integrality and drop the fraction flag.
    Scalar to_base_ring() const;
    /// Numerator / denominator as base-ring scalars (fraction-mode view).
    Scalar numerator() const;
    Scalar denominator() const;

    /// Accessors for the underlying representation.
    const mpq_class& rational_value() const { return q_; }
    const RatFunc& ratfunc_value() const { return f_; }

    std::string to_string() const;

private:
    void check_invariants() const;
    Ring ring_;
    mpq_class q_;  // Integers (+Frac) and Rationals
    RatFunc f_;    // RatPolyT (+Frac)
};

Scalar operator*(long a, const Scalar& b);

}  // namespace tame
