#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace tame {

/// Dense univariate polynomial in the coefficient parameter t, over exact
/// rationals.  Coefficient i is the coefficient of t^i; no trailing zeros are
/// stored, so the zero polynomial has an empty coefficient vector.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(const mpq_class& c);
    explicit TPoly(std::vector<mpq_class> coeffs);

    static TPoly zero() { return TPoly(); }
    static TPoly one() { return TPoly(mpq_class(1)); }
    static TPoly t();

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;
    /// Degree in t; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& coeff(int i) const;
    const mpq_class& leading() const;
    mpq_class constant_value() const { return c_.empty() ? mpq_class(0) : c_[0]; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly mul_scalar(const mpq_class& s) const;
    TPoly pow(unsigned long e) const;

    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    /// Quotient and remainder; coefficients are a field so this always exists.
    static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
    /// Exact quotient; throws InexactDivisionError on nonzero remainder.
    static TPoly exact_div(const TPoly& a, const TPoly& b);
    /// Monic gcd; gcd(0,0) = 0.
    static TPoly gcd(const TPoly& a, const TPoly& b);
    /// g = gcd(a,b) monic with u*a + v*b = g.
    static void extended_gcd(const TPoly& a, const TPoly& b, TPoly& g, TPoly& u, TPoly& v);

    TPoly derivative() const;
    TPoly monic() const;
    mpq_class eval(const mpq_class& x) const;
    /// Substitute t := s*t (used when rescaling shear data).
    TPoly compose_linear(const mpq_class& s) const;

    /// Canonical text: descending powers, e.g. "t^3 - 2*t + 1", "1/2*t^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Reduced fraction of TPolys with monic denominator; models Q(t).
class RatFunc {
public:
    RatFunc() : num_(), den_(TPoly::one()) {}
    explicit RatFunc(TPoly n) : num_(std::move(n)), den_(TPoly::one()) {}
    RatFunc(TPoly n, TPoly d);

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void reduce();
    TPoly num_, den_;
};

}  // namespace tame
