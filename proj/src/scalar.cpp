#include "tame/scalar.hpp"

#include <algorithm>
#include <functional>

#include "tame/errors.hpp"

namespace tame {

namespace {
unsigned long g_factor_bound = kDefaultFactorBound;
}

unsigned long factor_bound() { return g_factor_bound; }
void set_factor_bound(unsigned long bound) { g_factor_bound = bound ? bound : 1; }

Scalar::Scalar(const Ring& ring, long v) : ring_(ring) {
    if (ring.has_t())
        f_ = RatFunc(TPoly(mpq_class(v)));
    else
        q_ = mpq_class(v);
    check_invariants();
}

Scalar::Scalar(const Ring& ring, const mpz_class& v) : ring_(ring) {
    if (ring.has_t())
        f_ = RatFunc(TPoly(mpq_class(v)));
    else
        q_ = mpq_class(v);
}

Scalar::Scalar(const Ring& ring, const mpq_class& v) : ring_(ring), q_(v) {
    q_.canonicalize();
    if (ring.has_t()) {
        f_ = RatFunc(TPoly(q_));
        q_ = 0;
    }
    check_invariants();
}

Scalar::Scalar(const Ring& ring, TPoly v) : ring_(ring), q_(0), f_(std::move(v)) {
    if (!ring.has_t()) throw RingMismatchError("t-polynomial value in a t-free ring");
}

Scalar::Scalar(const Ring& ring, RatFunc v) : ring_(ring), q_(0), f_(std::move(v)) {
    if (!ring.has_t()) throw RingMismatchError("t-rational value in a t-free ring");
    check_invariants();
}

Scalar Scalar::t(const Ring& ring) {
    if (!ring.has_t()) throw RingMismatchError("parameter t is not in " + ring.name());
    return Scalar(ring, TPoly::t());
}

void Scalar::check_invariants() const {
    if (!ring_.fraction_field) {
        if (ring_.kind == RingKind::Integers && q_.get_den() != 1)
            throw PreconditionError("non-integral coefficient in Z: " + q_.get_str());
        if (ring_.kind == RingKind::RatPolyT && !f_.is_integral())
            throw PreconditionError("non-polynomial coefficient in Q[t]: " + f_.to_string());
    }
}

bool Scalar::is_zero() const { return ring_.has_t() ? f_.is_zero() : q_ == 0; }

bool Scalar::is_one() const {
    return ring_.has_t() ? (f_.is_integral() && f_.num().is_one()) : q_ == 1;
}

bool Scalar::is_unit() const {
    if (is_zero()) return false;
    if (ring_.is_field()) return true;
    if (ring_.kind == RingKind::Integers) return q_ == 1 || q_ == -1;
    return f_.num().is_constant();  // Q[t]: nonzero constants
}

bool Scalar::is_integral() const {
    if (ring_.has_t()) return f_.is_integral();
    return q_.get_den() == 1 || ring_.kind == RingKind::Rationals;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (ring_.has_t())
        r.f_ = -f_;
    else
        r.q_ = -q_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar::+");
    Scalar r(ring_);
    if (ring_.has_t())
        r.f_ = f_ + o.f_;
    else
        r.q_ = q_ + o.q_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar::*");
    Scalar r(ring_);
    if (ring_.has_t())
        r.f_ = f_ * o.f_;
    else
        r.q_ = q_ * o.q_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (ring_ != o.ring_) return false;
    return ring_.has_t() ? f_ == o.f_ : q_ == o.q_;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r = Scalar::one(ring_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    if (!ring_.is_field() && !is_unit())
        throw PreconditionError("inverse of a non-unit in " + ring_.name());
    Scalar r(ring_);
    if (ring_.has_t())
        r.f_ = RatFunc(TPoly::one()) / f_;
    else
        r.q_ = 1 / q_;
    return r;
}

Scalar Scalar::exact_div(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar::exact_div");
    if (o.is_zero()) throw PreconditionError("division by zero");
    Scalar r(ring_);
    if (ring_.is_field()) {
        if (ring_.has_t())
            r.f_ = f_ / o.f_;
        else
            r.q_ = q_ / o.q_;
        return r;
    }
    if (ring_.kind == RingKind::Integers) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), q_.get_num().get_mpz_t(),
                    o.q_.get_num().get_mpz_t());
        if (rem != 0)
            throw InexactDivisionError("inexact integer division: " + to_string() + " by " +
                                       o.to_string());
        r.q_ = q;
        return r;
    }
    r.f_ = RatFunc(TPoly::exact_div(f_.num(), o.f_.num()));
    return r;
}

bool Scalar::divisible_by(const Scalar& o) const {
    if (o.is_zero()) return is_zero();
    try {
        (void)exact_div(o);
        return true;
    } catch (const InexactDivisionError&) {
        return false;
    }
}

std::pair<Scalar, Scalar> Scalar::divmod(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar::divmod");
    if (!ring_.is_euclidean() || ring_.kind == RingKind::Rationals) {
        if (ring_.kind == RingKind::Rationals)
            return {exact_div(o), Scalar::zero(ring_)};
        throw PreconditionError("divmod needs a Euclidean descriptor, got " + ring_.name());
    }
    if (o.is_zero()) throw PreconditionError("divmod by zero");
    Scalar q(ring_), r(ring_);
    if (ring_.kind == RingKind::Integers) {
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), q_.get_num().get_mpz_t(),
                    o.q_.get_num().get_mpz_t());
        q.q_ = qq;
        r.q_ = rr;
    } else {
        auto [qq, rr] = TPoly::divmod(f_.num(), o.f_.num());
        q.f_ = RatFunc(qq);
        r.f_ = RatFunc(rr);
    }
    return {q, r};
}

Scalar Scalar::canonical() const {
    if (is_zero()) return *this;
    Scalar r(ring_);
    if (ring_.is_field()) return Scalar::one(ring_);
    if (ring_.kind == RingKind::Integers) {
        r.q_ = abs(q_);
        return r;
    }
    r.f_ = RatFunc(f_.num().monic());
    return r;
}

Scalar Scalar::unit_part() const {
    if (is_zero()) return Scalar::one(ring_);
    if (ring_.is_field()) return *this;
    Scalar r(ring_);
    if (ring_.kind == RingKind::Integers) {
        r.q_ = q_ < 0 ? -1 : 1;
        return r;
    }
    r.f_ = RatFunc(TPoly(f_.num().leading()));
    return r;
}

Scalar Scalar::gcd(const Scalar& x, const Scalar& y) {
    require_same_ring(x.ring_, y.ring_, "Scalar::gcd");
    if (!x.ring_.is_ufd_mode())
        throw PreconditionError("gcd over a fraction field " + x.ring_.name());
    if (x.ring_.kind == RingKind::Rationals) {
        if (x.is_zero() && y.is_zero()) return Scalar::zero(x.ring_);
        return Scalar::one(x.ring_);
    }
    Scalar r(x.ring_);
    if (x.ring_.kind == RingKind::Integers) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), x.q_.get_num().get_mpz_t(), y.q_.get_num().get_mpz_t());
        r.q_ = g;
        return r;
    }
    r.f_ = RatFunc(TPoly::gcd(x.f_.num(), y.f_.num()));
    return r;
}

void Scalar::extended_gcd(const Scalar& x, const Scalar& y, Scalar& g, Scalar& u, Scalar& v) {
    require_same_ring(x.ring_, y.ring_, "Scalar::extended_gcd");
    const Ring& ring = x.ring_;
    if (!ring.is_ufd_mode() || ring.kind == RingKind::Rationals)
        throw PreconditionError("extended_gcd needs a Euclidean descriptor, got " + ring.name());
    if (ring.kind == RingKind::Integers) {
        mpz_class gg, uu, vv;
        mpz_gcdext(gg.get_mpz_t(), uu.get_mpz_t(), vv.get_mpz_t(),
                   x.q_.get_num().get_mpz_t(), y.q_.get_num().get_mpz_t());
        g = Scalar(ring, gg);
        u = Scalar(ring, uu);
        v = Scalar(ring, vv);
        return;
    }
    TPoly gg, uu, vv;
    TPoly::extended_gcd(x.f_.num(), y.f_.num(), gg, uu, vv);
    g = Scalar(ring, gg);
    u = Scalar(ring, uu);
    v = Scalar(ring, vv);
}

namespace {

/// Trial-division factorization of |n| up to `bound`.  The leftover cofactor
/// is provably prime when it is at most bound^2; past that we give up.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n, unsigned long bound) {
    std::vector<std::pair<mpz_class, int>> out;
    n = abs(n);
    if (n <= 1) return out;
    auto strip = [&](const mpz_class& p) {
        int m = 0;
        while (n % p == 0) {
            n /= p;
            ++m;
        }
        if (m) out.emplace_back(p, m);
    };
    strip(2);
    strip(3);
    for (mpz_class d = 5; d * d <= n && d <= bound; d += (d % 6 == 5) ? 2 : 4) strip(d);
    if (n > 1) {
        mpz_class b2 = mpz_class(bound) * mpz_class(bound);
        if (n > b2 && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw FactorBoundError("integer factor search exceeded bound " +
                                   std::to_string(bound) + "; increase bound");
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<mpz_class> divisors_of(const mpz_class& n, unsigned long bound) {
    auto fac = factor_integer(n, bound);
    std::vector<mpz_class> divs{1};
    for (auto& [p, m] : fac) {
        size_t sz = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= m; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

/// Yun's squarefree decomposition (characteristic zero): f = prod a_i^i with
/// the a_i squarefree, pairwise coprime, monic.
std::vector<std::pair<TPoly, int>> squarefree_decompose(const TPoly& f) {
    std::vector<std::pair<TPoly, int>> out;
    TPoly g = TPoly::gcd(f, f.derivative());
    TPoly w = TPoly::exact_div(f, g).monic();
    TPoly y = TPoly::exact_div(f.derivative(), g);
    int i = 1;
    while (w.degree() > 0) {
        TPoly z = y - w.derivative();
        TPoly a = TPoly::gcd(w, z);
        if (a.degree() > 0) out.emplace_back(a, i);
        w = TPoly::exact_div(w, a).monic();
        y = TPoly::exact_div(z, a);
        ++i;
    }
    return out;
}

/// All rational roots of a squarefree monic q-polynomial.
std::vector<mpq_class> rational_roots(const TPoly& f, unsigned long bound) {
    std::vector<mpq_class> roots;
    if (f.degree() < 1) return roots;
    // Clear denominators to a primitive integer polynomial.
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic(f.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i) {
        mpq_class scaled = f.coeffs()[i] * den_lcm;
        ic[i] = scaled.get_num();
    }
    mpz_class g = 0;
    for (const auto& c : ic) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : ic) c /= g;
    mpz_class c0 = ic.front(), cn = ic.back();
    if (c0 == 0) {
        roots.push_back(0);
        return roots;  // squarefree: the root 0 is simple; caller divides it out
    }
    auto ps = divisors_of(c0, bound);
    auto qs = divisors_of(cn, bound);
    for (const auto& p : ps)
        for (const auto& q : qs) {
            mpq_class cand(p, q);
            cand.canonicalize();
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class r = sign ? mpq_class(-cand) : cand;
                if (f.eval(r) == 0) {
                    if (std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
                }
            }
        }
    return roots;
}

bool rational_sqrt(const mpq_class& x, mpq_class& out) {
    if (x < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        out = mpq_class(sn, sd);
        return true;
    }
    return false;
}

/// Split a monic squarefree quartic with no rational roots into two monic
/// quadratics over Q, if possible.  Returns true and fills q1, q2 on success.
bool split_quartic(const TPoly& h, TPoly& q1, TPoly& q2, unsigned long bound) {
    // Depress: t = s - h3/4.
    mpq_class h3 = h.coeff(3), h2 = h.coeff(2), h1 = h.coeff(1), h0 = h.coeff(0);
    mpq_class sh = -h3 / 4;
    // Coefficients of s^4 + p s^2 + q s + r.
    mpq_class p = h2 - 3 * h3 * h3 / 8;
    mpq_class q = h1 - h3 * h2 / 2 + h3 * h3 * h3 / 8;
    mpq_class r = h0 - h3 * h1 / 4 + h3 * h3 * h2 / 16 - 3 * h3 * h3 * h3 * h3 / 256;
    auto undepress = [&](const TPoly& f) {
        // substitute s := t + h3/4
        TPoly t_shift(std::vector<mpq_class>{h3 / 4, mpq_class(1)});
        TPoly acc = TPoly::zero();
        for (int i = f.degree(); i >= 0; --i) acc = acc * t_shift + TPoly(f.coeff(i));
        return acc;
    };
    if (q == 0) {
        // (s^2+u)(s^2+v) with u+v = p, uv = r.
        mpq_class disc = p * p - 4 * r, sq;
        if (rational_sqrt(disc, sq)) {
            mpq_class u = (p + sq) / 2, v = (p - sq) / 2;
            q1 = undepress(TPoly(std::vector<mpq_class>{u, mpq_class(0), mpq_class(1)}));
            q2 = undepress(TPoly(std::vector<mpq_class>{v, mpq_class(0), mpq_class(1)}));
            return true;
        }
        // (s^2+as+b)(s^2-as+b) with b^2 = r, a^2 = 2b - p.
        mpq_class b;
        if (rational_sqrt(r, b)) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                mpq_class bb = sgn ? mpq_class(-b) : b, a;
                if (rational_sqrt(2 * bb - p, a) && a != 0) {
                    q1 = undepress(TPoly(std::vector<mpq_class>{bb, a, mpq_class(1)}));
                    q2 = undepress(TPoly(std::vector<mpq_class>{bb, -a, mpq_class(1)}));
                    return true;
                }
            }
        }
        return false;
    }
    // Resolvent in z = alpha^2: z^3 + 2p z^2 + (p^2-4r) z - q^2 = 0.
    TPoly res(std::vector<mpq_class>{-q * q, p * p - 4 * r, 2 * p, mpq_class(1)});
    TPoly res_sf = TPoly::exact_div(res, TPoly::gcd(res, res.derivative()));
    for (const auto& z : rational_roots(res_sf.monic(), bound)) {
        if (z == 0) continue;
        mpq_class alpha;
        if (!rational_sqrt(z, alpha) || alpha == 0) continue;
        mpq_class beta = (p + z - q / alpha) / 2;
        mpq_class gamma = (p + z + q / alpha) / 2;
        TPoly c1(std::vector<mpq_class>{beta, alpha, mpq_class(1)});
        TPoly c2(std::vector<mpq_class>{gamma, -alpha, mpq_class(1)});
        TPoly dep(std::vector<mpq_class>{r, q, p, mpq_class(0), mpq_class(1)});
        if (c1 * c2 == dep) {
            q1 = undepress(c1);
            q2 = undepress(c2);
            return true;
        }
    }
    return false;
}

/// Irreducible factorization of a squarefree monic t-polynomial.
std::vector<TPoly> factor_squarefree(TPoly h, unsigned long bound, int tdeg_bound) {
    std::vector<TPoly> out;
    if (h.degree() >= 1 && h.coeff(0) == 0) {
        out.push_back(TPoly::t());
        h = TPoly::exact_div(h, TPoly::t());
    }
    for (const auto& r : rational_roots(h, bound)) {
        TPoly lin(std::vector<mpq_class>{-r, mpq_class(1)});
        h = TPoly::exact_div(h, lin);
        out.push_back(lin);
    }
    if (h.degree() == 0) return out;
    if (h.degree() <= 3) {
        out.push_back(h.monic());  // rootless quadratic/cubic is irreducible over Q
        return out;
    }
    if (h.degree() == 4) {
        TPoly q1, q2;
        if (split_quartic(h.monic(), q1, q2, bound)) {
            out.push_back(q1.monic());
            out.push_back(q2.monic());
        } else {
            out.push_back(h.monic());
        }
        return out;
    }
    if (h.degree() > tdeg_bound)
        throw FactorBoundError("t-polynomial factor search limited to degree " +
                               std::to_string(tdeg_bound) + "; increase bound");
    out.push_back(h.monic());
    return out;
}

}  // namespace

Scalar Scalar::radical(const Scalar& b, unsigned long bound) {
    if (b.is_zero()) throw PreconditionError("radical of zero");
    if (!b.ring().is_ufd_mode())
        throw PreconditionError("radical over a fraction field " + b.ring().name());
    if (b.is_unit()) return Scalar::one(b.ring());
    if (b.ring().kind == RingKind::RatPolyT) {
        // squarefree part f / gcd(f, f'), valid in characteristic zero
        const TPoly& f = b.ratfunc_value().num();
        TPoly g = TPoly::gcd(f, f.derivative());
        return Scalar(b.ring(), TPoly::exact_div(f, g).monic());
    }
    mpz_class r = 1;
    for (const auto& [p, m] : factor_integer(b.rational_value().get_num(), bound)) r *= p;
    return Scalar(b.ring(), r);
}

std::vector<std::pair<Scalar, int>> Scalar::factor_irreducibles(const Scalar& b,
                                                                unsigned long bound,
                                                                int tdeg_bound) {
    if (b.is_zero()) throw PreconditionError("factorization of zero");
    if (!b.ring().is_ufd_mode())
        throw PreconditionError("factorization over a fraction field " + b.ring().name());
    std::vector<std::pair<Scalar, int>> out;
    if (b.ring().kind == RingKind::Rationals || b.is_unit()) return out;
    if (b.ring().kind == RingKind::Integers) {
        for (const auto& [p, m] : factor_integer(b.rational_value().get_num(), bound))
            out.emplace_back(Scalar(b.ring(), p), m);
        return out;
    }
    TPoly f = b.ratfunc_value().num().monic();
    for (const auto& [part, mult] : squarefree_decompose(f))
        for (const auto& irr : factor_squarefree(part, bound, tdeg_bound))
            out.emplace_back(Scalar(b.ring(), irr), mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) {
        const TPoly& x = a.first.ratfunc_value().num();
        const TPoly& y = b2.first.ratfunc_value().num();
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.to_string() < y.to_string();
    });
    return out;
}

Scalar Scalar::to_fraction_field() const {
    Scalar r(*this);
    r.ring_ = ring_.fraction();
    return r;
}

Scalar Scalar::to_base_ring() const {
    if (!is_integral())
        throw InexactDivisionError("value " + to_string() + " is not integral over " +
                                   ring_.base().name());
    Scalar r(*this);
    r.ring_ = ring_.base();
    return r;
}

Scalar Scalar::numerator() const {
    Scalar r(ring_.base());
    if (ring_.has_t())
        r.f_ = RatFunc(f_.num());
    else
        r.q_ = mpq_class(q_.get_num());
    return r;
}

Scalar Scalar::denominator() const {
    Scalar r(ring_.base());
    if (ring_.has_t())
        r.f_ = RatFunc(f_.den());
    else
        r.q_ = mpq_class(q_.get_den());
    return r;
}

std::string Scalar::to_string() const {
    return ring_.has_t() ? f_.to_string() : q_.get_str();
}

Scalar operator*(long a, const Scalar& b) { return Scalar(b.ring(), a) * b; }

}  // namespace tame
