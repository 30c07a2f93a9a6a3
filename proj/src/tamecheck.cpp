#include "tame/tamecheck.hpp"

#include <sstream>

#include "tame/errors.hpp"

namespace tame {

namespace {

/// c with g = c*f exactly, over the coefficient field; nullopt if the forms
/// are not proportional.
std::optional<Scalar> proportionality_ratio(const MultiPoly& g, const MultiPoly& f) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    MultiPoly fk = f.to_fraction_field();
    MultiPoly gk = g.to_fraction_field();
    const auto& lead_f = *fk.terms().rbegin();
    Scalar c = gk.coeff(lead_f.first);
    if (c.is_zero()) return std::nullopt;
    c = c.exact_div(lead_f.second);
    if (gk != fk.mul_scalar(c)) return std::nullopt;
    return c;
}

MultiPoly const_poly(const Ring& ring, int nvars, const Scalar& s) {
    return MultiPoly::constant(ring, nvars, s);
}

std::string degree_pair(int d1, int d2) {
    return "(d1,d2)=(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
}

}  // namespace

std::optional<TameGenerator> affine_reduction_search(const PolyMap& F) {
    const Ring& ring = F.ring();
    int d1 = F.component(0).total_degree();
    int d2 = F.component(1).total_degree();
    if (d1 != d2 || d1 <= 1)
        throw PreconditionError("affine_reduction_search expects equal degrees > 1");
    auto rho = proportionality_ratio(F.component(1).leading_form(),
                                     F.component(0).leading_form());
    if (!rho) return std::nullopt;
    MultiPoly one = const_poly(ring, 2, Scalar::one(ring));
    MultiPoly zero = MultiPoly::zero(ring, 2);
    Scalar u = rho->numerator();
    Scalar v = rho->denominator();
    if (v.is_unit()) {
        // Q <- Q - rho*P
        Scalar r = u * v.inverse();
        return LinearBlockGen{{0, 1}, {{one, zero}, {const_poly(ring, 2, -r), one}}};
    }
    if (u.is_unit()) {
        // P <- P - rho^{-1}*Q
        Scalar r = v * u.inverse();
        return LinearBlockGen{{0, 1}, {{one, const_poly(ring, 2, -r)}, {zero, one}}};
    }
    // General unimodular completion: bottom row (-u, v) kills the leading
    // form of the second component; the top row (s, w) comes from a Bezout
    // identity s*v + w*u = 1, giving determinant 1.
    Scalar g, s, w;
    Scalar::extended_gcd(v, u, g, s, w);
    if (!g.is_unit()) return std::nullopt;  // reduced fraction, so g is 1
    Scalar gi = g.inverse();
    s = s * gi;
    w = w * gi;
    return LinearBlockGen{
        {0, 1},
        {{const_poly(ring, 2, s), const_poly(ring, 2, w)},
         {const_poly(ring, 2, -u), const_poly(ring, 2, v)}}};
}

TameDecision tame2(const PolyMap& F_in) {
    if (F_in.nvars() != 2) throw PreconditionError("tame2: input must be a 2-variable map");
    const Ring& ring = F_in.ring();
    TameDecision dec;
    dec.word = TameWord(ring, 2);

    // Pre-scan: a zero or constant component cannot belong to an automorphism.
    for (int i = 0; i < 2; ++i) {
        if (F_in.component(i).total_degree() < 1) {
            dec.tame = false;
            dec.fail_step = 0;
            dec.detail = "degenerate input: component " + std::to_string(i + 1) +
                         " is constant, so F is not an automorphism";
            return dec;
        }
    }

    PolyMap F = F_in;
    std::vector<TameGenerator> ops;
    int prev_tdeg = F.component(0).total_degree() + F.component(1).total_degree();
    int watchdog = 4 * prev_tdeg + 16;

    auto apply_op = [&](int step, const TameGenerator& g, const std::string& note) {
        dec.trace.push_back(TraceStep{step, F, g, note});
        F = compose(generator_to_map(g, ring, 2), F);
        ops.push_back(g);
    };

    for (;;) {
        if (--watchdog < 0)
            throw InternalInvariantError("tame2: degree failed to decrease (termination witness broken)");
        int d1 = F.component(0).total_degree();
        int d2 = F.component(1).total_degree();
        if (d1 < 1 || d2 < 1) {
            dec.fail_step = 0;
            dec.detail = "component degenerated to a constant during reduction";
            dec.obstruction_d1 = d1;
            dec.obstruction_d2 = d2;
            return dec;
        }
        if (d1 == 1 && d2 == 1) break;  // step 7
        if (d1 == d2) {
            // step 4
            auto tau = affine_reduction_search(F);
            if (!tau) {
                dec.fail_step = 4;
                dec.obstruction_d1 = d1;
                dec.obstruction_d2 = d2;
                dec.detail = degree_pair(d1, d2) +
                             ", leading forms h1=" + F.component(0).leading_form().to_string() +
                             " and h2=" + F.component(1).leading_form().to_string() +
                             " are not proportional over the fraction field; no affine map "
                             "reduces tdeg";
                return dec;
            }
            apply_op(4, *tau, "affine reduction");
            int t = F.component(0).total_degree() + F.component(1).total_degree();
            if (t >= prev_tdeg)
                throw InternalInvariantError("tame2: affine step did not reduce tdeg");
            prev_tdeg = t;
            continue;
        }
        if (d2 < d1) {
            // step 5: swap
            MultiPoly one = const_poly(ring, 2, Scalar::one(ring));
            MultiPoly zero = MultiPoly::zero(ring, 2);
            apply_op(5, LinearBlockGen{{0, 1}, {{zero, one}, {one, zero}}}, "swap (Q,P)");
            std::swap(d1, d2);
        }
        // step 6: d1 < d2
        MultiPoly h1 = F.component(0).leading_form();
        MultiPoly h2 = F.component(1).leading_form();
        if (d2 % d1 != 0) {
            dec.fail_step = 6;
            dec.obstruction_d1 = d1;
            dec.obstruction_d2 = d2;
            dec.detail = degree_pair(d1, d2) + ", d1 does not divide d2; h1=" + h1.to_string() +
                         ", h2=" + h2.to_string();
            return dec;
        }
        unsigned long k = static_cast<unsigned long>(d2 / d1);
        auto c = proportionality_ratio(h2, h1.pow(k));
        if (!c) {
            dec.fail_step = 6;
            dec.obstruction_d1 = d1;
            dec.obstruction_d2 = d2;
            dec.detail = degree_pair(d1, d2) + ", h2 is not a constant multiple of h1^" +
                         std::to_string(k) + "; h1=" + h1.to_string() + ", h2=" + h2.to_string();
            return dec;
        }
        if (!c->is_integral()) {
            dec.fail_step = 6;
            dec.obstruction_d1 = d1;
            dec.obstruction_d2 = d2;
            dec.detail = degree_pair(d1, d2) + ", h1=" + h1.to_string() + ", h2=" +
                         h2.to_string() + ", required c=" + c->to_string() + " not in " +
                         ring.name();
            return dec;
        }
        Scalar cr = ring.is_field() ? *c : c->to_base_ring();
        MultiPoly sub(ring, 2);
        sub.add_term({static_cast<int>(k), 0}, -cr);
        apply_op(6, ElementaryGen{1, sub},
                 "subtract c*X^" + std::to_string(k) + " with c=" + cr.to_string());
        int t = F.component(0).total_degree() + F.component(1).total_degree();
        if (t >= prev_tdeg)
            throw InternalInvariantError("tame2: elementary step did not reduce tdeg");
        prev_tdeg = t;
    }

    // step 7: F is affine; decide by the Jacobian determinant.
    MultiPoly j = jacobian_det(F);
    if (!j.is_constant() || !j.constant_value().is_unit()) {
        dec.fail_step = 7;
        dec.detail = "affine reduct has det JF = " + j.to_string() + ", not a unit of " +
                     ring.name();
        return dec;
    }

    // Final affine part: F = M·x + v, emitted as Translation ∘ LinearBlock.
    std::vector<Scalar> v{F.component(0).constant_term(), F.component(1).constant_term()};
    std::vector<std::vector<MultiPoly>> m(2);
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) {
            Expo e(2, 0);
            e[jj] = 1;
            m[i].push_back(const_poly(ring, 2, F.component(i).coeff(e)));
        }
    TameWord word(ring, 2);
    for (const auto& g : ops) word.push_back(generator_inverse(g));
    bool v_zero = v[0].is_zero() && v[1].is_zero();
    if (!v_zero) word.push_back(TranslationGen{v});
    word.push_back(LinearBlockGen{{0, 1}, m});

    // Soundness is asserted on every return, not sampled.
    if (word.eval() != F_in)
        throw InternalInvariantError("tame2: emitted word does not recompose to the input");
    dec.tame = true;
    dec.word = std::move(word);
    return dec;
}

}  // namespace tame
