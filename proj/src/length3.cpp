#include "tame/length3.hpp"

#include <array>

#include "tame/errors.hpp"

namespace tame {

namespace {

constexpr int kMaxPeelResults = 64;
constexpr int kMaxPeelNodes = 4096;

std::optional<Scalar> ratio_of_forms(const MultiPoly& g, const MultiPoly& f) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    const auto& lead = *f.terms().rbegin();
    Scalar c = g.coeff(lead.first);
    if (c.is_zero()) return std::nullopt;
    c = c.exact_div(lead.second);
    if (g != f.mul_scalar(c)) return std::nullopt;
    return c;
}

struct RawPeel {
    std::vector<PeelFactor> outer_first;
    std::array<Scalar, 4> m;  // final linear part [[m0,m1],[m2,m3]]
};

/// Degree reduction over the field K with branching at degree ties.
struct Reducer {
    const Ring& ring;  // field descriptor
    std::vector<RawPeel> results;
    int nodes = 0;

    void run(PolyMap G, std::vector<PeelFactor> acc) {
        if (++nodes > kMaxPeelNodes || static_cast<int>(results.size()) >= kMaxPeelResults)
            return;
        for (;;) {
            const MultiPoly& P = G.component(0);
            const MultiPoly& Q = G.component(1);
            int d1 = P.total_degree(), d2 = Q.total_degree();
            if (d1 < 1 || d2 < 1) return;  // dead: not an automorphism
            if (d1 == 1 && d2 == 1) {
                RawPeel r;
                r.outer_first = std::move(acc);
                Expo ex(2, 0), ey(2, 0);
                ex[0] = 1;
                ey[1] = 1;
                r.m = {P.coeff(ex), P.coeff(ey), Q.coeff(ex), Q.coeff(ey)};
                Scalar det = r.m[0] * r.m[3] - r.m[1] * r.m[2];
                if (det.is_zero()) return;  // dead: singular linear part
                results.push_back(std::move(r));
                return;
            }
            if (d1 == d2) {
                auto c = ratio_of_forms(Q.leading_form(), P.leading_form());
                if (!c) return;  // dead: independent leading forms of equal degree
                // Branch: the tie is a linear row operation and can belong
                // either to a Y-type factor or to an X-type factor.
                {
                    // Y-direction: Q <- Q - c P, factor (X, Y + c X)
                    MultiPoly cf(ring, 2);
                    cf.add_term({1, 0}, *c);
                    auto acc2 = acc;
                    acc2.push_back(PeelFactor{false, cf});
                    PolyMap G2(ring, {P, Q - P.mul_scalar(*c)});
                    run(std::move(G2), std::move(acc2));
                }
                {
                    // X-direction: P <- P - c^{-1} Q, factor (X + c^{-1} Y, Y)
                    Scalar ci = c->inverse();
                    MultiPoly cf(ring, 2);
                    cf.add_term({0, 1}, ci);
                    acc.push_back(PeelFactor{true, cf});
                    G = PolyMap(ring, {P - Q.mul_scalar(ci), Q});
                    continue;  // tail-recurse on the X branch
                }
            }
            if (d1 < d2) {
                if (d2 % d1 != 0) return;
                unsigned long k = static_cast<unsigned long>(d2 / d1);
                auto c = ratio_of_forms(Q.leading_form(), P.leading_form().pow(k));
                if (!c) return;
                MultiPoly cf(ring, 2);
                cf.add_term({static_cast<int>(k), 0}, *c);
                acc.push_back(PeelFactor{false, cf});
                G = PolyMap(ring, {P, Q - P.pow(k).mul_scalar(*c)});
            } else {
                if (d1 % d2 != 0) return;
                unsigned long k = static_cast<unsigned long>(d1 / d2);
                auto c = ratio_of_forms(P.leading_form(), Q.leading_form().pow(k));
                if (!c) return;
                MultiPoly cf(ring, 2);
                cf.add_term({0, static_cast<int>(k)}, *c);
                acc.push_back(PeelFactor{true, cf});
                G = PolyMap(ring, {P - Q.pow(k).mul_scalar(*c), Q});
            }
        }
    }
};

PeelFactor xshear(const Ring& ring, const Scalar& c) {
    MultiPoly f(ring, 2);
    f.add_term({0, 1}, c);
    return PeelFactor{true, f};
}

PeelFactor yshear(const Ring& ring, const Scalar& c) {
    MultiPoly f(ring, 2);
    f.add_term({1, 0}, c);
    return PeelFactor{false, f};
}

/// Turn the final linear part into shear factors and a diagonal: the list
/// gains at most three linear shears with M = l1∘...∘lk∘diag(alpha,delta).
void gauss_linear(const Ring& ring, std::array<Scalar, 4> m, std::vector<PeelFactor>& out,
                  Scalar& alpha, Scalar& delta) {
    if (m[0].is_zero()) {
        // row1 += row2 (E12(1)); record the inverse shear E12(-1)... the
        // recorded factor is E12(1)^{-1} composed on the left of the new M.
        out.push_back(xshear(ring, -Scalar::one(ring)));
        m = {m[0] + m[2], m[1] + m[3], m[2], m[3]};
    }
    if (!m[2].is_zero()) {
        Scalar q = m[2].exact_div(m[0]);
        out.push_back(yshear(ring, q));
        m = {m[0], m[1], Scalar::zero(ring), m[3] - q * m[1]};
    }
    if (!m[1].is_zero()) {
        Scalar q = m[1].exact_div(m[3]);
        out.push_back(xshear(ring, q));
        m = {m[0], Scalar::zero(ring), m[2], m[3]};
    }
    alpha = m[0];
    delta = m[3];
}

/// diag(u, u^{-1}) = E12(u) E21(-1/u) E12(u-1) E21(1) E12(-1), outermost first.
void whitehead(const Ring& ring, const Scalar& u, std::vector<PeelFactor>& out) {
    Scalar one = Scalar::one(ring);
    out.push_back(xshear(ring, u));
    out.push_back(yshear(ring, -u.inverse()));
    out.push_back(xshear(ring, u - one));
    out.push_back(yshear(ring, one));
    out.push_back(xshear(ring, -one));
}

void merge_factors(std::vector<PeelFactor>& fs) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<PeelFactor> out;
        for (auto& f : fs) {
            if (f.f.is_zero()) {
                changed = true;
                continue;
            }
            if (!out.empty() && out.back().x_shear == f.x_shear) {
                out.back().f = out.back().f + f.f;
                changed = true;
                continue;
            }
            out.push_back(std::move(f));
        }
        fs = std::move(out);
    }
}

PolyMap factor_to_map(const Ring& ring, const PeelFactor& f) {
    std::vector<MultiPoly> comps{MultiPoly::variable(ring, 2, 0),
                                 MultiPoly::variable(ring, 2, 1)};
    comps[f.x_shear ? 0 : 1] = comps[f.x_shear ? 0 : 1] + f.f;
    return PolyMap(ring, std::move(comps));
}

PolyMap peel_to_map(const Ring& ring, const PeelResult& r) {
    std::vector<MultiPoly> comps{MultiPoly::variable(ring, 2, 0),
                                 MultiPoly::variable(ring, 2, 1)};
    comps[0] = comps[0].mul_scalar(r.a);
    PolyMap acc(ring, std::move(comps));
    // factors innermost first: compose left to right onto the diagonal
    for (auto it = r.factors.rbegin(); it != r.factors.rend(); ++it)
        acc = compose(acc, factor_to_map(ring, *it));
    std::vector<MultiPoly> tr{
        MultiPoly::variable(ring, 2, 0) + MultiPoly::constant(ring, 2, r.translation[0]),
        MultiPoly::variable(ring, 2, 1) + MultiPoly::constant(ring, 2, r.translation[1])};
    return compose(PolyMap(ring, std::move(tr)), acc);
}

}  // namespace

PeelResult peel_over_K(const PolyMap& F) {
    if (F.nvars() != 2) throw PreconditionError("peel_over_K: input must be a 2-variable map");
    Ring K = F.ring().fraction();
    PolyMap FK = (F.ring() == K) ? F : F.to_fraction_field();

    PeelResult best;
    best.translation = {FK.component(0).constant_term(), FK.component(1).constant_term()};
    PolyMap G(K, {FK.component(0) - MultiPoly::constant(K, 2, best.translation[0]),
                  FK.component(1) - MultiPoly::constant(K, 2, best.translation[1])});

    Reducer red{K, {}, 0};
    red.run(G, {});
    if (red.results.empty())
        throw NotAutomorphismError("peel stalls: " + F.to_string() +
                                   " is not an automorphism over " + K.name());

    bool have = false;
    for (auto& raw : red.results) {
        std::vector<PeelFactor> fs = std::move(raw.outer_first);
        Scalar alpha(K), delta(K);
        gauss_linear(K, raw.m, fs, alpha, delta);
        // Push diag(alpha, delta) through every shear to the outermost slot:
        // Yshear f(X) -> delta^{-1} f(alpha X), Xshear g(Y) -> alpha^{-1} g(delta Y).
        Scalar ai = alpha.inverse(), di = delta.inverse();
        for (auto& f : fs) {
            if (f.x_shear)
                f.f = f.f.substitute_one(1, MultiPoly::variable(K, 2, 1).mul_scalar(delta))
                          .mul_scalar(ai);
            else
                f.f = f.f.substitute_one(0, MultiPoly::variable(K, 2, 0).mul_scalar(alpha))
                          .mul_scalar(di);
        }
        Scalar a = alpha * delta;
        if (!delta.is_one()) {
            std::vector<PeelFactor> head;
            whitehead(K, di, head);
            fs.insert(fs.begin(), head.begin(), head.end());
        }
        merge_factors(fs);
        std::reverse(fs.begin(), fs.end());  // store innermost first
        if (!have || fs.size() < best.factors.size()) {
            best.a = a;
            best.factors = std::move(fs);
            have = true;
        }
    }
    if (peel_to_map(K, best) != FK)
        throw InternalInvariantError("peel reconstruction mismatch");
    return best;
}

int length(const PolyMap& F) {
    PeelResult r = peel_over_K(F);
    if (!r.translation[0].is_zero() || !r.translation[1].is_zero())
        throw PreconditionError("length: map is not origin-preserving");
    if (!F.ring().is_field()) {
        if (!r.a.is_integral() || !r.a.to_base_ring().is_unit())
            throw NotAutomorphismError("length: diagonal scale " + r.a.to_string() +
                                       " is not a unit of " + F.ring().name());
    }
    return static_cast<int>(r.factors.size());
}

MultiPoly apply_univariate(const MultiPoly& p, int var, const MultiPoly& arg) {
    return p.substitute_one(var, arg);
}

PolyMap reconstruct_length3(const Length3Data& data) {
    const Ring& R = data.ring;
    int n = data.nvars;
    MultiPoly X = MultiPoly::variable(R, n, data.x_index);
    MultiPoly Y = MultiPoly::variable(R, n, data.y_index);
    MultiPoly bY = Y.mul_scalar(data.b);
    MultiPoly A1x = data.A1;  // already a polynomial in x_index
    MultiPoly Dterm = apply_univariate(data.D, data.y_index, bY + A1x);
    MultiPoly first = X + Dterm;
    MultiPoly A2arg = apply_univariate(data.A2, data.x_index, X + Dterm);
    MultiPoly second = Y + (A1x + A2arg).exact_div(MultiPoly::constant(R, n, data.b));
    std::vector<MultiPoly> comps;
    for (int i = 0; i < n; ++i) comps.push_back(MultiPoly::variable(R, n, i));
    comps[data.x_index] = first;
    comps[data.y_index] = second;
    return PolyMap(R, std::move(comps));
}

namespace {

MultiPoly swap_xy(const MultiPoly& p) {
    MultiPoly r(p.ring(), p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Expo e2 = e;
        std::swap(e2[0], e2[1]);
        r.add_term(e2, c);
    }
    return r;
}

}  // namespace

Length3Data extract_l3(const PolyMap& F) {
    if (F.nvars() != 2) throw PreconditionError("extract_l3: input must be a 2-variable map");
    if (!F.ring().is_ufd_mode())
        throw PreconditionError("extract_l3: coefficient descriptor must be a UFD, got " +
                                F.ring().name());
    PeelResult peel = peel_over_K(F);
    if (!peel.translation[0].is_zero() || !peel.translation[1].is_zero())
        throw PreconditionError("extract_l3: map is not origin-preserving");
    if (!peel.a.is_one())
        throw PreconditionError("extract_l3: nontrivial diagonal D_{a,1} with a = " +
                                peel.a.to_string() + "; strip it first");
    if (peel.factors.size() != 3)
        throw PreconditionError("extract_l3: length is " +
                                std::to_string(peel.factors.size()) + ", not 3");

    Length3Data data;
    data.ring = F.ring();
    data.nvars = 2;
    data.x_index = 0;
    data.y_index = 1;
    data.swapped = peel.factors[0].x_shear;

    // Normalize to the (Y-shear, X-shear, Y-shear) orientation; the swapped
    // case describes swap∘F∘swap, whose factors are the variable-swapped,
    // type-flipped ones.
    MultiPoly f1 = peel.factors[0].f;
    MultiPoly g = peel.factors[1].f;
    MultiPoly f2 = peel.factors[2].f;
    if (data.swapped) {
        f1 = swap_xy(f1);
        g = swap_xy(g);
        f2 = swap_xy(f2);
    }

    auto [A1, b1] = f1.clear_denominators();
    auto [A2, b2] = f2.clear_denominators();
    if (b1 != b2)
        throw NotAutomorphismError(
            "extract_l3: shear denominators " + b1.to_string() + " and " + b2.to_string() +
            " are not associates, so F is not integral over " + F.ring().name());
    data.b = b1;
    data.A1 = A1;
    data.A2 = A2;

    // Solve g(Y) = D(bY) coefficient-wise: D_j = g_j / b^j must lie in R.
    MultiPoly D(data.ring, 2);
    Scalar bK = data.b.to_fraction_field();
    for (const auto& [e, c] : g.terms()) {
        int j = e[1];
        Scalar Dj = c;
        if (!data.ring.is_field()) Dj = c.exact_div(bK.pow(static_cast<unsigned long>(j)));
        Scalar Djr;
        try {
            Djr = data.ring.is_field() && data.ring.kind == RingKind::Rationals
                      ? Dj
                      : Dj.to_base_ring();
        } catch (const InexactDivisionError&) {
            throw NotAutomorphismError("extract_l3: middle factor is not of the form D(bY): "
                                       "coefficient " + c.to_string() + " not divisible by " +
                                       data.b.to_string() + "^" + std::to_string(j));
        }
        Expo ey(2, 0);
        ey[1] = j;
        D.add_term(ey, Djr);
    }
    data.D = D;

    // Lemma 5 invariants.
    if (!Scalar::gcd(data.A1.content(), data.b).is_unit() ||
        !Scalar::gcd(data.A2.content(), data.b).is_unit())
        throw InternalInvariantError("extract_l3: content of A_i shares a factor with b");
    PolyMap target = data.swapped ? PolyMap(F.ring(), {swap_xy(F.component(1)),
                                                       swap_xy(F.component(0))})
                                  : F;
    if (reconstruct_length3(data) != target)
        throw InternalInvariantError("extract_l3: Eq-(7) reconstruction mismatch");
    return data;
}

namespace {

bool content_divisible(const MultiPoly& p, const Scalar& q) {
    if (p.is_zero()) return true;
    return p.content().divisible_by(q);
}

/// D'(0) as a stage-ring element: derivative in `var`, then var := 0.
MultiPoly derivative_at_zero(const MultiPoly& p, int var) {
    return p.derivative(var).eval_at_zero(var);
}

}  // namespace

Lemma6Report verify_lemma6(const Length3Data& data) {
    Lemma6Report rep;
    const Ring& R = data.ring;
    int n = data.nvars;
    MultiPoly X = MultiPoly::variable(R, n, data.x_index);
    MultiPoly Y = MultiPoly::variable(R, n, data.y_index);
    MultiPoly bconst = MultiPoly::constant(R, n, data.b);

    for (const auto& [p, mult] : Scalar::factor_irreducibles(data.b)) {
        Lemma6FactorReport fr;
        fr.p = p;
        fr.divides_D = content_divisible(data.D, p);
        MultiPoly D_lin = data.D - derivative_at_zero(data.D, data.y_index) * Y;
        MultiPoly A1_lin = data.A1 - derivative_at_zero(data.A1, data.x_index) * X;
        MultiPoly A2_lin = data.A2 - derivative_at_zero(data.A2, data.x_index) * X;
        fr.linear_branch = content_divisible(D_lin, p) && content_divisible(A1_lin, p) &&
                           content_divisible(A2_lin, p);
        if (!fr.divides_D && !fr.linear_branch)
            throw NotAutomorphismError("Lemma 6 dichotomy fails at p = " + p.to_string());
        rep.factors.push_back(std::move(fr));
    }

    MultiPoly bY = Y.mul_scalar(data.b);
    try {
        MultiPoly inner = apply_univariate(data.D, data.y_index, bY + data.A1);
        MultiPoly e36 = data.A1 + apply_univariate(data.A2, data.x_index, X + inner);
        (void)e36.exact_div(bconst);
        rep.integrality_36 = true;
    } catch (const InexactDivisionError&) {
        throw NotAutomorphismError("Lemma 6: (A1 + A2(X + D(bY + A1)))/b is not integral");
    }
    try {
        MultiPoly inner = apply_univariate(data.D, data.y_index, bY - data.A2);
        MultiPoly e37 = data.A2 + apply_univariate(data.A1, data.x_index, X - inner);
        (void)e37.exact_div(bconst);
        rep.integrality_37 = true;
    } catch (const InexactDivisionError&) {
        throw NotAutomorphismError("Lemma 6: (A2 + A1(X - D(bY - A2)))/b is not integral");
    }
    return rep;
}

ConjugateData verify_lemma7(const PolyMap& F, const MultiPoly& A, const Scalar& a) {
    if (F.nvars() != 2) throw PreconditionError("verify_lemma7: 2-variable maps only");
    const Ring& R = F.ring();
    Ring K = R.fraction();
    if (a.is_zero()) throw PreconditionError("verify_lemma7: a must be nonzero");

    // F1 = (X, Y + A(X)/a) over K; G = F1 ∘ F ∘ F1^{-1} must be (X + g(Y), Y).
    MultiPoly shear = A.to_fraction_field().mul_scalar(a.to_fraction_field().inverse());
    PolyMap F1(K, {MultiPoly::variable(K, 2, 0), MultiPoly::variable(K, 2, 1) + shear});
    PolyMap F1inv(K, {MultiPoly::variable(K, 2, 0), MultiPoly::variable(K, 2, 1) - shear});
    PolyMap G = compose(F1, compose(F.to_fraction_field(), F1inv));
    MultiPoly g = G.component(0) - MultiPoly::variable(K, 2, 0);
    if (G.component(1) != MultiPoly::variable(K, 2, 1) || !g.independent_of(0))
        throw PreconditionError("verify_lemma7: F is not F1^{-1} ∘ (X+g(Y),Y) ∘ F1 for the "
                                "given shear data");

    // g(Y) = D(aY): D_j = g_j / a^j in R, then a | D.
    ConjugateData out;
    out.a = a;
    out.A = A;
    MultiPoly D(R, 2);
    Scalar aK = a.to_fraction_field();
    for (const auto& [e, c] : g.terms()) {
        int j = e[1];
        Scalar Dj;
        try {
            Dj = c.exact_div(aK.pow(static_cast<unsigned long>(j))).to_base_ring();
        } catch (const InexactDivisionError&) {
            throw NotAutomorphismError("Lemma 7: g is not of the form D(aY)");
        }
        Expo ey(2, 0);
        ey[1] = j;
        D.add_term(ey, Dj);
    }
    if (!content_divisible(D, a))
        throw NotAutomorphismError("Lemma 7: a = " + a.to_string() +
                                   " does not divide D = " + D.to_string());
    out.D = D;
    return out;
}

P1P2 compute_p1_p2(const Length3Data& data) {
    const Ring& R = data.ring;
    int n = data.nvars;
    MultiPoly X = MultiPoly::variable(R, n, data.x_index);
    MultiPoly Y = MultiPoly::variable(R, n, data.y_index);

    P1P2 out;
    out.a = MultiPoly::constant(R, n, 1) +
            derivative_at_zero(data.D, data.y_index) * derivative_at_zero(data.A1, data.x_index);
    out.b_tilde = Scalar::radical(data.b);

    MultiPoly bY = Y.mul_scalar(data.b);
    MultiPoly Dterm = apply_univariate(data.D, data.y_index, bY + data.A1);
    MultiPoly btc = MultiPoly::constant(R, n, out.b_tilde);
    out.P1 = (Dterm - (out.a - MultiPoly::constant(R, n, 1)) * X).exact_div(btc);
    MultiPoly A2arg = apply_univariate(data.A2, data.x_index, X + Dterm);
    out.P2 = (data.A1 + A2arg).exact_div(MultiPoly::constant(R, n, data.b));

    // Verify the rewriting F = (aX + b~ P1, Y + P2) against Eq (7).
    if (out.a * X + btc * out.P1 != X + Dterm)
        throw InternalInvariantError("compute_p1_p2: first-coordinate identity failed");
    return out;
}

}  // namespace tame
