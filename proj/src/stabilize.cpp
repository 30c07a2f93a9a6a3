#include "tame/stabilize.hpp"

#include "tame/errors.hpp"

namespace tame {

namespace {

Scalar mod_reduce(const Scalar& x, const Scalar& p) { return x.divmod(p).second; }

/// Chinese remainder: x ≡ r1 (m1), x ≡ r2 (m2) for coprime moduli.
Scalar crtster(const Scalar& r1, const Scalar& m1, const Scalar& r2, const Scalar& m2) {
    Scalar g, s, t;
    Scalar::extended_gcd(m1, m2, g, s, t);
    if (!g.is_unit())
        throw InternalInvariantError("CRT over non-coprime moduli");
    Scalar k = mod_reduce((r2 - r1) * s * g.inverse(), m2);
    return mod_reduce(r1 + m1 * k, m1 * m2);
}

MultiPoly const_poly(const Ring& ring, int n, const Scalar& s) {
    return MultiPoly::constant(ring, n, s);
}

/// Reduce every coefficient of a stage-ring element mod p.
MultiPoly poly_mod(const MultiPoly& a, const Scalar& p) {
    MultiPoly r(a.ring(), a.nvars());
    for (const auto& [e, c] : a.terms()) r.add_term(e, mod_reduce(c, p));
    return r;
}

}  // namespace

UnimodularCompletion bezout_over_stage(const MultiPoly& a, const Scalar& b_tilde) {
    const Ring& R = a.ring();
    int n = a.nvars();
    if (b_tilde != Scalar::radical(b_tilde))
        throw PreconditionError("bezout_over_stage: b~ must be squarefree");
    auto factors = Scalar::factor_irreducibles(b_tilde);
    Scalar d = Scalar::zero(R);
    Scalar modulus = Scalar::one(R);
    for (const auto& [p, mult] : factors) {
        if (mult != 1) throw InternalInvariantError("squarefree b~ with repeated factor");
        MultiPoly abar = poly_mod(a, p);
        if (!abar.is_constant())
            throw PreconditionError("bezout_over_stage: a mod " + p.to_string() +
                                    " = " + abar.to_string() +
                                    " is not constant; stage data violates the Lemma 6 "
                                    "structure");
        Scalar cp = abar.constant_term();
        if (cp.is_zero())
            throw PreconditionError("bezout_over_stage: a vanishes mod " + p.to_string() +
                                    "; the row is not unimodular");
        // invert cp in the field R/p
        Scalar g, u, v;
        Scalar::extended_gcd(cp, p, g, u, v);
        if (!g.is_unit())
            throw PreconditionError("bezout_over_stage: a shares the factor " + p.to_string() +
                                    " with b~");
        Scalar inv = mod_reduce(u * g.inverse(), p);
        d = modulus.is_one() ? inv : crtster(d, modulus, inv, p);
        modulus = modulus * p;
    }
    d = mod_reduce(d, b_tilde);
    UnimodularCompletion out;
    out.d = d;
    MultiPoly one = const_poly(R, n, Scalar::one(R));
    out.c = (one - a.mul_scalar(d)).exact_div(const_poly(R, n, b_tilde));
    if (a.mul_scalar(out.d) + out.c.mul_scalar(b_tilde) != one)
        throw InternalInvariantError("bezout_over_stage: a d + b~ c != 1");
    return out;
}

UnimodularCompletion scalar_completion(const Scalar& a0, const Scalar& b_tilde,
                                               const Ring& R, int n) {
    Scalar g, u, v;
    Scalar::extended_gcd(a0, b_tilde, g, u, v);
    if (!g.is_unit())
        throw PreconditionError("unimodular_complete: gcd(a, b~) = " + g.to_string() +
                                " is not a unit; the row is not unimodular");
    Scalar gi = g.inverse();
    UnimodularCompletion out;
    out.d = u * gi;
    out.c = const_poly(R, n, v * gi);
    return out;
}

UnimodularCompletion unimodular_complete(const MultiPoly& a, const Scalar& b_tilde) {
    if (a.is_zero()) throw PreconditionError("unimodular_complete: a = 0");
    if (a.is_constant())
        return scalar_completion(a.constant_value(), b_tilde, a.ring(), a.nvars());
    return bezout_over_stage(a, b_tilde);
}

// ---------------------------------------------------------------------------

namespace {

ElementaryGen transvection(const Ring& ring, int n, int target, int source, const MultiPoly& c) {
    return ElementaryGen{target, c.extended(n) * MultiPoly::variable(ring, n, source)};
}

/// diag(u, u^{-1}) on (ci, cj) as five transvections, outermost first:
/// E_ij(u) E_ji(-1/u) E_ij(u-1) E_ji(1) E_ij(-1).
void whitehead_pair(const Ring& ring, int n, int ci, int cj, const Scalar& u,
                    std::vector<TameGenerator>& out) {
    auto xs = [&](const Scalar& s) {
        return transvection(ring, n, ci, cj, const_poly(ring, n, s));
    };
    auto ys = [&](const Scalar& s) {
        return transvection(ring, n, cj, ci, const_poly(ring, n, s));
    };
    Scalar one = Scalar::one(ring);
    out.push_back(xs(u));
    out.push_back(ys(-u.inverse()));
    out.push_back(xs(u - one));
    out.push_back(ys(one));
    out.push_back(xs(-one));
}

bool is_zero_entry(const MultiPoly& p) { return p.is_zero(); }

/// Fast path for the stage shape [[a,0,-b~],[0,1,0],[c,0,d]] with d or a a
/// unit constant; works with stage-ring (polynomial) entries.
std::optional<std::vector<TameGenerator>> decompose_stage_shape(const LinearBlockGen& b,
                                                                const Ring& ring, int nvars) {
    if (b.coords.size() != 3) return std::nullopt;
    const auto& m = b.entries;
    if (!is_zero_entry(m[0][1]) || !is_zero_entry(m[1][0]) || !is_zero_entry(m[1][2]) ||
        !is_zero_entry(m[2][1]) || m[1][1] != const_poly(ring, m[1][1].nvars(), Scalar::one(ring)))
        return std::nullopt;
    MultiPoly a = m[0][0], nb = m[0][2], c = m[2][0], d = m[2][2];
    int ci = b.coords[0], ck = b.coords[2];
    std::vector<TameGenerator> word;
    if (d.is_constant() && !d.is_zero() && d.constant_value().is_unit()) {
        Scalar dv = d.constant_value();
        // E1 = E_02(b~/d): row0 += (b~/d) row2 gives (1/d, 0, 0);
        // E2 = E_20(-c d): row2 += (-c d) row0 gives (0, 0, d);
        // so A = E1^{-1} E2^{-1} diag(1/d, 1, d).
        MultiPoly f1 = -nb.mul_scalar(dv.inverse());  // b~/d
        MultiPoly f2 = c.mul_scalar(dv);
        if (!f1.is_zero()) word.push_back(transvection(ring, nvars, ci, ck, -f1));
        if (!f2.is_zero()) word.push_back(transvection(ring, nvars, ck, ci, f2));
        if (!dv.is_one()) whitehead_pair(ring, nvars, ci, ck, dv.inverse(), word);
        return word;
    }
    if (a.is_constant() && !a.is_zero() && a.constant_value().is_unit()) {
        Scalar av = a.constant_value();
        // E1 = E_20(-c/a): row2 += (-c/a) row0 gives (0, 0, 1/a);
        // E2 = E_02(b~ a): row0 += (b~ a) row2 gives (a, 0, 0);
        // so A = E1^{-1} E2^{-1} diag(a, 1, 1/a).
        MultiPoly f1 = c.mul_scalar(av.inverse());    // c/a
        MultiPoly f2 = -nb.mul_scalar(av);            // b~ a
        if (!f1.is_zero()) word.push_back(transvection(ring, nvars, ck, ci, f1));
        if (!f2.is_zero()) word.push_back(transvection(ring, nvars, ci, ck, -f2));
        if (!av.is_one()) whitehead_pair(ring, nvars, ci, ck, av, word);
        return word;
    }
    return std::nullopt;
}

/// Full Euclidean row reduction for constant matrices over Z / Q[t] / Q.
std::optional<std::vector<TameGenerator>> decompose_scalar_matrix(const LinearBlockGen& blk,
                                                                  const Ring& ring, int nvars) {
    size_t k = blk.coords.size();
    std::vector<std::vector<Scalar>> m(k, std::vector<Scalar>(k, Scalar::zero(ring)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (!blk.entries[i][j].is_constant()) return std::nullopt;
            m[i][j] = blk.entries[i][j].constant_term();
        }
    if (!ring.is_euclidean()) return std::nullopt;

    // Record ops applied on the left; block = inv(op1) ∘ inv(op2) ∘ ...
    std::vector<TameGenerator> word;
    auto row_add = [&](size_t dst, size_t src, const Scalar& q) {
        // row_dst += q * row_src
        if (q.is_zero()) return;
        for (size_t j = 0; j < k; ++j) m[dst][j] = m[dst][j] + q * m[src][j];
        word.push_back(transvection(ring, nvars, blk.coords[dst], blk.coords[src],
                                    const_poly(ring, nvars, -q)));
    };
    auto div_step = [&](const Scalar& x, const Scalar& y) {
        if (ring.kind == RingKind::Rationals) return x.exact_div(y);
        return x.divmod(y).first;
    };

    for (size_t col = 0; col < k; ++col) {
        // gcd-chase the entries below the pivot into the pivot slot
        for (;;) {
            size_t nz = col;
            bool any = false;
            for (size_t i = col + 1; i < k; ++i)
                if (!m[i][col].is_zero()) {
                    nz = i;
                    any = true;
                    break;
                }
            if (!any) break;
            if (m[col][col].is_zero()) {
                row_add(col, nz, Scalar::one(ring));
                continue;
            }
            Scalar q = div_step(m[nz][col], m[col][col]);
            row_add(nz, col, -q);
            if (!m[nz][col].is_zero()) {
                // continue the Euclid chase with roles swapped
                Scalar q2 = div_step(m[col][col], m[nz][col]);
                row_add(col, nz, -q2);
            }
        }
        if (m[col][col].is_zero()) return std::nullopt;
    }
    // Upper triangular with unit diagonal (det is a unit in a domain).
    for (size_t j = 0; j < k; ++j)
        if (!m[j][j].is_unit()) return std::nullopt;
    Scalar det = Scalar::one(ring);
    for (size_t j = 0; j < k; ++j) det = det * m[j][j];
    if (!det.is_one()) return std::nullopt;  // only det-1 blocks decompose here
    for (size_t j = k; j-- > 0;) {
        for (size_t i = 0; i < j; ++i) {
            if (m[i][j].is_zero()) continue;
            row_add(i, j, -(m[i][j] * m[j][j].inverse()));
        }
    }
    // The recorded inverses compose to block ∘ diag^{-1}; now append a word
    // for the remaining diag(u_0,...,u_{k-1}) of determinant 1.
    std::vector<TameGenerator> out;
    out.reserve(word.size() + 5 * k);
    for (const auto& g : word) out.push_back(g);
    Scalar acc = Scalar::one(ring);
    for (size_t i = 0; i + 1 < k; ++i) {
        acc = acc * m[i][i];
        if (!acc.is_one()) whitehead_pair(ring, nvars, blk.coords[i], blk.coords[i + 1], acc, out);
    }
    return out;
}

PolyMap word_to_map(const std::vector<TameGenerator>& gens, const Ring& ring, int nvars) {
    PolyMap acc = PolyMap::identity(ring, nvars);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        acc = compose(generator_to_map(*it, ring, nvars), acc);
    return acc;
}

}  // namespace

std::optional<std::vector<TameGenerator>> decompose_linear_block(const LinearBlockGen& block,
                                                                 const Ring& ring, int nvars) {
    auto check = [&](std::optional<std::vector<TameGenerator>> w)
        -> std::optional<std::vector<TameGenerator>> {
        if (!w) return std::nullopt;
        if (word_to_map(*w, ring, nvars) != generator_to_map(block, ring, nvars))
            throw InternalInvariantError("decompose_linear_block: transvection word does not "
                                         "recompose to the block");
        return w;
    };
    if (auto w = decompose_stage_shape(block, ring, nvars)) return check(std::move(w));
    if (auto w = decompose_scalar_matrix(block, ring, nvars)) return check(std::move(w));
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

/// The right-hand side of Eq (14): (a x - b~ w, y + P2, w + P1) in ambient n.
PolyMap eq14_rhs(const Length3Data& d, int fresh, const MultiPoly& a, const Scalar& b_tilde,
                 const MultiPoly& P1, const MultiPoly& P2) {
    const Ring& R = d.ring;
    int n = d.nvars + 1;
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) comps.push_back(MultiPoly::variable(R, n, i));
    MultiPoly xv = MultiPoly::variable(R, n, d.x_index);
    MultiPoly wv = MultiPoly::variable(R, n, fresh);
    comps[d.x_index] = a.extended(n) * xv - wv.mul_scalar(b_tilde);
    comps[d.y_index] = comps[d.y_index] + P2.extended(n);
    comps[fresh] = wv + P1.extended(n);
    return PolyMap(R, std::move(comps));
}

}  // namespace

StageRecord make_stage(const Length3Data& data) {
    const Ring& R = data.ring;
    if (data.b.is_unit()) throw PreconditionError("make_stage: b is already a unit");
    StageRecord rec;
    rec.before = data;

    P1P2 pp = compute_p1_p2(data);
    rec.b_tilde = pp.b_tilde;
    rec.a = pp.a;
    UnimodularCompletion uc = unimodular_complete(pp.a, pp.b_tilde);
    rec.c = uc.c;
    rec.d = uc.d;

    int n = data.nvars + 1;
    int fresh = data.nvars;
    int xi = data.x_index, yi = data.y_index;
    MultiPoly one = const_poly(R, n, Scalar::one(R));

    // Stage moves.
    rec.tau = ElementaryGen{fresh, pp.P1.extended(n)};
    rec.gamma = ElementaryGen{xi, -MultiPoly::variable(R, n, fresh).mul_scalar(rec.b_tilde)};
    MultiPoly dx = MultiPoly::variable(R, data.nvars, xi).mul_scalar(rec.d);
    MultiPoly p2_at = pp.P2.substitute_one(xi, dx).eval_at_zero(yi);
    rec.eps2 = ElementaryGen{yi, -p2_at.extended(n)};
    MultiPoly A1_dx = apply_univariate(data.A1, xi, dx);
    MultiPoly D_A1dx = apply_univariate(data.D, yi, A1_dx);
    MultiPoly r_num = D_A1dx + MultiPoly::variable(R, data.nvars, xi)
                                   .mul_scalar(rec.d - Scalar::one(R));
    MultiPoly r = r_num.exact_div(const_poly(R, data.nvars, rec.b_tilde));
    rec.eps3 = ElementaryGen{fresh, -r.extended(n)};

    // The unimodular block on (x, y, w).
    MultiPoly zero = MultiPoly::zero(R, n);
    rec.A = LinearBlockGen{{xi, yi, fresh},
                           {{pp.a.extended(n), zero, -const_poly(R, n, rec.b_tilde)},
                            {zero, one, zero},
                            {rec.c.extended(n), zero, const_poly(R, n, rec.d)}}};
    validate_generator(rec.A, R, n);
    // A^{-1} must match the closed form [[d,0,b~],[0,1,0],[-c,0,a]].
    {
        TameGenerator inv = generator_inverse(rec.A);
        const auto& bi = std::get<LinearBlockGen>(inv);
        LinearBlockGen expect{{xi, yi, fresh},
                              {{const_poly(R, n, rec.d), zero, const_poly(R, n, rec.b_tilde)},
                               {zero, one, zero},
                               {-rec.c.extended(n), zero, pp.a.extended(n)}}};
        if (bi.entries != expect.entries)
            throw InternalInvariantError("stage: A^{-1} does not match the closed form");
    }

    // Exact composition identities.
    PolyMap F_cur = reconstruct_length3(data);
    PolyMap F_ext = extend(F_cur, 1);
    PolyMap tau_m = generator_to_map(rec.tau, R, n);
    PolyMap gamma_m = generator_to_map(rec.gamma, R, n);
    PolyMap gFt = compose(gamma_m, compose(F_ext, tau_m));
    if (gFt != eq14_rhs(data, fresh, pp.a, rec.b_tilde, pp.P1, pp.P2))
        throw InternalInvariantError("stage: Eq (14) identity failed");

    PolyMap Ainv_m = generator_to_map(generator_inverse(rec.A), R, n);
    PolyMap normalized = compose(generator_to_map(rec.eps3, R, n),
                                 compose(generator_to_map(rec.eps2, R, n),
                                         compose(gFt, Ainv_m)));

    // Next-stage data over the stage ring R[x]: the fresh variable is the new
    // distinguished coordinate, y stays.
    Length3Data next;
    next.ring = R;
    next.nvars = n;
    next.x_index = fresh;
    next.y_index = yi;
    next.b = data.b.exact_div(rec.b_tilde);
    MultiPoly btc_n = const_poly(R, n, rec.b_tilde);
    MultiPoly wv = MultiPoly::variable(R, n, fresh);
    MultiPoly dx_n = dx.extended(n);
    MultiPoly A1e = data.A1.extended(n);
    MultiPoly A2e = data.A2.extended(n);
    MultiPoly De = data.D.extended(n);
    MultiPoly A1_dx_n = A1_dx.extended(n);
    MultiPoly D_A1dx_n = D_A1dx.extended(n);
    next.A1 = (apply_univariate(A1e, xi, dx_n + wv.mul_scalar(rec.b_tilde)) - A1_dx_n)
                  .exact_div(btc_n);
    next.A2 = (apply_univariate(A2e, xi, dx_n + wv.mul_scalar(rec.b_tilde) + D_A1dx_n) -
               apply_univariate(A2e, xi, dx_n + D_A1dx_n))
                  .exact_div(btc_n);
    MultiPoly yv = MultiPoly::variable(R, n, yi);
    next.D = (apply_univariate(De, yi, yv.mul_scalar(rec.b_tilde) + A1_dx_n) - D_A1dx_n)
                 .exact_div(btc_n);

    // Bring the next-stage data into the Lemma-5 normal form: the raw
    // quotients A_i / (b/b~) need not be in lowest terms.  Dividing A1, A2
    // and b by the common content g and rescaling D(T) -> D(gT) encodes the
    // same map with coprime data.
    if (!next.b.is_unit()) {
        Scalar g1 = Scalar::gcd(next.A1.content(), next.b);
        Scalar g2 = Scalar::gcd(next.A2.content(), next.b);
        if (g1 != g2)
            throw InternalInvariantError(
                "stage: next-stage contents reduce b differently (" + g1.to_string() + " vs " +
                g2.to_string() + ")");
        if (!g1.is_unit()) {
            MultiPoly gc = const_poly(R, n, g1);
            next.A1 = next.A1.exact_div(gc);
            next.A2 = next.A2.exact_div(gc);
            next.b = next.b.exact_div(g1);
            next.D = apply_univariate(next.D, yi,
                                      MultiPoly::variable(R, n, yi).mul_scalar(g1));
        }
        if (!Scalar::gcd(next.A1.content(), next.b).is_unit() ||
            !Scalar::gcd(next.A2.content(), next.b).is_unit())
            throw InternalInvariantError("stage: next-stage content still shares a factor with b");
    }
    rec.next = next;

    if (normalized != reconstruct_length3(next))
        throw InternalInvariantError("stage: F^1 does not match the next-stage data");

    if (auto w = decompose_linear_block(rec.A, R, n)) {
        rec.A_word = std::move(*w);
        rec.elementary_decomposed = true;
    }
    return rec;
}

namespace {

std::vector<TameGenerator> base_case_word(const Length3Data& d) {
    // b a unit: F = F2 ∘ G ∘ F1 with integral shears.
    const Ring& R = d.ring;
    Scalar binv = d.b.inverse();
    MultiPoly f1 = d.A1.mul_scalar(binv);
    MultiPoly f2 = d.A2.mul_scalar(binv);
    MultiPoly yv = MultiPoly::variable(R, d.nvars, d.y_index);
    MultiPoly g = apply_univariate(d.D, d.y_index, yv.mul_scalar(d.b));
    return {ElementaryGen{d.y_index, f2}, ElementaryGen{d.x_index, g},
            ElementaryGen{d.y_index, f1}};
}

}  // namespace

namespace {

/// Shared engine: runs the stage chain on extracted data and assembles the
/// certificate word.  `a_diag` and `swapped` record how `original` was
/// normalized into the data's Eq-(7) shape.
Certificate stabilize_engine(const PolyMap& original, Length3Data data, const Scalar& a_diag,
                             bool swapped) {
    const Ring& R = original.ring();
    Certificate cert;
    cert.ring = R;
    cert.original = original;

    std::vector<StageRecord> stages;
    while (!data.b.is_unit()) {
        StageRecord rec = make_stage(data);
        data = rec.next;
        stages.push_back(std::move(rec));
    }
    int m = static_cast<int>(stages.size());
    cert.added_vars = m;
    int ambient = 2 + m;

    // Assemble: word(stage k) = [gamma^{-1}, eps2^{-1}, eps3^{-1}] ++ word(k+1)
    //                           ++ A-word ++ [tau^{-1}]
    std::vector<TameGenerator> core = base_case_word(data);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        std::vector<TameGenerator> w;
        w.push_back(generator_inverse(it->gamma));
        w.push_back(generator_inverse(it->eps2));
        w.push_back(generator_inverse(it->eps3));
        for (auto& g : core) w.push_back(std::move(g));
        if (it->elementary_decomposed) {
            for (const auto& g : it->A_word) w.push_back(g);
        } else {
            w.push_back(it->A);
            cert.all_blocks_elementary = false;
        }
        w.push_back(generator_inverse(it->tau));
        core = std::move(w);
    }

    TameWord word(R, 2);
    if (m > 0) word.push_back(AddVariablesGen{m});
    // Undo the normalizations: F = D_{a,1} ∘ (swap ∘ data-map ∘ swap).
    MultiPoly one2 = const_poly(R, ambient, Scalar::one(R));
    MultiPoly zero2 = MultiPoly::zero(R, ambient);
    if (!a_diag.is_one()) word.push_back(DiagonalGen{a_diag, 0});
    if (swapped)
        word.push_back(LinearBlockGen{{0, 1}, {{zero2, one2}, {one2, zero2}}});
    for (auto& g : core) word.push_back(generator_extended(g, ambient));
    if (swapped)
        word.push_back(LinearBlockGen{{0, 1}, {{zero2, one2}, {one2, zero2}}});

    for (const auto& s : stages)
        cert.stages.push_back(StageSummary{s.a.to_string(), s.before.b.to_string(),
                                           s.b_tilde.to_string(), s.c.to_string(),
                                           s.d.to_string(), s.elementary_decomposed});

    if (word.eval() != extend(original, m))
        throw InternalInvariantError("stabilize: certificate word does not recompose to the "
                                     "extended map");
    cert.word = std::move(word);
    cert.verified = true;
    return cert;
}

}  // namespace

Certificate stabilize_from_data(const Length3Data& data) {
    if (data.nvars != 2 || data.x_index != 0 || data.y_index != 1)
        throw PreconditionError("stabilize_from_data: top-level data must live in (X, Y)");
    PolyMap F = reconstruct_length3(data);
    return stabilize_engine(F, data, Scalar::one(data.ring), false);
}

Certificate stabilize(const PolyMap& F) {
    if (F.nvars() != 2) throw PreconditionError("stabilize: input must be a 2-variable map");
    if (!F.ring().is_ufd_mode())
        throw PreconditionError("stabilize: coefficient descriptor must be a UFD");
    const Ring& R = F.ring();

    // Strip a diagonal D_{a,1} if present (tamely equivalent), then extract.
    PeelResult peel = peel_over_K(F);
    if (!peel.translation[0].is_zero() || !peel.translation[1].is_zero())
        throw PreconditionError("stabilize: map is not origin-preserving");
    if (peel.factors.size() != 3)
        throw PreconditionError("stabilize: length is " + std::to_string(peel.factors.size()) +
                                ", not 3");
    Scalar a_diag = Scalar::one(R);
    PolyMap G = F;
    if (!peel.a.is_one()) {
        if (!peel.a.is_integral() || !peel.a.to_base_ring().is_unit())
            throw NotAutomorphismError("stabilize: diagonal scale " + peel.a.to_string() +
                                       " is not a unit of " + R.name());
        a_diag = peel.a.to_base_ring();
        std::vector<MultiPoly> comps{
            MultiPoly::variable(R, 2, 0).mul_scalar(a_diag.inverse()),
            MultiPoly::variable(R, 2, 1)};
        G = compose(PolyMap(R, std::move(comps)), F);
    }
    Length3Data data = extract_l3(G);
    return stabilize_engine(F, data, a_diag, data.swapped);
}

bool verify_certificate(const Certificate& cert) {
    try {
        return cert.word.eval() == extend(cert.original, cert.added_vars);
    } catch (const Error&) {
        return false;
    }
}

int s_count(const Scalar& b) {
    if (b.is_zero()) throw PreconditionError("s_count of zero");
    int s = 0;
    for (const auto& [p, m] : Scalar::factor_irreducibles(b)) s += m;
    return s;
}

}  // namespace tame
