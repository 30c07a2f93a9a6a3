#pragma once

#include <random>
#include <string>

#include "tame/polymap.hpp"
#include "tame/textio.hpp"

namespace tame::testutil {

inline MultiPoly P(const std::string& s, const Ring& ring, int nvars = 2) {
    return parse_poly(s, ring, nvars);
}

inline PolyMap M(const std::string& s, const Ring& ring) { return parse_map(s, ring); }

/// Nagata's automorphism over Q[t], fixed golden fixture.
inline PolyMap nagata() {
    return M("(X + t*(t*Y + X^2), Y - 2*(t*Y + X^2)*X - t*(t*Y + X^2)^2)", Ring::Qt());
}

/// Random tame words over a ring, mixing elementary, affine and diagonal
/// generators.  Elementary payloads use small coefficients and degrees, and
/// the product of elementary degrees is capped so each trial composes fast.
class WordGen {
public:
    WordGen(Ring ring, uint64_t seed) : ring_(ring), rng_(seed) {}

    Scalar small_scalar(int bound = 9, bool allow_zero = true) {
        std::uniform_int_distribution<int> d(-bound, bound);
        int v = d(rng_);
        if (!allow_zero && v == 0) v = 1;
        if (ring_.has_t()) {
            std::uniform_int_distribution<int> te(0, 2);
            TPoly t = TPoly::t();
            return Scalar(ring_, t.pow(te(rng_)).mul_scalar(v));
        }
        return Scalar(ring_, v);
    }

    Scalar unit() {
        if (ring_.kind == RingKind::Integers) {
            std::uniform_int_distribution<int> d(0, 1);
            return Scalar(ring_, d(rng_) ? 1 : -1);
        }
        std::uniform_int_distribution<int> d(1, 5);
        int v = d(rng_);
        std::uniform_int_distribution<int> s(0, 1);
        if (s(rng_)) v = -v;
        if (ring_.kind == RingKind::Rationals) {
            std::uniform_int_distribution<int> den(1, 3);
            return Scalar(ring_, mpq_class(v, den(rng_)));
        }
        return Scalar(ring_, v);
    }

    /// Univariate poly in `var` (of 2), zero constant term, degree in [1,maxdeg].
    MultiPoly shear_poly(int var, int maxdeg) {
        std::uniform_int_distribution<int> dd(1, maxdeg);
        int deg = dd(rng_);
        MultiPoly f(ring_, 2);
        for (int k = 1; k <= deg; ++k) {
            Scalar c = small_scalar(9, k == deg);
            if (k == deg && c.is_zero()) c = Scalar::one(ring_);
            Expo e(2, 0);
            e[var] = k;
            f.add_term(e, c);
        }
        return f;
    }

    /// A word of at most max_len generators whose elementary-degree product
    /// stays at or under deg_cap.
    TameWord word(int max_len, int maxdeg = 4, long deg_cap = 128) {
        std::uniform_int_distribution<int> len_d(1, max_len);
        int len = len_d(rng_);
        TameWord w(ring_, 2);
        long degprod = 1;
        std::uniform_int_distribution<int> kind_d(0, 3);
        for (int i = 0; i < len; ++i) {
            switch (kind_d(rng_)) {
                case 0:
                case 1: {
                    std::uniform_int_distribution<int> tgt(0, 1);
                    int target = tgt(rng_);
                    MultiPoly f = shear_poly(1 - target, maxdeg);
                    long d = std::max(1, f.total_degree());
                    if (degprod * d > deg_cap) {
                        f = shear_poly(1 - target, 1);
                        d = 1;
                    }
                    degprod *= d;
                    w.push_back(ElementaryGen{target, f});
                    break;
                }
                case 2: {
                    // random invertible 2x2 over the ring, built from a unit
                    // diagonal and a transvection
                    Scalar c = small_scalar(5);
                    std::uniform_int_distribution<int> which(0, 1);
                    MultiPoly cp = MultiPoly::constant(ring_, 2, c);
                    MultiPoly one = MultiPoly::constant(ring_, 2, 1);
                    MultiPoly zero = MultiPoly::zero(ring_, 2);
                    if (which(rng_))
                        w.push_back(LinearBlockGen{{0, 1}, {{one, cp}, {zero, one}}});
                    else
                        w.push_back(LinearBlockGen{{0, 1}, {{one, zero}, {cp, one}}});
                    break;
                }
                default: {
                    std::uniform_int_distribution<int> which(0, 1);
                    if (which(rng_)) {
                        w.push_back(TranslationGen{{small_scalar(5), small_scalar(5)}});
                    } else {
                        std::uniform_int_distribution<int> pos(0, 1);
                        w.push_back(DiagonalGen{unit(), pos(rng_)});
                    }
                }
            }
        }
        return w;
    }

    /// Word of m alternating nonlinear shears with base-ring data, first type
    /// chosen at random; used for reduced-length tests.
    TameWord alternating_shears(int m, int maxdeg = 3) {
        TameWord w(ring_, 2);
        std::uniform_int_distribution<int> first(0, 1);
        int target = first(rng_);
        for (int i = 0; i < m; ++i) {
            MultiPoly f = shear_poly(1 - target, maxdeg);
            // force a nonlinear top term
            if (f.total_degree() < 2) {
                Expo e(2, 0);
                e[1 - target] = 2;
                f.set_coeff(e, Scalar::one(ring_));
            }
            w.push_back(ElementaryGen{target, f});
            target = 1 - target;
        }
        return w;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    Ring ring_;
    std::mt19937_64 rng_;
};

}  // namespace tame::testutil
