#pragma once

#include <string>

#include "tame/errors.hpp"

namespace tame {

enum class RingKind {
    Integers,   // Z
    Rationals,  // Q (a field in its own right)
    RatPolyT,   // Q[t]
};

/// Descriptor of a coefficient domain.  `fraction_field` switches Z to Q and
/// Q[t] to Q(t); elements may then carry denominators.  Every scalar and
/// polynomial carries exactly one descriptor and cross-ring operations are
/// rejected.
struct Ring {
    RingKind kind = RingKind::Integers;
    bool fraction_field = false;

    static Ring Z() { return {RingKind::Integers, false}; }
    static Ring Q() { return {RingKind::Rationals, false}; }
    static Ring Qt() { return {RingKind::RatPolyT, false}; }
    static Ring FracZ() { return {RingKind::Integers, true}; }
    static Ring FracQt() { return {RingKind::RatPolyT, true}; }

    /// The fraction field of this ring (identity on fields).
    Ring fraction() const { return {kind, kind == RingKind::Rationals ? false : true}; }
    /// The underlying UFD (drops the fraction flag).
    Ring base() const { return {kind, false}; }

    bool is_field() const { return fraction_field || kind == RingKind::Rationals; }
    /// gcd/radical/factor make sense here (no denominators around).
    bool is_ufd_mode() const { return !fraction_field; }
    /// Euclidean domains: Z and Q[t] (and the field Q trivially).
    bool is_euclidean() const { return !fraction_field; }
    bool has_t() const { return kind == RingKind::RatPolyT; }

    bool operator==(const Ring& o) const {
        return kind == o.kind && fraction_field == o.fraction_field;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string name() const {
        switch (kind) {
            case RingKind::Integers: return fraction_field ? "Frac(Z)" : "Z";
            case RingKind::Rationals: return "Q";
            case RingKind::RatPolyT: return fraction_field ? "Q(t)" : "Q[t]";
        }
        return "?";
    }
    /// The tag used by the CLI (--ring {Z|Q|Qt}); fraction mode has no tag.
    std::string tag() const {
        switch (kind) {
            case RingKind::Integers: return "Z";
            case RingKind::Rationals: return "Q";
            case RingKind::RatPolyT: return "Qt";
        }
        return "?";
    }
};

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (a != b)
        throw RingMismatchError(std::string(where) + ": ring mismatch (" + a.name() +
                                " vs " + b.name() + ")");
}

}  // namespace tame
