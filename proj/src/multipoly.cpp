#include "tame/multipoly.hpp"

#include <sstream>

#include "tame/errors.hpp"

namespace tame {

MultiPoly MultiPoly::constant(const Ring& ring, int nvars, const Scalar& c) {
    MultiPoly p(ring, nvars);
    if (!c.is_zero()) {
        require_same_ring(ring, c.ring(), "MultiPoly::constant");
        p.terms_.emplace(Expo(nvars, 0), c);
    }
    return p;
}

MultiPoly MultiPoly::constant(const Ring& ring, int nvars, long c) {
    return constant(ring, nvars, Scalar(ring, c));
}

MultiPoly MultiPoly::variable(const Ring& ring, int nvars, int var) {
    if (var < 0 || var >= nvars) throw PreconditionError("variable index out of range");
    MultiPoly p(ring, nvars);
    Expo e(nvars, 0);
    e[var] = 1;
    p.terms_.emplace(std::move(e), Scalar::one(ring));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && expo_degree(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_term() const {
    auto it = terms_.find(Expo(nvars_, 0));
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

Scalar MultiPoly::constant_value() const {
    if (!is_constant()) throw PreconditionError("constant_value of a non-constant polynomial");
    return constant_term();
}

Scalar MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

bool MultiPoly::independent_of(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return false;
    return true;
}

void MultiPoly::set_coeff(const Expo& e, const Scalar& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void MultiPoly::add_term(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* where) const {
    require_same_ring(ring_, o.ring_, where);
    if (nvars_ != o.nvars_)
        throw PreconditionError(std::string(where) + ": variable count mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o, "MultiPoly::+");
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o, "MultiPoly::*");
    MultiPoly r(ring_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::mul_scalar(const Scalar& s) const {
    if (s.is_zero()) return MultiPoly(ring_, nvars_);
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly r = constant(ring_, nvars_, 1);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& o) const {
    check_compatible(o, "MultiPoly::exact_div");
    if (o.is_zero()) throw PreconditionError("polynomial division by zero");
    MultiPoly rem(*this);
    MultiPoly quo(ring_, nvars_);
    const auto& lead = *o.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& top = *rem.terms_.rbegin();
        Expo diff(nvars_);
        bool ok = true;
        for (int i = 0; i < nvars_; ++i) {
            diff[i] = top.first[i] - lead.first[i];
            if (diff[i] < 0) ok = false;
        }
        if (!ok) throw InexactDivisionError("inexact polynomial division (monomial mismatch)");
        Scalar c = top.second.exact_div(lead.second);  // throws if inexact
        quo.add_term(diff, c);
        MultiPoly t(ring_, nvars_);
        t.terms_.emplace(std::move(diff), std::move(c));
        rem = rem - t * o;
    }
    return quo;
}

bool MultiPoly::divisible_by(const MultiPoly& o) const {
    try {
        (void)exact_div(o);
        return true;
    } catch (const InexactDivisionError&) {
        return false;
    }
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& args) const {
    if (static_cast<int>(args.size()) != nvars_)
        throw PreconditionError("substitute: arity mismatch");
    if (terms_.empty()) {
        if (args.empty()) return *this;
        return MultiPoly(args[0].ring(), args[0].nvars());
    }
    const Ring& rr = args.empty() ? ring_ : args[0].ring();
    int rn = args.empty() ? nvars_ : args[0].nvars();
    for (const auto& a : args) {
        require_same_ring(rr, a.ring(), "substitute");
        if (a.nvars() != rn) throw PreconditionError("substitute: argument arity mismatch");
    }
    require_same_ring(ring_, rr, "substitute");
    // Cache powers of each argument.
    std::vector<std::vector<MultiPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(constant(rr, rn, 1));
    MultiPoly acc(rr, rn);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(rr, rn, c);
        for (int i = 0; i < nvars_; ++i) {
            while (static_cast<int>(pows[i].size()) <= e[i])
                pows[i].push_back(pows[i].back() * args[i]);
            if (e[i] > 0) term = term * pows[i][e[i]];
        }
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_one(int var, const MultiPoly& value) const {
    std::vector<MultiPoly> args;
    args.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i)
        args.push_back(i == var ? value : variable(value.ring(), value.nvars(), i));
    return substitute(args);
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw PreconditionError("derivative: bad variable index");
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, c * Scalar(ring_, e[var]));
    }
    return r;
}

MultiPoly MultiPoly::eval_at_zero(int var) const {
    if (var < 0 || var >= nvars_) throw PreconditionError("eval_at_zero: bad variable index");
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_)
        if (e[var] == 0) r.terms_.emplace(e, c);
    return r;
}

int MultiPoly::degree(int var) const {
    int d = kNegInfinity;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return kNegInfinity;
    return expo_degree(terms_.rbegin()->first);
}

MultiPoly MultiPoly::leading_form() const {
    if (terms_.empty()) throw PreconditionError("leading_form of the zero polynomial");
    int d = total_degree();
    MultiPoly r(ring_, nvars_);
    for (auto it = terms_.rbegin(); it != terms_.rend() && expo_degree(it->first) == d; ++it)
        r.terms_.emplace(it->first, it->second);
    return r;
}

Scalar MultiPoly::content() const {
    Scalar g = Scalar::zero(ring_);
    for (const auto& [e, c] : terms_) g = Scalar::gcd(g, c);
    return g;
}

std::pair<MultiPoly, Scalar> MultiPoly::clear_denominators() const {
    if (!ring_.fraction_field && ring_.kind != RingKind::Rationals) {
        // Already over the base ring.
        return {*this, Scalar::one(ring_)};
    }
    Ring base = ring_.base();
    if (ring_.kind == RingKind::Rationals) {
        // Q is its own base ring; denominators are units.
        return {*this, Scalar::one(ring_)};
    }
    // lcm of denominators
    Scalar b = Scalar::one(base);
    for (const auto& [e, c] : terms_) {
        Scalar d = c.denominator();
        Scalar g = Scalar::gcd(b, d);
        b = b.exact_div(g) * d;
    }
    MultiPoly a(base, nvars_);
    Scalar bk = b.to_fraction_field();
    for (const auto& [e, c] : terms_) a.terms_.emplace(e, (c * bk).to_base_ring());
    Scalar g = Scalar::gcd(a.content(), b);
    if (!g.is_one() && !g.is_zero()) {
        MultiPoly a2(base, nvars_);
        for (const auto& [e, c] : a.terms_) a2.terms_.emplace(e, c.exact_div(g));
        a = std::move(a2);
        b = b.exact_div(g);
    }
    Scalar u = b.unit_part();
    if (!u.is_one()) {
        b = b.canonical();
        a = a.mul_scalar(u.inverse());
    }
    return {a, b};
}

MultiPoly MultiPoly::to_fraction_field() const {
    MultiPoly r(ring_.fraction(), nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.to_fraction_field());
    return r;
}

MultiPoly MultiPoly::to_base_ring() const {
    MultiPoly r(ring_.base(), nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.to_base_ring());
    return r;
}

MultiPoly MultiPoly::extended(int new_nvars) const {
    if (new_nvars < nvars_) throw PreconditionError("extended: cannot shrink variable list");
    if (new_nvars == nvars_) return *this;
    MultiPoly r(ring_, new_nvars);
    for (const auto& [e, c] : terms_) {
        Expo e2 = e;
        e2.resize(new_nvars, 0);
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

std::string MultiPoly::var_name(int i) {
    switch (i) {
        case 0: return "X";
        case 1: return "Y";
        case 2: return "W";
        default: return "Z" + std::to_string(i - 2);
    }
}

namespace {

bool single_term_text(const std::string& s) { return s.find(' ') == std::string::npos; }

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Expo& e = it->first;
        const Scalar& c = it->second;
        std::string cs = c.to_string();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && single_term_text(cs)) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool multi_term = !single_term_text(cs);
        if (mono.empty()) {
            out << (multi_term ? "(" + cs + ")" : cs);
        } else if (cs == "1" && !multi_term) {
            out << mono;
        } else {
            out << (multi_term ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return out.str();
}

MultiPoly operator*(const Scalar& s, const MultiPoly& p) { return p.mul_scalar(s); }

}  // namespace tame
