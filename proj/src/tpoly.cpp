#include "tame/tpoly.hpp"

#include <sstream>

#include "tame/errors.hpp"

namespace tame {

TPoly::TPoly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

TPoly::TPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::t() { return TPoly(std::vector<mpq_class>{mpq_class(0), mpq_class(1)}); }

bool TPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const mpq_class& TPoly::coeff(int i) const {
    static const mpq_class kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpq_class& TPoly::leading() const {
    if (c_.empty()) throw PreconditionError("TPoly::leading on zero polynomial");
    return c_.back();
}

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly TPoly::operator-() const {
    TPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return TPoly(std::move(r));
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return TPoly(std::move(r));
}

TPoly TPoly::mul_scalar(const mpq_class& s) const {
    if (s == 0) return TPoly();
    TPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

TPoly TPoly::pow(unsigned long e) const {
    TPoly r = TPoly::one();
    TPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw PreconditionError("TPoly division by zero");
    std::vector<mpq_class> rem = a.c_;
    std::vector<mpq_class> quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, mpq_class(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        int k = static_cast<int>(rem.size()) - 1 - db;
        mpq_class q = rem.back() / b.c_.back();
        quo[k] = q;
        for (int i = 0; i <= db; ++i) rem[k + i] -= q * b.c_[i];
        rem.pop_back();
    }
    return {TPoly(std::move(quo)), TPoly(std::move(rem))};
}

TPoly TPoly::exact_div(const TPoly& a, const TPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InexactDivisionError("TPoly exact_div: " + a.to_string() + " by " + b.to_string());
    return q;
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
    TPoly x = a, y = b;
    while (!y.is_zero()) {
        TPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

void TPoly::extended_gcd(const TPoly& a, const TPoly& b, TPoly& g, TPoly& u, TPoly& v) {
    TPoly old_r = a, r = b;
    TPoly old_s = TPoly::one(), s;
    TPoly old_t, t = TPoly::one();
    while (!r.is_zero()) {
        auto [q, rem] = divmod(old_r, r);
        old_r = std::exchange(r, rem);
        TPoly ns = old_s - q * s;
        old_s = std::exchange(s, ns);
        TPoly nt = old_t - q * t;
        old_t = std::exchange(t, nt);
    }
    g = old_r;
    u = old_s;
    v = old_t;
    if (!g.is_zero() && g.leading() != 1) {
        mpq_class inv = 1 / g.leading();
        g = g.mul_scalar(inv);
        u = u.mul_scalar(inv);
        v = v.mul_scalar(inv);
    }
}

TPoly TPoly::derivative() const {
    if (c_.size() <= 1) return TPoly();
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
    return TPoly(std::move(r));
}

TPoly TPoly::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(1 / leading());
}

mpq_class TPoly::eval(const mpq_class& x) const {
    mpq_class r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

TPoly TPoly::compose_linear(const mpq_class& s) const {
    std::vector<mpq_class> r(c_.size());
    mpq_class p(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * p;
        p *= s;
    }
    return TPoly(std::move(r));
}

namespace {
std::string q_to_string(const mpq_class& q) { return q.get_str(); }
}  // namespace

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& c = c_[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (a == 1);
        if (i == 0) {
            out << q_to_string(a);
        } else {
            if (!unit_coeff) out << q_to_string(a) << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RatFunc::RatFunc(TPoly n, TPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw PreconditionError("RatFunc with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = TPoly::one();
        return;
    }
    TPoly g = TPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = TPoly::exact_div(num_, g);
        den_ = TPoly::exact_div(den_, g);
    }
    if (den_.leading() != 1) {
        mpq_class inv = 1 / den_.leading();
        num_ = num_.mul_scalar(inv);
        den_ = den_.mul_scalar(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw PreconditionError("RatFunc division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::to_string() const {
    if (is_integral()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool n_simple = num_.is_constant() || num_.coeffs().size() == 1 ||
                    n.find(' ') == std::string::npos;
    bool d_simple = d.find(' ') == std::string::npos;
    std::string r = n_simple ? n : "(" + n + ")";
    r += "/";
    r += d_simple ? d : "(" + d + ")";
    return r;
}

}  // namespace tame
