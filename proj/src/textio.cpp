#include "tame/textio.hpp"

#include <cctype>

#include "tame/errors.hpp"

namespace tame {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    Ring work;  // fraction field during parsing; integrality checked at the end
    int nvars;

    explicit Parser(const std::string& t, const Ring& ring, int nv)
        : text(t), work(ring.fraction()), nvars(nv) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    MultiPoly parse_sum() {
        MultiPoly acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * parse_factor();
            } else if (accept('/')) {
                size_t at = pos;
                MultiPoly d = parse_factor();
                if (!d.is_constant())
                    throw ParseError("division by a non-constant expression", at);
                Scalar s = d.constant_value();
                if (s.is_zero()) throw ParseError("division by zero", at);
                acc = acc.mul_scalar(s.inverse());
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_factor() {
        if (accept('-')) return -parse_factor();
        MultiPoly base = parse_atom();
        if (accept('^')) {
            size_t at = pos;
            MultiPoly e = parse_atom();
            if (!e.is_constant()) throw ParseError("exponent must be an integer", at);
            Scalar s = e.constant_value();
            if (work.has_t()) {
                if (!s.ratfunc_value().is_integral() || !s.ratfunc_value().num().is_constant())
                    throw ParseError("exponent must be an integer", at);
                mpq_class q = s.ratfunc_value().num().constant_value();
                if (q.get_den() != 1 || q < 0) throw ParseError("exponent must be a nonnegative integer", at);
                return base.pow(q.get_num().get_ui());
            }
            mpq_class q = s.rational_value();
            if (q.get_den() != 1 || q < 0) throw ParseError("exponent must be a nonnegative integer", at);
            return base.pow(q.get_num().get_ui());
        }
        return base;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            MultiPoly inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            mpz_class v(text.substr(start, pos - start));
            return MultiPoly::constant(work, nvars, Scalar(work, v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "t") {
                if (!work.has_t())
                    throw ParseError("parameter t is not in ring " + work.base().name(), start);
                return MultiPoly::constant(work, nvars, Scalar::t(work));
            }
            for (int i = 0; i < nvars; ++i)
                if (MultiPoly::var_name(i) == name) return MultiPoly::variable(work, nvars, i);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

int count_top_level_components(const std::string& text, size_t& open_at) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '(') throw ParseError("map must be a parenthesized tuple", i);
    open_at = i;
    int depth = 0, commas = 0;
    for (size_t j = i; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')') {
            --depth;
            if (depth == 0) {
                for (size_t k = j + 1; k < text.size(); ++k)
                    if (!std::isspace(static_cast<unsigned char>(text[k])))
                        throw ParseError("trailing input after tuple", k);
                return commas + 1;
            }
        }
        if (text[j] == ',' && depth == 1) ++commas;
    }
    throw ParseError("unbalanced parentheses", text.size());
}

}  // namespace

MultiPoly parse_poly(const std::string& text, const Ring& ring, int nvars) {
    Parser p(text, ring, nvars);
    MultiPoly r = p.parse_sum();
    if (!p.eof()) throw ParseError("trailing input", p.pos);
    if (!ring.is_field()) {
        try {
            return r.to_base_ring();
        } catch (const InexactDivisionError&) {
            throw ParseError("coefficient outside the declared ring " + ring.name(), 0);
        }
    }
    if (ring.kind == RingKind::Rationals) return r.to_base_ring();
    return r;
}

PolyMap parse_map(const std::string& text, const Ring& ring) {
    size_t open_at = 0;
    int n = count_top_level_components(text, open_at);
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    // Re-scan splitting on top-level commas.
    size_t i = open_at + 1;
    int depth = 1;
    size_t start = i;
    std::vector<std::string> pieces;
    for (size_t j = i; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')') {
            --depth;
            if (depth == 0) {
                pieces.push_back(text.substr(start, j - start));
                break;
            }
        }
        if (text[j] == ',' && depth == 1) {
            pieces.push_back(text.substr(start, j - start));
            start = j + 1;
        }
    }
    for (const auto& piece : pieces) comps.push_back(parse_poly(piece, ring, n));
    return PolyMap(ring, std::move(comps));
}

MapExpr parse_map_expr(const std::string& text, const Ring& ring) {
    return MapExpr{text, parse_map(text, ring), ring};
}

Ring ring_from_tag(const std::string& tag) {
    if (tag == "Z") return Ring::Z();
    if (tag == "Q") return Ring::Q();
    if (tag == "Qt") return Ring::Qt();
    throw PreconditionError("unknown ring tag '" + tag + "' (expected Z, Q or Qt)");
}

}  // namespace tame
