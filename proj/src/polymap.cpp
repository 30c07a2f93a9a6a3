#include "tame/polymap.hpp"

#include <sstream>

#include "tame/errors.hpp"

namespace tame {

PolyMap::PolyMap(const Ring& ring, std::vector<MultiPoly> comps)
    : ring_(ring), nvars_(static_cast<int>(comps.size())), comps_(std::move(comps)) {
    for (const auto& c : comps_) {
        require_same_ring(ring_, c.ring(), "PolyMap");
        if (c.nvars() != nvars_)
            throw PreconditionError("PolyMap: component variable count mismatch");
    }
}

PolyMap PolyMap::identity(const Ring& ring, int nvars) {
    std::vector<MultiPoly> comps;
    comps.reserve(nvars);
    for (int i = 0; i < nvars; ++i) comps.push_back(MultiPoly::variable(ring, nvars, i));
    return PolyMap(ring, std::move(comps));
}

bool PolyMap::is_identity() const { return *this == identity(ring_, nvars_); }

bool PolyMap::is_origin_preserving() const {
    for (const auto& c : comps_)
        if (!c.constant_term().is_zero()) return false;
    return true;
}

MultiPoly PolyMap::apply(const MultiPoly& p) const {
    if (p.nvars() != nvars_) throw PreconditionError("apply: arity mismatch");
    return p.substitute(comps_);
}

PolyMap PolyMap::to_fraction_field() const {
    std::vector<MultiPoly> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(c.to_fraction_field());
    return PolyMap(ring_.fraction(), std::move(comps));
}

PolyMap PolyMap::to_base_ring() const {
    std::vector<MultiPoly> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(c.to_base_ring());
    return PolyMap(ring_.base(), std::move(comps));
}

std::string PolyMap::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) out << ", ";
        out << comps_[i].to_string();
    }
    out << ")";
    return out.str();
}

PolyMap compose(const PolyMap& F, const PolyMap& G) {
    require_same_ring(F.ring(), G.ring(), "compose");
    if (F.nvars() != G.nvars()) throw PreconditionError("compose: arity mismatch");
    std::vector<MultiPoly> comps;
    comps.reserve(F.nvars());
    for (int i = 0; i < F.nvars(); ++i) comps.push_back(F.component(i).substitute(G.components()));
    return PolyMap(F.ring(), std::move(comps));
}

PolyMap extend(const PolyMap& F, int m) {
    if (m < 0) throw PreconditionError("extend: negative variable count");
    if (m == 0) return F;
    int n = F.nvars() + m;
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    for (const auto& c : F.components()) comps.push_back(c.extended(n));
    for (int i = F.nvars(); i < n; ++i) comps.push_back(MultiPoly::variable(F.ring(), n, i));
    return PolyMap(F.ring(), std::move(comps));
}

namespace {

MultiPoly det_recursive(const std::vector<std::vector<MultiPoly>>& m, std::vector<int> cols,
                        int row) {
    const Ring& ring = m[0][0].ring();
    int nv = m[0][0].nvars();
    if (cols.size() == 1) return m[row][cols[0]];
    MultiPoly acc(ring, nv);
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        MultiPoly minor = det_recursive(m, rest, row + 1);
        MultiPoly term = m[row][cols[k]] * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MultiPoly jacobian_det(const PolyMap& F) {
    int n = F.nvars();
    if (n == 0) return MultiPoly::constant(F.ring(), 0, 1);
    std::vector<std::vector<MultiPoly>> jac(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i].push_back(F.component(i).derivative(j));
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    return det_recursive(jac, cols, 0);
}

bool is_automorphism_witnessed(const PolyMap& F, const PolyMap& G) {
    return compose(G, F).is_identity() && compose(F, G).is_identity();
}

// ---------------------------------------------------------------------------

void validate_generator(const TameGenerator& g, const Ring& ring, int nvars) {
    if (const auto* e = std::get_if<ElementaryGen>(&g)) {
        if (e->target < 0 || e->target >= nvars)
            throw PreconditionError("elementary generator: target out of range");
        require_same_ring(e->f.ring(), ring, "elementary generator");
        if (!e->f.independent_of(e->target))
            throw PreconditionError("elementary generator: payload involves its target");
        return;
    }
    if (const auto* b = std::get_if<LinearBlockGen>(&g)) {
        size_t k = b->coords.size();
        if (k == 0 || b->entries.size() != k)
            throw PreconditionError("linear block: shape mismatch");
        for (const auto& row : b->entries)
            if (row.size() != k) throw PreconditionError("linear block: shape mismatch");
        for (int c : b->coords)
            if (c < 0 || c >= nvars) throw PreconditionError("linear block: coord out of range");
        for (const auto& row : b->entries)
            for (const auto& p : row) {
                require_same_ring(p.ring(), ring, "linear block entry");
                for (int c : b->coords)
                    if (!p.independent_of(c))
                        throw PreconditionError("linear block: entry involves an acted coord");
            }
        // det must be a unit of the stage ring (a unit constant).
        std::vector<int> cols(k);
        for (size_t j = 0; j < k; ++j) cols[j] = static_cast<int>(j);
        MultiPoly det = det_recursive(b->entries, cols, 0);
        if (!det.is_constant() || !det.constant_value().is_unit())
            throw PreconditionError("linear block: determinant " + det.to_string() +
                                    " is not a unit");
        return;
    }
    if (const auto* t = std::get_if<TranslationGen>(&g)) {
        if (static_cast<int>(t->offset.size()) != nvars)
            throw PreconditionError("translation: arity mismatch");
        for (const auto& s : t->offset) require_same_ring(s.ring(), ring, "translation");
        return;
    }
    if (const auto* d = std::get_if<DiagonalGen>(&g)) {
        if (d->position < 0 || d->position >= nvars)
            throw PreconditionError("diagonal: position out of range");
        require_same_ring(d->a.ring(), ring, "diagonal");
        if (!d->a.is_unit()) throw PreconditionError("diagonal: scale is not a unit");
        return;
    }
    if (const auto* a = std::get_if<AddVariablesGen>(&g)) {
        if (a->count < 0) throw PreconditionError("add-variables: negative count");
        return;
    }
}

PolyMap generator_to_map(const TameGenerator& g, const Ring& ring, int nvars) {
    PolyMap id = PolyMap::identity(ring, nvars);
    if (const auto* e = std::get_if<ElementaryGen>(&g)) {
        std::vector<MultiPoly> comps = id.components();
        comps[e->target] = comps[e->target] + e->f.extended(nvars);
        return PolyMap(ring, std::move(comps));
    }
    if (const auto* b = std::get_if<LinearBlockGen>(&g)) {
        std::vector<MultiPoly> comps = id.components();
        size_t k = b->coords.size();
        for (size_t i = 0; i < k; ++i) {
            MultiPoly acc(ring, nvars);
            for (size_t j = 0; j < k; ++j)
                acc = acc + b->entries[i][j].extended(nvars) *
                                MultiPoly::variable(ring, nvars, b->coords[j]);
            comps[b->coords[i]] = std::move(acc);
        }
        return PolyMap(ring, std::move(comps));
    }
    if (const auto* t = std::get_if<TranslationGen>(&g)) {
        std::vector<MultiPoly> comps = id.components();
        for (int i = 0; i < nvars; ++i)
            comps[i] = comps[i] + MultiPoly::constant(ring, nvars, t->offset[i]);
        return PolyMap(ring, std::move(comps));
    }
    if (const auto* d = std::get_if<DiagonalGen>(&g)) {
        std::vector<MultiPoly> comps = id.components();
        comps[d->position] = comps[d->position].mul_scalar(d->a);
        return PolyMap(ring, std::move(comps));
    }
    // AddVariables acts as the identity on the declared ambient space.
    return id;
}

TameGenerator generator_inverse(const TameGenerator& g) {
    if (const auto* e = std::get_if<ElementaryGen>(&g)) return ElementaryGen{e->target, -e->f};
    if (const auto* b = std::get_if<LinearBlockGen>(&g)) {
        // Adjugate divided by the (unit constant) determinant.
        size_t k = b->coords.size();
        std::vector<int> cols(k);
        for (size_t j = 0; j < k; ++j) cols[j] = static_cast<int>(j);
        MultiPoly det = det_recursive(b->entries, cols, 0);
        Scalar det_inv = det.constant_value().inverse();
        std::vector<std::vector<MultiPoly>> inv(k);
        for (size_t i = 0; i < k; ++i) inv[i].resize(k, MultiPoly(det.ring(), det.nvars()));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                // cofactor expansion of the (j,i) minor
                std::vector<std::vector<MultiPoly>> minor;
                for (size_t r = 0; r < k; ++r) {
                    if (r == j) continue;
                    std::vector<MultiPoly> row;
                    for (size_t c = 0; c < k; ++c)
                        if (c != i) row.push_back(b->entries[r][c]);
                    minor.push_back(std::move(row));
                }
                MultiPoly m = minor.empty() ? MultiPoly::constant(det.ring(), det.nvars(), 1)
                                            : det_recursive(minor, [&] {
                                                  std::vector<int> cc(k - 1);
                                                  for (size_t j2 = 0; j2 < k - 1; ++j2)
                                                      cc[j2] = static_cast<int>(j2);
                                                  return cc;
                                              }(), 0);
                MultiPoly cof = ((i + j) % 2 == 0) ? m : -m;
                inv[i][j] = cof.mul_scalar(det_inv);
            }
        return LinearBlockGen{b->coords, std::move(inv)};
    }
    if (const auto* t = std::get_if<TranslationGen>(&g)) {
        std::vector<Scalar> neg;
        neg.reserve(t->offset.size());
        for (const auto& s : t->offset) neg.push_back(-s);
        return TranslationGen{std::move(neg)};
    }
    if (const auto* d = std::get_if<DiagonalGen>(&g))
        return DiagonalGen{d->a.inverse(), d->position};
    throw PreconditionError("add-variables generators cannot be inverted in place");
}

TameGenerator generator_extended(const TameGenerator& g, int nvars) {
    if (const auto* e = std::get_if<ElementaryGen>(&g))
        return ElementaryGen{e->target, e->f.extended(nvars)};
    if (const auto* b = std::get_if<LinearBlockGen>(&g)) {
        auto entries = b->entries;
        for (auto& row : entries)
            for (auto& p : row) p = p.extended(nvars);
        return LinearBlockGen{b->coords, std::move(entries)};
    }
    if (const auto* t = std::get_if<TranslationGen>(&g)) {
        if (static_cast<int>(t->offset.size()) >= nvars) return g;
        auto offset = t->offset;
        const Ring& ring = offset.empty() ? Ring::Z() : offset.front().ring();
        offset.resize(nvars, Scalar::zero(ring));
        return TranslationGen{std::move(offset)};
    }
    return g;
}

// ---------------------------------------------------------------------------

TameWord::TameWord(const Ring& ring, int initial_nvars, std::vector<TameGenerator> gens)
    : ring_(ring, initial_nvars) {
    for (auto& g : gens) push_back(std::move(g));
}

int TameWord::ambient_nvars() const {
    int n = ring_.second;
    for (const auto& g : gens_)
        if (const auto* a = std::get_if<AddVariablesGen>(&g)) n += a->count;
    return n;
}

void TameWord::push_back(TameGenerator g) {
    if (std::holds_alternative<AddVariablesGen>(g)) {
        for (const auto& prev : gens_)
            if (!std::holds_alternative<AddVariablesGen>(prev))
                throw PreconditionError("add-variables only allowed as a word prefix");
    }
    gens_.push_back(std::move(g));
}

PolyMap TameWord::eval() const {
    int n = ambient_nvars();
    PolyMap acc = PolyMap::identity(ring(), n);
    // eval([g1,...,gk]) = g1∘...∘gk: fold from the right.
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
        if (std::holds_alternative<AddVariablesGen>(*it)) continue;
        validate_generator(*it, ring(), n);
        acc = compose(generator_to_map(*it, ring(), n), acc);
    }
    return acc;
}

TameWord TameWord::inverted() const {
    TameWord out(ring(), initial_nvars());
    std::vector<TameGenerator> body;
    for (const auto& g : gens_) {
        if (std::holds_alternative<AddVariablesGen>(g))
            out.push_back(g);
        else
            body.push_back(g);
    }
    for (auto it = body.rbegin(); it != body.rend(); ++it)
        out.push_back(generator_inverse(*it));
    return out;
}

}  // namespace tame
