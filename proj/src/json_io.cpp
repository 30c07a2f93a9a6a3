#include "tame/json_io.hpp"

#include "tame/errors.hpp"
#include "tame/textio.hpp"

namespace tame {

namespace {

Scalar scalar_from_text(const std::string& s, const Ring& ring) {
    MultiPoly p = parse_poly(s, ring, 1);
    if (!p.is_constant()) throw PreconditionError("expected a scalar, got " + s);
    return p.constant_value();
}

}  // namespace

Json generator_to_json(const TameGenerator& g) {
    Json j;
    if (const auto* e = std::get_if<ElementaryGen>(&g)) {
        j["kind"] = "elementary";
        j["target"] = e->target;
        j["poly"] = e->f.to_string();
        return j;
    }
    if (const auto* b = std::get_if<LinearBlockGen>(&g)) {
        j["kind"] = "linear_block";
        j["coords"] = b->coords;
        Json rows = Json::array();
        for (const auto& row : b->entries) {
            Json r = Json::array();
            for (const auto& p : row) r.push_back(p.to_string());
            rows.push_back(std::move(r));
        }
        j["entries"] = std::move(rows);
        return j;
    }
    if (const auto* t = std::get_if<TranslationGen>(&g)) {
        j["kind"] = "translation";
        Json off = Json::array();
        for (const auto& s : t->offset) off.push_back(s.to_string());
        j["offset"] = std::move(off);
        return j;
    }
    if (const auto* d = std::get_if<DiagonalGen>(&g)) {
        j["kind"] = "diagonal";
        j["a"] = d->a.to_string();
        j["position"] = d->position;
        return j;
    }
    const auto& a = std::get<AddVariablesGen>(g);
    j["kind"] = "add_variables";
    j["count"] = a.count;
    return j;
}

TameGenerator generator_from_json(const Json& j, const Ring& ring, int nvars) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "elementary")
        return ElementaryGen{j.at("target").get<int>(),
                             parse_poly(j.at("poly").get<std::string>(), ring, nvars)};
    if (kind == "linear_block") {
        LinearBlockGen b;
        b.coords = j.at("coords").get<std::vector<int>>();
        for (const auto& row : j.at("entries")) {
            std::vector<MultiPoly> r;
            for (const auto& p : row) r.push_back(parse_poly(p.get<std::string>(), ring, nvars));
            b.entries.push_back(std::move(r));
        }
        return b;
    }
    if (kind == "translation") {
        TranslationGen t;
        for (const auto& s : j.at("offset"))
            t.offset.push_back(scalar_from_text(s.get<std::string>(), ring));
        return t;
    }
    if (kind == "diagonal")
        return DiagonalGen{scalar_from_text(j.at("a").get<std::string>(), ring),
                           j.at("position").get<int>()};
    if (kind == "add_variables") return AddVariablesGen{j.at("count").get<int>()};
    throw PreconditionError("unknown generator kind '" + kind + "'");
}

Json word_to_json(const TameWord& w) {
    Json j;
    j["ring"] = w.ring().tag();
    j["initial_nvars"] = w.initial_nvars();
    Json gens = Json::array();
    for (const auto& g : w.generators()) gens.push_back(generator_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

TameWord word_from_json(const Json& j) {
    Ring ring = ring_from_tag(j.at("ring").get<std::string>());
    int n0 = j.at("initial_nvars").get<int>();
    // First pass: ambient after add_variables prefixes.
    int ambient = n0;
    for (const auto& g : j.at("generators"))
        if (g.at("kind") == "add_variables") ambient += g.at("count").get<int>();
    TameWord w(ring, n0);
    for (const auto& g : j.at("generators"))
        w.push_back(generator_from_json(g, ring, ambient));
    return w;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["ring"] = c.ring.tag();
    Json orig = Json::array();
    for (const auto& comp : c.original.components()) orig.push_back(comp.to_string());
    j["original"] = std::move(orig);
    j["added_vars"] = c.added_vars;
    j["word"] = word_to_json(c.word)["generators"];
    Json st = Json::array();
    for (const auto& s : c.stages) {
        Json e;
        e["a"] = s.a;
        e["b"] = s.b;
        e["b_tilde"] = s.b_tilde;
        e["c"] = s.c;
        e["d"] = s.d;
        e["block_status"] = s.elementary_decomposed ? "ELEMENTARY-DECOMPOSED" : "CERTIFIED-BLOCK";
        st.push_back(std::move(e));
    }
    j["stages"] = std::move(st);
    j["verified"] = c.verified;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.ring = ring_from_tag(j.at("ring").get<std::string>());
    std::vector<MultiPoly> comps;
    for (const auto& s : j.at("original"))
        comps.push_back(parse_poly(s.get<std::string>(), c.ring, 2));
    c.original = PolyMap(c.ring, std::move(comps));
    c.added_vars = j.at("added_vars").get<int>();
    int ambient = 2 + c.added_vars;
    TameWord w(c.ring, 2);
    if (c.added_vars > 0) w.push_back(AddVariablesGen{c.added_vars});
    for (const auto& g : j.at("word")) {
        if (g.at("kind") == "add_variables") continue;  // reconstructed above
        w.push_back(generator_from_json(g, c.ring, ambient));
    }
    c.word = std::move(w);
    for (const auto& e : j.at("stages")) {
        StageSummary s;
        s.a = e.at("a").get<std::string>();
        s.b = e.at("b").get<std::string>();
        s.b_tilde = e.at("b_tilde").get<std::string>();
        s.c = e.at("c").get<std::string>();
        s.d = e.at("d").get<std::string>();
        s.elementary_decomposed = e.at("block_status").get<std::string>() == "ELEMENTARY-DECOMPOSED";
        c.stages.push_back(std::move(s));
    }
    c.verified = j.value("verified", false);
    return c;
}

Json decision_to_json(const TameDecision& d, bool with_trace) {
    Json j;
    j["tame"] = d.tame;
    if (d.tame) {
        j["word"] = word_to_json(d.word)["generators"];
    } else {
        j["fail_step"] = d.fail_step;
        j["detail"] = d.detail;
        j["d1"] = d.obstruction_d1;
        j["d2"] = d.obstruction_d2;
    }
    if (with_trace) {
        Json tr = Json::array();
        for (const auto& st : d.trace) {
            Json e;
            e["step"] = st.step;
            Json before = Json::array();
            for (const auto& comp : st.before.components()) before.push_back(comp.to_string());
            e["before"] = std::move(before);
            e["degrees"] = Json::array({st.before.component(0).total_degree(),
                                        st.before.component(1).total_degree()});
            e["leading_forms"] =
                Json::array({st.before.component(0).leading_form().to_string(),
                             st.before.component(1).leading_form().to_string()});
            e["action"] = generator_to_json(st.action);
            e["note"] = st.note;
            tr.push_back(std::move(e));
        }
        j["trace"] = std::move(tr);
    }
    return j;
}

Json length3_to_json(const Length3Data& d) {
    Json j;
    j["ring"] = d.ring.tag();
    j["b"] = d.b.to_string();
    j["A1"] = d.A1.to_string();
    j["A2"] = d.A2.to_string();
    j["D"] = d.D.to_string();
    j["swapped"] = d.swapped;
    return j;
}

}  // namespace tame
