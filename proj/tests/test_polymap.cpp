#include <doctest.h>

#include "testutil.hpp"

using namespace tame;
using tame::testutil::M;
using tame::testutil::P;

TEST_CASE("Nagata golden composition: N = F1^{-1} o F2 o F1") {
    Ring K = Ring::FracQt();
    PolyMap F1 = M("(X, Y + X^2/t)", K);
    PolyMap F1inv = M("(X, Y - X^2/t)", K);
    PolyMap F2 = M("(X + t^2*Y, Y)", K);
    PolyMap N = compose(F1inv, compose(F2, F1));
    CHECK(N == testutil::nagata().to_fraction_field());
    // integral over Q[t]
    CHECK(N.to_base_ring() == testutil::nagata());
}

TEST_CASE("compose basics") {
    Ring Z = Ring::Z();
    PolyMap id = PolyMap::identity(Z, 2);
    CHECK(compose(id, id) == id);
    PolyMap F = M("(X + Y^2, Y)", Z);
    CHECK(compose(F, id) == F);
    CHECK(compose(id, F) == F);
}

TEST_CASE("extend") {
    PolyMap N = testutil::nagata();
    PolyMap Ne = extend(N, 1);
    CHECK(Ne.nvars() == 3);
    CHECK(Ne.component(2) == MultiPoly::variable(Ring::Qt(), 3, 2));
    CHECK(extend(N, 0) == N);
    CHECK(extend(PolyMap::identity(Ring::Z(), 2), 2) == PolyMap::identity(Ring::Z(), 4));
}

TEST_CASE("jacobian determinants") {
    CHECK(jacobian_det(testutil::nagata()) == P("1", Ring::Qt()));
    CHECK(jacobian_det(M("(2*X, Y)", Ring::Z())) == P("2", Ring::Z()));
    CHECK(jacobian_det(M("(Y, X)", Ring::Z())) == P("-1", Ring::Z()));
}

TEST_CASE("witnessed automorphism check") {
    Ring Qt = Ring::Qt();
    PolyMap N = testutil::nagata();
    // Lemma 5 closed form of the inverse with b=t, A1=X^2, A2=-X^2, D=tY:
    // F^{-1} = (X - D(bY - A2(X)), Y - A2(X)/b - A1(X - D(bY - A2(X)))/b)
    // over K; here it is integral.
    PolyMap Ninv = M("(X - t*(t*Y + X^2), Y + 2*X*(t*Y + X^2) - t*(t*Y + X^2)^2)", Qt);
    CHECK(is_automorphism_witnessed(N, Ninv));
    CHECK(!is_automorphism_witnessed(N, PolyMap::identity(Qt, 2)));
}

TEST_CASE("tame words evaluate and invert") {
    Ring Z = Ring::Z();
    testutil::WordGen gen(Z, 777);
    for (int trial = 0; trial < 25; ++trial) {
        // the round trip composes F with F^{-1}, squaring the degree, so the
        // word degree cap stays small here
        TameWord w = gen.word(8, 3, 10);
        PolyMap F = w.eval();
        PolyMap Finv = w.inverted().eval();
        CHECK(compose(Finv, F).is_identity());
        CHECK(compose(F, Finv).is_identity());
        // every tame word has unit Jacobian determinant
        MultiPoly j = jacobian_det(F);
        CHECK(j.is_constant());
        CHECK(j.constant_value().is_unit());
    }
}

TEST_CASE("generator validation") {
    Ring Z = Ring::Z();
    CHECK_THROWS_AS(validate_generator(ElementaryGen{0, P("X", Z)}, Z, 2), PreconditionError);
    MultiPoly one = P("1", Z), zero = P("0", Z), two = P("2", Z);
    CHECK_THROWS_AS(validate_generator(LinearBlockGen{{0, 1}, {{two, zero}, {zero, one}}}, Z, 2),
                    PreconditionError);
    CHECK_NOTHROW(validate_generator(LinearBlockGen{{0, 1}, {{one, two}, {zero, one}}}, Z, 2));
    CHECK_THROWS_AS(validate_generator(DiagonalGen{Scalar(Z, 2), 0}, Z, 2), PreconditionError);
}

TEST_CASE("word for Nagata evaluates to N") {
    Ring K = Ring::FracQt();
    MultiPoly f1 = parse_poly("X^2/t", K, 2);
    TameWord w(K, 2);
    w.push_back(ElementaryGen{1, -f1});                       // F1^{-1}
    w.push_back(ElementaryGen{0, parse_poly("t^2*Y", K, 2)}); // F2
    w.push_back(ElementaryGen{1, f1});                        // F1
    CHECK(w.eval() == testutil::nagata().to_fraction_field());
}

TEST_CASE("anti-isomorphism sanity: (FoG)*(p) = G*(F*(p)) composed the right way") {
    Ring Z = Ring::Z();
    testutil::WordGen gen(Z, 4242);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMap F = gen.word(4, 3, 8).eval();
        PolyMap G = gen.word(4, 3, 8).eval();
        MultiPoly p(Z, 2);
        std::uniform_int_distribution<int> c(-5, 5);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j) p.add_term({i, j}, Scalar(Z, c(gen.rng())));
        CHECK(compose(F, G).apply(p) == G.apply(F.apply(p)));
    }
}

TEST_CASE("composition associativity on random triples") {
    Ring Z = Ring::Z();
    testutil::WordGen gen(Z, 99);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMap F = gen.word(3, 2, 4).eval(), G = gen.word(3, 2, 4).eval(),
                H = gen.word(3, 2, 4).eval();
        CHECK(compose(compose(F, G), H) == compose(F, compose(G, H)));
    }
}
