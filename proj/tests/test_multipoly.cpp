#include <doctest.h>

#include "testutil.hpp"

using namespace tame;
using tame::testutil::P;

TEST_CASE("arithmetic canonical form") {
    Ring Z = Ring::Z();
    CHECK(P("(X + Y)*(X - Y)", Z) == P("X^2 - Y^2", Z));
    CHECK(P("X + Y", Z) + P("X - Y", Z) == P("2*X", Z));
    CHECK((P("X", Z) - P("X", Z)).is_zero());
}

TEST_CASE("exact division") {
    Ring Qt = Ring::Qt();
    // (t X^2 + t^2 X Y)/t = X^2 + t X Y
    CHECK(P("t*X^2 + t^2*X*Y", Qt).exact_div(P("t", Qt)) == P("X^2 + t*X*Y", Qt));
    CHECK_THROWS_AS(P("X^2 + 1", Ring::Z()).exact_div(P("X", Ring::Z())), InexactDivisionError);
    Ring Z = Ring::Z();
    CHECK(P("X^2 - Y^2", Z).exact_div(P("X - Y", Z)) == P("X + Y", Z));
}

TEST_CASE("substitute") {
    Ring Qt = Ring::Qt();
    MultiPoly p = P("t*Y + X^2", Qt);
    MultiPoly img = p.substitute({P("X", Qt), P("Y + 1", Qt)});
    CHECK(img == P("t*Y + t + X^2", Qt));
    CHECK(P("X", Qt).substitute({P("Y^2", Qt), P("X", Qt)}) == P("Y^2", Qt));
}

TEST_CASE("degree conventions: t contributes zero") {
    Ring Qt = Ring::Qt();
    MultiPoly nagata_p = P("X + t^2*Y + t*X^2", Qt);
    CHECK(nagata_p.total_degree() == 2);
    CHECK(nagata_p.leading_form() == P("t*X^2", Qt));
    CHECK(MultiPoly::zero(Qt, 2).total_degree() == kNegInfinity);
    CHECK(P("t^5", Qt).total_degree() == 0);
}

TEST_CASE("derivative and eval_at_zero") {
    Ring Qt = Ring::Qt();
    CHECK(P("t*Y^2", Qt).derivative(1) == P("2*t*Y", Qt));
    CHECK(P("X^2*Y + Y", Qt).eval_at_zero(0) == P("Y", Qt));
    // D(Y) = tY has D'(0) = t
    MultiPoly D = P("t*Y", Qt);
    CHECK(D.derivative(1).eval_at_zero(1) == P("t", Qt));
}

TEST_CASE("clear_denominators") {
    // X^2/t over Q(t) -> (X^2, t)
    MultiPoly f = parse_poly("X^2/t", Ring::FracQt(), 2);
    auto [a, b] = f.clear_denominators();
    CHECK(a == P("X^2", Ring::Qt()));
    CHECK(b == Scalar::t(Ring::Qt()));

    // X/2 + X^2/4 over Frac(Z) -> (2X + X^2, 4)
    MultiPoly g = parse_poly("X/2 + X^2/4", Ring::FracZ(), 2);
    auto [a2, b2] = g.clear_denominators();
    CHECK(a2 == P("2*X + X^2", Ring::Z()));
    CHECK(b2 == Scalar(Ring::Z(), 4));

    // already integral
    MultiPoly h = parse_poly("X^2", Ring::FracQt(), 2);
    auto [a3, b3] = h.clear_denominators();
    CHECK(a3 == P("X^2", Ring::Qt()));
    CHECK(b3.is_one());

    // round trip: A/b = f
    MultiPoly back = a.to_fraction_field().mul_scalar(b.to_fraction_field().inverse());
    CHECK(back == f);
}

TEST_CASE("algebra properties on random instances") {
    Ring Z = Ring::Z();
    testutil::WordGen gen(Z, 20240601);
    auto rand_poly = [&](int deg) {
        MultiPoly p(Z, 2);
        std::uniform_int_distribution<int> c(-9, 9);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) p.add_term({i, j}, Scalar(Z, c(gen.rng())));
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly p = rand_poly(3), q = rand_poly(3), r = rand_poly(2);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        if (!q.is_zero()) CHECK((p * q).exact_div(q) == p);
        // substitute distributes over + and *
        std::vector<MultiPoly> args{rand_poly(2), rand_poly(2)};
        CHECK((p + q).substitute(args) == p.substitute(args) + q.substitute(args));
        CHECK((p * q).substitute(args) == p.substitute(args) * q.substitute(args));
    }
}

TEST_CASE("content and extension") {
    Ring Z = Ring::Z();
    CHECK(P("6*X + 4*Y^2", Z).content() == Scalar(Z, 2));
    MultiPoly e = P("X*Y", Z).extended(4);
    CHECK(e.nvars() == 4);
    CHECK(e.total_degree() == 2);
}
