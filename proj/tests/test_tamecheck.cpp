#include <doctest.h>

#include "tame/tamecheck.hpp"
#include "testutil.hpp"

using namespace tame;
using tame::testutil::M;

TEST_CASE("Nagata is not tame over Q[t]: step-6 obstruction with degrees (2,4)") {
    TameDecision d = tame2(testutil::nagata());
    CHECK(!d.tame);
    CHECK(d.fail_step == 6);
    CHECK(d.obstruction_d1 == 2);
    CHECK(d.obstruction_d2 == 4);
    CHECK(d.detail.find("h1=t*X^2") != std::string::npos);
    CHECK(d.detail.find("h2=-t*X^4") != std::string::npos);
    CHECK(d.detail.find("required c=-1/t") != std::string::npos);
}

TEST_CASE("identity and simple maps are tame") {
    Ring Z = Ring::Z();
    TameDecision d = tame2(PolyMap::identity(Z, 2));
    CHECK(d.tame);
    CHECK(d.word.eval().is_identity());

    TameDecision e = tame2(M("(X, Y + X^3)", Z));
    CHECK(e.tame);
    CHECK(e.word.eval() == M("(X, Y + X^3)", Z));

    TameDecision s = tame2(M("(Y, X)", Z));
    CHECK(s.tame);
}

TEST_CASE("degenerate inputs fail the pre-scan") {
    Ring Z = Ring::Z();
    TameDecision d = tame2(M("(X, 3)", Z));
    CHECK(!d.tame);
    CHECK(d.fail_step == 0);
}

TEST_CASE("non-unit Jacobian fails at step 7") {
    Ring Z = Ring::Z();
    TameDecision d = tame2(M("(2*X, Y)", Z));
    CHECK(!d.tame);
    CHECK(d.fail_step == 7);
    PolyMap bad = M("(X + Y, X - Y)", Z);  // det -2, not a unit of Z
    TameDecision e = tame2(bad);
    CHECK(!e.tame);
    CHECK(e.fail_step == 7);
}

TEST_CASE("tame round trip on random words over Z") {
    testutil::WordGen gen(Ring::Z(), 1234);
    for (int trial = 0; trial < 40; ++trial) {
        TameWord w = gen.word(6, 4, 64);
        PolyMap F = w.eval();
        TameDecision d = tame2(F);
        CHECK(d.tame);
        if (!d.tame) {
            INFO("failing map: " << F.to_string());
            CHECK(d.detail == "");
            break;
        }
        CHECK(d.word.eval() == F);
    }
}

TEST_CASE("tame round trip on random words over Q[t]") {
    testutil::WordGen gen(Ring::Qt(), 555);
    for (int trial = 0; trial < 15; ++trial) {
        TameWord w = gen.word(5, 3, 32);
        PolyMap F = w.eval();
        TameDecision d = tame2(F);
        CHECK(d.tame);
        if (d.tame) CHECK(d.word.eval() == F);
    }
}

TEST_CASE("random automorphisms over Q are always tame (Jung-van der Kulk)") {
    testutil::WordGen gen(Ring::Q(), 31415);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMap F = gen.word(6, 3, 48).eval();
        TameDecision d = tame2(F);
        CHECK(d.tame);
        MultiPoly j = jacobian_det(F);
        CHECK(j.is_constant());
        CHECK(j.constant_value().is_unit());
    }
}

TEST_CASE("trace replay reproduces intermediates and tdeg strictly decreases") {
    testutil::WordGen gen(Ring::Z(), 2718);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMap F = gen.word(5, 3, 32).eval();
        TameDecision d = tame2(F);
        REQUIRE(d.tame);
        PolyMap cur = F;
        int tdeg = cur.component(0).total_degree() + cur.component(1).total_degree();
        for (const auto& st : d.trace) {
            CHECK(st.before == cur);
            cur = compose(generator_to_map(st.action, F.ring(), 2), cur);
            int nt = cur.component(0).total_degree() + cur.component(1).total_degree();
            if (st.step != 5) {
                CHECK(nt < tdeg);
                tdeg = nt;
            }
        }
    }
}

TEST_CASE("affine reduction search finds proportional leading forms") {
    Ring Z = Ring::Z();
    // h2 = 2 h1
    PolyMap F = M("(X^2 + Y, 2*X^2 + X)", Z);
    auto tau = affine_reduction_search(F);
    REQUIRE(tau.has_value());
    PolyMap red = compose(generator_to_map(*tau, Z, 2), F);
    CHECK(red.component(0).total_degree() + red.component(1).total_degree() < 4);
    // independent leading forms: no affine reduction exists
    PolyMap G = M("(X^2 + Y, Y^2 + X)", Z);
    CHECK(!affine_reduction_search(G).has_value());
}

TEST_CASE("non-integral affine ratio still reduces via unimodular completion") {
    Ring Z = Ring::Z();
    // leading forms 2*X^2 and 3*X^2: ratio 3/2, neither it nor its inverse in Z
    PolyMap F = M("(2*X^2 + Y, 3*X^2 + X)", Z);
    auto tau = affine_reduction_search(F);
    REQUIRE(tau.has_value());
    PolyMap red = compose(generator_to_map(*tau, Z, 2), F);
    int t = red.component(0).total_degree() + red.component(1).total_degree();
    CHECK(t < 4);
}
