#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zz/laurent.hpp"

#include <random>

using namespace zz;

namespace {

Laurent random_poly(std::mt19937& rng, Grading g) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coeff(-5, 5);
    Laurent p(g);
    int nv = grading_vars(g);
    for (int t = nterms(rng); t > 0; --t) {
        Expo e{0, 0, 0};
        for (int k = 0; k < nv; ++k)
            e[k] = expo(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("q3 torsion forces (1+q3)^2 = 2+2q3") {
    Laurent one = Laurent::one(Grading::TRI);
    Laurent q3 = Laurent::monomial(Grading::TRI, {0, 0, 1});
    Laurent p = one + q3;
    Laurent sq = p * p;
    Laurent expect = Laurent::monomial(Grading::TRI, {0, 0, 0}, 2) +
                     Laurent::monomial(Grading::TRI, {0, 0, 1}, 2);
    CHECK(sq == expect);
}

TEST_CASE("basic trigrading product (1+q3)(1+q1^-1 q2)") {
    Laurent a = laurent_from_text(Grading::TRI, "1 + q3");
    Laurent b = laurent_from_text(Grading::TRI, "1 + q1^-1*q2");
    Laurent c = laurent_from_text(Grading::TRI, "1 + q3 + q1^-1*q2 + q1^-1*q2*q3");
    CHECK(a * b == c);
}

TEST_CASE("identity and ring axioms on random triples") {
    std::mt19937 rng(7);
    for (Grading g : {Grading::TRI, Grading::BI, Grading::KB, Grading::KA}) {
        Laurent one = Laurent::one(g);
        for (int it = 0; it < 40; ++it) {
            Laurent a = random_poly(rng, g), b = random_poly(rng, g), c = random_poly(rng, g);
            CHECK(a * one == a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(11);
    Laurent::Assignment tri_to_bi{{0, 1, -1}};
    Laurent::Assignment tri_to_ka{{-1, 0, -1}};  // q1->1, q2->q, q3->1
    for (int it = 0; it < 40; ++it) {
        Laurent a = random_poly(rng, Grading::TRI), b = random_poly(rng, Grading::TRI);
        CHECK((a * b).specialize(Grading::BI, tri_to_bi) ==
              a.specialize(Grading::BI, tri_to_bi) * b.specialize(Grading::BI, tri_to_bi));
        CHECK((a * b).specialize(Grading::KA, tri_to_ka) ==
              a.specialize(Grading::KA, tri_to_ka) * b.specialize(Grading::KA, tri_to_ka));
    }
}

TEST_CASE("specialization of monomials at 1") {
    Laurent m = Laurent::monomial(Grading::TRI, {5, -3, 1});
    CHECK(m.at_one() == 1);
    Laurent::Assignment all_one{{-1, -1, -1}};
    CHECK(m.specialize(Grading::KA, all_one) == Laurent::one(Grading::KA));
}

TEST_CASE("canonical rendering") {
    Laurent p = laurent_from_text(Grading::TRI, "q1^-1*q2*q3 + q3 + 1");
    CHECK(p.text() == "1 + q3 + q1^-1*q2*q3");
    CHECK(laurent_from_text(Grading::TRI, p.text()) == p);
    Laurent z(Grading::KB);
    CHECK(z.text() == "0");
}

TEST_CASE("gauss rationals form a field and conjugation works") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int it = 0; it < 60; ++it) {
        Gauss a(Rational(d(rng)), Rational(d(rng)));
        Gauss b(Rational(d(rng)), Rational(d(rng)));
        Gauss ab = a * b;
        CHECK((ab * ab.conj()).is_real());
        if (!b.is_zero()) {
            CHECK(b * b.inv() == Gauss(1));
            CHECK(ab / b == a);
        }
    }
    CHECK(Gauss::i() * Gauss::i() == Gauss(-1));
}
