#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zz/braid.hpp"
#include "zz/homology.hpp"

#include <random>

using namespace zz;

namespace {

std::vector<int> random_word(std::mt19937& rng, int gens, int len) {
    std::uniform_int_distribution<int> g(1, gens), s(0, 1);
    std::vector<int> w;
    for (int i = 0; i < len; ++i)
        w.push_back(g(rng) * (s(rng) ? 1 : -1));
    return w;
}

}  // namespace

TEST_CASE("poincare of P_j with itself matches the hom-space dimensions") {
    Algebra b(AlgTag::B, 3);
    Complex p1 = Complex::projective(b, 1);
    CHECK(poincare(p1, p1) == laurent_from_text(Grading::TRI, "1 + q2"));
    for (int j = 2; j <= 3; ++j) {
        Complex pj = Complex::projective(b, j);
        CHECK(poincare(pj, pj) == laurent_from_text(Grading::TRI, "1 + q2 + q3 + q2*q3"));
    }
    Complex p2 = Complex::projective(b, 2);
    CHECK(poincare(p1, p2) == laurent_from_text(Grading::TRI, "1 + q3"));
    Complex p3 = Complex::projective(b, 3);
    CHECK(poincare(p1, p3).is_zero());
}

TEST_CASE("specialized poincare of HOM(P2, P2) at 1 counts the basis of e2 B e2") {
    Algebra b(AlgTag::B, 2);
    Complex p2 = Complex::projective(b, 2);
    Laurent p = poincare(p2, p2);
    CHECK(p.at_one() == (Integer)b.hom_basis(2, 2).size());
    CHECK(p.at_one() == 4);
}

TEST_CASE("poincare of sigma_j(P_j) against the hand computation") {
    // sigma_j(P_j) = P_j[1]{1}: each basis morphism (e_j or X_j) lands in
    // s1 = -1 with internal degree shifted up by one.
    Algebra a(AlgTag::A, 3);
    Complex pj = Complex::projective(a, 2);
    Complex spj = apply_generator(pj, 2);
    Laurent p = poincare(pj, spj);
    Laurent expect(Grading::BI);
    expect.add_term({-1, 1, 0}, 1);
    expect.add_term({-1, 2, 0}, 1);
    CHECK(p == expect);
    // Type B with the q3 component, j >= 2: q1^-1 q2 (1+q2)(1+q3).
    Algebra b(AlgTag::B, 2);
    Complex p2 = Complex::projective(b, 2);
    Laurent pb = poincare(p2, apply_generator(p2, 2));
    Laurent want = Laurent::monomial(Grading::TRI, {-1, 1, 0}) *
                   laurent_from_text(Grading::TRI, "1 + q2") *
                   laurent_from_text(Grading::TRI, "1 + q3");
    CHECK(pb == want);
}

TEST_CASE("homotopy invariance of poincare on random words") {
    std::mt19937 rng(5);
    Algebra b(AlgTag::B, 2);
    for (int trial = 0; trial < 6; ++trial) {
        auto w0 = random_word(rng, 2, 2);
        auto w1 = random_word(rng, 2, 2);
        Complex c = apply_word(Complex::projective(b, 1 + trial % 2), w0);
        Complex d = apply_word(Complex::projective(b, 1 + (trial + 1) % 2), w1);
        // minimize is built into apply_word; compare against re-minimized.
        CHECK(poincare(c, d) == poincare(minimize(c), minimize(d)));
        // d^2 = 0 on the hom complex: verified via H computation consistency
        Laurent p = poincare(c, d);
        Laurent e = hom_euler(c, d);
        // Euler characteristic agrees with the alternating sum of H-dims.
        Laurent alt(Grading::TRI);
        for (const auto& [ex, co] : p.terms()) {
            Integer c2 = (ex[0] % 2 == 0) ? co : -co;
            alt.add_term({0, ex[1], ex[2]}, c2);
        }
        CHECK(alt == e);
    }
}

TEST_CASE("equivariance of poincare under the braid action") {
    std::mt19937 rng(9);
    Algebra b(AlgTag::B, 2);
    for (int trial = 0; trial < 4; ++trial) {
        Complex c = apply_word(Complex::projective(b, 1), random_word(rng, 2, 2));
        Complex d = apply_word(Complex::projective(b, 2), random_word(rng, 2, 2));
        for (int g = 1; g <= 2; ++g) {
            CHECK(poincare(apply_generator(c, g), apply_generator(d, g)) ==
                  poincare(c, d));
        }
    }
}
