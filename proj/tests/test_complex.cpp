#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zz/complex.hpp"

using namespace zz;

TEST_CASE("single generator with empty differential is a complex") {
    Algebra b(AlgTag::B, 2);
    Complex c = Complex::projective(b, 1);
    CHECK(c.check().empty());
}

TEST_CASE("two P1 generators joined by X1 with s-gap 1") {
    Algebra b(AlgTag::B, 2);
    Complex c(b);
    int g0 = c.add_gen({1, 0, 1, 0});
    int g1 = c.add_gen({1, 1, 0, 0});
    c.add_diff(g0, g1, b.from_path(b.path_id(PathKind::X, 1, 1)));
    CHECK(c.check().empty());
    // deg X1 = 1 = s-gap; breaking the gap must be flagged
    Complex bad(b);
    int h0 = bad.add_gen({1, 0, 0, 0});
    int h1 = bad.add_gen({1, 1, 0, 0});
    bad.add_diff(h0, h1, b.from_path(b.path_id(PathKind::X, 1, 1)));
    CHECK(!bad.check().empty());
}

TEST_CASE("the four-term complex of the one-string loop closes up") {
    // d_{ad} d_{db} + d_{ac} d_{cb} = X2 i - X2 i = 0
    Algebra alg(AlgTag::B, 2);
    Complex c(alg);
    int b = c.add_gen({2, 0, 1, 0});
    int d = c.add_gen({1, 1, 0, 0});  // paired 1-crossings d, c2
    int c2 = c.add_gen({1, 1, 0, 1});
    int a = c.add_gen({2, 2, 0, 1});
    c.add_diff(b, d, alg.elem_from_text("(2|1)"));
    c.add_diff(b, c2,
               alg.scale(Gauss(-1), alg.from_path(alg.path_id(PathKind::ARRI, 2, 1))));
    c.add_diff(d, a, alg.from_path(alg.path_id(PathKind::ARRI, 1, 2)));
    c.add_diff(c2, a, alg.elem_from_text("(1|2)"));
    CHECK(c.check().empty());
}

TEST_CASE("shift inverses and K0-relevant bookkeeping") {
    Algebra b(AlgTag::B, 3);
    Complex c(b);
    int g0 = c.add_gen({2, 0, 0, 0});
    int g1 = c.add_gen({3, 1, 0, 1});
    c.add_diff(g0, g1, b.from_path(b.path_id(PathKind::ARRI, 2, 3)));
    CHECK(c.check().empty());
    Complex s = c.shifted(1, 0, 0).shifted(-1, 0, 0);
    CHECK(s.sorted_gens() == c.sorted_gens());
    CHECK(s.diff() == c.diff());
    Complex t = c.shifted(0, 0, 1);
    CHECK(t.gen(0).t == 1);
    CHECK(t.check().empty());
}

TEST_CASE("minimize eliminates an identity pair (hand oracle)") {
    // 0 -> P1 (+) P1{1} --[id, X1]--> P1 -> 0  reduces to P1{1}.
    Algebra b(AlgTag::B, 2);
    Complex c(b);
    int a0 = c.add_gen({1, 0, 0, 0});
    int a1 = c.add_gen({1, 0, 1, 0});
    int t0 = c.add_gen({1, 1, 0, 0});
    c.add_diff(a0, t0, b.from_path(b.idem(1)));
    c.add_diff(a1, t0, b.from_path(b.path_id(PathKind::X, 1, 1)));
    CHECK(c.check().empty());
    Complex m = minimize(c);
    REQUIRE(m.size() == 1);
    CHECK(m.gen(0) == Gen{1, 0, 1, 0});
    CHECK(m.diff().empty());
    // idempotent
    Complex mm = minimize(m);
    CHECK(mm.sorted_gens() == m.sorted_gens());
}

TEST_CASE("minimize eliminates invertible ie entries too") {
    Algebra b(AlgTag::B, 2);
    Complex c(b);
    int a0 = c.add_gen({2, 0, 0, 0});
    int t0 = c.add_gen({2, 1, 0, 1});
    c.add_diff(a0, t0, b.from_path(b.path_id(PathKind::IE, 2, 2), Gauss(3)));
    CHECK(c.check().empty());
    Complex m = minimize(c);
    CHECK(m.size() == 0);
}

TEST_CASE("chain map space of P_j to itself is 1-dimensional in degree 0") {
    Algebra b(AlgTag::B, 3);
    for (int j = 1; j <= 3; ++j) {
        Complex p = Complex::projective(b, j);
        auto sp = chain_map_space(p, p, 0, 0, 0);
        CHECK(sp.size() == 1);
    }
    Complex p1 = Complex::projective(b, 1);
    Complex p3 = Complex::projective(b, 3);
    CHECK(chain_map_space(p1, p3, 0, 0, 0).empty());
    // and in every degree: e_1 B e_3 = 0
    for (int s = -2; s <= 2; ++s)
        CHECK(chain_map_space(p1, p3, 0, s, 0).empty());
}

TEST_CASE("cone K0 identity and d^2") {
    Algebra b(AlgTag::B, 2);
    Complex x = Complex::projective(b, 1, 0, 1, 0);
    Complex y = Complex::projective(b, 1);
    ChainMap f;
    f.src = &x;
    f.dst = &y;
    f.entries[{0, 0}] = b.from_path(b.path_id(PathKind::X, 1, 1));
    Complex cone = mapping_cone(f);
    CHECK(cone.check().empty());
    REQUIRE(cone.size() == 2);
    CHECK(cone.gen(0).r == -1);
    CHECK(cone.gen(1).r == 0);
}

TEST_CASE("is_isomorphic is reflexive and distinguishes shifts") {
    Algebra b(AlgTag::B, 2);
    Complex c(b);
    int g0 = c.add_gen({1, 0, 0, 0});
    int g1 = c.add_gen({2, 1, 0, 0});
    c.add_diff(g0, g1, b.elem_from_text("(1|2)"));
    auto self = is_isomorphic(c, c);
    CHECK(self.verdict == IsoVerdict::Yes);
    auto shifted = is_isomorphic(c, c.shifted(0, 1, 0));
    CHECK(shifted.verdict == IsoVerdict::No);
    // <1> on an all-vertex->=2 complex is isomorphic to the original
    Complex p2 = Complex::projective(b, 2);
    auto tw = is_isomorphic(p2, p2.shifted(0, 0, 1));
    CHECK(tw.verdict == IsoVerdict::Yes);
    // ... but not on P1
    Complex p1 = Complex::projective(b, 1);
    CHECK(is_isomorphic(p1, p1.shifted(0, 0, 1)).verdict == IsoVerdict::No);
}

TEST_CASE("certificates compose to the identity") {
    Algebra b(AlgTag::B, 2);
    Complex c(b);
    int g0 = c.add_gen({2, 0, 1, 0});
    int g1 = c.add_gen({1, 1, 0, 0});
    c.add_diff(g0, g1, b.elem_from_text("(2|1)"));
    auto r = is_isomorphic(c, c);
    REQUIRE(r.verdict == IsoVerdict::Yes);
    REQUIRE(r.certificate.has_value());
    ChainMap f, g;
    f.src = &r.min_lhs;
    f.dst = &r.min_rhs;
    f.entries = r.certificate->first;
    g.src = &r.min_rhs;
    g.dst = &r.min_lhs;
    g.entries = r.certificate->second;
    CHECK(compose_is_identity(f, g));
    CHECK(compose_is_identity(g, f));
}
