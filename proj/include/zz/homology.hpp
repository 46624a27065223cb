#pragma once

#include "zz/complex.hpp"
#include "zz/laurent.hpp"

namespace zz {

// Internal HOM complex between projective complexes. Basis morphisms are
// triples (generator of C, generator of D, path); the differential is
// d(f) = d_D f - (-1)^{s1} f d_C, acting within each internal bidegree.
struct HomComplex {
    struct BasisMor {
        int gc, gd, path;
        int s1, s2, s3;
    };
    std::vector<BasisMor> basis;
    // d as a sparse matrix: for each basis index, list of (target index, coeff).
    std::vector<std::vector<std::pair<int, Gauss>>> d;
};

HomComplex hom_complex(const Complex& c, const Complex& d);

// Poincare polynomial of the cohomology of HOM*(C, D): TRI for type B,
// BI for type A, with q1 tracking s1 and (q2, q3) the internal bidegree.
Laurent poincare(const Complex& c, const Complex& d);

// Graded Euler characteristic of HOM*(C, D) (q1 -> -1 on the s1 grading).
Laurent hom_euler(const Complex& c, const Complex& d);

}  // namespace zz
