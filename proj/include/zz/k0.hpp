#pragma once

#include "zz/braid.hpp"
#include "zz/complex.hpp"
#include "zz/laurent.hpp"

#include <vector>

namespace zz {

// Class of a complex in K0, coordinates indexed by vertex (0-based vector)
// over Z[q,q^-1,s]/(s^2-1) (type B; s reduced to 1 at vertices >= 2) or
// Z[q,q^-1] (type A). Dictionary: [C[1]] = -[C], [C{1}] = q[C], [C<1>] = s[C].
struct K0Vector {
    Grading tag;  // KB or KA
    std::vector<Laurent> coord;

    friend bool operator==(const K0Vector&, const K0Vector&) = default;
};

K0Vector k0_class(const Complex& c);

using K0Matrix = std::vector<std::vector<Laurent>>;  // row-major, square

// Matrix of sigma_j (letter sign respected) on K0, columns = classes of
// sigma_j(P_k), computed through the functor.
K0Matrix rep_matrix(const Algebra& alg, int letter);

K0Matrix k0_identity(Grading g, int n);
K0Matrix k0_mul(const K0Matrix& a, const K0Matrix& b);
K0Vector k0_apply(const K0Matrix& m, const K0Vector& v);
bool k0_equal(const K0Matrix& a, const K0Matrix& b);

// K0 of the extension of scalars: (2n-1) x n matrix T with
// [P^B_1] -> [P^A_n], [P^B_j] -> [P^A_{n-(j-1)}] + [P^A_{n+(j-1)}].
K0Matrix tensor_matrix(int n);

// s -> 1 on a KB matrix/vector, landing in KA.
K0Matrix kb_to_ka(const K0Matrix& m);
K0Vector kb_to_ka(const K0Vector& v);

struct DecatReport {
    bool ok;
    std::vector<std::string> lines;
};

// Checks T . rho_KB(sigma)|_{s->1} = rho_KA(psi(sigma)) . T for all
// generators, plus the printed nontrivial blocks of rho_KB(sigma_1) and
// rho_KB(sigma_n).
DecatReport check_decat_square(int n);

}  // namespace zz
