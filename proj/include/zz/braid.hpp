#pragma once

#include "zz/complex.hpp"

#include <vector>

namespace zz {

// Signed generator letters: +j for sigma_j, -j for sigma_j^{-1}.
struct BraidWord {
    AlgTag side = AlgTag::B;
    int rank = 2;  // n for type B, vertex count m for type A
    std::vector<int> letters;

    int generators() const { return side == AlgTag::B ? rank : rank; }
    BraidWord inverse() const;
    bool valid() const;
};

// sigma_j^{+-1} applied to a complex, minimized. For type B, j = 1 carries the
// extra <1>.
Complex apply_generator(const Complex& c, int letter);

// Letters act in list order (first letter first).
Complex apply_word(const Complex& c, const std::vector<int>& letters);

// Bare cone functors R_j / R_j' without the <1> on j = 1.
Complex apply_generator_r(const Complex& c, int letter);
Complex apply_word_r(const Complex& c, const std::vector<int>& letters);

// Word homomorphism Psi: A(B_n) -> A(A_{2n-1}):
//   sigma_1 -> sigma_n;  sigma_j -> sigma_{n-(j-1)} sigma_{n+(j-1)} (j >= 2);
// inverse letters reversed and negated.
std::vector<int> psi(int n, const std::vector<int>& letters);

// Temperley-Lieb functor U_j in the path-length grading; input must carry
// pl_mode (the unshifted sum of projectives qualifies).
Complex apply_tl(const Complex& c, int j);

// Free reduction (cancel adjacent x x^{-1}).
std::vector<int> free_reduce(std::vector<int> letters);

}  // namespace zz
