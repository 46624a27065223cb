#pragma once

#include "zz/scalars.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace zz {

// Grading groups carrying intersection numbers, Poincare polynomials and K0:
//   TRI = Z x Z x Z/2   (q1, q2, q3 with q3^2 = 1)
//   BI  = Z x Z         (q1, q2)
//   KB  = Z x Z/2       (q, s with s^2 = 1)
//   KA  = Z             (q)
enum class Grading { TRI, BI, KB, KA };

int grading_vars(Grading g);
bool grading_has_torsion(Grading g);  // last used variable is Z/2
const char* grading_var_name(Grading g, int idx);

using Expo = std::array<int, 3>;

// Laurent polynomial with integer coefficients over one of the grading groups.
class Laurent {
  public:
    explicit Laurent(Grading g = Grading::TRI) : tag_(g) {}

    static Laurent zero(Grading g) { return Laurent(g); }
    static Laurent one(Grading g) { return monomial(g, {0, 0, 0}); }
    static Laurent monomial(Grading g, Expo e, Integer c = 1);

    Grading tag() const { return tag_; }
    const std::map<Expo, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Expo e, const Integer& c);

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent operator-() const;

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Ring map determined by sending each variable to 1, -1, or a variable of
    // the target grading group (index into the target's variables, or SET_ONE
    // / SET_NEG_ONE). Exponent images add up; torsion reduced in the target.
    struct Assignment {
        // For each source variable: target variable index, or -1 => 1, -2 => -1.
        std::array<int, 3> image;
    };
    Laurent specialize(Grading target, const Assignment& a) const;

    // Convenience: TRI -> BI by q3 -> 1.
    Laurent q3_to_one() const;
    // Evaluate all variables at 1 (integer result).
    Integer at_one() const;

    // Canonical text rendering, terms sorted lexicographically by exponent
    // tuple, e.g. "1 + q3 + q1^-1*q2*q3".
    std::string text() const;

  private:
    void reduce(Expo& e) const;

    Grading tag_;
    std::map<Expo, Integer> terms_;  // no zero coefficients stored
};

Laurent laurent_from_text(Grading g, const std::string& s);  // used by tests/CLI

}  // namespace zz
