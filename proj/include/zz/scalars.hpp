#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <sstream>
#include <string>

namespace zz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of Q(i). Type B data keeps im == 0 throughout.
struct Gauss {
    Rational re;
    Rational im;

    Gauss() = default;
    Gauss(int v) : re(v) {}
    Gauss(Rational r) : re(std::move(r)) {}
    Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gauss i() { return Gauss(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gauss conj() const { return Gauss(re, -im); }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss& operator+=(const Gauss& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gauss& operator-=(const Gauss& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gauss& operator*=(const Gauss& o) { return *this = *this * o; }

    Gauss inv() const {
        Rational n = re * re + im * im;  // norm, nonzero for nonzero input
        return Gauss(re / n, -im / n);
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inv(); }

    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

std::string to_string(const Rational& r);
// Renders e.g. "1", "-i", "1/2+3i", "2-i".
std::string to_string(const Gauss& g);

std::ostream& operator<<(std::ostream& os, const Gauss& g);

}  // namespace zz
