#pragma once

#include "zz/algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace zz {

// Generator P_{vertex}[-r']{s}<t> sitting in cohomological degree r.
struct Gen {
    int vertex;
    int r;
    int s;
    int t;

    friend auto operator<=>(const Gen&, const Gen&) = default;
};

// Bounded complex of shifted indecomposable projectives. A differential entry
// (g -> h) requires h.r = g.r + 1, lies in e_{g.v} Alg e_{h.v}, and is
// homogeneous with deg = g.s - h.s and z2 = g.t + h.t (mod 2).
class Complex {
  public:
    Complex(const Algebra& alg, bool pl_mode = false) : alg_(&alg), pl_(pl_mode) {}

    static Complex projective(const Algebra& alg, int vertex, int r = 0, int s = 0,
                              int t = 0);
    static Complex sum_of_projectives(const Algebra& alg);  // (+)_j P_j

    const Algebra& algebra() const { return *alg_; }
    bool pl_mode() const { return pl_; }
    int size() const { return (int)gens_.size(); }
    const Gen& gen(int i) const { return gens_[i]; }
    const std::vector<Gen>& gens() const { return gens_; }
    const std::map<std::pair<int, int>, Elem>& diff() const { return diff_; }

    int add_gen(const Gen& g);
    void add_diff(int from, int to, const Elem& e);  // accumulates
    Elem diff_entry(int from, int to) const;

    struct Violation {
        std::string what;
    };
    std::vector<Violation> check() const;  // empty iff well-formed with d^2 = 0
    void assert_valid(const char* where) const;

    Complex shifted(int a, int b, int c) const;  // [a]{b}<c>
    friend Complex direct_sum(const Complex& x, const Complex& y);

    // Graded multiset of generators, sorted.
    std::vector<Gen> sorted_gens() const;
    // Same, with t normalized away at vertices where P_j<1> = P_j (type B,
    // j >= 2); invariant under isomorphism.
    std::vector<Gen> iso_key_gens() const;

    std::string describe() const;

  private:
    const Algebra* alg_;
    bool pl_;
    std::vector<Gen> gens_;
    std::map<std::pair<int, int>, Elem> diff_;
};

// A chain map of degree (r0, s0, t0): entries (g -> h) with h.r = g.r + r0,
// homogeneous of degree g.s - h.s + s0 and z2 g.t + h.t + t0, satisfying
// d_Y f = (-1)^{r0} f d_X.
struct ChainMap {
    const Complex* src = nullptr;
    const Complex* dst = nullptr;
    int r0 = 0, s0 = 0, t0 = 0;
    std::map<std::pair<int, int>, Elem> entries;  // (src gen, dst gen)
};

Complex mapping_cone(const ChainMap& f);  // degree (0,0,0) maps only

// Gaussian elimination of invertible differential entries; homotopy
// equivalent minimal complex. Deterministic scan order.
Complex minimize(const Complex& c);

// Basis of the space of degree-(r0,s0,t0) chain maps from X to Y.
std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y, int r0, int s0,
                                      int t0);

bool compose_is_identity(const ChainMap& f, const ChainMap& g);  // g o f = id_src?

enum class IsoVerdict { Yes, No, Inconclusive };

using MapEntries = std::map<std::pair<int, int>, Elem>;

struct IsoResult {
    IsoVerdict verdict;
    Complex min_lhs, min_rhs;
    // For Yes: entries of mutually inverse degree-(0,0,0) chain maps between
    // the minimized complexes, verified exactly.
    std::optional<std::pair<MapEntries, MapEntries>> certificate;
};

IsoResult is_isomorphic(const Complex& c, const Complex& d, int retries = 24);

bool isomorphic(const Complex& c, const Complex& d);  // verdict == Yes

}  // namespace zz
