#pragma once

#include "zz/laurent.hpp"
#include "zz/scalars.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zz {

enum class AlgTag { A, B };

// Basis paths of the zigzag algebras, in normalized form.
//   E j        constant path e_j
//   IE j       loop ie_j                      (type B, j >= 2)
//   ARR u v    arrow (u|v), |u-v| = 1
//   ARRI u v   i-decorated arrow: (u|v)(ie_v) for v >= 2, (ie_2)(2|1) for v = 1
//   X j        loop X_j = (j|j+1)(j+1|j) = (j|j-1)(j-1|j)
//   XI j       X_j (ie_j)                     (type B, j >= 2)
enum class PathKind { E, IE, ARR, ARRI, X, XI };

struct Path {
    PathKind kind;
    int u;  // source vertex
    int v;  // target vertex
};

// Element written in the path basis. Type B elements keep all coefficients
// real; the i of the paper lives in the basis paths, not the scalars.
using Elem = std::map<int, Gauss>;

class Algebra {
  public:
    // Type B: rank = n >= 2 (vertices 1..n).
    // Type A: rank = number of vertices m, odd and >= 3 (vertices 1..m).
    Algebra(AlgTag tag, int rank);

    AlgTag tag() const { return tag_; }
    int rank() const { return rank_; }
    int vertices() const { return tag_ == AlgTag::B ? rank_ : rank_; }
    int middle() const { return mid_; }  // the vertex n of the type A grading
    int dim() const { return (int)paths_.size(); }

    const Path& path(int id) const { return paths_[id]; }
    const std::vector<Path>& paths() const { return paths_; }
    int path_id(PathKind k, int u, int v) const;
    std::optional<int> try_path_id(PathKind k, int u, int v) const;

    int deg(int id) const { return deg_[id]; }
    int z2(int id) const { return z2_[id]; }
    int pl_deg(int id) const { return pl_[id]; }

    int idem(int j) const { return path_id(PathKind::E, j, j); }
    Elem unit() const;

    // Product of basis paths: zero, or coeff * path.
    struct PathProd {
        Gauss coeff;  // zero when the product vanishes
        int id = -1;
    };
    const PathProd& table(int a, int b) const { return table_[a * paths_.size() + b]; }

    Elem mul(const Elem& a, const Elem& b) const;
    static Elem add(const Elem& a, const Elem& b);
    static Elem scale(const Gauss& c, const Elem& a);
    static bool is_zero(const Elem& a) { return a.empty(); }
    Elem from_path(int id, Gauss c = Gauss(1)) const;

    // Homogeneity data of an element; nullopt when mixed or zero.
    struct Homog {
        int src, tgt, deg, z2;
    };
    std::optional<Homog> homogeneous(const Elem& a, bool pl_mode = false) const;

    // Basis of e_j * Alg * e_k.
    std::vector<int> hom_basis(int j, int k) const;
    Laurent hom_graded_dim(int j, int k) const;  // TRI for B (q2,q3 slots), BI for A

    // Basis of the bimodule _jP over its scalar field F_j
    // (F_1 = Q for type B, F_j = Q(i) otherwise; Q(i) for type A).
    std::vector<int> tensor_basis(int j, int k) const;
    // i * beta as a basis path (type B, j >= 2).
    int i_variant(int beta) const;
    // Expansion of a (homogeneous) element of _jP over tensor_basis coordinates.
    std::vector<std::pair<int, Gauss>> expand_tensor(int j, const Elem& a) const;
    // Right-multiplication element realizing the scalar c on P_j.
    Elem scalar_action(int j, const Gauss& c) const;

    // gamma_j(1) = sum x_i (x) y_i as (coefficient, x path, y path) triples.
    struct GammaTerm {
        Gauss coeff;
        int x, y;
    };
    std::vector<GammaTerm> gamma(int j) const;

    std::string path_name(int id) const;
    std::string elem_name(const Elem& a) const;
    Elem elem_from_text(const std::string& s) const;

  private:
    void build_paths();
    void build_table();
    PathProd mul_paths(int a, int b) const;

    AlgTag tag_;
    int rank_;
    int mid_;
    std::vector<Path> paths_;
    std::map<std::tuple<int, int, int>, int> index_;
    std::vector<int> deg_, z2_, pl_;
    std::vector<PathProd> table_;
};

// Phi: C (x)_R B_n -> A_{2n-1} on basis paths, extended Q(i)-linearly.
class PhiMap {
  public:
    PhiMap(const Algebra& b, const Algebra& a);

    const Algebra& source() const { return *b_; }
    const Algebra& target() const { return *a_; }

    // Image of c (x) b.
    Elem apply(const Gauss& c, int b_path) const;
    Elem apply_elem(const Gauss& c, const Elem& e) const;

    // Idempotent block e_{tgt_of(j,sj)} * Phi(1 (x) b) * e_{tgt_of(k,sk)},
    // where tgt_of(1, 0) = n and tgt_of(j, s) = n - (j-1) (s = 0) or
    // n + (j-1) (s = 1) for j >= 2.
    int target_vertex(int j, int side) const;
    int sides(int j) const { return j == 1 ? 1 : 2; }
    Elem block(int b_path, int side_src, int side_tgt) const;

  private:
    const Algebra* b_;
    const Algebra* a_;
    std::vector<Elem> image_;  // indexed by B path id
};

}  // namespace zz
