#pragma once

#include "zz/complex.hpp"
#include "zz/geom.hpp"
#include "zz/laurent.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace zz {

// Combinatorial model of the marked disc: punctures on the x-axis, one
// vertical wall in each gap, every region containing exactly one puncture.
//
// Type B (rank n): punctures 0..n at x = 0..n, walls w = 1..n at x = w - 1/2.
// Region k (between walls k and k+1) contains puncture k; region 0 is the
// branch region, where hooks around puncture 0 flip the third grading.
//
// Type A (rank n): punctures q_1..q_{2n} at x = -n..-1, 1..n, walls
// theta_1..theta_{2n-1} at gap midpoints (theta_n at x = 0). Region r
// contains puncture q_{r+1}.
struct DiscModel {
    AlgTag side;
    int n;

    int punctures() const { return side == AlgTag::B ? n + 1 : 2 * n; }
    int walls() const { return side == AlgTag::B ? n : 2 * n - 1; }
    // Punctures indexed 0..punctures()-1 in x-order.
    Rational puncture_x(int idx) const;
    Rational wall_x(int w) const;  // walls indexed 1..walls()
    int region_of_wall_side(int w, int side) const;  // side -1 left, +1 right
    int region_puncture(int region) const;           // puncture index
    int region_left_wall(int region) const;          // 0 if none
    int region_right_wall(int region) const;         // 0 if none
    bool is_branch_region(int region) const {
        return side == AlgTag::B && region == 0;
    }
    int middle() const { return n; }  // theta_n index (type A)

    friend bool operator==(const DiscModel&, const DiscModel&) = default;
};

struct Crossing {
    int wall;
    std::array<int, 3> mu;  // mu[2] fixed 0 on the A side

    friend bool operator==(const Crossing&, const Crossing&) = default;
    friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

enum class SegKind { End, Thru, Hook };

struct SegInfo {
    SegKind kind;
    int region;
    bool above = false;  // Thru
    int turn = 0;        // Hook: winding sign around the region puncture

    friend bool operator==(const SegInfo&, const SegInfo&) = default;
    friend auto operator<=>(const SegInfo&, const SegInfo&) = default;
};

// Admissible curve in normal form: endpoint punctures, wall crossings with
// local indices, and the segment catalog data; plus a polyline representative
// of the homotopy class used for acting by twists.
struct NormalCurve {
    DiscModel model;
    int end0 = 0, end1 = 0;           // puncture indices
    std::vector<Crossing> crossings;  // along the curve, end0 to end1
    std::vector<SegInfo> segs;        // crossings.size() + 1 entries
    Poly poly;

    NormalCurve reversed() const;
    // Canonical orientation for equality testing.
    std::vector<std::tuple<int, int, int, int, int, int, int, int>> key() const;
    bool same_curve(const NormalCurve& o) const;
    std::string describe() const;
};

NormalCurve basic_curve(const DiscModel& m, int j);  // b_j resp. rho_j (wall j)

// chi(r1, r2, r3) grading shift: all labels move by r.
NormalCurve chi_shift(const NormalCurve& c, std::array<int, 3> r);

// Braid generator action by the PL twist + retightening. Type B: letter 1 is
// the full twist about punctures {0,1}; letters j >= 2 half twists about
// {j-1, j}. Type A: letter i is the half twist about {q_i, q_{i+1}}.
NormalCurve act(const NormalCurve& c, int letter);
NormalCurve act_word(const NormalCurve& c, const std::vector<int>& letters);

// Trigraded intersection number I(b_j, c), type B.
Laurent intersect_basic(const NormalCurve& c, int j);
// I(d_j, c) against the wall curve (no endpoint terms).
Laurent intersect_wall(const NormalCurve& c, int j);
// I(sigma(w0) b_j, sigma(w1) b_k) via invariance.
Laurent intersect_curves(const DiscModel& m, const std::vector<int>& w0, int j,
                         const std::vector<int>& w1, int k);
// Geometric intersection number I(b_j, c) in (1/2) Z.
Rational geometric_intersect(const NormalCurve& c, int j);

// Curve-to-complex maps.
Complex build_lb(const NormalCurve& c, const Algebra& alg);

// sgn: sum of <.>-shifts over P_1 generators mod 2.
int sgn_of(const Complex& c);

// Rebuild normal data from an arbitrary polyline representative (homotopy
// class rel punctures). Labels are seeded from `seeds`: crossing index ->
// label; indices refer to the tightened crossing order.
NormalCurve from_poly(const DiscModel& m, Poly poly,
                      const std::vector<std::optional<std::array<int, 3>>>& seeds);

// Internal helpers shared with the lift machinery.
namespace detail {
struct RawCrossing {
    int wall;
    size_t at;         // index into a flattened point list: crossing point sits
    Pt pt;             // between pts[at] and pts[at+1]
};
std::vector<Pt> subpath(const std::vector<Pt>& pts, const std::vector<RawCrossing>& cr,
                        int i, int j);  // points strictly between crossings i and j
std::vector<RawCrossing> tightened_crossings(const DiscModel& m,
                                             const std::vector<Pt>& pts, int end0,
                                             int end1);
std::array<int, 3> transport(const DiscModel& m, const SegInfo& seg, bool forward,
                             std::array<int, 3> mu);
}  // namespace detail

}  // namespace zz
