#pragma once

#include "zz/scalars.hpp"

#include <optional>
#include <vector>

namespace zz {

struct Pt {
    Rational x, y;

    friend bool operator==(const Pt&, const Pt&) = default;
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator-() const { return {-x, -y}; }
};

using Poly = std::vector<Pt>;

Rational cross(const Pt& a, const Pt& b);

// Winding number of the closed polyline (implicitly closed back to front())
// around p; p must not lie on the path.
int winding(const std::vector<Pt>& loop, const Pt& p);

// Piecewise-linear model of the (half or full) twist about two points,
// supported on a square annulus: the inner square rotates by one spoke per
// step (8 spokes), affinely interpolated across the annulus. Four steps give
// the half twist (inner square maps by point reflection), eight the full one.
class SpokeTwist {
  public:
    SpokeTwist(Pt center, Rational outer, Rational inner, int dir);

    Pt map(const Pt& p) const;
    Poly apply(const Poly& poly) const;

    static Poly twist(const Poly& poly, Pt center, Rational outer, Rational inner,
                      int steps, int dir);

  private:
    Pt vertex_image(int which, int idx) const;  // which: 0 outer, 1 inner
    Pt spoke(int which, int idx) const;

    Pt m_;
    Rational w_, in_;
    int dir_;
    std::vector<Pt> outer_, inner_;
    std::vector<std::array<Pt, 3>> cells_;      // triangles covering annulus + fan
    std::vector<std::array<Pt, 3>> cell_imgs_;  // image triangles
};

}  // namespace zz
