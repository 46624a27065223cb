#include "zz/geom.hpp"

#include <array>
#include <stdexcept>

namespace zz {

Rational cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

int winding(const std::vector<Pt>& loop, const Pt& p) {
    int wn = 0;
    size_t n = loop.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = loop[i];
        const Pt& b = loop[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(b - a, p - a) > 0)
                ++wn;
        } else {
            if (b.y <= p.y && cross(b - a, p - a) < 0)
                --wn;
        }
    }
    return wn;
}

namespace {

bool in_triangle(const std::array<Pt, 3>& t, const Pt& p) {
    Rational d1 = cross(t[1] - t[0], p - t[0]);
    Rational d2 = cross(t[2] - t[1], p - t[1]);
    Rational d3 = cross(t[0] - t[2], p - t[2]);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos);
}

Pt affine_image(const std::array<Pt, 3>& t, const std::array<Pt, 3>& img, const Pt& p) {
    Pt e1 = t[1] - t[0], e2 = t[2] - t[0], d = p - t[0];
    Rational det = cross(e1, e2);
    Rational u = cross(d, e2) / det;
    Rational v = cross(e1, d) / det;
    Pt f1 = img[1] - img[0], f2 = img[2] - img[0];
    return {img[0].x + u * f1.x + v * f2.x, img[0].y + u * f1.y + v * f2.y};
}

// Intersection parameter of segment a-b with segment c-d, strictly interior
// to a-b; returns t in (0,1) with the crossing point a + t(b-a).
std::optional<Rational> seg_cross_param(const Pt& a, const Pt& b, const Pt& c,
                                        const Pt& d) {
    Pt r = b - a, s = d - c;
    Rational denom = cross(r, s);
    if (denom == 0)
        return std::nullopt;
    Rational t = cross(c - a, s) / denom;
    Rational u = cross(c - a, r) / denom;
    if (t <= 0 || t >= 1 || u < 0 || u > 1)
        return std::nullopt;
    return t;
}

}  // namespace

SpokeTwist::SpokeTwist(Pt center, Rational outer, Rational inner, int dir)
    : m_(center), w_(outer), in_(inner), dir_(dir) {
    auto ring = [&](Rational r) {
        std::vector<Pt> v;
        v.push_back({m_.x + r, m_.y});
        v.push_back({m_.x + r, m_.y + r});
        v.push_back({m_.x, m_.y + r});
        v.push_back({m_.x - r, m_.y + r});
        v.push_back({m_.x - r, m_.y});
        v.push_back({m_.x - r, m_.y - r});
        v.push_back({m_.x, m_.y - r});
        v.push_back({m_.x + r, m_.y - r});
        return v;
    };
    outer_ = ring(w_);
    inner_ = ring(in_);
    auto in_img = [&](int i) { return inner_[((i + dir_) % 8 + 8) % 8]; };
    for (int i = 0; i < 8; ++i) {
        int j = (i + 1) % 8;
        cells_.push_back({outer_[i], outer_[j], inner_[i]});
        cell_imgs_.push_back({outer_[i], outer_[j], in_img(i)});
        cells_.push_back({outer_[j], inner_[j], inner_[i]});
        cell_imgs_.push_back({outer_[j], in_img(j), in_img(i)});
        cells_.push_back({m_, inner_[i], inner_[j]});
        cell_imgs_.push_back({m_, in_img(i), in_img(j)});
    }
}

Pt SpokeTwist::map(const Pt& p) const {
    Rational dx = p.x - m_.x, dy = p.y - m_.y;
    Rational ax = dx < 0 ? -dx : dx, ay = dy < 0 ? -dy : dy;
    Rational linf = ax > ay ? ax : ay;
    if (linf >= w_)
        return p;
    for (size_t i = 0; i < cells_.size(); ++i)
        if (in_triangle(cells_[i], p))
            return affine_image(cells_[i], cell_imgs_[i], p);
    throw std::logic_error("twist cell location failed");
}

Poly SpokeTwist::apply(const Poly& poly) const {
    // Subdivide each segment at every cell-edge crossing, then map vertices.
    Poly out;
    for (size_t i = 0; i + 1 <= poly.size(); ++i) {
        if (i + 1 == poly.size()) {
            out.push_back(map(poly[i]));
            break;
        }
        const Pt& a = poly[i];
        const Pt& b = poly[i + 1];
        std::vector<Rational> params;
        auto add_edge = [&](const Pt& c, const Pt& d) {
            auto t = seg_cross_param(a, b, c, d);
            if (t)
                params.push_back(*t);
        };
        for (int k = 0; k < 8; ++k) {
            int j = (k + 1) % 8;
            add_edge(outer_[k], outer_[j]);
            add_edge(inner_[k], inner_[j]);
            add_edge(outer_[k], inner_[k]);
            add_edge(m_, inner_[k]);
        }
        std::sort(params.begin(), params.end());
        out.push_back(map(a));
        for (const Rational& t : params) {
            Pt p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            out.push_back(map(p));
        }
    }
    // Drop exact duplicates.
    Poly dedup;
    for (const Pt& p : out)
        if (dedup.empty() || !(dedup.back() == p))
            dedup.push_back(p);
    return dedup;
}

Poly SpokeTwist::twist(const Poly& poly, Pt center, Rational outer, Rational inner,
                       int steps, int dir) {
    Poly cur = poly;
    SpokeTwist step(center, outer, inner, dir);
    for (int s = 0; s < steps; ++s)
        cur = step.apply(cur);
    return cur;
}

}  // namespace zz
