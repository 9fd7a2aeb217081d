#include "rsinfer/core/set_realization.hpp"

#include <algorithm>
#include <cmath>

namespace rsinfer {

namespace {

bool point_close(const Vec& a, const Vec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool box_lex_less(const IntervalBox& a, const IntervalBox& b) {
    if (a.lo != b.lo) return lex_less(a.lo, b.lo);
    return lex_less(a.hi, b.hi);
}

// Pieces of b sticking out of c; what remains of b after clipping to c is
// inside c. Exact for closed boxes.
std::vector<IntervalBox> subtract_box(IntervalBox b, const IntervalBox& c) {
    std::vector<IntervalBox> pieces;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (b.lo[i] < c.lo[i]) {
            IntervalBox left = b;
            left.hi[i] = c.lo[i];
            pieces.push_back(std::move(left));
            b.lo[i] = c.lo[i];
        }
        if (b.hi[i] > c.hi[i]) {
            IntervalBox right = b;
            right.lo[i] = c.hi[i];
            pieces.push_back(std::move(right));
            b.hi[i] = c.hi[i];
        }
    }
    return pieces;
}

// b subset of the union of cover[from..]. Recursion peels one member at a
// time; a finite union of closed boxes is closed, so covering the interior
// pieces suffices and the test stays exact.
bool box_covered(const IntervalBox& b, const std::vector<IntervalBox>& cover,
                 std::size_t from) {
    for (std::size_t i = from; i < cover.size(); ++i)
        if (b.subset_of(cover[i])) return true;
    for (std::size_t i = from; i < cover.size(); ++i) {
        if (!b.intersects(cover[i])) continue;
        const auto pieces = subtract_box(b, cover[i]);
        for (const auto& p : pieces)
            if (!box_covered(p, cover, i + 1)) return false;
        return true;
    }
    return false;
}

} // namespace

std::size_t SetRealization::dim() const {
    if (is_box()) return as_box().dim();
    if (is_points()) return as_points().pts.empty() ? 0 : as_points().pts[0].size();
    if (is_box_union())
        return as_box_union().boxes.empty() ? 0 : as_box_union().boxes[0].dim();
    return 0;
}

bool contains_point(const SetRealization& s, const Vec& x) {
    if (s.is_empty()) return false;
    if (s.is_box()) return s.as_box().contains_point(x);
    if (s.is_points()) {
        for (const auto& p : s.as_points().pts)
            if (point_close(p, x, kSetTol)) return true;
        return false;
    }
    for (const auto& b : s.as_box_union().boxes)
        if (b.contains_point(x)) return true;
    return false;
}

bool contains(const SetRealization& s, const IntervalBox& q) {
    if (s.is_empty()) return false;
    if (s.is_box()) return s.as_box().subset_of(q);
    if (s.is_points()) {
        for (const auto& p : s.as_points().pts)
            if (!q.contains_point(p)) return false;
        return true;
    }
    for (const auto& b : s.as_box_union().boxes)
        if (!b.subset_of(q)) return false;
    return true;
}

bool hits(const SetRealization& s, const IntervalBox& q) {
    if (s.is_empty()) return false;
    if (s.is_box()) return s.as_box().intersects(q);
    if (s.is_points()) {
        for (const auto& p : s.as_points().pts)
            if (q.contains_point(p)) return true;
        return false;
    }
    for (const auto& b : s.as_box_union().boxes)
        if (b.intersects(q)) return true;
    return false;
}

bool subset_of_set(const SetRealization& s, const SetRealization& t) {
    if (s.is_empty()) return true;
    if (t.is_empty()) return false;
    if (s.is_points()) {
        for (const auto& p : s.as_points().pts)
            if (!contains_point(t, p)) return false;
        return true;
    }
    if (t.is_box()) return contains(s, t.as_box());
    if (t.is_points()) {
        // a box fits in a finite point set only when degenerate
        auto point_in = [&](const Vec& p) { return contains_point(t, p); };
        if (s.is_box()) return s.as_box().is_point() && point_in(s.as_box().lo);
        for (const auto& b : s.as_box_union().boxes)
            if (!b.is_point() || !point_in(b.lo)) return false;
        return true;
    }
    const auto& cover = t.as_box_union().boxes;
    if (s.is_box()) return box_covered(s.as_box(), cover, 0);
    for (const auto& b : s.as_box_union().boxes)
        if (!box_covered(b, cover, 0)) return false;
    return true;
}

bool hits_set(const SetRealization& s, const SetRealization& t) {
    if (s.is_empty() || t.is_empty()) return false;
    if (s.is_points()) {
        for (const auto& p : s.as_points().pts)
            if (contains_point(t, p)) return true;
        return false;
    }
    if (t.is_points()) return hits_set(t, s);
    if (s.is_box()) return hits(t, s.as_box());
    for (const auto& b : s.as_box_union().boxes)
        if (hits(t, b)) return true;
    return false;
}

SetRealization intersect(const SetRealization& a, const SetRealization& b) {
    if (a.is_empty() || b.is_empty()) return SetRealization::empty();
    if (a.is_points()) {
        std::vector<Vec> kept;
        for (const auto& p : a.as_points().pts)
            if (contains_point(b, p)) kept.push_back(p);
        if (kept.empty()) return SetRealization::empty();
        return canonicalize(SetRealization::points(std::move(kept)));
    }
    if (b.is_points()) return intersect(b, a);

    std::vector<IntervalBox> left, right;
    if (a.is_box())
        left.push_back(a.as_box());
    else
        left = a.as_box_union().boxes;
    if (b.is_box())
        right.push_back(b.as_box());
    else
        right = b.as_box_union().boxes;

    std::vector<IntervalBox> out;
    for (const auto& x : left)
        for (const auto& y : right)
            if (auto c = x.intersect(y)) out.push_back(std::move(*c));
    if (out.empty()) return SetRealization::empty();
    return canonicalize(SetRealization::box_union(std::move(out)));
}

SetRealization canonicalize(SetRealization s) {
    if (s.is_points()) {
        auto pts = std::get<SetRealization::Points>(s.v).pts;
        if (pts.empty()) return SetRealization::empty();
        std::sort(pts.begin(), pts.end(), lex_less);
        std::vector<Vec> out;
        for (auto& p : pts)
            if (out.empty() || !point_close(out.back(), p, kSetTol))
                out.push_back(std::move(p));
        return SetRealization::points(std::move(out));
    }
    if (s.is_box_union()) {
        auto boxes = std::get<SetRealization::BoxUnion>(s.v).boxes;
        if (boxes.empty()) return SetRealization::empty();
        // absorb members contained in another member
        std::vector<IntervalBox> kept;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            bool absorbed = false;
            for (std::size_t j = 0; j < boxes.size() && !absorbed; ++j) {
                if (i == j) continue;
                if (boxes[i].subset_of(boxes[j]) &&
                    !(boxes[j].subset_of(boxes[i]) && j > i))
                    absorbed = true;
            }
            if (!absorbed) kept.push_back(boxes[i]);
        }
        std::sort(kept.begin(), kept.end(), box_lex_less);
        if (kept.size() == 1) return SetRealization::box(kept[0]);
        return SetRealization::box_union(std::move(kept));
    }
    return s;
}

bool set_equal(const SetRealization& a, const SetRealization& b, double tol) {
    const SetRealization ca = canonicalize(a);
    const SetRealization cb = canonicalize(b);
    if (ca.is_empty() || cb.is_empty()) return ca.is_empty() && cb.is_empty();

    // a fully degenerate box is the same set as the matching point list
    auto as_point_list = [](const SetRealization& s) -> std::vector<Vec> {
        if (s.is_points()) return s.as_points().pts;
        if (s.is_box() && s.as_box().is_point()) return {s.as_box().lo};
        return {};
    };
    const auto pa = as_point_list(ca);
    const auto pb = as_point_list(cb);
    if (!pa.empty() || !pb.empty()) {
        if (pa.size() != pb.size() || pa.empty()) return false;
        for (std::size_t i = 0; i < pa.size(); ++i)
            if (!point_close(pa[i], pb[i], tol)) return false;
        return true;
    }

    if (ca.is_box() && cb.is_box()) return ca.as_box().approx_equal(cb.as_box(), tol);
    if (ca.is_box_union() && cb.is_box_union()) {
        const auto& xa = ca.as_box_union().boxes;
        const auto& xb = cb.as_box_union().boxes;
        if (xa.size() != xb.size()) return false;
        for (std::size_t i = 0; i < xa.size(); ++i)
            if (!xa[i].approx_equal(xb[i], tol)) return false;
        return true;
    }
    return false;
}

}  // namespace rsinfer
