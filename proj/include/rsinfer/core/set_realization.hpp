#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/models/interval_box.hpp"

#include <variant>
#include <vector>

namespace rsinfer {

// One sample of a random set: a finite point set, an axis-aligned box, or a
// finite union of boxes. Empty is representable but rejected by the
// estimators; posterior sampling filters empties out upstream.
struct SetRealization {
    struct Empty {};
    struct Points {
        std::vector<Vec> pts;
    };
    struct BoxUnion {
        std::vector<IntervalBox> boxes;
    };

    std::variant<Empty, Points, IntervalBox, BoxUnion> v;

    static SetRealization empty() { return {Empty{}}; }
    static SetRealization points(std::vector<Vec> pts) {
        return {Points{std::move(pts)}};
    }
    static SetRealization single_point(Vec p) { return points({std::move(p)}); }
    static SetRealization box(IntervalBox b) { return {std::move(b)}; }
    static SetRealization interval(double lo, double hi) {
        return box(IntervalBox({lo}, {hi}));
    }
    static SetRealization box_union(std::vector<IntervalBox> boxes) {
        return {BoxUnion{std::move(boxes)}};
    }

    bool is_empty() const { return std::holds_alternative<Empty>(v); }
    bool is_points() const { return std::holds_alternative<Points>(v); }
    bool is_box() const { return std::holds_alternative<IntervalBox>(v); }
    bool is_box_union() const { return std::holds_alternative<BoxUnion>(v); }

    const Points& as_points() const { return std::get<Points>(v); }
    const IntervalBox& as_box() const { return std::get<IntervalBox>(v); }
    const BoxUnion& as_box_union() const { return std::get<BoxUnion>(v); }

    std::size_t dim() const;
};

bool contains_point(const SetRealization& s, const Vec& x);

// RSD / capacity indicator pair against a box query: s subset of q, s hits q.
bool contains(const SetRealization& s, const IntervalBox& q);
bool hits(const SetRealization& s, const IntervalBox& q);

// General set-vs-set versions (exact for box-union covers).
bool subset_of_set(const SetRealization& s, const SetRealization& t);
bool hits_set(const SetRealization& s, const SetRealization& t);

SetRealization intersect(const SetRealization& a, const SetRealization& b);

// Sort and deduplicate points/boxes, absorb redundant union members, collapse
// single-member unions. Gives set_equal a stable structural form.
SetRealization canonicalize(SetRealization s);

bool set_equal(const SetRealization& a, const SetRealization& b,
               double tol = kSetTol);

}  // namespace rsinfer
