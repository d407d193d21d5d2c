#include "cat0/point.hpp"

#include <string>
#include <utility>

#include "cat0/error.hpp"

namespace cat0 {

Point Point::euclidean(std::vector<double> coords) {
    if (coords.empty()) throw InputError("euclidean point needs at least one coordinate");
    Point p;
    p.kind_ = SpaceKind::euclidean;
    p.coords_ = std::move(coords);
    return p;
}

Point Point::biquadrant(Quadrant q, double a, double b) {
    if (q == Quadrant::plus) {
        if (a < 0.0 || b < 0.0)
            throw InputError("plus-quadrant point needs a >= 0 and b >= 0");
    } else {
        if (a > 0.0 || b > 0.0)
            throw InputError("minus-quadrant point needs a <= 0 and b <= 0");
    }
    Point p;
    p.kind_ = SpaceKind::biquadrant;
    // Glue point is canonically plus; also normalizes -0.0 away.
    if (a == 0.0 && b == 0.0) {
        p.quadrant_ = Quadrant::plus;
        p.xy_ = {0.0, 0.0};
    } else {
        p.quadrant_ = q;
        p.xy_ = {a == 0.0 ? 0.0 : a, b == 0.0 ? 0.0 : b};
    }
    return p;
}

Point Point::product(Point left, Point right) {
    Point p;
    p.kind_ = SpaceKind::product;
    p.left_ = std::make_shared<const Point>(std::move(left));
    p.right_ = std::make_shared<const Point>(std::move(right));
    return p;
}

const std::vector<double>& Point::coords() const {
    if (kind_ != SpaceKind::euclidean) throw KindMismatchError("coords() on non-euclidean point");
    return coords_;
}

Quadrant Point::quadrant() const {
    if (kind_ != SpaceKind::biquadrant) throw KindMismatchError("quadrant() on non-biquadrant point");
    return quadrant_;
}

const std::array<double, 2>& Point::xy() const {
    if (kind_ != SpaceKind::biquadrant) throw KindMismatchError("xy() on non-biquadrant point");
    return xy_;
}

const Point& Point::left() const {
    if (kind_ != SpaceKind::product) throw KindMismatchError("left() on non-product point");
    return *left_;
}

const Point& Point::right() const {
    if (kind_ != SpaceKind::product) throw KindMismatchError("right() on non-product point");
    return *right_;
}

bool Point::belongs_to(const Space& space) const {
    if (kind_ != space.kind()) return false;
    switch (kind_) {
        case SpaceKind::euclidean:
            return static_cast<int>(coords_.size()) == space.dim();
        case SpaceKind::biquadrant:
            return true;
        case SpaceKind::product:
            return left_->belongs_to(space.left()) && right_->belongs_to(space.right());
    }
    return false;
}

void Point::embed(std::vector<double>& out) const {
    switch (kind_) {
        case SpaceKind::euclidean:
            out.insert(out.end(), coords_.begin(), coords_.end());
            break;
        case SpaceKind::biquadrant:
            out.push_back(xy_[0]);
            out.push_back(xy_[1]);
            break;
        case SpaceKind::product:
            left_->embed(out);
            right_->embed(out);
            break;
    }
}

void require_in_space(const Space& space, const Point& p, const char* what) {
    if (!p.belongs_to(space))
        throw KindMismatchError(std::string(what) + ": point does not belong to space " + space.str());
}

}  // namespace cat0
