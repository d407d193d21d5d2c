#pragma once

#include <array>
#include <memory>
#include <vector>

#include "cat0/space.hpp"

namespace cat0 {

enum class Quadrant { plus, minus };

/// Immutable space-tagged point. The tag mirrors the space tree: a coordinate
/// vector for E^d, a (quadrant, xy) pair for the bi-quadrant plane, a pair of
/// points for a product. The origin of the bi-quadrant plane is always stored
/// with the plus tag so equality at the glue point is syntactic.
class Point {
public:
    static Point euclidean(std::vector<double> coords);
    static Point biquadrant(Quadrant q, double a, double b);
    static Point product(Point left, Point right);

    SpaceKind kind() const { return kind_; }

    const std::vector<double>& coords() const;   // euclidean
    Quadrant quadrant() const;                   // biquadrant
    const std::array<double, 2>& xy() const;     // biquadrant
    const Point& left() const;                   // product
    const Point& right() const;

    /// True when the point's structure matches the space descriptor.
    bool belongs_to(const Space& space) const;

    /// Canonical flat coordinates, appended to `out`. Bi-quadrant points map
    /// to their signed xy (minus-quadrant coordinates are non-positive, so
    /// the map is injective and 1-Lipschitz into the intrinsic metric).
    void embed(std::vector<double>& out) const;

private:
    Point() = default;

    SpaceKind kind_ = SpaceKind::euclidean;
    std::vector<double> coords_;
    Quadrant quadrant_ = Quadrant::plus;
    std::array<double, 2> xy_{0.0, 0.0};
    std::shared_ptr<const Point> left_, right_;
};

/// Throws KindMismatchError unless p belongs to space.
void require_in_space(const Space& space, const Point& p, const char* what);

}  // namespace cat0
