#pragma once

#include <memory>
#include <vector>

#include "cat0/point.hpp"
#include "cat0/space.hpp"

namespace cat0 {

enum class IsometryKind { euclidean_rigid, biquadrant_swap, product_pair };

/// Distance-preserving map of one of the model spaces: a rigid motion
/// x ↦ Qx + v of E^d (Q orthogonal, validated at construction), the
/// bi-quadrant swap x ↦ -x, or a componentwise pair on a product.
class Isometry {
public:
    /// q is row-major d×d; throws InputError unless QᵀQ = I within 1e-12.
    static Isometry rigid(std::vector<double> q, std::vector<double> translation);
    static Isometry biquadrant_swap();
    static Isometry product_pair(Isometry left, Isometry right);

    IsometryKind kind() const { return kind_; }
    const Space& space() const { return space_; }

    Point apply(const Point& p) const;
    Point apply_inverse(const Point& p) const;

private:
    Isometry() : space_(Space::biquadrant()) {}

    IsometryKind kind_ = IsometryKind::biquadrant_swap;
    Space space_;
    int dim_ = 0;
    std::vector<double> q_;  // row-major
    std::vector<double> v_;
    std::shared_ptr<const Isometry> left_, right_;
};

}  // namespace cat0
