#include "cat0/isometry.hpp"

#include <cmath>
#include <utility>

#include "cat0/error.hpp"

namespace cat0 {

Isometry Isometry::rigid(std::vector<double> q, std::vector<double> translation) {
    const std::size_t d = translation.size();
    if (d == 0 || q.size() != d * d)
        throw InputError("rigid isometry: Q must be d×d with d = |translation| >= 1");
    // QᵀQ = I within 1e-12.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < d; ++k) s += q[k * d + i] * q[k * d + j];
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - want) > 1e-12)
                throw InputError("rigid isometry: matrix is not orthogonal within 1e-12");
        }
    }
    Isometry iso;
    iso.kind_ = IsometryKind::euclidean_rigid;
    iso.space_ = Space::euclidean(static_cast<int>(d));
    iso.dim_ = static_cast<int>(d);
    iso.q_ = std::move(q);
    iso.v_ = std::move(translation);
    return iso;
}

Isometry Isometry::biquadrant_swap() {
    Isometry iso;
    iso.kind_ = IsometryKind::biquadrant_swap;
    iso.space_ = Space::biquadrant();
    return iso;
}

Isometry Isometry::product_pair(Isometry left, Isometry right) {
    Isometry iso;
    iso.kind_ = IsometryKind::product_pair;
    iso.space_ = Space::product(left.space(), right.space());
    iso.left_ = std::make_shared<const Isometry>(std::move(left));
    iso.right_ = std::make_shared<const Isometry>(std::move(right));
    return iso;
}

Point Isometry::apply(const Point& p) const {
    require_in_space(space_, p, "isometry apply");
    switch (kind_) {
        case IsometryKind::euclidean_rigid: {
            const auto& x = p.coords();
            const std::size_t d = static_cast<std::size_t>(dim_);
            std::vector<double> y(d);
            for (std::size_t i = 0; i < d; ++i) {
                double s = v_[i];
                for (std::size_t j = 0; j < d; ++j) s += q_[i * d + j] * x[j];
                y[i] = s;
            }
            return Point::euclidean(std::move(y));
        }
        case IsometryKind::biquadrant_swap: {
            const Quadrant q = p.quadrant() == Quadrant::plus ? Quadrant::minus : Quadrant::plus;
            return Point::biquadrant(q, -p.xy()[0], -p.xy()[1]);
        }
        case IsometryKind::product_pair:
            return Point::product(left_->apply(p.left()), right_->apply(p.right()));
    }
    return p;
}

Point Isometry::apply_inverse(const Point& p) const {
    require_in_space(space_, p, "isometry apply_inverse");
    switch (kind_) {
        case IsometryKind::euclidean_rigid: {
            const auto& x = p.coords();
            const std::size_t d = static_cast<std::size_t>(dim_);
            std::vector<double> y(d);
            for (std::size_t i = 0; i < d; ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += q_[j * d + i] * (x[j] - v_[j]);
                y[i] = s;
            }
            return Point::euclidean(std::move(y));
        }
        case IsometryKind::biquadrant_swap:
            return apply(p);  // involution
        case IsometryKind::product_pair:
            return Point::product(left_->apply_inverse(p.left()), right_->apply_inverse(p.right()));
    }
    return p;
}

}  // namespace cat0
