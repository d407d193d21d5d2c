#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace cat0 {

enum class SpaceKind { euclidean, biquadrant, product };

/// Descriptor of a geodesic model space: Euclidean E^d, the bi-quadrant
/// plane (two quadrants of R^2 glued at the origin), or a finite ℓ²-product
/// tree of those.
class Space {
public:
    static Space euclidean(int dim);
    static Space biquadrant();
    static Space product(Space left, Space right);

    SpaceKind kind() const { return kind_; }
    bool is_euclidean() const { return kind_ == SpaceKind::euclidean; }

    int dim() const;            // euclidean only
    const Space& left() const;  // product only
    const Space& right() const;

    /// Number of coordinates in the canonical flat embedding.
    int embedding_dim() const;

    bool operator==(const Space& other) const;
    bool operator!=(const Space& other) const { return !(*this == other); }

    /// Grammar: euclidean:<d> | biquadrant | product(<spec>,<spec>)
    std::string str() const;
    static Space parse(std::string_view spec);

private:
    Space() = default;

    SpaceKind kind_ = SpaceKind::euclidean;
    int dim_ = 0;
    std::shared_ptr<const Space> left_, right_;
};

}  // namespace cat0
