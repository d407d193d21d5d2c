#include "cat0/space.hpp"

#include <charconv>
#include <utility>

#include "cat0/error.hpp"

namespace cat0 {

Space Space::euclidean(int dim) {
    if (dim < 1) throw InputError("euclidean space needs dim >= 1");
    Space s;
    s.kind_ = SpaceKind::euclidean;
    s.dim_ = dim;
    return s;
}

Space Space::biquadrant() {
    Space s;
    s.kind_ = SpaceKind::biquadrant;
    return s;
}

Space Space::product(Space left, Space right) {
    Space s;
    s.kind_ = SpaceKind::product;
    s.left_ = std::make_shared<const Space>(std::move(left));
    s.right_ = std::make_shared<const Space>(std::move(right));
    return s;
}

int Space::dim() const {
    if (kind_ != SpaceKind::euclidean) throw KindMismatchError("dim() on non-euclidean space");
    return dim_;
}

const Space& Space::left() const {
    if (kind_ != SpaceKind::product) throw KindMismatchError("left() on non-product space");
    return *left_;
}

const Space& Space::right() const {
    if (kind_ != SpaceKind::product) throw KindMismatchError("right() on non-product space");
    return *right_;
}

int Space::embedding_dim() const {
    switch (kind_) {
        case SpaceKind::euclidean: return dim_;
        case SpaceKind::biquadrant: return 2;
        case SpaceKind::product: return left_->embedding_dim() + right_->embedding_dim();
    }
    return 0;
}

bool Space::operator==(const Space& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case SpaceKind::euclidean: return dim_ == other.dim_;
        case SpaceKind::biquadrant: return true;
        case SpaceKind::product:
            return *left_ == *other.left_ && *right_ == *other.right_;
    }
    return false;
}

std::string Space::str() const {
    switch (kind_) {
        case SpaceKind::euclidean: return "euclidean:" + std::to_string(dim_);
        case SpaceKind::biquadrant: return "biquadrant";
        case SpaceKind::product: return "product(" + left_->str() + "," + right_->str() + ")";
    }
    return "?";
}

namespace {

Space parse_at(std::string_view s, std::size_t& pos);

void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

bool consume(std::string_view s, std::size_t& pos, std::string_view tok) {
    skip_ws(s, pos);
    if (s.substr(pos, tok.size()) == tok) {
        pos += tok.size();
        return true;
    }
    return false;
}

Space parse_at(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    if (consume(s, pos, "euclidean:")) {
        int d = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), d);
        if (ec != std::errc{}) throw InputError("bad euclidean dimension in space spec");
        pos = static_cast<std::size_t>(ptr - s.data());
        return Space::euclidean(d);
    }
    if (consume(s, pos, "biquadrant")) return Space::biquadrant();
    if (consume(s, pos, "product(")) {
        Space l = parse_at(s, pos);
        if (!consume(s, pos, ",")) throw InputError("expected ',' in product space spec");
        Space r = parse_at(s, pos);
        if (!consume(s, pos, ")")) throw InputError("expected ')' in product space spec");
        return Space::product(std::move(l), std::move(r));
    }
    throw InputError("unrecognized space spec: " + std::string(s));
}

}  // namespace

Space Space::parse(std::string_view spec) {
    std::size_t pos = 0;
    Space s = parse_at(spec, pos);
    skip_ws(spec, pos);
    if (pos != spec.size()) throw InputError("trailing characters in space spec: " + std::string(spec));
    return s;
}

}  // namespace cat0
