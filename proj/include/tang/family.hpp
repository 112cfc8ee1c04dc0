#pragma once

#include <string>

namespace tang {

/// Shape families handled by the atlas and by the bounds registry's
/// applicability rules.
enum class ShapeFamily {
    disk,
    regular,
    isosceles_sigma,
    rhombus_tau,
    kite,
    triangle_angles,
    random_tangential,
    one_cap,
    two_cap,
};

std::string to_string(ShapeFamily f);

/// Family id plus up to two parameters (n for regular, sigma for
/// isosceles_sigma, tau for rhombus_tau, ...). Used to decide which classical
/// bounds apply and to label diagram samples.
struct ShapeTag {
    ShapeFamily family = ShapeFamily::random_tangential;
    double param1 = 0.0;
    double param2 = 0.0;
};

inline bool is_triangle(const ShapeTag& tag) {
    return tag.family == ShapeFamily::triangle_angles ||
           tag.family == ShapeFamily::isosceles_sigma ||
           (tag.family == ShapeFamily::regular && tag.param1 == 3.0);
}

inline bool is_isosceles_triangle(const ShapeTag& tag) {
    return tag.family == ShapeFamily::isosceles_sigma ||
           (tag.family == ShapeFamily::regular && tag.param1 == 3.0);
}

} // namespace tang
