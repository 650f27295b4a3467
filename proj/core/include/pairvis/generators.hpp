#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pairvis/polygon.hpp"

namespace pairvis {

/// Random simple polygon on n points in [0, 1000]^2 built by recursive space
/// partitioning. Deterministic in `seed`; always passes validation.
std::vector<Point> random_simple_polygon(std::size_t n, std::uint64_t seed);

/// Random simple polygon obtained by untangling a random tour with 2-opt
/// moves. Quadratic per move; meant for n up to a few hundred.
std::vector<Point> random_two_opt_polygon(std::size_t n, std::uint64_t seed);

/// Random convex polygon with n vertices inscribed in a circle.
std::vector<Point> random_convex_polygon(std::size_t n, std::uint64_t seed);

/// Uniform random point of P (rejection sampling in the bounding box).
Point random_point_in(const SimplePolygon& polygon, std::mt19937_64& rng);

}  // namespace pairvis
