#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pairvis/geometry.hpp"

using namespace pairvis;

TEST(Orientation, BasicCases) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::CCW);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), Orientation::Collinear);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), Orientation::CW);
}

TEST(Orientation, NearlyCollinearIsExact) {
  const Point a{0.5, 0.5}, b{12.0, 12.0}, c{24.0, 24.0};
  EXPECT_EQ(orientation(a, b, c), Orientation::Collinear);
  const Point c2{24.0, std::nextafter(24.0, 25.0)};
  EXPECT_EQ(orientation(a, b, c2), Orientation::CCW);
  const Point c3{24.0, std::nextafter(24.0, 23.0)};
  EXPECT_EQ(orientation(a, b, c3), Orientation::CW);
}

TEST(Orientation, PropertyAntisymmetricAndInvariant) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 2000; ++i) {
    const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
    const int o = sign_of(orientation(p, q, r));
    EXPECT_EQ(sign_of(orientation(q, p, r)), -o);
    EXPECT_EQ(sign_of(orientation(p, r, q)), -o);
    EXPECT_EQ(sign_of(orientation(r, q, p)), -o);
    // Power-of-two scaling and translation by representable offsets are exact.
    const Point t{4.0, -8.0};
    EXPECT_EQ(sign_of(orientation(p * 2.0 + t, q * 2.0 + t, r * 2.0 + t)), o);
  }
}

TEST(SegmentsIntersect, Examples) {
  auto x = segments_intersect({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
  ASSERT_EQ(x.kind, IntersectionKind::Point);
  EXPECT_DOUBLE_EQ(x.p.x, 0.5);
  EXPECT_DOUBLE_EQ(x.p.y, 0.5);
  EXPECT_FALSE(x.touching);

  EXPECT_EQ(segments_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}).kind, IntersectionKind::None);

  auto o = segments_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
  ASSERT_EQ(o.kind, IntersectionKind::Overlap);
  EXPECT_EQ(o.p, (Point{1, 0}));
  EXPECT_EQ(o.q, (Point{2, 0}));
}

TEST(SegmentsIntersect, EndpointTouchReported) {
  auto x = segments_intersect({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}});
  ASSERT_EQ(x.kind, IntersectionKind::Point);
  EXPECT_TRUE(x.touching);
  EXPECT_EQ(x.p, (Point{1, 0}));
}

TEST(SegmentsIntersect, Symmetric) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> u(0, 4);
  for (int i = 0; i < 3000; ++i) {
    const Segment a{{double(u(rng)), double(u(rng))}, {double(u(rng)), double(u(rng))}};
    const Segment b{{double(u(rng)), double(u(rng))}, {double(u(rng)), double(u(rng))}};
    if (a.a == a.b || b.a == b.b) continue;
    EXPECT_EQ(segments_intersect(a, b).kind, segments_intersect(b, a).kind);
  }
}

TEST(PointLineDistance, Examples) {
  EXPECT_DOUBLE_EQ(point_line_distance({0, 1}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_line_distance({3, 0}, {0, 0}, {1, 0}), 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(point_line_distance({0.5, 1.75}, {1, 1}, {-r, r}), 0.25 / std::sqrt(2.0), 1e-15);
}

TEST(PointLineDistance, ZeroIffCollinear) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const Point through{double(u(rng)), double(u(rng))};
    const Point dir{1.0, 0.0};
    const Point p{double(u(rng)), double(u(rng))};
    EXPECT_EQ(point_line_distance(p, through, dir) == 0.0,
              orientation(through, through + dir, p) == Orientation::Collinear);
  }
}
