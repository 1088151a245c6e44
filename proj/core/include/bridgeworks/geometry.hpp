#pragma once

#include "bridgeworks/numeric.hpp"

namespace bridgeworks {

/// A point with exact rational coordinates. Coincident points are allowed.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

Rational squared_distance(const Point& p, const Point& q);

/// |pq|; exact whenever the distance is rational.
Length euclidean_distance(const Point& p, const Point& q);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// True if the closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace bridgeworks
