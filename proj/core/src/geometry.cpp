#include "bridgeworks/geometry.hpp"

namespace bridgeworks {

Rational squared_distance(const Point& p, const Point& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Length euclidean_distance(const Point& p, const Point& q) {
  if (p.x == q.x) return Length::exact(abs(p.y - q.y));
  if (p.y == q.y) return Length::exact(abs(p.x - q.x));
  Rational d2 = squared_distance(p, q);
  if (auto root = exact_sqrt(d2)) return Length::exact(std::move(*root));
  return Length::approximate(std::sqrt(d2.get_d()));
}

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

namespace {

// c is collinear with [a, b]; is it inside the bounding box?
bool on_segment(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace bridgeworks
