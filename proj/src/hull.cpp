#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardymin/oracle.hpp"

namespace hardymin {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
std::vector<Complex> hull(std::vector<Complex> p) {
  std::sort(p.begin(), p.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Complex> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

double distance_to_segment(Complex a, Complex b, Complex q) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0) return std::abs(q - a);
  const double t = std::clamp(((q - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(q - (a + t * d));
}

double distance_to_convex_hull(std::vector<Complex> points, Complex q) {
  if (points.empty()) throw std::invalid_argument("distance_to_convex_hull: empty point set");
  const auto h = hull(std::move(points));
  if (h.size() == 1) return std::abs(q - h[0]);
  if (h.size() == 2) return distance_to_segment(h[0], h[1], q);
  bool inside = true;
  double d = INFINITY;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Complex a = h[i], b = h[(i + 1) % h.size()];
    if (cross(a, b, q) < 0) inside = false;
    d = std::min(d, distance_to_segment(a, b, q));
  }
  return inside ? 0.0 : d;
}

}  // namespace hardymin
