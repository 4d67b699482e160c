#include "fieldbound/pentagon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fieldbound/errors.hpp"

namespace fieldbound {

namespace {

double rel(double q_out, double q_a, double q_b) { return q_out - 4.0 + q_a * q_b / 4.0; }

double rel_b(double b_out, double b_a, double b_b) {
  return 4.0 * b_out * b_out - (4.0 - b_a * b_a) * (4.0 - b_b * b_b);
}

constexpr double kGridStep = 0.001;
constexpr double kNewtonTolerance = 1e-12;
constexpr int kNewtonMaxIterations = 100;

}  // namespace

QCoordinates to_q(const PentagonGram& g) {
  return {4.0 - g.b13 * g.b13, 4.0 - g.b14 * g.b14, 4.0 - g.b24 * g.b24, 4.0 - g.b25 * g.b25,
          4.0 - g.b35 * g.b35};
}

PentagonGram to_gram(const QCoordinates& q) {
  for (double v : {q.q13, q.q14, q.q24, q.q25, q.q35}) {
    if (v > 4.0) throw InvalidArgument("to_gram: q_ij must be <= 4");
  }
  return {std::sqrt(4.0 - q.q13), std::sqrt(4.0 - q.q14), std::sqrt(4.0 - q.q24), std::sqrt(4.0 - q.q25),
          std::sqrt(4.0 - q.q35)};
}

std::array<double, 5> pentagon_residuals(const QCoordinates& q) {
  return {rel(q.q14, q.q13, q.q24), rel(q.q24, q.q14, q.q25), rel(q.q25, q.q24, q.q35), rel(q.q35, q.q25, q.q13),
          rel(q.q13, q.q35, q.q14)};
}

std::array<double, 5> pentagon_residuals_b(const PentagonGram& g) {
  return {rel_b(g.b14, g.b13, g.b24), rel_b(g.b24, g.b14, g.b25), rel_b(g.b25, g.b24, g.b35),
          rel_b(g.b35, g.b25, g.b13), rel_b(g.b13, g.b35, g.b14)};
}

QCoordinates complete_right_pentagon(double x, double y) {
  if (!(x >= 0.0 && x <= 4.0 && y >= 0.0 && y <= 4.0)) {
    throw InvalidArgument("complete_right_pentagon: (x, y) must lie in [0, 4]^2");
  }
  QCoordinates q;
  q.q13 = x;
  q.q24 = y;
  q.q14 = 4.0 - x * y / 4.0;
  if (q.q14 == 0.0) throw DegenerateConfiguration("complete_right_pentagon: q14 = 0");
  q.q35 = 4.0 * (4.0 - x) / q.q14;
  q.q25 = 4.0 - y * q.q35 / 4.0;
  return q;
}

double objective_F(double x, double y) {
  const double d = 16.0 - x * y;
  if (d == 0.0) throw SingularInput("objective_F: xy = 16");
  return x * y * (4.0 - x) * (4.0 - y) / d;
}

std::array<double, 2> objective_F_gradient(double x, double y) {
  const double d = 16.0 - x * y;
  if (d == 0.0) throw SingularInput("objective_F_gradient: xy = 16");
  const double n = x * y * (4.0 - x) * (4.0 - y);
  const double nx = y * (4.0 - y) * (4.0 - 2.0 * x);
  const double ny = x * (4.0 - x) * (4.0 - 2.0 * y);
  return {(nx * d + n * y) / (d * d), (ny * d + n * x) / (d * d)};
}

GridMaximum grid_maximize_F(double step) {
  if (!(step > 0.0 && step < 4.0)) throw InvalidArgument("grid_maximize_F: step must lie in (0, 4)");
  const auto count = static_cast<std::int64_t>(std::ceil(4.0 / step));
  GridMaximum best{0.0, 0.0, -1.0};
  for (std::int64_t i = 1; i < count; ++i) {
    const double x = static_cast<double>(i) * step;
    if (x >= 4.0) break;
    for (std::int64_t j = 1; j < count; ++j) {
      const double y = static_cast<double>(j) * step;
      if (y >= 4.0) break;
      const double v = objective_F(x, y);
      if (v > best.value) best = {x, y, v};
    }
  }
  return best;
}

PentagonExtremum minimize_gamma() {
  const GridMaximum start = grid_maximize_F(kGridStep);
  double x = start.x;
  double y = start.y;
  PentagonExtremum out;

  // Newton on grad F = 0; the Hessian comes from central differences of the
  // analytic gradient, which only affects the rate, not the fixed point.
  const double h = 1e-6;
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    const auto g = objective_F_gradient(x, y);
    const auto gxp = objective_F_gradient(x + h, y);
    const auto gxm = objective_F_gradient(x - h, y);
    const auto gyp = objective_F_gradient(x, y + h);
    const auto gym = objective_F_gradient(x, y - h);
    const double hxx = (gxp[0] - gxm[0]) / (2 * h);
    const double hxy = 0.5 * ((gxp[1] - gxm[1]) + (gyp[0] - gym[0])) / (2 * h);
    const double hyy = (gyp[1] - gym[1]) / (2 * h);
    const double det = hxx * hyy - hxy * hxy;
    if (det == 0.0) break;
    const double dx = (hyy * g[0] - hxy * g[1]) / det;
    const double dy = (hxx * g[1] - hxy * g[0]) / det;
    x -= dx;
    y -= dy;
    out.newton_iterations = it + 1;
    if (std::hypot(dx, dy) < kNewtonTolerance) break;
  }
  if (!(x > 0.0 && x < 4.0 && y > 0.0 && y < 4.0)) {
    // Refinement escaped the domain; keep the grid point.
    x = start.x;
    y = start.y;
  }

  out.x = x;
  out.y = y;
  out.f_max = objective_F(x, y);
  out.min_value = -2.0 * out.f_max;
  out.argmin = complete_right_pentagon(x, y);

  double boundary = 0.0;
  const auto count = static_cast<std::int64_t>(4.0 / kGridStep);
  for (std::int64_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) * kGridStep;
    for (double v : {objective_F(0.0, t), objective_F(t, 0.0), objective_F(4.0, t), objective_F(t, 4.0)}) {
      boundary = std::max(boundary, v);
    }
  }
  out.boundary_dominated = out.f_max > boundary;
  return out;
}

double closed_form_min_gamma() { return -std::pow(std::sqrt(5.0) - 1.0, 5); }

double gram_det_124(double c, double b14, double b24) {
  return -8.0 + 2.0 * c * b14 * b24 + 2.0 * b14 * b14 + 2.0 * b24 * b24 + 2.0 * c * c;
}

double gamma61_alpha(double a14, double a24, std::uint64_t k) {
  if (k < 2) throw InvalidArgument("gamma61_alpha: k must be >= 2");
  return a14 * a14 + a24 * a24 + 2.0 * std::cos(std::numbers::pi / static_cast<double>(k)) * a14 * a24;
}

double average_face_bound(std::uint64_t n) {
  if (n < 4) throw InvalidArgument("average_face_bound: n must be >= 4");
  const auto nn = static_cast<double>(n);
  return n % 2 == 0 ? 4.0 + 4.0 / (nn - 2.0) : 4.0 + 4.0 / (nn - 3.0);
}

}  // namespace fieldbound
