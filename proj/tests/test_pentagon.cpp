#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fieldbound/errors.hpp"
#include "fieldbound/pentagon.hpp"

using namespace fieldbound;

namespace {

const double kX0 = 2.0 * (std::sqrt(5.0) - 1.0);

double max_abs(const std::array<double, 5>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// The five relations re-derived from b-coordinates: 4 b^2 = (4 - b'^2)(4 - b''^2)
// with b^2 = 4 - q, i.e. 4(4 - q) = q' q''.
std::array<double, 5> oracle_residuals(const QCoordinates& q) {
  return {(4 * (4 - q.q14) - q.q13 * q.q24) / -4, (4 * (4 - q.q24) - q.q14 * q.q25) / -4,
          (4 * (4 - q.q25) - q.q24 * q.q35) / -4, (4 * (4 - q.q35) - q.q25 * q.q13) / -4,
          (4 * (4 - q.q13) - q.q35 * q.q14) / -4};
}

}  // namespace

TEST_CASE("pentagon_residuals") {
  const QCoordinates eq{kX0, kX0, kX0, kX0, kX0};
  CHECK(max_abs(pentagon_residuals(eq)) < 1e-12);

  const QCoordinates edge{4, 0, 4, 4, 0};
  const auto r = pentagon_residuals(edge);
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(0.0));
  CHECK(r[2] == doctest::Approx(0.0));
  CHECK(r[3] == doctest::Approx(0.0));
  CHECK(r[4] == doctest::Approx(0.0));

  const QCoordinates fours{4, 4, 4, 4, 4};
  for (double v : pentagon_residuals(fours)) CHECK(v == 4.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const QCoordinates q{u(rng), u(rng), u(rng), u(rng), u(rng)};
    const auto lib = pentagon_residuals(q);
    const auto ref = oracle_residuals(q);
    for (int j = 0; j < 5; ++j) CHECK(lib[j] == doctest::Approx(ref[j]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("complete_right_pentagon") {
  const auto q = complete_right_pentagon(kX0, kX0);
  CHECK(max_abs(pentagon_residuals(q)) < 1e-12);
  for (double v : {q.q13, q.q14, q.q24, q.q25, q.q35}) CHECK(v == doctest::Approx(kX0).epsilon(1e-12));

  CHECK_THROWS_AS(complete_right_pentagon(4.0, 4.0), DegenerateConfiguration);
  CHECK_THROWS_AS(complete_right_pentagon(-0.1, 1.0), InvalidArgument);
  CHECK_THROWS_AS(complete_right_pentagon(1.0, 4.5), InvalidArgument);

  const auto q22 = complete_right_pentagon(2.0, 2.0);
  CHECK(q22.q14 == doctest::Approx(3.0));
  CHECK(q22.q35 == doctest::Approx(8.0 / 3.0));
  CHECK(q22.q25 == doctest::Approx(8.0 / 3.0));
  // The two relations not used by the completion hold as well.
  CHECK(max_abs(pentagon_residuals(q22)) < 1e-12);
}

TEST_CASE("completion satisfies the whole system and the product identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 3.99);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng), y = u(rng);
    const auto q = complete_right_pentagon(x, y);
    CHECK(max_abs(pentagon_residuals(q)) < 1e-10);
    CHECK(q.product() == doctest::Approx(64.0 * objective_F(x, y)).epsilon(1e-9));
    // b-form, with every q_ij <= 4 here.
    const auto g = to_gram(q);
    CHECK(max_abs(pentagon_residuals_b(g)) < 1e-10);
    const auto back = to_q(g);
    CHECK(back.q25 == doctest::Approx(q.q25).epsilon(1e-12));
  }
}

TEST_CASE("objective_F") {
  CHECK(objective_F(kX0, kX0) == doctest::Approx(1.4427191).epsilon(1e-7));
  CHECK(objective_F(kX0, kX0) == doctest::Approx(std::pow(std::sqrt(5.0) - 1.0, 5) / 2.0).epsilon(1e-14));
  CHECK(objective_F(0.0, 2.5) == 0.0);
  CHECK(objective_F(2.0, 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(objective_F(4.0, 4.0), SingularInput);
  CHECK_THROWS_AS(objective_F(2.0, 8.0), SingularInput);

  // Expanded form from the reduction.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), y = u(rng);
    const double expanded = (x * x * y * y + 16 * x * y - 4 * x * x * y - 4 * x * y * y) / (16 - x * y);
    CHECK(objective_F(x, y) == doctest::Approx(expanded).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("F gradient against central differences at 100 interior points") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 3.95);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    const auto g = objective_F_gradient(x, y);
    const double dx = (objective_F(x + h, y) - objective_F(x - h, y)) / (2 * h);
    const double dy = (objective_F(x, y + h) - objective_F(x, y - h)) / (2 * h);
    CAPTURE(x);
    CAPTURE(y);
    CHECK(std::fabs(g[0] - dx) <= 1e-5 * std::max(1.0, std::fabs(dx)));
    CHECK(std::fabs(g[1] - dy) <= 1e-5 * std::max(1.0, std::fabs(dy)));
  }
}

TEST_CASE("grid_maximize_F without refinement") {
  const auto g = grid_maximize_F(0.001);
  CHECK(std::fabs(-2.0 * g.value - closed_form_min_gamma()) < 1e-4);
  CHECK(g.x == doctest::Approx(kX0).epsilon(1e-3));
  CHECK(g.x <= g.y);  // lexicographic tie-break on the symmetric pair
  CHECK_THROWS_AS(grid_maximize_F(0.0), InvalidArgument);
}

TEST_CASE("minimize_gamma") {
  const auto e = minimize_gamma();
  CHECK(std::fabs(e.min_value - closed_form_min_gamma()) < 1e-9);
  CHECK(e.min_value == doctest::Approx(-2.885438199983).epsilon(1e-12));
  CHECK(std::fabs(e.x - kX0) < 1e-6);
  CHECK(std::fabs(e.y - kX0) < 1e-6);
  for (double v : {e.argmin.q13, e.argmin.q14, e.argmin.q24, e.argmin.q25, e.argmin.q35}) {
    CHECK(std::fabs(v - 2.4721360) < 1e-6);
  }
  CHECK(max_abs(pentagon_residuals(e.argmin)) < 1e-10);
  const auto g = objective_F_gradient(e.x, e.y);
  CHECK(std::fabs(g[0]) < 1e-8);
  CHECK(std::fabs(g[1]) < 1e-8);
  CHECK(e.boundary_dominated);
  // Strict interior maximum.
  for (auto [dx, dy] : {std::pair{1e-3, 0.0}, {-1e-3, 0.0}, {0.0, 1e-3}, {0.0, -1e-3}}) {
    CHECK(objective_F(e.x + dx, e.y + dy) < e.f_max);
  }
  CHECK(e.min_value == doctest::Approx(-2.0 * e.f_max).epsilon(1e-15));
}

TEST_CASE("gram_det_124") {
  CHECK(gram_det_124(0, 0, 0) == -8.0);
  CHECK(gram_det_124(1, 2.5, 2.5) == doctest::Approx(31.5).epsilon(1e-15));

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uc(-2.0, 2.0), ub(-4.0, 4.0);
  int negatives = 0;
  for (int i = 0; i < 10000; ++i) {
    const double c = uc(rng), b14 = ub(rng), b24 = ub(rng);
    const double lhs = b14 * b14 + b24 * b24 + c * b14 * b24;
    const double rhs = 4 - c * c;
    const double d = gram_det_124(c, b14, b24);
    if (std::fabs(lhs - rhs) < 1e-12) continue;
    CHECK((d < 0) == (lhs < rhs));
    negatives += d < 0;
  }
  CHECK(negatives > 100);
}

TEST_CASE("gamma61_alpha") {
  CHECK(gamma61_alpha(0, 0, 5) == 0.0);
  CHECK(gamma61_alpha(2, 2, 3) == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(gamma61_alpha(14, 14, 1'000'000'000) == doctest::Approx(784.0).epsilon(1e-15));
  for (std::uint64_t k = 2; k < 1000; ++k) CHECK(gamma61_alpha(14, 14, k) < 784.0);
  CHECK_THROWS_AS(gamma61_alpha(1, 1, 1), InvalidArgument);

  // alpha = sin^2(pi/m) (b14^2 + b24^2 + c b14 b24) with b = a / sin(pi/m).
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 14.0);
  std::uniform_int_distribution<std::uint64_t> km(2, 40), mm(3, 40);
  for (int i = 0; i < 500; ++i) {
    const double a14 = u(rng), a24 = u(rng);
    const std::uint64_t k = km(rng), m = mm(rng);
    const double sm = std::sin(std::numbers::pi / static_cast<double>(m));
    const double b14 = a14 / sm, b24 = a24 / sm;
    const double c = 2.0 * std::cos(std::numbers::pi / static_cast<double>(k));
    CHECK(gamma61_alpha(a14, a24, k) ==
          doctest::Approx(sm * sm * (b14 * b14 + b24 * b24 + c * b14 * b24)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("average_face_bound") {
  CHECK(average_face_bound(4) == 6.0);
  CHECK(average_face_bound(5) == 6.0);
  CHECK(average_face_bound(6) == 5.0);
  CHECK(average_face_bound(7) == 5.0);
  CHECK_THROWS_AS(average_face_bound(3), InvalidArgument);
}
