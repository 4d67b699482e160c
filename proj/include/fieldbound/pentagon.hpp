#pragma once

// Right-angled hyperbolic pentagon with sides beta_1..beta_5 (cyclic order),
// in q-coordinates q_ij = 4 - b_ij^2 for the five non-adjacent pairs.

#include <array>
#include <cstdint>

namespace fieldbound {

struct PentagonGram {
  double b13 = 0.0;
  double b14 = 0.0;
  double b24 = 0.0;
  double b25 = 0.0;
  double b35 = 0.0;
};

struct QCoordinates {
  double q13 = 0.0;
  double q14 = 0.0;
  double q24 = 0.0;
  double q25 = 0.0;
  double q35 = 0.0;

  double product() const { return q13 * q14 * q24 * q25 * q35; }
};

QCoordinates to_q(const PentagonGram& g);
/// b_ij = +sqrt(4 - q_ij); requires every q_ij <= 4.
PentagonGram to_gram(const QCoordinates& q);

/// Residuals of the cyclic system q_ij = 4 - q_.. q_.. / 4, in the order
/// (q14, q24, q25, q35, q13).
std::array<double, 5> pentagon_residuals(const QCoordinates& q);

/// The same five relations in b-coordinates, 4 b_ij^2 - (4 - b^2)(4 - b^2).
std::array<double, 5> pentagon_residuals_b(const PentagonGram& g);

/// q13 = x, q24 = y, then q14, q35, q25 from the first, fifth and third
/// relations. Throws InvalidArgument outside [0, 4]^2 and
/// DegenerateConfiguration when q14 = 0.
QCoordinates complete_right_pentagon(double x, double y);

/// xy (4 - x)(4 - y) / (16 - xy); q-product along the completion is 2^6 F.
/// Throws SingularInput when xy = 16.
double objective_F(double x, double y);
std::array<double, 2> objective_F_gradient(double x, double y);

struct GridMaximum {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Max of F over the lattice step * (i, j) strictly inside (0, 4)^2; ties
/// go to the lexicographically smallest (x, y).
GridMaximum grid_maximize_F(double step);

struct PentagonExtremum {
  QCoordinates argmin;
  double min_value = 0.0;  // min gamma = -2 max F
  double f_max = 0.0;
  double x = 0.0;
  double y = 0.0;
  int newton_iterations = 0;
  /// The refined interior value exceeds F on every boundary sample.
  bool boundary_dominated = false;
};

/// Grid search at step 0.001, then Newton on grad F = 0 to 1e-12.
PentagonExtremum minimize_gamma();

/// (sqrt 5 - 1)^5 with the sign of the minimum.
double closed_form_min_gamma();

double gram_det_124(double c, double b14, double b24);
double gamma61_alpha(double a14, double a24, std::uint64_t k);

/// Right side of the strict face-average bound for an n-gon: 4 + 4/(n-2)
/// for even n, 4 + 4/(n-3) for odd n.
double average_face_bound(std::uint64_t n);

}  // namespace fieldbound
