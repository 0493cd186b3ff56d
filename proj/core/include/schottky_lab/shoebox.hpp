#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "schottky_lab/mobius.hpp"

namespace schottky_lab {

// (z, t) in upper half-space; t = 0 is the boundary plane.
struct UpperHalfSpacePoint {
  Complex z;
  double t = 0.0;

  UpperHalfSpacePoint(Complex z_, double t_);
};

struct ShoeboxParams {
  double alpha0;
  double alpha;
  int n;  // truncation width

  // Throws InvalidConfig unless alpha > alpha0 > 1 and n >= 1.
  void validate() const;
};

// {(z, t) : |Im z| <= alpha, t <= alpha}. Throws InvalidAlpha for alpha <= 1.
bool shoebox_contains(double alpha, const UpperHalfSpacePoint& p);

// The shoebox cut down to |Re z| <= n.
bool truncated_box_contains(const ShoeboxParams& params, const UpperHalfSpacePoint& p);

enum class TranslationCase { Wrapped, Open };

std::string_view to_string(TranslationCase c) noexcept;

// Abscissas where the loops meet a horizontal line, translation length 1.
// Throws UnnormalizedLoops unless xs is nonempty and strictly increasing,
// SpanTooWide when x_m - x_1 > 1 + tol.
TranslationCase detect_translation_case(std::span<const double> xs,
                                        double tol = kDefaultTolerance);

struct ProjectionPoints {
  std::vector<Complex> upper;  // x'_k at height +alpha
  std::vector<Complex> lower;  // y'_k at height -alpha
};

// x'_k = (k-1)/(m-1) + i alpha when wrapped, (k-1)/m + i alpha when open;
// y'_k mirrors x'_k. Throws DegenerateWrap for (Wrapped, m = 1), InvalidArgument for m < 1.
ProjectionPoints vertical_projection_points(int m, TranslationCase c, double alpha);

// Number of slope lines Re z = k, |k| <= n, that h(curve) meets inside the strip
// |Im z| <= alpha0. Lines parallel to the slope lines cross none.
int count_slope_line_crossings(const GeneralizedCircle& curve, const Mobius& h,
                               const ShoeboxParams& params, double tol = kDefaultTolerance);

// True when the image of the ray arg z = theta under z -> (z-2)/(2z-3) misses
// the ray. Throws OutOfRange unless 0 < |theta| <= pi/2.
bool slope_ray_simplicity(double theta, double tol = kDefaultTolerance);

}  // namespace schottky_lab
