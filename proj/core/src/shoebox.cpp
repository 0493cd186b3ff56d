#include "schottky_lab/shoebox.hpp"

#include <cmath>
#include <numbers>

#include "schottky_lab/error.hpp"

namespace schottky_lab {

UpperHalfSpacePoint::UpperHalfSpacePoint(Complex z_, double t_) : z(z_), t(t_) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(t)) {
    throw SchottkyError(ErrorCode::NonFiniteValue, "point has non-finite coordinates");
  }
  if (t < 0.0) throw SchottkyError(ErrorCode::InvalidArgument, "height must be nonnegative");
}

void ShoeboxParams::validate() const {
  if (!(alpha0 > 1.0) || !(alpha > alpha0) || n < 1) {
    throw SchottkyError(ErrorCode::InvalidConfig, "need alpha > alpha0 > 1 and n >= 1");
  }
}

bool shoebox_contains(double alpha, const UpperHalfSpacePoint& p) {
  if (!(alpha > 1.0)) throw SchottkyError(ErrorCode::InvalidAlpha, "shoebox needs alpha > 1");
  return std::abs(p.z.imag()) <= alpha && p.t <= alpha;
}

bool truncated_box_contains(const ShoeboxParams& params, const UpperHalfSpacePoint& p) {
  params.validate();
  return shoebox_contains(params.alpha, p) && std::abs(p.z.real()) <= params.n;
}

std::string_view to_string(TranslationCase c) noexcept {
  return c == TranslationCase::Wrapped ? "wrapped" : "open";
}

TranslationCase detect_translation_case(std::span<const double> xs, double tol) {
  if (xs.empty()) throw SchottkyError(ErrorCode::UnnormalizedLoops, "no intersection abscissas");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw SchottkyError(ErrorCode::NonFiniteValue, "abscissa not finite");
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw SchottkyError(ErrorCode::UnnormalizedLoops,
                          "abscissas must be strictly increasing (one crossing per point)");
    }
  }
  const double span = xs.back() - xs.front();
  if (span > 1.0 + tol) {
    throw SchottkyError(ErrorCode::SpanTooWide, "x_m - x_1 exceeds the translation length");
  }
  return std::abs(span - 1.0) <= tol ? TranslationCase::Wrapped : TranslationCase::Open;
}

ProjectionPoints vertical_projection_points(int m, TranslationCase c, double alpha) {
  if (m < 1) throw SchottkyError(ErrorCode::InvalidArgument, "need at least one point");
  if (c == TranslationCase::Wrapped && m == 1) {
    throw SchottkyError(ErrorCode::DegenerateWrap, "wrapped case needs m >= 2");
  }
  const double denom = c == TranslationCase::Wrapped ? m - 1 : m;
  ProjectionPoints out;
  for (int k = 1; k <= m; ++k) {
    const double x = (k - 1) / denom;
    out.upper.emplace_back(x, alpha);
    out.lower.emplace_back(x, -alpha);
  }
  return out;
}

int count_slope_line_crossings(const GeneralizedCircle& curve, const Mobius& h,
                               const ShoeboxParams& params, double tol) {
  const GeneralizedCircle image = apply_to_circle(h, curve, tol);
  int count = 0;
  if (image.is_circle()) {
    const Circle& c = image.as_circle();
    for (int k = -params.n; k <= params.n; ++k) {
      const double dx = k - c.center.real();
      const double h2 = c.radius * c.radius - dx * dx;
      if (h2 < -tol * std::max(1.0, c.radius)) continue;
      const double dy = std::sqrt(std::max(0.0, h2));
      if (std::abs(c.center.imag() + dy) <= params.alpha0 ||
          std::abs(c.center.imag() - dy) <= params.alpha0) {
        ++count;
      }
    }
    return count;
  }
  const Line& l = image.as_line();
  if (std::abs(l.direction.real()) <= tol) return 0;
  for (int k = -params.n; k <= params.n; ++k) {
    const double s = (k - l.point.real()) / l.direction.real();
    if (std::abs(l.point.imag() + s * l.direction.imag()) <= params.alpha0) ++count;
  }
  return count;
}

bool slope_ray_simplicity(double theta, double tol) {
  if (!std::isfinite(theta) || theta == 0.0 || std::abs(theta) > std::numbers::pi / 2) {
    throw SchottkyError(ErrorCode::OutOfRange, "need 0 < |theta| <= pi/2");
  }
  const Mobius g(1.0, -2.0, 2.0, -3.0);
  const Mobius g_inv = g.inverse();
  const Complex e = std::polar(1.0, theta);

  // g maps the ray onto an arc from g(0) = 2/3 to g(inf) = 1/2.
  const GeneralizedCircle arc_circle =
      circle_through(g(Complex(0.0)), g(ExtendedComplex::infinity()), g(e), tol);
  if (!arc_circle.is_circle()) return false;
  const Circle& c = arc_circle.as_circle();

  // Points t e on that circle: t^2 - 2 t Re(c conj e) + |c|^2 - r^2 = 0.
  const double proj = (c.center * std::conj(e)).real();
  const double disc = proj * proj - (std::norm(c.center) - c.radius * c.radius);
  if (disc < -tol) return true;
  const double root = std::sqrt(std::max(0.0, disc));
  for (const double t : {proj - root, proj + root}) {
    if (t <= 0.0) continue;
    const ExtendedComplex pre = g_inv(Complex(t * e));
    // The preimage lies on the line through 0 and e; the arc is the part over the ray.
    if (pre.is_infinite() || (pre.value() * std::conj(e)).real() > 0.0) return false;
  }
  return true;
}

}  // namespace schottky_lab
