#include "schottky_lab/mobius.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>

#include "schottky_lab/error.hpp"

namespace schottky_lab {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

// Cross product of the plane vectors u and v.
double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

void require_distinct(std::initializer_list<const ExtendedComplex*> pts, double tol,
                      ErrorCode code) {
  for (auto i = pts.begin(); i != pts.end(); ++i) {
    for (auto j = std::next(i); j != pts.end(); ++j) {
      if (approx_equal(**i, **j, tol)) {
        throw SchottkyError(code, "points " + (*i)->to_string() + " and " + (*j)->to_string() +
                                      " coincide");
      }
    }
  }
}

// Sends (z1, z2, z3) to (0, 1, infinity).
Mobius to_standard_triple(const ExtendedComplex& z1, const ExtendedComplex& z2,
                          const ExtendedComplex& z3) {
  if (z1.is_infinite()) {
    return Mobius(0.0, z2.value() - z3.value(), 1.0, -z3.value());
  }
  if (z2.is_infinite()) {
    return Mobius(1.0, -z1.value(), 1.0, -z3.value());
  }
  if (z3.is_infinite()) {
    return Mobius(1.0, -z1.value(), 0.0, z2.value() - z1.value());
  }
  const Complex p = z2.value() - z3.value();
  const Complex q = z2.value() - z1.value();
  return Mobius(p, -z1.value() * p, q, -z3.value() * q);
}

Complex canonical_direction(Complex dir) {
  constexpr double kFlat = 1e-12;
  dir /= std::abs(dir);
  if (std::abs(dir.imag()) <= kFlat) {
    dir = Complex(dir.real() < 0.0 ? -1.0 : 1.0, 0.0);
  } else if (dir.imag() < 0.0) {
    dir = -dir;
  }
  return dir;
}

}  // namespace

// ExtendedComplex

ExtendedComplex::ExtendedComplex(Complex z) : value_(z) {
  if (!finite(z)) {
    throw SchottkyError(ErrorCode::NonFiniteValue, "finite point with non-finite coordinates");
  }
}

Complex ExtendedComplex::value() const {
  if (!value_) {
    throw SchottkyError(ErrorCode::InvalidArgument, "the point at infinity has no coordinates");
  }
  return *value_;
}

ExtendedComplex ExtendedComplex::promote_large(double tol) const {
  if (value_ && std::abs(*value_) > 1.0 / tol) return infinity();
  return *this;
}

std::string ExtendedComplex::to_string() const {
  return value_ ? format_complex(*value_) : std::string("inf");
}

bool approx_equal(const ExtendedComplex& lhs, const ExtendedComplex& rhs, double tol) {
  if (lhs.is_infinite() || rhs.is_infinite()) return lhs.is_infinite() && rhs.is_infinite();
  return std::abs(lhs.value() - rhs.value()) <= tol;
}

std::string_view to_string(TransformClass cls) noexcept {
  switch (cls) {
    case TransformClass::Identity: return "identity";
    case TransformClass::Parabolic: return "parabolic";
    case TransformClass::Elliptic: return "elliptic";
    case TransformClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

// Mobius

Mobius::Mobius(Complex a, Complex b, Complex c, Complex d) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) {
    throw SchottkyError(ErrorCode::NonFiniteValue, "matrix entry is not finite");
  }
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  const Complex det = a * d - b * c;
  if (scale == 0.0 || std::abs(det) <= 1e-14 * scale * scale) {
    throw SchottkyError(ErrorCode::SingularMatrix, "determinant vanishes");
  }
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

Mobius Mobius::scaling(Complex k) {
  if (k == Complex(0.0)) throw SchottkyError(ErrorCode::SingularMatrix, "zero scale factor");
  return Mobius(k, 0.0, 0.0, 1.0);
}

ExtendedComplex Mobius::operator()(const ExtendedComplex& z) const {
  if (z.is_infinite()) {
    if (std::abs(c_) <= kDefaultTolerance) return ExtendedComplex::infinity();
    return ExtendedComplex(a_ / c_);
  }
  const Complex w = z.value();
  const Complex den = c_ * w + d_;
  // A denominator at rounding level is the pole itself, not a large value.
  if (std::abs(den) <= 4.0 * DBL_EPSILON * (std::abs(c_ * w) + std::abs(d_))) {
    return ExtendedComplex::infinity();
  }
  const Complex r = (a_ * w + b_) / den;
  if (!finite(r)) return ExtendedComplex::infinity();
  return ExtendedComplex(r);
}

std::string Mobius::to_string() const {
  return "[[" + format_complex(a_) + ", " + format_complex(b_) + "], [" + format_complex(c_) +
         ", " + format_complex(d_) + "]]";
}

// Products of determinant-one matrices skip renormalization: for long words the
// entries grow and ad - bc loses every significant digit.
Mobius operator*(const Mobius& f, const Mobius& g) {
  return Mobius(Mobius::Exact{}, f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

bool approx_equal(const Mobius& f, const Mobius& g, double tol) {
  auto close = [tol](const Mobius& x, const Mobius& y, double sign) {
    return std::abs(x.a() - sign * y.a()) <= tol && std::abs(x.b() - sign * y.b()) <= tol &&
           std::abs(x.c() - sign * y.c()) <= tol && std::abs(x.d() - sign * y.d()) <= tol;
  };
  return close(f, g, 1.0) || close(f, g, -1.0);
}

TransformClass classify(const Mobius& f, double tol) {
  if (std::abs(f.b()) <= tol && std::abs(f.c()) <= tol && std::abs(f.a() - f.d()) <= tol) {
    return TransformClass::Identity;
  }
  const Complex tr2 = f.trace() * f.trace();
  if (std::abs(tr2 - 4.0) <= tol) return TransformClass::Parabolic;
  if (std::abs(tr2.imag()) <= tol && tr2.real() >= 0.0 && tr2.real() < 4.0) {
    return TransformClass::Elliptic;
  }
  return TransformClass::Loxodromic;
}

std::vector<ExtendedComplex> fixed_points(const Mobius& f, double tol) {
  const TransformClass cls = classify(f, tol);
  if (cls == TransformClass::Identity) {
    throw SchottkyError(ErrorCode::IdentityInput, "the identity fixes every point");
  }
  if (std::abs(f.c()) <= tol) {
    // Affine map z -> (a z + b) / d.
    if (cls == TransformClass::Parabolic) return {ExtendedComplex::infinity()};
    return {ExtendedComplex(f.b() / (f.d() - f.a())), ExtendedComplex::infinity()};
  }
  const Complex diff = f.a() - f.d();
  if (cls == TransformClass::Parabolic) return {ExtendedComplex(diff / (2.0 * f.c()))};
  const Complex root = std::sqrt(f.trace() * f.trace() - 4.0);
  return {ExtendedComplex((diff + root) / (2.0 * f.c())),
          ExtendedComplex((diff - root) / (2.0 * f.c()))};
}

Mobius conjugate_parabolic_to_unit_translation(const Mobius& f, double tol) {
  if (classify(f, tol) != TransformClass::Parabolic) {
    throw SchottkyError(ErrorCode::NotParabolic, "map " + f.to_string() + " is not parabolic");
  }
  if (std::abs(f.c()) <= tol) {
    // f(z) = z + b/d; rescale the translation length to one.
    const Complex t = f.b() / f.d();
    return Mobius(1.0, 0.0, 0.0, t);
  }
  const Complex p = (f.a() - f.d()) / (2.0 * f.c());
  const Mobius send_to_infinity(0.0, 1.0, 1.0, -p);
  const Mobius moved = send_to_infinity * f * send_to_infinity.inverse();
  const Complex t = moved.b() / moved.d();
  return Mobius(1.0, 0.0, 0.0, t) * send_to_infinity;
}

Mobius mobius_from_points(const std::array<ExtendedComplex, 3>& from,
                          const std::array<ExtendedComplex, 3>& to, double tol) {
  require_distinct({&from[0], &from[1], &from[2]}, tol, ErrorCode::DegenerateTriple);
  require_distinct({&to[0], &to[1], &to[2]}, tol, ErrorCode::DegenerateTriple);
  const Mobius src = to_standard_triple(from[0], from[1], from[2]);
  const Mobius dst = to_standard_triple(to[0], to[1], to[2]);
  return dst.inverse() * src;
}

Complex cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2,
                    const ExtendedComplex& z3, const ExtendedComplex& z4, double tol) {
  require_distinct({&z1, &z2, &z3, &z4}, tol, ErrorCode::DegenerateQuadruple);
  if (z1.is_infinite()) return (z2.value() - z4.value()) / (z2.value() - z3.value());
  if (z2.is_infinite()) return (z1.value() - z3.value()) / (z1.value() - z4.value());
  if (z3.is_infinite()) return (z2.value() - z4.value()) / (z1.value() - z4.value());
  if (z4.is_infinite()) return (z1.value() - z3.value()) / (z2.value() - z3.value());
  const Complex a = z1.value(), b = z2.value(), c = z3.value(), d = z4.value();
  return (a - c) * (b - d) / ((a - d) * (b - c));
}

bool is_concyclic(const ExtendedComplex& z1, const ExtendedComplex& z2,
                  const ExtendedComplex& z3, const ExtendedComplex& z4, double tol) {
  return std::abs(cross_ratio(z1, z2, z3, z4, tol).imag()) < tol;
}

// GeneralizedCircle

GeneralizedCircle GeneralizedCircle::circle(Complex center, double radius, double tol) {
  if (!finite(center) || !std::isfinite(radius)) {
    throw SchottkyError(ErrorCode::NonFiniteValue, "circle with non-finite data");
  }
  if (radius <= tol) {
    throw SchottkyError(ErrorCode::InvalidCircle, "radius must exceed the tolerance");
  }
  return GeneralizedCircle(Circle{center, radius});
}

GeneralizedCircle GeneralizedCircle::line(Complex point, Complex direction, double tol) {
  if (!finite(point) || !finite(direction)) {
    throw SchottkyError(ErrorCode::NonFiniteValue, "line with non-finite data");
  }
  if (std::abs(direction) <= tol) {
    throw SchottkyError(ErrorCode::InvalidCircle, "line direction must be nonzero");
  }
  const Complex dir = canonical_direction(direction);
  // Foot of the perpendicular from the origin.
  const Complex foot = point - (point * std::conj(dir)).real() * dir;
  return GeneralizedCircle(Line{foot, dir});
}

const Circle& GeneralizedCircle::as_circle() const {
  if (!is_circle()) throw SchottkyError(ErrorCode::InvalidArgument, "not a Euclidean circle");
  return std::get<Circle>(shape_);
}

const Line& GeneralizedCircle::as_line() const {
  if (!is_line()) throw SchottkyError(ErrorCode::InvalidArgument, "not a line");
  return std::get<Line>(shape_);
}

bool GeneralizedCircle::contains(const ExtendedComplex& z, double tol) const {
  if (const auto* c = std::get_if<Circle>(&shape_)) {
    if (z.is_infinite()) return false;
    return std::abs(std::abs(z.value() - c->center) - c->radius) <= tol * std::max(1.0, c->radius);
  }
  const auto& l = std::get<Line>(shape_);
  if (z.is_infinite()) return true;
  const Complex offset = z.value() - l.point;
  return std::abs(cross(l.direction, offset)) <= tol * std::max(1.0, std::abs(offset));
}

std::array<ExtendedComplex, 3> GeneralizedCircle::sample_points() const {
  if (const auto* c = std::get_if<Circle>(&shape_)) {
    const Complex i(0.0, 1.0);
    return {ExtendedComplex(c->center + c->radius), ExtendedComplex(c->center + i * c->radius),
            ExtendedComplex(c->center - c->radius)};
  }
  const auto& l = std::get<Line>(shape_);
  return {ExtendedComplex(l.point), ExtendedComplex(l.point + l.direction),
          ExtendedComplex::infinity()};
}

std::string GeneralizedCircle::to_string() const {
  if (const auto* c = std::get_if<Circle>(&shape_)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", c->radius);
    return "circle(center=" + format_complex(c->center) + ", radius=" + buf + ")";
  }
  const auto& l = std::get<Line>(shape_);
  return "line(point=" + format_complex(l.point) + ", direction=" + format_complex(l.direction) +
         ")";
}

bool approx_equal(const GeneralizedCircle& lhs, const GeneralizedCircle& rhs, double tol) {
  if (lhs.is_circle() != rhs.is_circle()) return false;
  if (lhs.is_circle()) {
    const Circle& a = lhs.as_circle();
    const Circle& b = rhs.as_circle();
    const double scale = std::max({1.0, a.radius, b.radius});
    return std::abs(a.center - b.center) <= tol * scale &&
           std::abs(a.radius - b.radius) <= tol * scale;
  }
  const Line& a = lhs.as_line();
  const Line& b = rhs.as_line();
  return std::abs(cross(a.direction, b.direction)) <= tol &&
         std::abs(a.point - b.point) <= tol * std::max(1.0, std::abs(a.point));
}

GeneralizedCircle circle_through(const ExtendedComplex& z1, const ExtendedComplex& z2,
                                 const ExtendedComplex& z3, double tol) {
  require_distinct({&z1, &z2, &z3}, tol, ErrorCode::DegenerateTriple);
  std::vector<Complex> finite_pts;
  for (const auto* z : {&z1, &z2, &z3}) {
    if (z->is_finite()) finite_pts.push_back(z->value());
  }
  if (finite_pts.size() == 2) {
    return GeneralizedCircle::line(finite_pts[0], finite_pts[1] - finite_pts[0], 0.0);
  }
  const Complex p = z1.value();
  const Complex u = z2.value() - p;
  const Complex v = z3.value() - p;
  const double area2 = cross(u, v);
  if (std::abs(area2) <= tol * std::abs(u) * std::abs(v)) {
    return GeneralizedCircle::line(p, std::abs(u) >= std::abs(v) ? u : v, 0.0);
  }
  const double uu = std::norm(u);
  const double vv = std::norm(v);
  const double denom = 2.0 * area2;
  const Complex offset((v.imag() * uu - u.imag() * vv) / denom,
                       (u.real() * vv - v.real() * uu) / denom);
  return GeneralizedCircle::circle(p + offset, std::abs(offset), 0.0);
}

GeneralizedCircle apply_to_circle(const Mobius& f, const GeneralizedCircle& c, double tol) {
  const auto pts = c.sample_points();
  return circle_through(f(pts[0]), f(pts[1]), f(pts[2]), tol);
}

std::optional<Circle> apply_to_disc(const Mobius& f, const Circle& c) {
  if (f.c() == Complex(0.0)) {
    return Circle{(f.a() * c.center + f.b()) / f.d(), c.radius * std::abs(f.a() / f.d())};
  }
  // f(z) = a/c - 1 / (c^2 (z + d/c)).
  const Complex shifted = c.center + f.d() / f.c();
  const double power = std::norm(shifted) - c.radius * c.radius;
  if (power <= 0.0) return std::nullopt;
  const Complex inv_center = std::conj(shifted) / power;
  const double inv_radius = c.radius / power;
  const Complex k = -1.0 / (f.c() * f.c());
  return Circle{f.a() / f.c() + k * inv_center, inv_radius * std::abs(k)};
}

}  // namespace schottky_lab
