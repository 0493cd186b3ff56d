#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace schottky_lab {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

// A point of the Riemann sphere: a finite complex number or the point at infinity.
// 
// Finite values always carry finite coordinates; constructing one from a NaN or
// an overflowed coordinate throws NonFiniteValue. Nothing is ever promoted to
// infinity implicitly because it is large; use promote_large() for that.
class ExtendedComplex {
 public:
  ExtendedComplex(Complex z);  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double x) : ExtendedComplex(Complex(x, 0.0)) {}  // NOLINT

  static ExtendedComplex infinity() noexcept { return ExtendedComplex(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  // Throws InvalidArgument on the point at infinity.
  Complex value() const;

  // Values with modulus above 1/tol become infinity. Only called on request.
  ExtendedComplex promote_large(double tol = kDefaultTolerance) const;

  std::string to_string() const;

 private:
  ExtendedComplex() = default;
  std::optional<Complex> value_;
};

// Tag-exact on infinity, absolute tolerance on finite coordinates.
bool approx_equal(const ExtendedComplex& lhs, const ExtendedComplex& rhs,
                  double tol = kDefaultTolerance);

enum class TransformClass { Identity, Parabolic, Elliptic, Loxodromic };

std::string_view to_string(TransformClass cls) noexcept;

// Element of PSL(2,C), stored as a matrix with determinant one.
// 
// The constructor divides by a square root of the determinant, so the sign of
// the matrix is arbitrary. Nothing observable through apply() depends on it.
class Mobius {
 public:
  Mobius(Complex a, Complex b, Complex c, Complex d);

  static Mobius identity() { return Mobius(1.0, 0.0, 0.0, 1.0); }
  static Mobius translation(Complex t) { return Mobius(1.0, t, 0.0, 1.0); }
  // z -> k z
  static Mobius scaling(Complex k);

  const Complex& a() const noexcept { return a_; }
  const Complex& b() const noexcept { return b_; }
  const Complex& c() const noexcept { return c_; }
  const Complex& d() const noexcept { return d_; }

  Complex determinant() const noexcept { return a_ * d_ - b_ * c_; }
  Complex trace() const noexcept { return a_ + d_; }

  ExtendedComplex operator()(const ExtendedComplex& z) const;

  Mobius inverse() const { return Mobius(Exact{}, d_, -b_, -c_, a_); }

  std::string to_string() const;

 private:
  friend Mobius operator*(const Mobius& f, const Mobius& g);
  struct Exact {};
  // Entries already have determinant one; no rescaling or singularity test.
  Mobius(Exact, Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {}

  Complex a_, b_, c_, d_;
};

// (f * g)(z) = f(g(z)).
Mobius operator*(const Mobius& f, const Mobius& g);

inline Mobius compose(const Mobius& f, const Mobius& g) { return f * g; }
inline ExtendedComplex apply(const Mobius& f, const ExtendedComplex& z) { return f(z); }

// Equality in PSL(2,C): entries agree up to a global sign.
bool approx_equal(const Mobius& f, const Mobius& g, double tol = kDefaultTolerance);

TransformClass classify(const Mobius& f, double tol = kDefaultTolerance);

// One point for parabolic maps, two otherwise (finite points first).
// Throws IdentityInput for the identity.
std::vector<ExtendedComplex> fixed_points(const Mobius& f, double tol = kDefaultTolerance);

// Returns h with h f h^-1 = (z -> z + 1). When f fixes infinity h is the
// scaling by the inverse translation length; otherwise h is that scaling
// composed with z -> 1/(z - p), p the fixed point.
Mobius conjugate_parabolic_to_unit_translation(const Mobius& f, double tol = kDefaultTolerance);

// The unique map sending (z1, z2, z3) to (w1, w2, w3).
Mobius mobius_from_points(const std::array<ExtendedComplex, 3>& from,
                          const std::array<ExtendedComplex, 3>& to,
                          double tol = kDefaultTolerance);

// (z1, z2; z3, z4) = (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)), with the
// factors containing infinity cancelled. Throws DegenerateQuadruple.
Complex cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2,
                    const ExtendedComplex& z3, const ExtendedComplex& z4,
                    double tol = kDefaultTolerance);

bool is_concyclic(const ExtendedComplex& z1, const ExtendedComplex& z2,
                  const ExtendedComplex& z3, const ExtendedComplex& z4,
                  double tol = kDefaultTolerance);

struct Circle {
  Complex center;
  double radius;
};

struct Line {
  Complex point;      // foot of the perpendicular from the origin
  Complex direction;  // unit, Im > 0 or (Im == 0 and Re > 0)
};

// A circle on the Riemann sphere: Euclidean circle or a line through infinity.
class GeneralizedCircle {
 public:
  static GeneralizedCircle circle(Complex center, double radius, double tol = kDefaultTolerance);
  static GeneralizedCircle line(Complex point, Complex direction, double tol = kDefaultTolerance);

  bool is_line() const noexcept { return std::holds_alternative<Line>(shape_); }
  bool is_circle() const noexcept { return std::holds_alternative<Circle>(shape_); }
  const Circle& as_circle() const;
  const Line& as_line() const;

  // Lines contain infinity.
  bool contains(const ExtendedComplex& z, double tol = kDefaultTolerance) const;

  // Three distinct points on the curve; for lines the last one is infinity.
  std::array<ExtendedComplex, 3> sample_points() const;

  std::string to_string() const;

 private:
  explicit GeneralizedCircle(std::variant<Circle, Line> shape) : shape_(shape) {}
  std::variant<Circle, Line> shape_;
};

bool approx_equal(const GeneralizedCircle& lhs, const GeneralizedCircle& rhs,
                  double tol = kDefaultTolerance);

// Collinear points, or a triple containing infinity, give a line.
GeneralizedCircle circle_through(const ExtendedComplex& z1, const ExtendedComplex& z2,
                                 const ExtendedComplex& z3, double tol = kDefaultTolerance);

GeneralizedCircle apply_to_circle(const Mobius& f, const GeneralizedCircle& c,
                                  double tol = kDefaultTolerance);

// Closed-form image of the open disc bounded by c. Empty when the pole of f
// lies in the closed disc, i.e. when the image is not a bounded disc. Keeps
// full relative precision for very small discs, unlike the three-point route.
std::optional<Circle> apply_to_disc(const Mobius& f, const Circle& c);

}  // namespace schottky_lab
