#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "schottky_lab/mobius.hpp"
#include "schottky_lab/schottky.hpp"
#include "schottky_lab/words.hpp"

namespace schottky_lab {

inline constexpr double kSuffCompBound = 1.0 / 8.0;
inline constexpr double kPerturbedBound = 1.0 / 16.0;
inline constexpr double kWeldedBound = 1.0 / 32.0;

enum class CertificateKind { CuspGap, Slope, CrossRatio, SuffComp };

std::string_view to_string(CertificateKind kind) noexcept;

struct Certificate {
  CertificateKind kind = CertificateKind::CrossRatio;
  nlohmann::json inputs = nlohmann::json::object();
  double value = 0.0;
  double bound = 0.0;
  bool strict = false;  // verdict is value > bound + tol instead of value >= bound - tol
  bool pass = false;
  double tolerance = kDefaultTolerance;
  nlohmann::json details = nlohmann::json::object();
};

// a = z + alpha, b = z / (sign * beta * z + 1), beta = -4 / alpha.
// Throws InvalidAlpha for alpha < 1, InvalidArgument for sign not +-1.
std::pair<Mobius, Mobius> thrice_punctured_generators(double alpha, int sign = -1);

enum class CuspClass { Infinity, Zero, Third };

std::string_view to_string(CuspClass cls) noexcept;

struct Cusp {
  ExtendedComplex point = ExtendedComplex::infinity();
  CuspClass cls = CuspClass::Infinity;
  Word word;  // first enumerated parabolic word fixing the point
};

// Parabolic fixed points of reduced words of length <= max_word_len, reduced
// into [0, alpha) and deduplicated; infinity comes first. The class is read
// off the cyclic core: a power of a, a power of b, or anything else.
std::vector<Cusp> enumerate_cusps(double alpha, int max_word_len, int sign = -1,
                                  double tol = kDefaultTolerance);

// Does the geodesic from infinity to y meet one of g(inf, target) transversally?
bool vertical_geodesic_crosses(double y, double target, std::span<const GroupElement> elements,
                               double tol = kDefaultTolerance);

// Finite cusps whose geodesic to infinity crosses none of its enumerated
// images, so it can project to a simple geodesic.
std::vector<Cusp> simple_vertical_cusps(std::span<const Cusp> cusps,
                                        std::span<const GroupElement> elements,
                                        double tol = kDefaultTolerance);

// Distance on the circle R / alpha Z.
double translation_distance(double y1, double y2, double alpha);

// Value |y1 - y2| against alpha / 4. A failing verdict rules out both ends
// carrying simple disjoint geodesics; a pass claims nothing.
// Throws CoincidentCusps when |y1 - y2| <= tol, InvalidAlpha for alpha < 1.
Certificate cusp_gap_certificate(double alpha, double y1, double y2,
                                 double tol = kDefaultTolerance);

// Value |tan theta| against 1/sqrt(3), strict.
Certificate slope_certificate(double theta, double tol = kDefaultTolerance);

struct SuffCompConfig {
  double theta;
  double rho;
  double diameter;      // csc theta
  Complex translation;  // rho e^{i (theta - pi/2)}
  Complex disc_center;  // centre of the disc through -i tangent at 0

  // Throws InvalidConfig unless 0 < theta < pi and rho >= csc theta - tol.
  static SuffCompConfig make(double theta, double rho, double tol = kDefaultTolerance);
};

// Im(0, inf; z, -i) = Re z for z in {z4, z4p}; passes when the larger modulus
// reaches 1/8. Throws GapTooSmall when |z4 - z4p| < |alpha|/4 - tol.
Certificate suffcomp_certificate(const SuffCompConfig& cfg, Complex z4, Complex z4p,
                                 double tol = kDefaultTolerance);

// Value |Im (z1, z2; z3, z4)| against the threshold. Throws DegenerateQuadruple.
Certificate non_concyclic_certificate(const std::array<ExtendedComplex, 4>& z,
                                      double threshold = kSuffCompBound,
                                      double tol = kDefaultTolerance);

}  // namespace schottky_lab
