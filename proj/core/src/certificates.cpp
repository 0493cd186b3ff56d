#include "schottky_lab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schottky_lab/error.hpp"
#include "schottky_lab/shoebox.hpp"

namespace schottky_lab {
namespace {

nlohmann::json pair_of(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json point_json(const ExtendedComplex& z) {
  return z.is_infinite() ? nlohmann::json("inf") : pair_of(z.value());
}

void settle(Certificate& c) {
  c.pass = c.strict ? c.value > c.bound + c.tolerance : c.value >= c.bound - c.tolerance;
}

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 1.0) {
    throw SchottkyError(ErrorCode::InvalidAlpha, "alpha must be a finite number >= 1");
  }
}

CuspClass class_of_core(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  const auto letters = core.letters();
  if (std::all_of(letters.begin(), letters.end(), [](int l) { return std::abs(l) == 1; })) {
    return CuspClass::Infinity;
  }
  if (std::all_of(letters.begin(), letters.end(), [](int l) { return std::abs(l) == 2; })) {
    return CuspClass::Zero;
  }
  return CuspClass::Third;
}

}  // namespace

std::string_view to_string(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::CuspGap: return "cusp-gap";
    case CertificateKind::Slope: return "slope";
    case CertificateKind::CrossRatio: return "cross-ratio";
    case CertificateKind::SuffComp: return "suffcomp";
  }
  return "unknown";
}

std::string_view to_string(CuspClass cls) noexcept {
  switch (cls) {
    case CuspClass::Infinity: return "infinity";
    case CuspClass::Zero: return "zero";
    case CuspClass::Third: return "third";
  }
  return "unknown";
}

std::pair<Mobius, Mobius> thrice_punctured_generators(double alpha, int sign) {
  require_alpha(alpha);
  if (sign != 1 && sign != -1) throw SchottkyError(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  const double beta = -4.0 / alpha;
  return {Mobius(1.0, alpha, 0.0, 1.0), Mobius(1.0, 0.0, sign * beta, 1.0)};
}

std::vector<Cusp> enumerate_cusps(double alpha, int max_word_len, int sign, double tol) {
  const auto [a, b] = thrice_punctured_generators(alpha, sign);
  const std::array<Mobius, 2> gens{a, b};
  const auto elements = enumerate_words(gens, max_word_len);

  std::vector<Cusp> finite;
  for (const GroupElement& g : elements) {
    if (g.word.empty() || classify(g.matrix, tol) != TransformClass::Parabolic) continue;
    const ExtendedComplex fp = fixed_points(g.matrix, tol).front();
    if (fp.is_infinite()) continue;
    double y = fp.value().real();
    y -= alpha * std::floor(y / alpha);
    if (y >= alpha - tol) y = 0.0;
    const bool seen = std::any_of(finite.begin(), finite.end(), [&](const Cusp& c) {
      return std::abs(c.point.value().real() - y) <= tol;
    });
    if (!seen) finite.push_back({ExtendedComplex(y), class_of_core(g.word), g.word});
  }
  std::stable_sort(finite.begin(), finite.end(), [](const Cusp& l, const Cusp& r) {
    return l.point.value().real() < r.point.value().real();
  });

  std::vector<Cusp> out{{ExtendedComplex::infinity(), CuspClass::Infinity, Word(2, {1})}};
  out.insert(out.end(), finite.begin(), finite.end());
  return out;
}

bool vertical_geodesic_crosses(double y, double target, std::span<const GroupElement> elements,
                               double tol) {
  for (const GroupElement& g : elements) {
    const ExtendedComplex u = g.matrix(ExtendedComplex::infinity());
    const ExtendedComplex v = g.matrix(Complex(target));
    if (u.is_infinite() || v.is_infinite()) continue;
    const double lo = std::min(u.value().real(), v.value().real());
    const double hi = std::max(u.value().real(), v.value().real());
    if (lo + tol < y && y < hi - tol) return true;
  }
  return false;
}

std::vector<Cusp> simple_vertical_cusps(std::span<const Cusp> cusps,
                                        std::span<const GroupElement> elements, double tol) {
  std::vector<Cusp> out;
  for (const Cusp& c : cusps) {
    if (c.point.is_infinite()) continue;
    const double y = c.point.value().real();
    if (!vertical_geodesic_crosses(y, y, elements, tol)) out.push_back(c);
  }
  return out;
}

double translation_distance(double y1, double y2, double alpha) {
  double d = std::fmod(std::abs(y1 - y2), alpha);
  return std::min(d, alpha - d);
}

Certificate cusp_gap_certificate(double alpha, double y1, double y2, double tol) {
  require_alpha(alpha);
  if (!std::isfinite(y1) || !std::isfinite(y2)) {
    throw SchottkyError(ErrorCode::NonFiniteValue, "cusps must be finite reals");
  }
  if (std::abs(y1 - y2) <= tol) throw SchottkyError(ErrorCode::CoincidentCusps, "y1 = y2");
  Certificate c;
  c.kind = CertificateKind::CuspGap;
  c.inputs = {{"alpha", alpha}, {"y1", y1}, {"y2", y2}};
  c.value = std::abs(y1 - y2);
  c.bound = alpha / 4.0;
  c.tolerance = tol;
  c.details = {{"translation_distance", translation_distance(y1, y2, alpha)},
               {"reading", "a fail rules out simple disjoint geodesics ending at y1 and y2; "
                           "a pass makes no claim"}};
  settle(c);
  return c;
}

Certificate slope_certificate(double theta, double tol) {
  const bool disjoint = slope_ray_simplicity(theta, tol);
  Certificate c;
  c.kind = CertificateKind::Slope;
  c.inputs = {{"theta", theta}};
  c.value = std::abs(std::tan(theta));
  c.bound = 1.0 / std::sqrt(3.0);
  c.strict = true;
  c.tolerance = tol;
  c.details = {{"map", "(z-2)/(2z-3)"}, {"ray_image_disjoint", disjoint}};
  settle(c);
  return c;
}

SuffCompConfig SuffCompConfig::make(double theta, double rho, double tol) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw SchottkyError(ErrorCode::InvalidConfig, "theta must lie in (0, pi)");
  }
  const double d = 1.0 / std::sin(theta);
  if (!std::isfinite(rho) || rho < d - tol) {
    throw SchottkyError(ErrorCode::InvalidConfig, "rho must be at least csc(theta)");
  }
  return SuffCompConfig{theta, rho, d, std::polar(rho, theta - std::numbers::pi / 2),
                        -0.5 * d * std::polar(1.0, theta)};
}

Certificate suffcomp_certificate(const SuffCompConfig& cfg, Complex z4, Complex z4p, double tol) {
  const double min_gap = std::abs(cfg.translation) / 4.0;
  if (std::abs(z4 - z4p) < min_gap - tol) {
    throw SchottkyError(ErrorCode::GapTooSmall, "|z4 - z4'| is below |alpha|/4");
  }
  const ExtendedComplex z1(Complex(0.0, -1.0));
  const ExtendedComplex z2(Complex(0.0));
  const ExtendedComplex z3 = ExtendedComplex::infinity();
  const Complex cr = cross_ratio(z2, z3, z4, z1, tol);
  const Complex crp = cross_ratio(z2, z3, z4p, z1, tol);

  Certificate c;
  c.kind = CertificateKind::SuffComp;
  c.inputs = {{"theta", cfg.theta}, {"rho", cfg.rho}, {"z4", pair_of(z4)}, {"z4p", pair_of(z4p)}};
  c.value = std::max(std::abs(cr.imag()), std::abs(crp.imag()));
  c.bound = kSuffCompBound;
  c.tolerance = tol;
  c.details = {{"argument_order", "(z2, z3; z, z1) with z1 = -i, z2 = 0, z3 = inf"},
               {"cross_ratio_z4", pair_of(cr)},
               {"cross_ratio_z4p", pair_of(crp)},
               {"re_gap", std::abs(z4.real() - z4p.real())},
               {"diameter", cfg.diameter},
               {"translation", pair_of(cfg.translation)}};
  settle(c);
  return c;
}

Certificate non_concyclic_certificate(const std::array<ExtendedComplex, 4>& z, double threshold,
                                      double tol) {
  if (!(threshold > 0.0)) throw SchottkyError(ErrorCode::InvalidArgument, "threshold must be positive");
  const Complex cr = cross_ratio(z[0], z[1], z[2], z[3], tol);
  Certificate c;
  c.kind = CertificateKind::CrossRatio;
  c.inputs = {{"points", nlohmann::json::array({point_json(z[0]), point_json(z[1]),
                                                point_json(z[2]), point_json(z[3])})},
              {"threshold", threshold}};
  c.value = std::abs(cr.imag());
  c.bound = threshold;
  c.tolerance = tol;
  c.details = {{"cross_ratio", pair_of(cr)}};
  settle(c);
  return c;
}

}  // namespace schottky_lab
