#include "schottky_lab/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "schottky_lab/error.hpp"
#include "schottky_lab/parallel.hpp"

namespace schottky_lab {
namespace {

constexpr Complex kI{0.0, 1.0};

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

// Signed coordinate of z along the disc normal of a line disc.
double normal_coordinate(const DefiningDisc& d, Complex z) {
  return (std::conj(d.normal) * (z - d.boundary.as_line().point)).real();
}

Complex representative(const GeneralizedCircle& c) {
  return c.is_circle() ? c.as_circle().center : c.as_line().point;
}

// Orients a line so that its disc avoids the majority of the given points.
DefiningDisc orient_line(const GeneralizedCircle& line, std::span<const Complex> others,
                         double tol) {
  const Line& l = line.as_line();
  const Complex n0 = kI * l.direction;
  int pos = 0;
  int neg = 0;
  for (const Complex q : others) {
    const double s = (std::conj(n0) * (q - l.point)).real();
    if (s > tol * std::max(1.0, std::abs(q - l.point))) ++pos;
    if (s < -tol * std::max(1.0, std::abs(q - l.point))) ++neg;
  }
  if (pos == neg) {
    throw SchottkyError(ErrorCode::InvalidCircle,
                        "cannot decide the disc side of " + line.to_string());
  }
  return DefiningDisc{line, pos > neg ? -n0 : n0};
}

DefiningDisc make_disc(const GeneralizedCircle& c) { return DefiningDisc{c, Complex(0.0)}; }

std::size_t letter_slot(int letter) {
  return 2 * static_cast<std::size_t>(std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

std::vector<int> letter_order(int rank) {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

bool same_point(const ExtendedComplex& a, const ExtendedComplex& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol * std::max(1.0, std::abs(b.value()));
}

bool pair_maps_circle(const CirclePair& p, double tol) {
  for (const auto& z : p.circle.sample_points()) {
    if (!p.circle_prime.contains(p.generator(z), tol)) return false;
  }
  return true;
}

std::vector<Complex> interior_candidates(const DefiningDisc& d) {
  std::vector<Complex> out;
  if (d.boundary.is_circle()) {
    const Circle& c = d.boundary.as_circle();
    out.push_back(c.center);
    for (int k = 0; k < 8; ++k) {
      out.push_back(c.center + 0.5 * c.radius * std::polar(1.0, k * std::numbers::pi / 4));
    }
    return out;
  }
  const Line& l = d.boundary.as_line();
  for (double t : {1.0, 2.0, 0.5}) {
    for (double s : {0.0, 1.0, -1.0}) out.push_back(l.point + t * d.normal + s * l.direction);
  }
  return out;
}

std::vector<Complex> exterior_candidates(const DefiningDisc& d) {
  std::vector<Complex> out;
  if (d.boundary.is_circle()) {
    const Circle& c = d.boundary.as_circle();
    for (int k = 0; k < 8; ++k) {
      out.push_back(c.center + 2.0 * c.radius * std::polar(1.0, k * std::numbers::pi / 4));
    }
    return out;
  }
  const Line& l = d.boundary.as_line();
  for (double t : {1.0, 2.0, 0.5}) {
    for (double s : {0.0, 1.0, -1.0}) out.push_back(l.point - t * d.normal + s * l.direction);
  }
  return out;
}

std::optional<ExtendedComplex> exterior_witness(const SchottkyMarking& m) {
  const double tol = m.tolerance();
  auto outside_all = [&](const ExtendedComplex& z) {
    for (std::size_t k = 0; k < m.curve_count(); ++k) {
      if (!m.disc(k).outside_closure(z, tol)) return false;
    }
    return true;
  };
  if (outside_all(ExtendedComplex::infinity())) return ExtendedComplex::infinity();
  if (outside_all(Complex(0.0))) return ExtendedComplex(Complex(0.0));
  for (double radius = 0.5; radius <= 1e6; radius *= 2.0) {
    for (int k = 0; k < 72; ++k) {
      const ExtendedComplex z(std::polar(radius, k * std::numbers::pi / 36));
      if (outside_all(z)) return z;
    }
  }
  return std::nullopt;
}

}  // namespace

bool DefiningDisc::contains_open(const ExtendedComplex& z, double tol) const {
  if (z.is_infinite()) return false;
  if (boundary.is_circle()) {
    const Circle& c = boundary.as_circle();
    return std::abs(z.value() - c.center) < c.radius - tol * std::max(1.0, c.radius);
  }
  return normal_coordinate(*this, z.value()) > tol;
}

bool DefiningDisc::outside_closure(const ExtendedComplex& z, double tol) const {
  if (boundary.is_circle()) {
    if (z.is_infinite()) return true;
    const Circle& c = boundary.as_circle();
    return std::abs(z.value() - c.center) > c.radius + tol * std::max(1.0, c.radius);
  }
  if (z.is_infinite()) return false;
  return normal_coordinate(*this, z.value()) < -tol;
}

std::string_view to_string(DiscRelation rel) noexcept {
  switch (rel) {
    case DiscRelation::Disjoint: return "disjoint";
    case DiscRelation::Tangent: return "tangent";
    case DiscRelation::Crossing: return "crossing";
    case DiscRelation::Nested: return "nested";
  }
  return "unknown";
}

PairRelation relate(const DefiningDisc& lhs, const DefiningDisc& rhs, double tol) {
  PairRelation out;
  const bool lc = lhs.boundary.is_circle();
  const bool rc = rhs.boundary.is_circle();

  if (lc && rc) {
    const Circle& a = lhs.boundary.as_circle();
    const Circle& b = rhs.boundary.as_circle();
    const double dist = std::abs(b.center - a.center);
    const double thr = tol * (a.radius + b.radius);
    out.gap = dist - a.radius - b.radius;
    if (dist + std::min(a.radius, b.radius) <= std::max(a.radius, b.radius) + thr) {
      out.relation = DiscRelation::Nested;
    } else if (std::abs(out.gap) <= thr) {
      out.relation = DiscRelation::Tangent;
      out.tangency = ExtendedComplex(a.center +
                                     (b.center - a.center) * (a.radius / (a.radius + b.radius)));
    } else {
      out.relation = out.gap > 0.0 ? DiscRelation::Disjoint : DiscRelation::Crossing;
    }
    return out;
  }

  if (lc != rc) {
    const DefiningDisc& cd = lc ? lhs : rhs;
    const DefiningDisc& ld = lc ? rhs : lhs;
    const Circle& c = cd.boundary.as_circle();
    const double s = normal_coordinate(ld, c.center);
    const double thr = tol * std::max(1.0, c.radius);
    out.gap = -s - c.radius;
    if (s - c.radius >= -thr) {
      out.relation = DiscRelation::Nested;
    } else if (std::abs(out.gap) <= thr) {
      out.relation = DiscRelation::Tangent;
      out.tangency = ExtendedComplex(c.center + ld.normal * c.radius);
    } else {
      out.relation = out.gap > 0.0 ? DiscRelation::Disjoint : DiscRelation::Crossing;
    }
    return out;
  }

  const Line& a = lhs.boundary.as_line();
  const Line& b = rhs.boundary.as_line();
  if (std::abs(cross(a.direction, b.direction)) > tol) {
    out.relation = DiscRelation::Crossing;
    out.gap = -std::numeric_limits<double>::infinity();
    return out;
  }
  if ((std::conj(lhs.normal) * rhs.normal).real() > 0.0) {
    out.relation = DiscRelation::Nested;
    out.gap = -std::numeric_limits<double>::infinity();
    return out;
  }
  // Opposite normals: the half-planes are {u > 0} and {u < s} along lhs.normal.
  out.gap = -normal_coordinate(lhs, b.point);
  if (out.gap > tol) {
    // Disjoint in the plane; the closures meet at infinity.
    out.relation = DiscRelation::Tangent;
    out.tangency = ExtendedComplex::infinity();
  } else {
    out.relation = DiscRelation::Crossing;
  }
  return out;
}

SchottkyMarking::SchottkyMarking(std::vector<CirclePair> pairs, double tol)
    : pairs_(std::move(pairs)), tol_(tol) {
  if (pairs_.empty()) throw SchottkyError(ErrorCode::InvalidGenus, "a marking needs a pair");
  if (!(tol > 0.0)) throw SchottkyError(ErrorCode::InvalidArgument, "tolerance must be positive");

  std::vector<GeneralizedCircle> curves;
  for (const auto& p : pairs_) {
    letter_matrices_.push_back(p.generator);
    letter_matrices_.push_back(p.generator.inverse());
    curves.push_back(p.circle);
    curves.push_back(p.circle_prime);
  }
  for (std::size_t k = 0; k < curves.size(); ++k) {
    if (curves[k].is_circle()) {
      discs_.push_back(make_disc(curves[k]));
      continue;
    }
    std::vector<Complex> others;
    for (std::size_t l = 0; l < curves.size(); ++l) {
      if (l != k) others.push_back(representative(curves[l]));
    }
    discs_.push_back(orient_line(curves[k], others, tol_));
  }
  for (std::size_t k = 0; k < discs_.size(); ++k) {
    for (std::size_t l = k + 1; l < discs_.size(); ++l) {
      PairRelation rel = relate(discs_[k], discs_[l], tol_);
      rel.first = k;
      rel.second = l;
      if (rel.relation == DiscRelation::Nested) {
        throw SchottkyError(ErrorCode::NestedCircles, "defining curves " + std::to_string(k) +
                                                          " and " + std::to_string(l) +
                                                          " are nested");
      }
      relations_.push_back(rel);
    }
  }
}

int SchottkyMarking::pairing_letter(std::size_t k) const {
  if (k >= discs_.size()) throw SchottkyError(ErrorCode::InvalidIndex, "curve index out of range");
  const int i = static_cast<int>(k / 2) + 1;
  return k % 2 == 0 ? i : -i;
}

const Mobius& SchottkyMarking::letter_matrix(int letter) const {
  if (letter == 0 || std::abs(letter) > genus()) {
    throw SchottkyError(ErrorCode::InvalidIndex, "letter " + std::to_string(letter));
  }
  return letter_matrices_[letter_slot(letter)];
}

const DefiningDisc& SchottkyMarking::letter_disc(int letter) const {
  if (letter == 0 || std::abs(letter) > genus()) {
    throw SchottkyError(ErrorCode::InvalidIndex, "letter " + std::to_string(letter));
  }
  const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
  return discs_[letter > 0 ? 2 * i + 1 : 2 * i];
}

Mobius SchottkyMarking::evaluate(const Word& w) const {
  if (w.rank() != genus()) {
    throw SchottkyError(ErrorCode::RankMismatch, "word rank differs from the genus");
  }
  Mobius out = Mobius::identity();
  for (int l : w.letters()) out = out * letter_matrix(l);
  return out;
}

bool SchottkyMarking::all_euclidean_circles() const noexcept {
  return std::all_of(discs_.begin(), discs_.end(),
                     [](const DefiningDisc& d) { return d.boundary.is_circle(); });
}

Mobius build_pairing(const GeneralizedCircle& c, const GeneralizedCircle& c_prime,
                     const std::array<ExtendedComplex, 3>& anchors,
                     const std::array<ExtendedComplex, 3>& images, double tol) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!c.contains(anchors[i], tol)) {
      throw SchottkyError(ErrorCode::PointsNotOnCircle,
                          "anchor " + anchors[i].to_string() + " is not on " + c.to_string());
    }
    if (!c_prime.contains(images[i], tol)) {
      throw SchottkyError(ErrorCode::PointsNotOnCircle,
                          "image " + images[i].to_string() + " is not on " + c_prime.to_string());
    }
  }
  const Mobius f = mobius_from_points(anchors, images, tol);

  auto disc_of = [tol](const GeneralizedCircle& curve, const GeneralizedCircle& other) {
    if (curve.is_circle()) return make_disc(curve);
    const Complex rep = representative(other);
    const Line& l = curve.as_line();
    const Complex n0 = kI * l.direction;
    const double s = (std::conj(n0) * (rep - l.point)).real();
    if (std::abs(s) <= tol * std::max(1.0, std::abs(rep - l.point))) return DefiningDisc{curve, n0};
    return DefiningDisc{curve, s > 0.0 ? -n0 : n0};
  };
  const DefiningDisc source = disc_of(c, c_prime);
  const DefiningDisc target = disc_of(c_prime, c);

  for (const Complex w : exterior_candidates(source)) {
    const ExtendedComplex image = f(w);
    if (image.is_infinite()) continue;
    if (!target.contains_open(image, tol)) {
      throw SchottkyError(ErrorCode::OrientationMismatch,
                          "exterior point " + ExtendedComplex(w).to_string() + " maps to " +
                              image.to_string() + ", outside the target disc");
    }
    return f;
  }
  throw SchottkyError(ErrorCode::OrientationMismatch, "every exterior witness maps to infinity");
}

ClassicalReport verify_classical(const SchottkyMarking& m) {
  const double tol = m.tolerance();
  ClassicalReport r;
  r.tolerance = tol;
  r.relations = m.relations();
  r.pairwise_disjoint = std::all_of(r.relations.begin(), r.relations.end(), [](const auto& rel) {
    return rel.relation == DiscRelation::Disjoint;
  });
  r.witness = exterior_witness(m);
  r.exterior_nonempty = r.witness.has_value();

  r.circles_mapped = true;
  r.exterior_to_interior = true;
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    const CirclePair& p = m.pairs()[i];
    const bool mapped = pair_maps_circle(p, tol);
    const bool oriented = r.witness && m.disc(2 * i + 1).contains_open(p.generator(*r.witness), tol);
    r.mapped.push_back(mapped);
    r.oriented.push_back(oriented);
    r.circles_mapped = r.circles_mapped && mapped;
    r.exterior_to_interior = r.exterior_to_interior && oriented;
  }
  r.pass = r.pairwise_disjoint && r.exterior_nonempty && r.circles_mapped && r.exterior_to_interior;
  return r;
}

NodedReport verify_noded(const SchottkyMarking& m) {
  const double tol = m.tolerance();
  NodedReport r;
  r.tolerance = tol;
  r.relations = m.relations();
  for (const auto& rel : r.relations) {
    if (rel.relation == DiscRelation::Crossing) {
      throw SchottkyError(ErrorCode::CrossingCircles,
                          "defining curves " + std::to_string(rel.first) + " and " +
                              std::to_string(rel.second) + " cross");
    }
  }
  r.discs_disjoint_off_tangencies = true;

  r.circles_mapped = true;
  r.interior_to_exterior = true;
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    const CirclePair& p = m.pairs()[i];
    const bool mapped = pair_maps_circle(p, tol);
    bool oriented = false;
    const DefiningDisc& target = m.disc(2 * i + 1);
    for (const Complex z : interior_candidates(m.disc(2 * i))) {
      const ExtendedComplex image = p.generator(z);
      if (image.is_infinite() && target.boundary.is_line()) continue;
      oriented = target.outside_closure(image, tol);
      break;
    }
    r.mapped.push_back(mapped);
    r.oriented.push_back(oriented);
    r.circles_mapped = r.circles_mapped && mapped;
    r.interior_to_exterior = r.interior_to_exterior && oriented;
  }

  r.tangencies_parabolic = true;
  for (const auto& rel : r.relations) {
    if (rel.relation != DiscRelation::Tangent) continue;
    const ExtendedComplex x = *rel.tangency;
    const bool seen = std::any_of(r.tangencies.begin(), r.tangencies.end(),
                                  [&](const TangencyCheck& t) { return same_point(t.point, x, tol); });
    if (seen) continue;

    TangencyCheck t;
    t.point = x;
    t.first = rel.first;
    t.second = rel.second;
    try {
      t.word = trace_tangency_word(m, x);
      t.element = m.evaluate(*t.word);
      t.classification = classify(*t.element, tol);
      const Complex tr = t.element->trace();
      t.trace_defect = std::abs(tr * tr - 4.0);
      t.parabolic = *t.classification == TransformClass::Parabolic;
      t.fixes_point = same_point((*t.element)(x), x, tol);
      t.ok = t.parabolic && t.fixes_point;
    } catch (const SchottkyError& e) {
      t.error = e.what();
    }
    r.tangencies_parabolic = r.tangencies_parabolic && t.ok;
    r.tangencies.push_back(std::move(t));
  }
  r.pass = r.discs_disjoint_off_tangencies && r.circles_mapped && r.interior_to_exterior &&
           r.tangencies_parabolic;
  return r;
}

Word trace_tangency_word(const SchottkyMarking& m, const ExtendedComplex& x,
                         std::optional<int> max_steps) {
  const double tol = m.tolerance();
  auto curves_through = [&](const ExtendedComplex& y, std::optional<std::size_t> skip) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < m.curve_count(); ++k) {
      if (k != skip && m.curve(k).contains(y, tol)) out.push_back(k);
    }
    return out;
  };

  const auto start = curves_through(x, std::nullopt);
  if (start.size() < 2) {
    throw SchottkyError(ErrorCode::NotATangency,
                        x.to_string() + " lies on fewer than two defining curves");
  }
  const int genus = m.genus();
  const int bound = max_steps.value_or(4 * genus * genus);

  std::vector<int> applied;
  std::size_t k = start.front();
  ExtendedComplex y = x;
  while (true) {
    if (static_cast<int>(applied.size()) >= bound) {
      throw SchottkyError(ErrorCode::NonReturning,
                          "trace from " + x.to_string() + " did not close within " +
                              std::to_string(bound) + " steps");
    }
    const int letter = m.pairing_letter(k);
    y = m.letter_matrix(letter)(y);
    applied.push_back(letter);
    if (same_point(y, x, tol)) break;
    const auto next = curves_through(y, SchottkyMarking::partner(k));
    if (next.empty()) {
      throw SchottkyError(ErrorCode::NonReturning,
                          "image point " + y.to_string() + " lies on no further defining curve");
    }
    k = next.front();
  }
  std::reverse(applied.begin(), applied.end());
  return Word(genus, std::move(applied));
}

std::vector<GroupElement> enumerate_words(std::span<const Mobius> generators, int max_len) {
  if (generators.empty()) throw SchottkyError(ErrorCode::InvalidArgument, "no generators");
  if (max_len < 0) throw SchottkyError(ErrorCode::InvalidArgument, "negative word length");
  const int rank = static_cast<int>(generators.size());
  const std::vector<int> letters = letter_order(rank);
  std::vector<Mobius> mats;
  for (const Mobius& g : generators) {
    mats.push_back(g);
    mats.push_back(g.inverse());
  }

  std::vector<GroupElement> out{{Word::identity(rank), Mobius::identity()}};
  std::size_t level_begin = 0;
  constexpr std::size_t kChunk = 256;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    const std::size_t parents = level_end - level_begin;
    const std::size_t chunks = (parents + kChunk - 1) / kChunk;
    auto children = parallel_map<std::vector<GroupElement>>(chunks, [&](std::size_t c) {
      std::vector<GroupElement> local;
      const std::size_t lo = level_begin + c * kChunk;
      const std::size_t hi = std::min(level_end, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        const GroupElement& parent = out[i];
        const auto pl = parent.word.letters();
        for (std::size_t s = 0; s < letters.size(); ++s) {
          const int l = letters[s];
          if (!pl.empty() && pl.back() == -l) continue;
          std::vector<int> w(pl.begin(), pl.end());
          w.push_back(l);
          local.push_back({Word(rank, std::move(w)), parent.matrix * mats[letter_slot(l)]});
        }
      }
      return local;
    });
    level_begin = level_end;
    for (auto& chunk : children) {
      out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
    }
  }
  return out;
}

std::vector<GroupElement> enumerate_group(const SchottkyMarking& m, int max_len) {
  std::vector<Mobius> gens;
  for (const auto& p : m.pairs()) gens.push_back(p.generator);
  return enumerate_words(gens, max_len);
}

LimitSetSample limit_set(const SchottkyMarking& m, int depth) {
  if (depth < 1) throw SchottkyError(ErrorCode::InvalidArgument, "depth must be at least 1");
  if (!m.all_euclidean_circles()) {
    throw SchottkyError(ErrorCode::NotClassicalMarking, "defining curves must all be circles");
  }
  if (!verify_classical(m).pass) {
    throw SchottkyError(ErrorCode::NotClassicalMarking, "marking fails the classical conditions");
  }
  const int rank = m.genus();
  const std::vector<int> letters = letter_order(rank);

  struct Node {
    LimitDisc disc;
    Mobius matrix;  // evaluated word
  };
  std::vector<Node> frontier;
  for (int l : letters) {
    frontier.push_back({{m.letter_disc(l).boundary.as_circle(), Word(rank, {l})},
                        m.letter_matrix(l)});
  }

  LimitSetSample sample;
  sample.depth = depth;
  auto record = [&sample](const std::vector<Node>& nodes) {
    std::vector<LimitDisc> level;
    level.reserve(nodes.size());
    for (const Node& n : nodes) level.push_back(n.disc);
    sample.levels.push_back(std::move(level));
  };
  record(frontier);

  constexpr std::size_t kChunk = 128;
  for (int d = 2; d <= depth; ++d) {
    const std::size_t chunks = (frontier.size() + kChunk - 1) / kChunk;
    auto children = parallel_map<std::vector<Node>>(chunks, [&](std::size_t c) {
      std::vector<Node> local;
      const std::size_t hi = std::min(frontier.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < hi; ++i) {
        const Node& parent = frontier[i];
        const auto pl = parent.disc.word.letters();
        for (int l : letters) {
          if (pl.back() == -l) continue;
          const auto image = apply_to_disc(parent.matrix, m.letter_disc(l).boundary.as_circle());
          if (!image) {
            throw SchottkyError(ErrorCode::NotClassicalMarking, "disc image is unbounded");
          }
          std::vector<int> w(pl.begin(), pl.end());
          w.push_back(l);
          local.push_back({{*image, Word(rank, std::move(w))}, parent.matrix * m.letter_matrix(l)});
        }
      }
      return local;
    });
    std::vector<Node> next;
    for (auto& chunk : children) {
      next.insert(next.end(), std::make_move_iterator(chunk.begin()),
                  std::make_move_iterator(chunk.end()));
    }
    frontier = std::move(next);
    record(frontier);
  }

  sample.discs = sample.levels.back();
  for (const LimitDisc& d : sample.discs) sample.points.push_back(d.disc.center);
  return sample;
}

}  // namespace schottky_lab
