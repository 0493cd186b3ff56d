#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schottky_lab/mobius.hpp"
#include "schottky_lab/words.hpp"

namespace schottky_lab {

struct CirclePair {
  GeneralizedCircle circle;
  GeneralizedCircle circle_prime;
  Mobius generator;  // a_i, expected to carry circle onto circle_prime
};

// The disc bounded by a defining curve on the side away from the common
// domain. For a circle this is its Euclidean interior; for a line it is the
// half-plane {Re(conj(normal) (z - point)) > 0}.
struct DefiningDisc {
  GeneralizedCircle boundary;
  Complex normal{0.0, 0.0};

  bool contains_open(const ExtendedComplex& z, double tol) const;
  bool outside_closure(const ExtendedComplex& z, double tol) const;
};

enum class DiscRelation { Disjoint, Tangent, Crossing, Nested };

std::string_view to_string(DiscRelation rel) noexcept;

struct PairRelation {
  std::size_t first = 0;
  std::size_t second = 0;
  DiscRelation relation = DiscRelation::Disjoint;
  double gap = 0.0;  // signed separation, negative when the discs overlap
  std::optional<ExtendedComplex> tangency;
};

PairRelation relate(const DefiningDisc& lhs, const DefiningDisc& rhs, double tol);

// Genus-p marking by paired circles. Curve index k runs over [0, 2p):
// 2i is C_i (paired by a_i, letter +(i+1)), 2i+1 is C'_i (paired by a_i^-1).
// 
// Throws InvalidGenus for an empty pair list, NestedCircles when one defining
// disc contains another, InvalidCircle when a line's disc side cannot be decided.
class SchottkyMarking {
 public:
  explicit SchottkyMarking(std::vector<CirclePair> pairs, double tol = kDefaultTolerance);

  int genus() const noexcept { return static_cast<int>(pairs_.size()); }
  double tolerance() const noexcept { return tol_; }
  const std::vector<CirclePair>& pairs() const noexcept { return pairs_; }

  std::size_t curve_count() const noexcept { return discs_.size(); }
  const GeneralizedCircle& curve(std::size_t k) const { return discs_.at(k).boundary; }
  const DefiningDisc& disc(std::size_t k) const { return discs_.at(k); }
  const std::vector<PairRelation>& relations() const noexcept { return relations_; }

  // Letter of the generator that pairs curve k away from itself.
  int pairing_letter(std::size_t k) const;
  static std::size_t partner(std::size_t k) noexcept { return k ^ 1U; }

  // Matrix of a signed letter: +i is a_i, -i is a_i^-1.
  const Mobius& letter_matrix(int letter) const;
  // Disc D_g of a letter: D_{a_i} is the disc of C'_i, D_{a_i^-1} that of C_i.
  const DefiningDisc& letter_disc(int letter) const;

  Mobius evaluate(const Word& w) const;

  bool all_euclidean_circles() const noexcept;

 private:
  std::vector<CirclePair> pairs_;
  std::vector<Mobius> letter_matrices_;  // index 2i: a_i, 2i+1: a_i^-1
  std::vector<DefiningDisc> discs_;
  std::vector<PairRelation> relations_;
  double tol_;
};

// Builds a_i from three anchors on C and their images on C'. Throws
// PointsNotOnCircle, and OrientationMismatch when a point outside C does not
// land inside C'. For lines the disc side is the one away from the other curve.
Mobius build_pairing(const GeneralizedCircle& c, const GeneralizedCircle& c_prime,
                     const std::array<ExtendedComplex, 3>& anchors,
                     const std::array<ExtendedComplex, 3>& images, double tol = kDefaultTolerance);

struct ClassicalReport {
  bool pairwise_disjoint = false;
  bool exterior_nonempty = false;
  bool circles_mapped = false;
  bool exterior_to_interior = false;
  bool pass = false;
  std::optional<ExtendedComplex> witness;
  std::vector<PairRelation> relations;
  std::vector<bool> mapped;    // per pair
  std::vector<bool> oriented;  // per pair
  double tolerance = kDefaultTolerance;
};

ClassicalReport verify_classical(const SchottkyMarking& m);

struct TangencyCheck {
  ExtendedComplex point = ExtendedComplex::infinity();
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<Word> word;
  std::optional<Mobius> element;
  std::optional<TransformClass> classification;
  double trace_defect = 0.0;  // |tr^2 - 4|
  bool parabolic = false;
  bool fixes_point = false;
  bool ok = false;
  std::string error;
};

struct NodedReport {
  bool discs_disjoint_off_tangencies = false;
  bool circles_mapped = false;
  bool interior_to_exterior = false;
  bool tangencies_parabolic = false;
  bool pass = false;
  std::vector<PairRelation> relations;
  std::vector<bool> mapped;
  std::vector<bool> oriented;
  std::vector<TangencyCheck> tangencies;
  double tolerance = kDefaultTolerance;
};

// Throws CrossingCircles when two defining curves meet in two points.
NodedReport verify_noded(const SchottkyMarking& m);

// Follows the tangency cycle through x. Throws NotATangency when fewer than two
// defining curves pass through x, NonReturning after max_steps applications
// (default 4p^2) or when an image point lies on no further curve.
Word trace_tangency_word(const SchottkyMarking& m, const ExtendedComplex& x,
                         std::optional<int> max_steps = std::nullopt);

struct GroupElement {
  Word word;
  Mobius matrix;
};

// All reduced words of length <= max_len over the given generators, identity
// first, then by length; within a length the letter order is +1, -1, +2, -2, ...
std::vector<GroupElement> enumerate_words(std::span<const Mobius> generators, int max_len);

std::vector<GroupElement> enumerate_group(const SchottkyMarking& m, int max_len);

struct LimitDisc {
  Circle disc;
  Word word;
};

struct LimitSetSample {
  int depth = 0;
  std::vector<LimitDisc> discs;               // depth-d discs
  std::vector<Complex> points;                // their centers
  std::vector<std::vector<LimitDisc>> levels; // levels[d-1] holds depth-d discs
};

// Throws NotClassicalMarking unless verify_classical passes and every defining
// curve is a Euclidean circle; InvalidArgument for depth < 1.
LimitSetSample limit_set(const SchottkyMarking& m, int depth);

}  // namespace schottky_lab
