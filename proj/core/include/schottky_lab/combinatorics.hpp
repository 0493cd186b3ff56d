#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace schottky_lab {

// Multigraph on the 2p contracted defining loops. Vertex 2i is C_{i+1},
// vertex 2i+1 is C'_{i+1}; edge colors run over 1..colors.
class StrandGraph {
 public:
  struct Edge {
    int u;
    int v;
    int color;
    bool operator==(const Edge&) const = default;
  };

  // Throws InvalidGenus for genus < 1, InvalidArgument for colors < 1,
  // InvalidIndex for an out-of-range endpoint or color, UnbalancedDegrees
  // when some N_i differs from N_i'.
  StrandGraph(int genus, int colors, std::vector<Edge> edges);

  int genus() const noexcept { return genus_; }
  int colors() const noexcept { return colors_; }
  int vertex_count() const noexcept { return 2 * genus_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int degree(int vertex) const;     // loops count twice
  int color_count(int color) const; // M_j

  // Mutations keep the N_i = N_i' invariant; on violation they throw and leave
  // the graph unchanged.
  void recolor(std::size_t edge, int color);
  void add_edges(const std::vector<Edge>& edges);
  void remove_edges(std::vector<std::size_t> indices);

  static std::string vertex_name(int vertex);
  // "C3" -> 4, "C3p" -> 5. Throws ParseError.
  static int vertex_index(const std::string& name);

 private:
  static void validate(int genus, int colors, const std::vector<Edge>& edges);

  int genus_;
  int colors_;
  std::vector<Edge> edges_;
};

// Rows i = defining loops V_i, columns j = pinched geodesics L_j.
using IntersectionMatrix = std::vector<std::vector<int>>;

// Max over columns of the column sum. Throws EmptyMatrix, InvalidArgument for
// ragged rows or negative entries.
int complexity_of_marking(const IntersectionMatrix& m);

// complexity >= 11. Throws InvalidArgument for negative input.
bool sufficiently_complicated_flag(int complexity);

// Crossing counts of W_1, W_2, W_3 with R_1, R_2, R_3 in the genus-3 example.
IntersectionMatrix genus3_crossing_matrix();

using SuperstrandTuple = std::array<int, 4>;

// Largest total strand count for one tuple of superstrand counts, or -1 when
// the tuple breaks a constraint.
int superstrand_tuple_max(const SuperstrandTuple& m);

struct SuperstrandResult {
  int max_total = 0;
  std::vector<SuperstrandTuple> witnesses;
  std::size_t tuples_examined = 0;
  std::size_t admissible_tuples = 0;
};

SuperstrandResult superstrand_bound_oracle();

struct GraphClassResult {
  std::size_t graphs_scanned = 0;
  std::size_t labeled_count = 0;
  std::size_t iso_classes = 0;
  std::vector<std::pair<int, int>> representative;
  bool representative_is_octahedron = false;
};

// All simple graphs on 6 labeled vertices, filtered to 4-regular, classified
// up to isomorphism over all 720 relabelings.
GraphClassResult admissible_genus3_graphs();

struct DegreeReport {
  bool no_loops = false;
  bool no_multi_edges = false;
  bool degrees_balanced = false;
  bool degrees_even = false;
  bool color_counts_even = false;
  bool color_counts_exceed_two = false;
  bool twelve_edges = false;
  bool four_regular = false;
  bool pass = false;
  std::vector<int> degrees;
  std::vector<int> color_counts;
};

// Throws InvalidArgument unless genus = 3 and colors = 3.
DegreeReport genus3_degree_constraints_check(const StrandGraph& g);

// The octahedron on C1..C3p (no edge C_i C_i'), colored by its three 4-cycles.
StrandGraph octahedron_strand_graph();

struct CubeLabelingResult {
  std::size_t search_space = 0;
  std::size_t valid_count = 0;      // (i) and (ii)
  std::size_t relaxed_count = 0;    // (i) only
  std::size_t condition_ii_count = 0;
  std::size_t unconstrained_count = 0;
};

CubeLabelingResult cube_labeling_search();

struct ImpossibilityTrace {
  std::size_t iso_classes = 0;
  bool representative_is_octahedron = false;
  std::vector<std::pair<int, int>> representative;
  std::size_t labelings = 0;
  bool impossible = false;
};

ImpossibilityTrace genus3_impossibility();

// (3p - 3) n. Throws InvalidGenus for p < 2, InvalidArgument for n < 1.
long long planar_graph_bound(int p, int n);

}  // namespace schottky_lab
