#include "schottky_lab/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "schottky_lab/error.hpp"

namespace schottky_lab {
namespace {

constexpr int kK6 = 6;
constexpr int kK6Edges = 15;

struct K6 {
  std::array<std::pair<int, int>, kK6Edges> edges{};
  std::array<std::array<int, kK6>, kK6> index{};

  K6() {
    int e = 0;
    for (int i = 0; i < kK6; ++i) {
      for (int j = i + 1; j < kK6; ++j) {
        edges[static_cast<std::size_t>(e)] = {i, j};
        index[i][j] = index[j][i] = e;
        ++e;
      }
    }
  }
};

const K6& k6() {
  static const K6 table;
  return table;
}

std::array<int, kK6> degrees_of(std::uint32_t mask) {
  std::array<int, kK6> deg{};
  for (int e = 0; e < kK6Edges; ++e) {
    if (mask >> e & 1U) {
      const auto [i, j] = k6().edges[static_cast<std::size_t>(e)];
      ++deg[static_cast<std::size_t>(i)];
      ++deg[static_cast<std::size_t>(j)];
    }
  }
  return deg;
}

std::uint32_t canonical(std::uint32_t mask) {
  std::array<int, kK6> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  do {
    std::uint32_t image = 0;
    for (int e = 0; e < kK6Edges; ++e) {
      if (mask >> e & 1U) {
        const auto [i, j] = k6().edges[static_cast<std::size_t>(e)];
        image |= 1U << k6().index[perm[static_cast<std::size_t>(i)]][perm[static_cast<std::size_t>(j)]];
      }
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::pair<int, int>> edges_of(std::uint32_t mask) {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < kK6Edges; ++e) {
    if (mask >> e & 1U) out.push_back(k6().edges[static_cast<std::size_t>(e)]);
  }
  return out;
}

bool complement_is_perfect_matching(std::uint32_t mask) {
  const std::uint32_t complement = ~mask & ((1U << kK6Edges) - 1U);
  const auto deg = degrees_of(complement);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

}  // namespace

// StrandGraph

StrandGraph::StrandGraph(int genus, int colors, std::vector<Edge> edges)
    : genus_(genus), colors_(colors), edges_(std::move(edges)) {
  validate(genus_, colors_, edges_);
}

void StrandGraph::validate(int genus, int colors, const std::vector<Edge>& edges) {
  if (genus < 1) throw SchottkyError(ErrorCode::InvalidGenus, "genus must be positive");
  if (colors < 1) throw SchottkyError(ErrorCode::InvalidArgument, "need at least one color");
  std::vector<int> deg(static_cast<std::size_t>(2 * genus), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= 2 * genus || e.v >= 2 * genus) {
      throw SchottkyError(ErrorCode::InvalidIndex, "edge endpoint out of range");
    }
    if (e.color < 1 || e.color > colors) {
      throw SchottkyError(ErrorCode::InvalidIndex, "edge color out of range");
    }
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (int i = 0; i < genus; ++i) {
    if (deg[static_cast<std::size_t>(2 * i)] != deg[static_cast<std::size_t>(2 * i + 1)]) {
      throw SchottkyError(ErrorCode::UnbalancedDegrees,
                          "N_" + std::to_string(i + 1) + " = " +
                              std::to_string(deg[static_cast<std::size_t>(2 * i)]) + " but N_" +
                              std::to_string(i + 1) + "' = " +
                              std::to_string(deg[static_cast<std::size_t>(2 * i + 1)]));
    }
  }
}

int StrandGraph::degree(int vertex) const {
  if (vertex < 0 || vertex >= vertex_count()) throw SchottkyError(ErrorCode::InvalidIndex, "vertex");
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == vertex) + (e.v == vertex);
  return d;
}

int StrandGraph::color_count(int color) const {
  if (color < 1 || color > colors_) throw SchottkyError(ErrorCode::InvalidIndex, "color");
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [color](const Edge& e) { return e.color == color; }));
}

void StrandGraph::recolor(std::size_t edge, int color) {
  if (edge >= edges_.size()) throw SchottkyError(ErrorCode::InvalidIndex, "edge index");
  std::vector<Edge> next = edges_;
  next[edge].color = color;
  validate(genus_, colors_, next);
  edges_ = std::move(next);
}

void StrandGraph::add_edges(const std::vector<Edge>& edges) {
  std::vector<Edge> next = edges_;
  next.insert(next.end(), edges.begin(), edges.end());
  validate(genus_, colors_, next);
  edges_ = std::move(next);
}

void StrandGraph::remove_edges(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= edges_.size()) {
    throw SchottkyError(ErrorCode::InvalidIndex, "edge index");
  }
  std::vector<Edge> next;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!std::binary_search(indices.begin(), indices.end(), i)) next.push_back(edges_[i]);
  }
  validate(genus_, colors_, next);
  edges_ = std::move(next);
}

std::string StrandGraph::vertex_name(int vertex) {
  if (vertex < 0) throw SchottkyError(ErrorCode::InvalidIndex, "vertex");
  return "C" + std::to_string(vertex / 2 + 1) + (vertex % 2 ? "p" : "");
}

int StrandGraph::vertex_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'C') {
    throw SchottkyError(ErrorCode::ParseError, "bad vertex name '" + name + "'");
  }
  std::string digits = name.substr(1);
  bool prime = false;
  if (!digits.empty() && digits.back() == 'p') {
    prime = true;
    digits.pop_back();
  }
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw SchottkyError(ErrorCode::ParseError, "bad vertex name '" + name + "'");
  }
  const int i = std::stoi(digits);
  if (i < 1) throw SchottkyError(ErrorCode::ParseError, "bad vertex name '" + name + "'");
  return 2 * (i - 1) + (prime ? 1 : 0);
}

// Complexity

int complexity_of_marking(const IntersectionMatrix& m) {
  if (m.empty() || m.front().empty()) throw SchottkyError(ErrorCode::EmptyMatrix, "empty matrix");
  const std::size_t cols = m.front().size();
  std::vector<int> sums(cols, 0);
  for (const auto& row : m) {
    if (row.size() != cols) throw SchottkyError(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] < 0) throw SchottkyError(ErrorCode::InvalidArgument, "negative intersection number");
      sums[j] += row[j];
    }
  }
  return *std::max_element(sums.begin(), sums.end());
}

bool sufficiently_complicated_flag(int complexity) {
  if (complexity < 0) throw SchottkyError(ErrorCode::InvalidArgument, "negative complexity");
  return complexity >= 11;
}

IntersectionMatrix genus3_crossing_matrix() { return {{2, 2, 2}, {2, 2, 0}, {2, 0, 2}}; }

// Superstrands

int superstrand_tuple_max(const SuperstrandTuple& m) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (m[i] < 0 || m[i] > 4) return -1;
    if (i > 0 && m[i] > m[i - 1]) return -1;
  }
  if (m[2] > 2 || m[3] > 2) return -1;
  if (m[0] == 4 && (m[1] > 2 || m[2] > 2 || m[3] > 2)) return -1;
  if (m[0] == 3 && m[1] > 3) return -1;

  // Strand counts s_i range over 0..m_i (no two strands parallel).
  int best = -1;
  for (int s0 = 0; s0 <= m[0]; ++s0) {
    for (int s1 = 0; s1 <= m[1]; ++s1) {
      for (int s2 = 0; s2 <= m[2]; ++s2) {
        for (int s3 = 0; s3 <= m[3]; ++s3) best = std::max(best, s0 + s1 + s2 + s3);
      }
    }
  }
  return best;
}

SuperstrandResult superstrand_bound_oracle() {
  SuperstrandResult r;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        for (int d = 0; d <= 4; ++d) {
          ++r.tuples_examined;
          const SuperstrandTuple t{a, b, c, d};
          const int total = superstrand_tuple_max(t);
          if (total < 0) continue;
          ++r.admissible_tuples;
          if (total > r.max_total) {
            r.max_total = total;
            r.witnesses.clear();
          }
          if (total == r.max_total) r.witnesses.push_back(t);
        }
      }
    }
  }
  return r;
}

// Octahedron

GraphClassResult admissible_genus3_graphs() {
  GraphClassResult r;
  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (1U << kK6Edges); ++mask) {
    ++r.graphs_scanned;
    const auto deg = degrees_of(mask);
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 4; })) continue;
    ++r.labeled_count;
    classes.insert(canonical(mask));
  }
  r.iso_classes = classes.size();
  if (!classes.empty()) {
    const std::uint32_t rep = *classes.begin();
    r.representative = edges_of(rep);
    r.representative_is_octahedron = complement_is_perfect_matching(rep);
  }
  return r;
}

DegreeReport genus3_degree_constraints_check(const StrandGraph& g) {
  if (g.genus() != 3 || g.colors() != 3) {
    throw SchottkyError(ErrorCode::InvalidArgument, "expected genus 3 with three colors");
  }
  DegreeReport r;
  for (int v = 0; v < g.vertex_count(); ++v) r.degrees.push_back(g.degree(v));
  for (int j = 1; j <= g.colors(); ++j) r.color_counts.push_back(g.color_count(j));

  const auto& edges = g.edges();
  r.no_loops = std::none_of(edges.begin(), edges.end(), [](const auto& e) { return e.u == e.v; });
  std::set<std::pair<int, int>> seen;
  r.no_multi_edges = true;
  for (const auto& e : edges) {
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) r.no_multi_edges = false;
  }
  r.degrees_balanced = true;
  for (int i = 0; i < g.genus(); ++i) {
    r.degrees_balanced = r.degrees_balanced && r.degrees[2 * i] == r.degrees[2 * i + 1];
  }
  auto even = [](int x) { return x % 2 == 0; };
  r.degrees_even = std::all_of(r.degrees.begin(), r.degrees.end(), even);
  r.color_counts_even = std::all_of(r.color_counts.begin(), r.color_counts.end(), even);
  r.color_counts_exceed_two =
      std::all_of(r.color_counts.begin(), r.color_counts.end(), [](int m) { return m > 2; });
  r.twelve_edges = edges.size() == 12;
  r.four_regular = std::all_of(r.degrees.begin(), r.degrees.end(), [](int d) { return d == 4; });
  r.pass = r.no_loops && r.no_multi_edges && r.degrees_balanced && r.degrees_even &&
           r.color_counts_even && r.color_counts_exceed_two && r.twelve_edges && r.four_regular;
  return r;
}

StrandGraph octahedron_strand_graph() {
  // Each color is the 4-cycle avoiding one of the pairs {C_i, C_i'}.
  return StrandGraph(3, 3,
                     {{2, 4, 1}, {4, 3, 1}, {3, 5, 1}, {5, 2, 1},
                      {0, 4, 2}, {4, 1, 2}, {1, 5, 2}, {5, 0, 2},
                      {0, 2, 3}, {2, 1, 3}, {1, 3, 3}, {3, 0, 3}});
}

// Cube labeling

CubeLabelingResult cube_labeling_search() {
  CubeLabelingResult r;
  constexpr int kVertices = 8;
  for (std::uint32_t code = 0; code < (1U << (2 * kVertices)); ++code) {
    ++r.search_space;
    std::array<int, kVertices> label{};
    for (int v = 0; v < kVertices; ++v) label[static_cast<std::size_t>(v)] = static_cast<int>(code >> (2 * v) & 3U) + 1;

    bool cond_i = true;
    bool cond_ii = true;
    for (int v = 0; v < kVertices; ++v) {
      const int lv = label[static_cast<std::size_t>(v)];
      unsigned seen = 0;
      for (int bit = 0; bit < 3; ++bit) {
        const int w = v ^ (1 << bit);
        const int lw = label[static_cast<std::size_t>(w)];
        if (lv != 4 && lw != 4) cond_i = false;
        seen |= 1U << lw;
      }
      if (lv == 4 && (seen & 0b1110U) != 0b1110U) cond_ii = false;
    }
    ++r.unconstrained_count;
    if (cond_i) ++r.relaxed_count;
    if (cond_ii) ++r.condition_ii_count;
    if (cond_i && cond_ii) ++r.valid_count;
  }
  return r;
}

ImpossibilityTrace genus3_impossibility() {
  const GraphClassResult graphs = admissible_genus3_graphs();
  const CubeLabelingResult cube = cube_labeling_search();
  ImpossibilityTrace t;
  t.iso_classes = graphs.iso_classes;
  t.representative_is_octahedron = graphs.representative_is_octahedron;
  t.representative = graphs.representative;
  t.labelings = cube.valid_count;
  t.impossible = t.iso_classes == 1 && t.representative_is_octahedron && t.labelings == 0;
  return t;
}

long long planar_graph_bound(int p, int n) {
  if (p < 2) throw SchottkyError(ErrorCode::InvalidGenus, "bound needs genus >= 2");
  if (n < 1) throw SchottkyError(ErrorCode::InvalidArgument, "n must be positive");
  return (3LL * p - 3) * n;
}

}  // namespace schottky_lab
