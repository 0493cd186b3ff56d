#include "schottky_lab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "schottky_lab/error.hpp"

namespace schottky_lab::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw SchottkyError(ErrorCode::ParseError, what); }

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

double real_of(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

json bools(const std::vector<bool>& v) {
  json out = json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) {
    out.push_back({StrandGraph::vertex_name(u), StrandGraph::vertex_name(v)});
  }
  return out;
}

json tuple_json(const SuperstrandTuple& t) { return json::array({t[0], t[1], t[2], t[3]}); }

}  // namespace

json to_json(Complex z) { return json::array({number(z.real()), number(z.imag())}); }

json to_json(const ExtendedComplex& z) {
  return z.is_infinite() ? json("inf") : to_json(z.value());
}

json to_json(const Mobius& f) {
  return json::array({to_json(f.a()), to_json(f.b()), to_json(f.c()), to_json(f.d())});
}

json to_json(const GeneralizedCircle& c) {
  if (c.is_circle()) {
    return {{"circle", {{"center", to_json(c.as_circle().center)}, {"radius", c.as_circle().radius}}}};
  }
  return {{"line", {{"point", to_json(c.as_line().point)}, {"direction", to_json(c.as_line().direction)}}}};
}

json to_json(const Word& w) { return json(std::vector<int>(w.letters().begin(), w.letters().end())); }

json to_json(const SchottkyMarking& m) {
  json pairs = json::array();
  for (const auto& p : m.pairs()) {
    pairs.push_back({{"circle", to_json(p.circle)},
                     {"circle_prime", to_json(p.circle_prime)},
                     {"generator", to_json(p.generator)}});
  }
  return {{"genus", m.genus()}, {"tolerance", m.tolerance()}, {"pairs", pairs}};
}

json to_json(const PairRelation& r) {
  json out = {{"curves", {r.first, r.second}},
              {"relation", std::string(to_string(r.relation))},
              {"gap", number(r.gap)}};
  if (r.tangency) out["tangency"] = to_json(*r.tangency);
  return out;
}

json to_json(const ClassicalReport& r) {
  json rel = json::array();
  for (const auto& x : r.relations) rel.push_back(to_json(x));
  return {{"mode", "classical"},
          {"pass", r.pass},
          {"tolerance", r.tolerance},
          {"conditions",
           {{"pairwise_disjoint", r.pairwise_disjoint},
            {"exterior_nonempty", r.exterior_nonempty},
            {"circles_mapped", r.circles_mapped},
            {"exterior_to_interior", r.exterior_to_interior}}},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"mapped", bools(r.mapped)},
          {"oriented", bools(r.oriented)},
          {"relations", rel}};
}

json to_json(const NodedReport& r) {
  json rel = json::array();
  for (const auto& x : r.relations) rel.push_back(to_json(x));
  json tangencies = json::array();
  for (const auto& t : r.tangencies) {
    json item = {{"point", to_json(t.point)},
                 {"curves", {t.first, t.second}},
                 {"parabolic", t.parabolic},
                 {"fixes_point", t.fixes_point},
                 {"trace_defect", number(t.trace_defect)},
                 {"ok", t.ok}};
    if (t.word) {
      item["word"] = to_json(*t.word);
      item["word_string"] = t.word->to_string();
    }
    if (t.element) item["element"] = to_json(*t.element);
    if (t.classification) item["classification"] = std::string(to_string(*t.classification));
    if (!t.error.empty()) item["error"] = t.error;
    tangencies.push_back(item);
  }
  return {{"mode", "noded"},
          {"pass", r.pass},
          {"tolerance", r.tolerance},
          {"conditions",
           {{"discs_disjoint_off_tangencies", r.discs_disjoint_off_tangencies},
            {"circles_mapped", r.circles_mapped},
            {"interior_to_exterior", r.interior_to_exterior},
            {"tangencies_parabolic", r.tangencies_parabolic}}},
          {"mapped", bools(r.mapped)},
          {"oriented", bools(r.oriented)},
          {"tangencies", tangencies},
          {"relations", rel}};
}

json to_json(const PinchabilityReport& r) {
  json words = json::array();
  for (const auto& w : r.words) {
    words.push_back({{"word", to_json(w.word)},
                     {"string", w.word.to_string()},
                     {"core", to_json(w.core)},
                     {"nontrivial", w.nontrivial},
                     {"not_proper_power", w.not_proper_power}});
  }
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"words", {p.first, p.second}}, {"non_conjugate", p.non_conjugate}});
  }
  return {{"pass", r.pass}, {"words", words}, {"pairs", pairs}};
}

json to_json(const Certificate& c) {
  return {{"kind", std::string(to_string(c.kind))},
          {"inputs", c.inputs},
          {"value", number(c.value)},
          {"bound", c.bound},
          {"comparison", c.strict ? "value > bound" : "value >= bound"},
          {"verdict", c.pass ? "pass" : "fail"},
          {"tolerance", c.tolerance},
          {"details", c.details}};
}

json to_json(const Cusp& c) {
  return {{"point", to_json(c.point)}, {"class", std::string(to_string(c.cls))},
          {"word", to_json(c.word)}};
}

json to_json(const StrandGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({StrandGraph::vertex_name(e.u), StrandGraph::vertex_name(e.v), e.color});
  }
  return {{"genus", g.genus()}, {"colors", g.colors()}, {"edges", edges}};
}

json to_json(const DegreeReport& r) {
  return {{"pass", r.pass},
          {"conditions",
           {{"no_loops", r.no_loops},
            {"no_multi_edges", r.no_multi_edges},
            {"degrees_balanced", r.degrees_balanced},
            {"degrees_even", r.degrees_even},
            {"color_counts_even", r.color_counts_even},
            {"color_counts_exceed_two", r.color_counts_exceed_two},
            {"twelve_edges", r.twelve_edges},
            {"four_regular", r.four_regular}}},
          {"degrees", r.degrees},
          {"color_counts", r.color_counts}};
}

json to_json(const SuperstrandResult& r) {
  json witnesses = json::array();
  for (const auto& t : r.witnesses) witnesses.push_back(tuple_json(t));
  return {{"target", "superstrand"},
          {"max_total", r.max_total},
          {"witnesses", witnesses},
          {"tuples_examined", r.tuples_examined},
          {"admissible_tuples", r.admissible_tuples}};
}

json to_json(const GraphClassResult& r) {
  return {{"target", "octahedron"},
          {"graphs_scanned", r.graphs_scanned},
          {"labeled_count", r.labeled_count},
          {"iso_classes", r.iso_classes},
          {"edge_count", r.representative.size()},
          {"representative", edges_json(r.representative)},
          {"representative_is_octahedron", r.representative_is_octahedron}};
}

json to_json(const CubeLabelingResult& r) {
  return {{"target", "cube"},
          {"search_space", r.search_space},
          {"valid_count", r.valid_count},
          {"relaxed_count", r.relaxed_count},
          {"condition_ii_count", r.condition_ii_count},
          {"unconstrained_count", r.unconstrained_count}};
}

json to_json(const ImpossibilityTrace& t) {
  return {{"target", "genus3"},
          {"iso_classes", t.iso_classes},
          {"representative", edges_json(t.representative)},
          {"representative_is_octahedron", t.representative_is_octahedron},
          {"labelings", t.labelings},
          {"conclusion", t.impossible ? "impossible" : "undetermined"}};
}

json to_json(const ProjectionPoints& p) {
  json upper = json::array();
  json lower = json::array();
  for (Complex z : p.upper) upper.push_back(to_json(z));
  for (Complex z : p.lower) lower.push_back(to_json(z));
  return {{"upper", upper}, {"lower", lower}};
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("complex numbers are [re, im] pairs");
  return {real_of(j[0], "real part"), real_of(j[1], "imaginary part")};
}

ExtendedComplex extended_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtendedComplex::infinity();
    fail("the only string point is \"inf\"");
  }
  return ExtendedComplex(complex_from_json(j));
}

Mobius mobius_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) fail("a Mobius map is a list of four complex entries");
  return Mobius(complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
                complex_from_json(j[3]));
}

GeneralizedCircle circle_from_json(const json& j, double tol) {
  if (j.is_object() && j.contains("circle")) {
    const json& c = j.at("circle");
    return GeneralizedCircle::circle(complex_from_json(field(c, "center")),
                                     real_of(field(c, "radius"), "radius"), tol);
  }
  if (j.is_object() && j.contains("line")) {
    const json& l = j.at("line");
    return GeneralizedCircle::line(complex_from_json(field(l, "point")),
                                   complex_from_json(field(l, "direction")), tol);
  }
  fail("expected {\"circle\": ...} or {\"line\": ...}");
}

Word word_from_json(const json& j, int rank) {
  if (!j.is_array()) fail("a word is a list of signed integers");
  std::vector<int> letters;
  for (const json& x : j) letters.push_back(int_of(x, "letter"));
  return Word(rank, std::move(letters));
}

SchottkyMarking marking_from_json(const json& j) {
  const int genus = int_of(field(j, "genus"), "genus");
  const double tol = j.contains("tolerance") ? real_of(j.at("tolerance"), "tolerance") : kDefaultTolerance;
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) fail("pairs must be a list");
  if (static_cast<int>(pairs.size()) != genus) fail("genus does not match the number of pairs");
  std::vector<CirclePair> out;
  for (const json& p : pairs) {
    out.push_back({circle_from_json(field(p, "circle"), tol),
                   circle_from_json(field(p, "circle_prime"), tol),
                   mobius_from_json(field(p, "generator"))});
  }
  return SchottkyMarking(std::move(out), tol);
}

StrandGraph strand_graph_from_json(const json& j) {
  const int genus = int_of(field(j, "genus"), "genus");
  const int colors = int_of(field(j, "colors"), "colors");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) fail("edges must be a list");
  std::vector<StrandGraph::Edge> out;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
      fail("edges are [\"Ci\", \"Cjp\", color] triples");
    }
    out.push_back({StrandGraph::vertex_index(e[0].get<std::string>()),
                   StrandGraph::vertex_index(e[1].get<std::string>()), int_of(e[2], "color")});
  }
  return StrandGraph(genus, colors, std::move(out));
}

std::vector<Word> word_list_from_json(const json& j) {
  const json* list = &j;
  int rank = 0;
  if (j.is_object()) {
    rank = int_of(field(j, "rank"), "rank");
    list = &field(j, "words");
  }
  if (!list->is_array()) fail("expected a list of words");
  if (rank == 0) {
    rank = 1;
    for (const json& w : *list) {
      if (!w.is_array()) fail("a word is a list of signed integers");
      for (const json& x : w) rank = std::max(rank, std::abs(int_of(x, "letter")));
    }
  }
  std::vector<Word> out;
  for (const json& w : *list) out.push_back(word_from_json(w, rank));
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace schottky_lab::io
