#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schottky_lab/certificates.hpp"
#include "schottky_lab/combinatorics.hpp"
#include "schottky_lab/mobius.hpp"
#include "schottky_lab/schottky.hpp"
#include "schottky_lab/shoebox.hpp"
#include "schottky_lab/words.hpp"

// JSON schemas. Every *_from_json throws SchottkyError(ParseError) on shape
// errors; domain errors from the constructors propagate unchanged.
namespace schottky_lab::io {

using nlohmann::json;

json to_json(Complex z);
json to_json(const ExtendedComplex& z);  // [re, im] or "inf"
json to_json(const Mobius& f);           // [[ar, ai], [br, bi], [cr, ci], [dr, di]]
json to_json(const GeneralizedCircle& c);
json to_json(const Word& w);             // signed letters
json to_json(const SchottkyMarking& m);
json to_json(const PairRelation& r);
json to_json(const ClassicalReport& r);
json to_json(const NodedReport& r);
json to_json(const PinchabilityReport& r);
json to_json(const Certificate& c);
json to_json(const Cusp& c);
json to_json(const StrandGraph& g);
json to_json(const DegreeReport& r);
json to_json(const SuperstrandResult& r);
json to_json(const GraphClassResult& r);
json to_json(const CubeLabelingResult& r);
json to_json(const ImpossibilityTrace& t);
json to_json(const ProjectionPoints& p);

Complex complex_from_json(const json& j);
ExtendedComplex extended_from_json(const json& j);
Mobius mobius_from_json(const json& j);
GeneralizedCircle circle_from_json(const json& j, double tol = kDefaultTolerance);
Word word_from_json(const json& j, int rank);
SchottkyMarking marking_from_json(const json& j);
StrandGraph strand_graph_from_json(const json& j);

// {"rank": p, "words": [[...], ...]} or a bare list of letter lists (rank
// taken from the largest generator index).
std::vector<Word> word_list_from_json(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);  // ParseError on I/O or syntax failure

}  // namespace schottky_lab::io
