#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "schottky_lab/certificates.hpp"
#include "schottky_lab/combinatorics.hpp"
#include "schottky_lab/error.hpp"
#include "schottky_lab/io.hpp"
#include "schottky_lab/render.hpp"
#include "schottky_lab/schottky.hpp"
#include "schottky_lab/words.hpp"

namespace schottky_lab::cli {
namespace {

using nlohmann::json;

struct Config {
  double tol = kDefaultTolerance;
  int depth = 6;
  int max_word_len = 8;
  std::string output;
  std::string format;
  bool tol_given = false;
};

// Errors that mean "the object was read fine but fails the check".
bool is_verdict_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NestedCircles:
    case ErrorCode::CrossingCircles:
    case ErrorCode::NotClassicalMarking:
    case ErrorCode::OrientationMismatch:
    case ErrorCode::PointsNotOnCircle:
    case ErrorCode::NotATangency:
    case ErrorCode::NonReturning:
      return true;
    default:
      return false;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

[[noreturn]] void bad(const std::string& what) { throw SchottkyError(ErrorCode::ParseError, what); }

double plain_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) bad("not a number: '" + s + "'");
  return v;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const std::string& payload) {
    if (cfg.output.empty()) {
      out_ << payload;
      out_.flush();
      return;
    }
    // Write beside the target, then rename over it.
    const std::filesystem::path target(cfg.output);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) bad("cannot write '" + tmp.string() + "'");
      f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
      if (!f) bad("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      bad("cannot move output into place at '" + target.string() + "'");
    }
  }

  void emit_json(const json& j, const std::string& text_summary) {
    if (cfg.format.empty() || cfg.format == "json") {
      emit(j.dump(2) + "\n");
    } else if (cfg.format == "text") {
      emit(text_summary + "\n");
    } else {
      throw SchottkyError(ErrorCode::UnsupportedFormat,
                          "format '" + cfg.format + "' is not available for this command");
    }
  }

  void validate() const {
    if (!(cfg.tol > 0.0)) throw SchottkyError(ErrorCode::InvalidArgument, "--tol must be positive");
    if (cfg.depth < 1) throw SchottkyError(ErrorCode::InvalidArgument, "--depth must be at least 1");
    if (cfg.max_word_len < 1) {
      throw SchottkyError(ErrorCode::InvalidArgument, "--max-word-len must be at least 1");
    }
  }

  // --tol on the command line overrides the tolerance stored in the file.
  json load_marking(const std::string& file) const {
    json doc = io::read_file(file);
    if (cfg.tol_given && doc.is_object()) doc["tolerance"] = cfg.tol;
    return doc;
  }

  int verify(const std::string& file, const std::string& mode) {
    const json doc = load_marking(file);
    json report;
    bool pass = false;
    try {
      const SchottkyMarking m = io::marking_from_json(doc);
      if (mode == "classical") {
        const ClassicalReport r = verify_classical(m);
        report = io::to_json(r);
        pass = r.pass;
      } else {
        const NodedReport r = verify_noded(m);
        report = io::to_json(r);
        pass = r.pass;
      }
    } catch (const SchottkyError& e) {
      if (!is_verdict_error(e.code())) throw;
      report = {{"mode", mode}, {"pass", false}, {"tolerance", cfg.tol}, {"error", e.what()}};
    }
    emit_json(report, std::string(mode) + ": " + (pass ? "PASS" : "FAIL"));
    err_ << "verify " << mode << ": " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitPass : kExitFail;
  }

  int limitset(const std::string& file, int width, int height) {
    const ImageFormat format = parse_image_format(cfg.format.empty() ? "svg" : cfg.format);
    const SchottkyMarking m = io::marking_from_json(load_marking(file));
    const LimitSetSample sample = limit_set(m, cfg.depth);
    emit(render_limit_set(sample, format, {width, height}));
    err_ << "limitset: depth=" << sample.depth << " discs=" << sample.discs.size() << "\n";
    return kExitPass;
  }

  int certificate(const Certificate& c) {
    emit_json(io::to_json(c), verdict_line(c));
    if (cfg.format != "text" || !cfg.output.empty()) err_ << verdict_line(c) << "\n";
    return c.pass ? kExitPass : kExitFail;
  }

  int cusp_gap(double alpha, double y1, double y2) {
    Certificate c = cusp_gap_certificate(alpha, y1, y2, cfg.tol);
    const auto cusps = enumerate_cusps(alpha, cfg.max_word_len, -1, cfg.tol);
    auto is_cusp = [&](double y) {
      const double r = y - alpha * std::floor(y / alpha);
      return std::any_of(cusps.begin(), cusps.end(), [&](const Cusp& k) {
        return k.point.is_finite() && translation_distance(k.point.value().real(), r, alpha) <= cfg.tol;
      });
    };
    c.details["max_word_len"] = cfg.max_word_len;
    c.details["y1_is_enumerated_cusp"] = is_cusp(y1);
    c.details["y2_is_enumerated_cusp"] = is_cusp(y2);
    return certificate(c);
  }

  int prove(const std::string& target) {
    if (target == "genus3") {
      const ImpossibilityTrace t = genus3_impossibility();
      emit_json(io::to_json(t), std::string("genus3: ") + (t.impossible ? "impossible" : "undetermined"));
      return t.impossible ? kExitPass : kExitFail;
    }
    if (target == "superstrand") {
      const SuperstrandResult r = superstrand_bound_oracle();
      emit_json(io::to_json(r), "superstrand: max_total=" + std::to_string(r.max_total));
      return r.max_total == 10 ? kExitPass : kExitFail;
    }
    if (target == "octahedron") {
      const GraphClassResult r = admissible_genus3_graphs();
      emit_json(io::to_json(r), "octahedron: labeled=" + std::to_string(r.labeled_count) +
                                    " classes=" + std::to_string(r.iso_classes));
      const bool ok = r.labeled_count == 15 && r.iso_classes == 1 &&
                      r.representative.size() == 12 && r.representative_is_octahedron;
      return ok ? kExitPass : kExitFail;
    }
    if (target == "cube") {
      const CubeLabelingResult r = cube_labeling_search();
      emit_json(io::to_json(r), "cube: valid=" + std::to_string(r.valid_count) +
                                    " relaxed=" + std::to_string(r.relaxed_count));
      return r.valid_count == 0 && r.relaxed_count > 0 ? kExitPass : kExitFail;
    }
    throw SchottkyError(ErrorCode::InvalidArgument, "unknown proof target '" + target + "'");
  }

  int words_family(int n) {
    const Word w = pinchable_family(n);
    emit_json({{"n", n}, {"word", io::to_json(w)}, {"string", w.to_string()}, {"length", w.size()}},
              w.to_string());
    return kExitPass;
  }

  int words_genus3() {
    const Genus3Words g = genus3_pinchable_words();
    json list = json::array();
    std::string text;
    for (const Word* w : {&g.r1, &g.r2, &g.r3}) {
      list.push_back({{"word", io::to_json(*w)}, {"string", w->to_string()}, {"length", w->size()}});
      text += (text.empty() ? "" : " ") + w->to_string();
    }
    emit_json({{"rank", 3}, {"words", list}}, text);
    return kExitPass;
  }

  int words_check(const std::string& file) {
    const std::vector<Word> words = io::word_list_from_json(io::read_file(file));
    const PinchabilityReport r = pinchable_algebraic_check(words);
    emit_json(io::to_json(r), std::string("pinchable (algebraic): ") + (r.pass ? "PASS" : "FAIL"));
    err_ << "words check: " << (r.pass ? "PASS" : "FAIL") << "\n";
    return r.pass ? kExitPass : kExitFail;
  }

  Config cfg;

 private:
  static std::string verdict_line(const Certificate& c) {
    std::ostringstream s;
    s.precision(12);
    s << to_string(c.kind) << ": " << (c.pass ? "PASS" : "FAIL") << " (value " << c.value
      << (c.strict ? " vs strict bound " : " vs bound ") << c.bound << ")";
    return s.str();
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

ExtendedComplex parse_point(const std::string& raw) {
  std::string s = trim(raw);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) bad("empty complex number");
  if (s == "inf" || s == "infinity" || s == "oo") return ExtendedComplex::infinity();
  if (s.back() != 'i' && s.back() != 'j') return ExtendedComplex(Complex(plain_number(s), 0.0));

  s.pop_back();
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (!im.empty() && im[0] == '+') im.erase(0, 1);
  return ExtendedComplex(Complex(re.empty() ? 0.0 : plain_number(re), plain_number(im)));
}

double parse_real(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) bad("empty number");
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  const double den = slash == std::string::npos ? 1.0 : plain_number(s.substr(slash + 1));
  if (den == 0.0) bad("division by zero in '" + s + "'");
  double value = 0.0;
  const auto pi = num.find("pi");
  if (pi != std::string::npos) {
    if (pi + 2 != num.size()) bad("bad multiple of pi: '" + s + "'");
    std::string coef = num.substr(0, pi);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double k = 1.0;
    if (coef == "-") k = -1.0;
    else if (!coef.empty() && coef != "+") k = plain_number(coef);
    value = k * std::numbers::pi;
  } else {
    value = plain_number(num);
  }
  return value / den;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner run(out, err);
  CLI::App app{"Schottky group markings, limit sets, certificates and combinatorial checks",
               "schottky_lab"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string tol_text;
  app.add_option("--tol", tol_text, "numerical tolerance (default 1e-9)");
  app.add_option("--depth", run.cfg.depth, "limit-set depth (default 6)");
  app.add_option("--max-word-len", run.cfg.max_word_len, "maximum word length (default 8)");
  app.add_option("--output,-o", run.cfg.output, "write the result to this file");
  app.add_option("--format", run.cfg.format, "json | text | svg | ppm");

  int exit_code = kExitPass;
  std::function<int()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "check a marking file");
  std::string marking_file;
  std::string mode = "classical";
  verify->add_option("file", marking_file, "marking JSON")->required();
  verify->add_option("--mode", mode, "classical | noded")->check(CLI::IsMember({"classical", "noded"}));
  verify->callback([&] { action = [&] { return run.verify(marking_file, mode); }; });

  // limitset
  auto* limitset = app.add_subcommand("limitset", "render the limit set of a classical marking");
  int width = 800;
  int height = 800;
  limitset->add_option("file", marking_file, "marking JSON")->required();
  limitset->add_option("--width", width, "image width in pixels");
  limitset->add_option("--height", height, "image height in pixels");
  limitset->callback([&] { action = [&] { return run.limitset(marking_file, width, height); }; });

  // certify
  auto* certify = app.add_subcommand("certify", "issue a certificate");
  certify->require_subcommand(1);
  std::string alpha_text = "2";
  std::string y1_text;
  std::string y2_text;
  auto* cusp = certify->add_subcommand("cusp-gap", "cusp separation against alpha/4");
  cusp->add_option("--alpha", alpha_text, "translation length (default 2)");
  cusp->add_option("--y1", y1_text, "first cusp")->required();
  cusp->add_option("--y2", y2_text, "second cusp")->required();
  cusp->callback([&] {
    action = [&] { return run.cusp_gap(parse_real(alpha_text), parse_real(y1_text), parse_real(y2_text)); };
  });

  std::string theta_text;
  auto* slope = certify->add_subcommand("slope", "simplicity of the slope ray at angle theta");
  slope->add_option("--theta", theta_text, "angle in radians, e.g. 0.7 or pi/4")->required();
  slope->callback([&] {
    action = [&] { return run.certificate(slope_certificate(parse_real(theta_text), run.cfg.tol)); };
  });

  std::vector<std::string> points;
  std::string threshold_text = "1/8";
  auto* cross = certify->add_subcommand("crossratio", "non-concyclicity via the cross-ratio");
  cross->add_option("--points", points, "four points, e.g. 0 inf 3+4i -i")->required()->expected(4);
  cross->add_option("--threshold", threshold_text, "bound, e.g. 1/8, 1/16, 1/32");
  cross->callback([&] {
    action = [&] {
      const std::array<ExtendedComplex, 4> z{parse_point(points[0]), parse_point(points[1]),
                                             parse_point(points[2]), parse_point(points[3])};
      return run.certificate(non_concyclic_certificate(z, parse_real(threshold_text), run.cfg.tol));
    };
  });

  std::string rho_text;
  std::string z4_text;
  std::string z4p_text;
  auto* suff = certify->add_subcommand("suffcomp", "imaginary cross-ratio bound for two lifts");
  suff->add_option("--theta", theta_text, "angle in (0, pi)")->required();
  suff->add_option("--rho", rho_text, "|alpha|, at least csc(theta)")->required();
  suff->add_option("--z4", z4_text, "fixed point on the first lift")->required();
  suff->add_option("--z4p", z4p_text, "fixed point on the second lift")->required();
  suff->callback([&] {
    action = [&] {
      const auto cfg = SuffCompConfig::make(parse_real(theta_text), parse_real(rho_text), run.cfg.tol);
      const ExtendedComplex z4 = parse_point(z4_text);
      const ExtendedComplex z4p = parse_point(z4p_text);
      return run.certificate(suffcomp_certificate(cfg, z4.value(), z4p.value(), run.cfg.tol));
    };
  });

  // prove
  auto* prove = app.add_subcommand("prove", "replay an exhaustive combinatorial check");
  std::string target;
  prove->add_option("target", target, "genus3 | superstrand | octahedron | cube")
      ->required()
      ->check(CLI::IsMember({"genus3", "superstrand", "octahedron", "cube"}));
  prove->callback([&] { action = [&] { return run.prove(target); }; });

  // words
  auto* words = app.add_subcommand("words", "free-group word tools");
  words->require_subcommand(1);
  int family_n = 0;
  auto* family = words->add_subcommand("family", "the word (b1 b2)^n (b2 b1)^-n");
  family->add_option("n", family_n, "index n >= 1")->required();
  family->callback([&] { action = [&] { return run.words_family(family_n); }; });
  auto* g3 = words->add_subcommand("genus3", "the three genus-3 words");
  g3->callback([&] { action = [&] { return run.words_genus3(); }; });
  std::string words_file;
  auto* check = words->add_subcommand("check", "algebraic pinchability of a word list");
  check->add_option("file", words_file, "JSON word list")->required();
  check->callback([&] { action = [&] { return run.words_check(words_file); }; });

  // "-i", "-1/8" or "-2+3i" would otherwise be read as short options. A
  // leading space hides the dash from the parser; parse_point trims it.
  std::vector<std::string> reversed;
  reversed.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    std::string a = *it;
    if (a.size() >= 2 && a[0] == '-' && a[1] != '-') {
      try {
        (void)parse_point(a);
        a.insert(0, " ");
      } catch (const SchottkyError&) {
        try {
          (void)parse_real(a);
          a.insert(0, " ");
        } catch (const SchottkyError&) {
        }
      }
    }
    reversed.push_back(std::move(a));
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (!tol_text.empty()) {
      run.cfg.tol = parse_real(tol_text);
      run.cfg.tol_given = true;
    }
    run.validate();
    exit_code = action ? action() : kExitBadInput;
  } catch (const SchottkyError& e) {
    err << "error: " << e.what() << "\n";
    return is_verdict_error(e.code()) ? kExitFail : kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return exit_code;
}

}  // namespace schottky_lab::cli
