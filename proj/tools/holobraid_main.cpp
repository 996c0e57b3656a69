// holobraid: braid-group algebra (Garside normal/summit forms, conjugacy),
// holonomic N|P rewriting with isotopy certificates, and numerical analysis
// of holonomic / Legendrian Fourier parametrizations.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holobraid/braid.hpp"
#include "holobraid/curve.hpp"
#include "holobraid/garside.hpp"
#include "holobraid/holonomic.hpp"
#include "holobraid/legendrian.hpp"
#include "holobraid/svg.hpp"

namespace hb = holobraid;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

// FNV-1a, for the deterministic input digest in reports.
std::string digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

hb::BraidWord load_word(const std::string& path) { return hb::parse_word(read_file(path)); }

hb::FourierSeries load_fourier(const std::string& path) {
  return hb::parse_fourier(read_file(path));
}

hb::HolonomicForm load_form(const std::string& path) {
  return hb::parse_holonomic(read_file(path));
}

// Curve options shared by `curve` and `cousin`; precedence: explicit flag >
// --config file > built-in default.
struct CurveFlags {
  std::string config_path;
  hb::CurveConfig cfg;
  CLI::Option* samples = nullptr;
  CLI::Option* root_tol = nullptr;
  CLI::Option* match_tol = nullptr;
  CLI::Option* dedupe_tol = nullptr;
  CLI::Option* axis_tol = nullptr;
  CLI::Option* cluster_tol = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON file overriding tolerances");
    samples = app->add_option("--samples", cfg.samples, "grid points per cycle");
    root_tol = app->add_option("--root-tol", cfg.root_tol, "root refinement tolerance");
    match_tol = app->add_option("--match-tol", cfg.match_tol, "double-point matching tolerance");
    dedupe_tol = app->add_option("--dedupe-tol", cfg.dedupe_tol, "dedupe radius");
    axis_tol = app->add_option("--axis-tol", cfg.axis_tol, "condition-(2) axis tolerance");
    cluster_tol = app->add_option("--cluster-tol", cfg.cluster_tol, "triple-point clustering");
  }

  hb::CurveConfig resolve() const {
    hb::CurveConfig out;  // defaults
    if (!config_path.empty()) {
      ordered_json doc;
      try {
        doc = ordered_json::parse(read_file(config_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError("config file is not valid JSON: " + std::string(e.what()));
      }
      for (const auto& [key, value] : doc.items()) {
        if (key == "samples") out.samples = value.get<int>();
        else if (key == "root_tol") out.root_tol = value.get<double>();
        else if (key == "match_tol") out.match_tol = value.get<double>();
        else if (key == "dedupe_tol") out.dedupe_tol = value.get<double>();
        else if (key == "axis_tol") out.axis_tol = value.get<double>();
        else if (key == "cluster_tol") out.cluster_tol = value.get<double>();
        else throw InputError("unknown config key '" + key + "'");
      }
    }
    if (samples && samples->count()) out.samples = cfg.samples;
    if (root_tol && root_tol->count()) out.root_tol = cfg.root_tol;
    if (match_tol && match_tol->count()) out.match_tol = cfg.match_tol;
    if (dedupe_tol && dedupe_tol->count()) out.dedupe_tol = cfg.dedupe_tol;
    if (axis_tol && axis_tol->count()) out.axis_tol = cfg.axis_tol;
    if (cluster_tol && cluster_tol->count()) out.cluster_tol = cfg.cluster_tol;
    return out;
  }
};

ordered_json report_header(const std::string& command, const std::string& input_data) {
  ordered_json j;
  j["command"] = command;
  j["input_digest"] = digest(input_data);
  return j;
}

ordered_json condition_json(const hb::ConditionResult& c) {
  ordered_json j;
  j["pass"] = c.pass;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ordered_json genericity_json(const hb::GenericityReport& rep) {
  ordered_json j;
  j["condition1_embedded"] = condition_json(rep.embedded);
  j["condition2_off_axis"] = condition_json(rep.off_axis);
  j["condition3_no_triple"] = condition_json(rep.no_triple);
  j["condition4_zero_balance"] = condition_json(rep.zero_balance);
  j["zeros_f"] = rep.zeros_f;
  j["zeros_fprime"] = rep.zeros_fprime;
  j["all_pass"] = rep.all_pass();
  if (rep.braid_index) j["braid_index"] = *rep.braid_index;
  ordered_json dps = ordered_json::array();
  for (const auto& dp : rep.points) {
    ordered_json d;
    d["t1"] = dp.t1;
    d["t2"] = dp.t2;
    d["x"] = dp.x;
    d["y"] = dp.y;
    d["sign"] = dp.sign;
    d["half_plane"] = dp.upper ? "upper" : "lower";
    dps.push_back(d);
  }
  j["double_points"] = dps;
  if (!rep.diagnostics.empty()) j["diagnostics"] = rep.diagnostics;
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

int run_nf(const std::string& path) {
  const auto word = load_word(path);
  std::cout << hb::serialize_normal_form(hb::left_normal_form(word)) << '\n';
  return kExitOk;
}

int run_eq(const std::string& a, const std::string& b) {
  const auto wa = load_word(a), wb = load_word(b);
  std::cout << (hb::words_equal(wa, wb) ? "EQUAL" : "NOT EQUAL") << '\n';
  return kExitOk;
}

int run_conj(const std::string& a, const std::string& b, int strand_cap) {
  const auto wa = load_word(a), wb = load_word(b);
  hb::GarsideConfig cfg;
  cfg.strand_cap = strand_cap;
  const auto witness = hb::conjugate_test(wa, wb, cfg);
  if (!witness) {
    std::cout << "NOT CONJUGATE\n";
    return kExitOk;
  }
  const auto conjugated = hb::compose(hb::compose(hb::invert(*witness), wa), *witness);
  std::cout << "CONJUGATE\n";
  std::cout << "witness: " << hb::serialize_word(*witness) << '\n';
  std::cout << "verified: " << (hb::words_equal(conjugated, wb) ? "PASS" : "FAIL") << '\n';
  return kExitOk;
}

int run_summit(const std::string& path) {
  const auto word = load_word(path);
  const auto res = hb::summit_form(word);
  std::cout << hb::serialize_normal_form(res.form) << '\n';
  const auto w = res.witness.word(word.strands);
  std::cout << "witness: " << hb::serialize_word(w) << '\n';
  const auto conj = hb::compose(hb::compose(hb::invert(w), word), w);
  std::cout << "verified: "
            << (hb::words_equal(conj, hb::to_word(res.form)) ? "PASS" : "FAIL") << '\n';
  return kExitOk;
}

int run_summit_set(const std::string& path, int strand_cap) {
  const auto word = load_word(path);
  hb::GarsideConfig cfg;
  cfg.strand_cap = strand_cap;
  const auto set = hb::summit_set(word, cfg);
  std::cout << "size: " << set.size() << '\n';
  for (const auto& nf : set) std::cout << hb::serialize_normal_form(nf) << '\n';
  return kExitOk;
}

int run_holonomize(const std::string& path, const std::string& cert_path) {
  const auto word = load_word(path);
  const auto h = hb::holonomize(word);
  std::cout << hb::serialize_holonomic(h) << '\n';
  std::cout << "roundtrip: "
            << (hb::words_equal(hb::open_word(h), word) ? "PASS" : "FAIL") << '\n';
  if (!cert_path.empty()) {
    hb::IsotopyCertificate cert(h);
    hb::holonomic_normal_form(h, &cert);
    write_file(cert_path, hb::serialize_certificate(cert));
    std::cout << "certificate: " << cert_path << " ("
              << (hb::verify_certificate(cert).ok ? "PASS" : "FAIL") << ", "
              << cert.steps.size() << " steps)\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path) {
  const auto cert = hb::parse_certificate(read_file(path));
  const auto res = hb::verify_certificate(cert);
  if (res.ok) {
    std::cout << "PASS (" << cert.steps.size() << " steps)\n";
    return kExitOk;
  }
  std::cout << "FAIL at step " << res.failed_step << ": " << res.reason << '\n';
  return kExitDomain;
}

int run_curve(const std::string& action, const std::string& path, const CurveFlags& flags,
              const std::string& out_path) {
  const auto cfg = flags.resolve();
  const std::string data = read_file(path);
  const auto f = hb::parse_fourier(data);
  if (action == "check") {
    auto j = report_header("curve check", data);
    j["genericity"] = genericity_json(hb::genericity_report(f, cfg));
    try {
      j["separating_point"] = hb::braid_axis_point(f, cfg);
    } catch (const hb::NoSeparatingPointError& e) {
      j["separating_point"] = nullptr;
      j["warnings"] = {std::string("NoSeparatingPoint: ") + e.what()};
    } catch (const hb::DegenerateInputError& e) {
      j["separating_point"] = nullptr;
      j["warnings"] = {std::string("degenerate: ") + e.what()};
    }
    emit(j.dump(2) + "\n", out_path);
    return kExitOk;
  }
  if (action == "braid") {
    const auto word = hb::extract_braid(f, cfg);
    std::cout << hb::serialize_word(word) << '\n';
    return kExitOk;
  }
  if (action == "csv") {
    emit(hb::curve_csv(f, cfg.samples), out_path);
    return kExitOk;
  }
  emit(hb::render_projection_svg(f, cfg), out_path);
  return kExitOk;
}

int run_cousin(const std::string& action, const std::string& path, int k,
               const CurveFlags& flags, const std::string& out_path, int dasbach_m,
               bool dasbach_verbatim) {
  const auto cfg = flags.resolve();
  const std::string data = read_file(path);
  const auto f = hb::parse_fourier(data);
  const hb::CousinParams params{k, f};

  if (action == "front") {
    const auto d = hb::front_diagram(params, cfg);
    auto j = report_header("cousin front", data);
    j["k"] = k;
    ordered_json crossings = ordered_json::array();
    for (const auto& c : d.crossings) {
      ordered_json cj;
      cj["t1"] = c.t1;
      cj["t2"] = c.t2;
      cj["x"] = c.x;
      cj["v"] = c.v;
      cj["sign"] = c.sign;
      crossings.push_back(cj);
    }
    j["crossings"] = crossings;
    j["cusps"] = d.cusps;
    emit(j.dump(2) + "\n", out_path);
    return kExitOk;
  }
  if (action == "check") {
    auto j = report_header("cousin check", data);
    j["k"] = k;
    std::vector<std::string> warnings;
    if (k == 0) {
      // L_0 is the holonomic curve itself: beta-tangent, not a front.
      j["kind"] = "holonomic, not a front";
      std::vector<hb::TangentSample> off_axis;
      for (const auto& s : hb::sample_holonomic(f, cfg.samples)) {
        if (std::abs(s.w) > 10 * cfg.axis_tol) off_axis.push_back(s);
      }
      j["beta_residual_off_axis"] = hb::tangency_residual(off_axis, hb::ContactForm::Beta);
    } else {
      j["kind"] = "legendrian front";
      const auto samples = hb::sample_cousin(params, cfg.samples);
      j["alpha_residual"] = hb::tangency_residual(samples, hb::ContactForm::Alpha);
      const auto d = hb::front_diagram(params, cfg);
      j["cusps"] = d.cusps.size();
      j["crossings"] = d.crossings.size();
      bool all_negative = true;
      for (const auto& c : d.crossings) all_negative &= (c.sign == -1);
      j["all_crossings_negative"] = all_negative;
    }
    if (dasbach_m >= 1 && k >= 1) {
      ordered_json iso;
      iso["m"] = dasbach_m;
      iso["verbatim"] = dasbach_verbatim;
      ordered_json residuals = ordered_json::array();
      double worst = 0;
      for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto samples =
            hb::sample_dasbach(f, k, dasbach_m, s, cfg.samples, dasbach_verbatim);
        const double r = hb::tangency_residual(samples, hb::ContactForm::Alpha);
        worst = std::max(worst, r);
        ordered_json rj;
        rj["s"] = s;
        rj["alpha_residual"] = r;
        residuals.push_back(rj);
      }
      iso["residuals"] = residuals;
      j["dasbach"] = iso;
      if (dasbach_verbatim && worst > 1e-9) {
        std::ostringstream os;
        os << "verbatim Dasbach formula is not alpha-tangent (max residual " << worst
           << "); the corrected coefficients (2m+1) restore tangency";
        warnings.push_back(os.str());
      }
    }
    if (!warnings.empty()) j["warnings"] = warnings;
    emit(j.dump(2) + "\n", out_path);
    return kExitOk;
  }
  emit(hb::render_front_svg(params, cfg), out_path);
  return kExitOk;
}

std::vector<hb::MarkovScriptOp> parse_script(const std::string& text, int start_strands) {
  std::vector<hb::MarkovScriptOp> ops;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  int strands = start_strands;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd) || cmd[0] == '#') continue;
    hb::MarkovScriptOp op;
    if (cmd == "stab") {
      std::string sign;
      if (!(ls >> sign) || (sign != "+1" && sign != "-1")) {
        throw hb::ParseError("stab needs +1 or -1", lineno, 1);
      }
      op.kind = hb::MarkovScriptOp::Kind::Stabilize;
      op.sign = sign == "+1" ? 1 : -1;
      ++strands;
    } else if (cmd == "destab") {
      op.kind = hb::MarkovScriptOp::Kind::Destabilize;
      --strands;
      if (strands < 1) throw hb::ParseError("destab below one strand", lineno, 1);
    } else if (cmd == "conj") {
      op.kind = hb::MarkovScriptOp::Kind::Conjugate;
      std::vector<int> letters;
      int letter;
      while (ls >> letter) letters.push_back(letter);
      op.conj = hb::BraidWord(strands, letters);
    } else if (cmd == "summit") {
      op.kind = hb::MarkovScriptOp::Kind::Summit;
    } else {
      throw hb::ParseError("unknown script command '" + cmd + "'", lineno, 1);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

int run_isotopy(const std::string& action, const std::string& form_path, int sign,
                const std::string& script_path, const std::string& cert_path) {
  const auto h = load_form(form_path);
  hb::IsotopyCertificate cert(h);
  hb::HolonomicForm result = h;
  if (action == "stabilize") {
    result = hb::markov_stabilize(h, sign, &cert);
  } else if (action == "destabilize") {
    result = hb::markov_destabilize(h, &cert);
  } else {  // replay
    if (script_path.empty()) throw InputError("replay needs --script");
    const auto script = parse_script(read_file(script_path), h.strands);
    cert = hb::replay_markov_script(h, script);
    result = cert.final_form();
  }
  std::cout << hb::serialize_holonomic(result) << '\n';
  const auto verdict = hb::verify_certificate(cert);
  std::cout << "certificate: " << (verdict.ok ? "PASS" : "FAIL") << " (" << cert.steps.size()
            << " steps)\n";
  if (!cert_path.empty()) write_file(cert_path, hb::serialize_certificate(cert));
  return verdict.ok ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid algebra, holonomic rewriting, and Fourier knot analysis"};
  app.require_subcommand(1);

  std::string path_a, path_b, out_path, cert_path, script_path;
  int strand_cap = 6;
  int k = 1, sign = 1, dasbach_m = 0;
  bool dasbach_verbatim = false;
  CurveFlags curve_flags, cousin_flags;

  auto* nf = app.add_subcommand("nf", "left normal form of a braid word");
  nf->add_option("word", path_a, "braid word file")->required();

  auto* eq = app.add_subcommand("eq", "decide equality of two braid words");
  eq->add_option("a", path_a)->required();
  eq->add_option("b", path_b)->required();

  auto* conj = app.add_subcommand("conj", "decide conjugacy, with verified witness");
  conj->add_option("a", path_a)->required();
  conj->add_option("b", path_b)->required();
  conj->add_option("--strand-cap", strand_cap, "summit search strand cap");

  auto* summit = app.add_subcommand("summit", "summit form with conjugation witness");
  summit->add_option("word", path_a)->required();

  auto* sset = app.add_subcommand("summit-set", "the full summit set");
  sset->add_option("word", path_a)->required();
  sset->add_option("--strand-cap", strand_cap, "strand cap");

  auto* holo = app.add_subcommand("holonomize", "split a braid word as N|P");
  holo->add_option("word", path_a)->required();
  holo->add_option("--cert", cert_path, "write the normalization certificate here");

  auto* verify = app.add_subcommand("verify", "check an isotopy certificate");
  verify->add_option("certificate", path_a)->required();

  auto* curve = app.add_subcommand("curve", "analyze a holonomic Fourier curve");
  std::string curve_action;
  curve->add_option("action", curve_action, "check|braid|svg|csv")
      ->required()
      ->check(CLI::IsMember({"check", "braid", "svg", "csv"}));
  curve->add_option("fourier", path_a, "fourier JSON file")->required();
  curve->add_option("-o,--out", out_path, "output file (default stdout)");
  curve_flags.attach(curve);

  auto* cousin = app.add_subcommand("cousin", "analyze a Legendrian cousin L_k");
  std::string cousin_action;
  cousin->add_option("action", cousin_action, "front|check|svg")
      ->required()
      ->check(CLI::IsMember({"front", "check", "svg"}));
  cousin->add_option("fourier", path_a, "fourier JSON file")->required();
  cousin->add_option("-k", k, "cousin index (0 = the holonomic curve)");
  cousin->add_option("-o,--out", out_path, "output file (default stdout)");
  cousin->add_option("--dasbach-m", dasbach_m, "also check the isotopy L_k -> L_m");
  cousin->add_flag("--dasbach-verbatim", dasbach_verbatim,
                   "evaluate the published isotopy formula instead of the corrected one");
  cousin_flags.attach(cousin);

  auto* iso = app.add_subcommand("isotopy", "markov moves and script replay");
  std::string iso_action;
  iso->add_option("action", iso_action, "stabilize|destabilize|replay")
      ->required()
      ->check(CLI::IsMember({"stabilize", "destabilize", "replay"}));
  iso->add_option("form", path_a, "holonomic form file (n=<n> N= ... P= ...)")->required();
  iso->add_option("--sign", sign, "stabilization sign (+1 or -1)");
  iso->add_option("--script", script_path, "replay script file");
  iso->add_option("--cert", cert_path, "write the certificate here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (nf->parsed()) return run_nf(path_a);
    if (eq->parsed()) return run_eq(path_a, path_b);
    if (conj->parsed()) return run_conj(path_a, path_b, strand_cap);
    if (summit->parsed()) return run_summit(path_a);
    if (sset->parsed()) return run_summit_set(path_a, strand_cap);
    if (holo->parsed()) return run_holonomize(path_a, cert_path);
    if (verify->parsed()) return run_verify(path_a);
    if (curve->parsed()) return run_curve(curve_action, path_a, curve_flags, out_path);
    if (cousin->parsed()) {
      return run_cousin(cousin_action, path_a, k, cousin_flags, out_path, dasbach_m,
                        dasbach_verbatim);
    }
    if (iso->parsed()) {
      return run_isotopy(iso_action, path_a, sign, script_path, cert_path);
    }
  } catch (const hb::ParseError& e) {
    std::cerr << "input error at line " << e.line << ", column " << e.column << ": "
              << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const hb::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const hb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
