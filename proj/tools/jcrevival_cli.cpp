// jcrevival command-line front end. Talks to the library only through the
// C API in jcrevival.h.

#include <jcrevival.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 ok, 1 usage, 2 invalid input, 3 mathematically "none", 4 internal.
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNone = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(jcr_status s) {
  switch (s) {
    case JCR_OK: return 0;
    case JCR_ERR_USAGE: return kExitUsage;
    case JCR_NO_RESULT: return kExitNone;
    case JCR_ERR_INTERNAL: return kExitInternal;
    default: return kExitDomain;
  }
}

void check(jcr_status s) {
  if (s != JCR_OK) throw Failure{exit_code_for(s), jcr_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Text = std::unique_ptr<jcr_text, Deleter<jcr_text, jcr_text_free>>;
using Params = std::unique_ptr<jcr_params, Deleter<jcr_params, jcr_params_free>>;
using Spectrum = std::unique_ptr<jcr_spectrum, Deleter<jcr_spectrum, jcr_spectrum_free>>;
using Certificate = std::unique_ptr<jcr_certificate, Deleter<jcr_certificate, jcr_certificate_free>>;
using Synthesis = std::unique_ptr<jcr_synthesis, Deleter<jcr_synthesis, jcr_synthesis_free>>;
using Scan = std::unique_ptr<jcr_scan, Deleter<jcr_scan, jcr_scan_free>>;

std::string str(const jcr_text* t) { return t ? std::string(jcr_text_data(t), jcr_text_size(t)) : std::string(); }

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// "key=value" lines -> map (first '=' splits).
std::map<std::string, std::string> parse_record(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
    throw Failure{kExitUsage, "cannot write " + path};
}

struct Options {
  std::string alpha, beta, rho, alpha2, t, d, k, s = "1", ks_text, params_path, out, hist, state_path;
  std::string format = "human";
  std::uint64_t n = 1, count = 30000, bound = 50, seed = 1, states = 100;
  unsigned workers = 1;
  std::optional<double> time;
  double bin_width = 0.25;
  bool n_given = false;

  bool csv() const { return format == "csv"; }
};

struct LoadedParams {
  Params params;
  std::uint64_t n = 1;
  double y_hz = 0;
};

LoadedParams load_params(const Options& o) {
  LoadedParams out;
  out.n = o.n;
  jcr_params* raw = nullptr;
  if (!o.params_path.empty()) {
    std::uint64_t file_n = 0;
    check(jcr_params_load(o.params_path.c_str(), &raw, &file_n, &out.y_hz));
    if (!o.n_given && file_n > 0) out.n = file_n;
  } else if (!o.alpha.empty() && !o.beta.empty()) {
    check(jcr_params_create(o.alpha.c_str(), o.beta.c_str(), &raw));
  } else if (!o.alpha2.empty() && !o.rho.empty()) {
    check(jcr_params_from_alpha2_rho(o.alpha2.c_str(), o.rho.c_str(), &raw));
  } else if (!o.t.empty() && !o.rho.empty()) {
    jcr_synthesis* syn = nullptr;
    check(jcr_synthesize(o.t.c_str(), o.rho.c_str(), o.n, &syn));
    Synthesis guard(syn);
    check(jcr_synthesis_params(syn, &raw));
  } else {
    throw Failure{kExitUsage, "need --alpha/--beta, --alpha2/--rho, --t/--rho, or --params"};
  }
  out.params.reset(raw);
  for (std::size_t i = 0; i < jcr_params_warning_count(raw); ++i)
    std::cerr << "warning: " << jcr_params_warning(raw, i) << "\n";
  return out;
}

std::string seconds_line(double period, double y_hz) {
  if (!(y_hz > 0)) return {};
  return fmt("%.10g", period / (2 * M_PI * y_hz));
}

// ---- subcommands -----------------------------------------------------------

int cmd_spectrum(const Options& o) {
  auto lp = load_params(o);
  jcr_spectrum* raw = nullptr;
  check(jcr_spectrum_create(lp.params.get(), lp.n, &raw));
  Spectrum spec(raw);
  std::string out;
  const std::size_t size = jcr_spectrum_size(raw);
  if (o.csv()) {
    out = "index,block,branch,exact,value\n";
    for (std::size_t i = 0; i < size; ++i)
      out += std::to_string(i) + "," + std::to_string(jcr_spectrum_level_block(raw, i)) + "," +
             (jcr_spectrum_level_is_upper(raw, i) ? "upper" : "lower") + "," + jcr_spectrum_level_text(raw, i) + "," +
             fmt("%.17g", jcr_spectrum_level_value(raw, i)) + "\n";
  } else {
    out = "pair n = " + std::to_string(lp.n) + " (blocks " + std::to_string(lp.n) + ", " + std::to_string(lp.n + 1) +
          ")\nalpha = " + jcr_params_alpha(lp.params.get()) + "\nbeta = " + jcr_params_beta(lp.params.get()) + "\n";
    for (std::size_t i = 0; i < size; ++i)
      out += "E" + std::to_string(i) + " = " + jcr_spectrum_level_text(raw, i) + "  ~ " +
             fmt("%.10f", jcr_spectrum_level_value(raw, i)) + "  (block " +
             std::to_string(jcr_spectrum_level_block(raw, i)) + ", " +
             (jcr_spectrum_level_is_upper(raw, i) ? "upper" : "lower") + ")\n";
    if (jcr_spectrum_is_degenerate(raw)) out += "degenerate: yes\n";
  }
  write_output(o.out, out);
  return 0;
}

std::string human_certificate(const jcr_certificate* c) {
  auto rec = parse_record(jcr_certificate_record(c));
  std::string ratios;
  for (std::size_t i = 0; i < jcr_certificate_ratio_count(c); ++i)
    ratios += (i ? ", " : "") + std::string(jcr_certificate_ratio(c, i));
  std::string out = "certificate: r = (" + ratios + "), K1 = " + jcr_certificate_k1(c) +
                    ", delta = " + jcr_certificate_delta(c) + "\n";
  std::string exact = rec.count("T_pi") ? rec["T_pi"] : std::string(jcr_certificate_period_exact(c));
  out += "T = " + exact + " ~ " + fmt("%.7f", jcr_certificate_period(c)) + "\n";
  return out;
}

int cmd_check_revival(const Options& o) {
  auto lp = load_params(o);
  jcr_spectrum* raw = nullptr;
  check(jcr_spectrum_create(lp.params.get(), lp.n, &raw));
  Spectrum spec(raw);
  jcr_certificate* cert_raw = nullptr;
  jcr_status s = jcr_certificate_create(raw, &cert_raw);
  if (s == JCR_NO_RESULT) {
    std::string why = jcr_params_alpha_is_zero(lp.params.get()) ? "resonance" : "irrational gap ratios";
    write_output(o.out, o.csv() ? "certificate=none\nreason=" + why + "\n" : "no certificate (" + why + ")\n");
    return kExitNone;
  }
  check(s);
  Certificate cert(cert_raw);
  std::string secs = seconds_line(jcr_certificate_period(cert_raw), lp.y_hz);
  std::string out;
  if (o.csv()) {
    out = jcr_certificate_record(cert_raw);
    if (!secs.empty()) out += "T_seconds=" + secs + "\n";
  } else {
    out = human_certificate(cert_raw);
    if (!secs.empty()) out += "T_seconds ~ " + secs + "\n";
  }
  write_output(o.out, out);
  return 0;
}

int cmd_synthesize(const Options& o) {
  if (o.t.empty() || o.rho.empty()) throw Failure{kExitUsage, "synthesize needs --t and --rho"};
  jcr_synthesis* raw = nullptr;
  check(jcr_synthesize(o.t.c_str(), o.rho.c_str(), o.n, &raw));
  Synthesis syn(raw);
  jcr_certificate* cert_raw = nullptr;
  jcr_status s = jcr_synthesis_certificate(raw, &cert_raw);
  if (s != JCR_NO_RESULT) check(s);
  Certificate cert(cert_raw);

  const std::string record = jcr_synthesis_record(raw);
  std::string out;
  if (o.csv()) {
    out = record;
    out += cert ? jcr_certificate_record(cert_raw) : "certificate=none\n";
  } else {
    auto r = parse_record(record);
    out = "n = " + r["n"] + ", t = " + r["t"] + ", rho = " + r["rho"] + "\n";
    out += "point: X = " + r["X"] + ", Y = " + r["Y"] + "\n";
    out += "alpha^2 = " + r["alpha2"] + "\n";
    out += "alpha = " + r["alpha"] + "\nbeta = " + r["beta"] + "\n";
    out += "F = (" + r["F_plus"] + ", " + r["F_minus"] + ")\n";
    for (int i = 0; i < 4; ++i) out += "E" + std::to_string(i) + " = " + r["E" + std::to_string(i)] + "\n";
    if (r["degenerate"] == "1") out += "degenerate: yes\n";
    out += cert ? human_certificate(cert_raw) : "no certificate\n";
  }
  write_output(o.out, out);
  return cert ? 0 : kExitNone;
}

int cmd_verify(const Options& o) {
  auto lp = load_params(o);
  double t = 0;
  if (o.time) {
    t = *o.time;
  } else {
    jcr_spectrum* sraw = nullptr;
    check(jcr_spectrum_create(lp.params.get(), lp.n, &sraw));
    Spectrum spec(sraw);
    jcr_certificate* craw = nullptr;
    jcr_status s = jcr_certificate_create(sraw, &craw);
    if (s == JCR_NO_RESULT) {
      std::cerr << "no certificate; pass --time to verify at a chosen time\n";
      return kExitNone;
    }
    check(s);
    Certificate cert(craw);
    t = jcr_certificate_period(craw);
  }

  double distance = 0, min_fid = 0, max_norm = 0;
  check(jcr_propagator_distance(lp.params.get(), lp.n, t, &distance));
  check(jcr_fidelity_sweep(lp.params.get(), lp.n, t, o.seed, o.states, o.workers, &min_fid, &max_norm));

  std::string evolved;
  std::optional<double> input_fidelity;
  if (!o.state_path.empty()) {
    const std::string text = read_file(o.state_path);
    double in[8] = {}, outv[8] = {};
    std::size_t count = 0;
    check(jcr_state_parse_csv(text.c_str(), in, 4, &count));
    if (count != 4) throw Failure{kExitUsage, "state file must hold 4 amplitudes (pair basis)"};
    check(jcr_evolve_pair(lp.params.get(), lp.n, t, in, outv));
    jcr_text* csv = nullptr;
    check(jcr_state_format_csv(outv, 4, &csv));
    evolved = str(Text(csv).get());
    double re = 0, im = 0, norm_in = 0;
    for (int i = 0; i < 4; ++i) {
      re += in[2 * i] * outv[2 * i] + in[2 * i + 1] * outv[2 * i + 1];
      im += in[2 * i] * outv[2 * i + 1] - in[2 * i + 1] * outv[2 * i];
      norm_in += in[2 * i] * in[2 * i] + in[2 * i + 1] * in[2 * i + 1];
    }
    input_fidelity = (re * re + im * im) / (norm_in * norm_in);
  }

  std::string out;
  if (o.csv()) {
    out = "n=" + std::to_string(lp.n) + "\nt=" + fmt("%.17g", t) + "\ndistance=" + fmt("%.17g", distance) +
          "\nstates=" + std::to_string(o.states) + "\nseed=" + std::to_string(o.seed) +
          "\nmin_fidelity=" + fmt("%.17g", min_fid) + "\nmax_norm_error=" + fmt("%.17g", max_norm) + "\n";
    if (input_fidelity) out += "state_fidelity=" + fmt("%.17g", *input_fidelity) + "\n";
  } else {
    out = "pair n = " + std::to_string(lp.n) + ", t = " + fmt("%.10f", t) + "\n";
    out += "propagator distance to identity: " + fmt("%.3e", distance) + "\n";
    out += "random states: " + std::to_string(o.states) + " (seed " + std::to_string(o.seed) +
           "), min fidelity " + fmt("%.12f", min_fid) + ", max norm error " + fmt("%.3e", max_norm) + "\n";
    if (input_fidelity) out += "input state fidelity: " + fmt("%.12f", *input_fidelity) + "\n";
  }
  if (!evolved.empty()) out += o.csv() ? evolved : "evolved state:\n" + evolved;
  write_output(o.out, out);
  return 0;
}

int cmd_scan_lcm(const Options& o) {
  if (o.d.empty()) throw Failure{kExitUsage, "scan-lcm needs --d"};
  jcr_scan* raw = nullptr;
  check(jcr_scan_create(o.d.c_str(), o.count, o.workers, &raw));
  Scan scan(raw);
  if (!o.hist.empty()) {
    jcr_text* h = nullptr;
    check(jcr_scan_histogram_csv(raw, o.bin_width, &h));
    write_output(o.hist, str(Text(h).get()));
  }
  jcr_text* summary_raw = nullptr;
  check(jcr_scan_summary(raw, &summary_raw));
  auto summary = parse_record(str(Text(summary_raw).get()));
  const std::string human = "scanned " + summary["count"] + " values of t = n*" + o.d + " (" + summary["skipped"] +
                            " skipped)\nlcm range: " + summary["min_lcm"] + " .. " + summary["max_lcm"] + "\n";

  if (o.csv() || !o.out.empty()) {
    jcr_text* csv = nullptr;
    check(jcr_scan_csv(raw, &csv));
    write_output(o.out, str(Text(csv).get()));
    if (!o.out.empty() && !o.csv()) std::cout << human;
  } else {
    std::cout << human;
  }
  return 0;
}

bool is_unsigned_integer(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos && s.size() <= 19;
}

int cmd_solve_k(const Options& o) {
  if (o.k.empty()) throw Failure{kExitUsage, "solve-k needs --k"};
  jcr_text *x = nullptr, *y = nullptr;
  check(jcr_solve_difference_rational(o.k.c_str(), o.s.c_str(), &x, &y));
  Text xt(x), yt(y);

  std::string out = o.csv() ? "kind,X,Y\nrational," + str(x) + "," + str(y) + "\n"
                            : "rational (s = " + o.s + "): X = " + str(x) + ", Y = " + str(y) + "\n";
  int code = 0;
  if (is_unsigned_integer(o.k) && o.k.find_first_not_of('0') != std::string::npos) {
    jcr_text* rows_raw = nullptr;
    std::size_t count = 0;
    check(jcr_solve_difference_integer(std::stoull(o.k), &rows_raw, &count));
    std::string rows = str(Text(rows_raw).get());
    if (o.csv()) {
      std::istringstream in(rows);
      std::string line;
      while (std::getline(in, line)) out += "integer," + line + "\n";
    } else {
      out += "integer solutions: " + std::to_string(count) + "\n";
      std::istringstream in(rows);
      std::string line;
      while (std::getline(in, line)) out += "  (" + line + ")\n";
    }
    if (count == 0) code = kExitNone;
  }
  write_output(o.out, out);
  return code;
}

std::vector<std::uint64_t> parse_ks(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!is_unsigned_integer(item)) throw Failure{kExitUsage, "--ks expects a comma list of integers: " + text};
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw Failure{kExitUsage, "--ks is empty"};
  return out;
}

int cmd_solve_chain(const Options& o) {
  auto ks = parse_ks(o.ks_text);
  jcr_text* raw = nullptr;
  std::size_t rows = 0;
  check(jcr_chain_solve(ks.data(), ks.size(), o.bound, o.workers, &raw, &rows));
  std::string csv = str(Text(raw).get());
  std::string out;
  if (o.csv()) {
    out = csv;
  } else {
    out = "chains for K = " + o.ks_text + " with X0 <= " + std::to_string(o.bound) + ": " + std::to_string(rows) + "\n";
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      std::string arrow;
      for (char c : line) arrow += c == ',' ? std::string(" -> ") : std::string(1, c);
      out += "  " + arrow + "\n";
    }
  }
  write_output(o.out, out);
  return rows ? 0 : kExitNone;
}

int cmd_middles(const Options& o) {
  jcr_text* raw = nullptr;
  std::size_t count = 0;
  check(jcr_pythagorean_middles(o.bound, &raw, &count));
  std::string list = str(Text(raw).get());
  std::string out;
  if (o.csv()) {
    out = list;
  } else {
    std::string joined;
    std::istringstream in(list);
    std::string line;
    while (std::getline(in, line)) joined += (joined.empty() ? "" : ", ") + line;
    out = "hypotenuse-and-leg integers <= " + std::to_string(o.bound) + ": " + std::to_string(count) + "\n" + joined +
          (joined.empty() ? "" : "\n");
  }
  write_output(o.out, out);
  return count ? 0 : kExitNone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact revival analysis for the Jaynes-Cummings model"};
  app.set_version_flag("--version", std::string(jcr_version()));
  app.require_subcommand(1);
  Options o;
  std::vector<CLI::Option*> n_options;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv (machine-readable) or human")->check(CLI::IsMember({"csv", "human"}));
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "detuning/y as a surd, e.g. 2*sqrt(7)/3");
    sub->add_option("--beta", o.beta, "omega_a/y as a surd");
    sub->add_option("--alpha2", o.alpha2, "alpha^2 (rational); alpha taken >= 0");
    sub->add_option("--rho", o.rho, "alpha + beta (rational)");
    sub->add_option("--t", o.t, "unit-hyperbola parameter (rational)");
    sub->add_option("--params", o.params_path, "key = value parameter file");
    n_options.push_back(sub->add_option("--n", o.n, "pair index (blocks n and n+1)")->check(CLI::PositiveNumber));
  };

  auto* spectrum = app.add_subcommand("spectrum", "closed-form levels of pair n");
  add_params(spectrum);
  add_format(spectrum);

  auto* check_rev = app.add_subcommand("check-revival", "revival certificate of pair n");
  add_params(check_rev);
  add_format(check_rev);

  auto* synth = app.add_subcommand("synthesize", "revival-admitting parameters from a rational t");
  synth->add_option("--t", o.t, "unit-hyperbola parameter (rational)")->required();
  synth->add_option("--rho", o.rho, "alpha + beta (rational)")->required();
  n_options.push_back(synth->add_option("--n", o.n, "pair index")->check(CLI::PositiveNumber));
  add_format(synth);

  auto* verify = app.add_subcommand("verify", "numerical revival check at a time");
  add_params(verify);
  add_format(verify);
  verify->add_option("--time", o.time, "evolution time in units of 1/y (default: certificate period)");
  verify->add_option("--states", o.states, "number of random states");
  verify->add_option("--seed", o.seed, "PRNG seed");
  verify->add_option("--state", o.state_path, "CSV file of 4 amplitudes 're,im' to evolve");
  verify->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan-lcm", "denominator LCM along t = n*d");
  scan->add_option("--d", o.d, "step (rational)")->required();
  scan->add_option("--count", o.count, "number of samples");
  scan->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--hist", o.hist, "write a log10(lcm) histogram CSV here");
  scan->add_option("--bin-width", o.bin_width, "histogram bin width in log10 units")->check(CLI::PositiveNumber);
  add_format(scan);

  auto* solve_k = app.add_subcommand("solve-k", "X^2 - Y^2 = K over the rationals and the integers");
  solve_k->add_option("--k", o.k, "K (rational; integer K also gets integer solutions)")->required();
  solve_k->add_option("--s", o.s, "rational parameter for the rational family");
  add_format(solve_k);

  auto* chain = app.add_subcommand("solve-chain", "X_{j-1}^2 - X_j^2 = K_j chains");
  chain->add_option("--ks", o.ks_text, "comma list of K_j")->required();
  chain->add_option("--bound", o.bound, "bound on X0");
  chain->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  add_format(chain);

  auto* middles = app.add_subcommand("middles", "integers that are both a hypotenuse and a leg");
  middles->add_option("--bound", o.bound, "upper bound");
  add_format(middles);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  o.n_given = std::any_of(n_options.begin(), n_options.end(), [](CLI::Option* opt) { return opt->count() > 0; });

  try {
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (check_rev->parsed()) return cmd_check_revival(o);
    if (synth->parsed()) return cmd_synthesize(o);
    if (verify->parsed()) return cmd_verify(o);
    if (scan->parsed()) return cmd_scan_lcm(o);
    if (solve_k->parsed()) return cmd_solve_k(o);
    if (chain->parsed()) return cmd_solve_chain(o);
    if (middles->parsed()) return cmd_middles(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
