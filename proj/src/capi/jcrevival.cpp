#include "jcrevival.h"

#include <algorithm>
#include <complex>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "jcr/diophantine.hpp"
#include "jcr/error.hpp"
#include "jcr/jc_model.hpp"
#include "jcr/lcm_scan.hpp"
#include "jcr/param_file.hpp"
#include "jcr/revival.hpp"
#include "jcr/verify.hpp"

struct jcr_text {
  std::string data;
};

struct jcr_params {
  jcr::ModelParams model;
  std::string alpha_text;
  std::string beta_text;
  std::vector<std::string> warnings;
};

struct jcr_spectrum {
  jcr::PairSpectrum spectrum;
  std::vector<std::string> texts;
  std::vector<double> values;
};

struct jcr_certificate {
  jcr::RevivalCertificate cert;
  std::vector<std::string> ratio_texts;
  std::string k1_text;
  std::string delta_text;
  std::string period_exact_text;
  std::string record;
};

struct jcr_synthesis {
  jcr::SynthesizedParams synthesis;
  std::string record;
};

struct jcr_scan {
  std::vector<jcr::ScanRecord> records;
};

namespace {

thread_local std::string last_error;

jcr_status fail(jcr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

jcr_status map_error(const jcr::Error& e) {
  switch (e.code()) {
    case jcr::ErrorCode::usage: return fail(JCR_ERR_USAGE, e.what());
    case jcr::ErrorCode::domain: return fail(JCR_ERR_DOMAIN, e.what());
    case jcr::ErrorCode::factorization_limit: return fail(JCR_ERR_FACTOR_LIMIT, e.what());
    case jcr::ErrorCode::unsupported: return fail(JCR_ERR_UNSUPPORTED, e.what());
    case jcr::ErrorCode::single_level: return fail(JCR_ERR_SINGLE_LEVEL, e.what());
  }
  return fail(JCR_ERR_INTERNAL, e.what());
}

// Runs body() and converts every exception into a status code.
template <class Body>
jcr_status guarded(Body&& body) noexcept {
  try {
    return body();
  } catch (const jcr::Error& e) {
    return map_error(e);
  } catch (const std::bad_alloc&) {
    return fail(JCR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(JCR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(JCR_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw jcr::Error(jcr::ErrorCode::usage, what);
}

jcr_text* make_text(std::string s) { return new jcr_text{std::move(s)}; }

jcr_params* make_params(jcr::ModelParams model) {
  auto p = std::make_unique<jcr_params>();
  p->alpha_text = model.alpha.str();
  p->beta_text = model.beta.str();
  p->warnings = model.physicality_warnings();
  p->model = std::move(model);
  return p.release();
}

jcr_certificate* make_certificate(jcr::RevivalCertificate cert) {
  auto c = std::make_unique<jcr_certificate>();
  for (const auto& r : cert.ratios) c->ratio_texts.push_back(r.str());
  c->k1_text = cert.k1.get_str();
  c->delta_text = cert.delta.str();
  c->period_exact_text = cert.period_exact();
  c->record = cert.record();
  c->cert = std::move(cert);
  return c.release();
}

jcr::QuantumState pair_state(std::uint64_t n, const double* re_im) {
  jcr::QuantumState s;
  s.basis = jcr::QuantumState::pair_basis(n);
  for (int i = 0; i < 4; ++i) s.amplitudes.emplace_back(re_im[2 * i], re_im[2 * i + 1]);
  return s;
}

template <class T>
const T* at(const std::vector<T>& v, size_t i) {
  return i < v.size() ? &v[i] : nullptr;
}

}  // namespace

extern "C" {

const char* jcr_version(void) { return "0.1.0"; }

const char* jcr_last_error(void) { return last_error.c_str(); }

const char* jcr_status_name(jcr_status status) {
  switch (status) {
    case JCR_OK: return "ok";
    case JCR_ERR_USAGE: return "usage error";
    case JCR_ERR_DOMAIN: return "domain error";
    case JCR_NO_RESULT: return "no result";
    case JCR_ERR_FACTOR_LIMIT: return "factorization limit";
    case JCR_ERR_UNSUPPORTED: return "unsupported parameters";
    case JCR_ERR_SINGLE_LEVEL: return "single level";
    case JCR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* jcr_text_data(const jcr_text* text) { return text ? text->data.c_str() : ""; }
size_t jcr_text_size(const jcr_text* text) { return text ? text->data.size() : 0; }
void jcr_text_free(jcr_text* text) { delete text; }

jcr_status jcr_surd_normalize(const char* surd, jcr_text** out) {
  return guarded([&] {
    require(surd && out, "jcr_surd_normalize: NULL argument");
    *out = make_text(jcr::Surd::parse(surd).str());
    return JCR_OK;
  });
}

jcr_status jcr_rational_sqrt(const char* rational, jcr_text** out) {
  return guarded([&] {
    require(rational && out, "jcr_rational_sqrt: NULL argument");
    *out = nullptr;
    auto root = jcr::rational_sqrt(jcr::Rational::parse(rational));
    if (!root) return fail(JCR_NO_RESULT, std::string("sqrt(") + rational + ") is irrational");
    *out = make_text(root->str());
    return JCR_OK;
  });
}

jcr_status jcr_params_create(const char* alpha, const char* beta, jcr_params** out) {
  return guarded([&] {
    require(alpha && beta && out, "jcr_params_create: NULL argument");
    *out = make_params({jcr::Surd::parse(alpha), jcr::Surd::parse(beta), 1.0});
    return JCR_OK;
  });
}

jcr_status jcr_params_from_alpha2_rho(const char* alpha2, const char* rho, jcr_params** out) {
  return guarded([&] {
    require(alpha2 && rho && out, "jcr_params_from_alpha2_rho: NULL argument");
    jcr::ParamFile f;
    f.alpha_squared = jcr::Rational::parse(alpha2);
    f.rho = jcr::Rational::parse(rho);
    *out = make_params(jcr::resolve_params(f));
    return JCR_OK;
  });
}

jcr_status jcr_params_load(const char* path, jcr_params** out, uint64_t* n_out, double* y_hz_out) {
  return guarded([&] {
    require(path && out, "jcr_params_load: NULL argument");
    jcr::ParamFile f = jcr::load_param_file(path);
    *out = make_params(jcr::resolve_params(f));
    if (n_out) *n_out = f.n.value_or(0);
    if (y_hz_out) *y_hz_out = f.y_hz.value_or(0.0);
    return JCR_OK;
  });
}

void jcr_params_free(jcr_params* params) { delete params; }

const char* jcr_params_alpha(const jcr_params* params) { return params ? params->alpha_text.c_str() : ""; }
const char* jcr_params_beta(const jcr_params* params) { return params ? params->beta_text.c_str() : ""; }
int jcr_params_alpha_is_zero(const jcr_params* params) { return params && params->model.alpha.is_zero(); }
size_t jcr_params_warning_count(const jcr_params* params) { return params ? params->warnings.size() : 0; }
const char* jcr_params_warning(const jcr_params* params, size_t index) {
  if (!params) return nullptr;
  auto* w = at(params->warnings, index);
  return w ? w->c_str() : nullptr;
}

jcr_status jcr_block_matrix(const jcr_params* params, uint64_t k, double y, double out[4], int* dim) {
  return guarded([&] {
    require(params && out && dim, "jcr_block_matrix: NULL argument");
    require(y > 0, "jcr_block_matrix: y must be > 0");
    jcr::ModelParams scaled = params->model;
    scaled.y = y;
    jcr::BlockMatrix b = jcr::block_matrix(k, scaled);
    *dim = b.dim;
    out[0] = b.m[0][0];
    out[1] = b.m[0][1];
    out[2] = b.m[1][0];
    out[3] = b.m[1][1];
    return JCR_OK;
  });
}

jcr_status jcr_spectrum_create(const jcr_params* params, uint64_t n, jcr_spectrum** out) {
  return guarded([&] {
    require(params && out, "jcr_spectrum_create: NULL argument");
    auto s = std::make_unique<jcr_spectrum>();
    s->spectrum = jcr::pair_spectrum(n, params->model.alpha, params->model.beta);
    for (const auto& level : s->spectrum.levels) {
      s->texts.push_back(level.energy.str());
      s->values.push_back(level.energy.to_double());
    }
    *out = s.release();
    return JCR_OK;
  });
}

void jcr_spectrum_free(jcr_spectrum* spectrum) { delete spectrum; }
size_t jcr_spectrum_size(const jcr_spectrum* spectrum) { return spectrum ? spectrum->texts.size() : 0; }
const char* jcr_spectrum_level_text(const jcr_spectrum* spectrum, size_t index) {
  if (!spectrum) return nullptr;
  auto* t = at(spectrum->texts, index);
  return t ? t->c_str() : nullptr;
}
double jcr_spectrum_level_value(const jcr_spectrum* spectrum, size_t index) {
  if (!spectrum || index >= spectrum->values.size()) return 0.0;
  return spectrum->values[index];
}
uint64_t jcr_spectrum_level_block(const jcr_spectrum* spectrum, size_t index) {
  if (!spectrum || index >= spectrum->spectrum.levels.size()) return 0;
  return spectrum->spectrum.levels[index].block;
}
int jcr_spectrum_level_is_upper(const jcr_spectrum* spectrum, size_t index) {
  if (!spectrum || index >= spectrum->spectrum.levels.size()) return 0;
  return spectrum->spectrum.levels[index].upper ? 1 : 0;
}
int jcr_spectrum_is_degenerate(const jcr_spectrum* spectrum) {
  return spectrum && spectrum->spectrum.degenerate ? 1 : 0;
}

jcr_status jcr_certificate_create(const jcr_spectrum* spectrum, jcr_certificate** out) {
  return guarded([&] {
    require(spectrum && out, "jcr_certificate_create: NULL argument");
    *out = nullptr;
    auto energies = spectrum->spectrum.energies();
    auto cert = jcr::revival_certificate(energies);
    if (!cert) return fail(JCR_NO_RESULT, "gap ratios are not all rational: no full revival");
    *out = make_certificate(std::move(*cert));
    return JCR_OK;
  });
}

jcr_status jcr_certificate_from_levels(const char* const* levels, size_t count, jcr_certificate** out) {
  return guarded([&] {
    require((levels || count == 0) && out, "jcr_certificate_from_levels: NULL argument");
    *out = nullptr;
    std::vector<jcr::Surd> energies;
    for (size_t i = 0; i < count; ++i) {
      require(levels[i] != nullptr, "jcr_certificate_from_levels: NULL level");
      energies.push_back(jcr::Surd::parse(levels[i]));
    }
    auto cert = jcr::revival_certificate(energies);
    if (!cert) return fail(JCR_NO_RESULT, "gap ratios are not all rational: no full revival");
    *out = make_certificate(std::move(*cert));
    return JCR_OK;
  });
}

void jcr_certificate_free(jcr_certificate* cert) { delete cert; }
size_t jcr_certificate_ratio_count(const jcr_certificate* cert) { return cert ? cert->ratio_texts.size() : 0; }
const char* jcr_certificate_ratio(const jcr_certificate* cert, size_t index) {
  if (!cert) return nullptr;
  auto* r = at(cert->ratio_texts, index);
  return r ? r->c_str() : nullptr;
}
const char* jcr_certificate_k1(const jcr_certificate* cert) { return cert ? cert->k1_text.c_str() : ""; }
const char* jcr_certificate_delta(const jcr_certificate* cert) { return cert ? cert->delta_text.c_str() : ""; }
const char* jcr_certificate_period_exact(const jcr_certificate* cert) {
  return cert ? cert->period_exact_text.c_str() : "";
}
double jcr_certificate_period(const jcr_certificate* cert) { return cert ? cert->cert.period : 0.0; }
const char* jcr_certificate_record(const jcr_certificate* cert) { return cert ? cert->record.c_str() : ""; }

jcr_status jcr_adjacent_fractions(const char* alpha2, const char* rho, uint64_t n, jcr_text** plus,
                                  jcr_text** minus) {
  return guarded([&] {
    require(alpha2 && rho && plus && minus, "jcr_adjacent_fractions: NULL argument");
    auto f = jcr::adjacent_pair_fractions(jcr::Rational::parse(alpha2), jcr::Rational::parse(rho), n);
    *plus = f.plus ? make_text(f.plus->str()) : nullptr;
    *minus = f.minus ? make_text(f.minus->str()) : nullptr;
    return JCR_OK;
  });
}

jcr_status jcr_resonance_obstruction(uint64_t n, int* holds) {
  return guarded([&] {
    require(holds != nullptr, "jcr_resonance_obstruction: NULL argument");
    *holds = jcr::resonance_obstruction(n).holds() ? 1 : 0;
    return JCR_OK;
  });
}

jcr_status jcr_resonance_batch(uint64_t max_n, unsigned workers, uint64_t* first_failure) {
  return guarded([&] {
    require(first_failure != nullptr, "jcr_resonance_batch: NULL argument");
    *first_failure = jcr::resonance_batch(max_n, workers).value_or(0);
    return JCR_OK;
  });
}

jcr_status jcr_synthesize(const char* t, const char* rho, uint64_t n, jcr_synthesis** out) {
  return guarded([&] {
    require(t && rho && out, "jcr_synthesize: NULL argument");
    auto s = jcr::synthesize_params(jcr::Rational::parse(t), jcr::Rational::parse(rho), n);
    auto h = std::make_unique<jcr_synthesis>();
    h->record = s.record();
    h->synthesis = std::move(s);
    *out = h.release();
    return JCR_OK;
  });
}

void jcr_synthesis_free(jcr_synthesis* synthesis) { delete synthesis; }
const char* jcr_synthesis_record(const jcr_synthesis* synthesis) { return synthesis ? synthesis->record.c_str() : ""; }

jcr_status jcr_synthesis_params(const jcr_synthesis* synthesis, jcr_params** out) {
  return guarded([&] {
    require(synthesis && out, "jcr_synthesis_params: NULL argument");
    *out = make_params(synthesis->synthesis.params());
    return JCR_OK;
  });
}

jcr_status jcr_synthesis_certificate(const jcr_synthesis* synthesis, jcr_certificate** out) {
  return guarded([&] {
    require(synthesis && out, "jcr_synthesis_certificate: NULL argument");
    *out = nullptr;
    if (!synthesis->synthesis.certificate) return fail(JCR_NO_RESULT, "synthesized spectrum has no certificate");
    *out = make_certificate(*synthesis->synthesis.certificate);
    return JCR_OK;
  });
}

jcr_status jcr_propagator_distance(const jcr_params* params, uint64_t n, double t, double* out) {
  return guarded([&] {
    require(params && out, "jcr_propagator_distance: NULL argument");
    require(n >= 1, "n must be >= 1");
    *out = jcr::propagator_identity_distance(n, t, params->model);
    return JCR_OK;
  });
}

jcr_status jcr_fidelity_sweep(const jcr_params* params, uint64_t n, double t, uint64_t seed, uint64_t count,
                              unsigned workers, double* min_fidelity, double* max_norm_error) {
  return guarded([&] {
    require(params && min_fidelity, "jcr_fidelity_sweep: NULL argument");
    require(n >= 1, "n must be >= 1");
    auto sweep = jcr::fidelity_sweep(n, t, params->model, seed, count, workers);
    *min_fidelity = sweep.min_fidelity;
    if (max_norm_error) *max_norm_error = sweep.max_norm_error;
    return JCR_OK;
  });
}

jcr_status jcr_evolve_pair(const jcr_params* params, uint64_t n, double t, const double in_re_im[8],
                           double out_re_im[8]) {
  return guarded([&] {
    require(params && in_re_im && out_re_im, "jcr_evolve_pair: NULL argument");
    require(n >= 1, "n must be >= 1");
    auto later = jcr::evolve(pair_state(n, in_re_im), t, params->model);
    for (int i = 0; i < 4; ++i) {
      out_re_im[2 * i] = later.amplitudes[i].real();
      out_re_im[2 * i + 1] = later.amplitudes[i].imag();
    }
    return JCR_OK;
  });
}

jcr_status jcr_energy_expectation_pair(const jcr_params* params, uint64_t n, const double re_im[8], double* out) {
  return guarded([&] {
    require(params && re_im && out, "jcr_energy_expectation_pair: NULL argument");
    require(n >= 1, "n must be >= 1");
    *out = jcr::energy_expectation(pair_state(n, re_im), params->model);
    return JCR_OK;
  });
}

jcr_status jcr_state_parse_csv(const char* text, double* out_re_im, size_t capacity, size_t* count) {
  return guarded([&] {
    require(text && count && (out_re_im || capacity == 0), "jcr_state_parse_csv: NULL argument");
    auto amps = jcr::parse_state_csv(text);
    *count = amps.size();
    if (amps.size() > capacity) return fail(JCR_ERR_USAGE, "state has more entries than the buffer holds");
    for (size_t i = 0; i < amps.size(); ++i) {
      out_re_im[2 * i] = amps[i].real();
      out_re_im[2 * i + 1] = amps[i].imag();
    }
    return JCR_OK;
  });
}

jcr_status jcr_state_format_csv(const double* re_im, size_t count, jcr_text** out) {
  return guarded([&] {
    require((re_im || count == 0) && out, "jcr_state_format_csv: NULL argument");
    std::vector<std::complex<double>> amps;
    for (size_t i = 0; i < count; ++i) amps.emplace_back(re_im[2 * i], re_im[2 * i + 1]);
    *out = make_text(jcr::format_state_csv(amps));
    return JCR_OK;
  });
}

jcr_status jcr_unit_hyperbola_point(const char* t, jcr_text** x, jcr_text** y) {
  return guarded([&] {
    require(t && x && y, "jcr_unit_hyperbola_point: NULL argument");
    auto p = jcr::unit_hyperbola_point(jcr::Rational::parse(t));
    *x = make_text(p.x.str());
    *y = make_text(p.y.str());
    return JCR_OK;
  });
}

jcr_status jcr_solve_difference_rational(const char* k, const char* s, jcr_text** x, jcr_text** y) {
  return guarded([&] {
    require(k && s && x && y, "jcr_solve_difference_rational: NULL argument");
    auto p = jcr::solve_difference_rational(jcr::Rational::parse(k), jcr::Rational::parse(s));
    *x = make_text(p.x.str());
    *y = make_text(p.y.str());
    return JCR_OK;
  });
}

jcr_status jcr_solve_difference_integer(uint64_t k, jcr_text** csv, size_t* count) {
  return guarded([&] {
    require(csv && count, "jcr_solve_difference_integer: NULL argument");
    auto pairs = jcr::solve_difference_integer(k);
    std::string out;
    for (const auto& p : pairs) out += std::to_string(p.x) + "," + std::to_string(p.y) + "\n";
    *csv = make_text(std::move(out));
    *count = pairs.size();
    return JCR_OK;
  });
}

jcr_status jcr_chain_solve(const uint64_t* ks, size_t len, uint64_t bound, unsigned workers, jcr_text** csv,
                           size_t* rows) {
  return guarded([&] {
    require((ks || len == 0) && csv && rows, "jcr_chain_solve: NULL argument");
    std::vector<std::uint64_t> levels(ks, ks + len);
    auto chains = jcr::chain_solver(levels, bound, workers);
    *csv = make_text(jcr::format_chains_csv(chains));
    *rows = chains.size();
    return JCR_OK;
  });
}

jcr_status jcr_pythagorean_middles(uint64_t bound, jcr_text** list, size_t* count) {
  return guarded([&] {
    require(list && count, "jcr_pythagorean_middles: NULL argument");
    auto middles = jcr::pythagorean_middles(bound);
    std::string out;
    for (auto m : middles) out += std::to_string(m) + "\n";
    *list = make_text(std::move(out));
    *count = middles.size();
    return JCR_OK;
  });
}

jcr_status jcr_scan_create(const char* d, uint64_t count, unsigned workers, jcr_scan** out) {
  return guarded([&] {
    require(d && out, "jcr_scan_create: NULL argument");
    auto records = jcr::scan_lcm(jcr::Rational::parse(d), count, workers);
    *out = new jcr_scan{std::move(records)};
    return JCR_OK;
  });
}

void jcr_scan_free(jcr_scan* scan) { delete scan; }
size_t jcr_scan_size(const jcr_scan* scan) { return scan ? scan->records.size() : 0; }

jcr_status jcr_scan_record(const jcr_scan* scan, uint64_t n, jcr_text** lcm, int* skipped) {
  return guarded([&] {
    require(scan && lcm && skipped, "jcr_scan_record: NULL argument");
    if (n == 0 || n > scan->records.size())
      return fail(JCR_ERR_USAGE, "scan record index out of range: " + std::to_string(n));
    const auto& r = scan->records[n - 1];
    *lcm = make_text(r.lcm.get_str());
    *skipped = r.skipped ? 1 : 0;
    return JCR_OK;
  });
}

jcr_status jcr_scan_csv(const jcr_scan* scan, jcr_text** out) {
  return guarded([&] {
    require(scan && out, "jcr_scan_csv: NULL argument");
    *out = make_text(jcr::format_scan_csv(scan->records));
    return JCR_OK;
  });
}

jcr_status jcr_scan_histogram_csv(const jcr_scan* scan, double width, jcr_text** out) {
  return guarded([&] {
    require(scan && out, "jcr_scan_histogram_csv: NULL argument");
    *out = make_text(jcr::format_histogram_csv(jcr::histogram(scan->records, width)));
    return JCR_OK;
  });
}

jcr_status jcr_scan_summary(const jcr_scan* scan, jcr_text** out) {
  return guarded([&] {
    require(scan && out, "jcr_scan_summary: NULL argument");
    std::size_t skipped = 0;
    std::optional<jcr::Integer> lo, hi;
    for (const auto& r : scan->records) {
      if (r.skipped) {
        ++skipped;
        continue;
      }
      if (!lo || r.lcm < *lo) lo = r.lcm;
      if (!hi || r.lcm > *hi) hi = r.lcm;
    }
    std::string s = "count=" + std::to_string(scan->records.size()) + "\nskipped=" + std::to_string(skipped) +
                    "\nmin_lcm=" + (lo ? lo->get_str() : "") + "\nmax_lcm=" + (hi ? hi->get_str() : "") + "\n";
    *out = make_text(std::move(s));
    return JCR_OK;
  });
}

}  // extern "C"
