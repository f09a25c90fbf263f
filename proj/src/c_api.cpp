#include "aritygap/aritygap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "aritygap/analysis.hpp"
#include "aritygap/classify.hpp"
#include "aritygap/gap.hpp"
#include "aritygap/minors.hpp"
#include "aritygap/oddsupp.hpp"
#include "aritygap/oracle.hpp"

struct ag_function {
  aritygap::FiniteFunction f;
};

struct ag_reader {
  aritygap::FunctionReader reader;
};

struct ag_enumerator {
  aritygap::Enumerator e;
};

struct ag_report {
  aritygap::VerificationReport report;
};

namespace {

thread_local std::string last_error;

ag_status status_of(aritygap::Errc code) {
  using aritygap::Errc;
  switch (code) {
    case Errc::invalid_argument: return AG_ERR_INVALID_ARGUMENT;
    case Errc::parse: return AG_ERR_PARSE;
    case Errc::unsupported_arity: return AG_ERR_UNSUPPORTED_ARITY;
    case Errc::unsupported_codomain: return AG_ERR_UNSUPPORTED_CODOMAIN;
    case Errc::unsupported_domain: return AG_ERR_UNSUPPORTED_DOMAIN;
    case Errc::gap_undefined: return AG_ERR_GAP_UNDEFINED;
    case Errc::no_such_support: return AG_ERR_NO_SUCH_SUPPORT;
    case Errc::oracle_infeasible: return AG_ERR_ORACLE_INFEASIBLE;
  }
  return AG_ERR_INTERNAL;
}

ag_status fail(ag_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body() and turns exceptions into status codes.
template <class Body>
ag_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return AG_OK;
  } catch (const aritygap::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AG_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ag_function* wrap(aritygap::FiniteFunction f) { return new ag_function{std::move(f)}; }

#define AG_REQUIRE(cond)                                           \
  do {                                                             \
    if (!(cond)) return fail(AG_ERR_INVALID_ARGUMENT, "invalid-argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

AG_API const char* ag_version(void) { return "0.1.0"; }

AG_API const char* ag_last_error(void) { return last_error.c_str(); }

AG_API const char* ag_status_name(ag_status status) {
  switch (status) {
    case AG_OK: return "ok";
    case AG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case AG_ERR_PARSE: return "parse-error";
    case AG_ERR_UNSUPPORTED_ARITY: return "unsupported-arity";
    case AG_ERR_UNSUPPORTED_CODOMAIN: return "unsupported-codomain";
    case AG_ERR_UNSUPPORTED_DOMAIN: return "unsupported-domain";
    case AG_ERR_GAP_UNDEFINED: return "gap-undefined";
    case AG_ERR_NO_SUCH_SUPPORT: return "no-such-support";
    case AG_ERR_ORACLE_INFEASIBLE: return "oracle-infeasible";
    case AG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

AG_API void ag_string_free(char* s) { std::free(s); }

AG_API uint64_t ag_default_budget(void) { return aritygap::default_budget(); }

// ---- functions ----

AG_API ag_status ag_function_create(uint32_t k, uint32_t n, uint32_t b,
                                    const uint32_t* table, size_t len,
                                    ag_function** out) {
  AG_REQUIRE(out && (table || len == 0));
  return guarded([&] {
    *out = wrap(aritygap::FiniteFunction(k, n, b, std::vector<aritygap::Value>(table, table + len)));
  });
}

AG_API ag_status ag_function_parse(const char* text, ag_function** out) {
  AG_REQUIRE(text && out);
  return guarded([&] { *out = wrap(aritygap::parse_function(text)); });
}

AG_API ag_status ag_function_clone(const ag_function* f, ag_function** out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = wrap(f->f); });
}

AG_API void ag_function_free(ag_function* f) { delete f; }

AG_API ag_status ag_function_shape(const ag_function* f, uint32_t* k, uint32_t* n,
                                   uint32_t* b) {
  AG_REQUIRE(f);
  if (k) *k = f->f.k();
  if (n) *n = f->f.n();
  if (b) *b = f->f.b();
  return AG_OK;
}

AG_API size_t ag_function_size(const ag_function* f) { return f ? f->f.size() : 0; }

AG_API ag_status ag_function_table(const ag_function* f, uint32_t* out, size_t len) {
  AG_REQUIRE(f && out && len == f->f.size());
  const auto table = f->f.table();
  std::copy(table.begin(), table.end(), out);
  return AG_OK;
}

AG_API ag_status ag_function_render(const ag_function* f, int single_line, char** out) {
  AG_REQUIRE(f && out);
  return guarded([&] {
    *out = copy_string(single_line ? aritygap::render_single_line(f->f)
                                   : aritygap::render(f->f));
  });
}

AG_API ag_status ag_reader_create(const char* text, size_t len, ag_reader** out) {
  AG_REQUIRE(out && (text || len == 0));
  return guarded([&] {
    *out = new ag_reader{aritygap::FunctionReader(std::string(text ? text : "", len))};
  });
}

AG_API ag_status ag_reader_next(ag_reader* reader, ag_function** out) {
  AG_REQUIRE(reader && out);
  *out = nullptr;
  return guarded([&] {
    if (auto f = reader->reader.next()) *out = wrap(std::move(*f));
  });
}

AG_API void ag_reader_free(ag_reader* reader) { delete reader; }

// ---- analysis ----

AG_API ag_status ag_essential_arity(const ag_function* f, size_t* out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = aritygap::essential_arity(f->f); });
}

AG_API ag_status ag_is_essential(const ag_function* f, size_t slot, int* out) {
  AG_REQUIRE(f && out);
  AG_REQUIRE(slot < f->f.n());
  return guarded([&] { *out = aritygap::is_essential(f->f, slot) ? 1 : 0; });
}

AG_API ag_status ag_quasi_arity(const ag_function* f, size_t* out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = aritygap::quasi_arity(f->f); });
}

AG_API ag_status ag_arity_gap(const ag_function* f, size_t* out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = aritygap::arity_gap(f->f).gap; });
}

AG_API ag_status ag_analyze(const ag_function* f, char** out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = copy_string(aritygap::render(aritygap::arity_gap(f->f))); });
}

AG_API ag_status ag_classify(const ag_function* f, ag_classify_mode mode, size_t* gap,
                             char** rendered) {
  AG_REQUIRE(f);
  return guarded([&] {
    aritygap::Classification c;
    switch (mode) {
      case AG_CLASSIFY_BOOLEAN: c = aritygap::classify_boolean(f->f); break;
      case AG_CLASSIFY_PSEUDO_BOOLEAN: c = aritygap::classify_pseudo_boolean(f->f); break;
      case AG_CLASSIFY_GENERAL: c = aritygap::classify(f->f); break;
      default: throw aritygap::Error(aritygap::Errc::invalid_argument, "unknown classify mode");
    }
    if (gap) *gap = c.gap;
    if (rendered) *rendered = copy_string(aritygap::render(c));
  });
}

AG_API ag_status ag_oddsupp_check(const ag_function* f, int restricted, int* determined,
                                  char** rendered) {
  AG_REQUIRE(f);
  return guarded([&] {
    const auto profile = restricted ? aritygap::restriction_determined_by_oddsupp(f->f)
                                    : aritygap::determined_by_oddsupp(f->f);
    if (determined) *determined = profile.determined ? 1 : 0;
    if (rendered) *rendered = copy_string(aritygap::render(profile));
  });
}

// ---- minors ----

AG_API ag_status ag_identification_minor(const ag_function* f, size_t i, size_t j,
                                         ag_function** out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = wrap(aritygap::identification_minor(f->f, i, j)); });
}

AG_API ag_status ag_simple_minor(const ag_function* f, uint32_t target_arity,
                                 const size_t* sigma, size_t len, ag_function** out) {
  AG_REQUIRE(f && out && (sigma || len == 0));
  return guarded([&] {
    aritygap::MinorMap map(target_arity, std::vector<std::size_t>(sigma, sigma + len));
    *out = wrap(aritygap::simple_minor(f->f, map));
  });
}

AG_API ag_status ag_diagonal(const ag_function* f, ag_function** out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = wrap(aritygap::diagonal(f->f)); });
}

// ---- oracles ----

AG_API ag_status ag_oracle_gap(const ag_function* f, size_t* out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = aritygap::oracle_gap(f->f); });
}

AG_API ag_status ag_oracle_quasi_arity(const ag_function* f, uint64_t budget, size_t* out) {
  AG_REQUIRE(f && out);
  return guarded([&] { *out = aritygap::oracle_quasi_arity(f->f, budget); });
}

// ---- generators ----

AG_API ag_status ag_gen_salomaa(uint32_t k, ag_function** out) {
  AG_REQUIRE(out);
  return guarded([&] { *out = wrap(aritygap::gen_salomaa(k)); });
}

AG_API ag_status ag_gen_quasi(uint32_t k, uint32_t n, uint32_t b, uint32_t m,
                              uint64_t seed, ag_function** out) {
  AG_REQUIRE(out);
  return guarded([&] { *out = wrap(aritygap::gen_quasi_m_ary(k, n, b, m, seed)); });
}

AG_API ag_status ag_gen_oddsupp(uint32_t k, uint32_t n, uint32_t b, uint64_t seed,
                                ag_function** out) {
  AG_REQUIRE(out);
  return guarded([&] { *out = wrap(aritygap::gen_oddsupp_determined(k, n, b, seed)); });
}

// ---- enumeration ----

AG_API ag_status ag_enumerator_create(uint32_t k, uint32_t n, uint32_t b,
                                      const char* const* filters, size_t filter_count,
                                      unsigned jobs, ag_enumerator** out) {
  AG_REQUIRE(out && (filters || filter_count == 0));
  return guarded([&] {
    std::vector<aritygap::Filter> parsed;
    for (size_t i = 0; i < filter_count; ++i) {
      if (!filters[i]) throw aritygap::Error(aritygap::Errc::invalid_argument, "null filter");
      parsed.push_back(aritygap::Filter::parse(filters[i]));
    }
    *out = new ag_enumerator{aritygap::Enumerator(k, n, b, std::move(parsed), jobs)};
  });
}

AG_API ag_status ag_enumerator_next(ag_enumerator* e, ag_function** out) {
  AG_REQUIRE(e && out);
  *out = nullptr;
  return guarded([&] {
    if (auto f = e->e.next()) *out = wrap(std::move(*f));
  });
}

AG_API void ag_enumerator_free(ag_enumerator* e) { delete e; }

// ---- verification ----

AG_API void ag_verify_options_init(ag_verify_options* options) {
  if (!options) return;
  const aritygap::SweepSpec defaults;
  options->theorem = nullptr;
  options->k = defaults.k;
  options->n = defaults.n;
  options->b = defaults.b;
  options->exhaustive = 0;
  options->samples = defaults.samples;
  options->seed = defaults.seed;
  options->witnesses = defaults.witnesses;
  options->jobs = defaults.jobs;
  options->budget = defaults.budget;
}

AG_API ag_status ag_verify(const ag_verify_options* options, ag_report** out) {
  AG_REQUIRE(options && options->theorem && out);
  return guarded([&] {
    aritygap::SweepSpec spec;
    spec.theorem = aritygap::parse_theorem_id(options->theorem);
    spec.k = options->k;
    spec.n = options->n;
    spec.b = options->b;
    spec.mode = options->exhaustive ? aritygap::SweepMode::exhaustive
                                    : aritygap::SweepMode::sampled;
    spec.samples = options->samples;
    spec.seed = options->seed;
    spec.witnesses = options->witnesses;
    spec.jobs = options->jobs;
    spec.budget = options->budget;
    *out = new ag_report{aritygap::verify(spec)};
  });
}

AG_API uint64_t ag_report_checked(const ag_report* r) { return r ? r->report.checked : 0; }

AG_API uint64_t ag_report_failures(const ag_report* r) {
  return r ? r->report.failures.size() : 0;
}

AG_API double ag_report_seconds(const ag_report* r) {
  return r ? std::chrono::duration<double>(r->report.elapsed).count() : 0.0;
}

AG_API ag_status ag_report_render(const ag_report* r, char** out) {
  AG_REQUIRE(r && out);
  return guarded([&] { *out = copy_string(aritygap::render(r->report)); });
}

AG_API void ag_report_free(ag_report* r) { delete r; }

}  // extern "C"
