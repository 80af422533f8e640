#include "mwext/mwext.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>

#include "mwext/report.hpp"

struct mwext_code {
  mwext::SpacePtr space;
};

struct mwext_map {
  std::optional<mwext::LinMap> map;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_report;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mwext_status status_of(mwext::ErrorCode code) {
  using mwext::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return MWEXT_PARSE_ERROR;
    case ErrorCode::EnumerationTooLarge:
    case ErrorCode::RingTooLarge:
    case ErrorCode::SearchTooLarge:
    case ErrorCode::OrderTooLarge: return MWEXT_GUARD_EXCEEDED;
    case ErrorCode::TheoremViolation: return MWEXT_THEOREM_VIOLATION;
    default: return MWEXT_SCHEMA_VIOLATION;
  }
}

// Runs fn, translating exceptions into a status, the thread's last error and,
// when json_out is given, an error report.
mwext_status guarded(char** json_out, const std::function<void()>& fn) {
  last_error.clear();
  last_report.clear();
  try {
    fn();
    return MWEXT_OK;
  } catch (const mwext::Error& e) {
    last_error = e.what();
    last_report = mwext::render(mwext::error_json(e));
    if (json_out) *json_out = dup(last_report);
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    last_report = mwext::render(mwext::json{
        {"schema", mwext::kSchemaVersion},
        {"error", {{"kind", "InternalError"}, {"code", nullptr}, {"field", nullptr}, {"message", e.what()}}}});
    if (json_out) *json_out = dup(last_report);
    return MWEXT_INTERNAL_ERROR;
  }
}

mwext::RunConfig run_config(const mwext_config* cfg) {
  mwext::RunConfig rc;
  if (!cfg) return rc;
  if (cfg->max_enum == 0) throw mwext::Error(mwext::ErrorCode::SchemaViolation, "max_enum must be positive", "max_enum");
  if (cfg->max_ring == 0) throw mwext::Error(mwext::ErrorCode::SchemaViolation, "max_ring must be positive", "max_ring");
  if (cfg->max_search == 0)
    throw mwext::Error(mwext::ErrorCode::SchemaViolation, "max_search must be positive", "max_search");
  rc.limits = {cfg->max_enum, cfg->max_ring, cfg->max_search};
  if (cfg->has_seed) rc.seed = cfg->seed;
  rc.samples = cfg->samples;
  rc.diagnostic = cfg->diagnostic != 0;
  return rc;
}

mwext::Func func_of(const mwext::FunctionSpace& a, const unsigned* coeffs, std::size_t count, const char* field) {
  std::vector<mwext::Elem> v;
  for (std::size_t i = 0; i < count; ++i) {
    if (coeffs[i] >= a.field().order())
      throw mwext::Error(mwext::ErrorCode::FieldMismatch,
                         std::string(field) + "[" + std::to_string(i) + "]: element index outside " + a.field().name(),
                         field);
    v.emplace_back(coeffs[i]);
  }
  if (v.size() != a.input_coordinates().rows())
    throw mwext::Error(mwext::ErrorCode::WidthMismatch,
                       std::string(field) + ": expected " + std::to_string(a.input_coordinates().rows()) +
                           " coefficients, one per code row",
                       field);
  return a.from_input_coeffs(v);
}

void require(const void* p, const char* what) {
  if (!p) throw mwext::Error(mwext::ErrorCode::InvalidArgument, std::string(what) + " is null", what);
}

mwext_status emit(char** json_out, int* verdict, const std::function<mwext::Report()>& fn) {
  if (json_out) *json_out = nullptr;
  return guarded(json_out, [&] {
    require(json_out, "json_out");
    const mwext::Report r = fn();
    *json_out = dup(mwext::render(r.body));
    if (verdict) *verdict = r.verdict;
  });
}

const mwext::LinMap& map_of(const mwext_map* m) {
  require(m, "map");
  return *m->map;
}

const mwext::SpacePtr& code_of(const mwext_code* c) {
  require(c, "code");
  return c->space;
}

}  // namespace

extern "C" {

void mwext_config_default(mwext_config* cfg) {
  if (!cfg) return;
  const mwext::Limits l;
  *cfg = mwext_config{l.max_enum, l.max_ring, l.max_search, 0, 0, 0, 0};
}

const char* mwext_schema_version(void) { return mwext::kSchemaVersion; }

const char* mwext_last_error_message(void) { return last_error.c_str(); }

char* mwext_last_error_report(void) { return last_report.empty() ? nullptr : dup(last_report); }

void mwext_string_free(char* s) { std::free(s); }

mwext_status mwext_code_from_json(const char* text, int normalize, mwext_code** out) {
  return guarded(nullptr, [&] {
    require(text, "text");
    require(out, "out");
    *out = new mwext_code{mwext::code_from_json(mwext::parse_json(text), normalize != 0)};
  });
}

mwext_status mwext_code_load(const char* path, int normalize, mwext_code** out) {
  return guarded(nullptr, [&] {
    require(path, "path");
    require(out, "out");
    *out = new mwext_code{mwext::code_from_json(mwext::load_json_file(path), normalize != 0)};
  });
}

void mwext_code_free(mwext_code* code) { delete code; }

size_t mwext_code_dimension(const mwext_code* code) { return code ? code->space->dim() : 0; }
size_t mwext_code_length(const mwext_code* code) { return code ? code->space->length() : 0; }
unsigned mwext_code_field_order(const mwext_code* code) { return code ? code->space->field().order() : 0; }

mwext_status mwext_map_from_json(const char* text, const char* base_dir, int normalize, mwext_map** out) {
  return guarded(nullptr, [&] {
    require(text, "text");
    require(out, "out");
    *out = new mwext_map{mwext::map_from_json(mwext::parse_json(text), base_dir ? base_dir : ".", normalize != 0)};
  });
}

mwext_status mwext_map_load(const char* path, int normalize, mwext_map** out) {
  return guarded(nullptr, [&] {
    require(path, "path");
    require(out, "out");
    const std::filesystem::path p(path);
    *out = new mwext_map{mwext::map_from_json(mwext::load_json_file(p), p.parent_path(), normalize != 0)};
  });
}

void mwext_map_free(mwext_map* map) { delete map; }

mwext_status mwext_code_weight(const mwext_code* code, const unsigned* coeffs, size_t count, char** out) {
  return guarded(nullptr, [&] {
    require(out, "out");
    const auto& a = *code_of(code);
    *out = dup(mwext::to_string(a.weight(func_of(a, coeffs, count, "coeffs"))));
  });
}

mwext_status mwext_map_is_isometry(const mwext_config* cfg, const mwext_map* map, int* out) {
  return guarded(nullptr, [&] {
    require(out, "out");
    *out = mwext::is_isometry(map_of(map), run_config(cfg).limits).isometry ? 1 : 0;
  });
}

mwext_status mwext_report_weight(const mwext_config* cfg, const mwext_code* code, const unsigned* coeffs, size_t count,
                                 char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] {
    const auto& a = *code_of(code);
    return mwext::weight_report(run_config(cfg), a, func_of(a, coeffs, count, "coeffs"));
  });
}

mwext_status mwext_report_distance(const mwext_config* cfg, const mwext_code* code, const unsigned* u, size_t u_count,
                                   const unsigned* v, size_t v_count, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] {
    const auto& a = *code_of(code);
    return mwext::distance_report(run_config(cfg), a, func_of(a, u, u_count, "u"), func_of(a, v, v_count, "v"));
  });
}

mwext_status mwext_report_quotient(const mwext_config* cfg, const mwext_code* code, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::quotient_report(run_config(cfg), *code_of(code)); });
}

mwext_status mwext_report_ring(const mwext_config* cfg, const mwext_code* code, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::ring_report(run_config(cfg), *code_of(code)); });
}

mwext_status mwext_report_controllable(const mwext_config* cfg, const mwext_code* code, char** json_out,
                                       int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::controllable_report(run_config(cfg), *code_of(code)); });
}

mwext_status mwext_report_isometry(const mwext_config* cfg, const mwext_map* map, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::isometry_report(run_config(cfg), map_of(map)); });
}

mwext_status mwext_report_separating(const mwext_config* cfg, const mwext_map* map, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::separating_report(run_config(cfg), map_of(map)); });
}

mwext_status mwext_report_decompose(const mwext_config* cfg, const mwext_map* map, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::decompose_report(run_config(cfg), map_of(map)); });
}

mwext_status mwext_report_verify(const mwext_config* cfg, const mwext_map* map, const char* decomposition_json,
                                 char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] {
    require(decomposition_json, "decomposition");
    const auto& h = map_of(map);
    return mwext::verify_report(run_config(cfg), h,
                                mwext::decomposition_from_json(mwext::parse_json(decomposition_json), h));
  });
}

mwext_status mwext_report_monomial_form(const mwext_config* cfg, const mwext_map* map, char** json_out,
                                        int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::monomial_form_report(run_config(cfg), map_of(map)); });
}

mwext_status mwext_report_macwilliams(const mwext_config* cfg, const mwext_code* c1, const mwext_code* c2,
                                      char** json_out, int* verdict) {
  return emit(json_out, verdict,
              [&] { return mwext::macwilliams_report(run_config(cfg), code_of(c1), code_of(c2)); });
}

mwext_status mwext_report_selftest(const mwext_config* cfg, char** json_out, int* verdict) {
  return emit(json_out, verdict, [&] { return mwext::selftest_report(run_config(cfg)); });
}

char* mwext_error_report(const char* kind, const char* field, const char* message) {
  const mwext::json body{{"schema", mwext::kSchemaVersion},
                         {"error", {{"kind", kind ? kind : "ParseError"},
                                    {"code", nullptr},
                                    {"field", field ? mwext::json(field) : mwext::json(nullptr)},
                                    {"message", message ? message : ""}}}};
  return dup(mwext::render(body));
}

}  // extern "C"
