#include <cstring>
#include <fstream>
#include <sstream>

#include "ultragrade/error.hpp"
#include "ultragrade/report.hpp"
#include "ultragrade/structure.hpp"
#include "ultragrade/ultragrade.h"

struct ug_presentation {
  ultragrade::Presentation p;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;

ug_status fail(ug_status s, const std::string& msg, int line = 0) {
  last_error = msg;
  last_line = line;
  return s;
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
ug_status guarded(F&& f) {
  last_error.clear();
  last_line = 0;
  try {
    return f();
  } catch (const ultragrade::Error& e) {
    return fail(static_cast<ug_status>(e.code()), e.what(), e.line());
  } catch (const nlohmann::json::exception& e) {
    return fail(UG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UG_ERR_INTERNAL, e.what());
  }
}

ultragrade::AnalyzeOptions options(uint64_t horizon, unsigned ck2_depth) {
  ultragrade::AnalyzeOptions o;
  if (horizon) o.horizon = horizon;
  if (ck2_depth) o.ck2_depth = ck2_depth;
  return o;
}

}  // namespace

extern "C" {

const char* ug_version(void) { return ultragrade::kToolVersion; }

const char* ug_status_name(ug_status status) {
  switch (status) {
    case UG_OK: return "OK";
    case UG_ERR_IO: return "IOError";
    case UG_ERR_INTERNAL: return "InternalError";
    default: break;
  }
  if (status >= UG_ERR_SYNTAX && status <= UG_ERR_INVALID_ARGUMENT) {
    return ultragrade::error_code_name(static_cast<ultragrade::ErrorCode>(status));
  }
  return "Unknown";
}

const char* ug_last_error(void) { return last_error.c_str(); }

int ug_last_error_line(void) { return last_line; }

ug_status ug_presentation_parse(const char* text, ug_presentation** out) {
  if (!text || !out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ug_presentation{ultragrade::parse_presentation(text)};
    return UG_OK;
  });
}

ug_status ug_presentation_load(const char* path, ug_presentation** out) {
  if (!path || !out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(UG_ERR_IO, std::string("cannot open ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ug_presentation_parse(ss.str().c_str(), out);
}

void ug_presentation_free(ug_presentation* p) { delete p; }

ug_status ug_presentation_print(const ug_presentation* p, char** text_out) {
  if (!p || !text_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *text_out = dup(ultragrade::print_presentation(p->p));
    return UG_OK;
  });
}

ug_status ug_associated_graph(const ug_presentation* p, char** text_out) {
  if (!p || !text_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *text_out = dup(ultragrade::print_presentation(ultragrade::build_associated_graph(p->p)));
    return UG_OK;
  });
}

ug_status ug_analyze(const ug_presentation* p, uint64_t horizon, unsigned ck2_depth, char** json_out) {
  if (!p || !json_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *json_out = dup(ultragrade::analyze_json(p->p, options(horizon, ck2_depth)).dump());
    return UG_OK;
  });
}

ug_status ug_check(const ug_presentation* p, const char* property, uint64_t horizon, unsigned ck2_depth,
                   char** json_out) {
  if (!p || !property || !json_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *json_out = dup(ultragrade::check_json(p->p, property, options(horizon, ck2_depth)).dump());
    return UG_OK;
  });
}

ug_status ug_eval(const ug_presentation* p, const char* expr, char** json_out) {
  if (!p || !expr || !json_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *json_out = dup(ultragrade::eval_json(p->p, expr).dump());
    return UG_OK;
  });
}

ug_status ug_skew(const ug_presentation* p, const char* expr, unsigned verify_depth, char** json_out) {
  if (!p || !expr || !json_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *json_out = dup(ultragrade::skew_json(p->p, expr, verify_depth).dump());
    return UG_OK;
  });
}

ug_status ug_render_text(const char* json, int color, char** text_out) {
  if (!json || !text_out) return fail(UG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *text_out = dup(ultragrade::render_text(nlohmann::json::parse(json), color != 0));
    return UG_OK;
  });
}

void ug_string_free(char* s) { delete[] s; }

}  // extern "C"
