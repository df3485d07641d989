#include "spqcc.h"

#include <cstring>
#include <string>

#include "suites.hpp"

using namespace spq;

struct spq_verifier {
  RunConfig cfg;
  RunResult result;
  std::string summary;
  std::string last_error;
  bool ran = false;
};

namespace {

spq_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
      return SPQ_ERR_INVALID;
    case Errc::unsupported:
      return SPQ_ERR_UNSUPPORTED;
    case Errc::depth_overflow:
      return SPQ_ERR_DEPTH;
    case Errc::height_bound:
      return SPQ_ERR_RESOURCE;
    case Errc::malformed_scalar:
      return SPQ_ERR_MALFORMED;
    case Errc::limit_undefined:
      return SPQ_ERR_LIMIT;
    case Errc::construction_failure:
      return SPQ_ERR_CONSTRUCTION;
    case Errc::reseed_required:
      return SPQ_ERR_RESEED;
  }
  return SPQ_ERR_INTERNAL;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      if (start < s.size()) out.push_back(s.substr(start));
      break;
    }
    if (comma > start) out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

spq_verifier* spq_verifier_new(void) { return new spq_verifier(); }

void spq_verifier_free(spq_verifier* v) { delete v; }

spq_status spq_verifier_configure(spq_verifier* v, const char* key, const char* value) {
  if (!v || !key || !value) return SPQ_ERR_INVALID;
  std::string k = key, val = value;
  try {
    if (k == "n") {
      v->cfg.n = std::stoi(val);
      if (v->cfg.n < 2 || v->cfg.n > 4) throw Error(Errc::invalid_argument, "n must be 2..4");
    } else if (k == "depth") {
      v->cfg.depth = std::stoi(val);
      if (v->cfg.depth < 1 || v->cfg.depth > 12)
        throw Error(Errc::invalid_argument, "depth must be 1..12");
    } else if (k == "seed") {
      v->cfg.seed = std::stoull(val);
    } else if (k == "blocks") {
      v->cfg.blocks = val;
    } else if (k == "suites") {
      v->cfg.suites = split_csv(val);
      if (v->cfg.suites.empty()) throw Error(Errc::invalid_argument, "no suites selected");
    } else if (k == "symbolic-z") {
      v->cfg.symbolic_z = val == "1" || val == "true";
    } else if (k == "generic-lambda") {
      v->cfg.generic_lambda = val == "1" || val == "true";
    } else if (k == "gl-eigs") {
      v->cfg.gl_eigs = val;
    } else {
      v->last_error = "unknown key '" + k + "'";
      return SPQ_ERR_INVALID;
    }
  } catch (const Error& err) {
    v->last_error = err.what();
    return status_of(err.code());
  } catch (const std::exception& err) {
    v->last_error = err.what();
    return SPQ_ERR_INVALID;
  }
  v->last_error.clear();
  return SPQ_OK;
}

spq_status spq_verifier_run(spq_verifier* v) {
  if (!v) return SPQ_ERR_INVALID;
  try {
    // validate before running
    BlockStructure::parse(v->cfg.n, v->cfg.blocks);
    v->result = run_suites(v->cfg);
    v->summary = v->result.summary();
    v->ran = true;
    v->last_error.clear();
    return SPQ_OK;
  } catch (const Error& err) {
    v->last_error = err.what();
    return status_of(err.code());
  } catch (const std::exception& err) {
    v->last_error = err.what();
    return SPQ_ERR_INTERNAL;
  }
}

int spq_verifier_outcome(const spq_verifier* v) {
  if (!v || !v->ran) return SPQ_RUN_FAIL;
  return v->result.exit_code();
}

size_t spq_verifier_report_count(const spq_verifier* v) {
  return v && v->ran ? v->result.reports.size() : 0;
}

const char* spq_verifier_report_suite(const spq_verifier* v, size_t index) {
  if (!v || !v->ran || index >= v->result.reports.size()) return nullptr;
  return v->result.reports[index].suite.c_str();
}

const char* spq_verifier_report_json(const spq_verifier* v, size_t index) {
  if (!v || !v->ran || index >= v->result.reports.size()) return nullptr;
  // cache the rendering inside the report list
  auto* self = const_cast<spq_verifier*>(v);
  static thread_local std::string rendered;
  rendered = self->result.reports[index].to_json();
  return rendered.c_str();
}

const char* spq_verifier_summary(const spq_verifier* v) {
  return v && v->ran ? v->summary.c_str() : "";
}

const char* spq_verifier_last_error(const spq_verifier* v) {
  return v ? v->last_error.c_str() : "";
}

const char* spq_suite_names(void) {
  static std::string names = [] {
    std::string out;
    for (const auto& s : suite_names()) {
      if (!out.empty()) out += ",";
      out += s;
    }
    return out;
  }();
  return names.c_str();
}

const char* spq_version(void) { return "1.0.0"; }

}  // extern "C"
