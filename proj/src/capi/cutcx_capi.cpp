#include "cutcx/cutcx.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "cutcx/bad_complements.hpp"
#include "cutcx/closed_forms.hpp"
#include "cutcx/errors.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/homology.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/render.hpp"
#include "cutcx/verify_suite.hpp"

struct cutcx_context {
  unsigned threads = 1;
  std::string last_error;
};

struct cutcx_graph {
  cutcx::Graph graph;
};

struct cutcx_report {
  cutcx::RunReport report;
};

namespace {

constexpr const char* kVersion = "1.0.0";

cutcx_status fail(cutcx_context* ctx, cutcx_status status, const char* message) {
  if (ctx != nullptr) {
    try {
      ctx->last_error = message;
    } catch (...) {
      ctx->last_error.clear();
    }
  }
  return status;
}

// Runs fn, translating exceptions into status codes and the context message.
template <class Fn>
cutcx_status guarded(cutcx_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return CUTCX_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return CUTCX_OK;
  } catch (const cutcx::InvalidArgument& e) {
    return fail(ctx, CUTCX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const cutcx::CapacityError& e) {
    return fail(ctx, CUTCX_ERR_CAPACITY, e.what());
  } catch (const cutcx::VerificationFailure& e) {
    return fail(ctx, CUTCX_ERR_VERIFICATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, CUTCX_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, CUTCX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, CUTCX_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw cutcx::InvalidArgument(message);
}

cutcx::Format to_format(cutcx_format f) {
  switch (f) {
    case CUTCX_FORMAT_TEXT: return cutcx::Format::kText;
    case CUTCX_FORMAT_JSON: return cutcx::Format::kJson;
    case CUTCX_FORMAT_CSV: return cutcx::Format::kCsv;
  }
  throw cutcx::InvalidArgument("unknown output format");
}

}  // namespace

extern "C" {

const char* cutcx_version(void) { return kVersion; }

const char* cutcx_status_name(cutcx_status status) {
  switch (status) {
    case CUTCX_OK: return "ok";
    case CUTCX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CUTCX_ERR_CAPACITY: return "capacity exceeded";
    case CUTCX_ERR_VERIFICATION: return "verification failure";
    case CUTCX_ERR_OUT_OF_MEMORY: return "out of memory";
    case CUTCX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void cutcx_string_free(char* str) { std::free(str); }

cutcx_status cutcx_context_create(cutcx_context** out) {
  if (out == nullptr) return CUTCX_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) cutcx_context();
  return *out == nullptr ? CUTCX_ERR_OUT_OF_MEMORY : CUTCX_OK;
}

void cutcx_context_destroy(cutcx_context* ctx) { delete ctx; }

cutcx_status cutcx_context_set_threads(cutcx_context* ctx, unsigned threads) {
  return guarded(ctx, [&] { ctx->threads = cutcx::resolve_threads(threads); });
}

unsigned cutcx_context_threads(const cutcx_context* ctx) { return ctx == nullptr ? 0 : ctx->threads; }

const char* cutcx_context_last_error(const cutcx_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

cutcx_status cutcx_graph_squared_path(cutcx_context* ctx, int n, cutcx_graph** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    *out = new cutcx_graph{cutcx::squared_path(n)};
  });
}

cutcx_status cutcx_graph_parse(cutcx_context* ctx, const char* text, cutcx_graph** out) {
  return guarded(ctx, [&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new cutcx_graph{cutcx::parse_graph(text)};
  });
}

void cutcx_graph_destroy(cutcx_graph* graph) { delete graph; }

int cutcx_graph_vertex_count(const cutcx_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.vertex_count();
}

size_t cutcx_graph_edge_count(const cutcx_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

cutcx_status cutcx_graph_is_connected_induced(cutcx_context* ctx, const cutcx_graph* graph,
                                              const int* vertices, size_t count,
                                              int* out_connected) {
  return guarded(ctx, [&] {
    require(graph != nullptr && out_connected != nullptr, "null argument");
    require(vertices != nullptr || count == 0, "null vertex array");
    const int n = graph->graph.vertex_count();
    cutcx::VertexSet s;
    for (size_t i = 0; i < count; ++i) {
      if (vertices[i] < 1 || vertices[i] > n) {
        throw cutcx::InvalidArgument("vertex " + std::to_string(vertices[i]) + " outside 1.." +
                                     std::to_string(n));
      }
      s = s.with(vertices[i]);
    }
    *out_connected = cutcx::is_connected_induced(graph->graph, s) ? 1 : 0;
  });
}

cutcx_status cutcx_beta_closed(cutcx_context* ctx, int k, int n, char** out_decimal) {
  return guarded(ctx, [&] {
    require(out_decimal != nullptr, "output pointer is null");
    *out_decimal = copy_out(cutcx::beta_closed(k, n).get_str());
  });
}

cutcx_status cutcx_z_count(cutcx_context* ctx, int k, int n, char** out_decimal) {
  return guarded(ctx, [&] {
    require(out_decimal != nullptr, "output pointer is null");
    *out_decimal = copy_out(cutcx::z_count(k, n).get_str());
  });
}

cutcx_status cutcx_format_parse(const char* name, cutcx_format* out) {
  if (name == nullptr || out == nullptr) return CUTCX_ERR_INVALID_ARGUMENT;
  const std::string s(name);
  if (s == "text") {
    *out = CUTCX_FORMAT_TEXT;
  } else if (s == "json") {
    *out = CUTCX_FORMAT_JSON;
  } else if (s == "csv") {
    *out = CUTCX_FORMAT_CSV;
  } else {
    return CUTCX_ERR_INVALID_ARGUMENT;
  }
  return CUTCX_OK;
}

cutcx_status cutcx_render_table(cutcx_context* ctx, int r_min, int r_max, int k_min, int k_max,
                                cutcx_format format, char** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    *out = copy_out(cutcx::render_table(r_min, r_max, k_min, k_max, to_format(format)));
  });
}

cutcx_status cutcx_render_enum(cutcx_context* ctx, const char* kind, const int* params,
                               size_t param_count, cutcx_format format, char** out) {
  return guarded(ctx, [&] {
    require(kind != nullptr && out != nullptr, "null argument");
    require(params != nullptr || param_count == 0, "null parameter array");
    const std::vector<int> values(params, params + param_count);
    *out = copy_out(cutcx::render_enum(cutcx::parse_enum_kind(kind), values, to_format(format)));
  });
}

cutcx_status cutcx_render_graph(cutcx_context* ctx, const cutcx_graph* graph, int k,
                                cutcx_format format, char** out) {
  return guarded(ctx, [&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = copy_out(cutcx::render_graph_report(graph->graph, k, to_format(format), ctx->threads));
  });
}

cutcx_status cutcx_dump_boundary(cutcx_context* ctx, const cutcx_graph* graph, int k, char** out) {
  return guarded(ctx, [&] {
    require(graph != nullptr && out != nullptr, "null argument");
    const auto chain = cutcx::build_chain_complex(cutcx::cut_complex_faces(graph->graph, k));
    *out = copy_out(cutcx::format_boundary_triplets(chain));
  });
}

cutcx_status cutcx_verify(cutcx_context* ctx, const char* scope, int n_max, const unsigned* primes,
                          size_t prime_count, cutcx_report** out) {
  return guarded(ctx, [&] {
    require(scope != nullptr && out != nullptr, "null argument");
    require(primes != nullptr || prime_count == 0, "null prime array");
    cutcx::VerifyOptions options;
    options.n_max = n_max;
    options.primes.assign(primes, primes + prime_count);
    options.scopes = cutcx::parse_scopes(scope);
    options.threads = ctx->threads;
    *out = new cutcx_report{cutcx::run_verify(options)};
  });
}

cutcx_status cutcx_seed_check(cutcx_context* ctx, cutcx_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    *out = new cutcx_report{cutcx::run_seed_check(ctx->threads)};
  });
}

size_t cutcx_report_check_count(const cutcx_report* report) {
  return report == nullptr ? 0 : report->report.checks.size();
}

size_t cutcx_report_failed_count(const cutcx_report* report) {
  return report == nullptr ? 0 : report->report.failed();
}

cutcx_status cutcx_report_render(cutcx_context* ctx, const cutcx_report* report, cutcx_format format,
                                 int include_timing, char** out) {
  return guarded(ctx, [&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = copy_out(cutcx::render_report(report->report, to_format(format), include_timing != 0));
  });
}

void cutcx_report_destroy(cutcx_report* report) { delete report; }

}  // extern "C"
