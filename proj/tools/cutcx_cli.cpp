// Command-line front end. Talks to the library only through cutcx.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutcx/cutcx.h"

namespace {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitCapacity = 3 };

int exit_code_for(cutcx_status status) {
  switch (status) {
    case CUTCX_OK: return kExitOk;
    case CUTCX_ERR_INVALID_ARGUMENT: return kExitUsage;
    case CUTCX_ERR_CAPACITY: return kExitCapacity;
    default: return kExitFailure;
  }
}

class Session {
 public:
  Session() {
    if (cutcx_context_create(&ctx_) != CUTCX_OK) throw std::bad_alloc();
  }
  ~Session() { cutcx_context_destroy(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  cutcx_context* get() const { return ctx_; }

  // Prints the context error for a failed status and returns the exit code.
  int report(cutcx_status status) const {
    if (status != CUTCX_OK) {
      std::cerr << "cutcx: " << cutcx_status_name(status) << ": " << cutcx_context_last_error(ctx_)
                << '\n';
    }
    return exit_code_for(status);
  }

  // Writes and frees a library string.
  int emit(cutcx_status status, char* text) const {
    if (status == CUTCX_OK) {
      std::fputs(text, stdout);
      cutcx_string_free(text);
    }
    return report(status);
  }

 private:
  cutcx_context* ctx_ = nullptr;
};

// CUTCX_THREADS caps the worker count; unset means all hardware threads.
unsigned thread_budget() {
  const char* env = std::getenv("CUTCX_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) return 1;
  return static_cast<unsigned>(v);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int run_report(const Session& s, cutcx_status status, cutcx_report* report, cutcx_format format,
               bool timing) {
  if (status != CUTCX_OK) return s.report(status);
  char* text = nullptr;
  const cutcx_status rendered = cutcx_report_render(s.get(), report, format, timing ? 1 : 0, &text);
  const std::size_t failed = cutcx_report_failed_count(report);
  cutcx_report_destroy(report);
  const int code = s.emit(rendered, text);
  if (code != kExitOk) return code;
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-cut complexes of squared paths: tables, verification and exports", "cutcx"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", cutcx_version());

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  bool seed_check = false;
  app.add_flag("--seed-check", seed_check, "Run the fast self-check suite");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit the timing footer of verification reports");

  int r_min = 3, r_max = 6, k_min = 3, k_max = 10;
  auto* table = app.add_subcommand("table", "Grid of beta(k, k+r) from the closed formula");
  table->add_option("--r-min", r_min)->capture_default_str();
  table->add_option("--r-max", r_max)->capture_default_str();
  table->add_option("--k-min", k_min)->capture_default_str();
  table->add_option("--k-max", k_max)->capture_default_str();

  int n_max = 12;
  std::vector<unsigned> primes{2, 3};
  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "Compare brute force and oracles with the closed forms");
  verify->add_option("--n-max", n_max, "Largest number of vertices")->capture_default_str();
  verify->add_option("--primes", primes, "Comma-separated primes for homology")->delimiter(',');
  verify->add_option("--scope", scope,
                     "profile, fvector, homology, recurrence, genfun, hilbert or all (comma-separated)")
      ->capture_default_str();

  std::string kind;
  std::vector<int> params;
  auto* enumerate = app.add_subcommand("enum", "Print a closed-form object");
  enumerate->add_option("kind", kind, "faceenum, hpoly, hilbert, genfun, layers or profile")->required();
  enumerate->add_option("params", params, "k n, or r for genfun")->required();

  std::string graph_path;
  int graph_k = 0;
  std::string boundary_path;
  auto* graph = app.add_subcommand("graph", "Brute-force f-vector and bad profile of a graph file");
  graph->add_option("file", graph_path, "Graph file: 'n <count>' then 'e <u> <v>' lines")->required();
  graph->add_option("--k", graph_k, "Cut size")->required();
  graph->add_option("--dump-boundary", boundary_path, "Write boundary matrices as triplets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Session s;
    cutcx_format format = CUTCX_FORMAT_TEXT;
    cutcx_format_parse(format_name.c_str(), &format);
    if (const cutcx_status st = cutcx_context_set_threads(s.get(), thread_budget()); st != CUTCX_OK) {
      return s.report(st);
    }

    if (seed_check) {
      cutcx_report* report = nullptr;
      const cutcx_status st = cutcx_seed_check(s.get(), &report);
      return run_report(s, st, report, format, !no_timing);
    }
    if (*table) {
      char* text = nullptr;
      const cutcx_status st = cutcx_render_table(s.get(), r_min, r_max, k_min, k_max, format, &text);
      return s.emit(st, text);
    }
    if (*verify) {
      cutcx_report* report = nullptr;
      const cutcx_status st =
          cutcx_verify(s.get(), scope.c_str(), n_max, primes.data(), primes.size(), &report);
      return run_report(s, st, report, format, !no_timing);
    }
    if (*enumerate) {
      char* text = nullptr;
      const cutcx_status st =
          cutcx_render_enum(s.get(), kind.c_str(), params.data(), params.size(), format, &text);
      return s.emit(st, text);
    }
    if (*graph) {
      std::string contents;
      if (!read_file(graph_path, contents)) {
        std::cerr << "cutcx: cannot read " << graph_path << '\n';
        return kExitUsage;
      }
      cutcx_graph* g = nullptr;
      if (const cutcx_status st = cutcx_graph_parse(s.get(), contents.c_str(), &g); st != CUTCX_OK) {
        return s.report(st);
      }
      char* text = nullptr;
      const cutcx_status rendered = cutcx_render_graph(s.get(), g, graph_k, format, &text);
      int code = s.emit(rendered, text);
      if (code == kExitOk && !boundary_path.empty()) {
        char* dump = nullptr;
        const cutcx_status st = cutcx_dump_boundary(s.get(), g, graph_k, &dump);
        if (st == CUTCX_OK) {
          std::ofstream out(boundary_path, std::ios::binary);
          out << dump;
          cutcx_string_free(dump);
          if (!out) {
            std::cerr << "cutcx: cannot write " << boundary_path << '\n';
            code = kExitFailure;
          }
        } else {
          code = s.report(st);
        }
      }
      cutcx_graph_destroy(g);
      return code;
    }
    std::cout << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cutcx: " << e.what() << '\n';
    return kExitFailure;
  }
}
