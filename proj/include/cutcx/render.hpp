#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cutcx/graph.hpp"

namespace cutcx {

enum class Format { kText, kJson, kCsv };

// "text", "json" or "csv"; InvalidArgument otherwise.
Format parse_format(std::string_view name);

// beta(k, k+r) grid. Text layout: a header "r\k" followed by the k values,
// then one row per r, every column right-aligned to its widest cell and
// separated by a single space. CSV has the same grid with commas.
std::string render_table(int r_min, int r_max, int k_min, int k_max, Format format);

enum class EnumKind { kFaceEnum, kHPoly, kHilbert, kGenFun, kLayers, kProfile };

EnumKind parse_enum_kind(std::string_view name);

// params is {k, n} for every kind except genfun, which takes {r}.
std::string render_enum(EnumKind kind, const std::vector<int>& params, Format format);

// Brute-force f-vector, reduced Euler characteristic and bad profile of a
// custom graph.
std::string render_graph_report(const Graph& g, int k, Format format, unsigned threads);

}  // namespace cutcx
