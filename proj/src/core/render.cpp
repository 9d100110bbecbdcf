#include "cutcx/render.hpp"

#include <algorithm>
#include <sstream>

#include "cutcx/errors.hpp"
#include "cutcx/serialize.hpp"

namespace cutcx {
namespace {

constexpr std::int64_t kTableCellLimit = 100'000;
constexpr int kTableIndexLimit = 10'000;

std::string dump(const Json& j) { return j.dump(2) + '\n'; }

std::string csv_set(VertexSet s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out;
}

void require_params(const std::vector<int>& params, std::size_t count, const char* kind) {
  if (params.size() != count) {
    throw InvalidArgument(std::string(kind) + " takes " + std::to_string(count) + " integer parameter" +
                          (count == 1 ? "" : "s") + ", got " + std::to_string(params.size()));
  }
}

std::string polynomial_csv(const IntPolynomial& p) {
  std::string out = "degree,coefficient\n";
  const auto& c = p.coefficients();
  for (std::size_t d = 0; d < c.size(); ++d) out += std::to_string(d) + ',' + c[d].get_str() + '\n';
  return out;
}

std::string render_polynomial(const char* kind, int k, int n, const IntPolynomial& p, char var,
                              Format format) {
  switch (format) {
    case Format::kText:
      return p.to_string(var) + '\n';
    case Format::kCsv:
      return polynomial_csv(p);
    case Format::kJson:
      return dump(Json{{"kind", kind}, {"k", k}, {"n", n}, {"polynomial", p.to_string(var)},
                       {"coefficients", to_json(p)}});
  }
  throw InternalError("unknown format");
}

std::string render_rational(Json header, const RationalGenFun& gf, char var, Format format) {
  switch (format) {
    case Format::kText:
      return "numerator=" + gf.numerator.to_string(var) + "\npole_order=" +
             std::to_string(gf.pole_order) + '\n';
    case Format::kCsv: {
      std::string out = "pole_order,degree,coefficient\n";
      const auto& c = gf.numerator.coefficients();
      for (std::size_t d = 0; d < c.size(); ++d) {
        out += std::to_string(gf.pole_order) + ',' + std::to_string(d) + ',' + c[d].get_str() + '\n';
      }
      return out;
    }
    case Format::kJson:
      header["numerator"] = gf.numerator.to_string(var);
      header["numerator_coefficients"] = to_json(gf.numerator);
      header["pole_order"] = gf.pole_order;
      return dump(header);
  }
  throw InternalError("unknown format");
}

std::string layers_csv(const NonfaceLayers& layers) {
  std::string out = "level,j,set\n";
  for (VertexSet s : layers.level_rminus1) out += "r-1,," + csv_set(s) + '\n';
  for (std::size_t j = 0; j < layers.level_r_by_j.size(); ++j) {
    for (VertexSet s : layers.level_r_by_j[j]) out += "r," + std::to_string(j) + ',' + csv_set(s) + '\n';
  }
  return out;
}

std::string profile_csv(const BadProfile& profile) {
  std::string out = "m,q\n";
  for (int m = profile.k; m <= profile.n; ++m) out += std::to_string(m) + ',' + profile.q(m).get_str() + '\n';
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (text, json, csv)");
}

std::string render_table(int r_min, int r_max, int k_min, int k_max, Format format) {
  if (r_max > kTableIndexLimit || k_max > kTableIndexLimit) {
    throw CapacityError("table indices are limited to " + std::to_string(kTableIndexLimit));
  }
  if (r_max >= r_min && k_max >= k_min &&
      std::int64_t{r_max - r_min + 1} * (k_max - k_min + 1) > kTableCellLimit) {
    throw CapacityError("table is limited to " + std::to_string(kTableCellLimit) + " cells");
  }
  const BettiTable t = closed_form_table(r_min, r_max, k_min, k_max);

  if (format == Format::kJson) {
    Json rows = Json::array();
    for (int r = r_min; r <= r_max; ++r) {
      Json values = Json::array();
      for (int k = k_min; k <= k_max; ++k) values.push_back(t.at(k, r).get_str());
      rows.push_back(Json{{"r", r}, {"values", values}});
    }
    Json ks = Json::array();
    for (int k = k_min; k <= k_max; ++k) ks.push_back(k);
    return dump(Json{{"kind", "table"}, {"r_min", r_min}, {"r_max", r_max}, {"k_min", k_min},
                     {"k_max", k_max}, {"k", ks}, {"rows", rows}});
  }

  std::vector<std::vector<std::string>> grid;
  grid.emplace_back();
  grid.back().push_back("r\\k");
  for (int k = k_min; k <= k_max; ++k) grid.back().push_back(std::to_string(k));
  for (int r = r_min; r <= r_max; ++r) {
    grid.emplace_back();
    grid.back().push_back(std::to_string(r));
    for (int k = k_min; k <= k_max; ++k) grid.back().push_back(t.at(k, r).get_str());
  }

  std::string out;
  if (format == Format::kCsv) {
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c != 0) out += ',';
        out += row[c];
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ' ';
      out.append(width[c] - row[c].size(), ' ');
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

EnumKind parse_enum_kind(std::string_view name) {
  if (name == "faceenum") return EnumKind::kFaceEnum;
  if (name == "hpoly") return EnumKind::kHPoly;
  if (name == "hilbert") return EnumKind::kHilbert;
  if (name == "genfun") return EnumKind::kGenFun;
  if (name == "layers") return EnumKind::kLayers;
  if (name == "profile") return EnumKind::kProfile;
  throw InvalidArgument("unknown kind '" + std::string(name) +
                        "' (faceenum, hpoly, hilbert, genfun, layers, profile)");
}

std::string render_enum(EnumKind kind, const std::vector<int>& params, Format format) {
  if (kind == EnumKind::kGenFun) {
    require_params(params, 1, "genfun");
    const int r = params[0];
    return render_rational(Json{{"kind", "genfun"}, {"r", r}}, diagonal_genfun(r), 'x', format);
  }
  require_params(params, 2, "this kind");
  const int k = params[0];
  const int n = params[1];
  switch (kind) {
    case EnumKind::kFaceEnum:
      return render_polynomial("faceenum", k, n, face_enumerator_closed(k, n), 'x', format);
    case EnumKind::kHPoly:
      return render_polynomial("hpoly", k, n, h_polynomial(k, n), 't', format);
    case EnumKind::kHilbert:
      return render_rational(Json{{"kind", "hilbert"}, {"k", k}, {"n", n}}, hilbert_series(k, n), 't',
                             format);
    case EnumKind::kLayers: {
      const NonfaceLayers layers = nonface_layers(k, n);
      if (format == Format::kText) return to_text(layers);
      if (format == Format::kCsv) return layers_csv(layers);
      return dump(to_json(layers));
    }
    case EnumKind::kProfile: {
      const BadProfile profile = q_profile_closed(k, n);
      if (format == Format::kText) return to_text(profile);
      if (format == Format::kCsv) return profile_csv(profile);
      return dump(to_json(profile));
    }
    case EnumKind::kGenFun:
      break;
  }
  throw InternalError("unhandled enum kind");
}

std::string render_graph_report(const Graph& g, int k, Format format, unsigned threads) {
  const FVector fv = f_vector_bruteforce(g, k, FVectorMethod::kAuto, threads);
  const BadProfile profile = q_profile_bruteforce(g, k, threads);
  const BigInt euler = reduced_euler(fv);
  switch (format) {
    case Format::kText:
      return to_text(fv) + "reduced_euler=" + euler.get_str() + '\n' + to_text(profile);
    case Format::kCsv: {
      std::string out = "section,index,value\n";
      for (std::size_t p = 0; p < fv.counts.size(); ++p) {
        out += "f," + std::to_string(p) + ',' + fv.counts[p].get_str() + '\n';
      }
      out += "reduced_euler,," + euler.get_str() + '\n';
      for (int m = profile.k; m <= profile.n; ++m) {
        out += "q," + std::to_string(m) + ',' + profile.q(m).get_str() + '\n';
      }
      return out;
    }
    case Format::kJson:
      return dump(Json{{"kind", "graph"},
                       {"n", g.vertex_count()},
                       {"edges", g.edge_count()},
                       {"k", k},
                       {"fvector", to_json(fv)},
                       {"reduced_euler", euler.get_str()},
                       {"profile", to_json(profile)}});
  }
  throw InternalError("unknown format");
}

}  // namespace cutcx
