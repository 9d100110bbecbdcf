#include "cutcx/serialize.hpp"

#include <sstream>

namespace cutcx {
namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

Json big_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json set_array(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace

std::string to_text(const FVector& fv) {
  std::ostringstream out;
  out << "fvector n=" << fv.n << " k=" << fv.k << " void=" << bool_text(fv.is_void) << '\n';
  for (std::size_t p = 0; p < fv.counts.size(); ++p) {
    out << "p=" << p << " f=" << fv.counts[p].get_str() << '\n';
  }
  return out.str();
}

std::string to_text(const BadProfile& profile) {
  std::ostringstream out;
  out << "profile k=" << profile.k << " n=" << profile.n << '\n';
  for (int m = profile.k; m <= profile.n; ++m) out << "m=" << m << " q=" << profile.q(m).get_str() << '\n';
  return out.str();
}

std::string to_text(const NonfaceLayers& layers) {
  std::ostringstream out;
  out << "layers k=" << layers.k << " n=" << layers.n << " r=" << layers.n - layers.k << '\n';
  out << "level=r-1 count=" << layers.level_rminus1.size() << '\n';
  for (VertexSet s : layers.level_rminus1) out << "level=r-1 set=" << s.to_string() << '\n';
  for (std::size_t j = 0; j < layers.level_r_by_j.size(); ++j) {
    out << "level=r j=" << j << " count=" << layers.level_r_by_j[j].size() << '\n';
    for (VertexSet s : layers.level_r_by_j[j]) out << "level=r j=" << j << " set=" << s.to_string() << '\n';
  }
  return out.str();
}

std::string to_text(const RationalGenFun& gf) {
  std::ostringstream out;
  out << "genfun pole_order=" << gf.pole_order << '\n';
  out << "numerator=" << coefficient_list(gf.numerator) << '\n';
  return out.str();
}

Json to_json(VertexSet s) { return Json(s.members()); }

Json to_json(const FVector& fv) {
  return Json{{"kind", "fvector"}, {"n", fv.n}, {"k", fv.k}, {"void", fv.is_void},
              {"counts", big_array(fv.counts)}};
}

Json to_json(const BadProfile& profile) {
  Json q = Json::array();
  for (int m = profile.k; m <= profile.n; ++m) q.push_back(Json{{"m", m}, {"q", profile.q(m).get_str()}});
  return Json{{"kind", "profile"}, {"k", profile.k}, {"n", profile.n}, {"q", q}};
}

Json to_json(const NonfaceLayers& layers) {
  Json by_j = Json::array();
  for (std::size_t j = 0; j < layers.level_r_by_j.size(); ++j) {
    by_j.push_back(Json{{"j", j}, {"sets", set_array(layers.level_r_by_j[j])}});
  }
  return Json{{"kind", "layers"},
              {"k", layers.k},
              {"n", layers.n},
              {"r", layers.n - layers.k},
              {"level_rminus1", set_array(layers.level_rminus1)},
              {"level_r_by_j", by_j}};
}

Json to_json(const IntPolynomial& p) { return big_array(p.coefficients()); }

Json to_json(const RatPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RationalGenFun& gf) {
  return Json{{"numerator", to_json(gf.numerator)}, {"pole_order", gf.pole_order}};
}

}  // namespace cutcx
