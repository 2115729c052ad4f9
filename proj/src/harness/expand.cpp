#include <string>

#include "json.hpp"

#include "qlab/cfrac/cfrac.hpp"
#include "qlab/harness/harness.hpp"
#include "qlab/lommel/lommel.hpp"
#include "qlab/qseries/qseries.hpp"
#include "qlab/shapes/shapes.hpp"

namespace qlab::harness {

using json = nlohmann::ordered_json;
using ring::MultiPoly;
using ring::RatFun;
using ring::Series;
using ring::Var;

namespace {

json provenance(const std::string& command, const std::string& target) {
  json h;
  h["tool"] = "qlab";
  h["command"] = command;
  h["target"] = target;
  return h;
}

std::string emit_series(const Series<RatFun>& s, json header, Format f) {
  std::string v(ring::name(s.var()));
  header["var"] = v;
  header["order"] = s.order();
  if (f == Format::json) {
    json coeffs = json::array();
    for (std::size_t k = 0; k < s.order(); ++k) coeffs.push_back(s[k].to_string());
    return json{{"header", header}, {"coefficients", coeffs}}.dump(2) + "\n";
  }
  std::string out = "# " + header.dump() + "\n";
  if (f == Format::csv) {
    out += "power,coefficient\n";
    for (std::size_t k = 0; k < s.order(); ++k) out += std::to_string(k) + ",\"" + s[k].to_string() + "\"\n";
    return out;
  }
  for (std::size_t k = 0; k < s.order(); ++k)
    if (!s[k].is_zero()) out += v + "^" + std::to_string(k) + ": " + s[k].to_string() + "\n";
  return out;
}

std::string emit_poly(const MultiPoly& p, json header, Format f) {
  if (f == Format::json) {
    json terms = json::array();
    for (const auto& t : p.terms()) terms.push_back({{"monomial", t.mono.to_string()}, {"coefficient", t.coeff.get_str()}});
    return json{{"header", header}, {"polynomial", p.to_string()}, {"terms", terms}}.dump(2) + "\n";
  }
  std::string out = "# " + header.dump() + "\n";
  if (f == Format::csv) {
    out += "monomial,coefficient\n";
    for (const auto& t : p.terms()) out += t.mono.to_string() + "," + t.coeff.get_str() + "\n";
    return out;
  }
  auto byq = shapes::by_q_degree(p, p.degree(Var::q) + 1);
  for (std::size_t a = 0; a < byq.size(); ++a)
    if (!byq[a].is_zero()) out += "q^" + std::to_string(a) + ": " + byq[a].to_string() + "\n";
  return out;
}

lommel::RISpec<RatFun> family_spec(const std::string& family) {
  if (family == "hahn-exton") return lommel::hahn_exton_spec();
  if (family == "catalan") return cfrac::stieltjes_spec<RatFun>([](unsigned) { return RatFun(1); });
  if (family == "motzkin")
    return {[](unsigned) { return RatFun(1); }, [](unsigned) { return RatFun(0); },
            [](unsigned n) { return RatFun(n == 0 ? 0 : 1); }};
  if (family == "norlund")
    return cfrac::norlund_spec(RatFun::var(Var::a), RatFun::var(Var::b), RatFun::var(Var::c), RatFun::var(Var::q));
  throw UsageError("unknown moments family '" + family + "' (hahn-exton, catalan, motzkin, norlund)");
}

}  // namespace

std::string expand(const ExpandRequest& req) {
  json h = provenance("expand", req.target);
  if (req.target == "hahn-ratio" || req.target == "jackson-ratio") {
    std::size_t order = req.order.value_or(21);
    auto s = req.target == "hahn-ratio" ? qseries::hahn_exton_ratio(order) : qseries::jackson_ratio(order);
    return emit_series(s, h, req.format);
  }
  if (req.target == "lommel-ratio") {
    if (!req.m) throw UsageError("lommel-ratio needs --m");
    std::size_t order = req.order.value_or(21);
    h["m"] = *req.m;
    return emit_series(lommel::lommel_ratio_series(*req.m, order), h, req.format);
  }
  if (req.target == "moments") {
    std::size_t order = req.order.value_or(req.family == "norlund" ? 4 : 10);
    h["family"] = req.family;
    auto spec = family_spec(req.family);
    if (req.m) {
      h["m"] = *req.m;
      return emit_series(cfrac::moments(spec, *req.m, order, Var::x), h, req.format);
    }
    return emit_series(cfrac::moments(spec, order, Var::x), h, req.format);
  }
  if (req.target == "gen-poly") {
    h["source"] = req.source;
    h["max_area"] = req.max_area;
    if (req.source == "shapes") return emit_poly(shapes::gen_poly_shapes(req.max_area), h, req.format);
    if (req.source == "paths") {
      if (!req.m) throw UsageError("gen-poly --source paths needs --m");
      h["m"] = *req.m;
      return emit_poly(shapes::gen_poly_paths(static_cast<int>(*req.m), req.max_area), h, req.format);
    }
    throw UsageError("unknown gen-poly source '" + req.source + "' (shapes, paths)");
  }
  throw UsageError("unknown expand target '" + req.target +
                   "' (hahn-ratio, jackson-ratio, lommel-ratio, moments, gen-poly)");
}

std::string enumerate(const EnumerateRequest& req) {
  json h = provenance("enumerate", req.what);
  if (req.what == "shapes") {
    h["max_area"] = req.max_area;
    auto all = shapes::enumerate_shapes(req.max_area);
    if (req.format == Format::json) {
      json out = json::array();
      for (const auto& s : all) {
        json cells = json::array();
        for (const auto& [r, c] : s.cells()) cells.push_back({r, c});
        out.push_back({{"shape", s.to_string()},
                       {"cells", cells},
                       {"col", s.col()},
                       {"row", s.row()},
                       {"area", s.area()},
                       {"maxdiag", s.maxdiag()}});
      }
      return json{{"header", h}, {"shapes", out}}.dump(2) + "\n";
    }
    std::string out = "# " + h.dump() + "\n";
    if (req.format == Format::csv) out += "shape,col,row,area,maxdiag\n";
    for (const auto& s : all) {
      std::string stats = std::to_string(s.col()) + "," + std::to_string(s.row()) + "," + std::to_string(s.area()) +
                          "," + std::to_string(s.maxdiag());
      if (req.format == Format::csv) out += "\"" + s.to_string() + "\"," + stats + "\n";
      else out += s.to_string() + "  col,row,area,maxdiag=" + stats + "\n";
    }
    return out;
  }
  if (req.what == "paths") {
    h["length"] = req.length;
    h["max_height"] = req.max_height;
    auto all = shapes::enumerate_motzkin2(req.length, req.max_height);
    auto gens = shapes::shape_generators();
    if (req.format == Format::json) {
      json out = json::array();
      for (const auto& p : all)
        out.push_back({{"steps", p.to_string()},
                       {"height", p.height()},
                       {"weight", shapes::word_to_string(shapes::path_weight_word(p))},
                       {"weight_monomial", shapes::path_weight(p, gens).to_string()}});
      return json{{"header", h}, {"paths", out}}.dump(2) + "\n";
    }
    std::string out = "# " + h.dump() + "\n";
    if (req.format == Format::csv) out += "steps,height,weight,weight_monomial\n";
    for (const auto& p : all) {
      if (req.format == Format::csv)
        out += p.to_string() + "," + std::to_string(p.height()) + "," + shapes::word_to_string(shapes::path_weight_word(p)) +
               "," + shapes::path_weight(p, gens).to_string() + "\n";
      else
        out += (p.steps.empty() ? std::string("(empty)") : p.to_string()) + "  height " + std::to_string(p.height()) +
               "  " + shapes::word_to_string(shapes::path_weight_word(p)) + "\n";
    }
    return out;
  }
  throw UsageError("unknown enumerate target '" + req.what + "' (shapes, paths)");
}

}  // namespace qlab::harness
