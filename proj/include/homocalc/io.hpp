// Copyright 2026 The homocalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMOCALC_IO_HPP_
#define HOMOCALC_IO_HPP_

// JSON encodings of sets, maps, families, lattice elements, saddle families
// and check reports. Parse errors carry the JSON pointer of the offending
// node.

#include <string>
#include <vector>

#include "json.hpp"

#include "homocalc/fcalc.hpp"
#include "homocalc/verify.hpp"

namespace homocalc::io {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorKind::InvalidInput, "parse", (path.empty() ? "/" : path) + ": " + reason);
}

inline const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

inline double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

inline Vector vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], path + "/" + std::to_string(i));
  return v;
}

inline std::vector<double> doubles(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "/" + std::to_string(i)));
  return out;
}

// Rethrows construction errors with the document path attached.
template <class F>
auto at_path(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput && e.operation() == "parse") throw;
    fail(path, e.what());
  }
}

}  // namespace detail

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i) + 0.0);
  return a;
}

inline json to_json(const ConvexCompactSet& s) {
  if (s.is_polytope()) {
    json vs = json::array();
    for (const auto& v : s.as_polytope().vertices) vs.push_back(vector_json(v));
    return {{"polytope", {{"vertices", vs}}}};
  }
  return {{"ball", {{"center", vector_json(s.as_ball().center)}, {"radius", s.as_ball().radius}}}};
}

inline ConvexCompactSet set_from_json(const json& j, const std::string& path = "") {
  if (!j.is_object()) detail::fail(path, "expected {\"polytope\": ...} or {\"ball\": ...}");
  if (j.contains("polytope")) {
    const std::string p = path + "/polytope/vertices";
    const json& vs = detail::member(j["polytope"], "vertices", path + "/polytope");
    if (!vs.is_array() || vs.empty()) detail::fail(p, "expected a nonempty array of points");
    std::vector<Vector> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(detail::vector(vs[i], p + "/" + std::to_string(i)));
    return detail::at_path(p, [&] { return ConvexCompactSet::polytope(std::move(vertices)); });
  }
  if (j.contains("ball")) {
    const json& b = j["ball"];
    Vector center = detail::vector(detail::member(b, "center", path + "/ball"), path + "/ball/center");
    const double radius = detail::number(detail::member(b, "radius", path + "/ball"), path + "/ball/radius");
    return detail::at_path(path + "/ball", [&] { return ConvexCompactSet::ball(std::move(center), radius); });
  }
  detail::fail(path, "expected key 'polytope' or 'ball'");
}

inline json to_json(const SublinearMap& m) {
  return {{"sublinear", {{"subdiff", to_json(m.subdiff)}, {"label", m.label}}}};
}

inline json to_json(const SuperlinearMap& m) {
  return {{"superlinear", {{"superdiff", to_json(m.superdiff)}, {"label", m.label}}}};
}

inline std::string label_of(const json& body, const std::string& path) {
  if (!body.contains("label")) return "";
  if (!body["label"].is_string()) detail::fail(path + "/label", "expected a string");
  return body["label"].get<std::string>();
}

inline SublinearMap sublinear_from_json(const json& j, const std::string& path = "") {
  const json& body = detail::member(j, "sublinear", path);
  return {set_from_json(detail::member(body, "subdiff", path + "/sublinear"), path + "/sublinear/subdiff"),
          label_of(body, path + "/sublinear")};
}

inline SuperlinearMap superlinear_from_json(const json& j, const std::string& path = "") {
  const json& body = detail::member(j, "superlinear", path);
  return {set_from_json(detail::member(body, "superdiff", path + "/superlinear"), path + "/superlinear/superdiff"),
          label_of(body, path + "/superlinear")};
}

/// A finite family document. Returns both lists; which ones may be nonempty
/// depends on `kind`.
struct FamilyDocument {
  Semicontinuity kind = Semicontinuity::Upper;
  std::string name;
  std::vector<SublinearMap> sublinear;
  std::vector<SuperlinearMap> superlinear;
  std::string builtin;  // set when the document names a built-in
  Eigen::Index dim = 0;
};

inline FamilyDocument family_document_from_json(const json& j, const std::string& path = "") {
  const json& body = detail::member(j, "family", path);
  const std::string p = path + "/family";
  FamilyDocument doc;
  const json& kind = detail::member(body, "kind", p);
  if (!kind.is_string()) detail::fail(p + "/kind", "expected \"usc\", \"lsc\" or \"cts\"");
  const auto k = kind.get<std::string>();
  if (k == "usc") doc.kind = Semicontinuity::Upper;
  else if (k == "lsc") doc.kind = Semicontinuity::Lower;
  else if (k == "cts") doc.kind = Semicontinuity::Continuous;
  else detail::fail(p + "/kind", "expected \"usc\", \"lsc\" or \"cts\", got \"" + k + "\"");
  doc.name = body.contains("name") && body["name"].is_string() ? body["name"].get<std::string>() : "family";
  if (body.contains("dim")) doc.dim = static_cast<Eigen::Index>(detail::number(body["dim"], p + "/dim"));

  const json& maps = detail::member(body, "maps", p);
  if (maps.is_object()) {
    const json& b = detail::member(maps, "builtin", p + "/maps");
    if (!b.is_string()) detail::fail(p + "/maps/builtin", "expected a string");
    doc.builtin = b.get<std::string>();
    return doc;
  }
  if (!maps.is_array() || maps.empty()) detail::fail(p + "/maps", "expected a nonempty array or {\"builtin\": name}");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string mp = p + "/maps/" + std::to_string(i);
    if (maps[i].is_object() && maps[i].contains("sublinear")) {
      if (doc.kind == Semicontinuity::Lower) detail::fail(mp, "sublinear map in an lsc family");
      doc.sublinear.push_back(sublinear_from_json(maps[i], mp));
    } else if (maps[i].is_object() && maps[i].contains("superlinear")) {
      if (doc.kind == Semicontinuity::Upper) detail::fail(mp, "superlinear map in a usc family");
      doc.superlinear.push_back(superlinear_from_json(maps[i], mp));
    } else {
      detail::fail(mp, "expected {\"sublinear\": ...} or {\"superlinear\": ...}");
    }
  }
  if (doc.kind == Semicontinuity::Continuous && (doc.sublinear.empty() || doc.superlinear.empty())) {
    detail::fail(p + "/maps", "a cts family needs both sublinear and superlinear maps");
  }
  Eigen::Index n = doc.sublinear.empty() ? doc.superlinear.front().dim() : doc.sublinear.front().dim();
  for (std::size_t i = 0; i < doc.sublinear.size(); ++i) {
    if (doc.sublinear[i].dim() != n) detail::fail(p + "/maps", "maps of different dimensions");
  }
  for (std::size_t i = 0; i < doc.superlinear.size(); ++i) {
    if (doc.superlinear[i].dim() != n) detail::fail(p + "/maps", "maps of different dimensions");
  }
  if (doc.dim != 0 && doc.dim != n) detail::fail(p + "/dim", "does not match the maps");
  doc.dim = n;
  return doc;
}

inline PHFunction to_function(const FamilyDocument& doc) {
  if (!doc.builtin.empty()) {
    PHFunction h = builtin(doc.builtin, doc.dim);
    return h;
  }
  switch (doc.kind) {
    case Semicontinuity::Upper:
      return PHFunction::upper(doc.name, doc.dim, SublinearFamily::finite(doc.sublinear));
    case Semicontinuity::Lower:
      return PHFunction::lower(doc.name, doc.dim, SuperlinearFamily::finite(doc.superlinear));
    case Semicontinuity::Continuous:
      break;
  }
  return PHFunction::continuous(doc.name, doc.dim, SublinearFamily::finite(doc.sublinear),
                                SuperlinearFamily::finite(doc.superlinear));
}

inline json to_json(const LatticeElement& f) {
  if (const auto* r = std::get_if<RmElement>(&f)) return {{"rm", vector_json(r->coords)}};
  const auto& s = std::get<StepFunction>(f);
  json vals = json::array();
  for (double v : s.values()) vals.push_back(v + 0.0);
  return {{"step", {{"breakpoints", s.breakpoints()}, {"values", vals}}}};
}

inline LatticeElement element_from_json(const json& j, const std::string& path = "") {
  if (j.is_object() && j.contains("rm")) return RmElement{detail::vector(j["rm"], path + "/rm")};
  if (j.is_object() && j.contains("step")) {
    const std::string p = path + "/step";
    auto bps = detail::doubles(detail::member(j["step"], "breakpoints", p), p + "/breakpoints");
    auto vals = detail::doubles(detail::member(j["step"], "values", p), p + "/values");
    return detail::at_path(p, [&] { return LatticeElement{StepFunction(std::move(bps), std::move(vals))}; });
  }
  detail::fail(path, "expected {\"rm\": [...]} or {\"step\": {...}}");
}

inline json to_json(const FcResult& r) {
  return {{"element", to_json(r.element)},
          {"diagnostics", {{"family_terms_used", r.family_terms_used}, {"max_residual", r.max_residual}}}};
}

inline json to_json(const SaddleFamily& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.phi_count; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.psi_count; ++j) row.push_back(vector_json(s.at(i, j)));
    rows.push_back(row);
  }
  return {{"saddle",
           {{"phi_count", s.phi_count},
            {"psi_count", s.psi_count},
            {"coefficients", rows},
            {"phi_labels", s.phi_labels},
            {"psi_labels", s.psi_labels}}}};
}

inline SaddleFamily saddle_from_json(const json& j, const std::string& path = "") {
  const json& body = detail::member(j, "saddle", path);
  const std::string p = path + "/saddle";
  SaddleFamily s;
  const json& rows = detail::member(body, "coefficients", p);
  if (!rows.is_array() || rows.empty()) detail::fail(p + "/coefficients", "expected a nonempty array of rows");
  s.phi_count = rows.size();
  s.psi_count = rows[0].is_array() ? rows[0].size() : 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = p + "/coefficients/" + std::to_string(i);
    if (!rows[i].is_array() || rows[i].size() != s.psi_count || s.psi_count == 0) {
      detail::fail(rp, "rows must be nonempty arrays of equal length");
    }
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      s.coefficients.push_back(detail::vector(rows[i][k], rp + "/" + std::to_string(k)));
    }
  }
  if (body.contains("phi_count") && detail::number(body["phi_count"], p + "/phi_count") != static_cast<double>(s.phi_count)) {
    detail::fail(p + "/phi_count", "does not match the coefficient rows");
  }
  if (body.contains("psi_count") && detail::number(body["psi_count"], p + "/psi_count") != static_cast<double>(s.psi_count)) {
    detail::fail(p + "/psi_count", "does not match the coefficient columns");
  }
  auto labels = [&](const char* key, std::size_t count) {
    std::vector<std::string> out;
    if (body.contains(key) && body[key].is_array()) {
      for (const auto& l : body[key]) out.push_back(l.is_string() ? l.get<std::string>() : "");
    }
    out.resize(count);
    return out;
  };
  s.phi_labels = labels("phi_labels", s.phi_count);
  s.psi_labels = labels("psi_labels", s.psi_count);
  detail::at_path(p, [&] {
    s.validate();
    return 0;
  });
  return s;
}

inline json to_json(const CheckReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"input", f.input}, {"observed", f.observed}, {"expected", f.expected},
                        {"tolerance", f.tolerance}});
  }
  return {{"name", r.name}, {"seed", r.seed}, {"cases", r.cases}, {"failures", failures}, {"passed", r.passed()}};
}

}  // namespace homocalc::io

#endif  // HOMOCALC_IO_HPP_
