/*
 Copyright 2026 The zoned Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "zoned/io.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "zoned/error.hpp"

namespace zoned {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(Errc::parse_error, "field " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) field_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) field_error(path + "/" + key, "missing");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

double number_or(const Json& j, const char* key, double fallback, const std::string& path) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : number(*it, path + "/" + key);
}

std::size_t count(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::size_t>();
  field_error(path, "expected a nonnegative integer");
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array");
  return j;
}

ExtScalar scalar(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return ExtScalar::pos_inf();
    if (s == "-inf") return ExtScalar::neg_inf();
    field_error(path, "unknown scalar string '" + s + "'");
  }
  if (j.is_number_integer()) return ExtScalar::integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      field_error(path, "integer out of range");
    return ExtScalar::integer(static_cast<std::int64_t>(v));
  }
  if (j.is_number_float()) return ExtScalar::real(j.get<double>());
  field_error(path, "expected a number, \"inf\" or \"-inf\"");
}

Json scalar_json(const ExtScalar& v) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  if (v.is_integer()) return v.as_integer();
  return v.as_double();
}

std::array<double, 2> pair(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) field_error(path, "expected [x, y]");
  return {number(j[0], path + "/0"), number(j[1], path + "/1")};
}

Norm norm_from(const Json& j, const std::string& path) {
  if (!j.is_string()) field_error(path, "expected \"l1\", \"l2\" or \"linf\"");
  const auto s = j.get<std::string>();
  if (s == "l1") return Norm::l1;
  if (s == "l2") return Norm::l2;
  if (s == "linf") return Norm::linf;
  field_error(path, "unknown norm '" + s + "'");
}

Json grid_to_json(const Grid2dSpec& g) {
  return {{"kind", "grid-2d"}, {"xmin", g.xmin}, {"xmax", g.xmax}, {"ymin", g.ymin},
          {"ymax", g.ymax},    {"step", g.step}, {"norm", to_string(g.norm)}};
}

Grid2dSpec grid_from_json(const Json& j, const std::string& path) {
  Grid2dSpec g;
  g.xmin = number(member(j, "xmin", path), path + "/xmin");
  g.xmax = number(member(j, "xmax", path), path + "/xmax");
  g.ymin = number(member(j, "ymin", path), path + "/ymin");
  g.ymax = number(member(j, "ymax", path), path + "/ymax");
  g.step = number_or(j, "step", 1.0, path);
  g.norm = j.contains("norm") ? norm_from(j["norm"], path + "/norm") : Norm::l2;
  return g;
}

PointSet index_set(const Json& j, std::size_t universe, const std::string& path) {
  array(j, path);
  PointSet s(universe);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::size_t x = count(j[i], path + "/" + std::to_string(i));
    if (x >= universe)
      field_error(path + "/" + std::to_string(i),
                  "point " + std::to_string(x) + " outside space of size " + std::to_string(universe));
    s.insert(x);
  }
  return s;
}

PointSet locus_set(const Json& j, const SpaceSpec& spec, std::size_t universe,
                   const std::string& path) {
  PointSet s(universe);
  if (const auto it = j.find("points"); it != j.end()) {
    const std::string ppath = path + "/points";
    array(*it, ppath);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string ip = ppath + "/" + std::to_string(i);
      const Json& p = (*it)[i];
      if (const auto* g = std::get_if<Grid2dSpec>(&spec.kind)) {
        const auto xy = pair(p, ip);
        const auto cell = g->cell_at(xy[0], xy[1]);
        if (!cell) field_error(ip, "point lies outside the grid");
        s.insert(*cell);
      } else if (const auto* line = std::get_if<LinePointsSpec>(&spec.kind)) {
        const double x = number(p, ip);
        bool hit = false;
        for (std::size_t c = 0; c < line->coords.size(); ++c)
          if (std::fabs(line->origin + line->coords[c] * line->step - x) <= 1e-9 * (1 + std::fabs(x))) {
            s.insert(c);
            hit = true;
          }
        if (!hit) field_error(ip, "no line point at this coordinate");
      } else if (const auto* iso = std::get_if<IsolatedUnionSpec>(&spec.kind)) {
        const auto xy = pair(p, ip);
        const auto pts = isolated_union_points(*iso);
        const auto found = std::find(pts.begin(), pts.end(), xy);
        if (found == pts.end()) field_error(ip, "no point at this coordinate");
        s.insert(static_cast<std::size_t>(found - pts.begin()));
      } else {
        field_error(ip, "coordinate loci need a geometric space");
      }
    }
  }
  if (const auto it = j.find("spheres"); it != j.end()) {
    const auto* g = std::get_if<Grid2dSpec>(&spec.kind);
    if (!g) field_error(path + "/spheres", "sphere loci need a grid-2d space");
    array(*it, path + "/spheres");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string ip = path + "/spheres/" + std::to_string(i);
      const auto center = pair(member((*it)[i], "center", ip), ip + "/center");
      const double radius = number(member((*it)[i], "radius", ip), ip + "/radius");
      s |= cells_near_sphere(*g, center, radius);
    }
  }
  return s;
}

RegionTuple tuple_from_entries(const Json& entries, const std::string& path,
                               const std::function<PointSet(const Json&, const std::string&)>& read) {
  array(entries, path);
  if (entries.size() < 2) field_error(path, "need at least 2 components");
  std::vector<PointSet> parts;
  for (std::size_t k = 0; k < entries.size(); ++k)
    parts.push_back(read(entries[k], path + "/" + std::to_string(k)));
  return RegionTuple(std::move(parts));
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::ascending ? "ascending" : "descending"; }

std::string_view to_string(Order2Variant v) {
  switch (v) {
    case Order2Variant::R: return "R";
    case Order2Variant::S: return "S";
    case Order2Variant::Z: return "Z";
    case Order2Variant::W: return "W";
  }
  return "?";
}

std::string_view to_string(ZoneKind k) { return k == ZoneKind::zone ? "zone" : "double-zone"; }

std::string_view to_string(Extremal e) {
  switch (e) {
    case Extremal::minimal: return "minimal";
    case Extremal::maximal: return "maximal";
    case Extremal::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Norm n) {
  switch (n) {
    case Norm::l1: return "l1";
    case Norm::l2: return "l2";
    case Norm::linf: return "linf";
  }
  return "?";
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

Json space_spec_to_json(const SpaceSpec& spec) {
  Json j;
  if (const auto* m = std::get_if<FiniteMatrixSpec>(&spec.kind)) {
    Json rows = Json::array();
    for (const auto& row : m->matrix) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(scalar_json(v));
      rows.push_back(std::move(r));
    }
    j = {{"kind", "finite-matrix"}, {"matrix", std::move(rows)}};
  } else if (const auto* l = std::get_if<LinePointsSpec>(&spec.kind)) {
    j = {{"kind", "line-points"}, {"coords", l->coords}, {"origin", l->origin}, {"step", l->step}};
  } else if (const auto* g = std::get_if<Grid2dSpec>(&spec.kind)) {
    j = grid_to_json(*g);
  } else if (const auto* d = std::get_if<DigraphSpec>(&spec.kind)) {
    Json arcs = Json::array();
    for (const auto& a : d->arcs) arcs.push_back({a.from, a.to, a.length});
    j = {{"kind", "digraph"}, {"vertices", d->vertices}, {"arcs", std::move(arcs)}};
  } else if (const auto* iso = std::get_if<IsolatedUnionSpec>(&spec.kind)) {
    j = {{"kind", "isolated-union"}, {"components", iso->components}};
  } else if (const auto* tv = std::get_if<TwoValueSpec>(&spec.kind)) {
    j = {{"kind", "two-value"}, {"points", tv->points}, {"a", tv->a}, {"b", tv->b}};
  }
  if (spec.epsilon != 0.0) j["epsilon"] = spec.epsilon;
  return j;
}

SpaceSpec space_spec_from_json(const Json& j) {
  const std::string root;
  const Json& kind = member(j, "kind", root);
  if (!kind.is_string()) field_error("/kind", "expected a string");
  const auto name = kind.get<std::string>();
  SpaceSpec spec;
  if (name == "finite-matrix") {
    const Json& rows = array(member(j, "matrix", root), "/matrix");
    FiniteMatrixSpec m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string rp = "/matrix/" + std::to_string(i);
      array(rows[i], rp);
      std::vector<ExtScalar> row;
      for (std::size_t c = 0; c < rows[i].size(); ++c)
        row.push_back(scalar(rows[i][c], rp + "/" + std::to_string(c)));
      m.matrix.push_back(std::move(row));
    }
    spec.kind = std::move(m);
  } else if (name == "line-points") {
    const Json& coords = array(member(j, "coords", root), "/coords");
    LinePointsSpec l;
    for (std::size_t i = 0; i < coords.size(); ++i)
      l.coords.push_back(number(coords[i], "/coords/" + std::to_string(i)));
    l.origin = number_or(j, "origin", 0.0, root);
    l.step = number_or(j, "step", 1.0, root);
    spec.kind = std::move(l);
  } else if (name == "grid-2d") {
    spec.kind = grid_from_json(j, root);
  } else if (name == "digraph") {
    DigraphSpec d;
    d.vertices = count(member(j, "vertices", root), "/vertices");
    const Json& arcs = array(member(j, "arcs", root), "/arcs");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string ap = "/arcs/" + std::to_string(i);
      if (!arcs[i].is_array() || arcs[i].size() < 2 || arcs[i].size() > 3)
        field_error(ap, "expected [from, to] or [from, to, length]");
      Arc a{count(arcs[i][0], ap + "/0"), count(arcs[i][1], ap + "/1"), 1.0};
      if (arcs[i].size() == 3) a.length = number(arcs[i][2], ap + "/2");
      d.arcs.push_back(a);
    }
    spec.kind = std::move(d);
  } else if (name == "isolated-union") {
    const Json& comps = array(member(j, "components", root), "/components");
    IsolatedUnionSpec iso;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const std::string cp = "/components/" + std::to_string(c);
      array(comps[c], cp);
      std::vector<std::array<double, 2>> pts;
      for (std::size_t i = 0; i < comps[c].size(); ++i)
        pts.push_back(pair(comps[c][i], cp + "/" + std::to_string(i)));
      iso.components.push_back(std::move(pts));
    }
    spec.kind = std::move(iso);
  } else if (name == "two-value") {
    TwoValueSpec tv;
    tv.points = count(member(j, "points", root), "/points");
    tv.a = number(member(j, "a", root), "/a");
    tv.b = number(member(j, "b", root), "/b");
    spec.kind = tv;
  } else {
    field_error("/kind", "unknown space kind '" + name + "'");
  }
  spec.epsilon = number_or(j, "epsilon", 0.0, root);
  return spec;
}

Json tuple_to_json(const RegionTuple& t) {
  Json out = Json::array();
  for (const auto& part : t) out.push_back(part.members());
  return out;
}

RegionTuple sites_from_json(const Json& j, const SpaceSpec& spec, std::size_t universe) {
  const bool wrapped = j.is_object();
  const Json& entries = wrapped ? member(j, "sites", "") : j;
  return tuple_from_entries(entries, wrapped ? "/sites" : "",
                            [&](const Json& e, const std::string& path) {
                              if (e.is_object()) return locus_set(e, spec, universe, path);
                              return index_set(e, universe, path);
                            });
}

RegionTuple regions_from_json(const Json& j, std::size_t universe) {
  const bool wrapped = j.is_object();
  const Json& entries = wrapped ? member(j, "regions", "") : j;
  return tuple_from_entries(entries, wrapped ? "/regions" : "",
                            [&](const Json& e, const std::string& path) {
                              return index_set(e, universe, path);
                            });
}

Json result_to_json(const ResultDocument& doc) {
  Json j = {{"format", "zoned-result"},
            {"version", 1},
            {"mode", doc.mode},
            {"kind", to_string(doc.kind)},
            {"extremal", to_string(doc.extremal)},
            {"steps", doc.steps},
            {"bound", doc.bound},
            {"size", doc.size},
            {"sites", tuple_to_json(doc.sites)},
            {"regions", tuple_to_json(doc.regions)}};
  if (doc.direction) j["direction"] = to_string(*doc.direction);
  if (doc.variant) j["variant"] = to_string(*doc.variant);
  if (doc.grid) j["grid"] = grid_to_json(*doc.grid);
  if (doc.game)
    j["game"] = {{"stable", doc.game->stable},
                 {"moves", doc.game->moves},
                 {"passes", doc.game->passes},
                 {"policy", doc.game->policy.selection == PointSelection::sweep ? "sweep" : "random"},
                 {"tie_break",
                  doc.game->policy.tie_break == TieBreak::lowest_index ? "lowest" : "random"},
                 {"seed", doc.game->policy.seed}};
  return j;
}

ResultDocument result_from_json(const Json& j) {
  ResultDocument doc;
  const std::string root;
  doc.size = count(member(j, "size", root), "/size");
  doc.regions = regions_from_json(member(j, "regions", root), doc.size);
  doc.sites = regions_from_json(member(j, "sites", root), doc.size);
  if (const auto it = j.find("mode"); it != j.end() && it->is_string()) doc.mode = it->get<std::string>();
  if (const auto it = j.find("kind"); it != j.end())
    doc.kind = it->is_string() && it->get<std::string>() == "double-zone" ? ZoneKind::double_zone
                                                                          : ZoneKind::zone;
  if (const auto it = j.find("steps"); it != j.end()) doc.steps = count(*it, "/steps");
  if (const auto it = j.find("bound"); it != j.end()) doc.bound = count(*it, "/bound");
  if (const auto it = j.find("grid"); it != j.end()) {
    doc.grid = grid_from_json(*it, "/grid");
    if (doc.grid->size() != doc.size) field_error("/grid", "grid does not match the result size");
  }
  return doc;
}

Json verify_to_json(const VerifyReport& report, ZoneKind kind) {
  Json diffs = Json::array();
  for (const auto& d : report.diffs) diffs.push_back(d.members());
  return {{"kind", to_string(kind)}, {"passed", report.passed}, {"diffs", std::move(diffs)}};
}

Json uniqueness_to_json(const UniquenessReport& r, Effort effort) {
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  return {{"effort", effort == Effort::bracketing_only ? "bracketing-only" : "with-brute-force"},
          {"cond_a", opt(r.cond_a)},
          {"cond_b", opt(r.cond_b)},
          {"cond_c", opt(r.cond_c)},
          {"cond_d", opt(r.cond_d)},
          {"cond_e", opt(r.cond_e)},
          {"cond_f", opt(r.cond_f)},
          {"zone_count", opt(r.zone_count)},
          {"double_zone_count", opt(r.double_zone_count)},
          {"consistent", r.consistent()},
          {"m", tuple_to_json(r.m)},
          {"M", tuple_to_json(r.M)}};
}

}  // namespace zoned
