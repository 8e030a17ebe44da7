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

#include "zoned/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "zoned/engine.hpp"
#include "zoned/error.hpp"

namespace zoned {

namespace {

constexpr double kGridSlack = 1e-9;
constexpr std::size_t kMaxGridPoints = std::size_t{1} << 22;

[[noreturn]] void bad_spec(const std::string& what) { throw Error(Errc::invalid_space, what); }

bool integral(double v) { return std::isfinite(v) && std::trunc(v) == v && std::fabs(v) < 1e15; }

std::size_t cell_count(double lo, double hi, double step, const char* axis) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) bad_spec(std::string(axis) + " extent must be finite");
  if (hi < lo) bad_spec(std::string(axis) + " extent is reversed");
  const double spans = (hi - lo) / step;
  const double rounded = std::round(spans);
  if (std::fabs(spans - rounded) > 1e-6)
    bad_spec(std::string(axis) + " extent is not a whole number of steps");
  return static_cast<std::size_t>(rounded) + 1;
}

void require_step(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) bad_spec("grid step must be positive and finite");
}

MSpace build_matrix(const FiniteMatrixSpec& spec) {
  const bool exact = std::all_of(spec.matrix.begin(), spec.matrix.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const ExtScalar& v) {
      return !v.is_finite() || v.is_integer();
    });
  });
  if (spec.matrix.empty()) bad_spec("distance matrix is empty");
  if (exact) return MSpace::from_matrix(spec.matrix, ScalarKind::exact_integer);
  auto rows = spec.matrix;
  for (auto& row : rows)
    for (auto& v : row)
      if (v.is_integer()) v = ExtScalar::real(static_cast<double>(v.as_integer()));
  return MSpace::from_matrix(rows, ScalarKind::binary_float);
}

MSpace build_line(const LinePointsSpec& spec) {
  if (spec.coords.empty()) bad_spec("line-points needs at least one coordinate");
  require_step(spec.step);
  for (double c : spec.coords)
    if (!std::isfinite(c)) bad_spec("line coordinates must be finite");
  if (std::all_of(spec.coords.begin(), spec.coords.end(), integral)) {
    std::vector<std::int64_t> xs(spec.coords.begin(), spec.coords.end());
    return MSpace::from_function(xs.size(), ScalarKind::exact_integer,
                                 [xs](std::size_t i, std::size_t j) {
                                   const std::int64_t d = xs[i] - xs[j];
                                   return ExtScalar::integer(d < 0 ? -d : d);
                                 });
  }
  std::vector<double> xs = spec.coords;
  return MSpace::from_function(xs.size(), ScalarKind::binary_float,
                               [xs](std::size_t i, std::size_t j) {
                                 return ExtScalar::real(std::fabs(xs[i] - xs[j]));
                               });
}

MSpace build_grid(const Grid2dSpec& spec) {
  require_step(spec.step);
  const std::size_t cols = cell_count(spec.xmin, spec.xmax, spec.step, "x");
  const std::size_t rows = cell_count(spec.ymin, spec.ymax, spec.step, "y");
  if (cols * rows > kMaxGridPoints) bad_spec("grid has too many cells");
  const Norm norm = spec.norm;
  return MSpace::from_function(
      cols * rows, ScalarKind::exact_integer, [cols, norm](std::size_t i, std::size_t j) {
        const auto dc = static_cast<std::int64_t>(i % cols) - static_cast<std::int64_t>(j % cols);
        const auto dr = static_cast<std::int64_t>(i / cols) - static_cast<std::int64_t>(j / cols);
        const std::int64_t ac = dc < 0 ? -dc : dc;
        const std::int64_t ar = dr < 0 ? -dr : dr;
        switch (norm) {
          case Norm::l1: return ExtScalar::integer(ac + ar);
          case Norm::linf: return ExtScalar::integer(std::max(ac, ar));
          case Norm::l2: break;
        }
        return ExtScalar::integer(dc * dc + dr * dr);  // squared: same order as the norm
      });
}

MSpace build_digraph(const DigraphSpec& spec) {
  const std::size_t n = spec.vertices;
  if (n == 0) bad_spec("digraph needs at least one vertex");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(n * n, inf);
  for (std::size_t v = 0; v < n; ++v) d[v * n + v] = 0.0;
  bool exact = true;
  for (const Arc& a : spec.arcs) {
    if (a.from >= n || a.to >= n) bad_spec("arc endpoint out of range");
    if (!(a.length >= 0.0) || !std::isfinite(a.length))
      bad_spec("arc lengths must be finite and nonnegative");
    exact = exact && integral(a.length);
    d[a.from * n + a.to] = std::min(d[a.from * n + a.to], a.length);
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + m] + d[m * n + j]);
  std::vector<std::vector<ExtScalar>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d[i * n + j];
      rows[i].push_back(std::isinf(v) ? ExtScalar::pos_inf()
                        : exact      ? ExtScalar::integer(static_cast<std::int64_t>(v))
                                     : ExtScalar::real(v));
    }
  return MSpace::from_matrix(rows, exact ? ScalarKind::exact_integer : ScalarKind::binary_float);
}

MSpace build_isolated(const IsolatedUnionSpec& spec) {
  if (spec.components.empty()) bad_spec("isolated-union needs at least one component");
  const auto points = isolated_union_points(spec);
  const std::size_t n = points.size();
  std::map<std::array<double, 2>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(points[i], i);

  std::vector<PointSet> member_of(n, PointSet(spec.components.size()));
  for (std::size_t c = 0; c < spec.components.size(); ++c)
    for (const auto& p : spec.components[c]) member_of[index.at(p)].insert(c);

  const bool exact = std::all_of(points.begin(), points.end(), [](const auto& p) {
    return integral(p[0]) && integral(p[1]) && std::fabs(p[0]) < 1e9 && std::fabs(p[1]) < 1e9;
  });
  std::vector<std::vector<ExtScalar>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((member_of[i] & member_of[j]).empty()) {
        rows[i].push_back(ExtScalar::pos_inf());
        continue;
      }
      const double dx = points[i][0] - points[j][0];
      const double dy = points[i][1] - points[j][1];
      rows[i].push_back(exact ? ExtScalar::integer(static_cast<std::int64_t>(dx * dx + dy * dy))
                              : ExtScalar::real(dx * dx + dy * dy));
    }
  return MSpace::from_matrix(rows, exact ? ScalarKind::exact_integer : ScalarKind::binary_float);
}

MSpace build_two_value(const TwoValueSpec& spec) {
  if (spec.points == 0) bad_spec("two-value space needs at least one point");
  if (!std::isfinite(spec.a) || !std::isfinite(spec.b)) bad_spec("two-value a and b must be finite");
  if (!(spec.a < spec.b)) bad_spec("two-value space needs a < b");
  if (integral(spec.a) && integral(spec.b)) {
    const auto a = ExtScalar::integer(static_cast<std::int64_t>(spec.a));
    const auto b = ExtScalar::integer(static_cast<std::int64_t>(spec.b));
    return MSpace::from_function(spec.points, ScalarKind::exact_integer,
                                 [a, b](std::size_t i, std::size_t j) { return i == j ? a : b; });
  }
  const auto a = ExtScalar::real(spec.a);
  const auto b = ExtScalar::real(spec.b);
  return MSpace::from_function(spec.points, ScalarKind::binary_float,
                               [a, b](std::size_t i, std::size_t j) { return i == j ? a : b; });
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::size_t Grid2dSpec::cols() const { return cell_count(xmin, xmax, step, "x"); }
std::size_t Grid2dSpec::rows() const { return cell_count(ymin, ymax, step, "y"); }

std::array<double, 2> Grid2dSpec::coordinate(std::size_t i) const {
  const std::size_t c = cols();
  return {xmin + static_cast<double>(i % c) * step, ymin + static_cast<double>(i / c) * step};
}

std::optional<std::size_t> Grid2dSpec::cell_at(double x, double y) const {
  const double fc = (x - xmin) / step;
  const double fr = (y - ymin) / step;
  const double rc = std::round(fc);
  const double rr = std::round(fr);
  if (std::fabs(fc - rc) > 0.5 + kGridSlack || std::fabs(fr - rr) > 0.5 + kGridSlack)
    return std::nullopt;
  if (rc < 0 || rr < 0 || rc >= static_cast<double>(cols()) || rr >= static_cast<double>(rows()))
    return std::nullopt;
  return index(static_cast<std::size_t>(rc), static_cast<std::size_t>(rr));
}

std::string_view kind_name(const SpaceSpec& spec) {
  return std::visit(Overloaded{
                        [](const FiniteMatrixSpec&) { return std::string_view("finite-matrix"); },
                        [](const LinePointsSpec&) { return std::string_view("line-points"); },
                        [](const Grid2dSpec&) { return std::string_view("grid-2d"); },
                        [](const DigraphSpec&) { return std::string_view("digraph"); },
                        [](const IsolatedUnionSpec&) { return std::string_view("isolated-union"); },
                        [](const TwoValueSpec&) { return std::string_view("two-value"); },
                    },
                    spec.kind);
}

MSpace build_space(const SpaceSpec& spec) {
  MSpace space = std::visit(Overloaded{
                                [](const FiniteMatrixSpec& s) { return build_matrix(s); },
                                [](const LinePointsSpec& s) { return build_line(s); },
                                [](const Grid2dSpec& s) { return build_grid(s); },
                                [](const DigraphSpec& s) { return build_digraph(s); },
                                [](const IsolatedUnionSpec& s) { return build_isolated(s); },
                                [](const TwoValueSpec& s) { return build_two_value(s); },
                            },
                            spec.kind);
  const auto report = validate_mspace(space);
  if (!report.valid) {
    const auto& v = report.violations.front();
    bad_spec("m-space axiom fails: d(" + std::to_string(v.x) + "," + std::to_string(v.x) +
             ") > d(" + std::to_string(v.x) + "," + std::to_string(v.y) + ") (" +
             std::to_string(report.violations.size()) + " violations)");
  }
  if (spec.epsilon != 0.0) {
    try {
      space = space.with_tolerance(spec.epsilon);
    } catch (const Error& e) {
      bad_spec(e.what());
    }
  }
  return space;
}

std::vector<std::array<double, 2>> isolated_union_points(const IsolatedUnionSpec& spec) {
  std::vector<std::array<double, 2>> out;
  std::map<std::array<double, 2>, std::size_t> seen;
  for (const auto& component : spec.components)
    for (const auto& p : component) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) bad_spec("point coordinates must be finite");
      if (seen.emplace(p, out.size()).second) out.push_back(p);
    }
  return out;
}

PointSet cells_near_sphere(const Grid2dSpec& grid, std::array<double, 2> center, double radius) {
  PointSet out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto p = grid.coordinate(i);
    const double dx = std::fabs(p[0] - center[0]);
    const double dy = std::fabs(p[1] - center[1]);
    double r = 0;
    switch (grid.norm) {
      case Norm::l1: r = dx + dy; break;
      case Norm::l2: r = std::hypot(dx, dy); break;
      case Norm::linf: r = std::max(dx, dy); break;
    }
    if (std::fabs(r - radius) <= grid.step / 2 + kGridSlack) out.insert(i);
  }
  return out;
}

namespace {

Fixture line_fixture(std::string name, LinePointsSpec line) {
  SpaceSpec spec{line};
  MSpace space = build_space(spec);
  const std::size_t n = line.coords.size();
  Fixture fx{std::move(name), spec, space, RegionTuple({PointSet(n, {0}), PointSet(n, {n - 1})}),
             {}, {}, {}, {}, 0};
  fx.neighbors = [n](std::size_t p) {
    std::vector<std::size_t> out;
    if (p > 0) out.push_back(p - 1);
    if (p + 1 < n) out.push_back(p + 1);
    return out;
  };
  return fx;
}

std::function<std::vector<std::size_t>(std::size_t)> grid_neighbors(const Grid2dSpec& g) {
  const std::size_t cols = g.cols();
  const std::size_t rows = g.rows();
  return [cols, rows](std::size_t p) {
    std::vector<std::size_t> out;
    const auto c = static_cast<std::int64_t>(p % cols);
    const auto r = static_cast<std::int64_t>(p / cols);
    for (std::int64_t dr = -1; dr <= 1; ++dr)
      for (std::int64_t dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        const std::int64_t nc = c + dc;
        const std::int64_t nr = r + dr;
        if (nc < 0 || nr < 0 || nc >= static_cast<std::int64_t>(cols) ||
            nr >= static_cast<std::int64_t>(rows))
          continue;
        out.push_back(static_cast<std::size_t>(nr) * cols + static_cast<std::size_t>(nc));
      }
    return out;
  };
}

Fixture three_point() {
  Fixture fx = line_fixture("three-point", LinePointsSpec{{-1, 0, 1}});
  fx.expected = {RegionTuple({PointSet(3, {0}), PointSet(3, {1, 2})}),
                 RegionTuple({PointSet(3, {0, 1}), PointSet(3, {2})})};
  return fx;
}

Fixture a_point(double a) {
  if (!(a > -1.0 && a < 1.0)) bad_spec("a-point fixture needs -1 < a < 1");
  Fixture fx = line_fixture("a-point", LinePointsSpec{{-1, a, 1}});
  const RegionTuple left({PointSet(3, {0}), PointSet(3, {1, 2})});
  const RegionTuple right({PointSet(3, {0, 1}), PointSet(3, {2})});
  if (a > 0)
    fx.expected = {left};
  else if (a < 0)
    fx.expected = {right};
  else
    fx.expected = {left, right};
  return fx;
}

Fixture interval(double step) {
  require_step(step);
  const double spans = 6.0 / step;
  const double rounded = std::round(spans);
  if (std::fabs(spans - rounded) > 1e-6 || rounded < 1) bad_spec("interval step must divide 6");
  const auto segments = static_cast<std::int64_t>(rounded);
  LinePointsSpec line;
  line.origin = -3.0;
  line.step = 6.0 / static_cast<double>(segments);
  for (std::int64_t i = 0; i <= segments; ++i) line.coords.push_back(static_cast<double>(i));
  Fixture fx = line_fixture("interval", line);
  // -3 + 6i/segments <= -1  and  >= 1, in integers.
  fx.expected_member = [segments](std::size_t k, std::size_t p) {
    const auto i = static_cast<std::int64_t>(p);
    return k == 0 ? 6 * i <= 2 * segments : 6 * i >= 4 * segments;
  };
  fx.tolerance_cells = 1;
  return fx;
}

double maxnorm_f(double x) {
  if (x <= -2) return -x - 1;
  if (x >= 2) return x - 1;
  return 1;
}

Fixture maxnorm() {
  Grid2dSpec g{-20, 20, -20, 20, 1, Norm::linf};
  SpaceSpec spec{g};
  MSpace space = build_space(spec);
  const std::size_t n = g.size();
  RegionTuple sites({PointSet(n, {*g.cell_at(0, 3)}), PointSet(n, {*g.cell_at(0, -3)})});
  Fixture fx{"maxnorm", spec, space, sites, {}, {}, {}, grid_neighbors(g), 1};
  fx.expected_member = [g](std::size_t k, std::size_t p) {
    const auto c = g.coordinate(p);
    return k == 0 ? c[1] >= maxnorm_f(c[0]) : c[1] <= -maxnorm_f(c[0]);
  };
  fx.window = [g](std::size_t p) {
    const auto c = g.coordinate(p);
    return std::fabs(c[0]) <= 10 && std::fabs(c[1]) <= 10;
  };
  return fx;
}

Fixture rings() {
  Grid2dSpec g{-17, 17, -17, 17, 1, Norm::l2};
  SpaceSpec spec{g};
  MSpace space = build_space(spec);
  const std::size_t n = g.size();
  const double reach = std::hypot(17.0, 17.0) + 1.0;
  PointSet p1(n), p2(n);
  for (int k = 0; 6 * k + 1 <= reach; ++k) {
    p1 |= cells_near_sphere(g, {0, 0}, 6 * k + 1);
    p2 |= cells_near_sphere(g, {0, 0}, 6 * k + 4);
  }
  Fixture fx{"rings", spec, space, RegionTuple({p1, p2}), {}, {}, {}, grid_neighbors(g), 1};
  // 6k <= |x| <= 6k+2 (k = 0) or 6k+3 <= |x| <= 6k+5 (k = 1), on squared radii.
  fx.expected_member = [g](std::size_t k, std::size_t p) {
    const auto c = g.coordinate(p);
    const auto s = static_cast<std::int64_t>(c[0] * c[0] + c[1] * c[1]);
    const std::int64_t lo_off = k == 0 ? 0 : 3;
    for (std::int64_t ring = 0;; ++ring) {
      const std::int64_t lo = 6 * ring + lo_off;
      const std::int64_t hi = lo + 2;
      if (lo * lo > s) return false;
      if (s <= hi * hi) return true;
    }
  };
  return fx;
}

Fixture isolated() {
  constexpr int reach = 8;
  IsolatedUnionSpec iso;
  iso.components.resize(3);
  for (int t = -reach; t <= reach; ++t) {
    iso.components[0].push_back({static_cast<double>(t), 0});
    iso.components[1].push_back({-1, static_cast<double>(t)});
    iso.components[2].push_back({1, static_cast<double>(t)});
  }
  SpaceSpec spec{iso};
  MSpace space = build_space(spec);
  const auto pts = isolated_union_points(iso);
  const std::size_t n = pts.size();
  auto at = [&](double x, double y) {
    const auto it = std::find(pts.begin(), pts.end(), std::array<double, 2>{x, y});
    return static_cast<std::size_t>(it - pts.begin());
  };
  RegionTuple sites({PointSet(n, {at(-1, 0)}), PointSet(n, {at(-1, 3)}), PointSet(n, {at(1, 4)})});
  // R1 = X1 u ({-1} x (-inf,1]), R2 = {-1} x [2,inf), R3 = {1} x [2,inf).
  PointSet r1(n), r2(n), r3(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pts[i];
    if (p[1] == 0 || (p[0] == -1 && p[1] <= 1)) r1.insert(i);
    if (p[0] == -1 && p[1] >= 2) r2.insert(i);
    if (p[0] == 1 && p[1] >= 2) r3.insert(i);
  }
  Fixture fx{"isolated", spec, space, sites, {RegionTuple({r1, r2, r3})}, {}, {}, {}, 0};
  fx.expected_member = [t = fx.expected.front()](std::size_t k, std::size_t p) {
    return t[k].contains(p);
  };
  return fx;
}

Fixture digraph() {
  // Three strongly connected clusters V1 = {0,1,2}, V2 = {3,4}, V3 = {5,6,7}
  // joined by one-way arcs 2->3 and 4->5; x1 = 0, x2 = 3, x3 = 5.
  DigraphSpec g{8,
                {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {3, 4, 1}, {4, 3, 1}, {5, 6, 1}, {6, 7, 1},
                 {7, 5, 1}, {2, 3, 1}, {4, 5, 1}}};
  SpaceSpec spec{g};
  MSpace space = build_space(spec);
  RegionTuple sites({PointSet(8, {0, 3}), PointSet(8, {3, 5})});
  Fixture fx{"digraph", spec, space, sites, {}, {}, {}, {}, 0};
  // All zone diagrams, frozen from an independent enumeration over Y. The
  // third and fourth are (V1 u {x2}, V2 u V3) and (V1 u V2, {x2} u V3).
  fx.expected = {RegionTuple({PointSet(8, {0, 3}), PointSet(8, {1, 2, 3, 4, 5, 6, 7})}),
                 RegionTuple({PointSet(8, {0, 3, 4}), PointSet(8, {1, 2, 3, 5, 6, 7})}),
                 RegionTuple({PointSet(8, {0, 1, 2, 3}), PointSet(8, {3, 4, 5, 6, 7})}),
                 RegionTuple({PointSet(8, {0, 1, 2, 3, 4}), PointSet(8, {3, 5, 6, 7})})};
  return fx;
}

}  // namespace

Fixture fixture(std::string_view name, double parameter) {
  if (name == "three-point") return three_point();
  if (name == "a-point") return a_point(parameter == 0.0 ? 0.5 : parameter);
  if (name == "interval") return interval(parameter == 0.0 ? 0.01 : parameter);
  if (name == "maxnorm") return maxnorm();
  if (name == "rings") return rings();
  if (name == "isolated") return isolated();
  if (name == "digraph") return digraph();
  throw Error(Errc::unknown_fixture, "unknown fixture '" + std::string(name) + "'");
}

std::vector<Mismatch> band_mismatches(const Fixture& fx, const RegionTuple& computed) {
  std::vector<Mismatch> out;
  if (!fx.expected_member) return out;
  for (std::size_t k = 0; k < computed.k_count(); ++k)
    for (std::size_t p = 0; p < computed.universe(); ++p) {
      if (fx.window && !fx.window(p)) continue;
      const bool want = fx.expected_member(k, p);
      if (computed[k].contains(p) == want) continue;
      bool near_boundary = false;
      if (fx.tolerance_cells > 0 && fx.neighbors)
        for (std::size_t q : fx.neighbors(p))
          if (fx.expected_member(k, q) != want) near_boundary = true;
      if (!near_boundary) out.push_back({k, p});
    }
  return out;
}

bool two_value_zone_family_check(const MSpace& space, const RegionTuple& sites,
                                 std::size_t trial_count, std::uint64_t seed) {
  check_sites(space, sites);
  const std::size_t n = space.size();
  const ExtScalar a = space.dist(0, 0);
  const ExtScalar b = n > 1 ? space.dist(0, 1) : ExtScalar::pos_inf();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (space.dist(x, y) != (x == y ? a : b) || !(a < b))
        throw Error(Errc::invalid_argument, "space is not a two-value space");
  PointSet claimed(n);
  for (const auto& p : sites) {
    if (!(claimed & p).empty()) throw Error(Errc::sites_not_separated, "sites overlap");
    claimed |= p;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sites.k_count() - 1);
  const PointSet free = claimed.complement();
  for (std::size_t trial = 0; trial < trial_count; ++trial) {
    RegionTuple candidate = sites;
    free.for_each([&](std::size_t x) { candidate[pick(rng)].insert(x); });
    if (!verify_zone(space, sites, candidate).passed) return false;
  }
  return true;
}

}  // namespace zoned
