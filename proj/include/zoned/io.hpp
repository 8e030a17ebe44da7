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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zoned/engine.hpp"
#include "zoned/game.hpp"
#include "zoned/spaces.hpp"
#include "zoned/uniqueness.hpp"

namespace zoned {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become parse_error with line and column.
Json parse_json_text(std::string_view text);

/// Space file encoding, e.g. {"kind":"grid-2d","xmin":-5,...,"norm":"linf"}.
/// Infinite matrix entries are the strings "inf" and "-inf".
Json space_spec_to_json(const SpaceSpec& spec);
SpaceSpec space_spec_from_json(const Json& j);

/// Sorted index arrays, one per component.
Json tuple_to_json(const RegionTuple& t);

/// {"sites": [...]} or a bare array. Each entry is an index array or a locus
/// object: {"points": [[x,y],...]} (grid, isolated-union), {"points": [x,...]}
/// (line-points) or {"spheres": [{"center":[x,y],"radius":r}]} (grid).
RegionTuple sites_from_json(const Json& j, const SpaceSpec& spec, std::size_t universe);

/// {"regions": [[...],...]} or a bare array of index arrays.
RegionTuple regions_from_json(const Json& j, std::size_t universe);

struct GameSummary {
  bool stable = false;
  std::size_t moves = 0;
  std::size_t passes = 0;
  GamePolicy policy;
};

/// Everything `zoned compute` writes: enough to re-verify (regions, sites)
/// and, for grids, to decode indices geometrically.
struct ResultDocument {
  std::string mode;  // double | order2 | from-double | game
  ZoneKind kind = ZoneKind::zone;
  Extremal extremal = Extremal::unknown;
  std::optional<Direction> direction;
  std::optional<Order2Variant> variant;
  std::size_t steps = 0;
  std::size_t bound = 0;
  std::size_t size = 0;
  RegionTuple sites;
  RegionTuple regions;
  std::optional<Grid2dSpec> grid;
  std::optional<GameSummary> game;
};

Json result_to_json(const ResultDocument& doc);
ResultDocument result_from_json(const Json& j);

Json verify_to_json(const VerifyReport& report, ZoneKind kind);
Json uniqueness_to_json(const UniquenessReport& report, Effort effort);

std::string_view to_string(Direction d);
std::string_view to_string(Order2Variant v);
std::string_view to_string(ZoneKind k);
std::string_view to_string(Extremal e);
std::string_view to_string(Norm n);

}  // namespace zoned
