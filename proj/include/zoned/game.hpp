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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zoned/dom.hpp"

namespace zoned {

/// A point's color: a region index, or nullopt for the neutral color.
using Color = std::optional<std::size_t>;

enum class PointSelection { sweep, random };
enum class TieBreak { lowest_index, random };

/// Fills in the player's free choices. Deterministic for a given seed.
struct GamePolicy {
  PointSelection selection = PointSelection::sweep;
  TieBreak tie_break = TieBreak::lowest_index;
  std::uint64_t seed = 0;
};

struct GameState {
  std::vector<Color> coloring;
  RegionTuple regions;
  PointSet queue;  // Q: the points the player may check (everything but the sites)
  std::size_t move_count = 0;
};

/// One checked point.
struct Move {
  std::size_t point = 0;
  Color old_color;
  std::vector<std::size_t> admissible;  // K'
  Color new_color;
  bool changed() const { return old_color != new_color; }
};

/// "point old K' new", e.g. "4 - {0,1} 0" with '-' for neutral.
std::string format_move(const Move& move);

/// Starting position: R_k = P_k, everything else neutral. Throws
/// sites_not_separated unless the sites are pairwise disjoint and
/// d(x,x) < d(x,P_k) for every point x outside P_k.
GameState initial_state(const MSpace& space, const RegionTuple& sites);

/// Game position for pairwise-disjoint regions containing the sites.
GameState state_from_regions(const MSpace& space, const RegionTuple& sites,
                             const RegionTuple& regions);

/// K' = { k : x in dom(P_k, union of R_j, j != k) }.
std::vector<std::size_t> admissible_colors(const MSpace& space, const RegionTuple& sites,
                                           const GameState& state, std::size_t x);

/// Checks x and recolors it if needed. Throws not_in_queue when x is a site.
GameState game_step(const MSpace& space, const RegionTuple& sites, const GameState& state,
                    std::size_t x, const GamePolicy& policy, Move* move = nullptr);

/// No point of Q would change color.
bool is_stable(const MSpace& space, const RegionTuple& sites, const GameState& state);

struct GameOutcome {
  GameState state;
  bool stable = false;
  std::size_t passes = 0;
  std::vector<Move> transcript;
};

/// Plays passes over Q until one changes nothing (stable) or max_moves checks
/// have been made. Default cap is 100 * |X|.
GameOutcome game_run(const MSpace& space, const RegionTuple& sites, const GamePolicy& policy,
                     std::optional<std::size_t> max_moves = std::nullopt);

/// Throws std::logic_error if the coloring and the regions disagree.
void check_state_coherence(const RegionTuple& sites, const GameState& state);

}  // namespace zoned
