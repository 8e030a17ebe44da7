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

#include "zoned/game.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "zoned/engine.hpp"
#include "zoned/error.hpp"

namespace zoned {

namespace {

// splitmix64 finalizer; keyed streams keep game_step a pure function.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t draw(std::uint64_t& state, std::size_t bound) {
  state = mix(state, 0x5bd1e995);
  return static_cast<std::size_t>(state % bound);
}

void check_separated(const MSpace& space, const RegionTuple& sites) {
  check_sites(space, sites);
  for (std::size_t j = 0; j < sites.k_count(); ++j)
    for (std::size_t k = j + 1; k < sites.k_count(); ++k)
      if (!(sites[j] & sites[k]).empty())
        throw Error(Errc::sites_not_separated, "site sets " + std::to_string(j) + " and " +
                                                   std::to_string(k) + " overlap");
  for (std::size_t x = 0; x < space.size(); ++x)
    for (std::size_t k = 0; k < sites.k_count(); ++k) {
      if (sites[k].contains(x)) continue;
      if (!(space.dist(x, x) < dist_point_set(space, x, sites[k])))
        throw Error(Errc::sites_not_separated,
                    "point " + std::to_string(x) + " is not strictly farther from site set " +
                        std::to_string(k) + " than from itself");
    }
}

}  // namespace

std::string format_move(const Move& move) {
  auto color = [](const Color& c) { return c ? std::to_string(*c) : std::string("-"); };
  std::string ks = "{";
  for (std::size_t i = 0; i < move.admissible.size(); ++i) {
    if (i != 0) ks += ',';
    ks += std::to_string(move.admissible[i]);
  }
  ks += '}';
  return std::to_string(move.point) + ' ' + color(move.old_color) + ' ' + ks + ' ' +
         color(move.new_color);
}

GameState initial_state(const MSpace& space, const RegionTuple& sites) {
  check_separated(space, sites);
  GameState state;
  state.coloring.assign(space.size(), std::nullopt);
  state.regions = sites;
  state.queue = PointSet::full(space.size());
  for (std::size_t k = 0; k < sites.k_count(); ++k) {
    sites[k].for_each([&](std::size_t x) { state.coloring[x] = k; });
    state.queue -= sites[k];
  }
  return state;
}

GameState state_from_regions(const MSpace& space, const RegionTuple& sites,
                             const RegionTuple& regions) {
  GameState state = initial_state(space, sites);
  if (regions.k_count() != sites.k_count() || !in_lattice(sites, regions))
    throw Error(Errc::invalid_argument, "regions must contain their sites");
  for (std::size_t k = 0; k < regions.k_count(); ++k)
    regions[k].for_each([&](std::size_t x) {
      if (state.coloring[x] && *state.coloring[x] != k)
        throw Error(Errc::invalid_argument,
                    "point " + std::to_string(x) + " lies in two regions; game positions need "
                    "pairwise-disjoint regions");
      state.coloring[x] = k;
    });
  state.regions = regions;
  return state;
}

std::vector<std::size_t> admissible_colors(const MSpace& space, const RegionTuple& sites,
                                           const GameState& state, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sites.k_count(); ++k) {
    const PointSet others = state.regions.others_union(k);
    if (space.dominates(dist_point_set(space, x, sites[k]), dist_point_set(space, x, others)))
      out.push_back(k);
  }
  return out;
}

GameState game_step(const MSpace& space, const RegionTuple& sites, const GameState& state,
                    std::size_t x, const GamePolicy& policy, Move* move) {
  if (!state.queue.contains(x))
    throw Error(Errc::not_in_queue, "point " + std::to_string(x) + " is not in Q");

  Move m;
  m.point = x;
  m.old_color = state.coloring[x];
  m.admissible = admissible_colors(space, sites, state, x);

  GameState next = state;
  ++next.move_count;
  if (m.admissible.empty()) {
    m.new_color = std::nullopt;
  } else if (m.old_color &&
             std::find(m.admissible.begin(), m.admissible.end(), *m.old_color) !=
                 m.admissible.end()) {
    m.new_color = m.old_color;
  } else if (policy.tie_break == TieBreak::lowest_index) {
    m.new_color = m.admissible.front();
  } else {
    std::uint64_t rng = mix(policy.seed, state.move_count);
    m.new_color = m.admissible[draw(rng, m.admissible.size())];
  }

  if (m.changed()) {
    for (std::size_t k = 0; k < next.regions.k_count(); ++k) next.regions[k].erase(x);
    if (m.new_color) next.regions[*m.new_color].insert(x);
    next.coloring[x] = m.new_color;
  }
  if (move) *move = std::move(m);
  return next;
}

bool is_stable(const MSpace& space, const RegionTuple& sites, const GameState& state) {
  const GamePolicy probe;
  return state.queue.all_of([&](std::size_t x) {
    Move m;
    game_step(space, sites, state, x, probe, &m);
    return !m.changed();
  });
}

void check_state_coherence(const RegionTuple& sites, const GameState& state) {
  for (std::size_t k = 0; k < sites.k_count(); ++k) {
    if (!sites[k].subset_of(state.regions[k]))
      throw std::logic_error("region " + std::to_string(k) + " lost a site");
    const PointSet grown = state.regions[k] - sites[k];
    grown.for_each([&](std::size_t x) {
      if (state.coloring[x] != k)
        throw std::logic_error("point " + std::to_string(x) + " in region " + std::to_string(k) +
                               " has another color");
    });
  }
  for (std::size_t x = 0; x < state.coloring.size(); ++x)
    if (state.coloring[x] && !state.regions[*state.coloring[x]].contains(x))
      throw std::logic_error("point " + std::to_string(x) + " colored outside its region");
}

GameOutcome game_run(const MSpace& space, const RegionTuple& sites, const GamePolicy& policy,
                     std::optional<std::size_t> max_moves) {
  const std::size_t cap = max_moves.value_or(100 * space.size());
  GameOutcome out;
  out.state = initial_state(space, sites);
  const auto queue = out.state.queue.members();

  for (;;) {
    std::vector<std::size_t> order = queue;
    if (policy.selection == PointSelection::random) {
      // Fisher-Yates on a per-pass stream; each point is checked once per pass.
      std::uint64_t rng = mix(policy.seed ^ 0xa5a5a5a5a5a5a5a5ULL, out.passes);
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
    }
    bool changed = false;
    for (std::size_t x : order) {
      if (out.state.move_count >= cap) return out;
      Move m;
      out.state = game_step(space, sites, out.state, x, policy, &m);
#ifndef NDEBUG
      check_state_coherence(sites, out.state);
#endif
      changed = changed || m.changed();
      out.transcript.push_back(std::move(m));
    }
    ++out.passes;
    if (!changed) break;
  }

  out.stable = true;
  if (!verify_zone(space, sites, out.state.regions).passed)
    throw std::logic_error("stable game position is not a zone diagram");
  return out;
}

}  // namespace zoned
