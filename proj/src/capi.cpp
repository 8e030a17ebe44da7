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

#include "zoned/zoned.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "zoned/engine.hpp"
#include "zoned/error.hpp"
#include "zoned/game.hpp"
#include "zoned/io.hpp"
#include "zoned/parallel.hpp"
#include "zoned/render.hpp"
#include "zoned/spaces.hpp"
#include "zoned/uniqueness.hpp"

struct zd_space {
  zoned::SpaceSpec spec;
  zoned::MSpace space;
};

struct zd_tuple {
  zoned::RegionTuple tuple;
};

struct zd_result {
  zoned::ResultDocument doc;
  std::string transcript;
};

namespace {

thread_local std::string g_last_error;

zd_status fail(zd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

zd_status status_of(zoned::Errc code) {
  using zoned::Errc;
  switch (code) {
    case Errc::parse_error: return ZD_PARSE_ERROR;
    case Errc::bound_exceeded: return ZD_NOT_CONVERGED;
    case Errc::cap_exceeded: return ZD_CAP_EXCEEDED;
    case Errc::order_not_2: return ZD_ORDER_NOT_2;
    case Errc::not_grid: return ZD_NOT_GRID;
    case Errc::invalid_argument:
    case Errc::invalid_space:
    case Errc::not_double_zone:
    case Errc::not_in_queue:
    case Errc::sites_not_separated:
    case Errc::unknown_fixture: return ZD_INVALID;
  }
  return ZD_INTERNAL;
}

template <class Fn>
zd_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const zoned::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ZD_PARSE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZD_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZD_INTERNAL, e.what());
  } catch (...) {
    return fail(ZD_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define ZD_REQUIRE(cond)                                             \
  do {                                                               \
    if (!(cond)) return fail(ZD_INVALID, "null or invalid argument: " #cond); \
  } while (0)

zoned::ResultDocument base_document(const zd_space& s, const zoned::RegionTuple& sites,
                                    const char* mode) {
  zoned::ResultDocument doc;
  doc.mode = mode;
  doc.size = s.space.size();
  doc.sites = sites;
  if (const auto* g = std::get_if<zoned::Grid2dSpec>(&s.spec.kind)) doc.grid = *g;
  return doc;
}

void fill_from_zone(zoned::ResultDocument& doc, const zoned::ZoneResult& r) {
  doc.kind = r.kind;
  doc.extremal = r.extremal;
  doc.steps = r.trace.steps;
  doc.bound = r.trace.bound;
  doc.regions = r.tuple;
}

}  // namespace

extern "C" {

const char* zd_last_error(void) { return g_last_error.c_str(); }

const char* zd_status_name(zd_status status) {
  switch (status) {
    case ZD_OK: return "ok";
    case ZD_VERIFY_FAILED: return "verify-failed";
    case ZD_PARSE_ERROR: return "parse-error";
    case ZD_INVALID: return "invalid";
    case ZD_NOT_CONVERGED: return "not-converged";
    case ZD_CAP_EXCEEDED: return "cap-exceeded";
    case ZD_ORDER_NOT_2: return "order-not-2";
    case ZD_NOT_GRID: return "not-grid";
    case ZD_IO_ERROR: return "io-error";
    case ZD_INTERNAL: return "internal";
  }
  return "unknown";
}

void zd_string_free(char* s) { std::free(s); }
void zd_buffer_free(unsigned char* buffer) { std::free(buffer); }
void zd_set_max_threads(unsigned n) { zoned::set_max_threads(n); }

zd_status zd_space_from_json(const char* json, zd_space** out) {
  ZD_REQUIRE(json != nullptr && out != nullptr);
  return guarded([&] {
    auto spec = zoned::space_spec_from_json(zoned::parse_json_text(json));
    auto space = zoned::build_space(spec);
    *out = new zd_space{std::move(spec), std::move(space)};
    return ZD_OK;
  });
}

zd_status zd_space_set_epsilon(zd_space* space, double epsilon) {
  ZD_REQUIRE(space != nullptr);
  return guarded([&] {
    space->space = space->space.with_tolerance(epsilon);
    space->spec.epsilon = epsilon;
    return ZD_OK;
  });
}

zd_status zd_space_validate(const zd_space* space, size_t* violations) {
  ZD_REQUIRE(space != nullptr && violations != nullptr);
  return guarded([&] {
    *violations = zoned::validate_mspace(space->space).violations.size();
    return ZD_OK;
  });
}

size_t zd_space_size(const zd_space* space) { return space ? space->space.size() : 0; }

int zd_space_is_grid(const zd_space* space) {
  return space && std::holds_alternative<zoned::Grid2dSpec>(space->spec.kind) ? 1 : 0;
}

void zd_space_free(zd_space* space) { delete space; }

zd_status zd_sites_from_json(const zd_space* space, const char* json, zd_tuple** out) {
  ZD_REQUIRE(space != nullptr && json != nullptr && out != nullptr);
  return guarded([&] {
    auto t = zoned::sites_from_json(zoned::parse_json_text(json), space->spec, space->space.size());
    zoned::check_sites(space->space, t);
    *out = new zd_tuple{std::move(t)};
    return ZD_OK;
  });
}

zd_status zd_regions_from_json(const zd_space* space, const char* json, zd_tuple** out) {
  ZD_REQUIRE(space != nullptr && json != nullptr && out != nullptr);
  return guarded([&] {
    *out = new zd_tuple{zoned::regions_from_json(zoned::parse_json_text(json), space->space.size())};
    return ZD_OK;
  });
}

zd_status zd_tuple_new(size_t universe, size_t k_count, zd_tuple** out) {
  ZD_REQUIRE(out != nullptr && k_count >= 2);
  return guarded([&] {
    *out = new zd_tuple{zoned::RegionTuple(std::vector<zoned::PointSet>(k_count, zoned::PointSet(universe)))};
    return ZD_OK;
  });
}

zd_status zd_tuple_insert(zd_tuple* tuple, size_t k, size_t point) {
  ZD_REQUIRE(tuple != nullptr && k < tuple->tuple.k_count());
  return guarded([&] {
    tuple->tuple[k].insert(point);
    return ZD_OK;
  });
}

size_t zd_tuple_k_count(const zd_tuple* tuple) { return tuple ? tuple->tuple.k_count() : 0; }
size_t zd_tuple_universe(const zd_tuple* tuple) { return tuple ? tuple->tuple.universe() : 0; }

size_t zd_tuple_count(const zd_tuple* tuple, size_t k) {
  return tuple && k < tuple->tuple.k_count() ? tuple->tuple[k].count() : 0;
}

int zd_tuple_contains(const zd_tuple* tuple, size_t k, size_t point) {
  return tuple && k < tuple->tuple.k_count() && tuple->tuple[k].contains(point) ? 1 : 0;
}

zd_status zd_tuple_to_json(const zd_tuple* tuple, char** out) {
  ZD_REQUIRE(tuple != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(zoned::tuple_to_json(tuple->tuple).dump());
    return ZD_OK;
  });
}

void zd_tuple_free(zd_tuple* tuple) { delete tuple; }

zd_status zd_compute_double(const zd_space* space, const zd_tuple* sites, zd_direction direction,
                            zd_result** out) {
  ZD_REQUIRE(space != nullptr && sites != nullptr && out != nullptr);
  return guarded([&] {
    const auto dir =
        direction == ZD_DESCENDING ? zoned::Direction::descending : zoned::Direction::ascending;
    const auto r = zoned::iterate_double_zone(space->space, sites->tuple, dir);
    auto doc = base_document(*space, sites->tuple, "double");
    fill_from_zone(doc, r);
    doc.direction = dir;
    *out = new zd_result{std::move(doc), {}};
    return ZD_OK;
  });
}

zd_status zd_compute_order2(const zd_space* space, const zd_tuple* sites, zd_variant variant,
                            zd_result** out) {
  ZD_REQUIRE(space != nullptr && sites != nullptr && out != nullptr);
  ZD_REQUIRE(variant >= ZD_VARIANT_R && variant <= ZD_VARIANT_W);
  return guarded([&] {
    const auto v = static_cast<zoned::Order2Variant>(variant);
    const auto r = zoned::zone_order2(space->space, sites->tuple, v);
    auto doc = base_document(*space, sites->tuple, "order2");
    fill_from_zone(doc, r);
    doc.variant = v;
    *out = new zd_result{std::move(doc), {}};
    return ZD_OK;
  });
}

zd_status zd_compute_from_double(const zd_space* space, const zd_tuple* sites,
                                 const zd_tuple* double_zone, zd_result** out) {
  ZD_REQUIRE(space != nullptr && sites != nullptr && double_zone != nullptr && out != nullptr);
  return guarded([&] {
    const auto r = zoned::zone_from_double(space->space, sites->tuple, double_zone->tuple);
    auto doc = base_document(*space, sites->tuple, "from-double");
    fill_from_zone(doc, r);
    *out = new zd_result{std::move(doc), {}};
    return ZD_OK;
  });
}

zd_status zd_compute_game(const zd_space* space, const zd_tuple* sites,
                          const zd_game_options* options, zd_result** out) {
  ZD_REQUIRE(space != nullptr && sites != nullptr && out != nullptr);
  return guarded([&] {
    zoned::GamePolicy policy;
    std::optional<std::size_t> cap;
    if (options != nullptr) {
      policy.selection =
          options->random_selection ? zoned::PointSelection::random : zoned::PointSelection::sweep;
      policy.tie_break =
          options->random_tie_break ? zoned::TieBreak::random : zoned::TieBreak::lowest_index;
      policy.seed = options->seed;
      if (options->max_moves != 0) cap = options->max_moves;
    }
    const auto outcome = zoned::game_run(space->space, sites->tuple, policy, cap);
    auto doc = base_document(*space, sites->tuple, "game");
    doc.kind = zoned::ZoneKind::zone;
    doc.steps = outcome.state.move_count;
    doc.bound = cap.value_or(100 * space->space.size());
    doc.regions = outcome.state.regions;
    doc.game = zoned::GameSummary{outcome.stable, outcome.state.move_count, outcome.passes, policy};
    std::ostringstream log;
    for (const auto& m : outcome.transcript) log << zoned::format_move(m) << '\n';
    *out = new zd_result{std::move(doc), log.str()};
    if (!outcome.stable) return fail(ZD_NOT_CONVERGED, "game did not stabilize within the move cap");
    return ZD_OK;
  });
}

zd_status zd_result_to_json(const zd_result* result, char** out) {
  ZD_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(zoned::result_to_json(result->doc).dump(2) + "\n");
    return ZD_OK;
  });
}

zd_status zd_result_regions(const zd_result* result, zd_tuple** out) {
  ZD_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = new zd_tuple{result->doc.regions};
    return ZD_OK;
  });
}

size_t zd_result_steps(const zd_result* result) { return result ? result->doc.steps : 0; }
size_t zd_result_bound(const zd_result* result) { return result ? result->doc.bound : 0; }

zd_status zd_result_transcript(const zd_result* result, char** out) {
  ZD_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(result->transcript);
    return ZD_OK;
  });
}

void zd_result_free(zd_result* result) { delete result; }

zd_status zd_verify(const zd_space* space, const zd_tuple* sites, const zd_tuple* candidate,
                    zd_kind kind, char** report_json) {
  ZD_REQUIRE(space != nullptr && sites != nullptr && candidate != nullptr);
  return guarded([&] {
    const auto k = kind == ZD_KIND_DOUBLE ? zoned::ZoneKind::double_zone : zoned::ZoneKind::zone;
    const auto report = k == zoned::ZoneKind::zone
                            ? zoned::verify_zone(space->space, sites->tuple, candidate->tuple)
                            : zoned::verify_double_zone(space->space, sites->tuple, candidate->tuple);
    if (report_json != nullptr) *report_json = dup_string(zoned::verify_to_json(report, k).dump() + "\n");
    return report.passed ? ZD_OK : fail(ZD_VERIFY_FAILED, "candidate is not a fixed point");
  });
}

zd_status zd_uniqueness(const zd_space* space, const zd_tuple* sites, int brute_force,
                        uint64_t cap, char** report_json) {
  ZD_REQUIRE(space != nullptr && sites != nullptr && report_json != nullptr);
  return guarded([&] {
    const auto effort =
        brute_force ? zoned::Effort::with_brute_force : zoned::Effort::bracketing_only;
    const auto report = zoned::uniqueness_check(space->space, sites->tuple, effort,
                                                cap == 0 ? zoned::kDefaultEnumerationCap : cap);
    *report_json = dup_string(zoned::uniqueness_to_json(report, effort).dump(2) + "\n");
    return ZD_OK;
  });
}

zd_status zd_render_ppm(const char* result_json, unsigned char** out, size_t* size) {
  ZD_REQUIRE(result_json != nullptr && out != nullptr && size != nullptr);
  return guarded([&] {
    const auto doc = zoned::result_from_json(zoned::parse_json_text(result_json));
    if (!doc.grid) return fail(ZD_NOT_GRID, "result does not come from a grid-2d space");
    const auto bytes = zoned::render_ppm(*doc.grid, doc.sites, doc.regions);
    auto* buffer = static_cast<unsigned char*>(std::malloc(bytes.size()));
    if (buffer == nullptr) throw std::bad_alloc();
    std::memcpy(buffer, bytes.data(), bytes.size());
    *out = buffer;
    *size = bytes.size();
    return ZD_OK;
  });
}

zd_status zd_fixture(const char* name, double parameter, char** space_json, char** sites_json) {
  ZD_REQUIRE(name != nullptr && space_json != nullptr && sites_json != nullptr);
  return guarded([&] {
    const auto fx = zoned::fixture(name, parameter);
    std::string space = zoned::space_spec_to_json(fx.spec).dump() + "\n";
    std::string sites = zoned::Json{{"sites", zoned::tuple_to_json(fx.sites)}}.dump() + "\n";
    *space_json = dup_string(space);
    try {
      *sites_json = dup_string(sites);
    } catch (...) {
      std::free(*space_json);
      *space_json = nullptr;
      throw;
    }
    return ZD_OK;
  });
}

}  // extern "C"
