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


#ifndef ZONED_ZONED_H
#define ZONED_ZONED_H

#include <stddef.h>
#include <stdint.h>

#if defined(ZONED_BUILDING_LIBRARY)
#define ZONED_API __attribute__((visibility("default")))
#else
#define ZONED_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum zd_status {
  ZD_OK = 0,
  ZD_VERIFY_FAILED = 1,
  ZD_PARSE_ERROR = 2,
  ZD_INVALID = 3,
  ZD_NOT_CONVERGED = 4,
  ZD_CAP_EXCEEDED = 5,
  ZD_ORDER_NOT_2 = 6,
  ZD_NOT_GRID = 7,
  ZD_IO_ERROR = 8,
  ZD_INTERNAL = 9
} zd_status;

typedef enum zd_direction { ZD_ASCENDING = 0, ZD_DESCENDING = 1 } zd_direction;
typedef enum zd_variant { ZD_VARIANT_R = 0, ZD_VARIANT_S, ZD_VARIANT_Z, ZD_VARIANT_W } zd_variant;
typedef enum zd_kind { ZD_KIND_ZONE = 0, ZD_KIND_DOUBLE = 1 } zd_kind;

typedef struct zd_space zd_space;
typedef struct zd_tuple zd_tuple;
typedef struct zd_result zd_result;

/* Message for the last failing call on this thread; "" when none. */
ZONED_API const char* zd_last_error(void);
ZONED_API const char* zd_status_name(zd_status status);
ZONED_API void zd_string_free(char* s);
ZONED_API void zd_buffer_free(unsigned char* buffer);
/* 0 restores the default (hardware concurrency). */
ZONED_API void zd_set_max_threads(unsigned n);

/* Spaces. JSON in the canonical space encoding. */
ZONED_API zd_status zd_space_from_json(const char* json, zd_space** out);
ZONED_API zd_status zd_space_set_epsilon(zd_space* space, double epsilon);
/* Number of ordered pairs breaking d(x,x) <= d(x,y). */
ZONED_API zd_status zd_space_validate(const zd_space* space, size_t* violations);
ZONED_API size_t zd_space_size(const zd_space* space);
ZONED_API int zd_space_is_grid(const zd_space* space);
ZONED_API void zd_space_free(zd_space* space);

/* Tuples of point sets. */
ZONED_API zd_status zd_sites_from_json(const zd_space* space, const char* json, zd_tuple** out);
ZONED_API zd_status zd_regions_from_json(const zd_space* space, const char* json, zd_tuple** out);
ZONED_API zd_status zd_tuple_new(size_t universe, size_t k_count, zd_tuple** out);
ZONED_API zd_status zd_tuple_insert(zd_tuple* tuple, size_t k, size_t point);
ZONED_API size_t zd_tuple_k_count(const zd_tuple* tuple);
ZONED_API size_t zd_tuple_universe(const zd_tuple* tuple);
ZONED_API size_t zd_tuple_count(const zd_tuple* tuple, size_t k);
ZONED_API int zd_tuple_contains(const zd_tuple* tuple, size_t k, size_t point);
ZONED_API zd_status zd_tuple_to_json(const zd_tuple* tuple, char** out);
ZONED_API void zd_tuple_free(zd_tuple* tuple);

/* Computations. */
ZONED_API zd_status zd_compute_double(const zd_space* space, const zd_tuple* sites,
                                      zd_direction direction, zd_result** out);
ZONED_API zd_status zd_compute_order2(const zd_space* space, const zd_tuple* sites,
                                      zd_variant variant, zd_result** out);
ZONED_API zd_status zd_compute_from_double(const zd_space* space, const zd_tuple* sites,
                                           const zd_tuple* double_zone, zd_result** out);

typedef struct zd_game_options {
  int random_selection; /* 0: sweep in index order, 1: random order per pass */
  int random_tie_break; /* 0: lowest admissible index, 1: random */
  uint64_t seed;
  size_t max_moves; /* 0: 100 * |X| */
} zd_game_options;

/* A run that hits max_moves still yields a result, with ZD_NOT_CONVERGED. */
ZONED_API zd_status zd_compute_game(const zd_space* space, const zd_tuple* sites,
                                    const zd_game_options* options, zd_result** out);

ZONED_API zd_status zd_result_to_json(const zd_result* result, char** out);
ZONED_API zd_status zd_result_regions(const zd_result* result, zd_tuple** out);
ZONED_API size_t zd_result_steps(const zd_result* result);
ZONED_API size_t zd_result_bound(const zd_result* result);
/* Game move log, one "point old K' new" line per checked point; "" otherwise. */
ZONED_API zd_status zd_result_transcript(const zd_result* result, char** out);
ZONED_API void zd_result_free(zd_result* result);

/* Analysis. zd_verify returns ZD_VERIFY_FAILED when the check fails; the
   report is written either way. */
ZONED_API zd_status zd_verify(const zd_space* space, const zd_tuple* sites,
                              const zd_tuple* candidate, zd_kind kind, char** report_json);
/* brute_force = 0 evaluates only the conditions decidable from m and M.
   cap = 0 uses the default enumeration cap. */
ZONED_API zd_status zd_uniqueness(const zd_space* space, const zd_tuple* sites, int brute_force,
                                  uint64_t cap, char** report_json);

/* Binary PPM of a result JSON document that carries a grid. */
ZONED_API zd_status zd_render_ppm(const char* result_json, unsigned char** out, size_t* size);

/* Worked examples by name; parameter 0 selects the default. */
ZONED_API zd_status zd_fixture(const char* name, double parameter, char** space_json,
                               char** sites_json);

#ifdef __cplusplus
}
#endif

#endif
