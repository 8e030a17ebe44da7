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

#include <stdexcept>
#include <string>

namespace zoned {

/// Failure categories raised by the library. The C API maps each one onto a
/// stable status code, so new values go at the end.
enum class Errc {
  invalid_argument,   // empty set where a nonempty one is required, k mismatch, ...
  invalid_space,      // spec validation or m-space axiom failure
  bound_exceeded,     // an iteration ran past its a-priori step bound
  cap_exceeded,       // enumeration larger than the configured cap
  order_not_2,
  not_double_zone,
  not_in_queue,       // game move on a point outside Q
  sites_not_separated,
  not_grid,
  parse_error,
  unknown_fixture,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zoned
