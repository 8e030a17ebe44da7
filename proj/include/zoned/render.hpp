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

#include <cstdint>
#include <vector>

#include "zoned/dom.hpp"
#include "zoned/spaces.hpp"

namespace zoned {

/// Binary PPM ("P6") image of regions on a grid, one pixel per cell, north up.
/// Region k takes palette color k; sites are drawn at half brightness; cells
/// in no region are white. Where regions overlap the lowest k wins.
std::vector<std::uint8_t> render_ppm(const Grid2dSpec& grid, const RegionTuple& sites,
                                     const RegionTuple& regions);

}  // namespace zoned
