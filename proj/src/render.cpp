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

#include "zoned/render.hpp"

#include <array>
#include <string>

#include "zoned/error.hpp"

namespace zoned {

namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 8> kPalette = {{
    {230, 25, 75},
    {60, 140, 230},
    {60, 180, 75},
    {245, 130, 48},
    {145, 30, 180},
    {70, 200, 200},
    {240, 50, 230},
    {170, 110, 40},
}};

}  // namespace

std::vector<std::uint8_t> render_ppm(const Grid2dSpec& grid, const RegionTuple& sites,
                                     const RegionTuple& regions) {
  const std::size_t cols = grid.cols();
  const std::size_t rows = grid.rows();
  if (regions.universe() != cols * rows || sites.universe() != cols * rows)
    throw Error(Errc::invalid_argument, "tuple does not match the grid");
  const std::string header = "P6\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + 3 * cols * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t row = rows - 1 - r;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t p = grid.index(c, row);
      std::array<std::uint8_t, 3> px = {255, 255, 255};
      for (std::size_t k = 0; k < regions.k_count(); ++k) {
        if (!regions[k].contains(p) && !sites[k].contains(p)) continue;
        px = kPalette[k % kPalette.size()];
        if (sites[k].contains(p))
          for (auto& ch : px) ch = static_cast<std::uint8_t>(ch / 2);
        break;
      }
      out.insert(out.end(), px.begin(), px.end());
    }
  }
  return out;
}

}  // namespace zoned
