// Copyright 2026 The qcut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qcut {

/// Grayscale intensity grid, row-major, values in [0, 1]. PNG and PGM
/// sources are read at 8-bit precision; color PNGs are converted by
/// Rec. 709 luminance.
struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;

  Image() = default;
  Image(std::size_t w, std::size_t h, double fill = 0.0)
      : width(w), height(h), pixels(w * h, fill) {}

  double at(std::size_t row, std::size_t col) const {
    return pixels[row * width + col];
  }
  double& at(std::size_t row, std::size_t col) {
    return pixels[row * width + col];
  }
  bool empty() const { return width == 0 || height == 0; }
};

/// Reads a .png or .pgm file (dispatch on extension, case-insensitive).
Image read_image(const std::string& path);

Image read_pgm(const std::string& path);  // P2 and P5, maxval <= 65535
Image read_png(const std::string& path);

void write_pgm(const std::string& path, const Image& image);

/// Bilinear resize with corner-aligned sampling; resizing to the
/// original dimensions reproduces the image exactly.
Image resize_bilinear(const Image& image, std::size_t new_width,
                      std::size_t new_height);

Image flip_horizontal(const Image& image);
Image flip_vertical(const Image& image);
Image rotate90(const Image& image);   // clockwise
Image rotate180(const Image& image);
Image rotate270(const Image& image);

}  // namespace qcut
