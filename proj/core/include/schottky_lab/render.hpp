#pragma once

#include <string>
#include <string_view>

#include "schottky_lab/schottky.hpp"

namespace schottky_lab {

enum class ImageFormat { Svg, Ppm };

// "svg" or "ppm"; anything else throws UnsupportedFormat.
ImageFormat parse_image_format(std::string_view name);

struct RenderOptions {
  int width = 800;
  int height = 800;
};

// Draws the deepest level of the sample. SVG output holds one <circle> per
// disc; PPM output is a binary P6 raster with a comment line giving depth
// and disc count. Throws InvalidArgument for an empty sample or bad size.
std::string render_limit_set(const LimitSetSample& sample, ImageFormat format,
                             const RenderOptions& options = {});

}  // namespace schottky_lab
