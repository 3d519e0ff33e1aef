#pragma once

#include <string>

#include "bsync/image.hpp"

namespace bsync {

// Decode any supported raster format (PNG, JPEG, TIFF, ...) to grayscale by
// luminance. Throws IoError naming the path on failure.
GrayImage read_gray_image(const std::string& path);

// Encoders pick the container from the file extension.
void write_gray_image(const std::string& path, const GrayImage& img);
void write_rgb_image(const std::string& path, const RgbImage& img);

}  // namespace bsync
