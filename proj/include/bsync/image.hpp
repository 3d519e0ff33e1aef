#pragma once

#include <cstdint>
#include <vector>

namespace bsync {

// 8-bit grayscale raster, row 0 at the top.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, height * width

    static GrayImage filled(int height, int width, std::uint8_t value);

    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    const std::uint8_t* row(int r) const { return pixels.data() + static_cast<std::size_t>(r) * width; }
    std::uint8_t* row(int r) { return pixels.data() + static_cast<std::size_t>(r) * width; }
    bool empty() const { return width == 0 || height == 0; }
};

// Boolean ink mask, same orientation as GrayImage. 1 = ink.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> mask;  // row-major, values 0/1

    static BinaryImage zeros(int height, int width);

    std::uint8_t& at(int row, int col) { return mask[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t at(int row, int col) const { return mask[static_cast<std::size_t>(row) * width + col]; }
    const std::uint8_t* row(int r) const { return mask.data() + static_cast<std::size_t>(r) * width; }
    std::uint8_t* row(int r) { return mask.data() + static_cast<std::size_t>(r) * width; }
    bool empty() const { return width == 0 || height == 0; }

    std::uint64_t ink_count() const;

    // Set mask[r][c] = 1 over the half-open rectangle, clipped to bounds.
    void fill_rect(int top, int left, int height_px, int width_px);
    // Filled axis-aligned ellipse centered at (center_row, center_col).
    void fill_ellipse(double center_row, double center_col, double semi_row, double semi_col);
};

// 24-bit RGB canvas for visualization output.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, 3 bytes per pixel (R,G,B)

    static RgbImage filled(int height, int width, std::uint8_t r, std::uint8_t g, std::uint8_t b);
    void set(int row, int col, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

}  // namespace bsync
