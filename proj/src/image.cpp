#include "bsync/image.hpp"

#include <algorithm>
#include <cmath>

#include "bsync/kernels.hpp"

namespace bsync {

GrayImage GrayImage::filled(int height, int width, std::uint8_t value) {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<std::size_t>(width) * height, value);
    return img;
}

BinaryImage BinaryImage::zeros(int height, int width) {
    BinaryImage img;
    img.width = width;
    img.height = height;
    img.mask.assign(static_cast<std::size_t>(width) * height, 0);
    return img;
}

std::uint64_t BinaryImage::ink_count() const {
    return kernels::active_kernels().byte_sum(mask.data(), mask.size());
}

void BinaryImage::fill_rect(int top, int left, int height_px, int width_px) {
    const int r0 = std::max(0, top);
    const int r1 = std::min(height, top + height_px);
    const int c0 = std::max(0, left);
    const int c1 = std::min(width, left + width_px);
    for (int r = r0; r < r1; ++r) {
        std::fill(row(r) + c0, row(r) + c1, std::uint8_t{1});
    }
}

void BinaryImage::fill_ellipse(double center_row, double center_col, double semi_row,
                               double semi_col) {
    if (semi_row <= 0 || semi_col <= 0) return;
    const int r0 = std::max(0, static_cast<int>(std::floor(center_row - semi_row)));
    const int r1 = std::min(height - 1, static_cast<int>(std::ceil(center_row + semi_row)));
    for (int r = r0; r <= r1; ++r) {
        const double dy = (r - center_row) / semi_row;
        const double rem = 1.0 - dy * dy;
        if (rem < 0) continue;
        const double dx = semi_col * std::sqrt(rem);
        const int c0 = std::max(0, static_cast<int>(std::ceil(center_col - dx)));
        const int c1 = std::min(width - 1, static_cast<int>(std::floor(center_col + dx)));
        for (int c = c0; c <= c1; ++c) at(r, c) = 1;
    }
}

RgbImage RgbImage::filled(int height, int width, std::uint8_t r, std::uint8_t g,
                          std::uint8_t b) {
    RgbImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < img.pixels.size(); i += 3) {
        img.pixels[i] = r;
        img.pixels[i + 1] = g;
        img.pixels[i + 2] = b;
    }
    return img;
}

void RgbImage::set(int row, int col, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    if (row < 0 || row >= height || col < 0 || col >= width) return;
    const std::size_t i = (static_cast<std::size_t>(row) * width + col) * 3;
    pixels[i] = r;
    pixels[i + 1] = g;
    pixels[i + 2] = b;
}

}  // namespace bsync
