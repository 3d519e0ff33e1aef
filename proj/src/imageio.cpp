#include "bsync/imageio.hpp"

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wdeprecated-enum-enum-conversion"
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#pragma GCC diagnostic pop

#include <cstring>

#include "bsync/errors.hpp"

namespace bsync {

GrayImage read_gray_image(const std::string& path) {
    cv::Mat m = cv::imread(path, cv::IMREAD_GRAYSCALE);
    if (m.empty()) {
        throw IoError("cannot decode image file: " + path);
    }
    GrayImage img;
    img.width = m.cols;
    img.height = m.rows;
    img.pixels.resize(static_cast<std::size_t>(m.cols) * m.rows);
    for (int r = 0; r < m.rows; ++r) {
        std::memcpy(img.pixels.data() + static_cast<std::size_t>(r) * m.cols, m.ptr<std::uint8_t>(r),
                    static_cast<std::size_t>(m.cols));
    }
    return img;
}

void write_gray_image(const std::string& path, const GrayImage& img) {
    cv::Mat m(img.height, img.width, CV_8UC1);
    for (int r = 0; r < img.height; ++r) {
        std::memcpy(m.ptr<std::uint8_t>(r), img.row(r), static_cast<std::size_t>(img.width));
    }
    if (!cv::imwrite(path, m)) {
        throw IoError("cannot write image file: " + path);
    }
}

void write_rgb_image(const std::string& path, const RgbImage& img) {
    cv::Mat m(img.height, img.width, CV_8UC3);
    for (int r = 0; r < img.height; ++r) {
        std::uint8_t* dst = m.ptr<std::uint8_t>(r);
        const std::uint8_t* src = img.pixels.data() + static_cast<std::size_t>(r) * img.width * 3;
        for (int c = 0; c < img.width; ++c) {
            dst[c * 3 + 0] = src[c * 3 + 2];  // OpenCV stores BGR
            dst[c * 3 + 1] = src[c * 3 + 1];
            dst[c * 3 + 2] = src[c * 3 + 0];
        }
    }
    if (!cv::imwrite(path, m)) {
        throw IoError("cannot write image file: " + path);
    }
}

}  // namespace bsync
