#pragma once

// Lossless PNG encoding for dataset records, panels and the HTTP wire format.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm::io {

class ImageIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Gray16 {
    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> pixels;
};

struct Gray8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
};

struct Rgb8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  ///< interleaved RGB

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

std::vector<std::uint8_t> encode_png(const Gray16& image);
std::vector<std::uint8_t> encode_png(const Gray8& image);
std::vector<std::uint8_t> encode_png(const Rgb8& image);

void write_png(const std::filesystem::path& path, const Gray16& image);
void write_png(const std::filesystem::path& path, const Gray8& image);
void write_png(const std::filesystem::path& path, const Rgb8& image);

Gray16 read_png_gray16(const std::filesystem::path& path);
Gray8 read_png_gray8(const std::filesystem::path& path);

std::string base64_png(const std::vector<std::uint8_t>& png);

}  // namespace dscm::io
