#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "neqr/bitvec.hpp"

namespace neqr {

// SplitMix64 stream. Pinned bit-exactly so the same seed reproduces the same
// image on every platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }
};

// 2^n x 2^n grayscale image with q bits per pixel. Pixels are row-major with
// pixel (Y, X) at index Y * 2^n + X, so Y occupies the high coordinate bits.
struct GrayImage {
    uint32_t n = 0;
    uint32_t q = 0;
    std::vector<uint16_t> pixels;

    size_t side() const { return size_t{1} << n; }
    size_t pixel_count() const { return size_t{1} << (2 * n); }
    uint16_t at(size_t y, size_t x) const { return pixels[(y << n) | x]; }

    bool operator==(const GrayImage&) const = default;
};

// One bit vector per grayscale bit: plane i, bit k = bit i of pixel k. Plane i
// is exactly the minterm coefficient vector of grayscale qubit i.
struct ImagePlanes {
    uint32_t n = 0;
    uint32_t q = 0;
    std::vector<BitVec> planes;
};

// Decodes a NetPBM P5 (binary) or P2 (ASCII) grayscale file. Only square
// power-of-two dimensions are accepted; maxval <= 255 maps to q = 8 and
// larger maxval to q = 16 (two raster bytes per sample, big-endian).
GrayImage parse_pgm(std::string_view bytes);

// Deterministic random image: one SplitMix64 draw per pixel in index order,
// truncated to the low q bits.
GrayImage random_image(unsigned n, unsigned q, uint64_t seed);

ImagePlanes extract_planes(const GrayImage& img);

// Inverse of extract_planes.
GrayImage recombine(const ImagePlanes& planes);

} // namespace neqr
