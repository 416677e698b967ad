#include <bit>
#include <string>
#include <vector>

#include "doctest.h"

#include "neqr/error.hpp"
#include "neqr/image.hpp"

using namespace neqr;

namespace {

std::string p5_8bit(const std::string& header, std::initializer_list<unsigned char> raster) {
    std::string s = header;
    for (unsigned char b : raster) s.push_back(static_cast<char>(b));
    return s;
}

ErrorKind kind_of(const std::string& pgm) {
    try {
        parse_pgm(pgm);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected parse_pgm to throw for: ", pgm.substr(0, 40));
    return ErrorKind::TruncatedData;
}

} // namespace

TEST_SUITE("image") {

TEST_CASE("binary pgm decodes row-major bytes") {
    const GrayImage img = parse_pgm(p5_8bit("P5\n2 2\n255\n", {0x00, 0x40, 0x80, 0xC0}));
    CHECK(img.n == 1);
    CHECK(img.q == 8);
    CHECK(img.pixels == std::vector<uint16_t>{0, 64, 128, 192});
    CHECK(img.at(0, 1) == 64);
    CHECK(img.at(1, 0) == 128);
}

TEST_CASE("ascii pgm decodes whitespace-separated samples") {
    const GrayImage img = parse_pgm("P2\n2 2\n255\n0 1 2 3\n");
    CHECK(img.n == 1);
    CHECK(img.q == 8);
    CHECK(img.pixels == std::vector<uint16_t>{0, 1, 2, 3});

    // comments and odd whitespace anywhere in the header
    const GrayImage again = parse_pgm("P2 # magic\n# size next\n 2\t2 # why not\n255\n0 1 2 3");
    CHECK(again.pixels == img.pixels);
}

TEST_CASE("sixteen-bit samples are big-endian and set q to 16") {
    const GrayImage img =
        parse_pgm(p5_8bit("P5\n2 2\n65535\n", {0x00, 0x01, 0x01, 0x00, 0xFF, 0xFF, 0x00, 0x00}));
    CHECK(img.q == 16);
    CHECK(img.pixels == std::vector<uint16_t>{1, 256, 65535, 0});
}

TEST_CASE("every parse error path is reachable") {
    CHECK(kind_of("P6\n2 2\n255\n....") == ErrorKind::UnsupportedMagic);
    CHECK(kind_of("") == ErrorKind::UnsupportedMagic);
    CHECK(kind_of("P2\nx 2\n255\n0 0 0 0") == ErrorKind::MalformedHeader);
    CHECK(kind_of("P2\n2 4\n255\n0 0 0 0 0 0 0 0") == ErrorKind::NonSquare);
    CHECK(kind_of("P2\n3 3\n255\n0 0 0 0 0 0 0 0 0") == ErrorKind::NonPowerOfTwoDimension);
    CHECK(kind_of("P2\n1 1\n255\n0") == ErrorKind::NonPowerOfTwoDimension);
    CHECK(kind_of("P2\n2 2\n0\n0 0 0 0") == ErrorKind::MalformedHeader);
    CHECK(kind_of("P2\n2 2\n70000\n0 0 0 0") == ErrorKind::MalformedHeader);
    CHECK(kind_of("P5\n2 2\n255") == ErrorKind::MalformedHeader); // no raster separator
    CHECK(kind_of(p5_8bit("P5\n2 2\n255\n", {1, 2, 3})) == ErrorKind::TruncatedData);
    CHECK(kind_of(p5_8bit("P5\n2 2\n65535\n", {1, 2, 3, 4, 5, 6, 7})) == ErrorKind::TruncatedData);
    CHECK(kind_of("P2\n2 2\n255\n0 1 2") == ErrorKind::TruncatedData);
    CHECK(kind_of("P2\n2 2\n255\n0 1 2 xyz") == ErrorKind::TruncatedData);
    CHECK(kind_of("P2\n2 2\n255\n0 1 2 300") == ErrorKind::TruncatedData); // above maxval
}

TEST_CASE("splitmix64 produces the pinned stream") {
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xE220A8397B1DCDAFull);
    CHECK(zero.next() == 0x6E789E6AA1B965F4ull);
    CHECK(zero.next() == 0x06C45D188009454Full);
    CHECK(zero.next() == 0xF88BB8A8724C81ECull);

    SplitMix64 fortytwo(42);
    CHECK(fortytwo.next() == 0xBDD732262FEB6E95ull);
    CHECK(fortytwo.next() == 0x28EFE333B266F103ull);
}

TEST_CASE("random images are deterministic per seed and truncate to q bits") {
    const GrayImage a = random_image(1, 8, 42);
    CHECK(a.pixels == std::vector<uint16_t>{149, 3, 82, 148});
    CHECK(random_image(1, 8, 42).pixels == a.pixels);

    const GrayImage b = random_image(2, 3, 7);
    CHECK(b.pixels == std::vector<uint16_t>{7, 4, 2, 3, 2, 1, 6, 6, 1, 1, 3, 4, 6, 0, 6, 0});

    const GrayImage bits = random_image(3, 1, 11);
    for (uint16_t p : bits.pixels) CHECK(p <= 1);

    int differing = 0;
    for (uint64_t s = 0; s < 100; ++s) {
        if (random_image(5, 8, 2 * s).pixels != random_image(5, 8, 2 * s + 1).pixels) {
            ++differing;
        }
    }
    CHECK(differing == 100);
}

TEST_CASE("random image orders outside [1,16] are rejected") {
    CHECK_THROWS_AS(random_image(0, 8, 1), Error);
    CHECK_THROWS_AS(random_image(17, 8, 1), Error);
    CHECK_THROWS_AS(random_image(1, 0, 1), Error);
    CHECK_THROWS_AS(random_image(1, 17, 1), Error);
    try {
        random_image(17, 8, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderOutOfRange);
    }
}

TEST_CASE("plane extraction slices bits") {
    GrayImage img;
    img.n = 1;
    img.q = 2;
    img.pixels = {0, 1, 2, 3};
    const ImagePlanes planes = extract_planes(img);
    REQUIRE(planes.planes.size() == 2);
    CHECK(planes.planes[0].get(0) == false);
    CHECK(planes.planes[0].get(1) == true);
    CHECK(planes.planes[0].get(2) == false);
    CHECK(planes.planes[0].get(3) == true);
    CHECK(planes.planes[1].get(0) == false);
    CHECK(planes.planes[1].get(1) == false);
    CHECK(planes.planes[1].get(2) == true);
    CHECK(planes.planes[1].get(3) == true);
}

TEST_CASE("only the bottom-right pixel sets plane zero bit three") {
    GrayImage img;
    img.n = 1;
    img.q = 8;
    img.pixels = {0, 0, 0, 1}; // (Y,X) = (1,1) holds bit 0
    const ImagePlanes planes = extract_planes(img);
    CHECK(planes.planes[0].popcount() == 1);
    CHECK(planes.planes[0].get(3));
    for (uint32_t i = 1; i < 8; ++i) CHECK(planes.planes[i].popcount() == 0);
}

TEST_CASE("all-zero image yields empty planes") {
    GrayImage img;
    img.n = 2;
    img.q = 4;
    img.pixels.assign(16, 0);
    for (const auto& plane : extract_planes(img).planes) CHECK(plane.popcount() == 0);
}

TEST_CASE("extract and recombine roundtrip exhaustively at small sizes") {
    // n=1, q=2: all 4^4 images
    for (uint32_t v = 0; v < 256; ++v) {
        GrayImage img;
        img.n = 1;
        img.q = 2;
        img.pixels = {static_cast<uint16_t>(v & 3), static_cast<uint16_t>((v >> 2) & 3),
                      static_cast<uint16_t>((v >> 4) & 3), static_cast<uint16_t>((v >> 6) & 3)};
        CHECK(recombine(extract_planes(img)) == img);
    }
    // n=2, q=1: all 2^16 images
    for (uint32_t v = 0; v < 65536; ++v) {
        GrayImage img;
        img.n = 2;
        img.q = 1;
        img.pixels.resize(16);
        for (size_t k = 0; k < 16; ++k) img.pixels[k] = (v >> k) & 1;
        CHECK(recombine(extract_planes(img)) == img);
    }
}

TEST_CASE("extract and recombine roundtrip on random images") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned n = 1 + rng.next() % 4;
        const unsigned q = 1 + rng.next() % 16;
        const GrayImage img = random_image(n, q, rng.next());
        CHECK(recombine(extract_planes(img)) == img);
    }
}

TEST_CASE("plane popcounts sum to the total set bits of all pixels") {
    const GrayImage img = random_image(4, 8, 99);
    uint64_t pixel_bits = 0;
    for (uint16_t p : img.pixels) pixel_bits += static_cast<unsigned>(std::popcount(uint32_t{p}));
    uint64_t plane_bits = 0;
    for (const auto& plane : extract_planes(img).planes) plane_bits += plane.popcount();
    CHECK(plane_bits == pixel_bits);
}

} // TEST_SUITE
