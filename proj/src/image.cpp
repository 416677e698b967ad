#include "neqr/image.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <string>

#include "neqr/error.hpp"

namespace neqr {

namespace {

bool is_pgm_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Cursor over the header/ASCII sections. '#' starts a comment that runs to
// end of line and counts as whitespace.
struct Scanner {
    std::string_view s;
    size_t pos;

    void skip_space() {
        while (pos < s.size()) {
            if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') ++pos;
            } else if (is_pgm_space(s[pos])) {
                ++pos;
            } else {
                break;
            }
        }
    }

    // Reads one decimal integer after skipping whitespace/comments. Raises
    // `kind` naming `field` when no digits are present or the value overflows.
    uint64_t read_uint(const char* field, ErrorKind kind) {
        skip_space();
        uint64_t value = 0;
        auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (ec != std::errc{} || end == s.data() + pos) {
            raise(kind, std::string("expected integer for ") + field);
        }
        pos = static_cast<size_t>(end - s.data());
        return value;
    }
};

} // namespace

GrayImage parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        raise(ErrorKind::UnsupportedMagic, "magic: expected P2 or P5");
    }
    const bool binary = bytes[1] == '5';

    Scanner sc{bytes, 2};
    const uint64_t width = sc.read_uint("width", ErrorKind::MalformedHeader);
    const uint64_t height = sc.read_uint("height", ErrorKind::MalformedHeader);
    const uint64_t maxval = sc.read_uint("maxval", ErrorKind::MalformedHeader);

    if (width != height) {
        raise(ErrorKind::NonSquare,
              "width " + std::to_string(width) + " != height " + std::to_string(height));
    }
    if (width < 2 || width > 65536 || !std::has_single_bit(width)) {
        raise(ErrorKind::NonPowerOfTwoDimension, "width " + std::to_string(width));
    }
    if (maxval == 0 || maxval > 65535) {
        raise(ErrorKind::MalformedHeader, "maxval " + std::to_string(maxval));
    }

    GrayImage img;
    img.n = static_cast<uint32_t>(std::countr_zero(width));
    img.q = maxval <= 255 ? 8 : 16;
    const size_t count = width * height;
    img.pixels.resize(count);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (sc.pos >= bytes.size() || !is_pgm_space(bytes[sc.pos])) {
            raise(ErrorKind::MalformedHeader, "missing whitespace before raster");
        }
        size_t pos = sc.pos + 1;
        const size_t bpp = img.q == 8 ? 1 : 2;
        if (bytes.size() - pos < count * bpp) {
            raise(ErrorKind::TruncatedData,
                  "raster ends at pixel " + std::to_string((bytes.size() - pos) / bpp) +
                      " of " + std::to_string(count));
        }
        const auto* raster = reinterpret_cast<const unsigned char*>(bytes.data()) + pos;
        if (bpp == 1) {
            for (size_t k = 0; k < count; ++k) img.pixels[k] = raster[k];
        } else {
            // 16-bit samples are big-endian per NetPBM.
            for (size_t k = 0; k < count; ++k) {
                img.pixels[k] = static_cast<uint16_t>((raster[2 * k] << 8) | raster[2 * k + 1]);
            }
        }
    } else {
        for (size_t k = 0; k < count; ++k) {
            uint64_t v = sc.read_uint(("pixel " + std::to_string(k)).c_str(),
                                      ErrorKind::TruncatedData);
            if (v > maxval) {
                raise(ErrorKind::TruncatedData, "pixel " + std::to_string(k) + " value " +
                                                    std::to_string(v) + " exceeds maxval " +
                                                    std::to_string(maxval));
            }
            img.pixels[k] = static_cast<uint16_t>(v);
        }
    }
    return img;
}

GrayImage random_image(unsigned n, unsigned q, uint64_t seed) {
    if (n < 1 || n > 16) {
        raise(ErrorKind::OrderOutOfRange, "n=" + std::to_string(n) + " outside [1,16]");
    }
    if (q < 1 || q > 16) {
        raise(ErrorKind::OrderOutOfRange, "q=" + std::to_string(q) + " outside [1,16]");
    }
    GrayImage img;
    img.n = n;
    img.q = q;
    img.pixels.resize(img.pixel_count());
    SplitMix64 rng(seed);
    const uint16_t mask = static_cast<uint16_t>((uint32_t{1} << q) - 1);
    for (auto& p : img.pixels) {
        p = static_cast<uint16_t>(rng.next()) & mask;
    }
    return img;
}

ImagePlanes extract_planes(const GrayImage& img) {
    ImagePlanes out;
    out.n = img.n;
    out.q = img.q;
    const size_t len = img.pixel_count();
    out.planes.assign(img.q, BitVec(len));

    const size_t nwords = (len + 63) / 64;
    for (size_t w = 0; w < nwords; ++w) {
        uint64_t acc[16] = {};
        const size_t base = w * 64;
        const size_t lim = std::min<size_t>(64, len - base);
        for (size_t b = 0; b < lim; ++b) {
            const uint16_t v = img.pixels[base + b];
            for (uint32_t i = 0; i < img.q; ++i) {
                acc[i] |= uint64_t{(v >> i) & 1u} << b;
            }
        }
        for (uint32_t i = 0; i < img.q; ++i) {
            out.planes[i].words()[w] = acc[i];
        }
    }
    return out;
}

GrayImage recombine(const ImagePlanes& planes) {
    GrayImage img;
    img.n = planes.n;
    img.q = planes.q;
    img.pixels.assign(img.pixel_count(), 0);
    for (uint32_t i = 0; i < planes.q; ++i) {
        planes.planes[i].for_each_set_bit(
            [&](size_t k) { img.pixels[k] |= static_cast<uint16_t>(uint32_t{1} << i); });
    }
    return img;
}

} // namespace neqr
