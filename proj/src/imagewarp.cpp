#include "leafcurve/imagewarp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "leafcurve/errors.hpp"

namespace leafcurve {

namespace {

constexpr std::uint8_t kWhite = 255;

void check_dims(int width, int height, int channels) {
    if (width < 1 || height < 1) {
        throw ArgumentError("image dimensions must be at least 1x1");
    }
    if (channels != 1 && channels != 3) {
        throw ArgumentError("image must have 1 or 3 channels");
    }
}

std::string write_netpbm(const RasterImage& img, char magic) {
    std::string out = "P";
    out += magic;
    out += '\n';
    out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.data.data()), img.data.size());
    return out;
}

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    // Next whitespace-delimited token, skipping '#' comments.
    std::string_view token() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            throw FormatError("PNM header is truncated");
        }
        return bytes_.substr(start, pos_ - start);
    }

    int positive_int() {
        const std::string_view t = token();
        long long value = 0;
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw FormatError("PNM header field is not a number: '" + std::string(t) + "'");
            }
            value = value * 10 + (c - '0');
            if (value > (1LL << 30)) {
                throw FormatError("PNM header field out of range");
            }
        }
        return static_cast<int>(value);
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw FormatError("PNM header must end with a single whitespace byte");
        }
        return pos_ + 1;
    }

private:
    void skip_space() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

RasterImage read_netpbm(std::string_view bytes, std::string_view magic, int channels) {
    HeaderReader reader(bytes);
    const std::string_view got = reader.token();
    if (got != magic) {
        throw FormatError("expected " + std::string(magic) + " image, found '" + std::string(got.substr(0, 8)) + "'");
    }
    const int width = reader.positive_int();
    const int height = reader.positive_int();
    const int maxval = reader.positive_int();
    if (width < 1 || height < 1) {
        throw FormatError("PNM dimensions must be positive");
    }
    if (maxval != 255) {
        throw FormatError("only maxval 255 is supported, got " + std::to_string(maxval));
    }
    const std::size_t offset = reader.raster_offset();
    const std::size_t expected = static_cast<std::size_t>(width) * height * channels;
    if (bytes.size() - offset < expected) {
        throw FormatError("PNM raster is truncated: expected " + std::to_string(expected) + " bytes, found " +
                          std::to_string(bytes.size() - offset));
    }
    const auto* first = reinterpret_cast<const std::uint8_t*>(bytes.data() + offset);
    return RasterImage(width, height, channels, std::vector<std::uint8_t>(first, first + expected));
}

}  // namespace

RasterImage::RasterImage(int w, int h, int c, std::uint8_t fill) : width(w), height(h), channels(c) {
    check_dims(w, h, c);
    data.assign(static_cast<std::size_t>(w) * h * c, fill);
}

RasterImage::RasterImage(int w, int h, int c, std::vector<std::uint8_t> d)
    : width(w), height(h), channels(c), data(std::move(d)) {
    check_dims(w, h, c);
    if (data.size() != static_cast<std::size_t>(w) * h * c) {
        throw ArgumentError("image data length does not match width * height * channels");
    }
}

std::string write_pgm(const RasterImage& img) {
    if (img.channels != 1) {
        throw ArgumentError("PGM needs a single-channel image");
    }
    return write_netpbm(img, '5');
}

std::string write_ppm(const RasterImage& img) {
    if (img.channels != 3) {
        throw ArgumentError("PPM needs a three-channel image");
    }
    return write_netpbm(img, '6');
}

RasterImage read_pgm(std::string_view bytes) { return read_netpbm(bytes, "P5", 1); }

RasterImage read_ppm(std::string_view bytes) { return read_netpbm(bytes, "P6", 3); }

RasterImage read_pnm(std::string_view bytes) {
    if (bytes.substr(0, 2) == "P6") {
        return read_ppm(bytes);
    }
    return read_pgm(bytes);
}

std::string write_pnm(const RasterImage& img) { return img.channels == 3 ? write_ppm(img) : write_pgm(img); }

std::vector<double> dewarp_columns(const FlattenMap& map, int src_width, int out_width) {
    if (src_width < 1 || out_width < 1) {
        throw ArgumentError("image widths must be positive");
    }
    const auto [s_lo, s_hi] = map.s_range();
    const double u0 = map.u_first();
    const double du = map.u_last() - u0;
    std::vector<double> columns(static_cast<std::size_t>(out_width));
    for (int j = 0; j < out_width; ++j) {
        const double s = s_lo + (j + 0.5) / out_width * (s_hi - s_lo);
        const double nu = (map.forward(s) - u0) / du;
        columns[static_cast<std::size_t>(j)] = nu * (src_width - 1);
    }
    return columns;
}

std::vector<double> bend_columns(const FlattenMap& map, int src_width, int out_width) {
    if (src_width < 1 || out_width < 1) {
        throw ArgumentError("image widths must be positive");
    }
    const auto [s_lo, s_hi] = map.s_range();
    const auto [u_min, u_max] = map.u_range();
    const double u0 = map.u_first();
    const double du = map.u_last() - u0;
    std::vector<double> columns(static_cast<std::size_t>(out_width));
    for (int j = 0; j < out_width; ++j) {
        const double nu = out_width == 1 ? 0.5 : static_cast<double>(j) / (out_width - 1);
        const double u = std::clamp(u0 + nu * du, u_min, u_max);
        const double s = map.inverse(u);
        columns[static_cast<std::size_t>(j)] = (s - s_lo) / (s_hi - s_lo) * src_width - 0.5;
    }
    return columns;
}

RasterImage remap_columns(const RasterImage& img, std::span<const double> columns, ResampleMode mode) {
    const int out_width = static_cast<int>(columns.size());
    RasterImage out(out_width, img.height, img.channels, kWhite);
    const double last = img.width - 1;
    const int ch = img.channels;

    // Per-column source taps are shared by every row.
    struct Tap {
        int x0;
        int x1;
        double w1;
        bool fill;
    };
    std::vector<Tap> taps(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        double x = columns[j];
        if (!(x >= -0.5 && x <= last + 0.5)) {
            taps[j] = {0, 0, 0.0, true};
            continue;
        }
        x = std::clamp(x, 0.0, last);
        if (mode == ResampleMode::Nearest) {
            const int xi = static_cast<int>(std::lround(x));
            taps[j] = {xi, xi, 0.0, false};
        } else {
            const int x0 = static_cast<int>(std::floor(x));
            const int x1 = std::min(x0 + 1, img.width - 1);
            taps[j] = {x0, x1, x - x0, false};
        }
    }

    for (int y = 0; y < img.height; ++y) {
        for (int j = 0; j < out_width; ++j) {
            const Tap& t = taps[static_cast<std::size_t>(j)];
            if (t.fill) {
                continue;
            }
            for (int c = 0; c < ch; ++c) {
                const double a = img.at(t.x0, y, c);
                const double b = img.at(t.x1, y, c);
                const double v = a + t.w1 * (b - a);
                out.at(j, y, c) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
            }
        }
    }
    return out;
}

RasterImage dewarp_image(const RasterImage& img, const FlattenMap& map, ResampleMode mode, int out_width) {
    const auto columns = dewarp_columns(map, img.width, out_width);
    return remap_columns(img, columns, mode);
}

RasterImage bend_image(const RasterImage& img, const FlattenMap& map, ResampleMode mode, int out_width) {
    const auto columns = bend_columns(map, img.width, out_width);
    return remap_columns(img, columns, mode);
}

}  // namespace leafcurve
