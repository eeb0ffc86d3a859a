#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leafcurve/flattenmap.hpp"

namespace leafcurve {

/// Row-major 8-bit image, 1 (gray) or 3 (RGB) interleaved channels.
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> data;

    RasterImage() = default;
    RasterImage(int width, int height, int channels, std::uint8_t fill = 0);
    RasterImage(int width, int height, int channels, std::vector<std::uint8_t> data);

    std::uint8_t& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

enum class ResampleMode { Nearest, Linear };

/// Binary Netpbm: P5 for gray, P6 for RGB, maxval 255.
/// Writers emit the header "P5\n<w> <h>\n255\n" (or P6) and the raw samples.
std::string write_pgm(const RasterImage& img);
std::string write_ppm(const RasterImage& img);
RasterImage read_pgm(std::string_view bytes);
RasterImage read_ppm(std::string_view bytes);
/// Dispatches on the magic number (P5 or P6).
RasterImage read_pnm(std::string_view bytes);
std::string write_pnm(const RasterImage& img);

/// Source column for every output column of a dewarp: output column j is
/// the flat coordinate s_j = s_lo + (j + 0.5) / out_width * (s_hi - s_lo); its
/// source is normalize(forward(s_j)) * (src_width - 1), where normalize maps
/// u_first -> 0 and u_last -> 1.
std::vector<double> dewarp_columns(const FlattenMap& map, int src_width, int out_width);

/// Mirror of dewarp_columns: bent column j has normalised projection
/// j / (out_width - 1) (0.5 for a single column); its source is the flat
/// column (s - s_lo) / (s_hi - s_lo) * src_width - 0.5 with s = inverse(u_j).
std::vector<double> bend_columns(const FlattenMap& map, int src_width, int out_width);

/// Resamples every row at the given source column positions. Positions
/// within half a pixel outside the image clamp to the edge column; positions
/// further out (or NaN) fill with white.
RasterImage remap_columns(const RasterImage& img, std::span<const double> columns, ResampleMode mode);

/// Flattens a bent page image: output columns are uniform in flat arc length.
RasterImage dewarp_image(const RasterImage& img, const FlattenMap& map, ResampleMode mode, int out_width);

/// Bends a flat page image: output columns are uniform in projected coordinate.
RasterImage bend_image(const RasterImage& img, const FlattenMap& map, ResampleMode mode, int out_width);

}  // namespace leafcurve
