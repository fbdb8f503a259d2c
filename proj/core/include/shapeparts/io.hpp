#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shapeparts/decompose.hpp"
#include "shapeparts/domain.hpp"
#include "shapeparts/field.hpp"
#include "shapeparts/saliency.hpp"

namespace shapeparts::io {

struct GrayImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint16_t> pixels;  // row-major
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;
};

/// Reads binary (P5) or ASCII (P2) PGM, or PNG. PNG input is reduced to
/// 8-bit grayscale. Throws IoError or UnsupportedFormat.
GrayImage read_gray_image(const std::filesystem::path& path);
GrayImage parse_pnm(std::span<const std::uint8_t> bytes);
GrayImage read_png(const std::filesystem::path& path);

inline constexpr int kDefaultThreshold = 128;

/// Dark-on-light convention: a pixel is shape when its 8-bit value is below
/// `threshold`; `invert` flips to value >= threshold. Values of images with
/// maxval other than 255 are rescaled to 0..255 first.
BinaryMask threshold_image(const GrayImage& image, int threshold = kDefaultThreshold, bool invert = false);

/// Read + threshold. Throws EmptyDomain when no pixel classifies as shape.
BinaryMask read_mask(const std::filesystem::path& path, int threshold = kDefaultThreshold,
                     bool invert = false);

std::vector<std::uint8_t> encode_pgm(const GrayImage& image);  // P5, maxval kept
std::vector<std::uint8_t> encode_ppm(const RgbImage& image);   // P6
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Shape black (0), background white (255). Reads back to the same mask.
GrayImage render_mask(const BinaryMask& mask);
void write_mask_pgm(const BinaryMask& mask, const std::filesystem::path& path);

/// "rows cols" header, then one raster row per line; non-interior pixels
/// print as nan, values with 17 significant digits.
std::string format_field_text(const ScalarField& field);
void write_field_text(const ScalarField& field, const std::filesystem::path& path);

/// |w| with negatives and positives normalised separately to [0, 1], mapped to 0..255.
GrayImage render_field(const ScalarField& field);
void write_field_pgm(const ScalarField& field, const std::filesystem::path& path);

/// Members white (255), everything else black.
GrayImage render_region(const RegionMask& region);
void write_region_pgm(const RegionMask& region, const std::filesystem::path& path);

inline constexpr std::string_view kPaletteVersion = "shapeparts-24-v1";
inline constexpr Rgb kGrossColor{128, 128, 128};
inline constexpr Rgb kBackgroundColor{255, 255, 255};
extern const std::array<Rgb, 24> kPalette;

/// Peripheral label l gets kPalette[(l - 1) % 24], gross parts gray. Boundary
/// pixels take the colour of their first interior 4-neighbour (up, left,
/// right, down) and gray when they have none.
RgbImage render_labels(const Decomposition& decomposition);
void write_labels_ppm(const Decomposition& decomposition, const std::filesystem::path& path);

std::string format_parts_csv(const Decomposition& decomposition);
std::string format_saliency_csv(const SaliencyTable& table);

/// Shortest round-trip decimal form used in manifests and CSV files.
std::string format_real(double value);

}  // namespace shapeparts::io
