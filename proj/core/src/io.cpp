#include "shapeparts/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace shapeparts::io {

namespace {

class PnmTokenizer {
 public:
  explicit PnmTokenizer(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long number() {
    skip_space_and_comments();
    const auto start = pos_;
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) throw Error(ErrorCode::UnsupportedFormat, "PNM header value too large");
      ++pos_;
    }
    if (pos_ == start) throw Error(ErrorCode::UnsupportedFormat, "malformed PNM header");
    return value;
  }

  std::size_t& pos() noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint8_t to_byte(double unit) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(unit, 0.0, 1.0) * 255.0));
}

}  // namespace

GrayImage parse_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(ErrorCode::UnsupportedFormat, "expected a P2 or P5 graymap");
  }
  const bool binary = bytes[1] == '5';
  PnmTokenizer tok(bytes.subspan(2));
  GrayImage img;
  img.width = static_cast<int>(tok.number());
  img.height = static_cast<int>(tok.number());
  img.maxval = static_cast<int>(tok.number());
  if (img.width < 1 || img.height < 1) throw Error(ErrorCode::UnsupportedFormat, "PNM image has zero size");
  if (img.maxval < 1 || img.maxval > 65535) throw Error(ErrorCode::UnsupportedFormat, "PNM maxval out of range");
  const auto count = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
  img.pixels.resize(count);

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    auto pos = tok.pos() + 2 + 1;
    const std::size_t depth = img.maxval > 255 ? 2 : 1;
    if (bytes.size() < pos + count * depth) throw Error(ErrorCode::UnsupportedFormat, "truncated P5 raster");
    for (std::size_t i = 0; i < count; ++i) {
      img.pixels[i] = depth == 1 ? bytes[pos + i]
                                 : static_cast<std::uint16_t>((bytes[pos + 2 * i] << 8) | bytes[pos + 2 * i + 1]);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const long v = tok.number();
      if (v > img.maxval) throw Error(ErrorCode::UnsupportedFormat, "P2 sample exceeds maxval");
      img.pixels[i] = static_cast<std::uint16_t>(v);
    }
  }
  for (const auto v : img.pixels) {
    if (v > img.maxval) throw Error(ErrorCode::UnsupportedFormat, "P5 sample exceeds maxval");
  }
  return img;
}

GrayImage read_gray_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  static constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::equal(std::begin(kPngMagic), std::end(kPngMagic), bytes.begin())) {
    return read_png(path);
  }
  return parse_pnm(bytes);
}

BinaryMask threshold_image(const GrayImage& image, int threshold, bool invert) {
  if (threshold < 0 || threshold > 255) throw Error(ErrorCode::InvalidArgument, "threshold must lie in 0..255");
  std::vector<std::uint8_t> cells(image.pixels.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    long v = image.pixels[i];
    if (image.maxval != 255) v = (v * 255 + image.maxval / 2) / image.maxval;
    const bool dark = v < threshold;
    cells[i] = (dark != invert) ? 1 : 0;
  }
  return BinaryMask(image.width, image.height, std::move(cells));
}

BinaryMask read_mask(const std::filesystem::path& path, int threshold, bool invert) {
  auto mask = threshold_image(read_gray_image(path), threshold, invert);
  if (mask.shape_count() == 0) throw Error(ErrorCode::EmptyDomain, "no shape pixel in " + path.string());
  return mask;
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n" + std::to_string(image.maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (const auto v : image.pixels) {
    if (image.maxval > 255) out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  return out;
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& image) {
  const std::string header = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + 3 * image.pixels.size());
  for (const auto& px : image.pixels) {
    out.push_back(px.r);
    out.push_back(px.g);
    out.push_back(px.b);
  }
  return out;
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  write_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

GrayImage render_mask(const BinaryMask& mask) {
  GrayImage img{mask.width(), mask.height(), 255, {}};
  img.pixels.reserve(mask.cells().size());
  for (const auto c : mask.cells()) img.pixels.push_back(c ? 0 : 255);
  return img;
}

void write_mask_pgm(const BinaryMask& mask, const std::filesystem::path& path) {
  write_bytes(path, encode_pgm(render_mask(mask)));
}

std::string format_field_text(const ScalarField& field) {
  const auto& domain = *field.domain();
  std::string out = std::to_string(domain.height()) + " " + std::to_string(domain.width()) + "\n";
  char buf[32];
  for (int r = 0; r < domain.height(); ++r) {
    for (int c = 0; c < domain.width(); ++c) {
      if (c > 0) out += ' ';
      const auto k = domain.interior_index(r, c);
      if (k == DomainGrid::kNone) {
        out += "nan";
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", field[static_cast<std::size_t>(k)]);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

void write_field_text(const ScalarField& field, const std::filesystem::path& path) {
  write_text(path, format_field_text(field));
}

GrayImage render_field(const ScalarField& field) {
  const auto& domain = *field.domain();
  double most_negative = 0.0;
  double most_positive = 0.0;
  for (const double v : field.values()) {
    most_negative = std::min(most_negative, v);
    most_positive = std::max(most_positive, v);
  }
  GrayImage img{domain.width(), domain.height(), 255, {}};
  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 0);
  for (std::size_t k = 0; k < field.size(); ++k) {
    const double v = field[k];
    double unit = 0.0;
    if (v < 0.0) unit = v / most_negative;
    if (v > 0.0) unit = v / most_positive;
    const auto p = domain.pixel(k);
    img.pixels[static_cast<std::size_t>(p.row) * img.width + p.col] = to_byte(unit);
  }
  return img;
}

void write_field_pgm(const ScalarField& field, const std::filesystem::path& path) {
  write_bytes(path, encode_pgm(render_field(field)));
}

GrayImage render_region(const RegionMask& region) {
  const auto& domain = *region.domain();
  GrayImage img{domain.width(), domain.height(), 255, {}};
  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 0);
  for (std::size_t k = 0; k < region.size(); ++k) {
    if (!region.contains(k)) continue;
    const auto p = domain.pixel(k);
    img.pixels[static_cast<std::size_t>(p.row) * img.width + p.col] = 255;
  }
  return img;
}

void write_region_pgm(const RegionMask& region, const std::filesystem::path& path) {
  write_bytes(path, encode_pgm(render_region(region)));
}

// Saturated hues, none of them gray.
const std::array<Rgb, 24> kPalette = {{
    {230, 25, 75},   {60, 180, 75},   {255, 225, 25},  {0, 130, 200},   {245, 130, 48},  {145, 30, 180},
    {70, 240, 240},  {240, 50, 230},  {210, 245, 60},  {250, 190, 212}, {0, 128, 128},   {220, 190, 255},
    {170, 110, 40},  {255, 250, 200}, {128, 0, 0},     {170, 255, 195}, {128, 128, 0},   {255, 215, 180},
    {0, 0, 128},     {255, 99, 71},   {0, 255, 127},   {255, 0, 255},   {30, 144, 255},  {255, 165, 0},
}};

RgbImage render_labels(const Decomposition& decomposition) {
  const auto& domain = *decomposition.domain;
  const auto colour_of = [&](std::int32_t label) {
    const auto& part = decomposition.part(label);
    if (part.sign_class == SignClass::Gross) return kGrossColor;
    return kPalette[static_cast<std::size_t>(label - 1) % kPalette.size()];
  };
  RgbImage img{domain.width(), domain.height(), {}};
  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, kBackgroundColor);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      auto& px = img.pixels[static_cast<std::size_t>(r) * img.width + c];
      switch (domain.kind(r, c)) {
        case PixelKind::Background:
          break;
        case PixelKind::Interior:
          px = colour_of(decomposition.labels[static_cast<std::size_t>(domain.interior_index(r, c))]);
          break;
        case PixelKind::Boundary: {
          px = kGrossColor;
          for (const auto& [dr, dc] : {std::pair{-1, 0}, {0, -1}, {0, 1}, {1, 0}}) {
            const auto k = domain.interior_index(r + dr, c + dc);
            if (k != DomainGrid::kNone) {
              px = colour_of(decomposition.labels[static_cast<std::size_t>(k)]);
              break;
            }
          }
          break;
        }
      }
    }
  }
  return img;
}

void write_labels_ppm(const Decomposition& decomposition, const std::filesystem::path& path) {
  write_bytes(path, encode_ppm(render_labels(decomposition)));
}

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_parts_csv(const Decomposition& decomposition) {
  std::ostringstream out;
  out << "label,class,seed_row,seed_col,area,min_omega,saliency\n";
  for (const auto& part : decomposition.parts) {
    out << part.label << ',' << (part.sign_class == SignClass::Peripheral ? "peripheral" : "gross") << ','
        << part.seed_pixel.row << ',' << part.seed_pixel.col << ',' << part.area << ','
        << format_real(part.min_omega) << ',' << (part.saliency ? format_real(*part.saliency) : "") << '\n';
  }
  return out.str();
}

std::string format_saliency_csv(const SaliencyTable& table) {
  std::ostringstream out;
  out << "label,seed_row,seed_col,birth,death,lifespan,lifespan_normalized,area\n";
  for (const auto& row : table) {
    out << row.label << ',' << row.seed.row << ',' << row.seed.col << ',' << format_real(row.birth) << ','
        << format_real(row.death) << ',' << format_real(row.lifespan) << ','
        << format_real(row.lifespan_normalized) << ',' << row.area << '\n';
  }
  return out.str();
}

}  // namespace shapeparts::io
