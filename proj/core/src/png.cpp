#include <png.h>

#include <cstring>

#include "shapeparts/io.hpp"

namespace shapeparts::io {

GrayImage read_png(const std::filesystem::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_file(&image, path.c_str()) == 0) {
    const std::string why = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::UnsupportedFormat, path.string() + ": " + why);
  }
  // Colour inputs are reduced to 8-bit luminance, alpha composited away.
  image.format = PNG_FORMAT_GRAY;
  std::vector<png_byte> raster(PNG_IMAGE_SIZE(image));
  if (png_image_finish_read(&image, nullptr, raster.data(), 0, nullptr) == 0) {
    const std::string why = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::UnsupportedFormat, path.string() + ": " + why);
  }
  GrayImage img{static_cast<int>(image.width), static_cast<int>(image.height), 255, {}};
  img.pixels.assign(raster.begin(), raster.end());
  return img;
}

}  // namespace shapeparts::io
