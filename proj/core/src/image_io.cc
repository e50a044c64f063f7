/*
 * Copyright 2026 The VForest Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vforest/image_io.h"

#include <png.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "vforest/error.h"

namespace vforest {

namespace {

static_assert(std::endian::native == std::endian::little, "PFM/PLY writers assume a little-endian host");

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr OpenFile(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
  return f;
}

[[noreturn]] void PngError(png_structp png, png_const_charp msg) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  if (what != nullptr) *what = msg;
  png_longjmp(png, 1);
}

void PngWarning(png_structp, png_const_charp) {}

// Writes rows of `bit_depth`-bit samples. `rows` point into caller memory.
void WritePngRows(const std::filesystem::path& path, int width, int height, int color_type, int bit_depth,
                  std::vector<png_bytep>& rows, bool swap16) {
  FilePtr f = OpenFile(path, "wb");
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, PngError, PngWarning);
  if (png == nullptr) throw IoError("libpng: cannot create write struct");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng: cannot create info struct");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("writing " + path.string() + ": " + error);
  }
  png_init_io(png, f.get());
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), bit_depth, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (swap16) png_set_swap(png);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(f.get()) != 0) throw IoError("writing " + path.string() + " failed");
}

struct DecodedPng {
  int width = 0;
  int height = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<unsigned char> bytes;  // host-endian samples
};

DecodedPng DecodePng(const std::filesystem::path& path) {
  FilePtr f = OpenFile(path, "rb");
  unsigned char sig[8];
  if (std::fread(sig, 1, 8, f.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw IoError(path.string() + " is not a PNG file");
  }
  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, PngError, PngWarning);
  if (png == nullptr) throw IoError("libpng: cannot create read struct");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng: cannot create info struct");
  }
  DecodedPng out;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("reading " + path.string() + ": " + error);
  }
  png_init_io(png, f.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.bit_depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && out.bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (out.bit_depth == 16) png_set_swap(png);
  png_read_update_info(png, info);
  out.bit_depth = png_get_bit_depth(png, info);
  out.channels = png_get_channels(png, info);
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  out.bytes.resize(row_bytes * out.height);
  rows.resize(out.height);
  for (int y = 0; y < out.height; ++y) rows[y] = out.bytes.data() + row_bytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

}  // namespace

void WritePng8(const std::filesystem::path& path, const Raster<std::uint8_t>& image) {
  if (image.channels != 1 && image.channels != 3) throw IoError("8-bit PNG needs 1 or 3 channels");
  if (image.width <= 0 || image.height <= 0) throw IoError("cannot write an empty PNG");
  std::vector<png_bytep> rows(image.height);
  const std::size_t stride = static_cast<std::size_t>(image.width) * image.channels;
  for (int y = 0; y < image.height; ++y) {
    rows[y] = const_cast<png_bytep>(image.data.data() + stride * y);
  }
  WritePngRows(path, image.width, image.height, image.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, 8,
               rows, false);
}

void WritePng16(const std::filesystem::path& path, const Gray16Image& image) {
  if (image.channels != 1) throw IoError("16-bit PNG must be single-channel");
  if (image.width <= 0 || image.height <= 0) throw IoError("cannot write an empty PNG");
  std::vector<png_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = reinterpret_cast<png_bytep>(const_cast<std::uint16_t*>(image.data.data() +
                                                                     static_cast<std::size_t>(image.width) * y));
  }
  WritePngRows(path, image.width, image.height, PNG_COLOR_TYPE_GRAY, 16, rows, true);
}

Raster<std::uint8_t> ReadPng8(const std::filesystem::path& path) {
  DecodedPng d = DecodePng(path);
  if (d.bit_depth != 8) throw IoError(path.string() + ": expected an 8-bit PNG");
  Raster<std::uint8_t> img;
  img.width = d.width;
  img.height = d.height;
  img.channels = d.channels;
  img.data = std::move(d.bytes);
  return img;
}

Gray16Image ReadPng16(const std::filesystem::path& path) {
  DecodedPng d = DecodePng(path);
  if (d.bit_depth != 16 || d.channels != 1) throw IoError(path.string() + ": expected a 16-bit grayscale PNG");
  Gray16Image img(d.width, d.height, 1);
  std::memcpy(img.data.data(), d.bytes.data(), img.data.size() * sizeof(std::uint16_t));
  return img;
}

void WritePfm(const std::filesystem::path& path, const DepthImage& depth) {
  if (depth.channels != 1) throw IoError("PFM writer expects a single-channel image");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string());
  out << "Pf\n" << depth.width << ' ' << depth.height << "\n-1.0\n";
  for (int y = depth.height - 1; y >= 0; --y) {
    out.write(reinterpret_cast<const char*>(depth.data.data() + static_cast<std::size_t>(y) * depth.width),
              static_cast<std::streamsize>(sizeof(float) * depth.width));
  }
  if (!out) throw IoError("writing " + path.string() + " failed");
}

DepthImage ReadPfm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string magic;
  int w = 0;
  int h = 0;
  double scale = 0.0;
  in >> magic >> w >> h >> scale;
  in.get();  // single whitespace byte before the payload
  if (!in || magic != "Pf" || w <= 0 || h <= 0) throw IoError(path.string() + ": malformed PFM header");
  if (scale >= 0.0) throw IoError(path.string() + ": big-endian PFM is not supported");
  DepthImage depth(w, h, 1);
  for (int y = h - 1; y >= 0; --y) {
    in.read(reinterpret_cast<char*>(depth.data.data() + static_cast<std::size_t>(y) * w),
            static_cast<std::streamsize>(sizeof(float) * w));
  }
  if (!in) throw IoError(path.string() + ": truncated PFM payload");
  return depth;
}

void WriteLidarPly(const std::filesystem::path& path, const LidarScan& scan) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string());
  out << "ply\nformat binary_little_endian 1.0\n"
      << "comment vforest lidar scan\n"
      << "element vertex " << scan.points.size() << '\n'
      << "property float x\nproperty float y\nproperty float z\n"
      << "property ushort instance_id\nproperty uchar ring\nproperty float azimuth\n"
      << "end_header\n";
  for (const LidarPoint& p : scan.points) {
    char rec[19];
    const float xyz[3] = {static_cast<float>(p.position_m.x), static_cast<float>(p.position_m.y),
                          static_cast<float>(p.position_m.z)};
    std::memcpy(rec, xyz, 12);
    std::memcpy(rec + 12, &p.instance_id, 2);
    std::memcpy(rec + 14, &p.ring, 1);
    std::memcpy(rec + 15, &p.azimuth_rad, 4);
    out.write(rec, sizeof(rec));
  }
  if (!out) throw IoError("writing " + path.string() + " failed");
}

std::vector<LidarPoint> ReadLidarPly(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::size_t count = 0;
  bool ok_format = false;
  while (std::getline(in, line)) {
    if (line.rfind("format binary_little_endian", 0) == 0) ok_format = true;
    if (line.rfind("element vertex ", 0) == 0) count = std::stoul(line.substr(15));
    if (line == "end_header") break;
  }
  if (!ok_format || !in) throw IoError(path.string() + ": not a binary little-endian PLY");
  std::vector<LidarPoint> points(count);
  for (LidarPoint& p : points) {
    char rec[19];
    in.read(rec, sizeof(rec));
    float xyz[3];
    std::memcpy(xyz, rec, 12);
    std::memcpy(&p.instance_id, rec + 12, 2);
    std::memcpy(&p.ring, rec + 14, 1);
    std::memcpy(&p.azimuth_rad, rec + 15, 4);
    p.position_m = {xyz[0], xyz[1], xyz[2]};
  }
  if (!in) throw IoError(path.string() + ": truncated PLY payload");
  return points;
}

}  // namespace vforest
