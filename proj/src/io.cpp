// Copyright (c) 2026 The bayergrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bayergrad/io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

namespace bayergrad {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.string().c_str(), mode));
    if (!f) throw IoError("cannot open " + path.string());
    return f;
}

int quantize(float v, int maxval) {
    const float c = std::min(std::max(v, 0.0f), 1.0f);
    return static_cast<int>(std::lround(static_cast<double>(c) * maxval));
}

// ---------------------------------------------------------------- PNG ---

LoadedImage load_png(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png: out of memory");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png: out of memory");
    }
    std::vector<png_bytep> row_ptrs;
    std::vector<png_byte> data;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png: failed to decode " + path.string());
    }
    png_init_io(png, f.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    int depth = png_get_bit_depth(png, info);
    int color = png_get_color_type(png, info);

    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS) ||
        color == PNG_COLOR_TYPE_RGB_ALPHA || color == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png: alpha channels are not supported: " + path.string());
    }
    png_read_update_info(png, info);
    depth = png_get_bit_depth(png, info);
    color = png_get_color_type(png, info);
    const int channels = (color == PNG_COLOR_TYPE_RGB) ? 3 : 1;

    const std::size_t rowbytes = png_get_rowbytes(png, info);
    data.resize(rowbytes * h);
    row_ptrs.resize(h);
    for (png_uint_32 r = 0; r < h; ++r) row_ptrs[r] = data.data() + r * rowbytes;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    LoadedImage out;
    out.bit_depth = depth;
    out.image = PlanarImage(static_cast<int>(w), static_cast<int>(h), channels);
    const float scale = 1.0f / static_cast<float>((1u << depth) - 1);
    for (png_uint_32 r = 0; r < h; ++r) {
        const png_byte* row = data.data() + r * rowbytes;
        for (png_uint_32 c = 0; c < w; ++c) {
            for (int ch = 0; ch < channels; ++ch) {
                unsigned v;
                if (depth == 16) {
                    const std::size_t idx = (static_cast<std::size_t>(c) * channels + ch) * 2;
                    v = (static_cast<unsigned>(row[idx]) << 8) | row[idx + 1];
                } else {
                    v = row[static_cast<std::size_t>(c) * channels + ch];
                }
                out.image.at(ch, static_cast<int>(r), static_cast<int>(c)) = v * scale;
            }
        }
    }
    return out;
}

void save_png(const std::filesystem::path& path, const PlanarImage& img, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16) throw IoError("png: bit depth must be 8 or 16");
    FilePtr f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png: out of memory");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png: out of memory");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png: failed to encode " + path.string());
    }
    png_init_io(png, f.get());
    const int color = img.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY;
    png_set_IHDR(png, info, img.width, img.height, bit_depth, color,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const int maxval = (1 << bit_depth) - 1;
    const std::size_t bpp = static_cast<std::size_t>(img.channels) * (bit_depth / 8);
    std::vector<png_byte> row(bpp * img.width);
    for (int r = 0; r < img.height; ++r) {
        std::size_t k = 0;
        for (int c = 0; c < img.width; ++c) {
            for (int ch = 0; ch < img.channels; ++ch) {
                const int v = quantize(img.at(ch, r, c), maxval);
                if (bit_depth == 16) {
                    row[k++] = static_cast<png_byte>(v >> 8);
                    row[k++] = static_cast<png_byte>(v & 0xff);
                } else {
                    row[k++] = static_cast<png_byte>(v);
                }
            }
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

// ----------------------------------------------------------- PPM/PGM ---

int pnm_next_token(std::FILE* f) {
    int ch = std::fgetc(f);
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = std::fgetc(f);
        } else if (!std::isspace(ch)) {
            break;
        } else {
            ch = std::fgetc(f);
        }
    }
    if (ch == EOF) throw IoError("pnm: truncated header");
    int value = 0;
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + (ch - '0');
        ch = std::fgetc(f);
    }
    return value;
}

LoadedImage load_pnm(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    const int m0 = std::fgetc(f.get());
    const int m1 = std::fgetc(f.get());
    if (m0 != 'P' || (m1 != '5' && m1 != '6'))
        throw IoError("unsupported format (expected binary PGM/PPM): " + path.string());
    const int channels = (m1 == '6') ? 3 : 1;
    const int w = pnm_next_token(f.get());
    const int h = pnm_next_token(f.get());
    const int maxval = pnm_next_token(f.get());
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        throw IoError("pnm: bad header in " + path.string());
    const int bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> buf(static_cast<std::size_t>(w) * h * channels * bytes);
    if (std::fread(buf.data(), 1, buf.size(), f.get()) != buf.size())
        throw IoError("pnm: truncated file " + path.string());

    LoadedImage out;
    out.bit_depth = maxval > 255 ? 16 : 8;
    out.image = PlanarImage(w, h, channels);
    const float scale = 1.0f / maxval;
    std::size_t k = 0;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            for (int ch = 0; ch < channels; ++ch) {
                unsigned v = buf[k++];
                if (bytes == 2) v = (v << 8) | buf[k++];  // big-endian per netpbm
                out.image.at(ch, r, c) = v * scale;
            }
    return out;
}

void save_pnm(const std::filesystem::path& path, const PlanarImage& img, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16) throw IoError("pnm: bit depth must be 8 or 16");
    FilePtr f = open_file(path, "wb");
    const int maxval = (1 << bit_depth) - 1;
    std::fprintf(f.get(), "P%c\n%d %d\n%d\n", img.channels == 3 ? '6' : '5',
                 img.width, img.height, maxval);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            for (int ch = 0; ch < img.channels; ++ch) {
                const int v = quantize(img.at(ch, r, c), maxval);
                if (bit_depth == 16) {
                    const unsigned char b[2] = {static_cast<unsigned char>(v >> 8),
                                                static_cast<unsigned char>(v & 0xff)};
                    if (std::fwrite(b, 1, 2, f.get()) != 2) throw IoError("pnm: write failed");
                } else {
                    const unsigned char b = static_cast<unsigned char>(v);
                    if (std::fwrite(&b, 1, 1, f.get()) != 1) throw IoError("pnm: write failed");
                }
            }
}

std::string lower_ext(const std::filesystem::path& path) {
    std::string e = path.extension().string();
    std::transform(e.begin(), e.end(), e.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    return e;
}

}  // namespace

LoadedImage load_image(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw IoError("no such file: " + path.string());
    const std::string ext = lower_ext(path);
    if (ext == ".png") return load_png(path);
    if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") return load_pnm(path);
    throw IoError("unsupported format: " + path.string());
}

BayerImage as_bayer(const PlanarImage& img, CfaPattern pattern) {
    if (img.channels != 1)
        throw InvariantError("as_bayer: mosaic must be single-channel");
    if ((img.width & 1) || (img.height & 1))
        throw InvariantError("as_bayer: odd dimensions cannot carry a full CFA tile");
    BayerImage out(img.width, img.height, pattern);
    out.samples = img.samples;
    return out;
}

void save_image(const std::filesystem::path& path, const PlanarImage& img, int bit_depth) {
    const std::string ext = lower_ext(path);
    if (ext == ".png") return save_png(path, img, bit_depth);
    if (ext == ".ppm" || ext == ".pgm") return save_pnm(path, img, bit_depth);
    throw IoError("unsupported output format: " + path.string());
}

void save_image(const std::filesystem::path& path, const BayerImage& img, int bit_depth) {
    save_image(path, img.as_planar(), bit_depth);
}

void save_inverse_video(const std::filesystem::path& path, const PlanarImage& img) {
    PlanarImage inv = img;
    for (auto& v : inv.samples) v = 1.0f - std::min(std::max(v, 0.0f), 1.0f);
    save_image(path, inv, 8);
}

void save_float_raw(const std::filesystem::path& path, const PlanarImage& img) {
    if (img.channels != 1) throw InvariantError("save_float_raw: single-channel only");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    const std::uint32_t w = static_cast<std::uint32_t>(img.width);
    const std::uint32_t h = static_cast<std::uint32_t>(img.height);
    f.write(reinterpret_cast<const char*>(&w), 4);
    f.write(reinterpret_cast<const char*>(&h), 4);
    f.write(reinterpret_cast<const char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size() * sizeof(float)));
    if (!f) throw IoError("write failed: " + path.string());
}

PlanarImage load_float_raw(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    std::uint32_t w = 0, h = 0;
    f.read(reinterpret_cast<char*>(&w), 4);
    f.read(reinterpret_cast<char*>(&h), 4);
    PlanarImage out(static_cast<int>(w), static_cast<int>(h), 1);
    f.read(reinterpret_cast<char*>(out.samples.data()),
           static_cast<std::streamsize>(out.samples.size() * sizeof(float)));
    if (!f) throw IoError("truncated float dump: " + path.string());
    return out;
}

namespace {
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}
}  // namespace

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) f << ',';
            f << csv_escape(row[i]);
        }
        f << "\r\n";
    };
    write_row(header);
    for (const auto& row : rows) write_row(row);
    if (!f) throw IoError("write failed: " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CsvTable table;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    auto end_field = [&]() { row.push_back(field); field.clear(); };
    auto end_row = [&]() {
        end_field();
        if (!any) { table.header = row; any = true; }
        else table.rows.push_back(row);
        row.clear();
    };
    for (std::size_t i = 0; i < content.size(); ++i) {
        const char ch = content[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') { field += '"'; ++i; }
                else quoted = false;
            } else field += ch;
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            end_field();
        } else if (ch == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field += ch;
        }
    }
    if (!field.empty() || !row.empty()) end_row();
    return table;
}

std::string format_double(double v, int precision) {
    std::ostringstream ss;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    ss.setf(std::ios::fixed);
    ss.precision(precision);
    ss << v;
    return ss.str();
}

}  // namespace bayergrad
