#include "ute/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

namespace ute {

bool ImageTensor::all_finite() const {
    for (double v : px)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

uint8_t quantize(double v) {
    double q = std::lround(std::fmin(std::fmax(v, 0.0), 1.0) * 255.0);
    return static_cast<uint8_t>(q);
}

}  // namespace

void write_png(const std::string& path, const ImageTensor& image) {
    check(image.h > 0 && image.w > 0, "write_png: empty image");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    check(fp != nullptr, "write_png: cannot open " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    check(png != nullptr, "write_png: png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("write_png: png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("write_png: encode failure for " + path);
    }

    png_init_io(png, fp.get());
    // fixed settings keep output byte-identical across runs
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.w), static_cast<png_uint_32>(image.h),
                 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<uint8_t> row(static_cast<size_t>(image.w) * 3);
    for (int y = 0; y < image.h; ++y) {
        for (int x = 0; x < image.w; ++x)
            for (int c = 0; c < 3; ++c) row[static_cast<size_t>(x) * 3 + c] = quantize(image.at(y, x, c));
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

ImageTensor read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    check(fp != nullptr, "decode failure: cannot open " + path);

    uint8_t header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
        throw Error("decode failure: not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    check(png != nullptr, "decode failure: png_create_read_struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error("decode failure: png_create_info_struct");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("decode failure: corrupt PNG: " + path);
    }

    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const int color = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_gray_to_rgb(png);
    if (depth == 16) png_set_strip_16(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int h = static_cast<int>(png_get_image_height(png, info));
    const int w = static_cast<int>(png_get_image_width(png, info));
    if (png_get_channels(png, info) != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("decode failure: image does not decode to 3 channels: " + path);
    }

    ImageTensor image(h, w);
    std::vector<uint8_t> row(static_cast<size_t>(w) * 3);
    for (int y = 0; y < h; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < 3; ++c)
                image.at(y, x, c) = row[static_cast<size_t>(x) * 3 + c] / 255.0;
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return image;
}

ImageTensor resize_bilinear(const ImageTensor& src, int out_h, int out_w) {
    check(out_h > 0 && out_w > 0, "resize: non-positive output size");
    if (out_h == src.h && out_w == src.w) return src;

    ImageTensor dst(out_h, out_w);
    const double sy = static_cast<double>(src.h) / out_h;
    const double sx = static_cast<double>(src.w) / out_w;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0 = static_cast<int>(std::floor(fy));
        double wy = fy - y0;
        int y1 = y0 + 1;
        y0 = std::min(std::max(y0, 0), src.h - 1);
        y1 = std::min(std::max(y1, 0), src.h - 1);
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0 = static_cast<int>(std::floor(fx));
            double wx = fx - x0;
            int x1 = x0 + 1;
            x0 = std::min(std::max(x0, 0), src.w - 1);
            x1 = std::min(std::max(x1, 0), src.w - 1);
            for (int c = 0; c < 3; ++c) {
                double top = src.at(y0, x0, c) * (1.0 - wx) + src.at(y0, x1, c) * wx;
                double bot = src.at(y1, x0, c) * (1.0 - wx) + src.at(y1, x1, c) * wx;
                dst.at(y, x, c) = top * (1.0 - wy) + bot * wy;
            }
        }
    }
    return dst;
}

ImageTensor resize_to_model_input(const ImageTensor& src, int S, int alpha) {
    check(alpha > 0 && S > 0, "resize_to_model_input: bad arguments");
    check(S % alpha == 0, "resize_to_model_input: S not divisible by downsampling factor");
    return resize_bilinear(src, S, S);
}

AnnotatedImage resize_to_model_input(const AnnotatedImage& src, int S, int alpha) {
    AnnotatedImage out;
    out.image = resize_to_model_input(src.image, S, alpha);
    const double ry = static_cast<double>(S) / src.image.h;
    const double rx = static_cast<double>(S) / src.image.w;
    for (const OcrBox& b : src.boxes) {
        BBox r;
        r.x = static_cast<int>(std::lround(b.bbox.x * rx));
        r.y = static_cast<int>(std::lround(b.bbox.y * ry));
        r.w = static_cast<int>(std::lround(b.bbox.w * rx));
        r.h = static_cast<int>(std::lround(b.bbox.h * ry));
        // clip to the new bounds
        r.x = std::min(std::max(r.x, 0), S - 1);
        r.y = std::min(std::max(r.y, 0), S - 1);
        r.w = std::max(std::min(r.w, S - r.x), 1);
        r.h = std::max(std::min(r.h, S - r.y), 1);
        out.boxes.push_back({b.text, r});
    }
    return out;
}

}  // namespace ute
