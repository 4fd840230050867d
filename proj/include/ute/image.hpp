#pragma once

#include <string>
#include <vector>

#include "ute/error.hpp"

namespace ute {

// H x W x 3 image, values in [0,1], stored planar (channel, row, col).
struct ImageTensor {
    int h = 0;
    int w = 0;
    std::vector<double> px;  // size 3*h*w

    ImageTensor() = default;
    ImageTensor(int height, int width, double fill = 0.0)
        : h(height), w(width), px(static_cast<size_t>(3) * height * width, fill) {
        check(height > 0 && width > 0, "image: non-positive dimensions");
    }

    double& at(int y, int x, int c) {
        return px[(static_cast<size_t>(c) * h + y) * w + x];
    }
    double at(int y, int x, int c) const {
        return px[(static_cast<size_t>(c) * h + y) * w + x];
    }

    bool all_finite() const;
};

// [x, y, w, h] in pixels, origin top-left.
struct BBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool degenerate() const { return w < 1 || h < 1; }
    bool inside(int img_h, int img_w) const {
        return x >= 0 && y >= 0 && x + w <= img_w && y + h <= img_h;
    }
    bool operator==(const BBox& o) const {
        return x == o.x && y == o.y && w == o.w && h == o.h;
    }
};

struct OcrBox {
    std::string text;
    BBox bbox;
};

struct AnnotatedImage {
    ImageTensor image;
    std::vector<OcrBox> boxes;
};

// 8-bit RGB PNG round trip. Writing quantizes with round(v*255); reading
// maps back as byte/255, so pixels survive within 1/255 per channel.
void write_png(const std::string& path, const ImageTensor& image);
ImageTensor read_png(const std::string& path);

ImageTensor resize_bilinear(const ImageTensor& src, int out_h, int out_w);

// Square model-input resize; box coordinates rescale proportionally,
// round to nearest integer and clip to the new bounds.
AnnotatedImage resize_to_model_input(const AnnotatedImage& src, int S, int alpha = 8);
ImageTensor resize_to_model_input(const ImageTensor& src, int S, int alpha = 8);

}  // namespace ute
