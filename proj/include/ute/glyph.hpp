#pragma once

#include <string>

#include "ute/font.hpp"
#include "ute/image.hpp"
#include "ute/rng.hpp"

namespace ute {

// Uniform-font rendering of a target string: dark ink on a light background,
// centered, scaled to fit with fixed margins. Deterministic per (text, size).
struct GlyphImage {
    ImageTensor pixels;
    std::string text;
};

// Binary single-rectangle edit mask, 1 inside the region.
struct MaskImage {
    int h = 0;
    int w = 0;
    std::vector<double> m;  // values in {0,1}

    MaskImage() = default;
    MaskImage(int height, int width) : h(height), w(width), m(static_cast<size_t>(height) * width, 0.0) {}
    double at(int y, int x) const { return m[static_cast<size_t>(y) * w + x]; }
    double& at(int y, int x) { return m[static_cast<size_t>(y) * w + x]; }
    double sum() const {
        double s = 0.0;
        for (double v : m) s += v;
        return s;
    }
};

// Self-supervised training tuple: {(masked, glyph, mask), source}.
// masked == source * (1 - mask) elementwise (blank value 0), and the glyph is
// a fresh uniform-font rendering of the region's text, never a source crop.
struct EditSample {
    ImageTensor source;
    ImageTensor masked;
    MaskImage mask;
    GlyphImage glyph;
    std::string target_text;
};

inline constexpr int kGlyphCanvasH = 32;
inline constexpr int kGlyphCanvasW = 128;
inline constexpr int kGlyphMargin = 2;

GlyphImage render_glyph(const std::string& text, int canvas_h = kGlyphCanvasH,
                        int canvas_w = kGlyphCanvasW);

MaskImage make_mask(const BBox& bbox, int image_h, int image_w);

ImageTensor apply_mask(const ImageTensor& source, const MaskImage& mask);

// Picks one OCR box uniformly (rng draw mod box count) and assembles the tuple.
EditSample build_training_sample(const AnnotatedImage& annotated, Rng& rng,
                                 int glyph_h = kGlyphCanvasH, int glyph_w = kGlyphCanvasW);

}  // namespace ute
