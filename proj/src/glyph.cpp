#include "ute/glyph.hpp"

#include <algorithm>

namespace ute {

GlyphImage render_glyph(const std::string& text, int canvas_h, int canvas_w) {
    check(!text.empty(), "render_glyph: empty text");
    for (char c : text) check(font_has_char(c), std::string("text unrenderable in the font: '") + c + "'");

    const int avail_w = canvas_w - 2 * kGlyphMargin;
    const int avail_h = canvas_h - 2 * kGlyphMargin;
    const int w1 = font_text_width(text);
    const int scale = std::min(avail_w / w1, avail_h / 7);
    check(scale >= 1, "canvas too small for text");

    const InkBitmap bm = rasterize_text(text, scale, FontVariant::plain);
    check(bm.any(), "no renderable ink");

    GlyphImage g;
    g.text = text;
    g.pixels = ImageTensor(canvas_h, canvas_w, 1.0);
    const int x0 = (canvas_w - bm.w) / 2;
    const int y0 = (canvas_h - bm.h) / 2;
    for (int y = 0; y < bm.h; ++y)
        for (int x = 0; x < bm.w; ++x)
            if (bm.get(y, x))
                for (int c = 0; c < 3; ++c) g.pixels.at(y0 + y, x0 + x, c) = 0.0;
    return g;
}

MaskImage make_mask(const BBox& bbox, int image_h, int image_w) {
    check(!bbox.degenerate(), "degenerate box");
    check(bbox.inside(image_h, image_w), "box outside bounds");
    MaskImage m(image_h, image_w);
    for (int y = bbox.y; y < bbox.y + bbox.h; ++y)
        for (int x = bbox.x; x < bbox.x + bbox.w; ++x) m.at(y, x) = 1.0;
    return m;
}

ImageTensor apply_mask(const ImageTensor& source, const MaskImage& mask) {
    check(source.h == mask.h && source.w == mask.w, "apply_mask: shape mismatch");
    ImageTensor out = source;
    for (int y = 0; y < source.h; ++y)
        for (int x = 0; x < source.w; ++x)
            if (mask.at(y, x) != 0.0)
                for (int c = 0; c < 3; ++c) out.at(y, x, c) = 0.0;
    return out;
}

EditSample build_training_sample(const AnnotatedImage& annotated, Rng& rng, int glyph_h, int glyph_w) {
    check(!annotated.boxes.empty(), "build_training_sample: no OCR boxes");
    const size_t idx = rng.index(annotated.boxes.size());
    const OcrBox& box = annotated.boxes[idx];

    EditSample s;
    s.source = annotated.image;
    s.mask = make_mask(box.bbox, annotated.image.h, annotated.image.w);
    s.masked = apply_mask(annotated.image, s.mask);
    // regenerated in the uniform font, never cropped from the source
    s.glyph = render_glyph(box.text, glyph_h, glyph_w);
    s.target_text = box.text;
    return s;
}

}  // namespace ute
