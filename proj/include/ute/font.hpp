#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ute/error.hpp"

namespace ute {

// Bundled dot-matrix font: 5x7 glyph cells, 1-column advance gap.
// Lowercase letters fold to their uppercase forms.
//
// The "plain" variant is the uniform style used for glyph conditioning;
// the other variants are deterministic derivations used by the synthetic
// dataset generator so that source fonts always differ from the uniform one.
enum class FontVariant { plain, bold, italic, outline, heavy, tall };

FontVariant font_variant_from_name(const std::string& name);
const char* font_variant_name(FontVariant v);

// 1-bit ink bitmap, row-major.
struct InkBitmap {
    int h = 0;
    int w = 0;
    std::vector<uint8_t> on;

    InkBitmap() = default;
    InkBitmap(int height, int width) : h(height), w(width), on(static_cast<size_t>(height) * width, 0) {}
    uint8_t get(int y, int x) const { return on[static_cast<size_t>(y) * w + x]; }
    void set(int y, int x, uint8_t v = 1) { on[static_cast<size_t>(y) * w + x] = v; }
    bool any() const {
        for (uint8_t b : on)
            if (b) return true;
        return false;
    }
};

bool font_has_char(char c);

// Raw 5x7 rows (bit 4 = leftmost column) for one character.
// Exposed so tests can rasterize through an independent code path.
const std::array<uint8_t, 7>& font_glyph_rows(char c);

// Width of the text in cells at scale 1: n*6 - 1 (no trailing gap).
int font_text_width(const std::string& text);

// Rasterizes text at integer scale in the given variant.
// Throws on characters missing from the font.
InkBitmap rasterize_text(const std::string& text, int scale, FontVariant variant);

}  // namespace ute
