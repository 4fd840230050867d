#include "ute/font.hpp"

#include <cctype>
#include <map>

namespace ute {

namespace {

using Rows = std::array<uint8_t, 7>;

const std::map<char, Rows>& glyph_table() {
    static const std::map<char, Rows> table = {
        {'A', {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}},
        {'B', {0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E}},
        {'C', {0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E}},
        {'D', {0x1E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1E}},
        {'E', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F}},
        {'F', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x10}},
        {'G', {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0E}},
        {'H', {0x11, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}},
        {'I', {0x0E, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E}},
        {'J', {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C}},
        {'K', {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11}},
        {'L', {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F}},
        {'M', {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11}},
        {'N', {0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11}},
        {'O', {0x0E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}},
        {'P', {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10}},
        {'Q', {0x0E, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0D}},
        {'R', {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11}},
        {'S', {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E}},
        {'T', {0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04}},
        {'U', {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}},
        {'V', {0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04}},
        {'W', {0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0A}},
        {'X', {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11}},
        {'Y', {0x11, 0x11, 0x0A, 0x04, 0x04, 0x04, 0x04}},
        {'Z', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F}},
        {'0', {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}},
        {'1', {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}},
        {'2', {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F}},
        {'3', {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E}},
        {'4', {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}},
        {'5', {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}},
        {'6', {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}},
        {'7', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},
        {'8', {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}},
        {'9', {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}},
        {' ', {0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},
        {'.', {0x00, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x0C}},
        {',', {0x00, 0x00, 0x00, 0x00, 0x0C, 0x04, 0x08}},
        {':', {0x00, 0x0C, 0x0C, 0x00, 0x0C, 0x0C, 0x00}},
        {'-', {0x00, 0x00, 0x00, 0x1F, 0x00, 0x00, 0x00}},
        {'/', {0x01, 0x01, 0x02, 0x04, 0x08, 0x10, 0x10}},
        {'$', {0x04, 0x0F, 0x14, 0x0E, 0x05, 0x1E, 0x04}},
        {'%', {0x18, 0x19, 0x02, 0x04, 0x08, 0x13, 0x03}},
        {'!', {0x04, 0x04, 0x04, 0x04, 0x04, 0x00, 0x04}},
        {'?', {0x0E, 0x11, 0x01, 0x02, 0x04, 0x00, 0x04}},
        {'\'', {0x0C, 0x04, 0x08, 0x00, 0x00, 0x00, 0x00}},
        {'"', {0x0A, 0x0A, 0x0A, 0x00, 0x00, 0x00, 0x00}},
        {'(', {0x02, 0x04, 0x08, 0x08, 0x08, 0x04, 0x02}},
        {')', {0x08, 0x04, 0x02, 0x02, 0x02, 0x04, 0x08}},
        {'+', {0x00, 0x04, 0x04, 0x1F, 0x04, 0x04, 0x00}},
        {'=', {0x00, 0x00, 0x1F, 0x00, 0x1F, 0x00, 0x00}},
        {'&', {0x0C, 0x12, 0x14, 0x08, 0x15, 0x12, 0x0D}},
        {'*', {0x00, 0x0A, 0x04, 0x1F, 0x04, 0x0A, 0x00}},
        {'#', {0x0A, 0x0A, 0x1F, 0x0A, 0x1F, 0x0A, 0x0A}},
        {'_', {0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x1F}},
    };
    return table;
}

char fold(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

InkBitmap dilate(const InkBitmap& src, bool dx, bool dy) {
    InkBitmap out(src.h + (dy ? 1 : 0), src.w + (dx ? 1 : 0));
    for (int y = 0; y < src.h; ++y)
        for (int x = 0; x < src.w; ++x)
            if (src.get(y, x)) {
                out.set(y, x);
                if (dx) out.set(y, x + 1);
                if (dy) out.set(y + 1, x);
                if (dx && dy) out.set(y + 1, x + 1);
            }
    return out;
}

InkBitmap shear_italic(const InkBitmap& src) {
    const int max_shift = (src.h - 1) / 3;
    InkBitmap out(src.h, src.w + max_shift);
    for (int y = 0; y < src.h; ++y) {
        const int dx = (src.h - 1 - y) / 3;
        for (int x = 0; x < src.w; ++x)
            if (src.get(y, x)) out.set(y, x + dx);
    }
    return out;
}

InkBitmap outline_only(const InkBitmap& src) {
    InkBitmap out(src.h, src.w);
    for (int y = 0; y < src.h; ++y)
        for (int x = 0; x < src.w; ++x) {
            if (!src.get(y, x)) continue;
            const bool boundary = y == 0 || y == src.h - 1 || x == 0 || x == src.w - 1 ||
                                  !src.get(y - 1, x) || !src.get(y + 1, x) ||
                                  !src.get(y, x - 1) || !src.get(y, x + 1);
            if (boundary) out.set(y, x);
        }
    return out;
}

InkBitmap rasterize_base(const std::string& text, int sx, int sy) {
    check(!text.empty(), "rasterize: empty text");
    const int w = font_text_width(text) * sx;
    const int h = 7 * sy;
    InkBitmap bm(h, w);
    int cell = 0;
    for (char raw : text) {
        const char c = fold(raw);
        const auto it = glyph_table().find(c);
        check(it != glyph_table().end(), std::string("text unrenderable in the font: character '") + raw + "'");
        const Rows& rows = it->second;
        const int x0 = cell * 6 * sx;
        for (int gy = 0; gy < 7; ++gy)
            for (int gx = 0; gx < 5; ++gx)
                if (rows[gy] & (0x10 >> gx))
                    for (int py = 0; py < sy; ++py)
                        for (int px = 0; px < sx; ++px) bm.set(gy * sy + py, x0 + gx * sx + px);
        ++cell;
    }
    return bm;
}

}  // namespace

bool font_has_char(char c) { return glyph_table().count(fold(c)) != 0; }

const std::array<uint8_t, 7>& font_glyph_rows(char c) {
    const auto it = glyph_table().find(fold(c));
    check(it != glyph_table().end(), std::string("text unrenderable in the font: character '") + c + "'");
    return it->second;
}

int font_text_width(const std::string& text) {
    check(!text.empty(), "font_text_width: empty text");
    return static_cast<int>(text.size()) * 6 - 1;
}

FontVariant font_variant_from_name(const std::string& name) {
    if (name == "plain") return FontVariant::plain;
    if (name == "bold") return FontVariant::bold;
    if (name == "italic") return FontVariant::italic;
    if (name == "outline") return FontVariant::outline;
    if (name == "heavy") return FontVariant::heavy;
    if (name == "tall") return FontVariant::tall;
    throw Error("font load failure: unknown font variant '" + name + "'");
}

const char* font_variant_name(FontVariant v) {
    switch (v) {
        case FontVariant::plain: return "plain";
        case FontVariant::bold: return "bold";
        case FontVariant::italic: return "italic";
        case FontVariant::outline: return "outline";
        case FontVariant::heavy: return "heavy";
        case FontVariant::tall: return "tall";
    }
    return "plain";
}

InkBitmap rasterize_text(const std::string& text, int scale, FontVariant variant) {
    check(scale >= 1, "rasterize: scale must be >= 1");
    switch (variant) {
        case FontVariant::plain: return rasterize_base(text, scale, scale);
        case FontVariant::tall: return rasterize_base(text, scale, 2 * scale);
        case FontVariant::bold: return dilate(rasterize_base(text, scale, scale), true, false);
        case FontVariant::heavy: return dilate(rasterize_base(text, scale, scale), true, true);
        case FontVariant::italic: return shear_italic(rasterize_base(text, scale, scale));
        case FontVariant::outline: return outline_only(rasterize_base(text, scale, scale));
    }
    throw Error("rasterize: unknown variant");
}

}  // namespace ute
