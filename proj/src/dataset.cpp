#include "ute/dataset.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "ute/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace ute {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("parse failure in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    check(out.good(), "cannot write " + path);
    out << text;
}

}  // namespace

std::string DatasetManifest::resolve(const std::string& rel) const {
    if (root.empty()) return rel;
    return (fs::path(root) / rel).string();
}

std::vector<OcrBox> read_annotations(const std::string& path) {
    const json j = read_json_file(path);
    check(j.is_array(), "annotation file must be a JSON array: " + path);
    std::vector<OcrBox> boxes;
    for (const auto& item : j) {
        OcrBox b;
        b.text = item.at("text").get<std::string>();
        const auto& bb = item.at("bbox");
        check(bb.is_array() && bb.size() == 4, "bbox must be [x,y,w,h]: " + path);
        b.bbox = {bb[0].get<int>(), bb[1].get<int>(), bb[2].get<int>(), bb[3].get<int>()};
        boxes.push_back(std::move(b));
    }
    return boxes;
}

void write_annotations(const std::string& path, const std::vector<OcrBox>& boxes) {
    ordered_json arr = ordered_json::array();
    for (const OcrBox& b : boxes) {
        ordered_json item;
        item["text"] = b.text;
        item["bbox"] = {b.bbox.x, b.bbox.y, b.bbox.w, b.bbox.h};
        arr.push_back(std::move(item));
    }
    write_text_file(path, arr.dump(2) + "\n");
}

AnnotatedImage load_annotated_image(const std::string& image_path,
                                    const std::string& annotation_path) {
    AnnotatedImage a;
    a.image = read_png(image_path);
    a.boxes = read_annotations(annotation_path);
    for (const OcrBox& b : a.boxes) {
        check(!b.text.empty(), "empty text field in " + annotation_path);
        check(!b.bbox.degenerate(), "degenerate box in " + annotation_path);
        check(b.bbox.inside(a.image.h, a.image.w), "box outside bounds in " + annotation_path);
    }
    return a;
}

AnnotatedImage load_entry(const DatasetManifest& manifest, size_t index) {
    check(index < manifest.entries.size(), "manifest index out of range");
    const ManifestEntry& e = manifest.entries[index];
    return load_annotated_image(manifest.resolve(e.image_path), manifest.resolve(e.annotation_path));
}

DatasetManifest read_manifest(const std::string& path) {
    const json j = read_json_file(path);
    DatasetManifest m;
    m.split = j.at("split").get<std::string>();
    m.seed = j.at("seed").get<uint64_t>();
    m.root = fs::path(path).parent_path().string();
    std::set<std::string> seen;
    for (const auto& e : j.at("entries")) {
        ManifestEntry entry{e.at("image").get<std::string>(), e.at("annotations").get<std::string>()};
        check(seen.insert(entry.image_path).second,
              "duplicate image path in manifest: " + entry.image_path);
        check(fs::exists(m.resolve(entry.image_path)), "manifest path does not resolve: " + entry.image_path);
        check(fs::exists(m.resolve(entry.annotation_path)),
              "manifest path does not resolve: " + entry.annotation_path);
        m.entries.push_back(std::move(entry));
    }
    return m;
}

void write_manifest(const std::string& path, const DatasetManifest& manifest) {
    ordered_json j;
    j["split"] = manifest.split;
    j["seed"] = manifest.seed;
    ordered_json entries = ordered_json::array();
    for (const ManifestEntry& e : manifest.entries) {
        ordered_json item;
        item["image"] = e.image_path;
        item["annotations"] = e.annotation_path;
        entries.push_back(std::move(item));
    }
    j["entries"] = std::move(entries);
    write_text_file(path, j.dump(2) + "\n");
}

const std::vector<std::string>& default_vocabulary() {
    static const std::vector<std::string> vocab = {
        "OPEN", "SALE", "MENU", "EXIT", "CAFE", "BOOK", "FISH", "GOLD", "HAND", "JUMP",
        "KIND", "LAMP", "MOON", "NINE", "PARK", "QUIZ", "ROAD", "STAR", "WOLF", "CLOSE",
    };
    return vocab;
}

const std::vector<FontVariant>& default_dataset_fonts() {
    static const std::vector<FontVariant> fonts = {
        FontVariant::bold, FontVariant::italic, FontVariant::outline,
        FontVariant::heavy, FontVariant::tall,
    };
    return fonts;
}

namespace {

struct PlacedWord {
    std::string text;
    BBox box;
};

// Tight ink bbox of a bitmap pasted at (x0, y0).
BBox ink_bbox(const InkBitmap& bm, int x0, int y0) {
    int min_x = bm.w, max_x = -1, min_y = bm.h, max_y = -1;
    for (int y = 0; y < bm.h; ++y)
        for (int x = 0; x < bm.w; ++x)
            if (bm.get(y, x)) {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
    check(max_x >= 0, "ink_bbox: empty bitmap");
    return {x0 + min_x, y0 + min_y, max_x - min_x + 1, max_y - min_y + 1};
}

bool boxes_too_close(const BBox& a, const BBox& b, int gap) {
    return a.x < b.x + b.w + gap && b.x < a.x + a.w + gap &&
           a.y < b.y + b.h + gap && b.y < a.y + a.h + gap;
}

}  // namespace

DatasetManifest generate_synthetic_dataset(const SyntheticConfig& config) {
    check(!config.vocabulary.empty() || config.n_images == 0, "vocabulary must be non-empty");
    check(!config.fonts.empty() || config.n_images == 0, "at least one font required");
    check(!config.out_dir.empty(), "output directory required");
    check(config.size >= 16, "canvas too small for requested word");

    fs::create_directories(fs::path(config.out_dir) / "images");
    fs::create_directories(fs::path(config.out_dir) / "annotations");

    DatasetManifest manifest;
    manifest.split = config.split;
    manifest.seed = config.seed;
    manifest.root = config.out_dir;

    const int S = config.size;
    for (int i = 0; i < config.n_images; ++i) {
        Rng rng(Rng::derive(config.seed, static_cast<uint64_t>(i)));

        ImageTensor img(S, S);
        double bg[3];
        for (int c = 0; c < 3; ++c) bg[c] = rng.uniform(0.72, 1.0);
        for (int y = 0; y < S; ++y)
            for (int x = 0; x < S; ++x)
                for (int c = 0; c < 3; ++c) img.at(y, x, c) = bg[c];

        const int want = rng.uniform_int(1, 3);
        std::vector<PlacedWord> placed;
        std::vector<OcrBox> boxes;
        for (int wi = 0; wi < want; ++wi) {
            const std::string& word = config.vocabulary[rng.index(config.vocabulary.size())];
            const FontVariant font = config.fonts[rng.index(config.fonts.size())];
            double ink[3];
            for (int c = 0; c < 3; ++c) ink[c] = rng.uniform(0.0, 0.35);

            // largest scale that fits with a 1px margin, then a random pick below it
            int max_scale = config.min_scale;
            for (int s = config.max_scale; s >= config.min_scale; --s) {
                const InkBitmap probe = rasterize_text(word, s, font);
                if (probe.w <= S - 2 && probe.h <= S - 2) {
                    max_scale = s;
                    break;
                }
                if (s == config.min_scale) max_scale = 0;
            }
            if (max_scale < config.min_scale) {
                check(wi > 0, "canvas too small for requested word: " + word);
                continue;
            }
            const int scale = rng.uniform_int(config.min_scale, max_scale);
            const InkBitmap bm = rasterize_text(word, scale, font);
            if (bm.w > S - 2 || bm.h > S - 2) {
                check(wi > 0, "canvas too small for requested word: " + word);
                continue;
            }

            bool done = false;
            for (int attempt = 0; attempt < 40 && !done; ++attempt) {
                const int x0 = rng.uniform_int(1, S - 1 - bm.w);
                const int y0 = rng.uniform_int(1, S - 1 - bm.h);
                const BBox candidate = ink_bbox(bm, x0, y0);
                bool clash = false;
                for (const PlacedWord& p : placed)
                    if (boxes_too_close(candidate, p.box, 2)) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                for (int y = 0; y < bm.h; ++y)
                    for (int x = 0; x < bm.w; ++x)
                        if (bm.get(y, x))
                            for (int c = 0; c < 3; ++c) img.at(y0 + y, x0 + x, c) = ink[c];
                placed.push_back({word, candidate});
                boxes.push_back({word, candidate});
                done = true;
            }
            check(done || wi > 0, "canvas too small for requested word: " + word);
        }

        char name[32];
        std::snprintf(name, sizeof(name), "img_%05d", i);
        const std::string image_rel = std::string("images/") + name + ".png";
        const std::string ann_rel = std::string("annotations/") + name + ".json";
        write_png((fs::path(config.out_dir) / image_rel).string(), img);
        write_annotations((fs::path(config.out_dir) / ann_rel).string(), boxes);
        manifest.entries.push_back({image_rel, ann_rel});
    }

    write_manifest((fs::path(config.out_dir) / "manifest.json").string(), manifest);
    return manifest;
}

}  // namespace ute
