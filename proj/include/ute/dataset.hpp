#pragma once

#include <string>
#include <vector>

#include "ute/font.hpp"
#include "ute/image.hpp"

namespace ute {

struct ManifestEntry {
    std::string image_path;       // relative to the manifest directory
    std::string annotation_path;  // relative to the manifest directory
};

struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    std::string split = "train";  // train | val | test
    uint64_t seed = 0;
    std::string root;  // directory the relative paths resolve against

    std::string resolve(const std::string& rel) const;
};

// Sidecar format: JSON array of {"text": string, "bbox": [x,y,w,h]}.
std::vector<OcrBox> read_annotations(const std::string& path);
void write_annotations(const std::string& path, const std::vector<OcrBox>& boxes);

AnnotatedImage load_annotated_image(const std::string& image_path,
                                    const std::string& annotation_path);
AnnotatedImage load_entry(const DatasetManifest& manifest, size_t index);

DatasetManifest read_manifest(const std::string& path);
void write_manifest(const std::string& path, const DatasetManifest& manifest);

// 20 short uppercase words used by the tools and tests.
const std::vector<std::string>& default_vocabulary();

// The 5 dataset font variants (all distinct from the uniform "plain" font).
const std::vector<FontVariant>& default_dataset_fonts();

struct SyntheticConfig {
    int n_images = 0;
    std::vector<std::string> vocabulary;
    std::vector<FontVariant> fonts;
    int size = 64;  // square canvas S
    uint64_t seed = 0;
    std::string out_dir;
    std::string split = "train";
    int min_scale = 2;
    int max_scale = 3;
};

// Writes n_images PNGs with 1-3 isolated words each, exact ink bounding
// boxes, plus JSON sidecars and a manifest. Byte-identical for a fixed seed.
DatasetManifest generate_synthetic_dataset(const SyntheticConfig& config);

}  // namespace ute
