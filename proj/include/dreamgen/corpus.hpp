#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <vector>

namespace dreamgen::corpus {

// Labeled n x d matrix of word embeddings or visual vectors.
// Invariants: labels unique, non-empty, whitespace-free; every entry finite;
// n >= 1, dim >= 1.
struct VectorTable {
    std::vector<std::string> labels;
    Eigen::MatrixXd data; // row i belongs to labels[i]

    Eigen::Index rows() const { return data.rows(); }
    Eigen::Index dim() const { return data.cols(); }

    // Row index of a label, or -1.
    Eigen::Index find(const std::string& label) const;

    // Throws Error(Data) on any invariant violation.
    void validate() const;
};

enum class Macro { ManMade, Organic, Animal };

const char* macro_name(Macro m);
bool parse_macro(const std::string& tok, Macro& out);

struct ConceptCatalog {
    struct Entry {
        std::string category;
        Macro macro;
    };
    std::map<std::string, Entry> entries;
};

// Pixel raster, values in [0,1], row-major, channel-interleaved.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1; // 1 or 3
    std::vector<double> pixels;

    double at(int y, int x, int c) const {
        return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
    }
    void validate() const;
};

// Overlapping-patch decomposition of an image.  Patch (r, c) reads pixels
// from top-left (r*stride, c*stride); vectors are p*p*channels long with the
// same row-major channel-interleaved layout as Image.
struct PatchGrid {
    int patch_size = 0;
    int stride = 0;
    int rows = 0;
    int cols = 0;
    int source_width = 0;
    int source_height = 0;
    int channels = 1;
    std::vector<Eigen::VectorXd> patches; // row-major patch order

    void validate() const;
};

// Word2vec text format: header "<n> <d>", then rows "<label> v1 ... vd".
// Parse failures carry the offending 1-based line number.
VectorTable read_vector_table(const std::string& path);
void write_vector_table(const VectorTable& table, const std::string& path);

// CSV "concept,category,macro" with macro in {MAN-MADE, ORGANIC, ANIMAL}.
ConceptCatalog read_catalog(const std::string& path);
void write_catalog(const ConceptCatalog& catalog, const std::string& path);

// Binary PGM P5 (1 channel) / PPM P6 (3 channels), maxval 255.
// Reading maps byte b -> b/255; writing maps v -> floor(clamp(v,0,1)*255+0.5).
Image read_image(const std::string& path);
void write_image(const Image& image, const std::string& path);

// Requires p <= min(width, height), 1 <= s <= p, and both (width - p) and
// (height - p) divisible by s; misaligned images are rejected, not padded.
PatchGrid patchify(const Image& image, int p, int s);

// Each pixel becomes the arithmetic mean of the patch values covering it,
// then is clamped to [0,1].  The per-pixel mean is accumulated in
// double-double arithmetic so that the mean of equal values is that value
// exactly, which makes assemble(patchify(img, p, s)) == img bit-for-bit.
Image assemble(const PatchGrid& grid);

} // namespace dreamgen::corpus
