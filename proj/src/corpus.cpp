#include "dreamgen/corpus.hpp"

#include "dreamgen/error.hpp"
#include "dreamgen/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace dreamgen::corpus {

namespace {

std::string read_whole_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw data_error("read failure on " + path);
    return ss.str();
}

// Lines split on '\n'; a trailing '\r' (CRLF input) is stripped.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        std::string_view l = text.substr(pos, nl - pos);
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        lines.push_back(l);
        pos = nl + 1;
    }
    return lines;
}

bool blank(std::string_view l) {
    return l.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace

Eigen::Index VectorTable::find(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<Eigen::Index>(i);
    return -1;
}

void VectorTable::validate() const {
    if (rows() < 1 || dim() < 1)
        throw data_error("vector table must have n >= 1 and dim >= 1");
    if (static_cast<Eigen::Index>(labels.size()) != rows())
        throw data_error("vector table label count does not match row count");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw data_error("vector table label is empty");
        if (l.find_first_of(" \t\r\n") != std::string::npos)
            throw data_error("vector table label '" + l + "' contains whitespace");
        if (!seen.insert(l).second)
            throw data_error("duplicate vector table label '" + l + "'");
    }
    if (!data.allFinite())
        throw data_error("vector table contains a non-finite value");
}

const char* macro_name(Macro m) {
    switch (m) {
        case Macro::ManMade: return "MAN-MADE";
        case Macro::Organic: return "ORGANIC";
        case Macro::Animal: return "ANIMAL";
    }
    return "?";
}

bool parse_macro(const std::string& tok, Macro& out) {
    if (tok == "MAN-MADE") { out = Macro::ManMade; return true; }
    if (tok == "ORGANIC") { out = Macro::Organic; return true; }
    if (tok == "ANIMAL") { out = Macro::Animal; return true; }
    return false;
}

void Image::validate() const {
    if (width < 1 || height < 1)
        throw data_error("image dimensions must be positive");
    if (channels != 1 && channels != 3)
        throw data_error("image channels must be 1 or 3");
    if (pixels.size() != static_cast<std::size_t>(width) * height * channels)
        throw data_error("image pixel buffer has wrong length");
    for (double v : pixels)
        if (!(v >= 0.0 && v <= 1.0))
            throw data_error("image pixel value outside [0,1]");
}

void PatchGrid::validate() const {
    if (patch_size < 1 || stride < 1 || stride > patch_size)
        throw data_error("patch grid requires 1 <= stride <= patch size");
    if (channels != 1 && channels != 3)
        throw data_error("patch grid channels must be 1 or 3");
    if (source_width < patch_size || source_height < patch_size)
        throw data_error("patch grid source smaller than patch");
    if ((source_width - patch_size) % stride != 0 ||
        (source_height - patch_size) % stride != 0)
        throw data_error("patch grid source dimensions misaligned to stride");
    if (rows != (source_height - patch_size) / stride + 1 ||
        cols != (source_width - patch_size) / stride + 1)
        throw data_error("patch grid row/col counts inconsistent with geometry");
    if (patches.size() != static_cast<std::size_t>(rows) * cols)
        throw data_error("patch grid patch count inconsistent");
    const Eigen::Index plen =
        static_cast<Eigen::Index>(patch_size) * patch_size * channels;
    for (const auto& p : patches)
        if (p.size() != plen)
            throw data_error("patch vector has wrong length");
}

VectorTable read_vector_table(const std::string& path) {
    const std::string text = read_whole_file(path);
    const auto lines = split_lines(text);
    if (lines.empty() || blank(lines[0]))
        throw data_error(path + ":1: missing header line");

    const auto head = split_ws(lines[0]);
    std::uint64_t n = 0, d = 0;
    if (head.size() != 2 || !parse_uint(head[0], n) || !parse_uint(head[1], d) ||
        n < 1 || d < 1)
        throw data_error(path + ":1: malformed header, expected \"<n> <d>\"");

    VectorTable table;
    table.labels.reserve(n);
    table.data.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));

    std::unordered_set<std::string> seen;
    std::size_t row = 0;
    std::size_t lineno = 1;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        lineno = li + 1;
        if (blank(lines[li])) {
            // blank lines are only tolerated after the last data row
            for (std::size_t lj = li; lj < lines.size(); ++lj)
                if (!blank(lines[lj]))
                    throw data_error(path + ":" + std::to_string(lj + 1) +
                                     ": blank line inside table body");
            break;
        }
        if (row >= n)
            throw data_error(path + ":" + std::to_string(lineno) +
                             ": more rows than header declares");
        const auto toks = split_ws(lines[li]);
        if (toks.size() != d + 1)
            throw data_error(path + ":" + std::to_string(lineno) + ": expected label + " +
                             std::to_string(d) + " values, got " +
                             std::to_string(toks.size() ? toks.size() - 1 : 0));
        std::string label(toks[0]);
        if (!seen.insert(label).second)
            throw data_error(path + ":" + std::to_string(lineno) +
                             ": duplicate label '" + label + "'");
        for (std::uint64_t j = 0; j < d; ++j) {
            double v;
            if (!parse_double(toks[j + 1], v))
                throw data_error(path + ":" + std::to_string(lineno) +
                                 ": cannot parse value '" + std::string(toks[j + 1]) + "'");
            if (!std::isfinite(v))
                throw data_error(path + ":" + std::to_string(lineno) +
                                 ": non-finite value in column " + std::to_string(j + 1));
            table.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = v;
        }
        table.labels.push_back(std::move(label));
        ++row;
    }
    if (row != n)
        throw data_error(path + ":" + std::to_string(lineno) + ": header declares " +
                         std::to_string(n) + " rows but file has " + std::to_string(row));
    table.validate();
    return table;
}

void write_vector_table(const VectorTable& table, const std::string& path) {
    table.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open " + path + " for writing");
    out << table.rows() << ' ' << table.dim() << '\n';
    for (Eigen::Index i = 0; i < table.rows(); ++i) {
        out << table.labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < table.dim(); ++j)
            out << ' ' << format_double(table.data(i, j));
        out << '\n';
    }
    if (!out) throw data_error("write failure on " + path);
}

ConceptCatalog read_catalog(const std::string& path) {
    const std::string text = read_whole_file(path);
    const auto lines = split_lines(text);
    ConceptCatalog cat;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (blank(lines[li])) continue;
        const std::string lineno = std::to_string(li + 1);
        std::string_view l = lines[li];
        std::size_t c1 = l.find(',');
        std::size_t c2 = c1 == std::string_view::npos ? c1 : l.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            l.find(',', c2 + 1) != std::string_view::npos)
            throw data_error(path + ":" + lineno + ": expected 3 comma-separated fields");
        std::string concept_name(l.substr(0, c1));
        std::string category(l.substr(c1 + 1, c2 - c1 - 1));
        std::string macro_tok(l.substr(c2 + 1));
        if (concept_name.empty())
            throw data_error(path + ":" + lineno + ": empty concept");
        Macro m;
        if (!parse_macro(macro_tok, m))
            throw data_error(path + ":" + lineno + ": unknown macro '" + macro_tok + "'");
        auto [it, inserted] =
            cat.entries.emplace(std::move(concept_name), ConceptCatalog::Entry{category, m});
        if (!inserted)
            throw data_error(path + ":" + lineno + ": duplicate concept '" + it->first + "'");
    }
    return cat;
}

void write_catalog(const ConceptCatalog& catalog, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open " + path + " for writing");
    for (const auto& [concept_name, e] : catalog.entries)
        out << concept_name << ',' << e.category << ',' << macro_name(e.macro) << '\n';
    if (!out) throw data_error("write failure on " + path);
}

namespace {

// PNM token reader: skips whitespace and '#' comments.
struct PnmCursor {
    const std::string& buf;
    std::size_t pos = 0;

    std::string token() {
        for (;;) {
            while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
            if (pos < buf.size() && buf[pos] == '#') {
                while (pos < buf.size() && buf[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        std::size_t start = pos;
        while (pos < buf.size() && !std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
        return buf.substr(start, pos - start);
    }
};

} // namespace

Image read_image(const std::string& path) {
    const std::string buf = read_whole_file(path);
    PnmCursor cur{buf};
    const std::string magic = cur.token();
    int channels;
    if (magic == "P5") channels = 1;
    else if (magic == "P6") channels = 3;
    else throw data_error(path + ": unsupported magic number '" + magic + "'");

    std::uint64_t w = 0, h = 0, maxval = 0;
    if (!parse_uint(cur.token(), w) || !parse_uint(cur.token(), h) ||
        !parse_uint(cur.token(), maxval) || w < 1 || h < 1)
        throw data_error(path + ": malformed PNM header");
    if (maxval != 255)
        throw data_error(path + ": unsupported maxval " + std::to_string(maxval));
    if (cur.pos >= buf.size())
        throw data_error(path + ": truncated payload");
    ++cur.pos; // single whitespace byte after maxval

    const std::size_t need = static_cast<std::size_t>(w) * h * channels;
    if (buf.size() - cur.pos < need)
        throw data_error(path + ": truncated payload");

    Image img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.channels = channels;
    img.pixels.resize(need);
    for (std::size_t i = 0; i < need; ++i)
        img.pixels[i] = static_cast<unsigned char>(buf[cur.pos + i]) / 255.0;
    return img;
}

void write_image(const Image& image, const std::string& path) {
    if (image.width < 1 || image.height < 1)
        throw data_error("image dimensions must be positive");
    if (image.channels != 1 && image.channels != 3)
        throw data_error("image channels must be 1 or 3");
    if (image.pixels.size() !=
        static_cast<std::size_t>(image.width) * image.height * image.channels)
        throw data_error("image pixel buffer has wrong length");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open " + path + " for writing");
    out << (image.channels == 1 ? "P5" : "P6") << '\n'
        << image.width << ' ' << image.height << '\n'
        << "255\n";
    std::string bytes;
    bytes.reserve(image.pixels.size());
    for (double v : image.pixels) {
        double c = std::clamp(v, 0.0, 1.0);
        bytes.push_back(static_cast<char>(
            static_cast<unsigned char>(std::floor(c * 255.0 + 0.5))));
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw data_error("write failure on " + path);
}

PatchGrid patchify(const Image& image, int p, int s) {
    image.validate();
    if (p < 1 || p > std::min(image.width, image.height))
        throw data_error("patch size must satisfy 1 <= p <= min(width, height)");
    if (s < 1 || s > p)
        throw data_error("stride must satisfy 1 <= s <= p");
    if ((image.width - p) % s != 0 || (image.height - p) % s != 0)
        throw data_error("image dimensions do not align to the stride");

    PatchGrid grid;
    grid.patch_size = p;
    grid.stride = s;
    grid.rows = (image.height - p) / s + 1;
    grid.cols = (image.width - p) / s + 1;
    grid.source_width = image.width;
    grid.source_height = image.height;
    grid.channels = image.channels;
    grid.patches.reserve(static_cast<std::size_t>(grid.rows) * grid.cols);

    const int ch = image.channels;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            Eigen::VectorXd patch(static_cast<Eigen::Index>(p) * p * ch);
            Eigen::Index k = 0;
            for (int py = 0; py < p; ++py)
                for (int px = 0; px < p; ++px)
                    for (int cc = 0; cc < ch; ++cc)
                        patch(k++) = image.at(r * s + py, c * s + px, cc);
            grid.patches.push_back(std::move(patch));
        }
    }
    return grid;
}

namespace {

// Error-free accumulation: hi+lo stays an exact two-term representation of
// the running sum, so k equal addends sum to exactly k*x.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    void add(double b) {
        double s = hi + b;
        double bb = s - hi;
        double err = (hi - (s - bb)) + (b - bb);
        err += lo;
        hi = s + err;
        lo = err - (hi - s);
    }

    // Quotient by a small positive integer, corrected so that an exactly
    // representable quotient is returned exactly.
    double div(double k) const {
        double q1 = hi / k;
        double rem = std::fma(-q1, k, hi) + lo;
        return q1 + rem / k;
    }
};

} // namespace

Image assemble(const PatchGrid& grid) {
    grid.validate();
    const int w = grid.source_width;
    const int h = grid.source_height;
    const int ch = grid.channels;
    const int p = grid.patch_size;
    const int s = grid.stride;

    std::vector<DoubleDouble> sums(static_cast<std::size_t>(w) * h * ch);
    std::vector<std::uint32_t> counts(sums.size(), 0);

    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            const Eigen::VectorXd& patch =
                grid.patches[static_cast<std::size_t>(r) * grid.cols + c];
            Eigen::Index k = 0;
            for (int py = 0; py < p; ++py)
                for (int px = 0; px < p; ++px)
                    for (int cc = 0; cc < ch; ++cc) {
                        std::size_t idx = static_cast<std::size_t>(
                            ((r * s + py) * w + (c * s + px)) * ch + cc);
                        sums[idx].add(patch(k++));
                        ++counts[idx];
                    }
        }
    }

    Image img;
    img.width = w;
    img.height = h;
    img.channels = ch;
    img.pixels.resize(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) {
        // s <= p guarantees full coverage
        double mean = sums[i].div(static_cast<double>(counts[i]));
        img.pixels[i] = std::clamp(mean, 0.0, 1.0);
    }
    return img;
}

} // namespace dreamgen::corpus
