#include "softclust/data.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace softclust {

std::vector<std::size_t> BatchPlan::batch(std::size_t b) const {
    std::size_t lo = b * batch_size;
    std::size_t hi = std::min(lo + batch_size, order.size());
    return {order.begin() + lo, order.begin() + hi};
}

BatchPlan make_batch_plan(std::size_t n, std::size_t batch_size,
                          std::uint64_t master_seed, std::uint64_t epoch) {
    if (n == 0 || batch_size == 0) {
        throw InvalidInput("make_batch_plan: n and batch_size must be positive");
    }
    BatchPlan plan;
    plan.batch_size = batch_size;
    plan.order.resize(n);
    std::iota(plan.order.begin(), plan.order.end(), std::size_t{0});
    Rng master(master_seed);
    Rng epoch_rng = master.fork(epoch);
    plan.rng_seed = epoch_rng.seed();
    epoch_rng.shuffle(plan.order);
    return plan;
}

Dataset gen_gaussian_blobs(std::size_t k, std::size_t per_cluster, std::size_t dim,
                           double sep, double noise, Rng& rng) {
    if (k < 2 || per_cluster < 1 || dim < 1 || !(sep > 0.0) || !(noise > 0.0)) {
        throw InvalidInput("gen_gaussian_blobs: need k>=2, per_cluster>=1, dim>=1, sep>0, noise>0");
    }
    const std::size_t n = k * per_cluster;
    Dataset ds;
    ds.features = Matrix(n, dim);
    ds.labels = std::vector<int>(n);
    ds.name = "blobs";
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t p = 0; p < per_cluster; ++p) {
            std::size_t i = c * per_cluster + p;
            auto row = ds.features.row(i);
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] = noise * rng.normal();
            }
            row[c % dim] += sep * static_cast<double>(c);
            (*ds.labels)[i] = static_cast<int>(c);
        }
    }
    return ds;
}

namespace {

std::uint32_t read_be_u32(std::ifstream& f, const std::string& path, std::size_t offset) {
    unsigned char buf[4];
    f.read(reinterpret_cast<char*>(buf), 4);
    if (f.gcount() != 4) {
        throw FormatError(path + ": truncated at offset " + std::to_string(offset));
    }
    return (std::uint32_t(buf[0]) << 24) | (std::uint32_t(buf[1]) << 16) |
           (std::uint32_t(buf[2]) << 8) | std::uint32_t(buf[3]);
}

} // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 std::optional<std::size_t> limit) {
    std::ifstream img(images_path, std::ios::binary);
    if (!img) {
        throw FormatError(images_path + ": cannot open");
    }
    std::uint32_t magic = read_be_u32(img, images_path, 0);
    if (magic != 0x00000803u) {
        throw FormatError(images_path + ": bad magic " + std::to_string(magic));
    }
    std::uint32_t n_img = read_be_u32(img, images_path, 4);
    std::uint32_t rows = read_be_u32(img, images_path, 8);
    std::uint32_t cols = read_be_u32(img, images_path, 12);

    std::ifstream lab(labels_path, std::ios::binary);
    if (!lab) {
        throw FormatError(labels_path + ": cannot open");
    }
    std::uint32_t lab_magic = read_be_u32(lab, labels_path, 0);
    if (lab_magic != 0x00000801u) {
        throw FormatError(labels_path + ": bad magic " + std::to_string(lab_magic));
    }
    std::uint32_t n_lab = read_be_u32(lab, labels_path, 4);
    if (n_img != n_lab) {
        throw FormatError(images_path + ": image count " + std::to_string(n_img) +
                          " != label count " + std::to_string(n_lab));
    }

    std::size_t n = n_img;
    if (limit && *limit < n) {
        n = *limit;
    }
    const std::size_t d = std::size_t{rows} * cols;

    Dataset ds;
    ds.features = Matrix(n, d);
    ds.labels = std::vector<int>(n);
    ds.name = "idx";

    std::vector<unsigned char> pix(d);
    for (std::size_t i = 0; i < n; ++i) {
        img.read(reinterpret_cast<char*>(pix.data()), static_cast<std::streamsize>(d));
        if (img.gcount() != static_cast<std::streamsize>(d)) {
            throw FormatError(images_path + ": truncated at offset " +
                              std::to_string(16 + i * d + static_cast<std::size_t>(img.gcount())));
        }
        auto row = ds.features.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            row[j] = static_cast<double>(pix[j]) / 255.0;
        }
        char lbl = 0;
        lab.read(&lbl, 1);
        if (lab.gcount() != 1) {
            throw FormatError(labels_path + ": truncated at offset " + std::to_string(8 + i));
        }
        (*ds.labels)[i] = static_cast<int>(static_cast<unsigned char>(lbl));
    }
    return ds;
}

namespace {

double parse_cell(const std::string& cell, std::size_t line_no) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) {
        throw FormatError("line " + std::to_string(line_no) + ": non-numeric cell '" + cell + "'");
    }
    return value;
}

} // namespace

Dataset load_csv(const std::string& path, std::optional<std::size_t> label_col, bool has_header) {
    std::ifstream f(path);
    if (!f) {
        throw FormatError(path + ": cannot open");
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (line_no == 1 && has_header) continue;
        if (line.empty() || line == "\r") continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(parse_cell(cell, line_no));
        }
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(width) + " columns, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw FormatError(path + ": no data rows");
    }
    if (label_col && *label_col >= width) {
        throw FormatError(path + ": label column " + std::to_string(*label_col) + " out of range");
    }

    Dataset ds;
    ds.name = "csv";
    const std::size_t d = label_col ? width - 1 : width;
    ds.features = Matrix(rows.size(), d);
    if (label_col) {
        ds.labels = std::vector<int>(rows.size());
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t jj = 0;
        for (std::size_t j = 0; j < width; ++j) {
            if (label_col && j == *label_col) {
                (*ds.labels)[i] = static_cast<int>(rows[i][j]);
            } else {
                ds.features(i, jj++) = rows[i][j];
            }
        }
    }
    return ds;
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream f(path);
    if (!f) {
        throw FormatError(path + ": cannot open for writing");
    }
    char buf[64];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        auto row = ds.features.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            // %.17g round-trips any finite double.
            std::snprintf(buf, sizeof buf, "%.17g", row[j]);
            if (j) f << ',';
            f << buf;
        }
        if (ds.labels) {
            f << ',' << (*ds.labels)[i];
        }
        f << '\n';
    }
}

} // namespace softclust
