#ifndef SCENECLUST_IO_HPP
#define SCENECLUST_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sceneclust/array.hpp"

namespace sceneclust {

// Flat binary arrays (little-endian payload) described by a plain-text
// header: one line per entry, `name dim0 [dim1 ...] dtype`, plus bare
// `key value` metadata lines such as the seed.

struct ArrayHeaderEntry {
    std::string name;
    std::vector<int> shape;
    std::string dtype;  // "f64" or "i32"
};

struct DirHeader {
    std::vector<ArrayHeaderEntry> arrays;
    std::map<std::string, std::string> meta;
};

void write_dir_header(const std::string& dir, const DirHeader& header);
DirHeader read_dir_header(const std::string& dir);

void write_f64(const std::string& path, const std::vector<double>& values);
void write_i32(const std::string& path, const std::vector<std::int32_t>& values);
std::vector<double> read_f64(const std::string& path, std::size_t count);
std::vector<std::int32_t> read_i32(const std::string& path, std::size_t count);

/// 8-bit binary PGM (P5).
void write_pgm8(const std::string& path, const Array2D<std::uint8_t>& img);
Array2D<std::uint8_t> read_pgm8(const std::string& path);

/// 16-bit binary PGM (P5, big-endian samples).
void write_pgm16(const std::string& path, const Array2D<std::uint16_t>& img);

/// Binary PPM (P6) with a palette chosen deterministically per label id.
void write_label_ppm(const std::string& path, const Array2D<int>& labels);

/// Deterministic color for a label id.
void label_palette(int label, std::uint8_t rgb[3]);

}  // namespace sceneclust

#endif
