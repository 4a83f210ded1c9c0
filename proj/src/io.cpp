#include "sceneclust/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sceneclust/rng.hpp"

namespace sceneclust {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

}  // namespace

void write_dir_header(const std::string& dir, const DirHeader& header) {
    std::filesystem::create_directories(dir);
    auto os = open_out(dir + "/header.txt");
    for (const auto& [k, v] : header.meta) os << k << " " << v << "\n";
    for (const auto& a : header.arrays) {
        os << a.name;
        for (int d : a.shape) os << " " << d;
        os << " " << a.dtype << "\n";
    }
}

DirHeader read_dir_header(const std::string& dir) {
    auto is = open_in(dir + "/header.txt");
    DirHeader h;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.size() == 2) {
            h.meta[tok[0]] = tok[1];
        } else if (tok.size() >= 3) {
            ArrayHeaderEntry e;
            e.name = tok.front();
            e.dtype = tok.back();
            for (std::size_t i = 1; i + 1 < tok.size(); ++i) e.shape.push_back(std::stoi(tok[i]));
            h.arrays.push_back(std::move(e));
        }
    }
    return h;
}

void write_f64(const std::string& path, const std::vector<double>& values) {
    auto os = open_out(path);
    os.write(reinterpret_cast<const char*>(values.data()),
             static_cast<std::streamsize>(values.size() * sizeof(double)));
}

void write_i32(const std::string& path, const std::vector<std::int32_t>& values) {
    auto os = open_out(path);
    os.write(reinterpret_cast<const char*>(values.data()),
             static_cast<std::streamsize>(values.size() * sizeof(std::int32_t)));
}

std::vector<double> read_f64(const std::string& path, std::size_t count) {
    auto is = open_in(path);
    std::vector<double> v(count);
    is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(count * sizeof(double)));
    if (!is) throw std::runtime_error("short read: " + path);
    return v;
}

std::vector<std::int32_t> read_i32(const std::string& path, std::size_t count) {
    auto is = open_in(path);
    std::vector<std::int32_t> v(count);
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(count * sizeof(std::int32_t)));
    if (!is) throw std::runtime_error("short read: " + path);
    return v;
}

void write_pgm8(const std::string& path, const Array2D<std::uint8_t>& img) {
    auto os = open_out(path);
    os << "P5\n" << img.cols << " " << img.rows << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.data.data()),
             static_cast<std::streamsize>(img.data.size()));
}

Array2D<std::uint8_t> read_pgm8(const std::string& path) {
    auto is = open_in(path);
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    is >> magic >> w >> h >> maxval;
    if (magic != "P5" || maxval != 255) throw std::runtime_error("unsupported PGM: " + path);
    is.get();  // single whitespace after maxval
    Array2D<std::uint8_t> img(h, w);
    is.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (!is) throw std::runtime_error("short PGM read: " + path);
    return img;
}

void write_pgm16(const std::string& path, const Array2D<std::uint16_t>& img) {
    auto os = open_out(path);
    os << "P5\n" << img.cols << " " << img.rows << "\n65535\n";
    for (std::uint16_t v : img.data) {
        const char bytes[2] = {static_cast<char>(v >> 8), static_cast<char>(v & 0xff)};
        os.write(bytes, 2);
    }
}

void label_palette(int label, std::uint8_t rgb[3]) {
    std::uint64_t s = 0x9b1a6e5c3d2f4a07ULL + static_cast<std::uint64_t>(label) * 0x100000001b3ULL;
    const std::uint64_t h = splitmix64(s);
    rgb[0] = static_cast<std::uint8_t>(40 + (h & 0xff) % 216);
    rgb[1] = static_cast<std::uint8_t>(40 + ((h >> 16) & 0xff) % 216);
    rgb[2] = static_cast<std::uint8_t>(40 + ((h >> 32) & 0xff) % 216);
}

void write_label_ppm(const std::string& path, const Array2D<int>& labels) {
    auto os = open_out(path);
    os << "P6\n" << labels.cols << " " << labels.rows << "\n255\n";
    for (int v : labels.data) {
        std::uint8_t rgb[3];
        label_palette(v, rgb);
        os.write(reinterpret_cast<const char*>(rgb), 3);
    }
}

}  // namespace sceneclust
