#ifndef SCENECLUST_ARRAY_HPP
#define SCENECLUST_ARRAY_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace sceneclust {

/// Dense row-major 2-D grid.
template <typename T>
struct Array2D {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Array2D() = default;
    Array2D(int r, int c, T fill = T{}) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    T& operator()(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    const T& operator()(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<std::size_t>(r) * cols + c];
    }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Array2D& o) const { return rows == o.rows && cols == o.cols; }
};

/// Dense row-major image with interleaved channels.
struct Image {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, int c, double fill = 0.0)
        : height(h), width(w), channels(c), data(static_cast<std::size_t>(h) * w * c, fill) {}

    double& at(int y, int x, int ch) {
        assert(y >= 0 && y < height && x >= 0 && x < width && ch >= 0 && ch < channels);
        return data[(static_cast<std::size_t>(y) * width + x) * channels + ch];
    }
    double at(int y, int x, int ch) const {
        assert(y >= 0 && y < height && x >= 0 && x < width && ch >= 0 && ch < channels);
        return data[(static_cast<std::size_t>(y) * width + x) * channels + ch];
    }
};

}  // namespace sceneclust

#endif
