#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dive/errors.hpp"

namespace dive {

using Shape = std::vector<std::size_t>;

std::string shape_str(const Shape& s);

// Dense row-major array of doubles. Rank 0 (scalar), 1 (vector) and 2
// (matrix) are the only ranks the engine produces.
struct NumArray {
    Shape shape;
    std::vector<double> data;

    NumArray() = default;
    NumArray(Shape s, std::vector<double> d);

    static NumArray zeros(const Shape& s);
    static NumArray full(const Shape& s, double value);
    static NumArray scalar(double value);
    static NumArray eye(std::size_t n);
    // Row-major matrix from explicit values.
    static NumArray matrix(std::size_t r, std::size_t c, std::vector<double> d);
    static NumArray vector(std::vector<double> d);

    std::size_t numel() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t dim(std::size_t i) const { return shape.at(i); }
    std::size_t rows() const;
    std::size_t cols() const;
    bool is_scalar() const { return numel() == 1 && rank() <= 1; }

    double& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }
    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    bool same_shape(const NumArray& o) const { return shape == o.shape; }
    bool all_finite() const;
};

std::size_t shape_numel(const Shape& s);

}  // namespace dive
