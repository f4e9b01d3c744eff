#pragma once

#include <initializer_list>
#include <numeric>
#include <vector>

#include "patchforge/common.hpp"

namespace patchforge {

using Shape = std::vector<long>;

inline long shape_numel(const Shape& s) {
    long n = 1;
    for (long d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

// Dense row-major nd-array of doubles. Double precision throughout: the
// finite-difference gradient oracles and the metric oracles are specified at
// tolerances single precision cannot hold.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape)
        : shape_(std::move(shape)), d_(shape_numel(shape_), 0.0) {}
    Tensor(Shape shape, double fill)
        : shape_(std::move(shape)), d_(shape_numel(shape_), fill) {}
    Tensor(Shape shape, std::vector<double> data)
        : shape_(std::move(shape)), d_(std::move(data)) {
        require(static_cast<long>(d_.size()) == shape_numel(shape_),
                ErrorKind::shape, "tensor data does not match shape " + shape_str(shape_));
    }

    static Tensor zeros(Shape s) { return Tensor(std::move(s)); }
    static Tensor full(Shape s, double v) { return Tensor(std::move(s), v); }

    bool empty() const { return d_.empty(); }
    long numel() const { return static_cast<long>(d_.size()); }
    int ndim() const { return static_cast<int>(shape_.size()); }
    const Shape& shape() const { return shape_; }
    long dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }

    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }
    std::vector<double>& vec() { return d_; }
    const std::vector<double>& vec() const { return d_; }

    double& operator[](long i) { return d_[static_cast<std::size_t>(i)]; }
    double operator[](long i) const { return d_[static_cast<std::size_t>(i)]; }

    // Slow convenience accessor for tests and setup code.
    double& at(std::initializer_list<long> idx) {
        long off = 0;
        int i = 0;
        for (long v : idx) off = off * shape_[i++] + v;
        return d_[static_cast<std::size_t>(off)];
    }
    double at(std::initializer_list<long> idx) const {
        return const_cast<Tensor*>(this)->at(idx);
    }

    Tensor reshaped(Shape s) const {
        require(shape_numel(s) == numel(), ErrorKind::shape,
                "reshape " + shape_str(shape_) + " -> " + shape_str(s));
        Tensor t;
        t.shape_ = std::move(s);
        t.d_ = d_;
        return t;
    }

    double sum() const {
        double acc = 0.0;
        for (double v : d_) acc += v;
        return acc;
    }
    double min() const;
    double max() const;
    double abs_max() const;
    bool all_finite() const;

    void fill(double v) { std::fill(d_.begin(), d_.end(), v); }

private:
    Shape shape_;
    std::vector<double> d_;
};

}  // namespace patchforge
