#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lance {

// Dense row-major f64 tensor with shared storage. Copies alias the same
// buffer, so a parameter handed to an op keeps accumulating into one grad.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape, double fill = 0.0);

    static Tensor zeros(std::vector<int> shape);
    static Tensor full(std::vector<int> shape, double value);
    static Tensor from_data(std::vector<int> shape, std::vector<double> values);
    static Tensor randn(std::vector<int> shape, std::mt19937_64& rng, double stddev = 1.0);
    static Tensor uniform(std::vector<int> shape, std::mt19937_64& rng, double lo, double hi);

    bool defined() const { return data_ != nullptr; }
    const std::vector<int>& shape() const { return shape_; }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    int64_t numel() const;

    std::span<double> data() { return {data_->data(), data_->size()}; }
    std::span<const double> data() const { return {data_->data(), data_->size()}; }
    double& operator[](int64_t i) { return (*data_)[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return (*data_)[static_cast<size_t>(i)]; }

    // 2-D accessors (rows = dim 0 product except last, cols = last dim).
    int rows() const;
    int cols() const;
    double& at(int r, int c) { return (*data_)[static_cast<size_t>(r) * cols() + c]; }
    double at(int r, int c) const { return (*data_)[static_cast<size_t>(r) * cols() + c]; }

    void set_requires_grad(bool flag);
    bool requires_grad() const { return requires_grad_; }
    std::span<double> grad();
    std::span<const double> grad() const;
    bool has_grad() const { return grad_ != nullptr; }
    void zero_grad();

    double scalar() const;
    double grad_scalar() const;

    // Deep copy with fresh storage (grad not copied).
    Tensor clone() const;

    bool all_finite() const;

private:
    std::vector<int> shape_;
    std::shared_ptr<std::vector<double>> data_;
    std::shared_ptr<std::vector<double>> grad_;
    bool requires_grad_ = false;

    void ensure_grad() const;
    friend class Tape;
};

// Reverse-mode tape. Ops push backward closures during the forward pass;
// backward() replays them in reverse. One tape per forward pass.
class Tape {
public:
    void record(std::function<void()> op) { ops_.push_back(std::move(op)); }
    void backward(Tensor& loss);
    size_t size() const { return ops_.size(); }
    void clear() { ops_.clear(); }

private:
    std::vector<std::function<void()>> ops_;
};

// ---- ops ----------------------------------------------------------------
// All ops accept tape == nullptr for grad-free inference.

Tensor matmul(const Tensor& a, const Tensor& b, Tape* tape);
// c = a * b^T, a:[m,k], b:[n,k] -> [m,n]
Tensor matmul_nt(const Tensor& a, const Tensor& b, Tape* tape);

Tensor add(const Tensor& a, const Tensor& b, Tape* tape);
Tensor sub(const Tensor& a, const Tensor& b, Tape* tape);
Tensor mul(const Tensor& a, const Tensor& b, Tape* tape);
Tensor scale(const Tensor& a, double c, Tape* tape);
// x:[n,d] + bias:[d] broadcast over rows
Tensor add_bias(const Tensor& x, const Tensor& bias, Tape* tape);

Tensor silu(const Tensor& x, Tape* tape);
Tensor sum(const Tensor& x, Tape* tape);

Tensor softmax_last(const Tensor& x, Tape* tape);
// y = x / sqrt(mean(x^2) + eps) * gain over the last dim; gain:[last]
Tensor rms_norm(const Tensor& x, const Tensor& gain, Tape* tape, double eps = 1e-6);
// Per-head RMS norm: x:[n, H*hd] normalized per hd-chunk, gain:[hd] shared across heads.
Tensor rms_norm_heads(const Tensor& x, const Tensor& gain, int heads, Tape* tape,
                      double eps = 1e-6);

// mean over rows of -log softmax(logits)[target]
Tensor cross_entropy(const Tensor& logits, const std::vector<int>& targets, Tape* tape);
// mean squared difference; target is treated as a constant
Tensor mse(const Tensor& pred, const Tensor& target, Tape* tape);

// rows of table selected by ids -> [ids.size(), d]
Tensor embedding(const Tensor& table, const std::vector<int>& ids, Tape* tape);
Tensor gather_rows(const Tensor& x, const std::vector<int>& idx, Tape* tape);
// [n, d] with rows[r] placed at idx[r], zeros elsewhere
Tensor scatter_rows(int n, const std::vector<int>& idx, const Tensor& rows, Tape* tape);
Tensor slice_cols(const Tensor& x, int c0, int c1, Tape* tape);
Tensor concat_cols(const std::vector<Tensor>& parts, Tape* tape);

// Pairwise rotation: channel pair j of head h rotated by angle[r][j].
// x:[n, H*hd], cos/sin:[n, hd/2] shared across heads.
Tensor rotary(const Tensor& x, const Tensor& cos_tab, const Tensor& sin_tab, int heads,
              Tape* tape);

void backward(Tensor& loss, Tape& tape);

// Central-difference gradient of f at x (test oracle).
Tensor finite_diff_grad(const std::function<double(const Tensor&)>& f, const Tensor& x,
                        double eps);

}  // namespace lance
