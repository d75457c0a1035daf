#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "msr/common.hpp"
#include "msr/rng.hpp"

namespace msr {

namespace detail {

// One value node of the dynamically recorded compute graph. A node produced
// by an operation keeps its tracked inputs and a closure that pushes the
// output adjoint back onto them; leaves keep neither.
struct TensorImpl {
    Shape shape;
    std::vector<double> data;
    std::vector<double> grad;  // empty until first accumulation
    bool requires_grad = false;

    std::vector<std::shared_ptr<TensorImpl>> parents;
    std::function<void(TensorImpl&)> backward_fn;

    int64_t numel() const { return static_cast<int64_t>(data.size()); }
    double* grad_buffer();  // allocates zeros on first use
};

}  // namespace detail

// Shared-ownership handle to a dense row-major f64 array with optional
// gradient tracking. Copying a Tensor aliases the underlying storage.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, double value, bool requires_grad = false);
    static Tensor from_data(Shape shape, std::vector<double> values, bool requires_grad = false);
    static Tensor randn(Shape shape, Rng& rng, double stddev, bool requires_grad = false);

    bool defined() const { return impl_ != nullptr; }
    const Shape& shape() const { return impl_->shape; }
    size_t rank() const { return impl_->shape.size(); }
    int64_t dim(size_t i) const { return impl_->shape[i]; }
    int64_t numel() const { return impl_->numel(); }

    bool requires_grad() const { return impl_ && impl_->requires_grad; }
    void set_requires_grad(bool v) { impl_->requires_grad = v; }

    const double* data() const { return impl_->data.data(); }
    double* data() { return impl_->data.data(); }
    const std::vector<double>& values() const { return impl_->data; }

    bool has_grad() const { return impl_ && !impl_->grad.empty(); }
    const double* grad() const { return impl_->grad.data(); }
    double* grad() { return impl_->grad.data(); }
    void zero_grad();

    // Value of a single-element tensor.
    double item() const;

    std::shared_ptr<detail::TensorImpl> impl() const { return impl_; }
    static Tensor wrap(std::shared_ptr<detail::TensorImpl> impl);

private:
    std::shared_ptr<detail::TensorImpl> impl_;
};

// Reverse-mode sweep from a scalar loss. Visits each recorded node once in
// reverse topological order and releases the tape as it goes.
void backward(const Tensor& loss);

// Tape recording is on by default and thread-local.
bool grad_enabled();

struct NoGradGuard {
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
    bool prev_;
};

// ---- operations ------------------------------------------------------------

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scalar_mul(const Tensor& x, double s);
Tensor add_scalar(const Tensor& x, double s);
Tensor exp(const Tensor& x);
Tensor abs(const Tensor& x);       // subgradient sign(0) = 0
Tensor silu(const Tensor& x);      // x * sigmoid(x)
Tensor softplus(const Tensor& x);  // log(1 + e^x), overflow-safe
Tensor sum(const Tensor& x);       // scalar
Tensor mean(const Tensor& x);      // scalar

// a[M x K] * b[K x N]
Tensor matmul(const Tensor& a, const Tensor& b);

// x[B x C x H x W], w[C' x C], bias[C'] optional (undefined Tensor to omit)
Tensor conv2d_pointwise(const Tensor& x, const Tensor& w, const Tensor& bias = {});
// x[B x C x H x W], w[C x 3 x 3], zero padding 1
Tensor conv2d_depthwise3x3(const Tensor& x, const Tensor& w, const Tensor& bias = {});
// x[B x C x H x W], w[C' x C x 3 x 3], zero padding 1, output (H-1)/stride+1
Tensor conv2d_3x3(const Tensor& x, const Tensor& w, const Tensor& bias = {}, int stride = 1);

// Normalizes over the channel axis (axis 1) per position; gamma/beta length C.
Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, double eps);

// Channel-axis concatenation/slicing of [B x C x ...] tensors.
Tensor concat_channels(const std::vector<Tensor>& parts);
Tensor narrow_channels(const Tensor& x, int64_t start, int64_t count);

// x[B x 1 x L] replicated to [B x S x L]; adjoint sums over the S copies.
Tensor expand_channels(const Tensor& x, int64_t s);

// Per-position unit L2 normalization across channels: y = x / sqrt(sum_c x^2 + eps).
Tensor unit_normalize_channels(const Tensor& x, double eps);

Tensor reshape(const Tensor& x, Shape new_shape);

}  // namespace msr
