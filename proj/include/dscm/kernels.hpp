#pragma once

// Dense kernels behind the autograd ops. The top-level namespace holds the
// OpenMP data-parallel versions; `serial` holds straightforward reference
// loops used by the tests and the benchmark. Backward kernels accumulate
// into their outputs.

#include "dscm/tensor.hpp"

#include <span>

namespace dscm::kernels {

/// Stride-1, zero-padded ("same") 2-D convolution with an odd square kernel.
struct ConvGeometry {
    int batch = 1;
    int in_channels = 1;
    int out_channels = 1;
    int height = 1;
    int width = 1;
    int kernel = 3;

    int pad() const { return kernel / 2; }
    std::size_t input_size() const { return static_cast<std::size_t>(batch) * in_channels * height * width; }
    std::size_t output_size() const { return static_cast<std::size_t>(batch) * out_channels * height * width; }
    std::size_t weight_size() const {
        return static_cast<std::size_t>(out_channels) * in_channels * kernel * kernel;
    }
};

struct LinearGeometry {
    int batch = 1;
    int in_features = 1;
    int out_features = 1;
};

void conv2d_forward(const ConvGeometry& g, std::span<const real> input, std::span<const real> weight,
                    std::span<const real> bias, std::span<real> output);
void conv2d_backward_input(const ConvGeometry& g, std::span<const real> grad_output,
                           std::span<const real> weight, std::span<real> grad_input);
void conv2d_backward_weight(const ConvGeometry& g, std::span<const real> grad_output,
                            std::span<const real> input, std::span<real> grad_weight,
                            std::span<real> grad_bias);

void linear_forward(const LinearGeometry& g, std::span<const real> input, std::span<const real> weight,
                    std::span<const real> bias, std::span<real> output);
void linear_backward_input(const LinearGeometry& g, std::span<const real> grad_output,
                           std::span<const real> weight, std::span<real> grad_input);
void linear_backward_weight(const LinearGeometry& g, std::span<const real> grad_output,
                            std::span<const real> input, std::span<real> grad_weight,
                            std::span<real> grad_bias);

// 2x2 average pooling / nearest 2x upsampling over `planes` = batch*channels planes.
void avg_pool2_forward(int planes, int height, int width, std::span<const real> input, std::span<real> output);
void avg_pool2_backward(int planes, int height, int width, std::span<const real> grad_output,
                        std::span<real> grad_input);
void upsample2_forward(int planes, int height, int width, std::span<const real> input, std::span<real> output);
void upsample2_backward(int planes, int height, int width, std::span<const real> grad_output,
                        std::span<real> grad_input);

namespace serial {

void conv2d_forward(const ConvGeometry& g, std::span<const real> input, std::span<const real> weight,
                    std::span<const real> bias, std::span<real> output);
void conv2d_backward_input(const ConvGeometry& g, std::span<const real> grad_output,
                           std::span<const real> weight, std::span<real> grad_input);
void conv2d_backward_weight(const ConvGeometry& g, std::span<const real> grad_output,
                            std::span<const real> input, std::span<real> grad_weight,
                            std::span<real> grad_bias);

void linear_forward(const LinearGeometry& g, std::span<const real> input, std::span<const real> weight,
                    std::span<const real> bias, std::span<real> output);
void linear_backward_input(const LinearGeometry& g, std::span<const real> grad_output,
                           std::span<const real> weight, std::span<real> grad_input);
void linear_backward_weight(const LinearGeometry& g, std::span<const real> grad_output,
                            std::span<const real> input, std::span<real> grad_weight,
                            std::span<real> grad_bias);

void avg_pool2_forward(int planes, int height, int width, std::span<const real> input, std::span<real> output);
void avg_pool2_backward(int planes, int height, int width, std::span<const real> grad_output,
                        std::span<real> grad_input);
void upsample2_forward(int planes, int height, int width, std::span<const real> input, std::span<real> output);
void upsample2_backward(int planes, int height, int width, std::span<const real> grad_output,
                        std::span<real> grad_input);

}  // namespace serial

}  // namespace dscm::kernels
