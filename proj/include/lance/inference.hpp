#pragma once

#include "lance/model.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lance {

enum class DecodeMode { Greedy, TopK };

struct DecodeConfig {
    DecodeMode mode = DecodeMode::Greedy;
    int max_new = 48;
    int top_k = 4;
    double temperature = 1.0;  // 0 reduces TopK to greedy
    uint64_t seed = 0;
    int max_context = 512;
};

// Autoregressive decoding from an understanding prompt. Stops at EOT or
// im_end (the trained answer terminators) or max_new tokens; the returned
// ids exclude the terminator.
std::vector<int> decode_text(const TrainingSample& sample, LanceModel& model,
                             const ToyEncoders& enc, const DecodeConfig& cfg);

// Byte content of decoded ids with special tokens stripped.
std::string decoded_answer(const std::vector<int>& ids);

struct SamplerConfig {
    int euler_steps = 20;
    // calibrated on the toy run: mild guidance and a uniform step grid
    // sample noticeably better than the training-table shift of 4.0
    double cfg_scale = 1.5;
    double shift = 1.0;
    uint64_t seed = 0;
};

// Euler integration of dx = v(x, t) dt from t=0 to 1 over a shift-warped
// uniform grid. Exact for straight-line fields at any step count.
using VelocityFn = std::function<Tensor(const Tensor& x, double t)>;
Tensor euler_sample(const Tensor& x0, const VelocityFn& v, int steps, double shift);

// Conditional / unconditional lowering pair for classifier-free guidance:
// the unconditional side replaces the text block with the empty condition
// and keeps visual conditions.
std::pair<PreparedSample, PreparedSample> cfg_pair(const TrainingSample& sample,
                                                   const ToyEncoders& enc, const LanceModel& model,
                                                   const Tensor& noisy_payload, int layout_t,
                                                   int layout_h, int layout_w);

// Model velocity with guidance v_uncond + s * (v_cond - v_uncond) at one
// (x, t) point.
Tensor guided_velocity(const TrainingSample& sample, LanceModel& model, const ToyEncoders& enc,
                       const Tensor& x, double t, double cfg_scale, int layout_t, int layout_h,
                       int layout_w);

// Full generation: noise init, CFG-guided Euler integration, latent grid out.
LatentGrid generate_latents(const TrainingSample& sample, LanceModel& model,
                            const ToyEncoders& enc, const SamplerConfig& cfg, int layout_t,
                            int layout_h, int layout_w);

}  // namespace lance
