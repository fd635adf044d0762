#pragma once

#include "lance/attention_mask.hpp"
#include "lance/mape.hpp"
#include "lance/sequence.hpp"
#include "lance/tensor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lance {

struct ModelConfig {
    int layers = 4;
    int model_dim = 128;
    int heads = 4;
    int ffn_dim = 512;
    int vocab = 520;
    int latent_channels = 96;
    // doubles as the flow-MLP hidden width, so it wants to be well above the
    // latent channel count: the velocity head has to realize a t-dependent
    // gain on all 96 channels, and a narrower connector additionally leaves
    // an uncorrectable noise subspace in sampled latents
    int connector_dim = 256;
    // QK-Norm is applied before the rotary rotation (config-flagged).
    bool qk_norm_before_rotary = true;
    double qk_norm_eps = 1e-6;

    int head_dim() const { return model_dim / heads; }
    void validate() const;
};

enum class ExpertId { Und, Gen };

// Text and semantic visual tokens go to the understanding expert, VAE
// latent tokens (clean or noisy) to the generation expert. Delimiters are
// text-positioned and route to Und.
ExpertId route(Modality m);
std::vector<ExpertId> route_sequence(const std::vector<Modality>& modalities);

// One expert's parameters for one layer.
struct ExpertLayer {
    Tensor wq, wk, wv, wo;        // [d, d]
    Tensor q_gain, k_gain;        // [head_dim]
    Tensor attn_norm, ffn_norm;   // [d]
    Tensor w1, w2;                // [d, ffn], [ffn, d]
};

struct LayerWeights {
    ExpertLayer und;
    ExpertLayer gen;
};

struct DualExpertWeights {
    std::vector<LayerWeights> layers;
    Tensor final_norm_und;  // [d]
    Tensor final_norm_gen;  // [d]

    void for_each_param(const std::function<void(const std::string&, Tensor&)>& fn);
};

DualExpertWeights init_backbone(const ModelConfig& cfg, std::mt19937_64& rng);

// Full forward over an assembled token matrix. Per-token expert routing
// with one shared attention map; pre-norm residual blocks.
Tensor backbone_forward(const Tensor& embedded, const std::vector<ExpertId>& routing,
                        const RotaryTables& rot, const Tensor& mask_bias_mat,
                        DualExpertWeights& weights, const ModelConfig& cfg, Tape* tape);

// Final pathway norm applied to rows consumed by a head.
Tensor pathway_norm(const Tensor& hidden, const std::vector<int>& row_idx, ExpertId expert,
                    DualExpertWeights& weights, Tape* tape);

}  // namespace lance
