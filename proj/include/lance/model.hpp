#pragma once

#include "lance/backbone.hpp"
#include "lance/heads.hpp"
#include "lance/mape.hpp"
#include "lance/synth.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace lance {

// Full parameter set: shared token embedding, dual-expert backbone, heads.
struct LanceModel {
    ModelConfig cfg;
    MaPEConfig mape;
    Tensor tok_embed;  // [vocab, d]
    DualExpertWeights backbone;
    HeadWeights heads;

    void for_each_param(const std::function<void(const std::string&, Tensor&)>& fn);
    void set_requires_grad(bool flag);
    void zero_grad();
    int64_t param_count();
};

LanceModel init_model(const ModelConfig& cfg, const MaPEConfig& mape, uint64_t seed);

// A sample lowered to the unified sequence plus everything the losses need.
struct PreparedSample {
    TaskKind task = TaskKind::T2I;
    MultimodalSequence seq;
    std::vector<ExpertId> routing;
    std::vector<Position3D> positions;
    // understanding supervision: predict token_ids[lm_positions[i] + 1]
    std::vector<int> lm_positions;
    std::vector<int> lm_targets;
    // generation supervision
    std::vector<int> noisy_positions;
    bool has_flow = false;
    FlowState flow;
    int noisy_t = 0, noisy_h = 0, noisy_w = 0;
};

// Lowers a synthetic sample for one training step: prompt rendering, visual
// encoding, CFG condition dropping, flow-state construction. The noisy
// payload in seq is the interpolant x_t.
PreparedSample prepare_sample(const TrainingSample& sample, const ToyEncoders& enc,
                              const LanceModel& model, double timestep_shift,
                              const CfgDropDecision& drop, std::mt19937_64& rng);

// Same lowering without a generation target: the noisy block (if layout_t >
// 0) holds the provided payload, used by the sampler which rewrites it each
// Euler step.
PreparedSample prepare_condition(const TrainingSample& sample, const ToyEncoders& enc,
                                 const LanceModel& model, bool drop_text, bool drop_visual,
                                 const Tensor& noisy_payload, int layout_t, int layout_h,
                                 int layout_w);

// Token embeddings + payload connectors + timestep embedding on noisy rows.
Tensor embed_sequence(const PreparedSample& ps, LanceModel& model, double flow_t, Tape* tape);

// Embed + rotary tables + mask + backbone.
Tensor forward_hidden(const PreparedSample& ps, LanceModel& model, double flow_t, Tape* tape);

}  // namespace lance
