#pragma once

#include "lance/backbone.hpp"
#include "lance/tensor.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace lance {

// Interpolant bundle for one generation target segment.
struct FlowState {
    Tensor x0;        // noise latent
    Tensor x1;        // clean latent
    double t = 0.0;   // warped timestep in (0,1)
    Tensor x_t;       // t*x1 + (1-t)*x0, exact
    Tensor v_target;  // x1 - x0
};

struct LossWeights {
    double lambda_u = 0.25;
    double lambda_g = 1.0;
};

// LM head, LLM-to-latent connector and flow head parameters.
struct HeadWeights {
    Tensor lm_head;       // [d, vocab]
    Tensor in_conn_w;     // [latent_channels, d] latent -> backbone input
    Tensor in_conn_b;     // [d]
    Tensor out_conn_w;    // [d, connector_dim] hidden -> flow head input
    Tensor out_conn_b;    // [connector_dim]
    Tensor flow_w1;       // [connector_dim, connector_dim]
    Tensor flow_b1;       // [connector_dim]
    Tensor flow_w2;       // [connector_dim, latent_channels]
    Tensor flow_b2;       // [latent_channels]

    void for_each_param(const std::function<void(const std::string&, Tensor&)>& fn);
};

HeadWeights init_heads(const ModelConfig& cfg, std::mt19937_64& rng);

// Mean CE over supervised positions only; hidden rows are gathered at
// loss_positions (positions whose next token is a supervised target).
Tensor lm_loss(const Tensor& hidden, const std::vector<int>& loss_positions,
               const std::vector<int>& targets, DualExpertWeights& backbone, HeadWeights& heads,
               Tape* tape);

// Standard shifted-time warp; shift = 1 is the identity.
double shift_map(double u, double shift);

FlowState make_flow_state(const Tensor& x1, double shift, std::mt19937_64& rng);

// Predicted velocity at the noisy-segment hidden rows vs the target field.
Tensor flow_loss(const Tensor& hidden, const std::vector<int>& noisy_positions,
                 const FlowState& state, DualExpertWeights& backbone, HeadWeights& heads,
                 Tape* tape);

// Velocity head on already-gathered, pathway-normed hidden rows.
Tensor predict_velocity(const Tensor& normed_rows, HeadWeights& heads, Tape* tape);

double total_loss(double l_und, double l_gen, bool has_und, bool has_gen, const LossWeights& w);

// Sinusoidal embedding of a scalar timestep, [1, dim] replicated per row.
Tensor timestep_embedding(double t, int dim, int rows);

enum class Stage { PT, CT1, CT2, CT3, SFT };

struct CfgDropDecision {
    bool drop_text = false;
    bool drop_all = false;
};

// PT: text condition dropped w.p. 0.10. CT/SFT: all conditions dropped
// w.p. 0.05, else text only w.p. 0.05 (visual kept).
CfgDropDecision cfg_drop(Stage stage, std::mt19937_64& rng);

}  // namespace lance
