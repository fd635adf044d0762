#pragma once

#include "lance/model.hpp"
#include "lance/schedule.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lance {

struct AdamWConfig {
    double beta1 = 0.9;
    double beta2 = 0.95;
    double eps = 1e-15;
    double weight_decay = 0.0;
};

// First/second moments aligned with the model's parameter traversal order,
// plus an exponential moving average of the weights (the copy used at
// inference time).
struct OptimizerState {
    AdamWConfig cfg;
    int64_t step = 0;
    std::vector<std::string> names;
    std::vector<Tensor> m;
    std::vector<Tensor> v;
    std::vector<Tensor> ema;

    void init(LanceModel& model);
};

// Copies the EMA weights into the model (for sampling/eval).
void load_ema(LanceModel& model, const OptimizerState& opt);

// Global-norm clip across all parameter gradients; returns the pre-clip norm.
double clip_global_norm(LanceModel& model, double max_norm);

// One AdamW update over all parameters at the given learning rate.
void adamw_update(LanceModel& model, OptimizerState& opt, double lr);

struct TrainMetrics {
    int step = 0;
    double lr = 0.0;
    double l_und = 0.0;
    double l_gen = 0.0;
    double total = 0.0;
    double grad_norm = 0.0;
    int n_und = 0;
    int n_gen = 0;
    std::vector<std::string> tasks;

    std::string to_json() const;
};

constexpr int kToyBatchSize = 4;

// One optimization step: draw batch_size samples from the stage mixture,
// accumulate gradients of Eq.-5-style weighted loss, clip, update.
// Sampling is stateless per (seed, stage, step, slot), so runs are
// reproducible and resumable.
TrainMetrics train_step(LanceModel& model, OptimizerState& opt, const ToyEncoders& enc,
                        const SynthConfig& synth, const StagePlan& plan, int step, uint64_t seed,
                        int batch_size = kToyBatchSize);

// Single-file checkpoint: text manifest (names, shapes, offsets, checksum),
// a separator line, then the flat little-endian f64 payload. Round trips
// bitwise.
void checkpoint_save(LanceModel& model, const OptimizerState& opt, int step,
                     const std::string& path);
// Throws on manifest/shape mismatch or checksum failure; loads atomically
// (no partial state on error).
void checkpoint_load(LanceModel& model, OptimizerState& opt, int& step, const std::string& path);

// Runs plan.steps steps starting at start_step, appending one metrics line
// per step; checkpoints to checkpoint_path (if non-empty) every
// checkpoint_every steps and at the end.
void run_stage(LanceModel& model, OptimizerState& opt, const ToyEncoders& enc,
               const SynthConfig& synth, const StagePlan& plan, uint64_t seed, int start_step,
               std::ostream* metrics, const std::string& checkpoint_path, int checkpoint_every);

}  // namespace lance
