#pragma once

#include "lance/config.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lance {

// Held-out QA exact match: the model answers synthetic X2T questions by
// greedy decoding; an answer counts only if it equals the generator's
// ground truth byte-for-byte.
struct UnderstandingReport {
    int n = 0;
    int correct = 0;
    double accuracy() const { return n > 0 ? static_cast<double>(correct) / n : 0.0; }
    std::string format() const;
};
UnderstandingReport eval_understanding(LanceModel& model, const ToyEncoders& enc,
                                       const SynthConfig& synth, int n, uint64_t seed);

// Conditional generation judged by the programmatic pixel classifier:
// color+shape for T2I, motion direction (and appearance) for T2V.
struct GenerationReport {
    int n_images = 0;
    int t2i_ok = 0;
    int n_videos = 0;
    int t2v_motion_ok = 0;
    int t2v_appearance_ok = 0;
    double t2i_accuracy() const {
        return n_images > 0 ? static_cast<double>(t2i_ok) / n_images : 0.0;
    }
    double t2v_motion_accuracy() const {
        return n_videos > 0 ? static_cast<double>(t2v_motion_ok) / n_videos : 0.0;
    }
    std::string format() const;
};
GenerationReport eval_generation(LanceModel& model, const ToyEncoders& enc,
                                 const SynthConfig& synth, const SamplerConfig& sampler,
                                 int n_images, int n_videos, uint64_t seed);

// Twin training runs (identical seed/data) with modality-aware position
// offsets on vs off; reports final generation loss and a held-out
// editing-task flow loss for both runs.
struct AblationReport {
    int steps = 0;
    double on_l_gen = 0.0;
    double off_l_gen = 0.0;
    double on_edit_loss = 0.0;
    double off_edit_loss = 0.0;
    std::string format() const;
};
AblationReport mape_ablation(const RunConfig& cfg, int steps, uint64_t seed);

// Mean flow loss over held-out edit samples at fixed interpolation draws.
double edit_flow_loss(LanceModel& model, const ToyEncoders& enc, const SynthConfig& synth, int n,
                      uint64_t seed);

// Named segment layouts whose masks are pinned as golden grids.
std::vector<std::pair<std::string, std::vector<SegmentDescriptor>>> golden_mask_layouts();

// Writes one '.'/'#' grid per layout into dir (used to regenerate goldens).
void write_mask_goldens(const std::string& dir);

struct MaskGoldenReport {
    int n = 0;
    int matched = 0;
    std::vector<std::string> mismatches;
    bool pass() const { return n > 0 && matched == n; }
    std::string format() const;
};
MaskGoldenReport eval_mask_golden(const std::string& dir);

}  // namespace lance
