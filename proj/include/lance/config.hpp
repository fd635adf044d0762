#pragma once

#include "lance/inference.hpp"
#include "lance/trainer.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lance {

// Raised for any malformed, unknown, or out-of-range config field; the
// message names the offending section/key.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Full run description parsed from a sectioned key-value text file.
struct RunConfig {
    ModelConfig model;
    MaPEConfig mape;
    CodecConfig codec;
    SynthConfig synth;
    SamplerConfig sampler;
    std::vector<Stage> stages = all_stages();
    uint64_t seed = 1;
    std::string out_dir = "runs/toy";
    int checkpoint_every = 0;  // 0 = end of stage only
    // per-stage step overrides; 0 keeps the stage_plan default
    int pt_steps = 0;
    int ct_steps = 0;
    int sft_steps = 0;

    // stage_plan with the override applied
    StagePlan plan_for(Stage stage) const;
};

// Parses `key = value` lines under `[section]` headers. '#' starts a
// comment; blank lines ignored; unknown sections or keys are errors.
RunConfig parse_run_config_text(const std::string& text);
RunConfig load_run_config(const std::string& path);

}  // namespace lance
