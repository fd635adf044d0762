#pragma once

#include "lance/encoders.hpp"
#include "lance/schedule.hpp"
#include "lance/tokenizer.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lance {

// Closed attribute grammar for the synthetic corpus: one colored shape per
// image, optionally moving in a cardinal direction per clip.
enum class ColorKind { Red, Green, Blue, Yellow };
enum class ShapeKind { Square, Circle, Triangle, Cross };
enum class MotionDir { Right, Left, Up, Down };

constexpr int kNumColors = 4;
constexpr int kNumShapes = 4;
constexpr int kNumDirs = 4;

const char* color_name(ColorKind c);
const char* shape_name(ShapeKind s);
const char* dir_name(MotionDir d);
// RGB triple in [0,1] for a palette color.
void color_rgb(ColorKind c, double rgb[3]);

struct SampleAttrs {
    ColorKind color = ColorKind::Red;
    ShapeKind shape = ShapeKind::Square;
    MotionDir dir = MotionDir::Right;
};

struct SynthConfig {
    int image_size = 32;
    int video_size = 16;
    // (frames - 1) must divide by the codec's temporal ratio.
    int video_frames = 5;
};

// Deterministic renderers. Images are single-frame; clips move the shape by
// a fixed per-frame step. The pixel content is a pure function of the
// attributes, so generation targets are exactly learnable.
VisualArray render_image(const SampleAttrs& attrs, int size);
VisualArray render_video(const SampleAttrs& attrs, int size, int frames);
// Subject reference: the shape drawn in white (color withheld).
VisualArray render_subject(ShapeKind shape, int size);

// One training/eval sample. Visual conditions are split by pathway: vit
// conditions feed the semantic encoder, latent conditions enter as clean
// VAE latents. Generation tasks carry a target array; understanding tasks
// carry the expected answer text.
struct TrainingSample {
    TaskKind task = TaskKind::T2I;
    bool is_video = false;
    SampleAttrs attrs;       // attributes of the target / answer
    SampleAttrs src_attrs;   // edit source attributes (edits only)
    PromptTask prompt_task = PromptTask::T2iT2v;
    std::string user_text;
    std::string answer_text;
    std::vector<VisualArray> vit_conditions;
    std::vector<VisualArray> latent_conditions;
    std::optional<VisualArray> target;
};

// Procedural sample for a task; all content derives from rng, so the map
// (seed -> sample) is bijective and re-draws are identical.
TrainingSample synth_sample(TaskKind task, bool is_video, const SynthConfig& cfg,
                            std::mt19937_64& rng);

// Per-(seed, index) convenience wrapper used by the data workers.
TrainingSample synth_sample_at(TaskKind task, bool is_video, const SynthConfig& cfg, uint64_t seed,
                               uint64_t index);

// Programmatic judge for generated pixels. Classification is independent of
// the renderer internals: foreground extraction, nearest palette color, and
// template-mask IoU for the shape.
struct ImageJudgment {
    bool has_foreground = false;
    ColorKind color = ColorKind::Red;
    ShapeKind shape = ShapeKind::Square;
    double shape_iou = 0.0;
};
ImageJudgment classify_image(const VisualArray& v, int frame = 0);

struct VideoJudgment {
    ImageJudgment appearance;  // judged on the middle frame
    bool has_motion = false;
    MotionDir dir = MotionDir::Right;
};
VideoJudgment classify_video(const VisualArray& v);

// Line-delimited record serialization (task kind, texts, payloads as flat
// float arrays with layout triples).
std::string sample_to_record(const TrainingSample& s);
TrainingSample sample_from_record(const std::string& line);

}  // namespace lance
