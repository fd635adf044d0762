#pragma once

#include "lance/tensor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lance {

// Frames of RGB float pixels in [0,1], layout [F][H][W][3].
struct VisualArray {
    int frames = 0;
    int height = 0;
    int width = 0;
    std::vector<double> pixels;

    static VisualArray zeros(int frames, int height, int width);
    double& at(int f, int y, int x, int c);
    double at(int f, int y, int x, int c) const;
    int64_t numel() const { return static_cast<int64_t>(pixels.size()); }
};

// [T*H*W, channels] latent tokens plus the grid extents.
struct LatentGrid {
    int t = 0, h = 0, w = 0;
    int channels = 0;
    Tensor tokens;  // [t*h*w, channels]
};

struct CodecConfig {
    int spatial_ratio = 4;   // rs
    int temporal_ratio = 2;  // rt
    // Semantic path: spatial patch, temporal patch, then a merge x merge
    // spatial merge of neighbouring patches.
    int sem_spatial_patch = 8;
    int sem_temporal_patch = 2;
    int sem_merge = 2;
    int model_dim = 128;
    uint64_t seed = 424242;
    // Std of clean latents over the synthetic corpus. The flow model works
    // on z / latent_scale so that data and the standard-normal noise prior
    // have comparable magnitudes (the usual latent-diffusion scale factor).
    double latent_scale = 0.21;

    // Exact invertibility pins the latent channel count to the folded
    // patch volume: 3 * rs^2 * rt.
    int latent_channels() const { return 3 * spatial_ratio * spatial_ratio * temporal_ratio; }
};

// Deterministic stand-ins for the semantic ViT and the causal video VAE.
// The latent codec is an orthogonal space-to-depth fold, so decode is the
// exact inverse of encode and latent energy equals pixel energy.
class ToyEncoders {
public:
    explicit ToyEncoders(const CodecConfig& cfg);

    const CodecConfig& config() const { return cfg_; }

    // Patchified projection to model dim; returns tokens and the (T,H,W)
    // layout. Odd frame counts pad the last temporal group by repeating the
    // final frame.
    struct SemanticTokens {
        Tensor tokens;  // [T*H*W, model_dim]
        int t = 0, h = 0, w = 0;
    };
    SemanticTokens semantic_encode(const VisualArray& v) const;

    // Causal grouping: first frame alone, then groups of rt frames, so
    // T = 1 + (F-1)/rt. (F-1) must be divisible by rt for F > 1.
    LatentGrid latent_encode(const VisualArray& v) const;
    VisualArray latent_decode(const LatentGrid& grid) const;

    // Grid extents latent_encode would produce, without encoding.
    void latent_layout(int frames, int height, int width, int& t, int& h, int& w) const;

private:
    CodecConfig cfg_;
    Tensor mix_;          // orthogonal [c, c] channel mixing
    Tensor mix_inv_;      // its transpose
    Tensor sem_proj_img_; // [model_dim, patch volume] orthonormal rows
    Tensor sem_proj_vid_;
};

// Raw file format: 8 x uint32 LE header (magic, F, H, W, channels, rs, rt,
// reserved) followed by f32 LE pixels.
void save_visual(const VisualArray& v, const std::string& path, const CodecConfig& cfg);
VisualArray load_visual(const std::string& path);
// 8-bit PPM dump of one frame for manual inspection.
void save_ppm(const VisualArray& v, int frame, const std::string& path);

}  // namespace lance
