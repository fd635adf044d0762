#pragma once

#include "lance/sequence.hpp"
#include "lance/tensor.hpp"

#include <array>
#include <vector>

namespace lance {

struct Position3D {
    int t = 0, h = 0, w = 0;
};

enum class GroupIndexing {
    ByType,       // noisy -> 0, vit -> 1, clean -> 2
    ByOccurrence  // visual groups numbered in sequence order
};

struct MaPEConfig {
    bool enabled = true;
    int delta_t = 1000;
    GroupIndexing indexing = GroupIndexing::ByType;
    // Rotary channel pairs per axis; must sum to head_dim/2.
    std::array<int, 3> axis_split = {0, 0, 0};
    double rope_base = 10000.0;

    static std::array<int, 3> default_axis_split(int head_dim);
};

// Eq.-style base assignment: token (t,h,w) of a visual group starting at D
// gets [D+t, D+h, D+w].
std::vector<Position3D> base_positions(int start_index, int t_extent, int h_extent, int w_extent);

int group_index(Modality m, GroupIndexing indexing, int occurrence);

// Adds [i*delta_t, 0, 0] to every position of a visual group.
std::vector<Position3D> mape_positions(const std::vector<Position3D>& base, Modality group,
                                       const MaPEConfig& cfg, int occurrence = 0);

// Positions for a whole sequence. Text tokens (and delimiters) advance a
// scalar counter p and get (p,p,p); a visual group starts at
// D = max position used so far + 1.
std::vector<Position3D> sequence_positions(const MultimodalSequence& seq, const MaPEConfig& cfg);

// cos/sin tables [n, head_dim/2] for rotary(); pair j of axis a rotates by
// pos.a * rope_base^(-2j/dim_a).
struct RotaryTables {
    Tensor cos_tab;
    Tensor sin_tab;
};
RotaryTables rotary_tables(const std::vector<Position3D>& positions, int head_dim,
                           const MaPEConfig& cfg);

}  // namespace lance
