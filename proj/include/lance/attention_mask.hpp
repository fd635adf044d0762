#pragma once

#include "lance/sequence.hpp"

#include <string>
#include <vector>

namespace lance {

// n x n boolean attention mask; true = query row may attend to key column.
struct AttentionMask {
    int n = 0;
    std::vector<bool> allowed;

    bool at(int qi, int kj) const { return allowed[static_cast<size_t>(qi) * n + kj]; }
    void set(int qi, int kj, bool v) { allowed[static_cast<size_t>(qi) * n + kj] = v; }

    // '.'/'#' grid, one row per line, for golden-file comparison.
    std::string dump() const;
};

// Per-pair rule: same text segment -> causal; same visual segment ->
// bidirectional; across segments -> key segment must precede and be clean.
// segs must cover [0,n) (use MultimodalSequence::mask_segments()).
bool pair_allowed(int qi, int kj, const std::vector<SegmentDescriptor>& segs);

AttentionMask build_mask(const std::vector<SegmentDescriptor>& segs, int n);

// Additive mask for attention logits: 0 where allowed, -1e9 where not.
Tensor mask_bias(const AttentionMask& mask);

constexpr double kMaskPenalty = -1e9;

}  // namespace lance
