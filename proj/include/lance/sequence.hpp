#pragma once

#include "lance/tensor.hpp"

#include <string>
#include <vector>

namespace lance {

enum class Modality { Text, VitSemantic, VaeClean, VaeNoisy };

const char* modality_name(Modality m);
bool is_clean_modality(Modality m);

struct SegmentDescriptor {
    Modality modality = Modality::Text;
    int start = 0;
    int len = 0;
    int t = 1, h = 1, w = 1;  // Text uses (len,1,1) nominally, positioned 1-D
    bool is_clean = true;
};

// One input block before delimiter insertion. Text blocks carry token ids,
// visual blocks a [T*H*W, channels] payload.
struct Block {
    Modality modality = Modality::Text;
    std::vector<int> ids;
    Tensor payload;
    int t = 1, h = 1, w = 1;
};

struct MultimodalSequence {
    int n = 0;
    // Token id per position; -1 at visual payload positions.
    std::vector<int> token_ids;
    // Modality per position; delimiters count as Text.
    std::vector<Modality> token_modality;
    // Typed payload segments, delimiters excluded, ordered by start.
    std::vector<SegmentDescriptor> segments;
    // Visual payload per visual segment, in segment order.
    std::vector<Tensor> payloads;

    // Full coverage of [0,n): payload segments plus one-token text-causal
    // micro-segments for every delimiter. Input to attention mask building.
    std::vector<SegmentDescriptor> mask_segments() const;
};

// Inserts BOT/EOT around text blocks and BOV/EOV around visual blocks and
// records the segment table. At most one VaeNoisy block is allowed.
MultimodalSequence build_sequence(const std::vector<Block>& blocks);

}  // namespace lance
