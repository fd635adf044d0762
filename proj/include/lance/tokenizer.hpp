#pragma once

#include <string>
#include <vector>

namespace lance {

// Byte-level vocabulary: ids 0..511 are byte slots (only 0..255 populated),
// ids 512..519 are special tokens. Injective, no merges.
namespace tok {

constexpr int kByteVocab = 512;
constexpr int kBot = 512;
constexpr int kEot = 513;
constexpr int kBov = 514;
constexpr int kEov = 515;
constexpr int kImStart = 516;
constexpr int kImEnd = 517;
constexpr int kVisionStart = 518;
constexpr int kVisionEnd = 519;
constexpr int kVocabSize = 520;

std::vector<int> encode(const std::string& text);
// Byte ids back to text; special tokens render as their <|...|> markers.
std::string decode(const std::vector<int>& ids);
bool is_special(int id);

}  // namespace tok

enum class PromptTask { Caption, Qa, T2iT2v, X2iX2v };

// Exact chat templates with role markers. Visual payload tokens are not part
// of the id list; when has_vision is set the template carries an adjacent
// vision_start/vision_end pair and split_at_vision() gives the insertion
// point for the visual blocks.
std::vector<int> render_prompt(PromptTask task, const std::string& user_text, bool has_vision,
                               bool is_video = false);

struct PromptSplit {
    std::vector<int> prefix;  // ends with vision_start
    std::vector<int> suffix;  // begins with vision_end
};
// Splits between the vision markers; throws if the prompt has no vision slot.
PromptSplit split_at_vision(const std::vector<int>& prompt);

}  // namespace lance
