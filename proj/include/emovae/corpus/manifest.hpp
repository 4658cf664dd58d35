#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emovae {

enum class DialogueKind { improvised, scripted };

std::string to_string(DialogueKind kind);

struct UtteranceRecord {
  std::string id;
  std::filesystem::path audio_path;  // resolved against the manifest location
  int session = 0;                   // 1-based
  std::string speaker;
  DialogueKind dialogue_kind = DialogueKind::improvised;
  std::string categorical_raw;
  double arousal = 0.0;  // all three on [1, 5]
  double power = 0.0;
  double valence = 0.0;
};

// CSV manifest with the exact header
//   id,audio_path,session,speaker,dialogue_kind,label,arousal,power,valence
// UTF-8, comma separated, no quoting. Malformed rows fail with the line
// number; duplicate ids and out-of-range dimension values are rejected.
std::vector<UtteranceRecord> load_manifest(const std::filesystem::path& path);

// The four kept emotion classes. "excited" folds into happiness; every other
// raw label is excluded from categorical experiments (not an error).
class LabelMap {
 public:
  static constexpr std::size_t kNumClasses = 4;
  static const std::array<std::string_view, kNumClasses> kClassNames;

  static std::size_t neutral() { return 0; }
  static std::size_t happiness() { return 1; }
  static std::size_t sadness() { return 2; }
  static std::size_t anger() { return 3; }

  // Case-insensitive; returns nullopt for excluded labels.
  std::optional<std::size_t> map(std::string_view raw) const;
};

std::optional<std::size_t> map_categorical(std::string_view raw,
                                           const LabelMap& lm);

enum class DimensionalBin { low, mid, high };

std::string to_string(DimensionalBin bin);

// v < 3 is low, v == 3 (exact) is mid, v > 3 is high; v must lie in [1, 5].
DimensionalBin bin_dimensional(double value);

}  // namespace emovae
