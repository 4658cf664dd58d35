#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emovae/corpus/manifest.hpp"

namespace emovae {

enum class SplitScheme { loso, kfold, holdout };

std::string to_string(SplitScheme scheme);

struct Fold {
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  std::string test_tag;  // e.g. "session3" or "shard2"
};

struct FoldPlan {
  SplitScheme scheme = SplitScheme::loso;
  std::vector<Fold> folds;
};

struct SplitSpec {
  SplitScheme scheme = SplitScheme::loso;
  std::size_t k = 10;            // kfold only
  double train_fraction = 0.9;   // holdout only
  std::uint64_t seed = 0;        // shuffling for kfold/holdout
};

// loso: fold i tests session i and trains on the rest (speaker-independent,
// as sessions partition speakers). kfold: seeded shuffle, k near-equal test
// shards that partition the records. holdout: one train/test split.
FoldPlan make_folds(std::span<const UtteranceRecord> records,
                    const SplitSpec& spec);

}  // namespace emovae
