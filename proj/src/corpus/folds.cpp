#include "emovae/corpus/folds.hpp"

#include <algorithm>
#include <map>

#include "emovae/error.hpp"
#include "emovae/numeric/rng.hpp"

namespace emovae {

std::string to_string(SplitScheme scheme) {
  switch (scheme) {
    case SplitScheme::loso: return "loso";
    case SplitScheme::kfold: return "kfold";
    case SplitScheme::holdout: return "holdout";
  }
  throw ParameterError("unknown split scheme");
}

namespace {

FoldPlan make_loso(std::span<const UtteranceRecord> records) {
  std::map<int, std::vector<std::string>> by_session;
  for (const auto& r : records) by_session[r.session].push_back(r.id);
  if (by_session.size() < 2) {
    throw ValidationError("loso needs at least 2 sessions, got " +
                          std::to_string(by_session.size()));
  }
  FoldPlan plan;
  plan.scheme = SplitScheme::loso;
  for (const auto& [test_session, test_ids] : by_session) {
    Fold fold;
    fold.test_tag = "session" + std::to_string(test_session);
    fold.test_ids = test_ids;
    for (const auto& [sess, ids] : by_session) {
      if (sess == test_session) continue;
      fold.train_ids.insert(fold.train_ids.end(), ids.begin(), ids.end());
    }
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  RngStream rng(mix_seed(seed, 0x666f6c64 /* "fold" */));
  shuffle_indices(order, rng);
  return order;
}

FoldPlan make_kfold(std::span<const UtteranceRecord> records, std::size_t k,
                    std::uint64_t seed) {
  if (k < 2) throw ParameterError("kfold needs k >= 2");
  if (records.size() < k) {
    throw ValidationError("kfold(" + std::to_string(k) + ") needs at least " +
                          std::to_string(k) + " records, got " +
                          std::to_string(records.size()));
  }
  const auto order = shuffled_order(records.size(), seed);
  FoldPlan plan;
  plan.scheme = SplitScheme::kfold;
  const std::size_t base = records.size() / k;
  const std::size_t extra = records.size() % k;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t take = base + (i < extra ? 1 : 0);
    Fold fold;
    fold.test_tag = "shard" + std::to_string(i);
    for (std::size_t j = 0; j < records.size(); ++j) {
      const std::string& id = records[order[j]].id;
      if (j >= pos && j < pos + take) {
        fold.test_ids.push_back(id);
      } else {
        fold.train_ids.push_back(id);
      }
    }
    pos += take;
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

FoldPlan make_holdout(std::span<const UtteranceRecord> records,
                      double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ParameterError("holdout train_fraction must be in (0,1)");
  }
  if (records.size() < 2) {
    throw ValidationError("holdout needs at least 2 records");
  }
  const auto order = shuffled_order(records.size(), seed);
  std::size_t n_train = static_cast<std::size_t>(
      train_fraction * static_cast<double>(records.size()));
  n_train = std::clamp<std::size_t>(n_train, 1, records.size() - 1);
  FoldPlan plan;
  plan.scheme = SplitScheme::holdout;
  Fold fold;
  fold.test_tag = "holdout";
  for (std::size_t j = 0; j < records.size(); ++j) {
    const std::string& id = records[order[j]].id;
    (j < n_train ? fold.train_ids : fold.test_ids).push_back(id);
  }
  plan.folds.push_back(std::move(fold));
  return plan;
}

}  // namespace

FoldPlan make_folds(std::span<const UtteranceRecord> records,
                    const SplitSpec& spec) {
  if (records.empty()) throw ValidationError("make_folds: no records");
  switch (spec.scheme) {
    case SplitScheme::loso: return make_loso(records);
    case SplitScheme::kfold: return make_kfold(records, spec.k, spec.seed);
    case SplitScheme::holdout:
      return make_holdout(records, spec.train_fraction, spec.seed);
  }
  throw ParameterError("unknown split scheme");
}

}  // namespace emovae
