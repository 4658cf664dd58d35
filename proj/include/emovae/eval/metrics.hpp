#pragma once

#include <cstdint>
#include <vector>

namespace emovae {

// Integer confusion counts, rows = true class, columns = predicted.
struct ConfusionMatrix {
  std::size_t n_classes = 0;
  std::vector<std::int64_t> counts;  // row-major n x n

  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::size_t n)
      : n_classes(n), counts(n * n, 0) {}

  std::int64_t& at(std::size_t true_class, std::size_t predicted) {
    return counts[true_class * n_classes + predicted];
  }
  std::int64_t at(std::size_t true_class, std::size_t predicted) const {
    return counts[true_class * n_classes + predicted];
  }
  void add(std::size_t true_class, std::size_t predicted) {
    ++at(true_class, predicted);
  }
  std::int64_t total() const;
  std::int64_t row_sum(std::size_t true_class) const;
  std::int64_t col_sum(std::size_t predicted) const;
  void merge(const ConfusionMatrix& other);
};

// WA: overall accuracy, trace / total.
double weighted_accuracy(const ConfusionMatrix& cm);

// UA: mean per-class recall over classes that occur in the truth.
double unweighted_accuracy(const ConfusionMatrix& cm);

struct FMeasure {
  std::vector<double> per_class;  // F1 per class, 0 when P + R = 0
  double macro = 0.0;             // mean over classes present in the truth
};

FMeasure f_measure(const ConfusionMatrix& cm);

}  // namespace emovae
