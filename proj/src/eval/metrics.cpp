#include "emovae/eval/metrics.hpp"

#include "emovae/error.hpp"

namespace emovae {

std::int64_t ConfusionMatrix::total() const {
  std::int64_t t = 0;
  for (std::int64_t c : counts) t += c;
  return t;
}

std::int64_t ConfusionMatrix::row_sum(std::size_t true_class) const {
  std::int64_t t = 0;
  for (std::size_t p = 0; p < n_classes; ++p) t += at(true_class, p);
  return t;
}

std::int64_t ConfusionMatrix::col_sum(std::size_t predicted) const {
  std::int64_t t = 0;
  for (std::size_t r = 0; r < n_classes; ++r) t += at(r, predicted);
  return t;
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  if (n_classes == 0) {
    *this = other;
    return;
  }
  if (other.n_classes != n_classes) {
    throw DimensionError("ConfusionMatrix::merge: class counts differ");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

double weighted_accuracy(const ConfusionMatrix& cm) {
  const std::int64_t total = cm.total();
  if (total == 0) throw ValidationError("weighted_accuracy: empty confusion matrix");
  std::int64_t trace = 0;
  for (std::size_t c = 0; c < cm.n_classes; ++c) trace += cm.at(c, c);
  return static_cast<double>(trace) / static_cast<double>(total);
}

double unweighted_accuracy(const ConfusionMatrix& cm) {
  double sum = 0.0;
  std::size_t present = 0;
  for (std::size_t c = 0; c < cm.n_classes; ++c) {
    const std::int64_t row = cm.row_sum(c);
    if (row == 0) continue;  // class absent from the truth
    sum += static_cast<double>(cm.at(c, c)) / static_cast<double>(row);
    ++present;
  }
  if (present == 0) throw ValidationError("unweighted_accuracy: no true instances");
  return sum / static_cast<double>(present);
}

FMeasure f_measure(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw ValidationError("f_measure: empty confusion matrix");
  FMeasure out;
  out.per_class.resize(cm.n_classes, 0.0);
  double macro_sum = 0.0;
  std::size_t present = 0;
  for (std::size_t c = 0; c < cm.n_classes; ++c) {
    const std::int64_t tp = cm.at(c, c);
    const std::int64_t col = cm.col_sum(c);
    const std::int64_t row = cm.row_sum(c);
    const double precision = col == 0 ? 0.0
                                      : static_cast<double>(tp) / static_cast<double>(col);
    const double recall = row == 0 ? 0.0
                                   : static_cast<double>(tp) / static_cast<double>(row);
    const double f1 = (precision + recall) == 0.0
                          ? 0.0
                          : 2.0 * precision * recall / (precision + recall);
    out.per_class[c] = f1;
    if (row > 0) {
      macro_sum += f1;
      ++present;
    }
  }
  out.macro = present == 0 ? 0.0 : macro_sum / static_cast<double>(present);
  return out;
}

}  // namespace emovae
