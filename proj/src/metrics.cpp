#include "qnlp/metrics.hpp"

namespace qnlp {

ClassCounts count_confusion(std::span<const int> predictions,
                            std::span<const int> labels) {
  ClassCounts c;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    int p = predictions[i], y = labels[i];
    if (p == y) {
      c.tp[y] += 1;
    } else {
      c.fp[p] += 1;
      c.fn[y] += 1;
    }
  }
  return c;
}

std::array<double, kNumClasses> per_class_f1(const ClassCounts& c) {
  std::array<double, kNumClasses> f1{};
  for (int k = 0; k < kNumClasses; ++k) {
    double denom = 2.0 * c.tp[k] + c.fp[k] + c.fn[k];
    f1[k] = denom > 0.0 ? 2.0 * c.tp[k] / denom : 0.0;
  }
  return f1;
}

double macro_f1(std::span<const int> predictions, std::span<const int> labels) {
  auto f1 = per_class_f1(count_confusion(predictions, labels));
  double s = 0.0;
  for (double v : f1) s += v;
  return s / kNumClasses;
}

double accuracy(std::span<const int> predictions, std::span<const int> labels) {
  if (predictions.empty()) return 0.0;
  int ok = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i)
    ok += predictions[i] == labels[i];
  return double(ok) / double(predictions.size());
}

}  // namespace qnlp
