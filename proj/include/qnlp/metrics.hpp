#pragma once

#include <array>
#include <span>
#include <vector>

namespace qnlp {

constexpr int kNumClasses = 3;

struct ClassCounts {
  std::array<int, kNumClasses> tp{};
  std::array<int, kNumClasses> fp{};
  std::array<int, kNumClasses> fn{};
};

ClassCounts count_confusion(std::span<const int> predictions,
                            std::span<const int> labels);

/// Per-class F1 = 2TP / (2TP + FP + FN); an absent, never-predicted class
/// scores zero.
std::array<double, kNumClasses> per_class_f1(const ClassCounts& c);

double macro_f1(std::span<const int> predictions, std::span<const int> labels);
double accuracy(std::span<const int> predictions, std::span<const int> labels);

}  // namespace qnlp
