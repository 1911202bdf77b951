#pragma once

#include <array>
#include <string>
#include <vector>

namespace qnlp::harness {

struct Corpus {
  struct Sentence {
    std::string text;
    int label = 1;  // 0 negative, 1 neutral, 2 positive
  };
  std::vector<Sentence> sentences;
  std::string provenance;

  std::array<int, 3> class_counts() const;
};

/// TSV `sentence<TAB>label` loader; malformed lines are reported with line
/// numbers. Throws ParseError / EmptyCorpus.
Corpus load_corpus(const std::string& path);

struct SplitSpec {
  double train = 0.64;
  double dev = 0.16;
  double test = 0.20;
  std::uint64_t seed = 42;
};

struct SplitCorpus {
  Corpus train, dev, test;
};

/// Deterministic stratified split. Per-class allocation: train counts by
/// largest remainder against floor(train_ratio * N), dev = floor(dev_ratio *
/// class count), test takes the rest; each class stays within one sentence of
/// its exact proportion. Throws TooFewPerClass when any class has < 5
/// sentences.
SplitCorpus stratified_split(const Corpus& corpus, const SplitSpec& spec);

enum class SynthMode {
  separable,       // class decided by the movement tag of the main verb
  order_sensitive  // class decided by the order of up/down clauses only
};

struct SynthSpec {
  SynthMode mode = SynthMode::separable;
  int sentences = 300;
  std::uint64_t seed = 7;
};

/// Template generator over the rewrite-tag vocabulary. In separable mode the
/// three classes use upward / neutral / downward verbs; in order-sensitive
/// mode every class draws the same clause multiset and only the clause order
/// carries the label, so mean pooling cannot separate the classes while a
/// sequence reader can.
Corpus make_synthetic_corpus(const SynthSpec& spec);

}  // namespace qnlp::harness
