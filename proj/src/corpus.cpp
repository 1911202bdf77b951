#include "qnlp/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "qnlp/errors.hpp"
#include "qnlp/rng.hpp"

namespace qnlp::harness {

std::array<int, 3> Corpus::class_counts() const {
  std::array<int, 3> c{};
  for (const auto& s : sentences) c[s.label] += 1;
  return c;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus '" + path + "'");
  Corpus corpus;
  corpus.provenance = path;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": missing tab");
    std::string text = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    if (text.empty())
      throw ParseError(path + ":" + std::to_string(lineno) + ": empty sentence");
    if (label != "0" && label != "1" && label != "2")
      throw ParseError(path + ":" + std::to_string(lineno) + ": label '" +
                       label + "' outside {0,1,2}");
    corpus.sentences.push_back({std::move(text), label[0] - '0'});
  }
  if (corpus.sentences.empty()) throw EmptyCorpus(path);
  return corpus;
}

SplitCorpus stratified_split(const Corpus& corpus, const SplitSpec& spec) {
  std::array<std::vector<int>, 3> by_class;
  for (int i = 0; i < int(corpus.sentences.size()); ++i)
    by_class[corpus.sentences[i].label].push_back(i);
  for (int c = 0; c < 3; ++c)
    if (int(by_class[c].size()) < 5)
      throw TooFewPerClass("class " + std::to_string(c) + " has " +
                           std::to_string(by_class[c].size()) + " sentences");

  const int total = int(corpus.sentences.size());

  // Train counts: floors of train_ratio * class count, topped up by largest
  // remainder to floor(train_ratio * N).
  std::array<int, 3> n_train{}, n_dev{};
  std::array<double, 3> remainder{};
  int train_target = int(std::floor(spec.train * total));
  int assigned = 0;
  for (int c = 0; c < 3; ++c) {
    double exact = spec.train * double(by_class[c].size());
    n_train[c] = int(std::floor(exact));
    remainder[c] = exact - n_train[c];
    assigned += n_train[c];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
    return a < b;
  });
  for (int k = 0; k < 3 && assigned < train_target; ++k, ++assigned)
    n_train[order[k]] += 1;

  for (int c = 0; c < 3; ++c)
    n_dev[c] = int(std::floor(spec.dev * double(by_class[c].size())));

  SplitCorpus out;
  out.train.provenance = corpus.provenance + "#train";
  out.dev.provenance = corpus.provenance + "#dev";
  out.test.provenance = corpus.provenance + "#test";
  for (int c = 0; c < 3; ++c) {
    auto idx = by_class[c];
    Rng rng(hash_mix(spec.seed, std::uint64_t(c) + 1));
    rng.shuffle(idx);
    for (int i = 0; i < int(idx.size()); ++i) {
      const auto& s = corpus.sentences[idx[i]];
      if (i < n_train[c])
        out.train.sentences.push_back(s);
      else if (i < n_train[c] + n_dev[c])
        out.dev.sentences.push_back(s);
      else
        out.test.sentences.push_back(s);
    }
  }
  return out;
}

namespace {

const std::vector<std::string> kFinNouns = {
    "profits", "revenue", "sales", "earnings", "margins", "income"};
const std::vector<std::string> kUpVerbs = {
    "increased", "rose", "climbed", "improved", "gained"};
const std::vector<std::string> kDownVerbs = {
    "declined", "fell", "dropped", "decreased", "slumped"};
const std::vector<std::string> kNeutralVerbs = {
    "reported", "announced", "maintained", "recorded", "noted"};
const std::vector<std::string> kNeutralSubjects = {
    "the market", "the board", "the group", "analysts", "investors"};
const std::vector<std::string> kNeutralActs = {
    "waited", "watched", "met", "commented", "listened"};
const std::vector<std::string> kTails = {
    "in the quarter", "during the period", "after the review",
    "in the report", "during the year"};
const std::vector<std::string> kConjunctions = {
    "and", "while", "although", "because", "when", "since"};

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& pool) {
  return pool[rng.next_u64() % pool.size()];
}

std::string up_clause(Rng& rng) {
  return pick(rng, kFinNouns) + " " + pick(rng, kUpVerbs);
}
std::string down_clause(Rng& rng) {
  return pick(rng, kFinNouns) + " " + pick(rng, kDownVerbs);
}
std::string neutral_clause(Rng& rng) {
  return pick(rng, kNeutralSubjects) + " " + pick(rng, kNeutralActs);
}

std::string separable_sentence(Rng& rng, int label) {
  const std::vector<std::string>& verbs =
      label == 2 ? kUpVerbs : (label == 0 ? kDownVerbs : kNeutralVerbs);
  std::string s = "the company " + pick(rng, verbs) + " " +
                  pick(rng, kFinNouns) + " " + pick(rng, kTails);
  if (rng.uniform() < 0.5)
    s = pick(rng, kFinNouns) + " " + pick(rng, verbs) + " " + pick(rng, kTails);
  return s;
}

// Four conjunction-led clauses; every class draws the same clause pools, so
// only the positions of the up and down clauses carry the label:
//   2: up first, down last   0: down first, up last   1: both in the middle.
std::string order_sentence(Rng& rng, int label) {
  std::array<std::string, 4> clause;
  if (label == 2) {
    clause = {up_clause(rng), neutral_clause(rng), neutral_clause(rng),
              down_clause(rng)};
  } else if (label == 0) {
    clause = {down_clause(rng), neutral_clause(rng), neutral_clause(rng),
              up_clause(rng)};
  } else {
    bool up_first = rng.uniform() < 0.5;
    clause = {neutral_clause(rng), up_first ? up_clause(rng) : down_clause(rng),
              up_first ? down_clause(rng) : up_clause(rng),
              neutral_clause(rng)};
  }
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += ' ';
    s += pick(rng, kConjunctions) + " " + clause[i];
  }
  return s;
}

}  // namespace

Corpus make_synthetic_corpus(const SynthSpec& spec) {
  Corpus corpus;
  corpus.provenance =
      spec.mode == SynthMode::separable ? "synthetic-separable" : "synthetic-order";
  Rng rng(spec.seed);
  for (int i = 0; i < spec.sentences; ++i) {
    int label = i % 3;
    std::string text = spec.mode == SynthMode::separable
                           ? separable_sentence(rng, label)
                           : order_sentence(rng, label);
    corpus.sentences.push_back({std::move(text), label});
  }
  return corpus;
}

}  // namespace qnlp::harness
