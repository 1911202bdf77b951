#include "qnlp/pregroup.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qnlp/errors.hpp"

namespace qnlp::pregroup {

PregroupType PregroupType::parse(const std::string& spec) {
  PregroupType t;
  std::istringstream ss(spec);
  std::string item;
  while (ss >> item) {
    if (item == "I") continue;
    Atom a;
    a.base = item[0];
    if (a.base != 'n' && a.base != 's')
      throw ParseError("unknown base type in '" + spec + "'");
    if (item.size() == 1) {
      a.adj = Adjoint::none;
    } else if (item.size() == 3 && item[1] == '^' && item[2] == 'l') {
      a.adj = Adjoint::left;
    } else if (item.size() == 3 && item[1] == '^' && item[2] == 'r') {
      a.adj = Adjoint::right;
    } else {
      throw ParseError("malformed atom '" + item + "' in '" + spec + "'");
    }
    t.atoms.push_back(a);
  }
  return t;
}

std::string PregroupType::to_string() const {
  if (atoms.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ' ';
    out += atoms[i].base;
    if (atoms[i].adj == Adjoint::left) out += "^l";
    if (atoms[i].adj == Adjoint::right) out += "^r";
  }
  return out;
}

namespace {

bool cancels(const Atom& a, const Atom& b) {
  if (a.base != b.base) return false;
  // Exactly one side carries an adjoint marker.
  return (a.plain() && !b.plain()) || (!a.plain() && b.plain());
}

}  // namespace

Reduction reduce_traced(const std::vector<Atom>& seq) {
  Reduction r;
  std::vector<int> stack;  // positions into seq
  for (int i = 0; i < int(seq.size()); ++i) {
    if (!stack.empty() && cancels(seq[stack.back()], seq[i])) {
      r.cups.push_back({stack.back(), i});
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  r.surviving = stack;
  for (int pos : stack) r.reduced.atoms.push_back(seq[pos]);
  return r;
}

PregroupType reduce(const PregroupType& concatenated) {
  return reduce_traced(concatenated.atoms).reduced;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon '" + path + "'");
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    lex.add(j.at("label").get<std::string>(),
            PregroupType::parse(j.at("type").get<std::string>()));
  }
  return lex;
}

void Lexicon::add(const std::string& label, const PregroupType& type) {
  entries_[label].push_back(type);
}

std::vector<PregroupType> Lexicon::candidates(const textprep::Token& token) const {
  auto it = entries_.find(token.label);
  if (it != entries_.end()) return it->second;

  using textprep::PosClass;
  switch (textprep::classify_token(token)) {
    case PosClass::verb:
      return {PregroupType::parse("n^r s n^l"), PregroupType::parse("n^r s"),
              PregroupType::parse("n n^l")};
    case PosClass::modifier:
      return {PregroupType::parse("n n^l"), PregroupType::parse("n")};
    case PosClass::preposition:
      return {PregroupType::parse("s n^l"), PregroupType::parse("n n^l")};
    case PosClass::conjunction:
    case PosClass::discourse:
      return {PregroupType::parse("s s^l"), PregroupType::parse("n n^l")};
    case PosClass::noun:
    default:
      return {PregroupType::parse("n"), PregroupType::parse("n n^l")};
  }
}

namespace {

Reduction reduce_choice(const std::vector<std::vector<PregroupType>>& cands,
                        const std::vector<int>& choice,
                        std::vector<PregroupType>* types_out) {
  std::vector<Atom> seq;
  types_out->clear();
  for (std::size_t t = 0; t < choice.size(); ++t) {
    const PregroupType& ty = cands[t][choice[t]];
    types_out->push_back(ty);
    seq.insert(seq.end(), ty.atoms.begin(), ty.atoms.end());
  }
  return reduce_traced(seq);
}

}  // namespace

TypedChunk assign_types(const textprep::Chunk& chunk, const Lexicon& lexicon) {
  TypedChunk tc;
  tc.chunk = chunk;
  if (chunk.tokens.empty()) throw EmptySentence("empty chunk");

  std::vector<std::vector<PregroupType>> cands;
  cands.reserve(chunk.tokens.size());
  for (const auto& tok : chunk.tokens) cands.push_back(lexicon.candidates(tok));

  // Mixed-radix scan over candidate combinations, preferring the first one
  // whose normal form is exactly s, then the shortest normal form.
  std::vector<int> choice(cands.size(), 0);
  std::vector<int> best_choice = choice;
  std::size_t best_len = SIZE_MAX;
  bool found_s = false;
  while (true) {
    std::vector<PregroupType> types;
    Reduction red = reduce_choice(cands, choice, &types);
    if (red.reduced.is_single_s()) {
      best_choice = choice;
      found_s = true;
      break;
    }
    if (red.reduced.atoms.size() < best_len) {
      best_len = red.reduced.atoms.size();
      best_choice = choice;
    }
    // increment
    std::size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < int(cands[k].size())) break;
      choice[k] = 0;
    }
    if (k == choice.size()) break;
  }

  tc.trace = reduce_choice(cands, best_choice, &tc.types);
  tc.reduced = tc.trace.reduced;
  tc.valid = found_s;
  return tc;
}

TypedChunk synthesize_s(const TypedChunk& tc) {
  if (!tc.reduced.is_unit())
    throw InvalidInput("synthesize_s requires a unit-typed chunk, got '" +
                       tc.reduced.to_string() + "'");
  TypedChunk out = tc;
  textprep::Token synth;
  synth.surface = synthetic_s_label();
  synth.label = synthetic_s_label();
  out.chunk.tokens.push_back(synth);
  out.types.push_back(PregroupType::parse("s"));
  out.synthesized = true;

  std::vector<Atom> seq;
  for (const auto& ty : out.types)
    seq.insert(seq.end(), ty.atoms.begin(), ty.atoms.end());
  out.trace = reduce_traced(seq);
  out.reduced = out.trace.reduced;
  out.valid = out.reduced.is_single_s();
  return out;
}

}  // namespace qnlp::pregroup
