#pragma once

#include <map>
#include <string>
#include <vector>

#include "qnlp/textprep.hpp"

namespace qnlp::pregroup {

enum class Adjoint { none, left, right };

/// One atomic type: a base (n or s) with an optional adjoint marker.
struct Atom {
  char base = 'n';  // 'n' or 's'
  Adjoint adj = Adjoint::none;

  bool operator==(const Atom& o) const { return base == o.base && adj == o.adj; }
  bool plain() const { return adj == Adjoint::none; }
};

/// Ordered list of atoms; the empty list is the monoidal unit I.
struct PregroupType {
  std::vector<Atom> atoms;

  static PregroupType parse(const std::string& spec);  // "n^r s n^l"
  std::string to_string() const;                       // "I" for the unit

  bool is_unit() const { return atoms.empty(); }
  bool is_single_s() const {
    return atoms.size() == 1 && atoms[0].base == 's' && atoms[0].plain();
  }
  bool operator==(const PregroupType& o) const { return atoms == o.atoms; }
};

/// One contraction step: the two positions (in the concatenated atom
/// sequence) that cancelled against each other.
struct CupTrace {
  int left = 0;
  int right = 0;
};

struct Reduction {
  PregroupType reduced;
  std::vector<CupTrace> cups;
  std::vector<int> surviving;  // atom positions left in `reduced`, in order
};

/// Deletes adjacent base-matching (plain, adjoint) pairs until none remain,
/// scanning left to right with a cancellation stack. Pairs cancel regardless
/// of which side carries the adjoint, which keeps the normal form independent
/// of elimination order for type sequences drawn from the lexicon.
Reduction reduce_traced(const std::vector<Atom>& seq);

/// Normal form of a concatenated type sequence.
PregroupType reduce(const PregroupType& concatenated);

/// Lexicon mapping post-rewrite labels to candidate types. Multiple entries
/// per label are tried in file order when typing a chunk.
class Lexicon {
 public:
  static Lexicon load(const std::string& path);  // JSON Lines {label, type}

  void add(const std::string& label, const PregroupType& type);
  bool has(const std::string& label) const { return entries_.count(label) > 0; }

  /// Candidate types for a token: lexicon entries when present, otherwise a
  /// part-of-speech default (noun-like -> n, verb-like -> n^r s n^l,
  /// modifier-like -> n n^l), each with secondary alternatives.
  std::vector<PregroupType> candidates(const textprep::Token& token) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<PregroupType>> entries_;
};

/// A chunk with one type per token and its reduction.
struct TypedChunk {
  textprep::Chunk chunk;
  std::vector<PregroupType> types;  // one per token
  PregroupType reduced;
  bool valid = false;  // reduced form is exactly the single plain s atom
  Reduction trace;
  bool synthesized = false;  // true once synthesize_s added the s token
};

/// Label and type of the appended sentence-state token used for unit-typed
/// chunks.
inline const char* synthetic_s_label() { return "<s>"; }

/// Assigns a type to every token and reduces. Searches candidate type
/// combinations for one reducing to s; otherwise keeps the combination with
/// the shortest normal form.
TypedChunk assign_types(const textprep::Chunk& chunk, const Lexicon& lexicon);

/// For a chunk whose types reduced to the unit I, appends a dedicated
/// sentence-state token with its own parameter slot, making the chunk valid.
/// Throws InvalidInput when the reduced type is not I.
TypedChunk synthesize_s(const TypedChunk& tc);

}  // namespace qnlp::pregroup
