#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnlp/pregroup.hpp"

namespace qnlp::qsim {

enum class GateKind { RX, RY, RZ, H, CRZ };

/// One gate. `param` indexes into the owning ParamStore's flat value array;
/// -1 means the angle is the literal `fixed_angle` (H ignores both).
struct Gate {
  GateKind kind = GateKind::RZ;
  int w0 = 0;
  int w1 = -1;  // CRZ partner wire
  int param = -1;
  double fixed_angle = 0.0;
};

/// A physical wire: one qubit per plain (adjoint-free) atom of the chunk's
/// type sequence. `slot` is the atom's position in that sequence.
struct Wire {
  int id = 0;
  pregroup::Atom atom;
  int token = -1;  // owning token index within the chunk
  int slot = -1;
};

/// One contraction from the reduction trace. In compiled chunk circuits the
/// adjoint side is realized by binding the consuming word's gates onto the
/// plain atom's wire (`bound_wire`). Circuits may instead carry an explicit
/// Bell-effect pair of wires to post-select, which is how standalone cup
/// contractions are simulated and tested.
struct Cup {
  int left_slot = -1;
  int right_slot = -1;
  int bound_wire = -1;
  std::optional<std::pair<int, int>> bell;
};

struct ChunkCircuit {
  std::vector<Wire> wires;
  std::vector<Gate> gates;
  std::vector<Cup> cups;
  int out_wire = -1;

  int wire_count() const { return int(wires.size()); }
};

/// Trainable lexicon: one angle vector per (post-rewrite word label, type
/// string) pair, created on first sight and shared by every occurrence.
/// Initial angles are uniform in [-init_range, init_range), drawn from a
/// stream seeded by (seed, label, type) so registration order is irrelevant.
class ParamStore {
 public:
  struct Slot {
    int offset = 0;
    int count = 0;
  };

  explicit ParamStore(std::uint64_t seed, double init_range = 0.1)
      : seed_(seed), init_range_(init_range) {}

  Slot ensure(const std::string& label, const std::string& type, int count);
  const Slot* find(const std::string& label, const std::string& type) const;

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  std::uint64_t seed() const { return seed_; }
  double init_range() const { return init_range_; }

  const std::map<std::pair<std::string, std::string>, Slot>& slots() const {
    return slots_;
  }
  void set_values(std::span<const double> v);

 private:
  std::map<std::pair<std::string, std::string>, Slot> slots_;
  std::vector<double> values_;
  std::uint64_t seed_;
  double init_range_;
};

/// Identifier for the gate conventions baked into build_chunk_circuit;
/// stored in checkpoints so they are never replayed under other conventions.
inline const char* gate_convention_tag() { return "rzrx-iqp-crz-ring-v1"; }

/// Compiles a valid typed chunk against the store:
///  - every plain atom becomes a wire; cup partners from the reduction trace
///    bind each adjoint atom to its plain wire,
///  - single-atom words get `depth` alternating RZ/RX rotations,
///  - multi-atom words get a Hadamard layer over their wire span and `depth`
///    layers of a CRZ ring across it,
///  - each word owns depth * (atom count) angles shared per (label, type).
/// State-preparing single-atom words are laid down first, multi-atom word
/// boxes after, both in token order.
/// Throws InvalidInput when tc is not valid and UnregisteredTypeAtom when an
/// atom base is neither n nor s.
ChunkCircuit build_chunk_circuit(const pregroup::TypedChunk& tc,
                                 ParamStore& store, int depth);

}  // namespace qnlp::qsim
