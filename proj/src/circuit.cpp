#include "qnlp/circuit.hpp"

#include <algorithm>

#include "qnlp/errors.hpp"
#include "qnlp/rng.hpp"

namespace qnlp::qsim {

ParamStore::Slot ParamStore::ensure(const std::string& label,
                                    const std::string& type, int count) {
  auto key = std::make_pair(label, type);
  auto it = slots_.find(key);
  if (it != slots_.end()) return it->second;

  Slot slot;
  slot.offset = int(values_.size());
  slot.count = count;
  // Per-slot seed derived from (global seed, label, type) so initial angles
  // do not depend on registration order.
  std::uint64_t h = hash_mix(seed_, fnv1a(label));
  h = hash_mix(h, fnv1a(type));
  Rng rng(h);
  for (int i = 0; i < count; ++i)
    values_.push_back(rng.uniform(-init_range_, init_range_));
  slots_.emplace(key, slot);
  return slot;
}

const ParamStore::Slot* ParamStore::find(const std::string& label,
                                         const std::string& type) const {
  auto it = slots_.find(std::make_pair(label, type));
  return it == slots_.end() ? nullptr : &it->second;
}

void ParamStore::set_values(std::span<const double> v) {
  values_.assign(v.begin(), v.end());
}

ChunkCircuit build_chunk_circuit(const pregroup::TypedChunk& tc,
                                 ParamStore& store, int depth) {
  if (!tc.valid)
    throw InvalidInput("cannot compile an invalid chunk (reduced type '" +
                       tc.reduced.to_string() + "')");

  const auto& tokens = tc.chunk.tokens;
  ChunkCircuit c;

  // Flatten atoms, remembering the owning token of each slot.
  struct SlotInfo {
    pregroup::Atom atom;
    int token;
  };
  std::vector<SlotInfo> slots;
  std::vector<std::pair<int, int>> token_span;  // [first,last] slot per token
  for (int t = 0; t < int(tokens.size()); ++t) {
    int first = int(slots.size());
    for (const auto& atom : tc.types[t].atoms) {
      if (atom.base != 'n' && atom.base != 's')
        throw UnregisteredTypeAtom(std::string(1, atom.base));
      slots.push_back({atom, t});
    }
    token_span.emplace_back(first, int(slots.size()) - 1);
  }

  // One wire per plain atom.
  std::vector<int> wire_of_slot(slots.size(), -1);
  for (int s = 0; s < int(slots.size()); ++s) {
    if (slots[s].atom.plain()) {
      Wire w;
      w.id = int(c.wires.size());
      w.atom = slots[s].atom;
      w.token = slots[s].token;
      w.slot = s;
      wire_of_slot[s] = w.id;
      c.wires.push_back(w);
    }
  }

  // Bind each adjoint atom to the plain wire it contracted against.
  for (const auto& cup : tc.trace.cups) {
    int plain = slots[cup.left].atom.plain() ? cup.left : cup.right;
    int adj = plain == cup.left ? cup.right : cup.left;
    Cup rec;
    rec.left_slot = cup.left;
    rec.right_slot = cup.right;
    rec.bound_wire = wire_of_slot[plain];
    wire_of_slot[adj] = wire_of_slot[plain];
    c.cups.push_back(rec);
  }

  // The surviving atom is the single plain s; it is the readout wire.
  c.out_wire = wire_of_slot[tc.trace.surviving.front()];

  // Register parameters: depth angles per atom of the word's type.
  std::vector<ParamStore::Slot> param_of_token(tokens.size());
  for (int t = 0; t < int(tokens.size()); ++t) {
    int atom_count = int(tc.types[t].atoms.size());
    param_of_token[t] =
        store.ensure(tokens[t].label, tc.types[t].to_string(), depth * atom_count);
  }

  auto emit_rotations = [&](int t, int wire) {
    // Alternating RZ / RX over the word's full angle budget.
    const ParamStore::Slot& slot = param_of_token[t];
    for (int k = 0; k < slot.count; ++k) {
      Gate g;
      g.kind = (k % 2 == 0) ? GateKind::RZ : GateKind::RX;
      g.w0 = wire;
      g.param = slot.offset + k;
      c.gates.push_back(g);
    }
  };

  auto emit_box = [&](int t) {
    // Multi-atom word: Hadamards over its wire span, then `depth` layers of
    // a CRZ ring, consuming (atom count) angles per layer.
    const ParamStore::Slot& slot = param_of_token[t];
    int atom_count = int(tc.types[t].atoms.size());
    std::vector<int> span;
    for (int s = token_span[t].first; s <= token_span[t].second; ++s) {
      int w = wire_of_slot[s];
      if (std::find(span.begin(), span.end(), w) == span.end()) span.push_back(w);
    }
    if (span.size() < 2) {
      emit_rotations(t, span.front());
      return;
    }
    for (int w : span) {
      Gate g;
      g.kind = GateKind::H;
      g.w0 = w;
      c.gates.push_back(g);
    }
    int m = int(span.size());
    for (int layer = 0; layer < depth; ++layer) {
      for (int i = 0; i < atom_count; ++i) {
        Gate g;
        g.kind = GateKind::CRZ;
        g.w0 = span[i % m];
        g.w1 = span[(i + 1) % m];
        g.param = slot.offset + layer * atom_count + i;
        c.gates.push_back(g);
      }
    }
  };

  // State-preparing words first, word boxes after, each in token order.
  for (int t = 0; t < int(tokens.size()); ++t)
    if (tc.types[t].atoms.size() == 1)
      emit_rotations(t, wire_of_slot[token_span[t].first]);
  for (int t = 0; t < int(tokens.size()); ++t)
    if (tc.types[t].atoms.size() > 1) emit_box(t);

  return c;
}

}  // namespace qnlp::qsim
