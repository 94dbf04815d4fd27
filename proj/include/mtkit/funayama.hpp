#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mtkit/constructions.hpp"
#include "mtkit/embedding.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/raney.hpp"

namespace mtkit {

struct FunayamaResult {
  MTAlgebra envelope;
  /// The input frame embedded into the envelope's frame of opens.
  LatticeEmbedding unit;
};

namespace detail {

/// Envelope of a frame L sitting inside a distributive lattice C: the
/// MacNeille completion of the boolean envelope of C, with interior the
/// right adjoint of L's embedding. Atom i is the i-th join-irreducible of C.
inline FunayamaResult funayama_envelope(const LatticeEmbedding& into_c) {
  const auto& C = into_c.target();
  const auto be = boolean_envelope(C);
  const auto completion = macneille_completion(be.lattice.order());
  const auto& B = completion.lattice;
  if (B.size() != be.lattice.size()) throw std::logic_error("completion of a finite lattice grew");

  // Atom set of each element of the completed algebra.
  const std::size_t atom_count = be.join_irreducibles.size();
  std::vector<AtomSet> atoms_of(B.size(), 0);
  for (Element y = 0; y < B.size(); ++y) {
    for (std::size_t i = 0; i < atom_count; ++i) {
      if (B.leq(completion.embedding(static_cast<Element>(bit(i))), y)) atoms_of[y] |= bit(i);
    }
  }

  const auto& L = into_c.source();
  std::vector<Element> composite(L.size());
  for (Element l = 0; l < L.size(); ++l) {
    composite[l] = completion.embedding(be.embedding(into_c(l)));
  }
  const LatticeEmbedding into_b(L, B, composite);
  const auto adjoint = right_adjoint(into_b);

  std::vector<AtomSet> opens;
  for (auto y : composite) opens.push_back(atoms_of[y]);
  auto envelope = build_mt(atom_count, opens);
  for (Element y = 0; y < B.size(); ++y) {
    if (atoms_of[composite[adjoint[y]]] != envelope.interior(atoms_of[y])) {
      throw std::logic_error("right adjoint disagrees with the largest open below");
    }
  }

  const auto frame = open_frame(envelope);
  std::vector<Element> unit(L.size());
  for (Element l = 0; l < L.size(); ++l) {
    unit[l] = static_cast<Element>(*envelope.open_index(atoms_of[composite[l]]));
  }
  return {std::move(envelope), LatticeEmbedding(L, frame.lattice(), std::move(unit))};
}

}  // namespace detail

/// Funayama envelope of a finite frame.
inline FunayamaResult funayama_of_frame(const FiniteLattice& L) {
  if (auto w = distributivity_failure(L)) throw NotDistributive("input is not a frame");
  std::vector<Element> identity(L.size());
  for (Element a = 0; a < L.size(); ++a) identity[a] = a;
  return detail::funayama_envelope(LatticeEmbedding(L.order(), L, std::move(identity)));
}

/// Funayama envelope of a Raney extension (C, L): built over C, with the
/// interior coming from L.
inline FunayamaResult funayama_of_raney(const RaneyExtension& R) {
  return detail::funayama_envelope(R.embedding());
}

}  // namespace mtkit
