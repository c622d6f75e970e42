// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_QUANTIFIERS_HPP
#define DST_QUANTIFIERS_HPP

#include <string>

#include "dst/checker.hpp"
#include "dst/realizer.hpp"

namespace dst {

/// ∀_u(phi) over cod(u). At j the positive carrier holds singleton graphs
/// {(0,v)} with v in the intersection of star(phi_i.plus) over the fiber;
/// at empty fibers v ranges over the pooled union over all of dom(u) and
/// the empty graph is admitted too (the relation there is vacuous, and the
/// transposed realizers need somewhere to land). minus is the fiber union;
/// rel(a,b) demands phi_i(a[0], b) for every fiber member owning b.
IndexedPred forallAlong(const FiniteMap& u, const IndexedPred& phi,
                        uint64_t budget = kDefaultEnumBudget);

/// ∃_u(phi) over cod(u). plus is the union of star(phi_i.plus) over the
/// fiber; minus holds challenge graphs over the shared global domain
/// ∪_{i in dom(u)} star(phi_i.plus), spec-tight at points covered by the
/// fiber and pooled elsewhere; rel(a,b) asks for a witness s in a some
/// fiber member accepts against all of b(s).
IndexedPred existsAlong(const FiniteMap& u, const IndexedPred& phi,
                        uint64_t budget = kDefaultEnumBudget);

enum class TransposeDir : uint8_t { Down, Up };

/// Down: from r : psi |-_J ∀_u(phi) to u*psi |-_I phi via f+(x) = e+(x)[0].
/// Up: from r : u*psi |-_I phi to psi |-_J ∀_u(phi) via singleton guards.
/// Inputs are checked; outputs satisfy the realizer invariants.
RealizerPair forallTranspose(TransposeDir dir, const RealizerPair& r,
                             const FiniteMap& u, const IndexedPred& phi,
                             const IndexedPred& psi, const Budget& budget = {});

/// Down: from r : ∃_u(phi) |-_J psi to phi |-_I u*psi via f+(x) = e+({x}),
/// f-(x,y) = e-({x},y)[x]. Up: from r : phi |-_I u*psi to ∃_u(phi) |-_J psi
/// via unions and challenge tabulation over the global domain.
RealizerPair existsTranspose(TransposeDir dir, const RealizerPair& r,
                             const FiniteMap& u, const IndexedPred& phi,
                             const IndexedPred& psi, const Budget& budget = {});

/// From r : phi |-_J psi, the reindexed u*phi |-_I u*psi (restriction of
/// the same graphs onto the smaller canonical domains).
RealizerPair reindexRealizer(const FiniteMap& u, const RealizerPair& r,
                             const IndexedPred& phi, const IndexedPred& psi,
                             const Budget& budget = {});

/// A commuting square with corner P: toA : P -> A, toB : P -> B,
/// f : A -> C, g : B -> C, f ∘ toA = g ∘ toB, universal.
struct PullbackSquare {
  FiniteMap toA, toB, f, g;
};

/// Throws NotAPullbackError with a witness if the square does not commute
/// or the corner is not the canonical pullback.
void validatePullback(const PullbackSquare& square);

enum class QuantKind : uint8_t { Forall, Exists };

struct BeckChevalleyReport {
  bool literallyEqual = false;
  bool mutualEntailment = false;
  std::string detail;
};

/// Compares quantify-then-reindex against reindex-then-quantify for phi
/// over A: literal fiber equality, and mutual entailment decided by
/// exhaustive search. Only the latter is semantically required.
BeckChevalleyReport beckChevalley(const PullbackSquare& square,
                                  const IndexedPred& phi, QuantKind which,
                                  const Budget& budget = {});

}  // namespace dst

#endif  // DST_QUANTIFIERS_HPP
