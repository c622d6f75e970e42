// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_CONNECTIVES_HPP
#define DST_CONNECTIVES_HPP

#include "dst/checker.hpp"
#include "dst/realizer.hpp"

namespace dst {

PredPtr truth();
PredPtr falsity();

/// p ∧ q: positive carrier p+ + q+, negative p- + q-; the relation reads a
/// tagged challenge back into the matching component.
PredPtr conj(const PredPtr& p, const PredPtr& q,
             uint64_t budget = kDefaultEnumBudget);

/// p ∨ q: positive carrier p+ + q+, negative p- x q-; a pair challenge is
/// answered by either component.
PredPtr disj(const PredPtr& p, const PredPtr& q,
             uint64_t budget = kDefaultEnumBudget);

/// p → q: positive carrier (p++ → q++) + (p++ x q- → (p-)*), negative
/// p++ x q-. Requires star(p.plus) and q.minus enumerable within the
/// budget; the function-space carriers stay symbolic.
PredPtr impl(const PredPtr& p, const PredPtr& q,
             uint64_t budget = kDefaultEnumBudget);

// Fiberwise liftings.
IndexedPred truthFamily(std::vector<std::string> index);
IndexedPred falsityFamily(std::vector<std::string> index);
IndexedPred conj(const IndexedPred& p, const IndexedPred& q,
                 uint64_t budget = kDefaultEnumBudget);
IndexedPred disj(const IndexedPred& p, const IndexedPred& q,
                 uint64_t budget = kDefaultEnumBudget);
IndexedPred impl(const IndexedPred& p, const IndexedPred& q,
                 uint64_t budget = kDefaultEnumBudget);

enum class Side : uint8_t { Left, Right };

/// phi |- phi via e+(x) = x, e-(x, y) = {y}.
RealizerPair idRealizer(const IndexedPred& phi, const Budget& budget = {});

/// phi |- psi from phi |- chi and chi |- psi: g+ = f+ ∘ e+ and
/// g-(x,z) = ∪_{y in f-(e+(x),z)} e-(x,y). Inputs are checked.
RealizerPair composeRealizers(const RealizerPair& r1, const RealizerPair& r2,
                              const IndexedPred& phi, const IndexedPred& chi,
                              const IndexedPred& psi,
                              const Budget& budget = {});

/// conj(p,q) |- p (Left) or |- q (Right).
RealizerPair projRealizer(Side side, const IndexedPred& p,
                          const IndexedPred& q, const Budget& budget = {});

/// r |- conj(p,q) from rp : r |- p and rq : r |- q (checked).
RealizerPair pairRealizers(const RealizerPair& rp, const RealizerPair& rq,
                           const IndexedPred& r, const IndexedPred& p,
                           const IndexedPred& q, const Budget& budget = {});

/// p |- disj(p,q) (Left) or q |- disj(p,q) (Right).
RealizerPair injRealizer(Side side, const IndexedPred& p,
                         const IndexedPred& q, const Budget& budget = {});

/// disj(p,q) |- r from rp : p |- r and rq : q |- r (checked), with the
/// corrected combiner g+(x,y) = e+(x) ∪ f+(y).
RealizerPair caseRealizers(const RealizerPair& rp, const RealizerPair& rq,
                           const IndexedPred& p, const IndexedPred& q,
                           const IndexedPred& r, const Budget& budget = {});

/// r |- impl(p,q) from e : conj(r,p) |- q (checked).
RealizerPair curryRealizer(const RealizerPair& e, const IndexedPred& r,
                           const IndexedPred& p, const IndexedPred& q,
                           const Budget& budget = {});

/// conj(r,p) |- q from e : r |- impl(p,q) (checked).
RealizerPair uncurryRealizer(const RealizerPair& e, const IndexedPred& r,
                             const IndexedPred& p, const IndexedPred& q,
                             const Budget& budget = {});

/// p |- truth-family (vacuous challenges).
RealizerPair truthIntro(const IndexedPred& p, const Budget& budget = {});

/// falsity-family |- p: the unsatisfiable challenge 0 vacuates every case.
RealizerPair exFalso(const IndexedPred& p, const Budget& budget = {});

}  // namespace dst

#endif  // DST_CONNECTIVES_HPP
