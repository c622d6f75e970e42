// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_CHECKER_HPP
#define DST_CHECKER_HPP

#include <optional>
#include <string>

#include "dst/realizer.hpp"

namespace dst {

struct Counterexample {
  std::string indexLabel;
  Value a;
  Value b;
  std::string toString() const;
};

struct CheckResult {
  bool ok = false;
  std::optional<Counterexample> counterexample;
  explicit operator bool() const { return ok; }
};

struct Budget {
  uint64_t enumeration = kDefaultEnumBudget;
  uint64_t work = uint64_t(1) << 28;
};

/// Decides whether r witnesses phi |-_I psi: for every i, a in
/// star(phi_i.plus) and b in psi_i.minus,
///   (for all c in r.minus(a,b): phi_i(a,c))  implies  psi_i(r.plus(a), b),
/// by exhaustive enumeration. The first counterexample in canonical
/// (label, a, b) order is reported.
///
/// Throws IndexMismatchError when the families disagree,
/// DomainMismatchError when r violates the RealizerPair domain or
/// value-membership invariants.
CheckResult checkRealizes(const RealizerPair& r, const IndexedPred& phi,
                          const IndexedPred& psi, const Budget& budget = {});

/// Exhaustive entailment decision over the canonical realizer space.
/// Returns a witness iff one exists; deterministic. The search factors
/// the Def-style condition per plus-point (completeness is unaffected:
/// the conjunction constrains each (e+(a), e-(a,·)) independently).
/// Throws BudgetExceededError with the computed bound when the candidate
/// enumerations exceed the budget.
std::optional<RealizerPair> decideEntails(const IndexedPred& phi,
                                          const IndexedPred& psi,
                                          const Budget& budget = {});

}  // namespace dst

#endif  // DST_CHECKER_HPP
