// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_SRC_SEQUENT_UTIL_HPP
#define DST_SRC_SEQUENT_UTIL_HPP

#include <vector>

#include "dst/predicates.hpp"

namespace dst::detail {

/// Enumerated canonical domains of a sequent phi |-_I psi.
struct SequentDomains {
  std::vector<ValueSet> phiStar;   // star(phi_i.plus), aligned with index
  std::vector<ValueSet> psiMinus;  // psi_i.minus enumerated
  ValueSet aUnion;                 // ∪_i phiStar[i]
  /// ∪_i phiStar[i] x psiMinus[i], as sorted pair values.
  ValueSet bPairs;
};

inline SequentDomains sequentDomains(const IndexedPred& phi,
                                     const IndexedPred& psi,
                                     uint64_t enumBudget) {
  if (phi.index() != psi.index())
    throw IndexMismatchError("sequent sides indexed by different sets");
  SequentDomains d;
  d.phiStar.reserve(phi.size());
  d.psiMinus.reserve(phi.size());
  std::vector<Value> bAll;
  for (size_t i = 0; i < phi.size(); ++i) {
    Carrier starPlus = Carrier::starOf(phi.fiberAt(i)->plus());
    d.phiStar.push_back(starPlus.enumerate(enumBudget));
    d.psiMinus.push_back(psi.fiberAt(i)->minus().enumerate(enumBudget));
    d.aUnion = d.aUnion.unionWith(d.phiStar.back());
    for (const Value& a : d.phiStar.back())
      for (const Value& b : d.psiMinus.back())
        bAll.push_back(Value::pair(a, b));
  }
  d.bPairs = ValueSet(std::move(bAll));
  return d;
}

/// True iff v is a finite subset of the carrier.
inline bool starContains(const Carrier& c, const Value& v) {
  if (!v.isSet()) return false;
  for (const Value& e : v.elements())
    if (!c.contains(e)) return false;
  return true;
}

}  // namespace dst::detail

#endif  // DST_SRC_SEQUENT_UTIL_HPP
