// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_REALIZER_HPP
#define DST_REALIZER_HPP

#include <functional>

#include "dst/predicates.hpp"

namespace dst {

/// A witness of an entailment phi |-_I psi: a forward transformer on
/// witness sets (plusPart) and a backward transformer on challenges
/// (minusPart), both canonical graph values.
///
/// plusPart has domain exactly ∪_i star(phi_i.plus) and maps a into
/// star(psi_i.plus) for every i whose star contains a; minusPart has
/// domain ∪_i star(phi_i.plus) x psi_i.minus (as pair values) and maps
/// (a,b) into star(phi_i.minus) for every applicable i.
struct RealizerPair {
  Value plusPart;
  Value minusPart;

  bool operator==(const RealizerPair& o) const {
    return plusPart == o.plusPart && minusPart == o.minusPart;
  }

  Value applyPlus(const Value& a) const { return applyValue(plusPart, a); }
  Value applyMinus(const Value& a, const Value& b) const {
    return applyValue(minusPart, Value::pair(a, b));
  }
};

/// Tabulates the uniform formulas plusFn / minusFn over the canonical
/// domains demanded by the sequent phi |- psi.
RealizerPair tabulateRealizer(
    const IndexedPred& phi, const IndexedPred& psi,
    const std::function<Value(const Value&)>& plusFn,
    const std::function<Value(const Value&, const Value&)>& minusFn,
    uint64_t budget = kDefaultEnumBudget);

}  // namespace dst

#endif  // DST_REALIZER_HPP
