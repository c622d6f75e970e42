// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/realizer.hpp"

#include "sequent_util.hpp"

namespace dst {

RealizerPair tabulateRealizer(
    const IndexedPred& phi, const IndexedPred& psi,
    const std::function<Value(const Value&)>& plusFn,
    const std::function<Value(const Value&, const Value&)>& minusFn,
    uint64_t budget) {
  detail::SequentDomains d = detail::sequentDomains(phi, psi, budget);
  Value plus = tabulate(plusFn, d.aUnion);
  std::vector<Value> minusEntries;
  minusEntries.reserve(d.bPairs.size());
  for (const Value& ab : d.bPairs) {
    try {
      minusEntries.push_back(
          Value::pair(ab, minusFn(ab.first(), ab.second())));
    } catch (const Error& e) {
      throw UndefinedError("realizer minus part failed at " + ab.toString() +
                           ": " + e.what());
    }
  }
  return RealizerPair{plus, Value::set(std::move(minusEntries))};
}

}  // namespace dst
