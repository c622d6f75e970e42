// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/checker.hpp"

#include <algorithm>
#include <map>

#include "sequent_util.hpp"

namespace dst {

namespace {

void spend(uint64_t& work, uint64_t amount, const Budget& budget,
           const char* what) {
  work += amount;
  if (work > budget.work)
    throw BudgetExceededError(std::string("work budget exceeded in ") + what,
                              work);
}

// Applicable fiber indices at a plus-point.
std::vector<size_t> applicableAt(const detail::SequentDomains& d,
                                 const Value& a) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < d.phiStar.size(); ++i)
    if (d.phiStar[i].contains(a)) idx.push_back(i);
  return idx;
}

// Least refuting challenge c in pool with not phi.rel(a, c), trying the
// incoming challenge first (it settles entailments between extensionally
// equal predicates immediately).
std::optional<Value> findRefuter(const Pred& phi, const Value& a,
                                 const Carrier& pool, const Value& bFirst,
                                 const Budget& budget, uint64_t& work) {
  if (pool.contains(bFirst) && !phi.rel(a, bFirst)) return bFirst;
  if (phi.relKind() == Pred::RelKind::ExistsQ &&
      pool.kind() == Carrier::Kind::Section) {
    // Refute the existential pointwise: a challenge graph c falsifies
    // rel(a, c) iff every (fiber member, witness s in a) pair sees a
    // failing element in c(s). Points are chosen independently.
    const ValueSet& points = pool.domainPoints();
    const auto& allowed = pool.sectionValues();
    std::vector<Value> entries;
    entries.reserve(points.size());
    for (size_t pi = 0; pi < points.size(); ++pi) {
      const Value& s = points.at(pi);
      if (allowed[pi].isEmpty()) return std::nullopt;
      if (!a.setContains(s)) {
        entries.push_back(Value::pair(s, allowed[pi].at(0)));
        continue;
      }
      std::optional<Value> chosen;
      for (const Value& cand : allowed[pi]) {
        spend(work, 1, budget, "existential refuter");
        bool breaksAll = true;
        for (const PredPtr& part : phi.parts()) {
          if (!part->starPlusContains(s)) continue;
          bool broken = false;
          for (const Value& e : cand.elements())
            if (!part->rel(s, e)) {
              broken = true;
              break;
            }
          if (!broken) {
            breaksAll = false;
            break;
          }
        }
        if (breaksAll) {
          chosen = cand;
          break;
        }
      }
      if (!chosen) return std::nullopt;
      entries.push_back(Value::pair(s, *chosen));
    }
    Value c = Value::set(std::move(entries));
    return phi.rel(a, c) ? std::nullopt : std::optional<Value>(c);
  }
  ValueSet elems = pool.enumerate(budget.enumeration);
  for (const Value& c : elems) {
    spend(work, 1, budget, "refuter scan");
    if (!phi.rel(a, c)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::string Counterexample::toString() const {
  return "(i=" + indexLabel + ", a=" + a.toString() + ", b=" + b.toString() +
         ")";
}

CheckResult checkRealizes(const RealizerPair& r, const IndexedPred& phi,
                          const IndexedPred& psi, const Budget& budget) {
  detail::SequentDomains d =
      detail::sequentDomains(phi, psi, budget.enumeration);

  if (!isGraph(r.plusPart) || !isGraph(r.minusPart))
    throw DomainMismatchError("realizer parts must be graph values");
  if (graphDomain(r.plusPart) != d.aUnion)
    throw DomainMismatchError(
        "plus part domain differs from the union of star(phi_i.plus)");
  if (graphDomain(r.minusPart) != d.bPairs)
    throw DomainMismatchError(
        "minus part domain differs from the union of star(phi_i.plus) x "
        "psi_i.minus");

  for (const Value& a : d.aUnion) {
    Value v = r.applyPlus(a);
    for (size_t i = 0; i < phi.size(); ++i) {
      if (!d.phiStar[i].contains(a)) continue;
      if (!detail::starContains(psi.fiberAt(i)->plus(), v))
        throw DomainMismatchError("plus part value " + v.toString() + " at " +
                                  a.toString() + " is outside star(psi." +
                                  phi.index()[i] + ".plus)");
    }
  }
  for (const Value& ab : d.bPairs) {
    Value w = r.applyMinus(ab.first(), ab.second());
    for (size_t i = 0; i < phi.size(); ++i) {
      if (!d.phiStar[i].contains(ab.first()) ||
          !psi.fiberAt(i)->minus().contains(ab.second()))
        continue;
      if (!detail::starContains(phi.fiberAt(i)->minus(), w))
        throw DomainMismatchError("minus part value " + w.toString() +
                                  " at " + ab.toString() +
                                  " is outside star(phi." + phi.index()[i] +
                                  ".minus)");
    }
  }

  uint64_t work = 0;
  for (size_t i = 0; i < phi.size(); ++i) {
    const Pred& phiI = *phi.fiberAt(i);
    const Pred& psiI = *psi.fiberAt(i);
    for (const Value& a : d.phiStar[i]) {
      Value v = r.applyPlus(a);
      for (const Value& b : d.psiMinus[i]) {
        spend(work, 1, budget, "checkRealizes");
        Value w = r.applyMinus(a, b);
        bool hyp = true;
        for (const Value& c : w.elements())
          if (!phiI.rel(a, c)) {
            hyp = false;
            break;
          }
        if (hyp && !psiI.rel(v, b))
          return CheckResult{false,
                             Counterexample{phi.index()[i], a, b}};
      }
    }
  }
  return CheckResult{true, std::nullopt};
}

std::optional<RealizerPair> decideEntails(const IndexedPred& phi,
                                          const IndexedPred& psi,
                                          const Budget& budget) {
  detail::SequentDomains d =
      detail::sequentDomains(phi, psi, budget.enumeration);
  if (phi.size() == 0)
    return RealizerPair{Value::emptySet(), Value::emptySet()};

  uint64_t work = 0;
  std::vector<Value> plusEntries, minusEntries;

  for (const Value& a : d.aUnion) {
    std::vector<size_t> idx = applicableAt(d, a);

    // Challenges b applicable at a, with their applicable fiber sets.
    std::vector<Value> bUnion;
    for (size_t i : idx)
      for (const Value& b : d.psiMinus[i]) bUnion.push_back(b);
    ValueSet bSet{std::move(bUnion)};

    // Candidate values for e+(a): the identity first, then canonical order.
    Carrier vSpace = Carrier::starOf(psi.fiberAt(idx[0])->plus());
    for (size_t k = 1; k < idx.size(); ++k)
      vSpace = Carrier::intersect(
          vSpace, Carrier::starOf(psi.fiberAt(idx[k])->plus()),
          budget.enumeration);

    std::optional<Value> chosenV;
    std::vector<std::pair<Value, Value>> chosenW;

    auto tryCandidate = [&](const Value& v) -> bool {
      std::vector<std::pair<Value, Value>> ws;
      for (const Value& b : bSet) {
        spend(work, 1, budget, "decideEntails");
        std::vector<size_t> appl;
        for (size_t i : idx)
          if (psi.fiberAt(i)->minus().contains(b)) appl.push_back(i);
        std::vector<size_t> bad;
        for (size_t i : appl)
          if (!psi.fiberAt(i)->rel(v, b)) bad.push_back(i);
        if (bad.empty()) {
          ws.emplace_back(b, Value::emptySet());
          continue;
        }
        Carrier pool = phi.fiberAt(appl[0])->minus();
        for (size_t k = 1; k < appl.size(); ++k)
          pool = Carrier::intersect(pool, phi.fiberAt(appl[k])->minus(),
                                    budget.enumeration);
        std::vector<Value> refuters;
        bool feasible = true;
        for (size_t i : bad) {
          auto c = findRefuter(*phi.fiberAt(i), a, pool, b, budget, work);
          if (!c) {
            feasible = false;
            break;
          }
          refuters.push_back(*c);
        }
        if (!feasible) return false;
        ws.emplace_back(b, Value::set(std::move(refuters)));
      }
      chosenV = v;
      chosenW = std::move(ws);
      return true;
    };

    bool found = false;
    if (vSpace.contains(a) && tryCandidate(a)) found = true;
    if (!found) {
      ValueSet candidates = vSpace.enumerate(budget.enumeration);
      for (const Value& v : candidates) {
        if (v == a) continue;  // already tried
        spend(work, 1, budget, "decideEntails candidates");
        if (tryCandidate(v)) {
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;

    plusEntries.push_back(Value::pair(a, *chosenV));
    for (auto& [b, w] : chosenW)
      minusEntries.push_back(Value::pair(Value::pair(a, b), w));
  }

  return RealizerPair{Value::set(std::move(plusEntries)),
                      Value::set(std::move(minusEntries))};
}

}  // namespace dst
