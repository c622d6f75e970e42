// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/quantifiers.hpp"

#include <algorithm>

#include "sequent_util.hpp"

namespace dst {

namespace {

void requireChecked(const CheckResult& res, const char* what) {
  if (!res.ok)
    throw CheckFailedError(std::string(what) +
                           ": input does not realize its entailment at " +
                           res.counterexample->toString());
}

std::vector<PredPtr> fiberPreds(const FiniteMap& u, const IndexedPred& phi,
                                const std::string& j) {
  std::vector<PredPtr> preds;
  for (const auto& label : u.preimage(j)) preds.push_back(phi.fiber(label));
  return preds;
}

// ∪_{i in dom(u)} star(phi_i.plus): the shared challenge-graph domain and
// the empty-fiber value pool.
ValueSet globalStarUnion(const IndexedPred& phi, uint64_t budget) {
  ValueSet out;
  for (size_t i = 0; i < phi.size(); ++i)
    out = out.unionWith(
        Carrier::starOf(phi.fiberAt(i)->plus()).enumerate(budget));
  return out;
}

}  // namespace

IndexedPred forallAlong(const FiniteMap& u, const IndexedPred& phi,
                        uint64_t budget) {
  if (u.dom() != phi.index())
    throw IndexMismatchError("forallAlong: map domain differs from family index");
  std::vector<PredPtr> fibers;
  fibers.reserve(u.cod().size());
  for (const auto& j : u.cod()) {
    std::vector<PredPtr> preds = fiberPreds(u, phi, j);
    Carrier plus;
    ValueSet minus;
    if (!preds.empty()) {
      Carrier inter = preds[0]->plus();
      for (size_t k = 1; k < preds.size(); ++k)
        inter = Carrier::intersect(inter, preds[k]->plus(), budget);
      plus = Carrier::guardedPoint(Carrier::starOf(inter).enumerate(budget),
                                   false);
      for (const PredPtr& p : preds)
        minus = minus.unionWith(p->minus().enumerate(budget));
    } else {
      plus = Carrier::guardedPoint(globalStarUnion(phi, budget), true);
    }
    fibers.push_back(Pred::composite(Pred::RelKind::ForallQ, std::move(plus),
                                     Carrier(std::move(minus)),
                                     std::move(preds)));
  }
  return IndexedPred(u.cod(), std::move(fibers));
}

IndexedPred existsAlong(const FiniteMap& u, const IndexedPred& phi,
                        uint64_t budget) {
  if (u.dom() != phi.index())
    throw IndexMismatchError("existsAlong: map domain differs from family index");
  ValueSet domain = globalStarUnion(phi, budget);
  std::vector<PredPtr> fibers;
  fibers.reserve(u.cod().size());
  for (const auto& j : u.cod()) {
    std::vector<PredPtr> preds = fiberPreds(u, phi, j);
    ValueSet plus;
    for (const PredPtr& p : preds)
      plus = plus.unionWith(Carrier::starOf(p->plus()).enumerate(budget));
    std::vector<ValueSet> perPoint;
    perPoint.reserve(domain.size());
    for (const Value& s : domain) {
      std::vector<PredPtr> atPoint;
      for (const PredPtr& p : preds)
        if (p->starPlusContains(s)) atPoint.push_back(p);
      if (!atPoint.empty()) {
        ValueSet base = atPoint[0]->minus().enumerate(budget);
        for (size_t k = 1; k < atPoint.size(); ++k)
          base = base.intersectWith(atPoint[k]->minus().enumerate(budget));
        perPoint.push_back(star(base, budget));
      } else {
        ValueSet pooled;
        for (size_t i = 0; i < phi.size(); ++i)
          if (phi.fiberAt(i)->starPlusContains(s))
            pooled = pooled.unionWith(
                phi.fiberAt(i)->minus().enumerate(budget));
        perPoint.push_back(star(pooled, budget));
      }
    }
    fibers.push_back(Pred::composite(
        Pred::RelKind::ExistsQ, Carrier(std::move(plus)),
        Carrier::section(domain, std::move(perPoint)), std::move(preds)));
  }
  return IndexedPred(u.cod(), std::move(fibers));
}

RealizerPair forallTranspose(TransposeDir dir, const RealizerPair& r,
                             const FiniteMap& u, const IndexedPred& phi,
                             const IndexedPred& psi, const Budget& budget) {
  IndexedPred uPsi = reindex(u, psi);
  IndexedPred all = forallAlong(u, phi, budget.enumeration);
  if (dir == TransposeDir::Up) {
    requireChecked(checkRealizes(r, uPsi, phi, budget), "forallTranspose up");
    return tabulateRealizer(
        psi, all,
        [&](const Value& x) {
          if (!graphDefinedAt(r.plusPart, x)) return Value::emptySet();
          return Value::set(
              {Value::set({Value::pair(Value::nat(0), r.applyPlus(x))})});
        },
        [&](const Value& x, const Value& b) { return r.applyMinus(x, b); },
        budget.enumeration);
  }
  requireChecked(checkRealizes(r, psi, all, budget), "forallTranspose down");
  return tabulateRealizer(
      uPsi, phi,
      [&](const Value& x) { return bracket(r.applyPlus(x), Value::nat(0)); },
      [&](const Value& x, const Value& b) { return r.applyMinus(x, b); },
      budget.enumeration);
}

RealizerPair existsTranspose(TransposeDir dir, const RealizerPair& r,
                             const FiniteMap& u, const IndexedPred& phi,
                             const IndexedPred& psi, const Budget& budget) {
  IndexedPred uPsi = reindex(u, psi);
  IndexedPred ex = existsAlong(u, phi, budget.enumeration);
  if (dir == TransposeDir::Down) {
    requireChecked(checkRealizes(r, ex, psi, budget), "existsTranspose down");
    return tabulateRealizer(
        phi, uPsi,
        [&](const Value& x) { return r.applyPlus(Value::set({x})); },
        [&](const Value& x, const Value& y) {
          return bracket(r.applyMinus(Value::set({x}), y), x);
        },
        budget.enumeration);
  }
  requireChecked(checkRealizes(r, phi, uPsi, budget), "existsTranspose up");
  ValueSet domain = globalStarUnion(phi, budget.enumeration);
  return tabulateRealizer(
      ex, psi,
      [&](const Value& a) {
        std::vector<Value> out;
        for (const Value& z : a.elements()) {
          Value v = r.applyPlus(z);
          out.insert(out.end(), v.elements().begin(), v.elements().end());
        }
        return Value::set(std::move(out));
      },
      [&](const Value&, const Value& y) {
        Value challenge = tabulate(
            [&](const Value& z) {
              Value key = Value::pair(z, y);
              if (!graphDefinedAt(r.minusPart, key))
                return Value::emptySet();
              return applyValue(r.minusPart, key);
            },
            domain);
        return Value::set({challenge});
      },
      budget.enumeration);
}

RealizerPair reindexRealizer(const FiniteMap& u, const RealizerPair& r,
                             const IndexedPred& phi, const IndexedPred& psi,
                             const Budget& budget) {
  requireChecked(checkRealizes(r, phi, psi, budget), "reindexRealizer");
  IndexedPred uPhi = reindex(u, phi);
  IndexedPred uPsi = reindex(u, psi);
  return tabulateRealizer(
      uPhi, uPsi, [&](const Value& x) { return r.applyPlus(x); },
      [&](const Value& x, const Value& y) { return r.applyMinus(x, y); },
      budget.enumeration);
}

void validatePullback(const PullbackSquare& square) {
  const auto& P = square.toA.dom();
  if (square.toB.dom() != P)
    throw NotAPullbackError("corner legs have different domains");
  if (square.f.dom() != square.toA.cod())
    throw NotAPullbackError("f domain differs from toA codomain");
  if (square.g.dom() != square.toB.cod())
    throw NotAPullbackError("g domain differs from toB codomain");
  if (square.f.cod() != square.g.cod())
    throw NotAPullbackError("f and g have different codomains");
  std::vector<std::pair<std::string, std::string>> seen;
  for (const auto& x : P) {
    const std::string& a = square.toA.apply(x);
    const std::string& b = square.toB.apply(x);
    if (square.f.apply(a) != square.g.apply(b))
      throw NotAPullbackError("square does not commute at corner element " +
                              x);
    seen.emplace_back(a, b);
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 1; i < seen.size(); ++i)
    if (seen[i] == seen[i - 1])
      throw NotAPullbackError("corner elements collapse onto the pair (" +
                              seen[i].first + ", " + seen[i].second + ")");
  for (const auto& a : square.f.dom())
    for (const auto& b : square.g.dom())
      if (square.f.apply(a) == square.g.apply(b) &&
          !std::binary_search(seen.begin(), seen.end(), std::make_pair(a, b)))
        throw NotAPullbackError("pair (" + a + ", " + b +
                                ") is missing from the corner");
}

BeckChevalleyReport beckChevalley(const PullbackSquare& square,
                                  const IndexedPred& phi, QuantKind which,
                                  const Budget& budget) {
  validatePullback(square);
  if (phi.index() != square.f.dom())
    throw IndexMismatchError("family must be indexed by the domain of f");
  auto quantify = [&](const FiniteMap& u, const IndexedPred& fam) {
    return which == QuantKind::Forall
               ? forallAlong(u, fam, budget.enumeration)
               : existsAlong(u, fam, budget.enumeration);
  };
  IndexedPred viaCorner = quantify(square.toB, reindex(square.toA, phi));
  IndexedPred viaBase = reindex(square.g, quantify(square.f, phi));

  BeckChevalleyReport report;
  report.literallyEqual = IndexedPred::equal(viaCorner, viaBase);
  auto fwd = decideEntails(viaCorner, viaBase, budget);
  auto bwd = decideEntails(viaBase, viaCorner, budget);
  report.mutualEntailment = fwd.has_value() && bwd.has_value();
  report.detail = std::string(which == QuantKind::Forall ? "forall" : "exists") +
                  ": literal fiber equality " +
                  (report.literallyEqual ? "holds" : "fails") +
                  ", mutual entailment " +
                  (report.mutualEntailment ? "holds" : "fails") +
                  (fwd ? "" : " (corner-to-base witness missing)") +
                  (bwd ? "" : " (base-to-corner witness missing)");
  return report;
}

}  // namespace dst
