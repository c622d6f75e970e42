// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/predicates.hpp"

#include <algorithm>
#include <deque>

namespace dst {

namespace {

bool tableContains(const RelTable& t, const Value& a, const Value& b) {
  auto key = std::make_pair(a, b);
  auto it = std::lower_bound(t.begin(), t.end(), key);
  return it != t.end() && *it == key;
}

// The defining clause of each connective/quantifier, evaluated pointwise.
// a and b are assumed well-shaped; garbage is caught by the caller.

bool conjRel(const Pred& p, const Pred& q, const Value& a, const Value& b) {
  auto [n, m] = splitTags(a);
  uint64_t tag = b.first().asNat();
  const Value k = b.second();
  if (tag == 0) return p.rel(n, k);
  if (tag == 1) return q.rel(m, k);
  return false;
}

bool disjRel(const Pred& p, const Pred& q, const Value& a, const Value& b) {
  auto [n, m] = splitTags(a);
  return p.rel(n, b.first()) || q.rel(m, b.second());
}

bool implRel(const Pred& p, const Pred& q, const Value& a, const Value& b) {
  auto [ePlus, eMinus] = splitTags(a);
  const Value bp = b.first(), bq = b.second();
  const Value challenges = bracket(eMinus, b);
  bool hyp = true;
  for (const Value& c : challenges.elements()) {
    if (!p.rel(bp, c)) {
      hyp = false;
      break;
    }
  }
  if (!hyp) return true;
  return q.rel(bracket(ePlus, bp), bq);
}

bool forallRel(const std::vector<PredPtr>& fiber, const Value& a,
               const Value& b) {
  if (fiber.empty()) return true;
  const Value arg = bracket(a, Value::nat(0));
  for (const PredPtr& phi : fiber) {
    // b outside phi's negative carrier contributes vacuously.
    if (!phi->minus().contains(b)) continue;
    if (!phi->rel(arg, b)) return false;
  }
  return true;
}

bool existsRel(const std::vector<PredPtr>& fiber, const Value& a,
               const Value& b) {
  for (const PredPtr& phi : fiber) {
    for (const Value& s : a.elements()) {
      if (!phi->starPlusContains(s)) continue;
      const Value bs = applyValue(b, s);
      bool all = true;
      for (const Value& c : bs.elements()) {
        if (!phi->rel(s, c)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
  }
  return false;
}

}  // namespace

bool Pred::rel(const Value& a, const Value& b) const {
  try {
    switch (relKind_) {
      case RelKind::Table:
        return tableContains(table_, a, b);
      case RelKind::Conj:
        return conjRel(*parts_[0], *parts_[1], a, b);
      case RelKind::Disj:
        return disjRel(*parts_[0], *parts_[1], a, b);
      case RelKind::Impl:
        return implRel(*parts_[0], *parts_[1], a, b);
      case RelKind::ForallQ:
        return forallRel(parts_, a, b);
      case RelKind::ExistsQ:
        return existsRel(parts_, a, b);
    }
  } catch (const Error&) {
    // Ill-shaped arguments are simply unrelated.
    return false;
  }
  return false;
}

bool Pred::starPlusContains(const Value& a) const {
  if (!a.isSet()) return false;
  for (const Value& e : a.elements())
    if (!plus_.contains(e)) return false;
  return true;
}

const RelTable& Pred::table() const {
  if (relKind_ != RelKind::Table)
    throw MalformedError("predicate relation is not tabulated");
  return table_;
}

bool Pred::equal(const Pred& a, const Pred& b) {
  if (&a == &b) return true;
  if (a.relKind_ != b.relKind_) return false;
  if (!Carrier::equal(a.plus_, b.plus_)) return false;
  if (!Carrier::equal(a.minus_, b.minus_)) return false;
  if (a.relKind_ == RelKind::Table) return a.table_ == b.table_;
  if (a.parts_.size() != b.parts_.size()) return false;
  for (size_t i = 0; i < a.parts_.size(); ++i)
    if (!equal(*a.parts_[i], *b.parts_[i])) return false;
  return true;
}

PredPtr Pred::composite(RelKind kind, Carrier plus, Carrier minus,
                        std::vector<PredPtr> parts) {
  auto p = std::shared_ptr<Pred>(new Pred());
  p->relKind_ = kind;
  p->plus_ = std::move(plus);
  p->minus_ = std::move(minus);
  p->parts_ = std::move(parts);
  return p;
}

PredPtr Pred::fromTable(ValueSet plus, ValueSet minus, RelTable sorted) {
  auto p = std::shared_ptr<Pred>(new Pred());
  p->relKind_ = RelKind::Table;
  p->plus_ = Carrier(std::move(plus));
  p->minus_ = Carrier(std::move(minus));
  p->table_ = std::move(sorted);
  return p;
}

PredPtr mkPred(const ValueSet& plus, const ValueSet& minus,
               const RelTable& rel) {
  RelTable sorted = rel;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& [a, b] : sorted) {
    if (!a.isSet() || !std::all_of(a.elements().begin(), a.elements().end(),
                                   [&](const Value& e) {
                                     return plus.contains(e);
                                   }))
      throw OutOfCarrierError("relation entry (" + a.toString() + ", " +
                              b.toString() + ") has first component outside " +
                              plus.toString() + "*");
    if (!minus.contains(b))
      throw OutOfCarrierError("relation entry (" + a.toString() + ", " +
                              b.toString() + ") has second component outside " +
                              minus.toString());
  }
  // One-step supersets suffice: closure under single-element extensions
  // implies closure under all supersets.
  for (const auto& [a, b] : sorted) {
    for (const Value& x : plus) {
      if (a.setContains(x)) continue;
      std::vector<Value> ext(a.elements().begin(), a.elements().end());
      ext.push_back(x);
      Value sup = Value::set(std::move(ext));
      if (!tableContains(sorted, sup, b))
        throw NotUpwardClosedError(
            "relation not upward closed: contains (" + a.toString() + ", " +
                b.toString() + ") but not (" + sup.toString() + ", " +
                b.toString() + ")",
            a.toString(), sup.toString(), b.toString());
    }
  }
  return Pred::fromTable(plus, minus, std::move(sorted));
}

PredPtr upwardClose(const ValueSet& plus, const ValueSet& minus,
                    const RelTable& seed, uint64_t budget) {
  for (const auto& [a, b] : seed) {
    if (!a.isSet() || !std::all_of(a.elements().begin(), a.elements().end(),
                                   [&](const Value& e) {
                                     return plus.contains(e);
                                   }))
      throw OutOfCarrierError("seed entry (" + a.toString() + ", " +
                              b.toString() + ") has first component outside " +
                              plus.toString() + "*");
    if (!minus.contains(b))
      throw OutOfCarrierError("seed entry (" + a.toString() + ", " +
                              b.toString() + ") has second component outside " +
                              minus.toString());
  }
  RelTable closed = seed;
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  std::deque<std::pair<Value, Value>> queue(closed.begin(), closed.end());
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const Value& x : plus) {
      if (a.setContains(x)) continue;
      std::vector<Value> ext(a.elements().begin(), a.elements().end());
      ext.push_back(x);
      Value sup = Value::set(std::move(ext));
      if (!tableContains(closed, sup, b)) {
        closed.insert(std::lower_bound(closed.begin(), closed.end(),
                                       std::make_pair(sup, b)),
                      {sup, b});
        if (closed.size() > budget)
          throw BudgetExceededError("upward closure exceeded budget",
                                    closed.size());
        queue.emplace_back(sup, b);
      }
    }
  }
  return Pred::fromTable(plus, minus, std::move(closed));
}

PredPtr materialize(const PredPtr& p, uint64_t budget) {
  ValueSet plus = p->plus().enumerate(budget);
  ValueSet minus = p->minus().enumerate(budget);
  ValueSet starPlus = star(plus, budget);
  if (starPlus.size() * std::max<uint64_t>(minus.size(), 1) > budget)
    throw BudgetExceededError("materialize grid exceeds budget",
                              starPlus.size() * minus.size());
  RelTable table;
  for (const Value& a : starPlus)
    for (const Value& b : minus)
      if (p->rel(a, b)) table.emplace_back(a, b);
  return Pred::fromTable(std::move(plus), std::move(minus), std::move(table));
}

FiniteMap::FiniteMap(std::vector<std::string> dom,
                     std::vector<std::string> cod,
                     std::map<std::string, std::string> graph)
    : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
  std::sort(dom_.begin(), dom_.end());
  dom_.erase(std::unique(dom_.begin(), dom_.end()), dom_.end());
  std::sort(cod_.begin(), cod_.end());
  cod_.erase(std::unique(cod_.begin(), cod_.end()), cod_.end());
  for (const auto& label : dom_)
    if (!graph_.count(label))
      throw MalformedError("map not total: no image for " + label);
  for (const auto& [from, to] : graph_) {
    if (!std::binary_search(dom_.begin(), dom_.end(), from))
      throw MalformedError("map entry outside domain: " + from);
    if (!std::binary_search(cod_.begin(), cod_.end(), to))
      throw MalformedError("image " + to + " outside codomain");
  }
}

const std::string& FiniteMap::apply(const std::string& label) const {
  auto it = graph_.find(label);
  if (it == graph_.end())
    throw MalformedError("map undefined at " + label);
  return it->second;
}

std::vector<std::string> FiniteMap::preimage(
    const std::string& codLabel) const {
  std::vector<std::string> out;
  for (const auto& label : dom_)
    if (graph_.at(label) == codLabel) out.push_back(label);
  return out;
}

FiniteMap FiniteMap::identity(std::vector<std::string> labels) {
  std::map<std::string, std::string> g;
  for (const auto& l : labels) g[l] = l;
  return FiniteMap(labels, labels, std::move(g));
}

FiniteMap FiniteMap::compose(const FiniteMap& u, const FiniteMap& v) {
  if (u.cod() != v.dom())
    throw IndexMismatchError("composition codomain/domain mismatch");
  std::map<std::string, std::string> g;
  for (const auto& l : u.dom()) g[l] = v.apply(u.apply(l));
  return FiniteMap(u.dom(), v.cod(), std::move(g));
}

IndexedPred::IndexedPred(std::vector<std::string> index,
                         std::vector<PredPtr> fibers) {
  if (index.size() != fibers.size())
    throw IndexMismatchError("index/fiber count mismatch");
  std::vector<size_t> order(index.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return index[a] < index[b]; });
  for (size_t i = 1; i < order.size(); ++i)
    if (index[order[i]] == index[order[i - 1]])
      throw IndexMismatchError("duplicate index label " + index[order[i]]);
  index_.reserve(index.size());
  fibers_.reserve(fibers.size());
  for (size_t i : order) {
    index_.push_back(index[i]);
    fibers_.push_back(fibers[i]);
  }
}

IndexedPred IndexedPred::constant(std::vector<std::string> index,
                                  PredPtr fiber) {
  std::vector<PredPtr> fibers(index.size(), fiber);
  return IndexedPred(std::move(index), std::move(fibers));
}

IndexedPred IndexedPred::singleton(PredPtr fiber) {
  return IndexedPred({"*"}, {std::move(fiber)});
}

const PredPtr& IndexedPred::fiber(const std::string& label) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), label);
  if (it == index_.end() || *it != label)
    throw IndexMismatchError("no fiber at label " + label);
  return fibers_[it - index_.begin()];
}

bool IndexedPred::equal(const IndexedPred& a, const IndexedPred& b) {
  if (a.index_ != b.index_) return false;
  for (size_t i = 0; i < a.fibers_.size(); ++i)
    if (!Pred::equal(*a.fibers_[i], *b.fibers_[i])) return false;
  return true;
}

IndexedPred reindex(const FiniteMap& u, const IndexedPred& psi) {
  if (u.cod() != psi.index())
    throw IndexMismatchError("reindex: map codomain differs from family index");
  std::vector<PredPtr> fibers;
  fibers.reserve(u.dom().size());
  for (const auto& label : u.dom()) fibers.push_back(psi.fiber(u.apply(label)));
  return IndexedPred(u.dom(), std::move(fibers));
}

}  // namespace dst
