// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/carrier.hpp"

#include <algorithm>
#include <sstream>

namespace dst {

namespace {

uint64_t satMul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

uint64_t satAdd(uint64_t a, uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

uint64_t satPow2(uint64_t n) {
  return n >= 64 ? UINT64_MAX : uint64_t(1) << n;
}

}  // namespace

Carrier::Carrier(ValueSet explicitElements) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Explicit;
  n->elems = std::move(explicitElements);
  node_ = std::move(n);
}

Carrier Carrier::explicitSet(ValueSet elements) {
  return Carrier(std::move(elements));
}

Carrier Carrier::starOf(Carrier base) {
  // Star of an explicit small set collapses to an explicit carrier.
  if (base.isExplicit() && base.explicitElements().size() <= 12)
    return Carrier(star(base.explicitElements()));
  auto n = std::make_shared<Node>();
  n->kind = Kind::StarOf;
  n->childA = std::make_shared<Carrier>(std::move(base));
  return Carrier(std::move(n));
}

Carrier Carrier::taggedSum(Carrier left, Carrier right) {
  if (left.isExplicit() && right.isExplicit() &&
      left.size() + right.size() <= 4096)
    return Carrier(sumSet(left.explicitElements(), right.explicitElements()));
  auto n = std::make_shared<Node>();
  n->kind = Kind::TaggedSum;
  n->childA = std::make_shared<Carrier>(std::move(left));
  n->childB = std::make_shared<Carrier>(std::move(right));
  return Carrier(std::move(n));
}

Carrier Carrier::graphs(ValueSet domain, Carrier codomain) {
  if (codomain.isExplicit()) {
    uint64_t count = 1;
    for (size_t i = 0; i < domain.size() && count <= 4096; ++i)
      count = satMul(count, codomain.size());
    if (count <= 4096)
      return Carrier(
          funcSpace(domain, codomain.explicitElements(), uint64_t(1) << 13));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Graphs;
  n->points = std::move(domain);
  n->childB = std::make_shared<Carrier>(std::move(codomain));
  return Carrier(std::move(n));
}

Carrier Carrier::section(ValueSet points, std::vector<ValueSet> valueSets) {
  uint64_t count = 1;
  for (const auto& vs : valueSets) count = satMul(count, vs.size());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Section;
  n->points = std::move(points);
  n->perPoint = std::move(valueSets);
  Carrier c{std::shared_ptr<const Node>(std::move(n))};
  if (count <= 4096) return Carrier(c.enumerate(uint64_t(1) << 13));
  return c;
}

Carrier Carrier::guardedPoint(ValueSet values, bool includeEmptyGraph) {
  // Always small (the value pool plus at most the empty graph); keep
  // explicit so star/intersections stay cheap.
  std::vector<Value> out;
  if (includeEmptyGraph) out.push_back(Value::emptySet());
  for (const Value& v : values)
    out.push_back(Value::set({Value::pair(Value::nat(0), v)}));
  return Carrier(ValueSet(std::move(out)));
}

bool Carrier::contains(const Value& v) const {
  switch (kind()) {
    case Kind::Explicit:
      return node_->elems.contains(v);
    case Kind::StarOf: {
      if (!v.isSet()) return false;
      for (const Value& e : v.elements())
        if (!base().contains(e)) return false;
      return true;
    }
    case Kind::TaggedSum: {
      if (!v.isPair() || !v.first().isNat()) return false;
      uint64_t tag = v.first().asNat();
      if (tag == 0) return left().contains(v.second());
      if (tag == 1) return right().contains(v.second());
      return false;
    }
    case Kind::Graphs: {
      if (!isGraph(v)) return false;
      if (v.setSize() != node_->points.size()) return false;
      for (const Value& e : v.elements()) {
        if (!node_->points.contains(e.first())) return false;
        if (!codomain().contains(e.second())) return false;
      }
      return true;
    }
    case Kind::Section: {
      if (!isGraph(v)) return false;
      if (v.setSize() != node_->points.size()) return false;
      auto els = v.elements();
      for (size_t i = 0; i < els.size(); ++i) {
        // Graph entries and points share canonical order.
        if (els[i].first() != node_->points.at(i)) return false;
        if (!node_->perPoint[i].contains(els[i].second())) return false;
      }
      return true;
    }
    case Kind::GuardedPoint: {
      if (!v.isSet()) return false;
      if (v.setSize() == 0) return node_->includeEmpty;
      if (v.setSize() != 1) return false;
      const Value& entry = *v.elements().begin();
      if (!entry.isPair() || entry.first() != Value::nat(0)) return false;
      return node_->points.contains(entry.second());
    }
  }
  return false;
}

uint64_t Carrier::size() const {
  switch (kind()) {
    case Kind::Explicit:
      return node_->elems.size();
    case Kind::StarOf:
      return satPow2(base().size());
    case Kind::TaggedSum:
      return satAdd(left().size(), right().size());
    case Kind::Graphs: {
      if (node_->points.isEmpty()) return 1;
      uint64_t c = 1;
      for (size_t i = 0; i < node_->points.size(); ++i)
        c = satMul(c, codomain().size());
      return c;
    }
    case Kind::Section: {
      uint64_t c = 1;
      for (const auto& vs : node_->perPoint) c = satMul(c, vs.size());
      return c;
    }
    case Kind::GuardedPoint:
      return node_->points.size() + (node_->includeEmpty ? 1 : 0);
  }
  return 0;
}

const ValueSet& Carrier::explicitElements() const {
  if (!isExplicit())
    throw MalformedError("carrier is not explicit: " + describe());
  return node_->elems;
}

ValueSet Carrier::enumerate(uint64_t budget) const {
  uint64_t n = size();
  if (n > budget)
    throw BudgetExceededError("carrier enumeration of size " +
                                  std::to_string(n) + ": " + describe(),
                              n);
  switch (kind()) {
    case Kind::Explicit:
      return node_->elems;
    case Kind::StarOf:
      return star(base().enumerate(budget), budget);
    case Kind::TaggedSum:
      return sumSet(left().enumerate(budget), right().enumerate(budget));
    case Kind::Graphs:
      return funcSpace(node_->points, codomain().enumerate(budget), budget);
    case Kind::Section: {
      const ValueSet& pts = node_->points;
      if (pts.isEmpty()) return ValueSet({Value::emptySet()});
      std::vector<size_t> odometer(pts.size(), 0);
      std::vector<Value> out;
      for (;;) {
        std::vector<Value> entries;
        entries.reserve(pts.size());
        for (size_t i = 0; i < pts.size(); ++i)
          entries.push_back(
              Value::pair(pts.at(i), node_->perPoint[i].at(odometer[i])));
        out.push_back(Value::set(std::move(entries)));
        size_t i = 0;
        while (i < odometer.size() &&
               ++odometer[i] == node_->perPoint[i].size()) {
          odometer[i] = 0;
          ++i;
        }
        if (i == odometer.size()) break;
      }
      return ValueSet(std::move(out));
    }
    case Kind::GuardedPoint: {
      std::vector<Value> out;
      if (node_->includeEmpty) out.push_back(Value::emptySet());
      for (const Value& v : node_->points)
        out.push_back(Value::set({Value::pair(Value::nat(0), v)}));
      return ValueSet(std::move(out));
    }
  }
  return ValueSet::empty();
}

bool Carrier::equal(const Carrier& a, const Carrier& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() == b.kind()) {
    switch (a.kind()) {
      case Kind::Explicit:
        return a.node_->elems == b.node_->elems;
      case Kind::StarOf:
        return equal(a.base(), b.base());
      case Kind::TaggedSum:
        return equal(a.left(), b.left()) && equal(a.right(), b.right());
      case Kind::Graphs:
        return a.node_->points == b.node_->points &&
               equal(a.codomain(), b.codomain());
      case Kind::Section:
        return a.node_->points == b.node_->points &&
               a.node_->perPoint == b.node_->perPoint;
      case Kind::GuardedPoint:
        return a.node_->points == b.node_->points &&
               a.node_->includeEmpty == b.node_->includeEmpty;
    }
  }
  constexpr uint64_t kSmall = 4096;
  if (a.size() != b.size()) return false;
  if (a.size() <= kSmall) return a.enumerate(kSmall) == b.enumerate(kSmall);
  return false;
}

Carrier Carrier::intersect(const Carrier& a, const Carrier& b,
                           uint64_t budget) {
  if (a.node_ == b.node_) return a;
  if (a.isExplicit()) {
    std::vector<Value> out;
    for (const Value& v : a.explicitElements())
      if (b.contains(v)) out.push_back(v);
    return Carrier(ValueSet(std::move(out)));
  }
  if (b.isExplicit()) return intersect(b, a, budget);
  if (a.kind() == b.kind()) {
    switch (a.kind()) {
      case Kind::StarOf:
        return starOf(intersect(a.base(), b.base(), budget));
      case Kind::TaggedSum:
        return taggedSum(intersect(a.left(), b.left(), budget),
                         intersect(a.right(), b.right(), budget));
      case Kind::Graphs:
        if (a.domainPoints() != b.domainPoints())
          return Carrier(ValueSet::empty());
        return graphs(a.domainPoints(),
                      intersect(a.codomain(), b.codomain(), budget));
      case Kind::Section: {
        if (a.domainPoints() != b.domainPoints())
          return Carrier(ValueSet::empty());
        std::vector<ValueSet> vs;
        vs.reserve(a.sectionValues().size());
        for (size_t i = 0; i < a.sectionValues().size(); ++i)
          vs.push_back(
              a.sectionValues()[i].intersectWith(b.sectionValues()[i]));
        return section(a.domainPoints(), std::move(vs));
      }
      case Kind::GuardedPoint:
        return guardedPoint(a.guardValues().intersectWith(b.guardValues()),
                            a.includesEmptyGraph() && b.includesEmptyGraph());
      case Kind::Explicit:
        break;
    }
  }
  // Cross-kind: enumerate the smaller side.
  const Carrier& small = a.size() <= b.size() ? a : b;
  const Carrier& other = a.size() <= b.size() ? b : a;
  std::vector<Value> out;
  for (const Value& v : small.enumerate(budget))
    if (other.contains(v)) out.push_back(v);
  return Carrier(ValueSet(std::move(out)));
}

std::string Carrier::describe() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Explicit:
      os << "explicit[" << node_->elems.size() << "]";
      break;
    case Kind::StarOf:
      os << "star(" << base().describe() << ")";
      break;
    case Kind::TaggedSum:
      os << "sum(" << left().describe() << ", " << right().describe() << ")";
      break;
    case Kind::Graphs:
      os << "graphs[" << node_->points.size() << " -> "
         << codomain().describe() << "]";
      break;
    case Kind::Section:
      os << "sections[" << node_->points.size() << " points, "
         << std::to_string(size()) << "]";
      break;
    case Kind::GuardedPoint:
      os << "guarded[" << node_->points.size()
         << (node_->includeEmpty ? "+empty" : "") << "]";
      break;
  }
  return os.str();
}

}  // namespace dst
