// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_CARRIER_HPP
#define DST_CARRIER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dst/values.hpp"

namespace dst {

/// A value set with decidable membership that may be far too large to
/// enumerate (function spaces are doubly exponential in the base
/// carriers). Small carriers are held explicitly; composite ones keep a
/// descriptor and enumerate on demand under a budget.
class Carrier {
public:
  enum class Kind : uint8_t {
    Explicit,      // a ValueSet
    StarOf,        // all Set-kind values over a base carrier
    TaggedSum,     // {(0,l)} ∪ {(1,r)}
    Graphs,        // graphs with fixed explicit domain, values in cod
    Section,       // graphs with fixed domain, per-point explicit value sets
    GuardedPoint,  // {(0,v)} singleton graphs, v from a set; optional {} graph
  };

  Carrier() : Carrier(ValueSet::empty()) {}
  explicit Carrier(ValueSet explicitElements);

  static Carrier explicitSet(ValueSet elements);
  static Carrier starOf(Carrier base);
  static Carrier taggedSum(Carrier left, Carrier right);
  static Carrier graphs(ValueSet domain, Carrier codomain);
  static Carrier section(ValueSet points, std::vector<ValueSet> valueSets);
  static Carrier guardedPoint(ValueSet values, bool includeEmptyGraph);

  Kind kind() const { return node_->kind; }

  bool contains(const Value& v) const;

  /// Exact element count, saturating at UINT64_MAX.
  uint64_t size() const;

  bool isExplicit() const { return kind() == Kind::Explicit; }
  const ValueSet& explicitElements() const;

  /// Enumerates all members in canonical order. Throws BudgetExceededError
  /// when size() > budget.
  ValueSet enumerate(uint64_t budget) const;

  /// Structural equality with extensional comparison of explicit parts.
  /// Mixed explicit/symbolic pairs are enumerated when small enough.
  static bool equal(const Carrier& a, const Carrier& b);

  /// Intersection as a carrier. Cross-kind pairs fall back to enumerating
  /// the smaller side under the budget.
  static Carrier intersect(const Carrier& a, const Carrier& b,
                           uint64_t budget);

  /// One-line description for reports (kind, sizes).
  std::string describe() const;

  // Component accessors (valid for the corresponding kinds).
  const Carrier& base() const { return *node_->childA; }
  const Carrier& left() const { return *node_->childA; }
  const Carrier& right() const { return *node_->childB; }
  const Carrier& codomain() const { return *node_->childB; }
  const ValueSet& domainPoints() const { return node_->points; }
  const std::vector<ValueSet>& sectionValues() const { return node_->perPoint; }
  const ValueSet& guardValues() const { return node_->points; }
  bool includesEmptyGraph() const { return node_->includeEmpty; }

private:
  struct Node {
    Kind kind;
    ValueSet elems;                    // Explicit
    std::shared_ptr<Carrier> childA;   // StarOf base / TaggedSum left
    std::shared_ptr<Carrier> childB;   // TaggedSum right / Graphs codomain
    ValueSet points;                   // Graphs/Section domain, GuardedPoint values
    std::vector<ValueSet> perPoint;    // Section value sets (aligned with points)
    bool includeEmpty = false;         // GuardedPoint
  };

  explicit Carrier(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace dst

#endif  // DST_CARRIER_HPP
