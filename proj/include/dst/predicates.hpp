// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_PREDICATES_HPP
#define DST_PREDICATES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dst/carrier.hpp"
#include "dst/values.hpp"

namespace dst {

class Pred;
using PredPtr = std::shared_ptr<const Pred>;

/// Sorted table of (a, b) pairs with a in star(plus), b in minus.
using RelTable = std::vector<std::pair<Value, Value>>;

constexpr uint64_t kDefaultEnumBudget = uint64_t(1) << 20;

/// One predicate: positive carrier, negative carrier, and a relation over
/// star(plus) x minus that is upward closed in the first argument.
///
/// Base predicates store the relation as an explicit table. Connective and
/// quantifier results keep their operands and evaluate the defining clause
/// pointwise instead: their carriers grow doubly exponentially and cannot
/// be tabulated except at tiny sizes (see materialize).
class Pred {
public:
  enum class RelKind : uint8_t { Table, Conj, Disj, Impl, ForallQ, ExistsQ };

  RelKind relKind() const { return relKind_; }
  const Carrier& plus() const { return plus_; }
  const Carrier& minus() const { return minus_; }

  /// Membership of (a, b) in the relation. Total: values outside the
  /// carriers (or of the wrong shape) are simply not related.
  bool rel(const Value& a, const Value& b) const;

  /// True iff a is a finite subset of the positive carrier, i.e. a member
  /// of star(plus).
  bool starPlusContains(const Value& a) const;

  const RelTable& table() const;
  const std::vector<PredPtr>& parts() const { return parts_; }

  static bool equal(const Pred& a, const Pred& b);

  // Internal factory used by the connective/quantifier constructors.
  static PredPtr composite(RelKind kind, Carrier plus, Carrier minus,
                           std::vector<PredPtr> parts);
  static PredPtr fromTable(ValueSet plus, ValueSet minus, RelTable sorted);

private:
  Pred() = default;
  RelKind relKind_ = RelKind::Table;
  Carrier plus_, minus_;
  RelTable table_;
  std::vector<PredPtr> parts_;
};

/// Validates carriers and upward closure; returns the predicate.
/// Throws OutOfCarrierError / NotUpwardClosedError (with a witness).
PredPtr mkPred(const ValueSet& plus, const ValueSet& minus,
               const RelTable& rel);

/// Least upward-closed relation containing seed, as a predicate.
PredPtr upwardClose(const ValueSet& plus, const ValueSet& minus,
                    const RelTable& seed,
                    uint64_t budget = kDefaultEnumBudget);

/// Explicit-table copy of any predicate whose star(plus) x minus grid fits
/// the budget. The result passes mkPred revalidation iff the source
/// relation is upward closed.
PredPtr materialize(const PredPtr& p, uint64_t budget = kDefaultEnumBudget);

/// A total map between finite label sets.
class FiniteMap {
public:
  FiniteMap() = default;
  FiniteMap(std::vector<std::string> dom, std::vector<std::string> cod,
            std::map<std::string, std::string> graph);

  const std::vector<std::string>& dom() const { return dom_; }
  const std::vector<std::string>& cod() const { return cod_; }
  const std::string& apply(const std::string& label) const;
  std::vector<std::string> preimage(const std::string& codLabel) const;

  static FiniteMap identity(std::vector<std::string> labels);
  /// v after u (first u, then v).
  static FiniteMap compose(const FiniteMap& u, const FiniteMap& v);

  bool operator==(const FiniteMap& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && graph_ == o.graph_;
  }

private:
  std::vector<std::string> dom_, cod_;  // sorted
  std::map<std::string, std::string> graph_;
};

/// A finite family of predicates: the objects of the fiber over an index
/// set of labels.
class IndexedPred {
public:
  IndexedPred() = default;
  IndexedPred(std::vector<std::string> index, std::vector<PredPtr> fibers);
  static IndexedPred constant(std::vector<std::string> index, PredPtr fiber);
  /// The family over the one-point index {"*"}.
  static IndexedPred singleton(PredPtr fiber);

  const std::vector<std::string>& index() const { return index_; }
  size_t size() const { return index_.size(); }
  const PredPtr& fiberAt(size_t i) const { return fibers_[i]; }
  const PredPtr& fiber(const std::string& label) const;
  const std::vector<PredPtr>& fibers() const { return fibers_; }

  static bool equal(const IndexedPred& a, const IndexedPred& b);

private:
  std::vector<std::string> index_;  // sorted
  std::vector<PredPtr> fibers_;     // aligned with index_
};

/// Precomposition: the fiber at i is psi's fiber at u(i).
/// Requires cod(u) == index(psi); throws IndexMismatchError.
IndexedPred reindex(const FiniteMap& u, const IndexedPred& psi);

}  // namespace dst

#endif  // DST_PREDICATES_HPP
