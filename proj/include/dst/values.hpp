// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_VALUES_HPP
#define DST_VALUES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dst/errors.hpp"

namespace dst {

class Value;
class ValueSet;

/// An element of the applicative universe: a natural number, an ordered
/// pair, or a canonically ordered duplicate-free finite set.
///
/// Values are immutable and structurally shared; copying is cheap.
/// Finite sets of pairs with pairwise distinct first components act as
/// graphs of finite partial functions (see isGraph/applyValue).
class Value {
public:
  enum class Kind : uint8_t { Nat, Pair, Set };

  Value() : Value(nat(0)) {}

  static Value nat(uint64_t n);
  static Value pair(Value first, Value second);
  /// Builds a finite set; sorts and deduplicates into canonical form.
  static Value set(std::vector<Value> elements);
  static const Value& emptySet();

  Kind kind() const { return node_->kind; }
  bool isNat() const { return kind() == Kind::Nat; }
  bool isPair() const { return kind() == Kind::Pair; }
  bool isSet() const { return kind() == Kind::Set; }

  uint64_t asNat() const;
  Value first() const;
  Value second() const;
  // Lvalues only: the span must not outlive the value it views.
  std::span<const Value> elements() const&;
  void elements() && = delete;
  size_t setSize() const { return elements().size(); }

  /// Total canonical order: Nat < Pair < Set, recursively lexicographic.
  static int compare(const Value& a, const Value& b);

  bool operator==(const Value& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Value& o) const { return compare(*this, o) != 0; }
  bool operator<(const Value& o) const { return compare(*this, o) < 0; }
  bool operator<=(const Value& o) const { return compare(*this, o) <= 0; }

  bool setContains(const Value& v) const;

  /// Literal syntax: 3, (a . b), {v1 v2 ...}.
  std::string toString() const;

  size_t hash() const { return node_->hash; }

private:
  struct Node {
    Kind kind;
    uint64_t nat = 0;
    std::shared_ptr<const Node> first, second;  // Pair
    std::vector<Value> elems;                   // Set, canonical
    size_t hash = 0;
  };

  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A finite set of values in canonical order, duplicate-free.
/// Unlike a Set-kind Value this is not itself an element of the universe;
/// it plays the role of the carriers X, Y.
class ValueSet {
public:
  ValueSet() = default;
  explicit ValueSet(std::vector<Value> elements);

  static const ValueSet& empty();

  size_t size() const { return elems_.size(); }
  bool isEmpty() const { return elems_.empty(); }
  bool contains(const Value& v) const;
  std::span<const Value> elements() const { return elems_; }
  const Value& at(size_t i) const { return elems_[i]; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const ValueSet& o) const { return elems_ == o.elems_; }
  bool operator!=(const ValueSet& o) const { return !(*this == o); }

  bool subsetOf(const ValueSet& o) const;
  ValueSet unionWith(const ValueSet& o) const;
  ValueSet intersectWith(const ValueSet& o) const;

  /// The members as one Set-kind value.
  Value asValue() const;
  /// The elements of a Set-kind value as a ValueSet.
  static ValueSet fromValue(const Value& v);

  std::string toString() const;

private:
  std::vector<Value> elems_;  // sorted, unique
};

/// True iff f is a finite set of pairs with pairwise distinct first
/// components.
bool isGraph(const Value& f);

/// Graph application: the unique v with (x, v) in f.
/// Throws NotAGraphError / UndefinedError.
Value applyValue(const Value& f, const Value& x);

/// Whether the graph f has an entry at x (also validates graph shape).
bool graphDefinedAt(const Value& f, const Value& x);

/// The set of keys of a graph value.
ValueSet graphDomain(const Value& f);

/// X* — all Set-kind values whose elements lie in X (the powerset of X,
/// as values). Size 2^|X|; guarded by maxResultSize.
ValueSet star(const ValueSet& x, uint64_t maxResultSize = uint64_t(1) << 22);

/// x[y] = union of z(y) over z in x. Each z must be a graph defined at y
/// with a Set-kind result.
Value bracket(const Value& x, const Value& y);

/// X + Y = {(0,x)} ∪ {(1,y)}.
ValueSet sumSet(const ValueSet& x, const ValueSet& y);

/// X × Y as pair values.
ValueSet prodSet(const ValueSet& x, const ValueSet& y);

/// Canonical graphs with domain exactly X and values in Y; size |Y|^|X|.
ValueSet funcSpace(const ValueSet& x, const ValueSet& y,
                   uint64_t maxResultSize = uint64_t(1) << 22);

enum class IsoDirection { ToPair, FromPair };

/// The (X+Y)* ≅ X* × Y* isomorphism. ToPair splits a set of tagged values
/// into (untagged-0 set, untagged-1 set); FromPair is its inverse.
/// Membership of v in the expected side is validated against X, Y.
Value expIso(IsoDirection direction, const Value& v, const ValueSet& x,
             const ValueSet& y);

/// Unchecked tag split of w into (zeros, ones). Throws MalformedError on
/// non-pair elements or tags other than 0/1.
std::pair<Value, Value> splitTags(const Value& w);

/// Unchecked inverse of splitTags.
Value joinTags(const Value& zeros, const Value& ones);

/// The graph {(x, h(x)) : x in X}. Failures of h are reported with the
/// offending x.
Value tabulate(const std::function<Value(const Value&)>& h,
               const ValueSet& x);

}  // namespace dst

#endif  // DST_VALUES_HPP
