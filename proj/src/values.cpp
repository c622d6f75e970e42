// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/values.hpp"

#include <algorithm>
#include <sstream>

namespace dst {

namespace {

size_t hashCombine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Value Value::nat(uint64_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Nat;
  node->nat = n;
  node->hash = hashCombine(0x11, std::hash<uint64_t>{}(n));
  return Value(std::move(node));
}

Value Value::pair(Value first, Value second) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->hash = hashCombine(hashCombine(0x22, first.hash()), second.hash());
  node->first = first.node_;
  node->second = second.node_;
  return Value(std::move(node));
}

Value Value::set(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Set;
  size_t h = 0x33;
  for (const Value& e : elements) h = hashCombine(h, e.hash());
  node->hash = h;
  node->elems = std::move(elements);
  return Value(std::move(node));
}

const Value& Value::emptySet() {
  static const Value empty = Value::set({});
  return empty;
}

uint64_t Value::asNat() const {
  if (!isNat()) throw MalformedError("asNat on non-natural " + toString());
  return node_->nat;
}

Value Value::first() const {
  if (!isPair()) throw MalformedError("first on non-pair " + toString());
  return Value(node_->first);
}

Value Value::second() const {
  if (!isPair()) throw MalformedError("second on non-pair " + toString());
  return Value(node_->second);
}

std::span<const Value> Value::elements() const& {
  if (!isSet()) throw NotASetError("elements on non-set " + toString());
  return node_->elems;
}

int Value::compare(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return 0;
  auto ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Nat:
      if (a.node_->nat != b.node_->nat)
        return a.node_->nat < b.node_->nat ? -1 : 1;
      return 0;
    case Kind::Pair: {
      int c = compare(Value(a.node_->first), Value(b.node_->first));
      if (c != 0) return c;
      return compare(Value(a.node_->second), Value(b.node_->second));
    }
    case Kind::Set: {
      const auto& ea = a.node_->elems;
      const auto& eb = b.node_->elems;
      size_t n = std::min(ea.size(), eb.size());
      for (size_t i = 0; i < n; ++i) {
        int c = compare(ea[i], eb[i]);
        if (c != 0) return c;
      }
      if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool Value::setContains(const Value& v) const {
  auto els = elements();
  return std::binary_search(els.begin(), els.end(), v);
}

std::string Value::toString() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Nat:
      os << node_->nat;
      break;
    case Kind::Pair:
      os << '(' << Value(node_->first).toString() << " . "
         << Value(node_->second).toString() << ')';
      break;
    case Kind::Set: {
      os << '{';
      bool first = true;
      for (const Value& e : node_->elems) {
        if (!first) os << ' ';
        first = false;
        os << e.toString();
      }
      os << '}';
      break;
    }
  }
  return os.str();
}

ValueSet::ValueSet(std::vector<Value> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

const ValueSet& ValueSet::empty() {
  static const ValueSet e{};
  return e;
}

bool ValueSet::contains(const Value& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool ValueSet::subsetOf(const ValueSet& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(),
                       elems_.end());
}

ValueSet ValueSet::unionWith(const ValueSet& o) const {
  std::vector<Value> out;
  out.reserve(elems_.size() + o.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(),
                 o.elems_.end(), std::back_inserter(out));
  ValueSet r;
  r.elems_ = std::move(out);
  return r;
}

ValueSet ValueSet::intersectWith(const ValueSet& o) const {
  std::vector<Value> out;
  std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(),
                        o.elems_.end(), std::back_inserter(out));
  ValueSet r;
  r.elems_ = std::move(out);
  return r;
}

Value ValueSet::asValue() const { return Value::set(elems_); }

ValueSet ValueSet::fromValue(const Value& v) {
  auto els = v.elements();
  ValueSet r;
  r.elems_.assign(els.begin(), els.end());
  return r;
}

std::string ValueSet::toString() const { return asValue().toString(); }

bool isGraph(const Value& f) {
  if (!f.isSet()) return false;
  auto els = f.elements();
  for (const Value& e : els)
    if (!e.isPair()) return false;
  // Canonical order sorts by first component first, so duplicate keys are
  // adjacent.
  for (size_t i = 1; i < els.size(); ++i)
    if (els[i].first() == els[i - 1].first()) return false;
  return true;
}

Value applyValue(const Value& f, const Value& x) {
  if (!f.isSet() ||
      std::any_of(f.elements().begin(), f.elements().end(),
                  [](const Value& e) { return !e.isPair(); }))
    throw NotAGraphError("application of non-graph " + f.toString());
  auto els = f.elements();
  // Binary search on the first component.
  size_t lo = 0, hi = els.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    int c = Value::compare(els[mid].first(), x);
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < els.size() && els[lo].first() == x) {
    if (lo + 1 < els.size() && els[lo + 1].first() == x)
      throw NotAGraphError("duplicate key " + x.toString() + " in " +
                           f.toString());
    return els[lo].second();
  }
  throw UndefinedError("graph " + f.toString() + " undefined at " +
                       x.toString());
}

bool graphDefinedAt(const Value& f, const Value& x) {
  if (!isGraph(f)) throw NotAGraphError("not a graph: " + f.toString());
  auto els = f.elements();
  size_t lo = 0, hi = els.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (Value::compare(els[mid].first(), x) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < els.size() && els[lo].first() == x;
}

ValueSet graphDomain(const Value& f) {
  if (!isGraph(f)) throw NotAGraphError("not a graph: " + f.toString());
  std::vector<Value> keys;
  keys.reserve(f.setSize());
  for (const Value& e : f.elements()) keys.push_back(e.first());
  return ValueSet(std::move(keys));
}

ValueSet star(const ValueSet& x, uint64_t maxResultSize) {
  if (x.size() >= 63 || (uint64_t(1) << x.size()) > maxResultSize)
    throw BudgetExceededError(
        "star of a " + std::to_string(x.size()) + "-element set",
        x.size() >= 63 ? UINT64_MAX : (uint64_t(1) << x.size()));
  size_t n = x.size();
  std::vector<Value> subsets;
  subsets.reserve(size_t(1) << n);
  std::vector<Value> current;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    current.clear();
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t(1) << i)) current.push_back(x.at(i));
    subsets.push_back(Value::set(current));
  }
  return ValueSet(std::move(subsets));
}

Value bracket(const Value& x, const Value& y) {
  if (!x.isSet()) throw NotASetError("bracket of non-set " + x.toString());
  std::vector<Value> out;
  for (const Value& z : x.elements()) {
    Value r = applyValue(z, y);
    if (!r.isSet())
      throw NotASetError("bracket: " + z.toString() + " returned non-set " +
                         r.toString());
    auto els = r.elements();
    out.insert(out.end(), els.begin(), els.end());
  }
  return Value::set(std::move(out));
}

ValueSet sumSet(const ValueSet& x, const ValueSet& y) {
  std::vector<Value> out;
  out.reserve(x.size() + y.size());
  Value zero = Value::nat(0), one = Value::nat(1);
  for (const Value& v : x) out.push_back(Value::pair(zero, v));
  for (const Value& v : y) out.push_back(Value::pair(one, v));
  return ValueSet(std::move(out));
}

ValueSet prodSet(const ValueSet& x, const ValueSet& y) {
  std::vector<Value> out;
  out.reserve(x.size() * y.size());
  for (const Value& a : x)
    for (const Value& b : y) out.push_back(Value::pair(a, b));
  return ValueSet(std::move(out));
}

ValueSet funcSpace(const ValueSet& x, const ValueSet& y,
                   uint64_t maxResultSize) {
  if (x.isEmpty()) return ValueSet({Value::emptySet()});
  if (y.isEmpty()) return ValueSet::empty();
  // |Y|^|X| with overflow saturation.
  uint64_t count = 1;
  for (size_t i = 0; i < x.size(); ++i) {
    if (count > maxResultSize / y.size() + 1) {
      count = UINT64_MAX;
      break;
    }
    count *= y.size();
  }
  if (count > maxResultSize)
    throw BudgetExceededError("funcSpace of size " + std::to_string(count),
                              count);
  std::vector<size_t> odometer(x.size(), 0);
  std::vector<Value> out;
  out.reserve(count);
  for (;;) {
    std::vector<Value> entries;
    entries.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
      entries.push_back(Value::pair(x.at(i), y.at(odometer[i])));
    out.push_back(Value::set(std::move(entries)));
    size_t i = 0;
    while (i < odometer.size() && ++odometer[i] == y.size()) {
      odometer[i] = 0;
      ++i;
    }
    if (i == odometer.size()) break;
  }
  return ValueSet(std::move(out));
}

std::pair<Value, Value> splitTags(const Value& w) {
  if (!w.isSet())
    throw MalformedError("tag split of non-set " + w.toString());
  std::vector<Value> zeros, ones;
  for (const Value& e : w.elements()) {
    if (!e.isPair() || !e.first().isNat())
      throw MalformedError("untagged element " + e.toString());
    uint64_t tag = e.first().asNat();
    if (tag == 0)
      zeros.push_back(e.second());
    else if (tag == 1)
      ones.push_back(e.second());
    else
      throw MalformedError("tag " + std::to_string(tag) + " in " +
                           w.toString());
  }
  return {Value::set(std::move(zeros)), Value::set(std::move(ones))};
}

Value joinTags(const Value& zeros, const Value& ones) {
  if (!zeros.isSet() || !ones.isSet())
    throw MalformedError("tag join of non-sets");
  std::vector<Value> out;
  out.reserve(zeros.setSize() + ones.setSize());
  Value zero = Value::nat(0), one = Value::nat(1);
  for (const Value& e : zeros.elements()) out.push_back(Value::pair(zero, e));
  for (const Value& e : ones.elements()) out.push_back(Value::pair(one, e));
  return Value::set(std::move(out));
}

Value expIso(IsoDirection direction, const Value& v, const ValueSet& x,
             const ValueSet& y) {
  if (direction == IsoDirection::ToPair) {
    auto [zeros, ones] = splitTags(v);
    for (const Value& e : zeros.elements())
      if (!x.contains(e))
        throw MalformedError("element " + e.toString() + " outside " +
                             x.toString());
    for (const Value& e : ones.elements())
      if (!y.contains(e))
        throw MalformedError("element " + e.toString() + " outside " +
                             y.toString());
    return Value::pair(zeros, ones);
  }
  if (!v.isPair())
    throw MalformedError("from-pair of non-pair " + v.toString());
  const Value a = v.first(), b = v.second();
  if (!a.isSet() || !b.isSet())
    throw MalformedError("from-pair components must be sets: " +
                         v.toString());
  for (const Value& e : a.elements())
    if (!x.contains(e))
      throw MalformedError("element " + e.toString() + " outside " +
                           x.toString());
  for (const Value& e : b.elements())
    if (!y.contains(e))
      throw MalformedError("element " + e.toString() + " outside " +
                           y.toString());
  return joinTags(a, b);
}

Value tabulate(const std::function<Value(const Value&)>& h,
               const ValueSet& x) {
  std::vector<Value> entries;
  entries.reserve(x.size());
  for (const Value& v : x) {
    try {
      entries.push_back(Value::pair(v, h(v)));
    } catch (const Error& e) {
      throw UndefinedError("tabulate failed at " + v.toString() + ": " +
                           e.what());
    }
  }
  return Value::set(std::move(entries));
}

}  // namespace dst
