// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include "dst/values.hpp"
#include "gen.hpp"

using namespace dst;

namespace {

Value n(uint64_t k) { return Value::nat(k); }
Value vp(Value a, Value b) { return Value::pair(a, b); }
Value vs(std::vector<Value> els) { return Value::set(std::move(els)); }

// Graph literal helper: {(k1, v1), ...}.
Value graph(std::vector<std::pair<Value, Value>> entries) {
  std::vector<Value> els;
  for (auto& [k, v] : entries) els.push_back(vp(k, v));
  return vs(std::move(els));
}

}  // namespace

TEST_CASE("canonical order and equality") {
  CHECK(Value::compare(n(0), n(1)) < 0);
  CHECK(Value::compare(n(7), vp(n(0), n(0))) < 0);
  CHECK(Value::compare(vp(n(9), n(9)), vs({})) < 0);
  CHECK(vs({n(2), n(1), n(2)}) == vs({n(1), n(2)}));
  // Sets compare lexicographically on their sorted elements.
  CHECK(Value::compare(vs({}), vs({n(0)})) < 0);
  CHECK(Value::compare(vs({n(0)}), vs({n(0), n(1)})) < 0);
  CHECK(Value::compare(vs({n(1)}), vs({n(0), n(1)})) > 0);
}

TEST_CASE("canonicalization is idempotent") {
  dstgen::Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    ValueSet s = dstgen::carrier(rng, 4);
    Value v = s.asValue();
    std::vector<Value> els(v.elements().begin(), v.elements().end());
    CHECK(Value::set(els) == v);
  }
}

TEST_CASE("applyValue") {
  Value f = graph({{n(1), n(7)}, {n(2), n(8)}});
  CHECK(applyValue(f, n(1)) == n(7));
  CHECK_THROWS_AS(applyValue(f, n(3)), UndefinedError);
  Value dup = vs({vp(n(1), n(7)), vp(n(1), n(8))});
  CHECK(!isGraph(dup));
  CHECK_THROWS_AS(applyValue(dup, n(1)), NotAGraphError);
  CHECK_THROWS_AS(applyValue(n(3), n(1)), NotAGraphError);
}

TEST_CASE("star") {
  CHECK(star(ValueSet::empty()) == ValueSet({vs({})}));
  CHECK(star(ValueSet({n(1)})) == ValueSet({vs({}), vs({n(1)})}));
  CHECK(star(ValueSet({n(1), n(2)})) ==
        ValueSet({vs({}), vs({n(1)}), vs({n(2)}), vs({n(1), n(2)})}));
}

TEST_CASE("star is monotone") {
  dstgen::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    ValueSet a = dstgen::carrier(rng, 3);
    ValueSet b = a.unionWith(dstgen::carrier(rng, 3));
    CHECK(star(a).subsetOf(star(b)));
  }
}

TEST_CASE("bracket") {
  CHECK(bracket(vs({}), n(5)) == vs({}));
  Value x = vs({graph({{n(5), vs({n(1)})}}), graph({{n(5), vs({n(2)})}})});
  CHECK(bracket(x, n(5)) == vs({n(1), n(2)}));
  Value y = vs({graph({{n(5), vs({n(1)})}})});
  CHECK_THROWS_AS(bracket(y, n(6)), UndefinedError);
}

TEST_CASE("bracket is monotone in the function set") {
  dstgen::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    ValueSet keys = dstgen::carrier(rng, 3);
    ValueSet targets = dstgen::carrier(rng, 3);
    auto randomGraph = [&] {
      std::vector<Value> entries;
      for (const Value& key : keys)
        entries.push_back(vp(key, dstgen::subsetOf(rng, targets)));
      return Value::set(std::move(entries));
    };
    std::vector<Value> fs;
    size_t nf = 1 + dstgen::pick(rng, 3);
    for (size_t i = 0; i < nf; ++i) fs.push_back(randomGraph());
    Value big = vs(fs);
    fs.resize(1 + dstgen::pick(rng, fs.size()));
    Value small = vs(fs);
    for (const Value& key : keys) {
      Value lo = bracket(small, key), hi = bracket(big, key);
      CHECK(ValueSet::fromValue(lo).subsetOf(ValueSet::fromValue(hi)));
    }
  }
}

TEST_CASE("sumSet and prodSet") {
  CHECK(sumSet(ValueSet({n(1)}), ValueSet({n(2)})) ==
        ValueSet({vp(n(0), n(1)), vp(n(1), n(2))}));
  CHECK(sumSet(ValueSet::empty(), ValueSet::empty()) == ValueSet::empty());
  CHECK(prodSet(ValueSet({n(1)}), ValueSet({n(2), n(3)})) ==
        ValueSet({vp(n(1), n(2)), vp(n(1), n(3))}));
}

TEST_CASE("funcSpace") {
  CHECK(funcSpace(ValueSet::empty(), ValueSet({n(3)})) ==
        ValueSet({vs({})}));
  CHECK(funcSpace(ValueSet({n(1), n(2)}), ValueSet({n(3)})) ==
        ValueSet({graph({{n(1), n(3)}, {n(2), n(3)}})}));
  CHECK(funcSpace(ValueSet({n(1)}), ValueSet::empty()) == ValueSet::empty());

  // |Y|^|X| members, each a graph with domain exactly X.
  ValueSet x({n(1), n(2)}), y({n(3), n(4), n(5)});
  ValueSet space = funcSpace(x, y);
  CHECK(space.size() == 9);
  for (const Value& g : space) {
    CHECK(isGraph(g));
    CHECK(graphDomain(g) == x);
  }
}

TEST_CASE("expIso") {
  ValueSet x({n(1)}), y({n(2)});
  CHECK(expIso(IsoDirection::ToPair, vs({vp(n(0), n(1)), vp(n(1), n(2))}), x,
               y) == vp(vs({n(1)}), vs({n(2)})));
  CHECK(expIso(IsoDirection::ToPair, vs({}), x, y) == vp(vs({}), vs({})));
  CHECK(expIso(IsoDirection::FromPair, vp(vs({n(1)}), vs({})), x, y) ==
        vs({vp(n(0), n(1))}));
  CHECK_THROWS_AS(
      expIso(IsoDirection::ToPair, vs({vp(n(2), n(1))}), x, y),
      MalformedError);
  CHECK_THROWS_AS(
      expIso(IsoDirection::ToPair, vs({vp(n(0), n(9))}), x, y),
      MalformedError);
}

TEST_CASE("expIso round-trips and preserves inclusion") {
  dstgen::Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    ValueSet x = dstgen::carrier(rng, 3);
    ValueSet y = dstgen::carrier(rng, 3);
    ValueSet tagged = sumSet(x, y);
    Value w = dstgen::subsetOf(rng, tagged);
    Value p = expIso(IsoDirection::ToPair, w, x, y);
    CHECK(expIso(IsoDirection::FromPair, p, x, y) == w);

    Value w2 = dstgen::subsetOf(rng, tagged);
    Value p2 = expIso(IsoDirection::ToPair, w2, x, y);
    bool incl = ValueSet::fromValue(w).subsetOf(ValueSet::fromValue(w2));
    bool comp =
        ValueSet::fromValue(p.first()).subsetOf(
            ValueSet::fromValue(p2.first())) &&
        ValueSet::fromValue(p.second()).subsetOf(
            ValueSet::fromValue(p2.second()));
    CHECK(incl == comp);
  }
}

TEST_CASE("tabulate") {
  ValueSet x({n(1), n(2)});
  CHECK(tabulate([](const Value& v) { return v; }, x) ==
        graph({{n(1), n(1)}, {n(2), n(2)}}));
  CHECK(tabulate([](const Value&) { return vs({}); }, ValueSet({n(7)})) ==
        graph({{n(7), vs({})}}));
  CHECK(tabulate([](const Value& v) { return vs({v}); }, ValueSet({n(1)})) ==
        graph({{n(1), vs({n(1)})}}));
  CHECK_THROWS_AS(
      tabulate([](const Value& v) -> Value { return applyValue(v, n(0)); },
               ValueSet({n(3)})),
      UndefinedError);
}

TEST_CASE("applyValue after tabulate recovers the function") {
  dstgen::Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    ValueSet x = dstgen::carrier(rng, 4);
    auto h = [](const Value& v) { return vs({v, n(0)}); };
    Value g = tabulate(h, x);
    for (const Value& v : x) CHECK(applyValue(g, v) == h(v));
  }
}
