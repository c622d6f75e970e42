// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include "dst/connectives.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace dst;

namespace {

Value n(uint64_t k) { return Value::nat(k); }
Value vp(Value a, Value b) { return Value::pair(a, b); }
Value vs(std::vector<Value> els) { return Value::set(std::move(els)); }

PredPtr P() {
  return mkPred(ValueSet({n(1)}), ValueSet({n(9)}), {{vs({n(1)}), n(9)}});
}
PredPtr Q() {
  return mkPred(ValueSet({n(2)}), ValueSet({n(8)}), {{vs({n(2)}), n(8)}});
}

// Compare a composite's relation against the transcription oracle over the
// whole star(plus) x minus grid.
void checkAgainstOracle(const PredPtr& composite, const PredPtr& p,
                        const PredPtr& q) {
  ValueSet starPlus = Carrier::starOf(composite->plus()).enumerate(1 << 16);
  ValueSet minus = composite->minus().enumerate(1 << 16);
  for (const Value& a : starPlus)
    for (const Value& b : minus) {
      bool expected = false;
      switch (composite->relKind()) {
        case Pred::RelKind::Conj:
          expected = dstoracle::conjRel(*p, *q, a, b);
          break;
        case Pred::RelKind::Disj:
          expected = dstoracle::disjRel(*p, *q, a, b);
          break;
        case Pred::RelKind::Impl:
          expected = dstoracle::implRel(*p, *q, a, b);
          break;
        default:
          FAIL("unexpected kind");
      }
      CAPTURE(a.toString());
      CAPTURE(b.toString());
      CHECK(composite->rel(a, b) == expected);
    }
}

}  // namespace

TEST_CASE("truth and falsity literals") {
  CHECK(truth()->plus().explicitElements() == ValueSet::empty());
  CHECK(truth()->minus().explicitElements() == ValueSet::empty());
  CHECK(truth()->table().empty());
  CHECK(falsity()->plus().explicitElements() == ValueSet::empty());
  CHECK(falsity()->minus().explicitElements() == ValueSet({n(0)}));
  CHECK(falsity()->table().empty());
  CHECK(Carrier::starOf(truth()->plus()).enumerate(8) ==
        ValueSet({vs({})}));
}

TEST_CASE("conj matches its defining table") {
  PredPtr c = conj(P(), Q());
  CHECK(c->plus().explicitElements() ==
        ValueSet({vp(n(0), n(1)), vp(n(1), n(2))}));
  CHECK(c->minus().explicitElements() ==
        ValueSet({vp(n(0), n(9)), vp(n(1), n(8))}));
  CHECK(c->rel(vs({vp(n(0), n(1))}), vp(n(0), n(9))));
  CHECK(c->rel(vs({vp(n(1), n(2))}), vp(n(1), n(8))));
  CHECK(!c->rel(vs({}), vp(n(0), n(9))));
  checkAgainstOracle(c, P(), Q());

  PredPtr tt = conj(truth(), truth());
  CHECK(tt->plus().explicitElements().isEmpty());
  CHECK(tt->minus().explicitElements().isEmpty());

  PredPtr pf = conj(P(), falsity());
  CHECK(pf->minus().explicitElements() ==
        ValueSet({vp(n(0), n(9)), vp(n(1), n(0))}));
  ValueSet starPlus = Carrier::starOf(pf->plus()).enumerate(64);
  for (const Value& a : starPlus)
    CHECK(!pf->rel(a, vp(n(1), n(0))));
}

TEST_CASE("disj matches its defining table") {
  PredPtr d = disj(P(), Q());
  CHECK(d->minus().explicitElements() == ValueSet({vp(n(9), n(8))}));
  CHECK(d->rel(vs({vp(n(0), n(1))}), vp(n(9), n(8))));
  checkAgainstOracle(d, P(), Q());

  PredPtr tt = disj(truth(), truth());
  CHECK(tt->minus().explicitElements().isEmpty());

  PredPtr ff = disj(falsity(), falsity());
  CHECK(ff->plus().explicitElements().isEmpty());
  CHECK(ff->minus().explicitElements() == ValueSet({vp(n(0), n(0))}));
  CHECK(!ff->rel(vs({}), vp(n(0), n(0))));
}

TEST_CASE("impl carriers and relation") {
  PredPtr tt = impl(truth(), truth());
  CHECK(tt->minus().explicitElements().isEmpty());
  ValueSet plus = tt->plus().enumerate(16);
  CHECK(plus.size() == 2);
  size_t forward = 0, backward = 0;
  for (const Value& v : plus)
    (v.first().asNat() == 0 ? forward : backward)++;
  CHECK(forward == 1);
  CHECK(backward == 1);

  // At w = {} the hypothesis side is vacuous and the conclusion collapses
  // to q({}, b).
  PredPtr pq = impl(P(), Q());
  for (const Value& b : pq->minus().explicitElements())
    CHECK(pq->rel(vs({}), b) == Q()->rel(vs({}), b.second()));

  checkAgainstOracle(pq, P(), Q());
}

TEST_CASE("connectives agree with the oracle on random pairs") {
  dstgen::Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    PredPtr p = dstgen::pred(rng, 3, 3);
    PredPtr q = dstgen::pred(rng, 3, 3);
    checkAgainstOracle(conj(p, q), p, q);
    checkAgainstOracle(disj(p, q), p, q);
  }
  for (int k = 0; k < 40; ++k) {
    PredPtr p = dstgen::pred(rng, 1, 1);
    PredPtr q = dstgen::pred(rng, 1, 1);
    checkAgainstOracle(impl(p, q), p, q);
  }
}

TEST_CASE("conj/disj/impl results validate as predicates") {
  dstgen::Rng rng(43);
  for (int k = 0; k < 40; ++k) {
    PredPtr p = dstgen::pred(rng, 3, 3);
    PredPtr q = dstgen::pred(rng, 3, 3);
    for (const PredPtr& c : {conj(p, q), disj(p, q)}) {
      PredPtr m = materialize(c);
      CHECK_NOTHROW(mkPred(m->plus().explicitElements(),
                           m->minus().explicitElements(), m->table()));
    }
  }
  for (int k = 0; k < 20; ++k) {
    PredPtr p = dstgen::pred(rng, 1, 1);
    PredPtr q = dstgen::pred(rng, 1, 1);
    PredPtr m = materialize(impl(p, q));
    CHECK_NOTHROW(mkPred(m->plus().explicitElements(),
                         m->minus().explicitElements(), m->table()));
  }
}

TEST_CASE("idRealizer") {
  IndexedPred fam = IndexedPred::singleton(P());
  RealizerPair id = idRealizer(fam);
  CHECK(id.plusPart == vs({vp(vs({}), vs({})), vp(vs({n(1)}), vs({n(1)}))}));
  CHECK(id.applyMinus(vs({n(1)}), n(9)) == vs({n(9)}));
  CHECK(checkRealizes(id, fam, fam).ok);
}

TEST_CASE("composeRealizers") {
  IndexedPred fam = IndexedPred::singleton(P());
  RealizerPair id = idRealizer(fam);
  RealizerPair composed = composeRealizers(id, id, fam, fam, fam);
  CHECK(composed == id);
  CHECK(checkRealizes(composed, fam, fam).ok);

  IndexedPred top = IndexedPred::singleton(truth());
  RealizerPair idT = idRealizer(top);
  RealizerPair c2 = composeRealizers(idT, idT, top, top, top);
  CHECK(checkRealizes(c2, top, top).ok);

  // Swapped inputs do not realize the claimed sequents.
  IndexedPred qf = IndexedPred::singleton(Q());
  CHECK_THROWS_AS(composeRealizers(id, id, fam, qf, fam), Error);
}

TEST_CASE("projections and pairing") {
  dstgen::Rng rng(47);
  IndexedPred tf = IndexedPred::singleton(truth());
  RealizerPair pr = projRealizer(Side::Right, tf, tf);
  CHECK(checkRealizes(pr, conj(tf, tf), tf).ok);

  for (int k = 0; k < 60; ++k) {
    IndexedPred p = IndexedPred::singleton(dstgen::pred(rng, 3, 3));
    IndexedPred q = IndexedPred::singleton(dstgen::pred(rng, 3, 3));
    IndexedPred pq = conj(p, q);
    CHECK(checkRealizes(projRealizer(Side::Left, p, q), pq, p).ok);
    CHECK(checkRealizes(projRealizer(Side::Right, p, q), pq, q).ok);
    RealizerPair idp = idRealizer(p);
    CHECK(checkRealizes(pairRealizers(idp, idp, p, p, p), p, conj(p, p)).ok);
  }
}

TEST_CASE("injections and case") {
  dstgen::Rng rng(53);
  for (int k = 0; k < 60; ++k) {
    IndexedPred p = IndexedPred::singleton(dstgen::pred(rng, 3, 3));
    IndexedPred q = IndexedPred::singleton(dstgen::pred(rng, 3, 3));
    IndexedPred pq = disj(p, q);
    CHECK(checkRealizes(injRealizer(Side::Left, p, q), p, pq).ok);
    CHECK(checkRealizes(injRealizer(Side::Right, p, q), q, pq).ok);
    RealizerPair idp = idRealizer(p);
    CHECK(checkRealizes(caseRealizers(idp, idp, p, p, p), disj(p, p), p).ok);
  }
}

TEST_CASE("the left-only case combiner is unsound") {
  // Frozen counterexample: the combiner that applies both branch
  // transformers to the left component fails where the branches differ.
  PredPtr p = mkPred(ValueSet({n(1)}), ValueSet({n(9)}), {});
  PredPtr q = mkPred(ValueSet({n(1)}), ValueSet({n(8)}), {{vs({n(1)}), n(8)}});
  PredPtr r = mkPred(ValueSet({n(5)}), ValueSet({n(7)}), {{vs({n(5)}), n(7)}});
  IndexedPred pf = IndexedPred::singleton(p);
  IndexedPred qf = IndexedPred::singleton(q);
  IndexedPred rf = IndexedPred::singleton(r);

  RealizerPair e = tabulateRealizer(
      pf, rf, [](const Value&) { return vs({}); },
      [](const Value&, const Value&) { return vs({n(9)}); });
  RealizerPair f = tabulateRealizer(
      qf, rf,
      [](const Value& y) { return y == vs({n(1)}) ? vs({n(5)}) : vs({}); },
      [](const Value&, const Value&) { return vs({n(8)}); });
  CHECK(checkRealizes(e, pf, rf).ok);
  CHECK(checkRealizes(f, qf, rf).ok);

  CHECK(checkRealizes(caseRealizers(e, f, pf, qf, rf), disj(pf, qf), rf).ok);

  IndexedPred pq = disj(pf, qf);
  RealizerPair leftOnly = tabulateRealizer(
      pq, rf,
      [&](const Value& w) {
        auto [x, y] = splitTags(w);
        Value ex = e.applyPlus(x), fx = f.applyPlus(x);
        std::vector<Value> out(ex.elements().begin(), ex.elements().end());
        out.insert(out.end(), fx.elements().begin(), fx.elements().end());
        return Value::set(std::move(out));
      },
      [&](const Value& w, const Value& z) {
        auto [x, y] = splitTags(w);
        Value ss = e.applyMinus(x, z), ts = f.applyMinus(y, z);
        std::vector<Value> out;
        for (const Value& s : ss.elements())
          for (const Value& t : ts.elements())
            out.push_back(vp(s, t));
        return Value::set(std::move(out));
      });
  CheckResult res = checkRealizes(leftOnly, pq, rf);
  CHECK(!res.ok);
  REQUIRE(res.counterexample.has_value());
  CHECK(res.counterexample->a == vs({vp(n(1), n(1))}));
  CHECK(res.counterexample->b == n(7));
}

TEST_CASE("curry and uncurry") {
  dstgen::Rng rng(59);

  // truth |- (p -> p) from the right projection realizer.
  IndexedPred tf = IndexedPred::singleton(truth());
  IndexedPred p0 = IndexedPred::singleton(P());
  RealizerPair proj = projRealizer(Side::Right, tf, p0);
  RealizerPair curried = curryRealizer(proj, tf, p0, p0);
  CHECK(checkRealizes(curried, tf, impl(p0, p0)).ok);

  int done = 0;
  for (int k = 0; k < 200 && done < 40; ++k) {
    IndexedPred r = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    IndexedPred p = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    IndexedPred q = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    auto e = decideEntails(conj(r, p), q);
    if (!e) continue;
    ++done;
    RealizerPair c = curryRealizer(*e, r, p, q);
    CHECK(checkRealizes(c, r, impl(p, q)).ok);
    RealizerPair u = uncurryRealizer(c, r, p, q);
    CHECK(checkRealizes(u, conj(r, p), q).ok);
  }
  CHECK(done >= 20);

  // All-empty carriers: vacuous pass.
  IndexedPred bot = IndexedPred::singleton(falsity());
  RealizerPair every = projRealizer(Side::Right, tf, tf);
  RealizerPair cc = curryRealizer(every, tf, tf, tf);
  CHECK(checkRealizes(cc, tf, impl(tf, tf)).ok);
  (void)bot;
}

TEST_CASE("truthIntro and exFalso") {
  dstgen::Rng rng(61);
  for (int k = 0; k < 40; ++k) {
    IndexedPred p = IndexedPred::singleton(dstgen::pred(rng, 3, 3));
    CHECK(checkRealizes(truthIntro(p), p, truthFamily(p.index())).ok);
    CHECK(checkRealizes(exFalso(p), falsityFamily(p.index()), p).ok);
  }
  IndexedPred tf = IndexedPred::singleton(truth());
  RealizerPair r = exFalso(tf);
  CHECK(checkRealizes(r, falsityFamily({"*"}), tf).ok);
}
