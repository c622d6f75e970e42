// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include "dst/proofc.hpp"
#include "gen.hpp"

using namespace dst;

namespace {

Value n(uint64_t k) { return Value::nat(k); }
Value vs(std::vector<Value> els) { return Value::set(std::move(els)); }

PredPtr P() {
  return mkPred(ValueSet({n(1)}), ValueSet({n(9)}), {{vs({n(1)}), n(9)}});
}

// p ∧ (q ∨ r) |- (p ∧ q) ∨ (p ∧ r), derived through the implication
// p -> (p∧q)∨(p∧r) to thread p through the case split.
ProofPtr distribForward(const IndexedPred& p, const IndexedPred& q,
                        const IndexedPred& r) {
  IndexedPred qr = disj(q, r);
  IndexedPred d = disj(conj(p, q), conj(p, r));

  // q |- p -> D: swap q∧p to p∧q, inject, then curry.
  auto viaLeft = ProofTerm::impI(ProofTerm::cut(
      ProofTerm::andI(ProofTerm::andE2(q, p), ProofTerm::andE1(q, p)),
      ProofTerm::orI1(conj(p, q), conj(p, r))));
  auto viaRight = ProofTerm::impI(ProofTerm::cut(
      ProofTerm::andI(ProofTerm::andE2(r, p), ProofTerm::andE1(r, p)),
      ProofTerm::orI2(conj(p, q), conj(p, r))));
  auto caseSplit = ProofTerm::orE(viaLeft, viaRight);  // q∨r |- p -> D

  auto toImp = ProofTerm::cut(ProofTerm::andE2(p, qr), caseSplit);
  auto keepP = ProofTerm::andE1(p, qr);
  auto both = ProofTerm::andI(toImp, keepP);  // p∧(q∨r) |- (p->D)∧p
  auto applied = ProofTerm::impE(ProofTerm::hyp(impl(p, d)));
  return ProofTerm::cut(both, applied);
}

// (p ∧ q) ∨ (p ∧ r) |- p ∧ (q ∨ r).
ProofPtr distribBackward(const IndexedPred& p, const IndexedPred& q,
                         const IndexedPred& r) {
  auto left = ProofTerm::andI(
      ProofTerm::andE1(p, q),
      ProofTerm::cut(ProofTerm::andE2(p, q), ProofTerm::orI1(q, r)));
  auto right = ProofTerm::andI(
      ProofTerm::andE1(p, r),
      ProofTerm::cut(ProofTerm::andE2(p, r), ProofTerm::orI2(q, r)));
  return ProofTerm::orE(left, right);
}

}  // namespace

TEST_CASE("typeCheck") {
  IndexedPred p = IndexedPred::singleton(P());
  CHECK(typeCheck(ProofTerm::hyp(p)).ok);

  // andE1-style decomposition demanded of a disjunction fails at the node.
  auto bad = ProofTerm::impI(ProofTerm::hyp(disj(p, p)));
  TypeCheckResult res = typeCheck(bad);
  CHECK(!res.ok);
  CHECK(res.diagnostic.find("conjunction") != std::string::npos);
  CHECK(res.diagnostic.find("root.0") == std::string::npos);  // fails at root

  // forallI whose map does not match the premise index.
  FiniteMap u({"a"}, {"*"}, {{"a", "*"}});
  IndexedPred psi = IndexedPred::singleton(P());  // over {*}
  IndexedPred wrong({"b"}, {P()});
  auto badQuant = ProofTerm::forallI(u, ProofTerm::hyp(wrong), psi);
  CHECK(!typeCheck(badQuant).ok);

  // Mismatched cut.
  IndexedPred q = IndexedPred::singleton(
      mkPred(ValueSet({n(2)}), ValueSet({n(8)}), {{vs({n(2)}), n(8)}}));
  auto badCut = ProofTerm::cut(ProofTerm::hyp(p), ProofTerm::hyp(q));
  CHECK(!typeCheck(badCut).ok);
}

TEST_CASE("compile basic rules") {
  IndexedPred p = IndexedPred::singleton(P());
  RealizerPair viaHyp = compileProof(ProofTerm::hyp(p));
  CHECK(viaHyp == idRealizer(p));
  CHECK(checkRealizes(viaHyp, p, p).ok);

  // andE1 after andI realizes p |- p.
  auto term = ProofTerm::cut(
      ProofTerm::andI(ProofTerm::hyp(p), ProofTerm::hyp(p)),
      ProofTerm::andE1(p, p));
  RealizerPair r = compileProof(term);
  CHECK(checkRealizes(r, p, p).ok);
}

TEST_CASE("cut compiles to composition") {
  dstgen::Rng rng(127);
  for (int k = 0; k < 20; ++k) {
    IndexedPred p = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    IndexedPred q = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    auto s = ProofTerm::andE1(p, q);
    auto t = ProofTerm::orI1(p, q);
    RealizerPair direct = compileProof(ProofTerm::cut(s, t));
    RealizerPair manual = composeRealizers(
        compileProof(s), compileProof(t), conj(p, q), p, disj(p, q));
    CHECK(direct == manual);
  }
}

TEST_CASE("distributivity compiles and checks") {
  dstgen::Rng rng(131);
  for (int k = 0; k < 25; ++k) {
    IndexedPred p = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    IndexedPred q = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    IndexedPred r = IndexedPred::singleton(dstgen::pred(rng, 2, 2));
    IndexedPred lhs = conj(p, disj(q, r));
    IndexedPred rhs = disj(conj(p, q), conj(p, r));

    auto fwd = distribForward(p, q, r);
    Sequent sf = fwd->conclusion();
    CHECK(IndexedPred::equal(sf.lhs, lhs));
    CHECK(IndexedPred::equal(sf.rhs, rhs));
    CHECK(checkRealizes(compileProof(fwd), lhs, rhs).ok);

    auto bwd = distribBackward(p, q, r);
    CHECK(checkRealizes(compileProof(bwd), rhs, lhs).ok);
  }
}

TEST_CASE("Frobenius compiles and checks") {
  // The existential challenge carriers grow as a product over the global
  // witness domain, so two-fiber instances keep the challenges on one side
  // only; single-fiber instances exercise both sides at once.
  dstgen::Rng rng(137);
  for (int k = 0; k < 15; ++k) {
    auto I = dstgen::labels("i", 1 + dstgen::pick(rng, 2));
    FiniteMap u = dstgen::randomMap(rng, I, {"*"});
    bool single = I.size() == 1;
    bool phiChallenges = single || dstgen::coin(rng);
    bool psiChallenges = single || !phiChallenges;
    IndexedPred phi = dstgen::family(rng, I, 1, phiChallenges ? 1 : 0);
    IndexedPred psi =
        IndexedPred::singleton(dstgen::pred(rng, 1, psiChallenges ? 1 : 0));
    IndexedPred uPsi = reindex(u, psi);
    IndexedPred chi = conj(phi, uPsi);
    IndexedPred exPhi = existsAlong(u, phi);
    IndexedPred exChi = existsAlong(u, chi);
    IndexedPred lhs = exChi;
    IndexedPred rhs = conj(exPhi, psi);

    // exists_u(phi ∧ u*psi) |- (exists_u phi) ∧ psi.
    auto unit = ProofTerm::existsI(u, ProofTerm::hyp(exPhi), phi);
    auto s1 = ProofTerm::cut(ProofTerm::andE1(phi, uPsi), unit);
    auto s2 = ProofTerm::andE2(phi, uPsi);
    auto s3 = ProofTerm::andI(s1, s2);
    auto fwd = ProofTerm::existsE(u, s3, rhs);
    Sequent sf = fwd->conclusion();
    CHECK(IndexedPred::equal(sf.lhs, lhs));
    CHECK(IndexedPred::equal(sf.rhs, rhs));
    CHECK(checkRealizes(compileProof(fwd), lhs, rhs).ok);

    // (exists_u phi) ∧ psi |- exists_u(phi ∧ u*psi).
    auto unit2 = ProofTerm::existsI(u, ProofTerm::hyp(exChi), chi);
    auto curried = ProofTerm::impI(unit2);
    auto lifted = ProofTerm::existsE(u, curried, impl(psi, exChi));
    auto bwd = ProofTerm::impE(lifted);
    Sequent sb = bwd->conclusion();
    CHECK(IndexedPred::equal(sb.lhs, rhs));
    CHECK(IndexedPred::equal(sb.rhs, lhs));
    CHECK(checkRealizes(compileProof(bwd), rhs, lhs).ok);
  }
}
