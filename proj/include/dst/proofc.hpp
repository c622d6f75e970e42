// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_PROOFC_HPP
#define DST_PROOFC_HPP

#include <memory>
#include <string>

#include "dst/connectives.hpp"
#include "dst/quantifiers.hpp"

namespace dst {

class ProofTerm;
using ProofPtr = std::shared_ptr<const ProofTerm>;

struct Sequent {
  IndexedPred lhs, rhs;
};

/// Sequent-style intuitionistic derivations with a single antecedent;
/// conjunction encodes contexts. Every rule corresponds to exactly one
/// realizer constructor, so compilation is a fold.
///
/// Leaves: hyp, truthI, exFalso, andE1/andE2 (projections), orI1/orI2
/// (injections). Rules with premises: andI (pairing), orE (case), impI
/// (curry), impE (uncurry), cut (composition), forallI/forallE and
/// existsI/existsE (adjunction transposes), reindexRule (precomposition).
class ProofTerm {
public:
  enum class Rule : uint8_t {
    Hyp,      // phi |- phi
    TruthI,   // phi |- truth
    ExFalso,  // falsity |- phi
    AndE1,    // conj(p,q) |- p
    AndE2,    // conj(p,q) |- q
    OrI1,     // p |- disj(p,q)
    OrI2,     // q |- disj(p,q)
    AndI,     // from r|-p, r|-q: r |- conj(p,q)
    OrE,      // from p|-r, q|-r: disj(p,q) |- r
    ImpI,     // from conj(r,p)|-q: r |- impl(p,q)
    ImpE,     // from r|-impl(p,q): conj(r,p) |- q
    Cut,      // from phi|-chi, chi|-psi: phi |- psi
    ForallI,  // from u*psi|-phi: psi |- forall_u(phi)
    ForallE,  // from psi|-forall_u(phi): u*psi |- phi
    ExistsI,  // from exists_u(phi)|-psi: phi |- u*psi
    ExistsE,  // from phi|-u*psi: exists_u(phi) |- psi
    ReindexR, // from phi|-psi over J: u*phi |- u*psi over dom(u)
  };

  static ProofPtr hyp(IndexedPred phi);
  static ProofPtr truthI(IndexedPred phi);
  static ProofPtr exFalsoTerm(IndexedPred phi);
  static ProofPtr andE1(IndexedPred p, IndexedPred q);
  static ProofPtr andE2(IndexedPred p, IndexedPred q);
  static ProofPtr orI1(IndexedPred p, IndexedPred q);
  static ProofPtr orI2(IndexedPred p, IndexedPred q);
  static ProofPtr andI(ProofPtr s, ProofPtr t);
  static ProofPtr orE(ProofPtr s, ProofPtr t);
  static ProofPtr impI(ProofPtr s);
  static ProofPtr impE(ProofPtr s);
  static ProofPtr cut(ProofPtr s, ProofPtr t);
  /// s : u*psi |-_I phi; psi names the family being generalized over.
  static ProofPtr forallI(FiniteMap u, ProofPtr s, IndexedPred psi);
  /// s : psi |-_J forall_u(phi); phi names the quantified family.
  static ProofPtr forallE(FiniteMap u, ProofPtr s, IndexedPred phi);
  /// s : exists_u(phi) |-_J psi; phi names the quantified family.
  static ProofPtr existsI(FiniteMap u, ProofPtr s, IndexedPred phi);
  /// s : phi |-_I u*psi; psi names the target family.
  static ProofPtr existsE(FiniteMap u, ProofPtr s, IndexedPred psi);
  static ProofPtr reindexRule(FiniteMap u, ProofPtr s);

  Rule rule() const { return rule_; }
  const std::vector<ProofPtr>& premises() const { return premises_; }
  const std::vector<IndexedPred>& annotations() const { return annotations_; }
  const FiniteMap& map() const { return map_; }

  /// The derived conclusion. Throws IllTypedError (with the offending node
  /// path) when some rule's side conditions fail.
  Sequent conclusion() const;

private:
  friend struct ProofTermBuilder;
  ProofTerm() = default;
  Sequent conclusionAt(const std::string& path) const;

  Rule rule_ = Rule::Hyp;
  std::vector<ProofPtr> premises_;
  std::vector<IndexedPred> annotations_;
  FiniteMap map_;
};

struct TypeCheckResult {
  bool ok = false;
  std::string diagnostic;  // names the first failing node
  explicit operator bool() const { return ok; }
};

/// Re-derives every node's conclusion and reports the first inconsistency.
TypeCheckResult typeCheck(const ProofPtr& t);

/// Compiles a well-typed derivation to a realizer of its conclusion.
/// Throws IllTypedError on type errors. The realizer constructors check
/// each intermediate entailment; CheckFailedError here signals an internal
/// defect, never a property of well-typed input.
RealizerPair compileProof(const ProofPtr& t, const Budget& budget = {});

}  // namespace dst

#endif  // DST_PROOFC_HPP
