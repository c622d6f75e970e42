// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/proofc.hpp"

namespace dst {

namespace {

// Splits a fiberwise-composite family into its component families.
std::pair<IndexedPred, IndexedPred> decompose(const IndexedPred& fam,
                                              Pred::RelKind kind,
                                              const std::string& path,
                                              const char* what) {
  std::vector<PredPtr> left, right;
  for (size_t i = 0; i < fam.size(); ++i) {
    const PredPtr& f = fam.fiberAt(i);
    if (f->relKind() != kind || f->parts().size() != 2)
      throw IllTypedError(std::string(what) + " expects a fiberwise " +
                              (kind == Pred::RelKind::Conj
                                   ? "conjunction"
                                   : kind == Pred::RelKind::Disj
                                         ? "disjunction"
                                         : "implication") +
                              ", fiber " + fam.index()[i] + " is not one",
                          path);
    left.push_back(f->parts()[0]);
    right.push_back(f->parts()[1]);
  }
  return {IndexedPred(fam.index(), std::move(left)),
          IndexedPred(fam.index(), std::move(right))};
}

void requireEqual(const IndexedPred& a, const IndexedPred& b,
                  const std::string& path, const char* what) {
  if (!IndexedPred::equal(a, b))
    throw IllTypedError(std::string(what), path);
}

}  // namespace

struct ProofTermBuilder {
  static ProofPtr make(ProofTerm::Rule rule, std::vector<ProofPtr> premises,
                       std::vector<IndexedPred> annotations, FiniteMap map) {
    auto t = std::shared_ptr<ProofTerm>(new ProofTerm());
    t->rule_ = rule;
    t->premises_ = std::move(premises);
    t->annotations_ = std::move(annotations);
    t->map_ = std::move(map);
    return t;
  }
};

ProofPtr ProofTerm::hyp(IndexedPred phi) {
  return ProofTermBuilder::make(Rule::Hyp, {}, {std::move(phi)}, {});
}
ProofPtr ProofTerm::truthI(IndexedPred phi) {
  return ProofTermBuilder::make(Rule::TruthI, {}, {std::move(phi)}, {});
}
ProofPtr ProofTerm::exFalsoTerm(IndexedPred phi) {
  return ProofTermBuilder::make(Rule::ExFalso, {}, {std::move(phi)}, {});
}
ProofPtr ProofTerm::andE1(IndexedPred p, IndexedPred q) {
  return ProofTermBuilder::make(Rule::AndE1, {},
                                {std::move(p), std::move(q)}, {});
}
ProofPtr ProofTerm::andE2(IndexedPred p, IndexedPred q) {
  return ProofTermBuilder::make(Rule::AndE2, {},
                                {std::move(p), std::move(q)}, {});
}
ProofPtr ProofTerm::orI1(IndexedPred p, IndexedPred q) {
  return ProofTermBuilder::make(Rule::OrI1, {},
                                {std::move(p), std::move(q)}, {});
}
ProofPtr ProofTerm::orI2(IndexedPred p, IndexedPred q) {
  return ProofTermBuilder::make(Rule::OrI2, {},
                                {std::move(p), std::move(q)}, {});
}
ProofPtr ProofTerm::andI(ProofPtr s, ProofPtr t) {
  return ProofTermBuilder::make(Rule::AndI, {std::move(s), std::move(t)}, {},
                                {});
}
ProofPtr ProofTerm::orE(ProofPtr s, ProofPtr t) {
  return ProofTermBuilder::make(Rule::OrE, {std::move(s), std::move(t)}, {},
                                {});
}
ProofPtr ProofTerm::impI(ProofPtr s) {
  return ProofTermBuilder::make(Rule::ImpI, {std::move(s)}, {}, {});
}
ProofPtr ProofTerm::impE(ProofPtr s) {
  return ProofTermBuilder::make(Rule::ImpE, {std::move(s)}, {}, {});
}
ProofPtr ProofTerm::cut(ProofPtr s, ProofPtr t) {
  return ProofTermBuilder::make(Rule::Cut, {std::move(s), std::move(t)}, {},
                                {});
}
ProofPtr ProofTerm::forallI(FiniteMap u, ProofPtr s, IndexedPred psi) {
  return ProofTermBuilder::make(Rule::ForallI, {std::move(s)},
                                {std::move(psi)}, std::move(u));
}
ProofPtr ProofTerm::forallE(FiniteMap u, ProofPtr s, IndexedPred phi) {
  return ProofTermBuilder::make(Rule::ForallE, {std::move(s)},
                                {std::move(phi)}, std::move(u));
}
ProofPtr ProofTerm::existsI(FiniteMap u, ProofPtr s, IndexedPred phi) {
  return ProofTermBuilder::make(Rule::ExistsI, {std::move(s)},
                                {std::move(phi)}, std::move(u));
}
ProofPtr ProofTerm::existsE(FiniteMap u, ProofPtr s, IndexedPred psi) {
  return ProofTermBuilder::make(Rule::ExistsE, {std::move(s)},
                                {std::move(psi)}, std::move(u));
}
ProofPtr ProofTerm::reindexRule(FiniteMap u, ProofPtr s) {
  return ProofTermBuilder::make(Rule::ReindexR, {std::move(s)}, {},
                                std::move(u));
}

Sequent ProofTerm::conclusion() const { return conclusionAt("root"); }

Sequent ProofTerm::conclusionAt(const std::string& path) const {
  auto premise = [&](size_t k) {
    return premises_[k]->conclusionAt(path + "." + std::to_string(k));
  };
  try {
    switch (rule_) {
      case Rule::Hyp:
        return {annotations_[0], annotations_[0]};
      case Rule::TruthI:
        return {annotations_[0], truthFamily(annotations_[0].index())};
      case Rule::ExFalso:
        return {falsityFamily(annotations_[0].index()), annotations_[0]};
      case Rule::AndE1:
        return {conj(annotations_[0], annotations_[1]), annotations_[0]};
      case Rule::AndE2:
        return {conj(annotations_[0], annotations_[1]), annotations_[1]};
      case Rule::OrI1:
        return {annotations_[0], disj(annotations_[0], annotations_[1])};
      case Rule::OrI2:
        return {annotations_[1], disj(annotations_[0], annotations_[1])};
      case Rule::AndI: {
        Sequent s = premise(0), t = premise(1);
        requireEqual(s.lhs, t.lhs, path,
                     "andI premises have different antecedents");
        return {s.lhs, conj(s.rhs, t.rhs)};
      }
      case Rule::OrE: {
        Sequent s = premise(0), t = premise(1);
        requireEqual(s.rhs, t.rhs, path,
                     "orE premises have different conclusions");
        return {disj(s.lhs, t.lhs), s.rhs};
      }
      case Rule::ImpI: {
        Sequent s = premise(0);
        auto [r, p] = decompose(s.lhs, Pred::RelKind::Conj, path, "impI");
        return {r, impl(p, s.rhs)};
      }
      case Rule::ImpE: {
        Sequent s = premise(0);
        auto [p, q] = decompose(s.rhs, Pred::RelKind::Impl, path, "impE");
        return {conj(s.lhs, p), q};
      }
      case Rule::Cut: {
        Sequent s = premise(0), t = premise(1);
        requireEqual(s.rhs, t.lhs, path,
                     "cut premises do not meet in the middle");
        return {s.lhs, t.rhs};
      }
      case Rule::ForallI: {
        Sequent s = premise(0);
        requireEqual(s.lhs, reindex(map_, annotations_[0]), path,
                     "forallI premise antecedent is not the reindexed "
                     "annotation");
        return {annotations_[0], forallAlong(map_, s.rhs)};
      }
      case Rule::ForallE: {
        Sequent s = premise(0);
        requireEqual(s.rhs, forallAlong(map_, annotations_[0]), path,
                     "forallE premise conclusion is not the quantified "
                     "annotation");
        return {reindex(map_, s.lhs), annotations_[0]};
      }
      case Rule::ExistsI: {
        Sequent s = premise(0);
        requireEqual(s.lhs, existsAlong(map_, annotations_[0]), path,
                     "existsI premise antecedent is not the quantified "
                     "annotation");
        return {annotations_[0], reindex(map_, s.rhs)};
      }
      case Rule::ExistsE: {
        Sequent s = premise(0);
        requireEqual(s.rhs, reindex(map_, annotations_[0]), path,
                     "existsE premise conclusion is not the reindexed "
                     "annotation");
        return {existsAlong(map_, s.lhs), annotations_[0]};
      }
      case Rule::ReindexR: {
        Sequent s = premise(0);
        if (map_.cod() != s.lhs.index())
          throw IllTypedError("reindex map codomain differs from the premise "
                              "index",
                              path);
        return {reindex(map_, s.lhs), reindex(map_, s.rhs)};
      }
    }
  } catch (const IndexMismatchError& e) {
    throw IllTypedError(e.what(), path);
  }
  throw IllTypedError("unknown rule", path);
}

TypeCheckResult typeCheck(const ProofPtr& t) {
  try {
    (void)t->conclusion();
    return {true, ""};
  } catch (const IllTypedError& e) {
    return {false, std::string(e.what()) + " (at " + e.node + ")"};
  }
}

RealizerPair compileProof(const ProofPtr& t, const Budget& budget) {
  Sequent seq = t->conclusion();  // throws IllTypedError first
  const auto& ann = t->annotations();
  switch (t->rule()) {
    case ProofTerm::Rule::Hyp:
      return idRealizer(ann[0], budget);
    case ProofTerm::Rule::TruthI:
      return truthIntro(ann[0], budget);
    case ProofTerm::Rule::ExFalso:
      return exFalso(ann[0], budget);
    case ProofTerm::Rule::AndE1:
      return projRealizer(Side::Left, ann[0], ann[1], budget);
    case ProofTerm::Rule::AndE2:
      return projRealizer(Side::Right, ann[0], ann[1], budget);
    case ProofTerm::Rule::OrI1:
      return injRealizer(Side::Left, ann[0], ann[1], budget);
    case ProofTerm::Rule::OrI2:
      return injRealizer(Side::Right, ann[0], ann[1], budget);
    case ProofTerm::Rule::AndI: {
      Sequent s = t->premises()[0]->conclusion();
      Sequent u = t->premises()[1]->conclusion();
      return pairRealizers(compileProof(t->premises()[0], budget),
                           compileProof(t->premises()[1], budget), s.lhs,
                           s.rhs, u.rhs, budget);
    }
    case ProofTerm::Rule::OrE: {
      Sequent s = t->premises()[0]->conclusion();
      Sequent u = t->premises()[1]->conclusion();
      return caseRealizers(compileProof(t->premises()[0], budget),
                           compileProof(t->premises()[1], budget), s.lhs,
                           u.lhs, s.rhs, budget);
    }
    case ProofTerm::Rule::ImpI: {
      Sequent s = t->premises()[0]->conclusion();
      auto [r, p] = decompose(s.lhs, Pred::RelKind::Conj, "root", "impI");
      return curryRealizer(compileProof(t->premises()[0], budget), r, p,
                           s.rhs, budget);
    }
    case ProofTerm::Rule::ImpE: {
      Sequent s = t->premises()[0]->conclusion();
      auto [p, q] = decompose(s.rhs, Pred::RelKind::Impl, "root", "impE");
      return uncurryRealizer(compileProof(t->premises()[0], budget), s.lhs,
                             p, q, budget);
    }
    case ProofTerm::Rule::Cut: {
      Sequent s = t->premises()[0]->conclusion();
      Sequent u = t->premises()[1]->conclusion();
      return composeRealizers(compileProof(t->premises()[0], budget),
                              compileProof(t->premises()[1], budget), s.lhs,
                              s.rhs, u.rhs, budget);
    }
    case ProofTerm::Rule::ForallI: {
      Sequent s = t->premises()[0]->conclusion();
      return forallTranspose(TransposeDir::Up,
                             compileProof(t->premises()[0], budget), t->map(),
                             s.rhs, ann[0], budget);
    }
    case ProofTerm::Rule::ForallE: {
      Sequent s = t->premises()[0]->conclusion();
      return forallTranspose(TransposeDir::Down,
                             compileProof(t->premises()[0], budget), t->map(),
                             ann[0], s.lhs, budget);
    }
    case ProofTerm::Rule::ExistsI: {
      Sequent s = t->premises()[0]->conclusion();
      return existsTranspose(TransposeDir::Down,
                             compileProof(t->premises()[0], budget), t->map(),
                             ann[0], s.rhs, budget);
    }
    case ProofTerm::Rule::ExistsE: {
      Sequent s = t->premises()[0]->conclusion();
      return existsTranspose(TransposeDir::Up,
                             compileProof(t->premises()[0], budget), t->map(),
                             s.lhs, ann[0], budget);
    }
    case ProofTerm::Rule::ReindexR: {
      Sequent s = t->premises()[0]->conclusion();
      return reindexRealizer(t->map(),
                             compileProof(t->premises()[0], budget), s.lhs,
                             s.rhs, budget);
    }
  }
  (void)seq;
  throw IllTypedError("unknown rule", "root");
}

}  // namespace dst
