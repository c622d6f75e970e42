// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#include "dst/connectives.hpp"

#include <algorithm>

namespace dst {

namespace {

void requireChecked(const CheckResult& res, const char* what) {
  if (!res.ok)
    throw CheckFailedError(std::string(what) +
                           ": input does not realize its entailment at " +
                           res.counterexample->toString());
}

// Common carrier slices used by curry/uncurry at some shared plus-point.
// All fibers applicable at the point must agree on them; the paper's codes
// are untyped and need no such agreement, canonical graphs do.
struct ImplSlices {
  ValueSet starPPlus;   // star(p_i.plus)
  ValueSet qMinus;      // q_i.minus
};

ImplSlices commonSlices(const IndexedPred& p, const IndexedPred& q,
                        const std::vector<size_t>& applicable,
                        uint64_t budget) {
  ImplSlices s;
  s.starPPlus =
      Carrier::starOf(p.fiberAt(applicable[0])->plus()).enumerate(budget);
  s.qMinus = q.fiberAt(applicable[0])->minus().enumerate(budget);
  for (size_t k = 1; k < applicable.size(); ++k) {
    ValueSet sp =
        Carrier::starOf(p.fiberAt(applicable[k])->plus()).enumerate(budget);
    ValueSet qm = q.fiberAt(applicable[k])->minus().enumerate(budget);
    if (sp != s.starPPlus || qm != s.qMinus)
      throw DomainMismatchError(
          "currying over a family needs agreeing implication carriers at "
          "shared points; fibers " +
          p.index()[applicable[0]] + " and " + p.index()[applicable[k]] +
          " differ");
  }
  return s;
}

}  // namespace

PredPtr truth() {
  static const PredPtr t = mkPred(ValueSet::empty(), ValueSet::empty(), {});
  return t;
}

PredPtr falsity() {
  static const PredPtr f =
      mkPred(ValueSet::empty(), ValueSet({Value::nat(0)}), {});
  return f;
}

PredPtr conj(const PredPtr& p, const PredPtr& q, uint64_t) {
  return Pred::composite(Pred::RelKind::Conj,
                         Carrier::taggedSum(p->plus(), q->plus()),
                         Carrier::taggedSum(p->minus(), q->minus()), {p, q});
}

PredPtr disj(const PredPtr& p, const PredPtr& q, uint64_t budget) {
  ValueSet pm = p->minus().enumerate(budget);
  ValueSet qm = q->minus().enumerate(budget);
  return Pred::composite(Pred::RelKind::Disj,
                         Carrier::taggedSum(p->plus(), q->plus()),
                         Carrier(prodSet(pm, qm)), {p, q});
}

PredPtr impl(const PredPtr& p, const PredPtr& q, uint64_t budget) {
  ValueSet starP = Carrier::starOf(p->plus()).enumerate(budget);
  ValueSet qm = q->minus().enumerate(budget);
  Carrier forward = Carrier::graphs(starP, Carrier::starOf(q->plus()));
  Carrier backward =
      Carrier::graphs(prodSet(starP, qm), Carrier::starOf(p->minus()));
  return Pred::composite(Pred::RelKind::Impl,
                         Carrier::taggedSum(forward, backward),
                         Carrier(prodSet(starP, qm)), {p, q});
}

IndexedPred truthFamily(std::vector<std::string> index) {
  return IndexedPred::constant(std::move(index), truth());
}

IndexedPred falsityFamily(std::vector<std::string> index) {
  return IndexedPred::constant(std::move(index), falsity());
}

namespace {

template <typename F>
IndexedPred fiberwise(const IndexedPred& p, const IndexedPred& q, F&& f) {
  if (p.index() != q.index())
    throw IndexMismatchError("fiberwise connective over different indices");
  std::vector<PredPtr> fibers;
  fibers.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    fibers.push_back(f(p.fiberAt(i), q.fiberAt(i)));
  return IndexedPred(p.index(), std::move(fibers));
}

}  // namespace

IndexedPred conj(const IndexedPred& p, const IndexedPred& q,
                 uint64_t budget) {
  return fiberwise(p, q, [&](const PredPtr& a, const PredPtr& b) {
    return conj(a, b, budget);
  });
}

IndexedPred disj(const IndexedPred& p, const IndexedPred& q,
                 uint64_t budget) {
  return fiberwise(p, q, [&](const PredPtr& a, const PredPtr& b) {
    return disj(a, b, budget);
  });
}

IndexedPred impl(const IndexedPred& p, const IndexedPred& q,
                 uint64_t budget) {
  return fiberwise(p, q, [&](const PredPtr& a, const PredPtr& b) {
    return impl(a, b, budget);
  });
}

RealizerPair idRealizer(const IndexedPred& phi, const Budget& budget) {
  return tabulateRealizer(
      phi, phi, [](const Value& x) { return x; },
      [](const Value&, const Value& y) { return Value::set({y}); },
      budget.enumeration);
}

RealizerPair composeRealizers(const RealizerPair& r1, const RealizerPair& r2,
                              const IndexedPred& phi, const IndexedPred& chi,
                              const IndexedPred& psi, const Budget& budget) {
  requireChecked(checkRealizes(r1, phi, chi, budget), "composeRealizers");
  requireChecked(checkRealizes(r2, chi, psi, budget), "composeRealizers");
  return tabulateRealizer(
      phi, psi,
      [&](const Value& x) { return r2.applyPlus(r1.applyPlus(x)); },
      [&](const Value& x, const Value& z) {
        std::vector<Value> out;
        Value mid = r1.applyPlus(x);
        Value ys = r2.applyMinus(mid, z);
        for (const Value& y : ys.elements()) {
          auto back = r1.applyMinus(x, y);
          out.insert(out.end(), back.elements().begin(),
                     back.elements().end());
        }
        return Value::set(std::move(out));
      },
      budget.enumeration);
}

RealizerPair projRealizer(Side side, const IndexedPred& p,
                          const IndexedPred& q, const Budget& budget) {
  IndexedPred pq = conj(p, q, budget.enumeration);
  return tabulateRealizer(
      pq, side == Side::Left ? p : q,
      [&](const Value& w) {
        auto [a, b] = splitTags(w);
        return side == Side::Left ? a : b;
      },
      [&](const Value&, const Value& c) {
        return side == Side::Left
                   ? joinTags(Value::set({c}), Value::emptySet())
                   : joinTags(Value::emptySet(), Value::set({c}));
      },
      budget.enumeration);
}

RealizerPair pairRealizers(const RealizerPair& rp, const RealizerPair& rq,
                           const IndexedPred& r, const IndexedPred& p,
                           const IndexedPred& q, const Budget& budget) {
  requireChecked(checkRealizes(rp, r, p, budget), "pairRealizers");
  requireChecked(checkRealizes(rq, r, q, budget), "pairRealizers");
  IndexedPred pq = conj(p, q, budget.enumeration);
  return tabulateRealizer(
      r, pq,
      [&](const Value& x) {
        return joinTags(rp.applyPlus(x), rq.applyPlus(x));
      },
      [&](const Value& x, const Value& b) {
        uint64_t tag = b.first().asNat();
        return tag == 0 ? rp.applyMinus(x, b.second())
                        : rq.applyMinus(x, b.second());
      },
      budget.enumeration);
}

RealizerPair injRealizer(Side side, const IndexedPred& p,
                         const IndexedPred& q, const Budget& budget) {
  IndexedPred pq = disj(p, q, budget.enumeration);
  return tabulateRealizer(
      side == Side::Left ? p : q, pq,
      [&](const Value& x) {
        return side == Side::Left ? joinTags(x, Value::emptySet())
                                  : joinTags(Value::emptySet(), x);
      },
      [&](const Value&, const Value& b) {
        return Value::set(
            {side == Side::Left ? b.first() : b.second()});
      },
      budget.enumeration);
}

RealizerPair caseRealizers(const RealizerPair& rp, const RealizerPair& rq,
                           const IndexedPred& p, const IndexedPred& q,
                           const IndexedPred& r, const Budget& budget) {
  requireChecked(checkRealizes(rp, p, r, budget), "caseRealizers");
  requireChecked(checkRealizes(rq, q, r, budget), "caseRealizers");
  IndexedPred pq = disj(p, q, budget.enumeration);
  return tabulateRealizer(
      pq, r,
      [&](const Value& w) {
        auto [x, y] = splitTags(w);
        Value ex = rp.applyPlus(x), fy = rq.applyPlus(y);
        std::vector<Value> out(ex.elements().begin(), ex.elements().end());
        out.insert(out.end(), fy.elements().begin(), fy.elements().end());
        return Value::set(std::move(out));
      },
      [&](const Value& w, const Value& z) {
        auto [x, y] = splitTags(w);
        Value ss = rp.applyMinus(x, z), ts = rq.applyMinus(y, z);
        std::vector<Value> out;
        for (const Value& s : ss.elements())
          for (const Value& t : ts.elements())
            out.push_back(Value::pair(s, t));
        return Value::set(std::move(out));
      },
      budget.enumeration);
}

RealizerPair curryRealizer(const RealizerPair& e, const IndexedPred& r,
                           const IndexedPred& p, const IndexedPred& q,
                           const Budget& budget) {
  IndexedPred rp = conj(r, p, budget.enumeration);
  requireChecked(checkRealizes(e, rp, q, budget), "curryRealizer");
  IndexedPred pq = impl(p, q, budget.enumeration);

  // Applicability of fibers at x decides which implication carrier the
  // inner tabulations must land in.
  std::vector<ValueSet> rStars;
  rStars.reserve(r.size());
  for (size_t i = 0; i < r.size(); ++i)
    rStars.push_back(
        Carrier::starOf(r.fiberAt(i)->plus()).enumerate(budget.enumeration));
  auto slicesAt = [&](const Value& x) {
    std::vector<size_t> applicable;
    for (size_t i = 0; i < r.size(); ++i)
      if (rStars[i].contains(x)) applicable.push_back(i);
    return commonSlices(p, q, applicable, budget.enumeration);
  };

  return tabulateRealizer(
      r, pq,
      [&](const Value& x) {
        ImplSlices s = slicesAt(x);
        Value g1 = tabulate(
            [&](const Value& y) { return e.applyPlus(joinTags(x, y)); },
            s.starPPlus);
        Value g2 = tabulate(
            [&](const Value& yz) {
              Value back =
                  e.applyMinus(joinTags(x, yz.first()), yz.second());
              return splitTags(back).second;
            },
            prodSet(s.starPPlus, s.qMinus));
        return joinTags(Value::set({g1}), Value::set({g2}));
      },
      [&](const Value& x, const Value& yz) {
        Value back = e.applyMinus(joinTags(x, yz.first()), yz.second());
        return splitTags(back).first;
      },
      budget.enumeration);
}

RealizerPair uncurryRealizer(const RealizerPair& e, const IndexedPred& r,
                             const IndexedPred& p, const IndexedPred& q,
                             const Budget& budget) {
  IndexedPred pq = impl(p, q, budget.enumeration);
  requireChecked(checkRealizes(e, r, pq, budget), "uncurryRealizer");
  IndexedPred rp = conj(r, p, budget.enumeration);
  return tabulateRealizer(
      rp, q,
      [&](const Value& w) {
        auto [x, y] = splitTags(w);
        auto [fwd, bwd] = splitTags(e.applyPlus(x));
        return bracket(fwd, y);
      },
      [&](const Value& w, const Value& z) {
        auto [x, y] = splitTags(w);
        auto [fwd, bwd] = splitTags(e.applyPlus(x));
        Value yz = Value::pair(y, z);
        return joinTags(e.applyMinus(x, yz), bracket(bwd, yz));
      },
      budget.enumeration);
}

RealizerPair truthIntro(const IndexedPred& p, const Budget& budget) {
  IndexedPred top = truthFamily(p.index());
  return tabulateRealizer(
      p, top, [](const Value&) { return Value::emptySet(); },
      [](const Value&, const Value&) { return Value::emptySet(); },
      budget.enumeration);
}

RealizerPair exFalso(const IndexedPred& p, const Budget& budget) {
  IndexedPred bottom = falsityFamily(p.index());
  return tabulateRealizer(
      bottom, p, [](const Value&) { return Value::emptySet(); },
      [](const Value&, const Value&) { return Value::set({Value::nat(0)}); },
      budget.enumeration);
}

}  // namespace dst
