/*
   Copyright 2026 The quadcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quadcert/groebner.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace quadcert {

// ------------------------------------------------------------- division

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using TermMap = std::map<Monomial, Rational, Descending>;

void subtract_multiple(TermMap& p, const Polynomial& g, const Monomial& m, const Rational& c) {
  for (const auto& t : g.terms()) {
    const Monomial mm = m * t.monomial;
    auto [it, inserted] = p.try_emplace(mm, 0);
    it->second -= c * t.coeff;
    if (it->second == 0) p.erase(it);
  }
}

void check_same_ring(const Polynomial& f, std::span<const Polynomial> gs) {
  for (const auto& g : gs)
    if (!(g.vars() == f.vars())) throw std::invalid_argument("polynomials over different variable sets");
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  check_same_ring(f, divisors);
  DivisionResult out;
  out.remainder = Polynomial(f.vars());
  std::vector<std::vector<Polynomial::Term>> quotient_terms(divisors.size());
  std::vector<std::vector<Polynomial::Term>> remainder_terms(1);
  std::vector<Polynomial::Term> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    leads.push_back(g.leading_term(order));
  }

  TermMap p(Descending{&order});
  for (const auto& t : f.terms()) p.emplace(t.monomial, t.coeff);
  while (!p.empty()) {
    const auto lead = *p.begin();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].monomial.divides(lead.first)) continue;
      const Monomial q = lead.first / leads[i].monomial;
      const Rational c = lead.second / leads[i].coeff;
      quotient_terms[i].push_back({q, c});
      subtract_multiple(p, divisors[i], q, c);
      divided = true;
      break;
    }
    if (!divided) {
      remainder_terms[0].push_back({lead.first, lead.second});
      p.erase(p.begin());
    }
  }
  for (auto& q : quotient_terms) out.quotients.push_back(Polynomial::from_terms(f.vars(), std::move(q)));
  out.remainder = Polynomial::from_terms(f.vars(), std::move(remainder_terms[0]));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  return divide(f, divisors, order).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (!(f.vars() == g.vars())) throw std::invalid_argument("polynomials over different variable sets");
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  return Polynomial::monomial(f.vars(), l / lf.monomial, 1 / lf.coeff) * f -
         Polynomial::monomial(g.vars(), l / lg.monomial, 1 / lg.coeff) * g;
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

// --------------------------------------------------------------- engine

namespace {

// Integer polynomial sorted descending under the engine's order.
struct IPoly {
  std::vector<Monomial> mons;
  std::vector<Integer> coefs;
  unsigned sugar = 0;

  std::size_t size() const { return mons.size(); }
  bool empty() const { return mons.empty(); }
};

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p.coefs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.coefs.front() < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
  std::size_t serial;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const BuchbergerOptions& options, BuchbergerStats& stats)
      : order_(order), options_(options), stats_(stats) {}

  IPoly import(const Polynomial& p) const {
    IPoly out;
    Integer den = 1;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& t : p.sorted_terms(order_)) {
      out.mons.push_back(t.monomial);
      Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
      out.coefs.push_back(std::move(c));
    }
    out.sugar = p.is_zero() ? 0 : static_cast<unsigned>(p.total_degree());
    make_primitive(out);
    return out;
  }

  Polynomial export_monic(const IPoly& p, const VarSet& vars) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    const Rational inv(Integer(1), p.coefs.front());
    for (std::size_t k = 0; k < p.size(); ++k) {
      Rational c(p.coefs[k]);
      c *= inv;
      terms.push_back({p.mons[k], std::move(c)});
    }
    return Polynomial::from_terms(vars, std::move(terms));
  }

  // Returns false once the ideal is known to contain a nonzero constant.
  bool add_input(const IPoly& f) {
    if (f.empty()) return true;
    IPoly h = reduce(f, kNone);
    if (h.empty()) return true;
    if (h.mons.front().is_one()) return false;
    insert(std::move(h));
    return true;
  }

  bool run() {
    check_deadline();
    while (!pairs_.empty()) {
      check_deadline();
      const Pair p = take_next();
      ++stats_.pairs_reduced;
      IPoly h = reduce(s_poly(p), kNone);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.mons.front().is_one()) return false;
      insert(std::move(h));
    }
    return true;
  }

  std::vector<IPoly> reduced_basis() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) live.push_back(k);
    std::vector<IPoly> out;
    out.reserve(live.size());
    for (std::size_t k : live) {
      // Leading monomials are pairwise non-dividing, so only the tail moves.
      out.push_back(reduce(basis_[k], k));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& x, const IPoly& y) { return order_.less(x.mons.front(), y.mons.front()); });
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void check_deadline() const {
    if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) throw GroebnerTimeout();
  }

  // a * mf * f[fs..] - b * mg * g[gs..]
  IPoly combine(const IPoly& f, std::size_t fs, const Integer& a, const Monomial* mf,
                const IPoly& g, std::size_t gs, const Integer& b, const Monomial& mg) const {
    IPoly out;
    out.mons.reserve(f.size() - fs + g.size() - gs);
    out.coefs.reserve(f.size() - fs + g.size() - gs);
    const bool scale_f = a != 1;
    std::size_t i = fs, j = gs;
    Monomial fm, gm;
    if (i < f.size()) fm = mf ? *mf * f.mons[i] : f.mons[i];
    if (j < g.size()) gm = mg * g.mons[j];
    while (i < f.size() || j < g.size()) {
      int c;
      if (i == f.size()) c = -1;
      else if (j == g.size()) c = 1;
      else c = order_.compare(fm, gm);
      if (c > 0) {
        out.mons.push_back(fm);
        if (scale_f) out.coefs.emplace_back(a * f.coefs[i]);
        else out.coefs.push_back(f.coefs[i]);
        if (++i < f.size()) fm = mf ? *mf * f.mons[i] : f.mons[i];
      } else if (c < 0) {
        out.mons.push_back(gm);
        Integer v;
        mpz_mul(v.get_mpz_t(), b.get_mpz_t(), g.coefs[j].get_mpz_t());
        mpz_neg(v.get_mpz_t(), v.get_mpz_t());
        out.coefs.push_back(std::move(v));
        if (++j < g.size()) gm = mg * g.mons[j];
      } else {
        Integer v;
        mpz_mul(v.get_mpz_t(), a.get_mpz_t(), f.coefs[i].get_mpz_t());
        mpz_submul(v.get_mpz_t(), b.get_mpz_t(), g.coefs[j].get_mpz_t());
        if (v != 0) {
          out.mons.push_back(fm);
          out.coefs.push_back(std::move(v));
        }
        if (++i < f.size()) fm = mf ? *mf * f.mons[i] : f.mons[i];
        if (++j < g.size()) gm = mg * g.mons[j];
      }
    }
    return out;
  }

  // Index of the active element (other than `skip`) with the fewest terms
  // whose leading monomial divides t, or kNone.
  std::size_t find_divisor(const Monomial& t, std::size_t skip) const {
    const std::uint32_t mask = t.support();
    std::size_t best = kNone;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k] || k == skip || (lead_mask_[k] & ~mask)) continue;
      if (!basis_[k].mons.front().divides(t)) continue;
      if (best == kNone || basis_[k].size() < basis_[best].size()) best = k;
    }
    return best;
  }

  // Full reduction modulo the active basis (excluding `skip`); the result is
  // primitive with a positive leading coefficient.
  IPoly reduce(IPoly h, std::size_t skip) {
    IPoly r;
    std::size_t head = 0;
    std::size_t steps = 0;
    while (head < h.size()) {
      const std::size_t k = find_divisor(h.mons[head], skip);
      if (k == kNone) {
        r.mons.push_back(h.mons[head]);
        r.coefs.push_back(std::move(h.coefs[head]));
        ++head;
        continue;
      }
      const IPoly& g = basis_[k];
      const Monomial q = h.mons[head] / g.mons.front();
      Integer c, a, b;
      mpz_gcd(c.get_mpz_t(), h.coefs[head].get_mpz_t(), g.coefs.front().get_mpz_t());
      mpz_divexact(a.get_mpz_t(), g.coefs.front().get_mpz_t(), c.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), h.coefs[head].get_mpz_t(), c.get_mpz_t());
      const unsigned sugar = std::max(h.sugar, g.sugar + q.degree);
      h = combine(h, head + 1, a, nullptr, g, 1, b, q);
      h.sugar = sugar;
      head = 0;
      if (a != 1)
        for (auto& x : r.coefs) x *= a;
      ++stats_.reduction_steps;
      if (++steps % 32 == 0) {
        check_deadline();
        remove_joint_content(r, h);
      }
    }
    r.sugar = h.sugar;
    make_primitive(r);
    return r;
  }

  static void remove_joint_content(IPoly& r, IPoly& h) {
    Integer g = 0;
    for (const auto* p : {&r, &h})
      for (const auto& c : p->coefs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
      }
    if (g == 0) return;
    for (auto* p : {&r, &h})
      for (auto& c : p->coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  IPoly s_poly(const Pair& p) const {
    const IPoly& f = basis_[p.i];
    const IPoly& g = basis_[p.j];
    const Monomial mf = p.lcm / f.mons.front();
    const Monomial mg = p.lcm / g.mons.front();
    Integer c, a, b;
    mpz_gcd(c.get_mpz_t(), f.coefs.front().get_mpz_t(), g.coefs.front().get_mpz_t());
    mpz_divexact(a.get_mpz_t(), g.coefs.front().get_mpz_t(), c.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), f.coefs.front().get_mpz_t(), c.get_mpz_t());
    IPoly s = combine(f, 1, a, &mf, g, 1, b, mg);
    s.sugar = p.sugar;
    return s;
  }

  Pair take_next() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& x = pairs_[k];
      const Pair& y = pairs_[best];
      bool better = false;
      switch (options_.selection) {
        case PairSelection::normal: {
          const int c = order_.compare(x.lcm, y.lcm);
          better = c < 0 || (c == 0 && (x.sugar < y.sugar || (x.sugar == y.sugar && x.serial < y.serial)));
          break;
        }
        case PairSelection::sugar: {
          if (x.sugar != y.sugar) {
            better = x.sugar < y.sugar;
          } else {
            const int c = order_.compare(x.lcm, y.lcm);
            better = c < 0 || (c == 0 && x.serial < y.serial);
          }
          break;
        }
        case PairSelection::fifo:
          better = x.serial < y.serial;
          break;
      }
      if (better) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const IPoly& f = basis_[i];
    const IPoly& g = basis_[j];
    return std::max(f.sugar - f.mons.front().degree, g.sugar - g.mons.front().degree) + l.degree;
  }

  // Gebauer-Moeller update for a new element h.
  void insert(IPoly h) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    lead_mask_.push_back(basis_.back().mons.front().support());
    active_.push_back(true);
    const Monomial lh = basis_[hi].mons.front();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cand;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) {
        const Monomial& lg = basis_[k].mons.front();
        cand.push_back({k, lcm(lg, lh), lg.coprime(lh)});
      }
    stats_.pairs_created += cand.size();

    // Chain criterion among the new pairs: (g1, h) is dropped when another
    // new pair still pending, or one already kept, has an lcm dividing
    // lcm(g1, h). Pairs with coprime leading monomials are kept here and
    // removed by the product criterion below.
    std::vector<bool> pending(cand.size(), true);
    std::vector<Candidate> kept;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      pending[c] = false;
      bool keep = true;
      if (!cand[c].coprime) {
        for (std::size_t o = 0; o < cand.size() && keep; ++o)
          if (pending[o] && cand[o].lcm.divides(cand[c].lcm)) keep = false;
        for (std::size_t o = 0; o < kept.size() && keep; ++o)
          if (kept[o].lcm.divides(cand[c].lcm)) keep = false;
      }
      if (keep) kept.push_back(cand[c]);
      else ++stats_.chain_criterion;
    }

    // Chain criterion on existing pairs.
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lcm(basis_[p.i].mons.front(), lh) == p.lcm) &&
          !(lcm(basis_[p.j].mons.front(), lh) == p.lcm)) {
        ++stats_.chain_criterion;
        continue;
      }
      next.push_back(std::move(p));
    }
    // Product criterion on the surviving new pairs.
    for (const auto& c : kept) {
      if (c.coprime) {
        ++stats_.product_criterion;
        continue;
      }
      next.push_back({c.g, hi, c.lcm, pair_sugar(c.g, hi, c.lcm), serial_++});
    }
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(basis_[k].mons.front())) active_[k] = false;
    std::size_t live = 0;
    for (bool a : active_) live += a;
    stats_.max_basis = std::max(stats_.max_basis, live);
  }

  MonomialOrder order_;
  const BuchbergerOptions& options_;
  BuchbergerStats& stats_;
  std::vector<IPoly> basis_;
  std::vector<std::uint32_t> lead_mask_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& options, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  if (gens.empty()) return out;
  const VarSet vars = gens.front().vars();
  for (const auto& g : gens)
    if (!(g.vars() == vars)) throw std::invalid_argument("polynomials over different variable sets");
  if (order.kind() == MonomialOrder::Kind::block && order.split() > vars.size())
    throw std::invalid_argument("block order split exceeds number of variables");

  Engine engine(order, options, st);
  bool proper = true;
  for (const auto& g : gens) {
    if (!(proper = engine.add_input(engine.import(g)))) break;
  }
  if (proper) proper = engine.run();
  if (!proper) {
    out.generators.push_back(Polynomial::constant(vars, 1));
    return out;
  }
  for (const auto& p : engine.reduced_basis()) out.generators.push_back(engine.export_monic(p, vars));
  return out;
}

std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const std::string> drop_vars,
                                          EliminationOrder kind, const BuchbergerOptions& options,
                                          BuchbergerStats* stats) {
  if (gens.empty()) return {};
  const VarSet& vars = gens.front().vars();
  std::vector<std::string> names;
  for (const auto& d : drop_vars) names.push_back(vars.name(vars.require(d)));
  for (const auto& n : vars.names())
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  const VarSet permuted(names);
  const std::size_t k = drop_vars.size();

  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.embed(permuted));
  const MonomialOrder order = kind == EliminationOrder::lex ? MonomialOrder::lex() : MonomialOrder::block(k);
  const GroebnerBasis gb = buchberger(moved, order, options, stats);

  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) {
    const bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Polynomial::Term& t) {
      for (std::size_t i = 0; i < k; ++i)
        if (t.monomial[i]) return false;
      return true;
    });
    if (free) out.push_back(g.embed(vars));
  }
  return out;
}

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> gens, const MonomialOrder& order,
                      const BuchbergerOptions& options) {
  check_same_ring(f, gens);
  if (f.is_zero()) return true;
  const GroebnerBasis gb = buchberger(gens, order, options);
  if (gb.generators.empty()) return false;
  return normal_form(f, gb.generators, order).is_zero();
}

bool radical_membership(const Polynomial& f, std::span<const Polynomial> gens, const MonomialOrder& order,
                        const BuchbergerOptions& options, BuchbergerStats* stats) {
  check_same_ring(f, gens);
  const VarSet extended = f.vars().with_appended(f.vars().fresh_name("y"));
  std::vector<Polynomial> aug;
  aug.reserve(gens.size() + 1);
  for (const auto& g : gens) aug.push_back(g.embed(extended));
  const Polynomial y = Polynomial::variable(extended, extended.size() - 1);
  aug.push_back(Polynomial::constant(extended, 1) - y * f.embed(extended));
  return buchberger(aug, order, options, stats).is_unit();
}

}  // namespace quadcert
