#include "seqcm/groebner.hpp"

#include <algorithm>
#include <optional>

namespace seqcm {

namespace {

struct LeadInfo {
  Monomial mono;
  std::uint32_t mask;
};

std::vector<LeadInfo> lead_infos(std::span<const Polynomial> basis) {
  std::vector<LeadInfo> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back({g.leading_monomial(), g.leading_monomial().support_mask()});
  return out;
}

std::optional<std::size_t> find_divisor(const std::vector<LeadInfo>& leads, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  for (std::size_t i = 0; i < leads.size(); ++i) {
    if ((leads[i].mask & ~mask) != 0) continue;
    if (leads[i].mono.divides(m)) return i;
  }
  return std::nullopt;
}

// p[from..] - c*m*g[1..], assuming c*m*LT(g) cancels p[from-1].
std::vector<Term> reduce_step(const PrimeField& k, const MonomialOrder& ord,
                              const std::vector<Term>& p, std::size_t from, FieldElement c,
                              const Monomial& m, std::span<const Term> g) {
  std::vector<Term> out;
  out.reserve(p.size() - from + g.size());
  const FieldElement neg_c = k.neg(c);
  std::size_t i = from, j = 1;
  while (i < p.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    auto cmp = ord.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({k.mul(g[j].coef, neg_c), gm});
      ++j;
    } else {
      FieldElement s = k.add(p[i].coef, k.mul(g[j].coef, neg_c));
      if (!s.is_zero()) out.push_back({s, p[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < g.size(); ++j) out.push_back({k.mul(g[j].coef, neg_c), g[j].mono * m});
  return out;
}

void require_common_ring(const Polynomial& f, std::span<const Polynomial> others,
                         const char* where) {
  for (const auto& g : others)
    if (!same_ring(f.ring(), g.ring())) throw RingMismatch(where);
}

// Full reduction of f against `basis` (already in `ord`) with known leading data.
Polynomial reduce_full(const Polynomial& f, std::span<const Polynomial> basis,
                       const std::vector<LeadInfo>& leads, const MonomialOrder& ord) {
  const PrimeField& k = f.field();
  Polynomial ff = f.with_order(ord);
  std::vector<Term> p(ff.terms().begin(), ff.terms().end());
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    auto d = find_divisor(leads, p[pos].mono);
    if (!d) {
      rem.push_back(p[pos++]);
      continue;
    }
    const Polynomial& g = basis[*d];
    FieldElement c = k.div(p[pos].coef, g.leading_coefficient());
    Monomial m = p[pos].mono / g.leading_monomial();
    p = reduce_step(k, ord, p, pos + 1, c, m, g.terms());
    pos = 0;
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(rem), ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord) : ord_(ord) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = reduce(f.with_order(ord_));
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        auto c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      Polynomial h = reduce(s_polynomial(polys_[p.i], polys_[p.j]));
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t idx : active_) minimal.push_back(polys_[idx]);
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Polynomial> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(minimal[b]);
      auto leads = lead_infos(others);
      // the head survives because the basis is minimal
      const Polynomial& g = minimal[a];
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial t = reduce_full(Polynomial::from_sorted_terms(g.ring(), std::move(tail), ord_),
                                 others, leads, ord_);
      std::vector<Term> terms{g.leading_term()};
      terms.insert(terms.end(), t.terms().begin(), t.terms().end());
      out.push_back(Polynomial::from_sorted_terms(g.ring(), std::move(terms), ord_).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord_.less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
  }

 private:
  Polynomial reduce(const Polynomial& f) const {
    return reduce_full(f, active_basis_, active_leads_, ord_);
  }

  // Gebauer-Moeller update for a new basis element h.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g : active_)
      candidates.push_back({g, hi, lcm(polys_[g].leading_monomial(), lh)});

    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = candidates.back();
      candidates.pop_back();
      const bool is_coprime = coprime(polys_[p.i].leading_monomial(), lh);
      auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      if (is_coprime || (std::none_of(candidates.begin(), candidates.end(), divides_p) &&
                         std::none_of(kept.begin(), kept.end(), divides_p)))
        kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool prunable = lh.divides(p.lcm) &&
                            lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
                            lcm(polys_[p.j].leading_monomial(), lh) != p.lcm;
      if (!prunable) next.push_back(p);
    }
    for (const auto& p : kept)
      if (!coprime(polys_[p.i].leading_monomial(), lh)) next.push_back(p);
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].leading_monomial())) active.push_back(g);
    active.push_back(hi);
    active_ = std::move(active);
    active_basis_.clear();
    for (std::size_t g : active_) active_basis_.push_back(polys_[g]);
    active_leads_ = lead_infos(active_basis_);
  }

  MonomialOrder ord_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<Polynomial> active_basis_;
  std::vector<LeadInfo> active_leads_;
  std::vector<Pair> pairs_;
};

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord) {
  if (divisors.empty()) throw InvalidArgument("division needs at least one divisor");
  require_common_ring(f, divisors, "division");
  const PrimeField& k = f.field();
  std::vector<Polynomial> gs;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw DivisionByZero();
    gs.push_back(g.with_order(ord));
  }
  auto leads = lead_infos(gs);

  std::vector<std::vector<Term>> quotient_terms(gs.size());
  Polynomial ff = f.with_order(ord);
  std::vector<Term> p(ff.terms().begin(), ff.terms().end());
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    auto d = find_divisor(leads, p[pos].mono);
    if (!d) {
      rem.push_back(p[pos++]);
      continue;
    }
    const Polynomial& g = gs[*d];
    FieldElement c = k.div(p[pos].coef, g.leading_coefficient());
    Monomial m = p[pos].mono / g.leading_monomial();
    quotient_terms[*d].push_back({c, m});
    p = reduce_step(k, ord, p, pos + 1, c, m, g.terms());
    pos = 0;
  }
  DivisionResult out{{}, Polynomial::from_sorted_terms(f.ring(), std::move(rem), ord)};
  for (auto& q : quotient_terms)
    out.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(q), ord));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
  require_common_ring(f, basis, "normal form");
  if (basis.empty()) return f.with_order(ord);
  return reduce_full(f, basis, lead_infos(basis), ord);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of zero");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const PrimeField& k = f.field();
  Polynomial a = f.times_term(k.inv(f.leading_coefficient()), l / f.leading_monomial());
  return sub_multiple(a, k.inv(g.leading_coefficient()), l / g.leading_monomial(), g);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  if (gens.empty()) return {};
  require_common_ring(gens.front(), gens, "Groebner basis");
  Buchberger engine(ord);
  // low degree first keeps the intermediate basis small
  std::vector<Polynomial> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g.with_order(ord));
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  for (const auto& g : sorted) engine.add_generator(g);
  engine.run();
  return engine.reduced_basis();
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  std::vector<Polynomial> gs;
  for (const auto& g : basis) gs.push_back(g.with_order(ord));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!normal_form(s_polynomial(gs[i], gs[j]), gs, ord).is_zero()) return false;
  return true;
}

}  // namespace seqcm
