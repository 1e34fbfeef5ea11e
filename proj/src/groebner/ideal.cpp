#include "seqcm/ideal.hpp"

#include <algorithm>

namespace seqcm {

namespace {

thread_local EqualityAudit* active_audit = nullptr;

void require_same_ring(const Ideal& a, const Ideal& b, const char* where) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch(where);
}

std::vector<Polynomial> nonzero_grevlex(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (auto& g : gens)
    if (!g.is_zero()) out.push_back(g.with_order(MonomialOrder::grevlex()));
  return out;
}

// Ring whose variables are `ring`'s with one auxiliary variable in front.
RingPtr extended_ring(const RingPtr& ring) {
  std::vector<std::string> names{"@t"};
  names.insert(names.end(), ring->variable_names().begin(), ring->variable_names().end());
  return std::make_shared<const RingContext>(std::move(names), ring->characteristic());
}

// Re-indexes variables of f into `target`: variable i of f goes to slot perm[i].
Polynomial permuted(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> perm,
                    const MonomialOrder& ord) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < perm.size(); ++i) m.set(perm[i], t.mono[i]);
    terms.push_back({t.coef, m});
  }
  return Polynomial::from_terms(target, std::move(terms), ord);
}

void multisets(const std::vector<Polynomial>& gens, std::size_t start, int remaining,
               const Polynomial& acc, std::vector<Polynomial>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i)
    multisets(gens, i, remaining - 1, acc * gens[i], out);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(nonzero_grevlex(std::move(generators))),
      cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InvalidArgument("ideal needs a ring");
  for (const auto& g : gens_)
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal construction");
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return *it->second;
  }
  // computed outside the lock; the first finished result wins
  auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, ord));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(ord, std::move(basis));
  return *it->second;
}

void Ideal::seed_groebner_basis(const MonomialOrder& ord, std::vector<Polynomial> basis) const {
  std::lock_guard lock(cache_->mutex);
  cache_->bases.emplace(ord, std::make_shared<const std::vector<Polynomial>>(std::move(basis)));
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("normal form");
  return seqcm::normal_form(f, groebner_basis(), MonomialOrder::grevlex());
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.leading_monomial());
  return out;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator+(const Ideal& a, const Polynomial& f) {
  std::vector<Polynomial> gens = a.generators();
  gens.push_back(f);
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Polynomial& f, const Ideal& a) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& q, int n) {
  if (n < 0) throw InvalidArgument("ideal power needs n >= 0");
  if (n == 0) return Ideal::unit(q.ring());
  std::vector<Polynomial> out;
  multisets(q.generators(), 0, n, Polynomial::constant(q.ring(), 1), out);
  return Ideal(q.ring(), std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal intersection");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  const RingPtr big = extended_ring(a.ring());
  const MonomialOrder elim = MonomialOrder::block(1);
  const Polynomial t = Polynomial::variable(big, 0).with_order(elim);
  const Polynomial one_minus_t = Polynomial::constant(big, 1).with_order(elim) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.embedded(big, 1, elim));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embedded(big, 1, elim));

  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens, elim))
    if (g.leading_monomial()[0] == 0) kept.push_back(g.projected(a.ring(), 1));
  // the t-free part of a reduced elimination basis is the reduced grevlex basis
  std::sort(kept.begin(), kept.end(), [](const Polynomial& x, const Polynomial& y) {
    return MonomialOrder::grevlex().less(x.leading_monomial(), y.leading_monomial());
  });
  Ideal result(a.ring(), kept);
  result.seed_groebner_basis(MonomialOrder::grevlex(), std::move(kept));
  return result;
}

Ideal ideal_intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw InvalidArgument("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  if (!same_ring(a.ring(), f.ring())) throw RingMismatch("ideal colon");
  if (f.is_zero()) throw DivisionByZero();
  if (f.is_constant()) return a;
  Ideal meet = ideal_intersect(a, Ideal(a.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.groebner_basis()) {
    auto [q, r] = divide(g, std::span<const Polynomial>(&f, 1), MonomialOrder::grevlex());
    if (!r.is_zero()) throw Error("internal: intersection element not divisible by f");
    gens.push_back(q.front());
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal colon");
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::vector<Ideal> parts;
  for (const auto& g : b.generators()) parts.push_back(ideal_colon(a, g));
  return ideal_intersect(parts);
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "saturation");
  Ideal current = a;
  for (int i = 0; i < kSaturationIterationCap; ++i) {
    Ideal next = ideal_colon(current, b);
    if (ideal_contains(current, next)) return current;
    current = next;
  }
  throw IterationLimit("saturation did not stabilize within " +
                       std::to_string(kSaturationIterationCap) + " iterations");
}

Ideal eliminate(const Ideal& a, std::span<const std::size_t> eliminated) {
  const RingPtr& ring = a.ring();
  const std::size_t v = ring->num_vars();
  std::vector<bool> drop(v, false);
  for (std::size_t i : eliminated) {
    if (i >= v) throw InvalidArgument("eliminated variable index out of range");
    drop[i] = true;
  }
  const std::size_t k = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
  if (k == v) throw InvalidArgument("cannot eliminate every variable");
  if (k == 0) return a;

  std::vector<std::string> names;
  std::vector<std::size_t> perm(v);
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < v; ++i)
    if (drop[i]) {
      perm[i] = names.size();
      names.push_back(ring->variable_names()[i]);
    }
  for (std::size_t i = 0; i < v; ++i)
    if (!drop[i]) {
      perm[i] = names.size();
      names.push_back(ring->variable_names()[i]);
      kept_names.push_back(ring->variable_names()[i]);
    }
  const RingPtr reordered = std::make_shared<const RingContext>(names, ring->characteristic());
  const RingPtr target = std::make_shared<const RingContext>(kept_names, ring->characteristic());
  const MonomialOrder elim = MonomialOrder::block(static_cast<std::uint8_t>(k));

  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(permuted(g, reordered, perm, elim));
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens, elim)) {
    bool free = true;
    for (std::size_t i = 0; i < k; ++i) free = free && g.leading_monomial()[i] == 0;
    if (free) kept.push_back(g.projected(target, k));
  }
  return Ideal(target, std::move(kept));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal equality");
  const bool eq = a.groebner_basis() == b.groebner_basis();
  if (active_audit) active_audit->record(a, b, eq);
  return eq;
}

bool ideal_contains(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal containment");
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& g) { return a.contains(g); });
}

bool ideal_membership(const Polynomial& f, const Ideal& a) { return a.contains(f); }

std::vector<std::string> canonical_generators(const Ideal& a) {
  std::vector<std::string> out;
  for (const auto& g : a.groebner_basis()) out.push_back(to_string(g));
  return out;
}

EqualityAudit::EqualityAudit() : previous_(active_audit) { active_audit = this; }
EqualityAudit::~EqualityAudit() { active_audit = previous_; }

}  // namespace seqcm
