#include "seqcm/polynomial.hpp"

#include <algorithm>

namespace seqcm {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* where) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch(where);
}

// Merges two descending term sequences, b scaled by `scale` and shifted by `shift`.
std::vector<Term> merge_terms(const PrimeField& k, const MonomialOrder& ord,
                              std::span<const Term> a, std::span<const Term> b,
                              FieldElement scale, const Monomial* shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto b_term = [&](std::size_t idx) {
    Term t{k.mul(b[idx].coef, scale), shift ? b[idx].mono * *shift : b[idx].mono};
    return t;
  };
  while (i < a.size() && j < b.size()) {
    Term tb = b_term(j);
    auto c = ord.compare(a[i].mono, tb.mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(tb);
      ++j;
    } else {
      FieldElement s = k.add(a[i].coef, tb.coef);
      if (!s.is_zero()) out.push_back({s, a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b_term(j));
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), order_(ord) {
  if (!ring_) throw InvalidArgument("polynomial needs a ring");
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
  return term(ring, ring->field().element(c), Monomial(ring->num_vars()));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  return term(ring, {1}, Monomial::variable(ring->num_vars(), index));
}

Polynomial Polynomial::term(const RingPtr& ring, FieldElement c, const Monomial& m,
                            MonomialOrder ord) {
  if (m.num_vars() != ring->num_vars()) throw InvalidArgument("monomial does not fit ring");
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({c, m});
  return Polynomial(ring, ord, std::move(t));
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms,
                                  MonomialOrder ord) {
  const PrimeField& k = ring->field();
  for (const auto& t : terms)
    if (t.mono.num_vars() != ring->num_vars()) throw InvalidArgument("monomial does not fit ring");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return Polynomial(ring, ord, std::move(out));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

Polynomial Polynomial::with_order(const MonomialOrder& ord) const {
  if (ord == order_) return *this;
  std::vector<Term> t = terms_;
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return Polynomial(ring_, ord, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coefficient()));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef = field().mul(x.coef, c);
  return Polynomial(ring_, order_, std::move(t));
}

Polynomial Polynomial::times_term(FieldElement c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> t = terms_;
  for (auto& x : t) {
    x.coef = field().mul(x.coef, c);
    x.mono = x.mono * m;
  }
  return Polynomial(ring_, order_, std::move(t));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1).with_order(order_);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embedded(const RingPtr& target, std::size_t offset,
                                const MonomialOrder& ord) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.coef, x.mono.shifted(offset, target->num_vars())});
  return from_terms(target, std::move(t), ord);
}

Polynomial Polynomial::projected(const RingPtr& target, std::size_t offset) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < offset; ++i)
      if (x.mono[i] != 0) throw InvalidArgument("projected polynomial uses a dropped variable");
    for (std::size_t i = 0; i < target->num_vars(); ++i) m.set(i, x.mono[i + offset]);
    t.push_back({x.coef, m});
  }
  return from_terms(target, std::move(t), MonomialOrder::grevlex());
}

Polynomial Polynomial::operator-() const { return scaled(field().neg({1})); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b, "polynomial addition");
  Polynomial bb = b.with_order(a.order_);
  return Polynomial(a.ring_, a.order_,
                    merge_terms(a.field(), a.order_, a.terms_, bb.terms_, {1}, nullptr));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b, "polynomial subtraction");
  Polynomial bb = b.with_order(a.order_);
  return Polynomial(a.ring_, a.order_,
                    merge_terms(a.field(), a.order_, a.terms_, bb.terms_,
                                a.field().neg({1}), nullptr));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_, a.order_);
  std::vector<Term> t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back({a.field().mul(x.coef, y.coef), x.mono * y.mono});
  return Polynomial::from_terms(a.ring_, std::move(t), a.order_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

Polynomial sub_multiple(const Polynomial& f, FieldElement c, const Monomial& m,
                        const Polynomial& g) {
  require_same_ring(f, g, "reduction step");
  const Polynomial& gg = g.order_ == f.order_ ? g : g.with_order(f.order_);
  return Polynomial(f.ring_, f.order_,
                    merge_terms(f.field(), f.order_, f.terms_, gg.terms_, f.field().neg(c), &m));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& names = f.ring()->variable_names();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = f.field().symmetric(t.coef);
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.mono.is_one()) {
      out += std::to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.num_vars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (need_star) out += '*';
      out += names[i];
      if (e > 1) out += '^' + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

}  // namespace seqcm
