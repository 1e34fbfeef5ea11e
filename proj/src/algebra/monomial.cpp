#include "seqcm/monomial.hpp"

#include <algorithm>
#include <limits>

namespace seqcm {

namespace {

void check_num_vars(std::size_t n) {
  if (n == 0 || n > kMaxVars)
    throw InvalidArgument("number of variables must be in [1, " +
                          std::to_string(kMaxVars) + "]");
}

Monomial::Exponent checked_exponent(long e) {
  if (e < 0 || e > std::numeric_limits<Monomial::Exponent>::max())
    throw InvalidArgument("exponent out of range");
  return static_cast<Monomial::Exponent>(e);
}

// Reverse-lex tie break over [first, last): the monomial with the smaller
// exponent in the last differing variable is the larger one.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t first,
                                 std::size_t last) {
  for (std::size_t i = last; i-- > first;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) : num_vars_(static_cast<std::uint8_t>(num_vars)) {
  check_num_vars(num_vars);
}

Monomial::Monomial(std::size_t num_vars, std::initializer_list<int> exponents)
    : Monomial(num_vars, std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::size_t num_vars, std::span<const int> exponents) : Monomial(num_vars) {
  if (exponents.size() != num_vars)
    throw InvalidArgument("exponent vector length does not match number of variables");
  for (std::size_t i = 0; i < num_vars; ++i) {
    exps_[i] = checked_exponent(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  Monomial m(num_vars);
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  degree_ -= exps_[i];
  exps_[i] = checked_exponent(e);
  degree_ += exps_[i];
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.begin() + num_vars_, [](Exponent e) { return e != 0; }));
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (exps_[i] != 0) mask |= 1u << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < num_vars_; ++i)
    r.exps_[i] = checked_exponent(static_cast<long>(exps_[i]) + o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < num_vars_; ++i)
    r.exps_[i] = checked_exponent(static_cast<long>(exps_[i]) - o.exps_[i]);
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.num_vars_; ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::shifted(std::size_t offset, std::size_t new_num_vars) const {
  Monomial r(new_num_vars);
  for (std::size_t i = 0; i < num_vars_; ++i) r.exps_[i + offset] = exps_[i];
  r.degree_ = degree_;
  return r;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.num_vars();
  switch (kind) {
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, 0, n);
    case Kind::block: {
      const std::size_t k = std::min<std::size_t>(split, n);
      std::uint32_t da = 0, db = 0;
      for (std::size_t i = 0; i < k; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      if (auto c = revlex_tail(a, b, 0, k); c != 0) return c;
      if (a.degree() - da != b.degree() - db) return (a.degree() - da) <=> (b.degree() - db);
      return revlex_tail(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const MonomialOrder& ord) {
  if (a.num_vars() != b.num_vars())
    throw InvalidArgument("monomials belong to rings of different dimension");
  return ord.compare(a, b);
}

}  // namespace seqcm
