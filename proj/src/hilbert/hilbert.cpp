#include "seqcm/hilbert.hpp"

#include <algorithm>

namespace seqcm {

namespace {

using Series = std::vector<BigInt>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(const Series& a, const Series& b) {
  Series out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Series mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// 1 - t^d
Series one_minus_t_pow(unsigned d) {
  Series s(d + 1);
  s[0] += 1;
  s[d] -= 1;
  trim(s);
  return s;
}

BigInt evaluate_at_one(const Series& s) {
  BigInt acc = 0;
  for (const auto& c : s) acc += c;
  return acc;
}

// Divides by (1 - t); requires s(1) = 0.
Series divide_one_minus_t(const Series& s) {
  // s = (1 - t) q  ⇒  q_i = s_0 + ... + s_i
  Series q(s.size() > 0 ? s.size() - 1 : 0);
  BigInt acc = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    acc += s[i];
    q[i] = acc;
  }
  trim(q);
  return q;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (g.support_mask() & seen) return false;
    seen |= g.support_mask();
  }
  return true;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t to_length(const BigInt& b) {
  if (b < 0) throw Error("internal: negative length");
  return b.convert_to<std::uint64_t>();
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<BigInt> numerator, int denom_power)
    : numerator_(std::move(numerator)), denom_power_(denom_power) {
  trim(numerator_);
}

HilbertSeries HilbertSeries::reduced() const {
  Series s = numerator_;
  int k = denom_power_;
  while (k > 0 && !s.empty() && evaluate_at_one(s) == 0) {
    s = divide_one_minus_t(s);
    --k;
  }
  return HilbertSeries(std::move(s), k);
}

int HilbertSeries::dimension() const {
  if (is_zero()) throw InvalidArgument("dimension of the zero module is undefined");
  return reduced().denom_power_;
}

BigInt HilbertSeries::coefficient(unsigned degree) const {
  // 1/(1-t)^v = sum_k C(k + v - 1, v - 1) t^k
  BigInt acc = 0;
  for (std::size_t i = 0; i < numerator_.size() && i <= degree; ++i) {
    const long k = static_cast<long>(degree - i);
    acc += numerator_[i] *
           (denom_power_ == 0 ? BigInt(k == 0 ? 1 : 0) : binomial(k + denom_power_ - 1, denom_power_ - 1));
  }
  return acc;
}

std::vector<BigInt> hilbert_numerator(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return {BigInt(1)};
  if (pairwise_coprime(gens)) {
    Series acc{BigInt(1)};
    for (const auto& g : gens) acc = mul(acc, one_minus_t_pow(g.degree()));
    return acc;
  }
  // pivot on the variable shared by the most generators
  const std::size_t v = ideal.ring()->num_vars();
  std::size_t pivot = 0, best = 0;
  for (std::size_t i = 0; i < v; ++i) {
    std::size_t count = static_cast<std::size_t>(
        std::count_if(gens.begin(), gens.end(), [&](const Monomial& m) { return m[i] > 0; }));
    if (count > best) {
      best = count;
      pivot = i;
    }
  }
  const Monomial x = Monomial::variable(v, pivot);
  std::vector<Monomial> with_x = gens;
  with_x.push_back(x);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g[pivot] > 0 ? g / x : g);

  Series a = hilbert_numerator(MonomialIdeal(ideal.ring(), std::move(with_x)));
  Series b = hilbert_numerator(MonomialIdeal(ideal.ring(), std::move(colon)));
  b.insert(b.begin(), BigInt(0));  // t * N(I : x)
  return add(a, b);
}

HilbertSeries hs_of_quotient(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw NotHomogeneous("Hilbert series needs homogeneous generators");
  const int v = static_cast<int>(ideal.ring()->num_vars());
  MonomialIdeal lt(ideal.ring(), ideal.leading_monomials());
  if (lt.is_unit()) return HilbertSeries({}, v);
  return HilbertSeries(hilbert_numerator(lt), v);
}

int krull_dim(const Ideal& ideal) {
  HilbertSeries hs = hs_of_quotient(ideal);
  if (hs.is_zero()) throw InvalidArgument("dimension of the zero module is undefined");
  return hs.dimension();
}

int dim_or_empty(const Ideal& ideal) {
  HilbertSeries hs = hs_of_quotient(ideal);
  return hs.is_zero() ? -1 : hs.dimension();
}

SubquotientHandle::SubquotientHandle(Ideal numerator, Ideal denominator)
    : upper_(std::move(numerator)), lower_(std::move(denominator)) {
  if (!same_ring(upper_.ring(), lower_.ring())) throw RingMismatch("subquotient");
  if (!ideal_contains(upper_, lower_))
    throw InvalidArgument("subquotient J/K needs K contained in J");
}

std::uint64_t length_of_quotient(const SubquotientHandle& h) {
  HilbertSeries top = hs_of_quotient(h.lower());
  HilbertSeries bottom = hs_of_quotient(h.upper());
  // HS(J/K) = HS(R/K) - HS(R/J), both over (1 - t)^v
  Series diff = top.numerator();
  Series neg = bottom.numerator();
  for (auto& c : neg) c = -c;
  diff = add(diff, neg);
  for (int i = 0; i < top.denom_power(); ++i) {
    if (evaluate_at_one(diff) != 0) throw NotFiniteLength("subquotient does not have finite length");
    diff = divide_one_minus_t(diff);
  }
  return to_length(evaluate_at_one(diff));
}

std::uint64_t hilbert_samuel(const Ideal& ideal, const Ideal& q, int n) {
  if (n < 0) throw InvalidArgument("Hilbert-Samuel function needs n >= 0");
  if (dim_or_empty(ideal + q) > 0)
    throw NotFiniteLength("I + q is not primary to the irrelevant ideal");
  Ideal k = ideal + ideal_power(q, n + 1);
  return length_of_quotient(SubquotientHandle(Ideal::unit(ideal.ring()), k));
}

}  // namespace seqcm
