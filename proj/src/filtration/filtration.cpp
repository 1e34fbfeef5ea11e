#include "seqcm/filtration.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace seqcm {

namespace {

void monomials_rec(std::size_t v, std::size_t idx, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
  if (idx + 1 == v) {
    cur.set(idx, static_cast<std::uint16_t>(left));
    out.push_back(cur);
    cur.set(idx, 0);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur.set(idx, static_cast<std::uint16_t>(e));
    monomials_rec(v, idx + 1, left - e, cur, out);
  }
  cur.set(idx, 0);
}

std::vector<Monomial> monomials_of_degree(std::size_t v, unsigned degree) {
  std::vector<Monomial> out;
  Monomial cur(v);
  monomials_rec(v, 0, degree, cur, out);
  return out;
}

MonomialIdeal intersect_all(const RingPtr& ring, const std::vector<const MonomialIdeal*>& parts) {
  MonomialIdeal acc(ring, {Monomial(ring->num_vars())});  // unit
  for (const auto* p : parts) acc = intersect(acc, *p);
  return acc;
}

// Degree-`degree` monomials lying in the monomial ideal generated by `gens`.
std::vector<Monomial> ideal_monomials_of_degree(const MonomialIdeal& gens, unsigned degree) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(gens.ring()->num_vars(), degree))
    if (gens.contains(m)) out.push_back(m);
  return out;
}

Polynomial random_combination(const RingPtr& ring, const std::vector<Monomial>& monos, std::mt19937_64& rng) {
  std::vector<Term> terms;
  const std::uint64_t p = ring->field().characteristic();
  for (const auto& m : monos) terms.push_back({FieldElement{static_cast<std::uint32_t>(rng() % p)}, m});
  return Polynomial::from_terms(ring, std::move(terms));
}

// Parameter block index i with d_i < j ≤ d_{i+1} (j is 1-based).
std::size_t block_of(const DimensionFiltration& f, std::size_t j) {
  for (std::size_t i = 0; i + 1 < f.levels.size(); ++i)
    if (static_cast<int>(j) > f.d(i) && static_cast<int>(j) <= f.d(i + 1)) return i;
  throw InvalidArgument("parameter index outside 1..d");
}

}  // namespace

Ideal span(const RingPtr& ring, const std::vector<Polynomial>& gens) { return Ideal(ring, gens); }

std::string describe(const std::vector<Polynomial>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(xs[i]);
  }
  return out + ")";
}

DimensionFiltration dimension_filtration(const MonomialIdeal& mi) {
  if (mi.is_unit()) throw InvalidArgument("dimension filtration of the zero module is undefined");
  const RingPtr& ring = mi.ring();
  const auto primary = reduced_primary_decomposition(mi);

  std::set<int> positive;
  bool has_irrelevant = false;
  for (const auto& [support, comp] : primary) {
    if (comp.dim == 0)
      has_irrelevant = true;
    else
      positive.insert(comp.dim);
  }
  std::vector<int> dims;
  dims.push_back(0);  // level 0, possibly empty
  dims.insert(dims.end(), positive.begin(), positive.end());
  const bool level0_empty = !has_irrelevant;
  // a zero-dimensional module is all H⁰: a single level J_0 = R
  if (positive.empty()) dims = {0};

  auto components_where = [&](auto pred) {
    std::vector<const MonomialIdeal*> parts;
    for (const auto& [support, comp] : primary)
      if (pred(comp.dim)) parts.push_back(&comp.component);
    return parts;
  };

  DimensionFiltration f{mi, mi.to_ideal(), {}, {}};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    MonomialIdeal j = i + 1 < dims.size()
                          ? intersect_all(ring, components_where([&](int d) { return d >= dims[i + 1]; }))
                          : MonomialIdeal(ring, {Monomial(ring->num_vars())});
    const bool empty = (i == 0 && level0_empty && !positive.empty());
    f.levels.push_back({j.to_ideal(), dims[i], empty});

    if (empty)
      f.aux.n.push_back(Ideal::unit(ring));
    else
      f.aux.n.push_back(intersect_all(ring, components_where([&](int d) { return d <= dims[i]; })).to_ideal());
  }
  for (const auto& [support, comp] : primary) f.aux.component.emplace(support, comp.component.to_ideal());

  // invariants
  if (!ideal_contains(f.J(0), f.ideal)) throw Error("internal: I not contained in J_0");
  for (std::size_t i = 1; i < f.levels.size(); ++i)
    if (!ideal_contains(f.J(i), f.J(i - 1))) throw Error("internal: filtration is not increasing");
  if (!ideal_equal(f.J(0), ideal_saturation(f.ideal, Ideal::maximal(ring))))
    throw Error("internal: J_0 differs from the saturation");
  return f;
}

bool is_sop(const Ideal& ideal, const std::vector<Polynomial>& xs) {
  const int d = krull_dim(ideal);
  if (static_cast<int>(xs.size()) != d) throw InvalidArgument("system of parameters has the wrong length");
  Ideal acc = ideal;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    acc = acc + xs[j];
    if (dim_or_empty(acc) != d - static_cast<int>(j) - 1) return false;
  }
  return true;
}

bool is_good_sop(const DimensionFiltration& f, const std::vector<Polynomial>& xs) {
  if (!is_sop(f.ideal, xs)) return false;
  for (std::size_t i = 0; i + 1 < f.levels.size(); ++i) {
    Ideal tail = f.ideal;
    for (std::size_t j = static_cast<std::size_t>(f.d(i)); j < xs.size(); ++j) tail = tail + xs[j];
    if (!ideal_equal(ideal_intersect(f.J(i), tail), f.ideal)) return false;
  }
  return true;
}

SOP find_good_sop(const DimensionFiltration& f, int attempts, std::uint64_t seed) {
  if (attempts < 1) throw InvalidArgument("attempts must be at least 1");
  const RingPtr& ring = f.ideal.ring();
  const std::size_t d = static_cast<std::size_t>(f.dim());
  std::mt19937_64 rng(seed);

  std::vector<Polynomial> xs(d, Polynomial(ring, MonomialOrder::grevlex()));
  std::vector<int> degrees(d, 0);
  Ideal tail = f.ideal;  // I + (x_{j+1}, ..., x_d)
  for (std::size_t j = d; j >= 1; --j) {
    const std::size_t block = block_of(f, j);
    const Ideal& n = f.aux.n[block];
    const MonomialIdeal source =
        n.is_unit() ? MonomialIdeal::from_ideal(Ideal::maximal(ring)) : MonomialIdeal::from_ideal(n);
    unsigned lo = ~0u, hi = 0;
    for (const auto& g : source.generators()) {
      lo = std::min(lo, g.degree());
      hi = std::max(hi, g.degree());
    }
    const int target = static_cast<int>(j) - 1;
    std::string last = "none";
    bool found = false;
    for (int a = 0; a < attempts && !found; ++a) {
      const unsigned degree = lo + std::min(static_cast<unsigned>(a / 4), hi - lo);
      Polynomial x = random_combination(ring, ideal_monomials_of_degree(source, degree), rng);
      if (x.is_zero()) continue;
      Ideal next = tail + x;
      if (dim_or_empty(next) == target) {
        xs[j - 1] = x;
        degrees[j - 1] = static_cast<int>(degree);
        tail = next;
        found = true;
      } else {
        last = to_string(x);
      }
    }
    if (!found)
      throw SearchFailure("no parameter element found for position " + std::to_string(j), last);
  }

  SOP sop{xs, false, false, degrees};
  sop.is_sop = is_sop(f.ideal, xs);
  sop.is_good = sop.is_sop && is_good_sop(f, xs);
  if (!sop.is_good) throw SearchFailure("constructed sequence failed its certificates", describe(xs));
  return sop;
}

CheckReport verify_parameter_annihilators(const DimensionFiltration& f, const std::vector<Polynomial>& xs) {
  CheckReport report{"annihilators of parameters", {}};
  std::vector<Ideal> colons;
  for (std::size_t j = 1; j <= xs.size(); ++j) {
    const std::size_t i = block_of(f, j);
    Ideal c = ideal_colon(f.ideal, xs[j - 1]);
    report.add("(I : x_" + std::to_string(j) + ") = J_" + std::to_string(i), ideal_equal(c, f.J(i)));
    colons.push_back(std::move(c));
  }
  for (std::size_t j = 1; j < colons.size(); ++j)
    report.add("(I : x_" + std::to_string(j) + ") in (I : x_" + std::to_string(j + 1) + ")",
               ideal_contains(colons[j], colons[j - 1]));
  return report;
}

}  // namespace seqcm
