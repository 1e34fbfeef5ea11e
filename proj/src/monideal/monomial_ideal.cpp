#include "seqcm/monomial_ideal.hpp"

#include <algorithm>

namespace seqcm {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  return MonomialOrder::grevlex().compare(a, b) > 0;
}

void split(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& leaves) {
  const auto& gens = ideal.generators();
  auto mixed = std::find_if(gens.begin(), gens.end(),
                            [](const Monomial& m) { return m.support_size() >= 2; });
  if (mixed == gens.end()) {
    leaves.push_back(ideal);
    return;
  }
  // m = u * w with u the power of the first variable occurring in m
  const Monomial& m = *mixed;
  std::size_t var = 0;
  while (m[var] == 0) ++var;
  Monomial u = Monomial::variable(m.num_vars(), var, m[var]);
  Monomial w = m / u;
  for (const Monomial& piece : {u, w}) {
    std::vector<Monomial> g = gens;
    g.push_back(piece);
    split(MonomialIdeal(ideal.ring(), std::move(g)), leaves);
  }
}

PrimaryComponent make_component(MonomialIdeal ideal) {
  VariableSet s = ideal.support();
  int dim = static_cast<int>(ideal.ring()->num_vars()) - static_cast<int>(s.size());
  return {std::move(ideal), s, dim};
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.num_vars() != ring_->num_vars()) throw InvalidArgument("monomial does not fit ring");
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const auto& g : generators) {
    if (std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); }))
      gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), grevlex_greater);
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw InvalidArgument("ideal generators must be monomials");
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_irreducible() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_pure_power(); });
}

VariableSet MonomialIdeal::support() const {
  VariableSet s;
  for (const auto& g : gens_) s.bits |= g.support_mask();
  return s;
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> polys;
  for (const auto& g : gens_) polys.push_back(Polynomial::term(ring_, {1}, g));
  return Ideal(ring_, std::move(polys));
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g = a.gens_;
  g.insert(g.end(), b.gens_.begin(), b.gens_.end());
  return MonomialIdeal(a.ring_, std::move(g));
}

MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> gens) {
  return MonomialIdeal(ring, std::vector<Monomial>(gens.begin(), gens.end()));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return MonomialIdeal(a.ring(), std::move(g));
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Monomial& m) { return a.contains(m); });
}

std::vector<PrimaryComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("unit ideal has no primary decomposition");
  std::vector<MonomialIdeal> leaves;
  split(ideal, leaves);
  // keep the inclusion-minimal leaves, once each
  std::vector<MonomialIdeal> kept;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j) {
      if (i == j || !contains(leaves[i], leaves[j])) continue;
      // leaves[j] ⊆ leaves[i]; on equality keep the first occurrence
      redundant = !(leaves[i] == leaves[j]) || j < i;
    }
    if (!redundant) kept.push_back(leaves[i]);
  }
  std::vector<PrimaryComponent> out;
  for (auto& k : kept) out.push_back(make_component(std::move(k)));
  std::sort(out.begin(), out.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
    if (a.support != b.support) return a.support < b.support;
    return std::lexicographical_compare(
        a.component.generators().begin(), a.component.generators().end(),
        b.component.generators().begin(), b.component.generators().end(), grevlex_greater);
  });
  return out;
}

std::map<VariableSet, PrimaryComponent> reduced_primary_decomposition(const MonomialIdeal& ideal) {
  std::map<VariableSet, PrimaryComponent> out;
  for (auto& c : irreducible_decomposition(ideal)) {
    auto it = out.find(c.support);
    if (it == out.end())
      out.emplace(c.support, std::move(c));
    else
      it->second.component = intersect(it->second.component, c.component);
  }
  return out;
}

int mon_dim(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("dimension of the zero module is undefined");
  const std::size_t v = ideal.ring()->num_vars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) supports.push_back(g.support_mask());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << v); ++s) {
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint32_t g) { return (g & ~s) == 0; });
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(Polynomial::term(ideal.ring(), {1}, ideal.generators()[i]));
  }
  return out + ")";
}

}  // namespace seqcm
