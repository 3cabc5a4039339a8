#pragma once

// The endofunctor E(a) = B⊤(id_a), E(f) = is_b⁻¹.f.is_a, the adjunction
// (Id, E, η, ε) it carries, and the action of the monoid {Eⁿ}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catsym/functor.hpp"
#include "catsym/iso.hpp"
#include "catsym/symmetry.hpp"

namespace catsym {

template <Category C>
struct EndoE {
  PscStructure<C> psc;

  const C& cat() const { return *psc.cat; }
  object_t<C> obj(const object_t<C>& a) const { return psc.concept_of(a); }
  arrow_t<C> arr(const arrow_t<C>& f) const {
    const C& c = cat();
    return c.compose(psc.iso_inv(c.cod(f)), c.compose(f, psc.iso(c.dom(f))));
  }

  Functor<C, C> as_functor() const {
    auto self = *this;
    return {psc.cat, psc.cat, [self](const object_t<C>& a) { return self.obj(a); },
            [self](const arrow_t<C>& f) { return self.arr(f); }, "E"};
  }
  NatTransf<C, C> unit() const {  // η = is⁻¹: Id -> E
    return {identity_functor(psc.cat), as_functor(), psc.iso_inv, "eta"};
  }
  NatTransf<C, C> counit() const {  // ε = is: E -> Id
    return {as_functor(), identity_functor(psc.cat), psc.iso, "epsilon"};
  }
};

// Throws std::invalid_argument when E fails a functor law.
template <Category C>
EndoE<C> build_E(PscStructure<C> psc) {
  EndoE<C> e{std::move(psc)};
  auto r = check_functor(e.as_functor());
  if (!r.ok()) throw std::invalid_argument("E is not a functor: " + r.summary());
  return e;
}

class NotACommutingTriangle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (g, h, f) with f = h.g goes to (E g, E h, E f), which commutes again.
template <Category C>
std::tuple<arrow_t<C>, arrow_t<C>, arrow_t<C>> transform_diagram(
    const EndoE<C>& e, const arrow_t<C>& g, const arrow_t<C>& h, const arrow_t<C>& f) {
  const C& c = e.cat();
  if (!(c.dom(h) == c.cod(g)) || !(c.compose(h, g) == f))
    throw NotACommutingTriangle("NotACommutingTriangle(" + c.describe(g) + "," +
                                c.describe(h) + "," + c.describe(f) + ")");
  auto g1 = e.arr(g), h1 = e.arr(h), f1 = e.arr(f);
  if (!(c.compose(h1, g1) == f1))
    throw std::logic_error("transformed triangle does not commute");
  return {g1, h1, f1};
}

// ε.η = id and η.ε = id first, then naturality of η and ε, then the
// universal-arrow law k = E(k̲).η(c) with k̲ = is_d.k unique among c -> d.
template <Category C>
Report check_internal_adjunction(const EndoE<C>& e) {
  const C& c = e.cat();
  auto eta = e.unit();
  auto eps = e.counit();
  for (const auto& a : c.objects()) {
    auto ea = e.obj(a);
    auto u = eta.at(a), v = eps.at(a);
    bool typed = c.dom(u) == a && c.cod(u) == ea && c.dom(v) == ea && c.cod(v) == a;
    if (!typed || !(c.compose(v, u) == c.identity(a)) || !(c.compose(u, v) == c.identity(ea)))
      return Report::fail("unit-counit-inverse", {{"object", c.describe(a)}});
  }
  if (auto r = check_naturality(eta); !r.ok()) return r.nested("unit-naturality");
  if (auto r = check_naturality(eps); !r.ok()) return r.nested("counit-naturality");
  for (const auto& x : c.objects())
    for (const auto& d : c.objects()) {
      auto ed = e.obj(d);
      auto candidates = c.hom(x, d);
      for (const auto& k : c.hom(x, ed)) {
        auto kbar = c.compose(e.psc.iso(d), k);
        if (!(c.compose(e.arr(kbar), eta.at(x)) == k))
          return Report::fail("universal-arrow", {{"c", c.describe(x)},
                                                  {"d", c.describe(d)},
                                                  {"k", c.describe(k)}});
        std::size_t hits = 0;
        for (const auto& u : candidates)
          if (c.compose(e.arr(u), eta.at(x)) == k) ++hits;
        if (hits != 1)
          return Report::fail("universal-uniqueness",
                              {{"c", c.describe(x)}, {"d", c.describe(d)}, {"k", c.describe(k)}},
                              std::to_string(hits) + " factorizations");
      }
    }
  return Report::pass();
}

// g_n = Eⁿ. The elements form the commutative monoid (ℕ,+); there are no
// inverses.
struct IcsElement {
  std::uint64_t power = 0;
  friend auto operator<=>(IcsElement, IcsElement) = default;
};

inline IcsElement ics_compose(IcsElement x, IcsElement y) { return {x.power + y.power}; }

template <Category C>
object_t<C> act(IcsElement x, const EndoE<C>& e, object_t<C> a) {
  for (std::uint64_t i = 0; i < x.power; ++i) a = e.obj(a);
  return a;
}

template <Category C>
arrow_t<C> act(IcsElement x, const EndoE<C>& e, arrow_t<C> f) {
  for (std::uint64_t i = 0; i < x.power; ++i) f = e.arr(f);
  return f;
}

// [t, E t, ..., Eⁿ t] with a witness per step, and the first repeat.
template <class T, class W>
struct Orbit {
  std::vector<T> elements;
  std::vector<W> witnesses;  // witnesses[i] relates elements[i] and elements[i+1]
  struct Cycle {
    std::size_t start = 0, period = 0;
  };
  std::optional<Cycle> cycle;
};

namespace detail {
template <class T, class W>
void find_cycle(Orbit<T, W>& o) {
  for (std::size_t j = 1; j < o.elements.size() && !o.cycle; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (o.elements[i] == o.elements[j]) {
        o.cycle = typename Orbit<T, W>::Cycle{i, j - i};
        break;
      }
}
}  // namespace detail

inline constexpr std::size_t default_orbit_depth = 8;

// Witness per step: η at Eⁱ(a), an isomorphism Eⁱ(a) -> Eⁱ⁺¹(a).
template <Category C>
Orbit<object_t<C>, arrow_t<C>> orbit(const EndoE<C>& e, const object_t<C>& a,
                                     std::size_t depth = default_orbit_depth) {
  Orbit<object_t<C>, arrow_t<C>> o;
  o.elements.push_back(a);
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& cur = o.elements.back();
    o.witnesses.push_back(e.psc.iso_inv(cur));
    o.elements.push_back(e.obj(cur));
  }
  detail::find_cycle(o);
  return o;
}

// Witness per step: (η(dom), η(cod)), a square Eⁱ(f) ≅ Eⁱ⁺¹(f).
template <Category C>
Orbit<arrow_t<C>, std::pair<arrow_t<C>, arrow_t<C>>> orbit(
    const EndoE<C>& e, const arrow_t<C>& f, std::size_t depth = default_orbit_depth) {
  const C& c = e.cat();
  Orbit<arrow_t<C>, std::pair<arrow_t<C>, arrow_t<C>>> o;
  o.elements.push_back(f);
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& cur = o.elements.back();
    o.witnesses.push_back({e.psc.iso_inv(c.dom(cur)), e.psc.iso_inv(c.cod(cur))});
    o.elements.push_back(e.arr(cur));
  }
  detail::find_cycle(o);
  return o;
}

}  // namespace catsym
