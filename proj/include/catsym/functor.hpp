#pragma once

// Functors and natural transformations between Category models, with
// exhaustive law checks over the source universe.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catsym/category.hpp"
#include "catsym/report.hpp"

namespace catsym {

template <Category S, Category T>
struct Functor {
  std::shared_ptr<const S> source;
  std::shared_ptr<const T> target;
  std::function<object_t<T>(const object_t<S>&)> on_object;
  std::function<arrow_t<T>(const arrow_t<S>&)> on_arrow;
  std::string name;

  object_t<T> obj(const object_t<S>& a) const { return on_object(a); }
  arrow_t<T> arr(const arrow_t<S>& f) const { return on_arrow(f); }
};

template <Category S, Category T>
struct NatTransf {
  Functor<S, T> from;
  Functor<S, T> to;
  std::function<arrow_t<T>(const object_t<S>&)> component;
  std::string name;

  arrow_t<T> at(const object_t<S>& a) const { return component(a); }
};

template <Category C>
Functor<C, C> identity_functor(std::shared_ptr<const C> c) {
  return {c, c, [](const object_t<C>& a) { return a; },
          [](const arrow_t<C>& f) { return f; }, "Id"};
}

// G . F
template <Category S, Category M, Category T>
Functor<S, T> compose(const Functor<M, T>& g, const Functor<S, M>& f) {
  return {f.source, g.target,
          [g, f](const object_t<S>& a) { return g.obj(f.obj(a)); },
          [g, f](const arrow_t<S>& x) { return g.arr(f.arr(x)); },
          g.name + "." + f.name};
}

// Table-backed functor between finite categories; maps are indexed by id.
inline Functor<FiniteCategory, FiniteCategory> make_table_functor(
    std::shared_ptr<const FiniteCategory> source,
    std::shared_ptr<const FiniteCategory> target, std::vector<ObjId> obj_map,
    std::vector<ArrId> arr_map, std::string name = "F") {
  if (obj_map.size() != source->object_count() ||
      arr_map.size() != source->arrow_count())
    throw std::invalid_argument("functor table is not total on the source");
  for (auto a : obj_map)
    if (a.index() >= target->object_count())
      throw std::invalid_argument("functor maps to a missing object");
  for (auto f : arr_map)
    if (f.index() >= target->arrow_count())
      throw std::invalid_argument("functor maps to a missing arrow");
  return {std::move(source), std::move(target),
          [m = std::move(obj_map)](ObjId a) { return m[a.index()]; },
          [m = std::move(arr_map)](ArrId f) { return m[f.index()]; },
          std::move(name)};
}

// Typing, identities, then composition; the first violation is reported.
template <Category S, Category T>
Report check_functor(const Functor<S, T>& F) {
  const S& src = *F.source;
  const T& dst = *F.target;
  for (const auto& f : src.arrows()) {
    auto Ff = F.arr(f);
    if (!(dst.dom(Ff) == F.obj(src.dom(f))) || !(dst.cod(Ff) == F.obj(src.cod(f))))
      return Report::fail("typing", {{"arrow", src.describe(f)},
                                     {"image", dst.describe(Ff)}});
  }
  for (const auto& a : src.objects()) {
    if (!(F.arr(src.identity(a)) == dst.identity(F.obj(a))))
      return Report::fail("identity", {{"object", src.describe(a)}});
  }
  for (const auto& f : src.arrows())
    for (const auto& g : src.arrows_from(src.cod(f))) {
      if (!(F.arr(src.compose(g, f)) == dst.compose(F.arr(g), F.arr(f))))
        return Report::fail("composition", {{"g", src.describe(g)},
                                            {"f", src.describe(f)}});
    }
  return Report::pass();
}

// Component typing, then G(f) . t(X) == t(Y) . F(f) for every f: X -> Y.
template <Category S, Category T>
Report check_naturality(const NatTransf<S, T>& t) {
  const S& src = *t.from.source;
  const T& dst = *t.from.target;
  for (const auto& x : src.objects()) {
    auto c = t.at(x);
    if (!(dst.dom(c) == t.from.obj(x)) || !(dst.cod(c) == t.to.obj(x)))
      return Report::fail("component-typing", {{"object", src.describe(x)},
                                               {"component", dst.describe(c)}});
  }
  for (const auto& f : src.arrows()) {
    auto x = src.dom(f), y = src.cod(f);
    auto lhs = dst.compose(t.to.arr(f), t.at(x));
    auto rhs = dst.compose(t.at(y), t.from.arr(f));
    if (!(lhs == rhs))
      return Report::fail("naturality", {{"f", src.describe(f)},
                                         {"X", src.describe(x)},
                                         {"Y", src.describe(y)},
                                         {"G(f).t(X)", dst.describe(lhs)},
                                         {"t(Y).F(f)", dst.describe(rhs)}});
  }
  return Report::pass();
}

// beta . alpha, componentwise.
template <Category S, Category T>
NatTransf<S, T> vertical(const NatTransf<S, T>& beta, const NatTransf<S, T>& alpha) {
  auto target = alpha.from.target;
  return {alpha.from, beta.to,
          [beta, alpha, target](const object_t<S>& x) {
            return target->compose(beta.at(x), alpha.at(x));
          },
          beta.name + "*" + alpha.name};
}

template <Category S, Category T>
NatTransf<S, T> identity_transformation(const Functor<S, T>& F) {
  auto target = F.target;
  return {F, F,
          [F, target](const object_t<S>& x) { return target->identity(F.obj(x)); },
          "1_" + F.name};
}

// Componentwise equality of two functors over the source universe.
template <Category S, Category T>
Report functors_equal(const Functor<S, T>& F, const Functor<S, T>& G) {
  const S& src = *F.source;
  for (const auto& a : src.objects())
    if (!(F.obj(a) == G.obj(a)))
      return Report::fail("object-mismatch", {{"object", src.describe(a)}});
  for (const auto& f : src.arrows())
    if (!(F.arr(f) == G.arr(f)))
      return Report::fail("arrow-mismatch", {{"arrow", src.describe(f)}});
  return Report::pass();
}

}  // namespace catsym
