#pragma once

// Isomorphisms found by exhaustive search, the "equal up to isomorphism"
// relation on arrows, and skeletons of finite categories.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "catsym/category.hpp"

namespace catsym {

// Some v: b -> a with v.u = id_a and u.v = id_b; the least such v.
template <Category C>
std::optional<arrow_t<C>> inverse_of(const C& c, const arrow_t<C>& u) {
  auto a = c.dom(u), b = c.cod(u);
  std::optional<arrow_t<C>> best;
  for (const auto& v : c.hom(b, a)) {
    if (c.compose(v, u) == c.identity(a) && c.compose(u, v) == c.identity(b))
      if (!best || v < *best) best = v;
  }
  return best;
}

template <Category C>
bool is_isomorphism(const C& c, const arrow_t<C>& u) {
  return inverse_of(c, u).has_value();
}

// All isomorphisms a -> b, ascending.
template <Category C>
std::vector<arrow_t<C>> find_isomorphisms(const C& c, const object_t<C>& a,
                                          const object_t<C>& b) {
  std::vector<arrow_t<C>> out;
  auto back = c.hom(b, a);
  for (const auto& u : c.hom(a, b)) {
    for (const auto& v : back)
      if (c.compose(v, u) == c.identity(a) && c.compose(u, v) == c.identity(b)) {
        out.push_back(u);
        break;
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <Category C>
bool isomorphic(const C& c, const object_t<C>& a, const object_t<C>& b) {
  return !find_isomorphisms(c, a, b).empty();
}

// (is1, is2) with k.is1 = is2.h, lexicographically least; nullopt if none.
template <Category C>
std::optional<std::pair<arrow_t<C>, arrow_t<C>>> equal_up_to_iso(
    const C& c, const arrow_t<C>& h, const arrow_t<C>& k) {
  auto firsts = find_isomorphisms(c, c.dom(h), c.dom(k));
  if (firsts.empty()) return std::nullopt;
  auto seconds = find_isomorphisms(c, c.cod(h), c.cod(k));
  for (const auto& is1 : firsts)
    for (const auto& is2 : seconds)
      if (c.compose(k, is1) == c.compose(is2, h)) return std::pair{is1, is2};
  return std::nullopt;
}

// One object per isomorphism class (the lowest id), with the arrows among
// representatives. Names are kept; ids are reassigned densely.
inline FiniteCategory skeleton(const FiniteCategory& c) {
  const std::size_t n = c.object_count();
  std::vector<std::size_t> rep(n);
  for (std::size_t a = 0; a < n; ++a) {
    rep[a] = a;
    for (std::size_t b = 0; b < a; ++b)
      if (rep[b] == b && isomorphic(c, ObjId(a), ObjId(b))) {
        rep[a] = b;
        break;
      }
  }
  std::vector<std::size_t> new_obj(n, n);
  std::vector<std::string> obj_names;
  for (std::size_t a = 0; a < n; ++a)
    if (rep[a] == a) {
      new_obj[a] = obj_names.size();
      obj_names.push_back(c.name(ObjId(a)));
    }
  const std::size_t none = c.arrow_count();
  std::vector<std::size_t> new_arr(c.arrow_count(), none);
  std::vector<ArrId> old_arr;
  std::vector<std::string> arr_names;
  std::vector<ObjId> dom, cod;
  for (ArrId f : c.arrows()) {
    auto a = c.dom(f).index(), b = c.cod(f).index();
    if (new_obj[a] == n || new_obj[b] == n) continue;
    new_arr[f.index()] = old_arr.size();
    old_arr.push_back(f);
    arr_names.push_back(c.name(f));
    dom.emplace_back(new_obj[a]);
    cod.emplace_back(new_obj[b]);
  }
  std::vector<ArrId> ids;
  for (std::size_t a = 0; a < n; ++a)
    if (rep[a] == a) ids.emplace_back(new_arr[c.identity(ObjId(a)).index()]);
  return FiniteCategory::assemble(
      std::move(obj_names), std::move(arr_names), std::move(dom), std::move(cod),
      std::move(ids), [&](ArrId g, ArrId f) {
        return ArrId(new_arr[c.compose(old_arr[g.index()], old_arr[f.index()]).index()]);
      });
}

}  // namespace catsym
