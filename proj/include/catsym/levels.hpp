#pragma once

// Materialized arrow categories of finite categories and the tower of
// levels C_1 = C, C_{n+1} = C_n↓C_n.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catsym/comma.hpp"

namespace catsym {

using FiniteComma = Comma<FiniteCategory>;
using Square = CommaSquare<ArrId>;

// C↓C as a FiniteCategory, with the back-maps to the base. Object i is J of
// base arrow i; arrow k is the k-th commuting square in lexicographic order
// of (src, dst, h1, h2).
struct ArrowCategory {
  std::shared_ptr<const FiniteCategory> base;
  std::shared_ptr<const FiniteComma> comma;
  std::shared_ptr<const FiniteCategory> cat;

  ObjId j(ArrId f) const { return ObjId(f.index()); }
  ArrId j_inv(ObjId x) const { return ArrId(x.index()); }
  const Square& square(ArrId s) const { return comma->arrows()[s.index()]; }
  ArrId arrow(const Square& s) const {
    auto i = comma->index_of(s);
    if (!i) throw std::out_of_range("not a commuting square of the base");
    return ArrId(*i);
  }
};

inline std::string object_name(const FiniteCategory& base, ArrId f) {
  return "J[" + base.name(f) + "]";
}

inline std::string square_name(const FiniteCategory& base, const Square& s) {
  if (s.src == s.dst && base.is_identity(s.h1) && base.is_identity(s.h2))
    return "id_" + object_name(base, s.src);
  return "[" + base.name(s.src) + "|" + base.name(s.h1) + "," + base.name(s.h2) +
         "|" + base.name(s.dst) + "]";
}

inline ArrowCategory build_arrow_category(std::shared_ptr<const FiniteCategory> c,
                                          Caps caps = {}) {
  auto k = std::make_shared<const FiniteComma>(c, caps);
  std::vector<std::string> obj_names, arr_names;
  for (ArrId f : k->objects()) obj_names.push_back(object_name(*c, f));
  std::vector<ObjId> dom, cod;
  for (const auto& s : k->arrows()) {
    arr_names.push_back(square_name(*c, s));
    dom.emplace_back(s.src.index());
    cod.emplace_back(s.dst.index());
  }
  std::vector<ArrId> ids;
  for (ArrId f : k->objects()) ids.emplace_back(*k->index_of(k->identity(f)));
  auto cat = std::make_shared<const FiniteCategory>(FiniteCategory::assemble(
      std::move(obj_names), std::move(arr_names), std::move(dom), std::move(cod),
      std::move(ids), [&](ArrId t, ArrId s) {
        return ArrId(*k->index_of(k->compose(k->arrows()[t.index()], k->arrows()[s.index()])));
      }));
  return {std::move(c), std::move(k), std::move(cat)};
}

// Transport of view-level functors and transformations to the
// materialized level.
inline Functor<FiniteCategory, FiniteCategory> on_level(
    const ArrowCategory& ac, const Functor<FiniteComma, FiniteCategory>& F) {
  return {ac.cat, F.target, [ac, F](ObjId x) { return F.obj(ac.j_inv(x)); },
          [ac, F](ArrId s) { return F.arr(ac.square(s)); }, F.name};
}

inline Functor<FiniteCategory, FiniteCategory> on_level(
    const ArrowCategory& ac, const Functor<FiniteCategory, FiniteComma>& F) {
  return {F.source, ac.cat, [ac, F](ObjId a) { return ac.j(F.obj(a)); },
          [ac, F](ArrId f) { return ac.arrow(F.arr(f)); }, F.name};
}

inline Functor<FiniteCategory, FiniteCategory> on_level(
    const ArrowCategory& ac, const Functor<FiniteComma, FiniteComma>& F) {
  return {ac.cat, ac.cat, [ac, F](ObjId x) { return ac.j(F.obj(ac.j_inv(x))); },
          [ac, F](ArrId s) { return ac.arrow(F.arr(ac.square(s))); }, F.name};
}

inline NatTransf<FiniteCategory, FiniteCategory> on_level(
    const ArrowCategory& ac, const NatTransf<FiniteComma, FiniteCategory>& t) {
  return {on_level(ac, t.from), on_level(ac, t.to),
          [ac, t](ObjId x) { return t.at(ac.j_inv(x)); }, t.name};
}

inline NatTransf<FiniteCategory, FiniteCategory> on_level(
    const ArrowCategory& ac, const NatTransf<FiniteComma, FiniteComma>& t) {
  return {on_level(ac, t.from), on_level(ac, t.to),
          [ac, t](ObjId x) { return ac.arrow(t.at(ac.j_inv(x))); }, t.name};
}

inline Functor<FiniteCategory, FiniteCategory> fst_functor(const ArrowCategory& ac) {
  return on_level(ac, fst_functor<FiniteCategory>(ac.comma));
}
inline Functor<FiniteCategory, FiniteCategory> snd_functor(const ArrowCategory& ac) {
  return on_level(ac, snd_functor<FiniteCategory>(ac.comma));
}
inline NatTransf<FiniteCategory, FiniteCategory> psi(const ArrowCategory& ac) {
  return on_level(ac, psi<FiniteCategory>(ac.comma));
}
inline Functor<FiniteCategory, FiniteCategory> diagonal_functor(const ArrowCategory& ac) {
  return on_level(ac, diagonal_functor<FiniteCategory>(ac.comma));
}
inline NatTransf<FiniteCategory, FiniteCategory> sigma(const ArrowCategory& ac) {
  return on_level(ac, sigma<FiniteCategory>(ac.comma));
}
inline NatTransf<FiniteCategory, FiniteCategory> sigma_inv(const ArrowCategory& ac) {
  return on_level(ac, sigma_inv<FiniteCategory>(ac.comma));
}

// Levels are built on demand and memoized; safe to share between threads.
class LevelTower {
 public:
  explicit LevelTower(std::shared_ptr<const FiniteCategory> base, Caps caps = {})
      : caps_(caps) {
    levels_.push_back(std::move(base));
  }

  std::shared_ptr<const FiniteCategory> level(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("levels start at 1");
    std::lock_guard lock(mu_);
    extend(n);
    return levels_[n - 1];
  }

  // C_n↓C_n together with its back-maps; its `cat` is C_{n+1}.
  ArrowCategory arrow_category(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("levels start at 1");
    std::lock_guard lock(mu_);
    extend(n + 1);
    return arrows_[n - 1];
  }

  std::size_t built() const {
    std::lock_guard lock(mu_);
    return levels_.size();
  }

 private:
  void extend(std::size_t n) const {
    while (levels_.size() < n) {
      arrows_.push_back(build_arrow_category(levels_.back(), caps_));
      levels_.push_back(arrows_.back().cat);
    }
  }

  Caps caps_;
  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const FiniteCategory>> levels_;
  mutable std::vector<ArrowCategory> arrows_;
};

}  // namespace catsym
