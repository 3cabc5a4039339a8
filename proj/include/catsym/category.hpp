#pragma once

// Finite categories: the Category concept shared by every algorithm in the
// library, and FiniteCategory, the validated table-backed model of it.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catsym {

template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  template <std::integral T>
  constexpr explicit Id(T v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(Id, Id) = default;
};

using ObjId = Id<struct ObjTag>;
using ArrId = Id<struct ArrTag>;

// Anything with objects, arrows, typing, identities and composition. The
// objects()/arrows() ranges are the finite universe over which laws are
// quantified; hom() must enumerate a hom-set completely.
template <class C>
concept Category =
    std::totally_ordered<typename C::object_type> &&
    std::totally_ordered<typename C::arrow_type> &&
    requires(const C& c, const typename C::object_type& a,
             const typename C::arrow_type& f) {
      { c.dom(f) } -> std::convertible_to<typename C::object_type>;
      { c.cod(f) } -> std::convertible_to<typename C::object_type>;
      { c.identity(a) } -> std::convertible_to<typename C::arrow_type>;
      { c.compose(f, f) } -> std::convertible_to<typename C::arrow_type>;
      c.hom(a, a);
      c.objects();
      c.arrows();
      c.arrows_from(a);
      { c.describe(a) } -> std::convertible_to<std::string>;
      { c.describe(f) } -> std::convertible_to<std::string>;
    };

template <Category C>
using object_t = typename C::object_type;
template <Category C>
using arrow_t = typename C::arrow_type;

template <Category C>
bool is_identity(const C& c, const arrow_t<C>& f) {
  return c.identity(c.dom(f)) == f;
}

enum class CategoryErrorKind {
  MissingComposite,
  IdentityLawViolation,
  AssociativityViolation,
  TypeMismatch,
  ConflictingComposite,
  NotComposable,
};

inline std::string_view to_string(CategoryErrorKind k) {
  switch (k) {
    case CategoryErrorKind::MissingComposite: return "MissingComposite";
    case CategoryErrorKind::IdentityLawViolation: return "IdentityLawViolation";
    case CategoryErrorKind::AssociativityViolation: return "AssociativityViolation";
    case CategoryErrorKind::TypeMismatch: return "TypeMismatch";
    case CategoryErrorKind::ConflictingComposite: return "ConflictingComposite";
    case CategoryErrorKind::NotComposable: return "NotComposable";
  }
  return "?";
}

class CategoryError : public std::runtime_error {
 public:
  CategoryError(CategoryErrorKind kind, std::vector<std::string> witness,
                const std::string& detail = {})
      : std::runtime_error(format(kind, witness, detail)),
        kind_(kind),
        witness_(std::move(witness)) {}

  CategoryErrorKind kind() const { return kind_; }
  // Arrow names (and for identity laws, the side) naming the violation.
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  static std::string format(CategoryErrorKind kind,
                            const std::vector<std::string>& w,
                            const std::string& detail) {
    std::string s(to_string(kind));
    s += '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ',';
      s += w[i];
    }
    s += ')';
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  CategoryErrorKind kind_;
  std::vector<std::string> witness_;
};

// An unvalidated description. Indices refer into objects/arrows.
struct RawCategory {
  struct Arrow {
    std::string name;
    std::size_t dom = 0;
    std::size_t cod = 0;
  };
  struct Entry {
    std::size_t g = 0;  // g . f = h
    std::size_t f = 0;
    std::size_t h = 0;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> identities;  // one arrow index per object
  std::vector<Entry> composites;
};

class FiniteCategory;
FiniteCategory validate_category(const RawCategory& raw);

class FiniteCategory {
 public:
  using object_type = ObjId;
  using arrow_type = ArrId;

  FiniteCategory() = default;

  std::size_t object_count() const { return obj_names_.size(); }
  std::size_t arrow_count() const { return arr_names_.size(); }

  const std::vector<ObjId>& objects() const { return objects_; }
  const std::vector<ArrId>& arrows() const { return arrows_; }

  ObjId dom(ArrId f) const { return dom_[f.index()]; }
  ObjId cod(ArrId f) const { return cod_[f.index()]; }
  ArrId identity(ObjId a) const { return identity_[a.index()]; }
  bool is_identity(ArrId f) const { return identity(dom(f)) == f; }

  bool composable(ArrId g, ArrId f) const { return dom(g) == cod(f); }

  ArrId compose(ArrId g, ArrId f) const {
    if (!composable(g, f))
      throw CategoryError(CategoryErrorKind::NotComposable,
                          {name(g), name(f)});
    return table_[g.index()][in_pos_[f.index()]];
  }

  const std::vector<ArrId>& hom(ObjId a, ObjId b) const {
    return homs_[a.index() * object_count() + b.index()];
  }
  const std::vector<ArrId>& arrows_from(ObjId a) const { return out_[a.index()]; }
  const std::vector<ArrId>& arrows_to(ObjId b) const { return in_[b.index()]; }

  const std::string& name(ObjId a) const { return obj_names_[a.index()]; }
  const std::string& name(ArrId f) const { return arr_names_[f.index()]; }
  std::string describe(ObjId a) const { return name(a); }
  std::string describe(ArrId f) const { return name(f); }

  std::optional<ObjId> find_object(std::string_view n) const {
    for (std::size_t i = 0; i < obj_names_.size(); ++i)
      if (obj_names_[i] == n) return ObjId(i);
    return std::nullopt;
  }
  std::optional<ArrId> find_arrow(std::string_view n) const {
    for (std::size_t i = 0; i < arr_names_.size(); ++i)
      if (arr_names_[i] == n) return ArrId(i);
    return std::nullopt;
  }

  // Lossless description; validate_category(to_raw()) reproduces *this.
  RawCategory to_raw() const {
    RawCategory raw;
    raw.objects = obj_names_;
    for (std::size_t i = 0; i < arrow_count(); ++i)
      raw.arrows.push_back({arr_names_[i], dom_[i].index(), cod_[i].index()});
    for (auto id : identity_) raw.identities.push_back(id.index());
    for (auto f : arrows_)
      for (auto g : arrows_from(cod(f)))
        raw.composites.push_back({g.index(), f.index(), compose(g, f).index()});
    return raw;
  }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.obj_names_ == b.obj_names_ && a.arr_names_ == b.arr_names_ &&
           a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_;
  }

  // Assembles a category from a total, typed composition function without
  // checking the axioms. Used by constructions that are correct by
  // construction; check_axioms() verifies them independently.
  template <class ComposeFn>
  static FiniteCategory assemble(std::vector<std::string> obj_names,
                                 std::vector<std::string> arr_names,
                                 std::vector<ObjId> dom, std::vector<ObjId> cod,
                                 std::vector<ArrId> identity,
                                 ComposeFn&& compose_fn) {
    FiniteCategory c;
    c.obj_names_ = std::move(obj_names);
    c.arr_names_ = std::move(arr_names);
    c.dom_ = std::move(dom);
    c.cod_ = std::move(cod);
    c.identity_ = std::move(identity);
    c.index();
    c.table_.resize(c.arrow_count());
    for (std::size_t g = 0; g < c.arrow_count(); ++g) {
      const auto& into = c.in_[c.dom_[g].index()];
      c.table_[g].reserve(into.size());
      for (ArrId f : into) c.table_[g].push_back(compose_fn(ArrId(g), f));
    }
    return c;
  }

 private:
  friend FiniteCategory validate_category(const RawCategory& raw);

  void index() {
    const std::size_t n = object_count();
    objects_.clear();
    arrows_.clear();
    for (std::size_t i = 0; i < n; ++i) objects_.emplace_back(i);
    for (std::size_t i = 0; i < arrow_count(); ++i) arrows_.emplace_back(i);
    out_.assign(n, {});
    in_.assign(n, {});
    homs_.assign(n * n, {});
    in_pos_.assign(arrow_count(), 0);
    for (ArrId f : arrows_) {
      out_[dom(f).index()].push_back(f);
      in_pos_[f.index()] = in_[cod(f).index()].size();
      in_[cod(f).index()].push_back(f);
      homs_[dom(f).index() * n + cod(f).index()].push_back(f);
    }
  }

  std::vector<std::string> obj_names_;
  std::vector<std::string> arr_names_;
  std::vector<ObjId> dom_, cod_;
  std::vector<ArrId> identity_;
  std::vector<ObjId> objects_;
  std::vector<ArrId> arrows_;
  std::vector<std::vector<ArrId>> out_, in_, homs_;
  std::vector<std::size_t> in_pos_;
  // table_[g][in_pos_[f]] = g . f, stored for composable pairs only.
  std::vector<std::vector<ArrId>> table_;
};

// First violated axiom of an assembled category, if any: identity laws,
// typing of composites, then associativity over every composable triple.
inline std::optional<CategoryError> check_axioms(const FiniteCategory& c) {
  for (ArrId f : c.arrows()) {
    if (c.compose(f, c.identity(c.dom(f))) != f)
      return CategoryError(CategoryErrorKind::IdentityLawViolation,
                           {c.name(f), "right"});
    if (c.compose(c.identity(c.cod(f)), f) != f)
      return CategoryError(CategoryErrorKind::IdentityLawViolation,
                           {c.name(f), "left"});
  }
  for (ArrId f : c.arrows())
    for (ArrId g : c.arrows_from(c.cod(f))) {
      ArrId h = c.compose(g, f);
      if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
        return CategoryError(CategoryErrorKind::TypeMismatch,
                             {c.name(g), c.name(f), c.name(h)},
                             "composite has the wrong type");
    }
  for (ArrId f : c.arrows())
    for (ArrId g : c.arrows_from(c.cod(f))) {
      ArrId gf = c.compose(g, f);
      for (ArrId h : c.arrows_from(c.cod(g)))
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          return CategoryError(CategoryErrorKind::AssociativityViolation,
                               {c.name(h), c.name(g), c.name(f)});
    }
  return std::nullopt;
}

// Validates a raw description. Composites with an identity operand may be
// omitted; they are inferred. Throws CategoryError on the first violation.
inline FiniteCategory validate_category(const RawCategory& raw) {
  const std::size_t n = raw.objects.size();
  const std::size_t m = raw.arrows.size();
  auto arrow_name = [&](std::size_t i) {
    return i < m ? raw.arrows[i].name : "#" + std::to_string(i);
  };

  for (const auto& a : raw.arrows)
    if (a.dom >= n || a.cod >= n)
      throw CategoryError(CategoryErrorKind::TypeMismatch, {a.name},
                          "endpoint is not an object");
  if (raw.identities.size() != n)
    throw CategoryError(CategoryErrorKind::TypeMismatch, {},
                        "every object needs exactly one identity");
  std::vector<std::size_t> identity_of(m, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t i = raw.identities[a];
    if (i >= m || raw.arrows[i].dom != a || raw.arrows[i].cod != a ||
        identity_of[i] != n)
      throw CategoryError(CategoryErrorKind::TypeMismatch, {arrow_name(i)},
                          "identity of " + raw.objects[a] + " is mistyped");
    identity_of[i] = a;
  }
  auto is_id = [&](std::size_t i) { return identity_of[i] != n; };

  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> table(m * m, unset);
  for (const auto& e : raw.composites) {
    if (e.g >= m || e.f >= m || e.h >= m)
      throw CategoryError(CategoryErrorKind::TypeMismatch,
                          {arrow_name(e.g), arrow_name(e.f), arrow_name(e.h)},
                          "unknown arrow in composite");
    if (raw.arrows[e.g].dom != raw.arrows[e.f].cod)
      throw CategoryError(CategoryErrorKind::TypeMismatch,
                          {arrow_name(e.g), arrow_name(e.f)},
                          "composite declared for a non-composable pair");
    auto& slot = table[e.g * m + e.f];
    if (slot != unset && slot != e.h)
      throw CategoryError(CategoryErrorKind::ConflictingComposite,
                          {arrow_name(e.g), arrow_name(e.f)});
    slot = e.h;
  }
  for (const auto& e : raw.composites) {
    if (is_id(e.f) && e.h != e.g)
      throw CategoryError(CategoryErrorKind::IdentityLawViolation,
                          {arrow_name(e.g), "right"});
    if (is_id(e.g) && e.h != e.f)
      throw CategoryError(CategoryErrorKind::IdentityLawViolation,
                          {arrow_name(e.f), "left"});
  }
  for (std::size_t f = 0; f < m; ++f) {
    std::size_t a = raw.arrows[f].dom, b = raw.arrows[f].cod;
    auto& right = table[f * m + raw.identities[a]];
    if (right == unset) right = f;
    auto& left = table[raw.identities[b] * m + f];
    if (left == unset) left = f;
  }
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (raw.arrows[g].dom != raw.arrows[f].cod) continue;
      std::size_t h = table[g * m + f];
      if (h == unset)
        throw CategoryError(CategoryErrorKind::MissingComposite,
                            {arrow_name(g), arrow_name(f)});
      if (raw.arrows[h].dom != raw.arrows[f].dom ||
          raw.arrows[h].cod != raw.arrows[g].cod)
        throw CategoryError(CategoryErrorKind::TypeMismatch,
                            {arrow_name(g), arrow_name(f), arrow_name(h)},
                            "composite has the wrong type");
    }

  std::vector<std::string> arr_names;
  std::vector<ObjId> dom, cod;
  for (const auto& a : raw.arrows) {
    arr_names.push_back(a.name);
    dom.emplace_back(a.dom);
    cod.emplace_back(a.cod);
  }
  std::vector<ArrId> ids;
  for (auto i : raw.identities) ids.emplace_back(i);
  FiniteCategory c = FiniteCategory::assemble(
      raw.objects, std::move(arr_names), std::move(dom), std::move(cod),
      std::move(ids),
      [&](ArrId g, ArrId f) { return ArrId(table[g.index() * m + f.index()]); });
  if (auto err = check_axioms(c)) throw *err;
  return c;
}

}  // namespace catsym
