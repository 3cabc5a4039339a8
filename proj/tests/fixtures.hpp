#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catsym/category.hpp"

namespace fixtures {

using catsym::RawCategory;

inline std::shared_ptr<const catsym::FiniteCategory> make(RawCategory raw) {
  return std::make_shared<const catsym::FiniteCategory>(catsym::validate_category(raw));
}

inline RawCategory terminal_raw() {
  RawCategory r;
  r.objects = {"*"};
  r.arrows = {{"id_*", 0, 0}};
  r.identities = {0};
  return r;
}

// a -f-> b
inline RawCategory interval_raw() {
  RawCategory r;
  r.objects = {"a", "b"};
  r.arrows = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}};
  r.identities = {0, 1};
  return r;
}

// Z/2 as a one-object category: g.g = e.
inline RawCategory group2_raw() {
  RawCategory r;
  r.objects = {"x"};
  r.arrows = {{"e", 0, 0}, {"g", 0, 0}};
  r.identities = {0};
  r.composites = {{1, 1, 0}};
  return r;
}

// Two objects with one iso each way.
inline RawCategory indiscrete2_raw() {
  RawCategory r;
  r.objects = {"a", "b"};
  r.arrows = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
  r.identities = {0, 1};
  r.composites = {{3, 2, 0}, {2, 3, 1}};
  return r;
}

inline RawCategory discrete_raw(int n) {
  RawCategory r;
  for (int i = 0; i < n; ++i) {
    r.objects.push_back("o" + std::to_string(i));
    r.arrows.push_back({"id_o" + std::to_string(i), std::size_t(i), std::size_t(i)});
    r.identities.push_back(std::size_t(i));
  }
  return r;
}

// One object, idempotent p: p.p = p.
inline RawCategory idempotent_raw() {
  RawCategory r;
  r.objects = {"x"};
  r.arrows = {{"id_x", 0, 0}, {"p", 0, 0}};
  r.identities = {0};
  r.composites = {{1, 1, 1}};
  return r;
}

inline auto terminal() { return make(terminal_raw()); }
inline auto interval() { return make(interval_raw()); }
inline auto group2() { return make(group2_raw()); }
inline auto indiscrete2() { return make(indiscrete2_raw()); }
inline auto idempotent() { return make(idempotent_raw()); }

}  // namespace fixtures
