#pragma once

// Every candidate composition table on at most 2 objects and 4 arrows, and
// a brute-force acceptance oracle that shares no code with
// validate_category.
//
// Identities come first. Non-identity arrows are a multiset over the
// (dom, cod) slots, so relabelings inside a slot are not repeated. Up to 3
// arrows every composable entry ranges over all arrows plus "missing"; at 4
// arrows only the non-identity entries vary and identity entries are left
// to inference.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "catsym/category.hpp"

namespace corpus {

using catsym::RawCategory;

inline constexpr std::size_t max_objects = 2;
inline constexpr std::size_t max_arrows = 4;

namespace detail {

// Non-decreasing sequences of length k over [0, slots).
inline void multisets(std::size_t slots, std::size_t k, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  std::size_t lo = cur.empty() ? 0 : cur.back();
  for (std::size_t s = lo; s < slots; ++s) {
    cur.push_back(s);
    multisets(slots, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// visit(const RawCategory&) for every candidate.
template <class Visit>
void for_each_candidate(Visit&& visit) {
  for (std::size_t n = 0; n <= max_objects; ++n)
    for (std::size_t m = n; m <= max_arrows; ++m) {
      if (n == 0 && m > 0) continue;
      std::vector<std::vector<std::size_t>> shapes;
      std::vector<std::size_t> cur;
      detail::multisets(n * n, m - n, cur, shapes);
      for (const auto& shape : shapes) {
        RawCategory raw;
        for (std::size_t a = 0; a < n; ++a) {
          raw.objects.push_back("o" + std::to_string(a));
          raw.arrows.push_back({"id_o" + std::to_string(a), a, a});
          raw.identities.push_back(a);
        }
        for (std::size_t i = 0; i < shape.size(); ++i)
          raw.arrows.push_back({"f" + std::to_string(i), shape[i] / n, shape[i] % n});

        std::vector<std::pair<std::size_t, std::size_t>> cells;  // (g, f)
        for (std::size_t g = 0; g < m; ++g)
          for (std::size_t f = 0; f < m; ++f) {
            if (raw.arrows[g].dom != raw.arrows[f].cod) continue;
            if (m == max_arrows && (g < n || f < n)) continue;
            cells.emplace_back(g, f);
          }
        // Digit m stands for "missing" when entries may be omitted.
        const std::size_t radix = m == max_arrows ? m : m + 1;
        std::vector<std::size_t> digit(cells.size(), 0);
        while (true) {
          RawCategory t = raw;
          for (std::size_t i = 0; i < cells.size(); ++i)
            if (digit[i] < m) t.composites.push_back({cells[i].first, cells[i].second, digit[i]});
          visit(static_cast<const RawCategory&>(t));
          std::size_t i = 0;
          while (i < digit.size() && ++digit[i] == radix) digit[i++] = 0;
          if (i == digit.size()) break;
        }
      }
    }
}

// Closure, typing, identity laws and associativity on the completed table.
inline bool oracle_accepts(const RawCategory& raw) {
  const std::size_t m = raw.arrows.size();
  const long none = -1;
  std::vector<long> t(m * m, none);
  for (const auto& e : raw.composites) {
    long& slot = t[e.g * m + e.f];
    if (slot != none && slot != static_cast<long>(e.h)) return false;
    slot = static_cast<long>(e.h);
  }
  std::vector<bool> is_id(m, false);
  for (auto i : raw.identities) is_id[i] = true;
  auto dom = [&](std::size_t i) { return raw.arrows[i].dom; };
  auto cod = [&](std::size_t i) { return raw.arrows[i].cod; };
  auto id_of = [&](std::size_t obj) { return raw.identities[obj]; };

  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      bool composable = dom(g) == cod(f);
      long& slot = t[g * m + f];
      if (!composable) {
        if (slot != none) return false;
        continue;
      }
      if (slot == none) {
        if (is_id[g]) slot = static_cast<long>(f);
        else if (is_id[f]) slot = static_cast<long>(g);
        else return false;
      }
      auto h = static_cast<std::size_t>(slot);
      if (dom(h) != dom(f) || cod(h) != cod(g)) return false;
    }
  for (std::size_t f = 0; f < m; ++f) {
    if (t[id_of(cod(f)) * m + f] != static_cast<long>(f)) return false;
    if (t[f * m + id_of(dom(f))] != static_cast<long>(f)) return false;
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g) {
      if (dom(h) != cod(g)) continue;
      for (std::size_t f = 0; f < m; ++f) {
        if (dom(g) != cod(f)) continue;
        auto hg = static_cast<std::size_t>(t[h * m + g]);
        auto gf = static_cast<std::size_t>(t[g * m + f]);
        if (t[hg * m + f] != t[h * m + gf]) return false;
      }
    }
  return true;
}

// The accepted candidates, validated.
inline std::vector<catsym::FiniteCategory> valid_categories() {
  std::vector<catsym::FiniteCategory> out;
  for_each_candidate([&](const RawCategory& raw) {
    if (!oracle_accepts(raw)) return;
    out.push_back(catsym::validate_category(raw));
  });
  return out;
}

}  // namespace corpus
