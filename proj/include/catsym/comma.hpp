#pragma once

// The arrow category C↓C as a view over any Category: objects are the
// arrows of C, arrows are commuting squares. Also the projections, ψ, the
// diagonal and the σ pair.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catsym/category.hpp"
#include "catsym/functor.hpp"

namespace catsym {

// (h1;h2): src -> dst with dst.h1 = h2.src.
template <class A>
struct CommaSquare {
  A src, dst, h1, h2;
  friend auto operator<=>(const CommaSquare&, const CommaSquare&) = default;
  friend bool operator==(const CommaSquare&, const CommaSquare&) = default;
};

struct Caps {
  std::size_t max_objects = 500;
  std::size_t max_arrows = 5000;

  // CATSYM_MAX_ARROWS overrides the arrow cap.
  static Caps from_env() {
    Caps c;
    if (const char* s = std::getenv("CATSYM_MAX_ARROWS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) c.max_arrows = v;
    }
    return c;
  }
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string dimension, std::size_t needed, std::size_t cap)
      : std::runtime_error("CapExceeded(" + dimension + ", needed " +
                           (needed > cap ? ">=" : "") + std::to_string(needed) +
                           ", cap " + std::to_string(cap) + ")"),
        dimension_(std::move(dimension)),
        needed_(needed),
        cap_(cap) {}
  const std::string& dimension() const { return dimension_; }
  // A lower bound: enumeration stops at the first element over the cap.
  std::size_t needed() const { return needed_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string dimension_;
  std::size_t needed_, cap_;
};

template <Category C>
class Comma {
 public:
  using base_type = C;
  using object_type = arrow_t<C>;
  using arrow_type = CommaSquare<arrow_t<C>>;

  struct NoSquares {};
  static constexpr NoSquares no_squares{};

  // Objects only: arrows() is empty and laws quantified over squares are
  // left to sampling. hom() still enumerates.
  Comma(std::shared_ptr<const C> base, NoSquares) : base_(std::move(base)) {
    for (const auto& f : base_->arrows()) objects_.push_back(f);
    std::sort(objects_.begin(), objects_.end());
    out_begin_.assign(objects_.size() + 1, 0);
  }

  explicit Comma(std::shared_ptr<const C> base, Caps caps = {}) : base_(std::move(base)) {
    const C& c = *base_;
    for (const auto& f : c.arrows()) objects_.push_back(f);
    std::sort(objects_.begin(), objects_.end());
    if (objects_.size() > caps.max_objects)
      throw CapExceeded("objects", objects_.size(), caps.max_objects);

    std::map<std::pair<object_t<C>, object_t<C>>, std::vector<arrow_t<C>>> homs;
    auto hom = [&](const object_t<C>& a, const object_t<C>& b) -> const std::vector<arrow_t<C>>& {
      auto key = std::pair{a, b};
      auto it = homs.find(key);
      if (it == homs.end()) {
        std::vector<arrow_t<C>> v;
        for (const auto& h : c.hom(a, b)) v.push_back(h);
        std::sort(v.begin(), v.end());
        it = homs.emplace(key, std::move(v)).first;
      }
      return it->second;
    };
    for (const auto& f : objects_)
      for (const auto& g : objects_) {
        const auto& firsts = hom(c.dom(f), c.dom(g));
        if (firsts.empty()) continue;
        const auto& seconds = hom(c.cod(f), c.cod(g));
        for (const auto& h1 : firsts) {
          auto gh1 = c.compose(g, h1);
          for (const auto& h2 : seconds)
            if (gh1 == c.compose(h2, f)) {
              if (squares_.size() == caps.max_arrows)
                throw CapExceeded("arrows", caps.max_arrows + 1, caps.max_arrows);
              squares_.push_back({f, g, h1, h2});
            }
        }
      }
    std::sort(squares_.begin(), squares_.end());
    out_begin_.reserve(objects_.size() + 1);
    std::size_t k = 0;
    for (const auto& f : objects_) {
      out_begin_.push_back(k);
      while (k < squares_.size() && squares_[k].src == f) ++k;
    }
    out_begin_.push_back(k);
  }

  const C& base() const { return *base_; }
  const std::shared_ptr<const C>& base_ptr() const { return base_; }

  const std::vector<object_type>& objects() const { return objects_; }
  const std::vector<arrow_type>& arrows() const { return squares_; }

  object_type dom(const arrow_type& s) const { return s.src; }
  object_type cod(const arrow_type& s) const { return s.dst; }

  arrow_type identity(const object_type& f) const {
    return {f, f, base_->identity(base_->dom(f)), base_->identity(base_->cod(f))};
  }

  arrow_type compose(const arrow_type& t, const arrow_type& s) const {
    if (!(t.src == s.dst))
      throw CategoryError(CategoryErrorKind::NotComposable, {describe(t), describe(s)});
    return {s.src, t.dst, base_->compose(t.h1, s.h1), base_->compose(t.h2, s.h2)};
  }

  bool commutes(const arrow_type& s) const {
    const C& c = *base_;
    return c.dom(s.h1) == c.dom(s.src) && c.cod(s.h1) == c.dom(s.dst) &&
           c.dom(s.h2) == c.cod(s.src) && c.cod(s.h2) == c.cod(s.dst) &&
           c.compose(s.dst, s.h1) == c.compose(s.h2, s.src);
  }

  // Computed from the base hom-sets, so also valid outside the universe.
  std::vector<arrow_type> hom(const object_type& f, const object_type& g) const {
    const C& c = *base_;
    std::vector<arrow_type> out;
    for (const auto& h1 : c.hom(c.dom(f), c.dom(g))) {
      auto gh1 = c.compose(g, h1);
      for (const auto& h2 : c.hom(c.cod(f), c.cod(g)))
        if (gh1 == c.compose(h2, f)) out.push_back({f, g, h1, h2});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Squares of the universe leaving f; empty for objects outside it.
  std::span<const arrow_type> arrows_from(const object_type& f) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), f);
    if (it == objects_.end() || !(*it == f)) return {};
    auto i = static_cast<std::size_t>(it - objects_.begin());
    return std::span<const arrow_type>(squares_.data() + out_begin_[i],
                                       out_begin_[i + 1] - out_begin_[i]);
  }

  std::optional<std::size_t> object_index(const object_type& f) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), f);
    if (it == objects_.end() || !(*it == f)) return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
  }
  std::optional<std::size_t> index_of(const arrow_type& s) const {
    auto it = std::lower_bound(squares_.begin(), squares_.end(), s);
    if (it == squares_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - squares_.begin());
  }

  std::string describe(const object_type& f) const { return "J(" + base_->describe(f) + ")"; }
  std::string describe(const arrow_type& s) const {
    return "(" + base_->describe(s.h1) + ";" + base_->describe(s.h2) + "):" +
           describe(s.src) + "->" + describe(s.dst);
  }

 private:
  std::shared_ptr<const C> base_;
  std::vector<object_type> objects_;
  std::vector<arrow_type> squares_;
  std::vector<std::size_t> out_begin_;
};

template <Category C>
using CommaPtr = std::shared_ptr<const Comma<C>>;

// F_st: J(f) -> dom f, (h1;h2) -> h1.
template <Category C>
Functor<Comma<C>, C> fst_functor(CommaPtr<C> k) {
  auto base = k->base_ptr();
  return {k, base, [base](const arrow_t<C>& f) { return base->dom(f); },
          [](const CommaSquare<arrow_t<C>>& s) { return s.h1; }, "F_st"};
}

// S_nd: J(f) -> cod f, (h1;h2) -> h2.
template <Category C>
Functor<Comma<C>, C> snd_functor(CommaPtr<C> k) {
  auto base = k->base_ptr();
  return {k, base, [base](const arrow_t<C>& f) { return base->cod(f); },
          [](const CommaSquare<arrow_t<C>>& s) { return s.h2; }, "S_nd"};
}

// ψ: F_st -> S_nd with ψ(J(f)) = f.
template <Category C>
NatTransf<Comma<C>, C> psi(CommaPtr<C> k) {
  return {fst_functor(k), snd_functor(k), [](const arrow_t<C>& f) { return f; }, "psi"};
}

// ▲: a -> J(id_a), f -> (f;f).
template <Category C>
Functor<C, Comma<C>> diagonal_functor(CommaPtr<C> k) {
  auto base = k->base_ptr();
  return {base, k, [base](const object_t<C>& a) { return base->identity(a); },
          [base](const arrow_t<C>& f) {
            return CommaSquare<arrow_t<C>>{base->identity(base->dom(f)),
                                           base->identity(base->cod(f)), f, f};
          },
          "Delta"};
}

// σ: ▲F_st -> Id, σ(J(f)) = (id_dom f; f).
template <Category C>
NatTransf<Comma<C>, Comma<C>> sigma(CommaPtr<C> k) {
  auto base = k->base_ptr();
  return {compose(diagonal_functor(k), fst_functor(k)), identity_functor(k),
          [base](const arrow_t<C>& f) {
            auto ida = base->identity(base->dom(f));
            return CommaSquare<arrow_t<C>>{ida, f, ida, f};
          },
          "sigma"};
}

// σ⁻¹: Id -> ▲S_nd, σ⁻¹(J(f)) = (f; id_cod f).
template <Category C>
NatTransf<Comma<C>, Comma<C>> sigma_inv(CommaPtr<C> k) {
  auto base = k->base_ptr();
  return {identity_functor(k), compose(diagonal_functor(k), snd_functor(k)),
          [base](const arrow_t<C>& f) {
            auto idb = base->identity(base->cod(f));
            return CommaSquare<arrow_t<C>>{f, idb, f, idb};
          },
          "sigma_inv"};
}

}  // namespace catsym
