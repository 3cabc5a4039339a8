#pragma once

// Witness structures for the hierarchy PSC ⊃ CoCC ⊃ SEC ⊃ IMC, their
// verifiers, and brute-force searches for witnesses on finite categories.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catsym/category.hpp"
#include "catsym/comma.hpp"
#include "catsym/functor.hpp"
#include "catsym/iso.hpp"
#include "catsym/report.hpp"

namespace catsym {

template <Category C>
struct PscStructure {
  std::shared_ptr<const C> cat;
  std::function<object_t<C>(const arrow_t<C>&)> btop;
  std::function<std::optional<object_t<C>>(const object_t<C>&, const object_t<C>&)> star;
  std::function<arrow_t<C>(const object_t<C>&)> iso;      // B⊤(id_a) -> a
  std::function<arrow_t<C>(const object_t<C>&)> iso_inv;  // a -> B⊤(id_a)

  object_t<C> concept_of(const object_t<C>& a) const { return btop(cat->identity(a)); }
};

// Tabulated PSC data of a finite category. star is partial and only
// defined on the image of btop.
struct PscTable {
  std::vector<ObjId> btop;                        // by arrow
  std::map<std::pair<ObjId, ObjId>, ObjId> star;  // (x, y) -> x * y
  std::vector<ArrId> iso;                         // by object

  friend bool operator==(const PscTable&, const PscTable&) = default;
};

inline PscStructure<FiniteCategory> make_psc(std::shared_ptr<const FiniteCategory> c,
                                             PscTable t) {
  if (t.btop.size() != c->arrow_count() || t.iso.size() != c->object_count())
    throw std::invalid_argument("PSC table is not total");
  std::set<ObjId> image(t.btop.begin(), t.btop.end());
  for (const auto& [xy, z] : t.star)
    if (!image.count(xy.first) || !image.count(xy.second) || !image.count(z))
      throw std::invalid_argument("star entry outside the image of btop");
  // iso_inv falls back to the identity of B⊤(id_a), which fails the
  // representability check unless iso(a) really is invertible.
  std::vector<ArrId> inv;
  for (ObjId a : c->objects()) {
    auto u = t.iso[a.index()];
    auto v = inverse_of(*c, u);
    inv.push_back(v ? *v : c->identity(t.btop[c->identity(a).index()]));
  }
  auto shared = std::make_shared<const PscTable>(std::move(t));
  return {c, [shared](ArrId f) { return shared->btop[f.index()]; },
          [shared](ObjId x, ObjId y) -> std::optional<ObjId> {
            auto it = shared->star.find({x, y});
            if (it == shared->star.end()) return std::nullopt;
            return it->second;
          },
          [shared](ObjId a) { return shared->iso[a.index()]; },
          [inv = std::move(inv)](ObjId a) { return inv[a.index()]; }};
}

// Homomorphism (non-identity pairs first, right factor outermost), then
// associativity of * on composable triples, representability, and typing
// coherence of conceptualized objects: arrows with the same B⊤ must have
// the same B⊤ on their domain and codomain identities.
template <Category C>
Report check_psc(const PscStructure<C>& s) {
  const C& c = *s.cat;
  auto hom_law = [&](const arrow_t<C>& g, const arrow_t<C>& f) -> std::optional<Report> {
    auto st = s.star(s.btop(g), s.btop(f));
    auto want = s.btop(c.compose(g, f));
    if (!st)
      return Report::fail("homomorphism", {{"g", c.describe(g)}, {"f", c.describe(f)}},
                          "star(" + c.describe(s.btop(g)) + "," + c.describe(s.btop(f)) +
                              ") undefined");
    if (!(*st == want))
      return Report::fail("homomorphism", {{"g", c.describe(g)}, {"f", c.describe(f)}},
                          "star gives " + c.describe(*st) + ", B(g.f) is " + c.describe(want));
    return std::nullopt;
  };
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& f : c.arrows())
      for (const auto& g : c.arrows_from(c.cod(f))) {
        bool both_id = is_identity(c, g) && is_identity(c, f);
        if (both_id != (pass == 1)) continue;
        if (auto r = hom_law(g, f)) return *r;
      }
  for (const auto& f : c.arrows())
    for (const auto& g : c.arrows_from(c.cod(f)))
      for (const auto& h : c.arrows_from(c.cod(g))) {
        auto l = s.star(*s.star(s.btop(h), s.btop(g)), s.btop(f));
        auto r = s.star(s.btop(h), *s.star(s.btop(g), s.btop(f)));
        if (!l || !r || !(*l == *r))
          return Report::fail("star-associativity", {{"h", c.describe(h)},
                                                     {"g", c.describe(g)},
                                                     {"f", c.describe(f)}});
      }
  for (const auto& a : c.objects()) {
    auto x = s.concept_of(a);
    auto u = s.iso(a), v = s.iso_inv(a);
    bool typed = c.dom(u) == x && c.cod(u) == a && c.dom(v) == a && c.cod(v) == x;
    if (!typed || !(c.compose(u, v) == c.identity(a)) || !(c.compose(v, u) == c.identity(x)))
      return Report::fail("representability", {{"object", c.describe(a)},
                                               {"iso", c.describe(u)}});
  }
  std::map<object_t<C>, std::pair<arrow_t<C>, std::pair<object_t<C>, object_t<C>>>> seen;
  for (const auto& f : c.arrows()) {
    std::pair ends{s.concept_of(c.dom(f)), s.concept_of(c.cod(f))};
    auto [it, fresh] = seen.try_emplace(s.btop(f), f, ends);
    if (!fresh && !(it->second.second == ends))
      return Report::fail("conceptual-typing", {{"f", c.describe(it->second.first)},
                                                {"f'", c.describe(f)}});
  }
  return Report::pass();
}

enum class SearchStatus { Found, Absent, BudgetExceeded };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("BudgetExceeded(" + std::to_string(budget) + " nodes)") {}
};

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<T> value;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t default_budget = 20'000'000;

namespace detail {

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  bool exceeded = false;
  bool spend() {
    if (++used > limit) exceeded = true;
    return !exceeded;
  }
};

// Backtracking over B⊤ tables in lexicographic order (arrows by id,
// values ascending). Identities only range over their iso class, which is
// what representability allows.
class PscEnumerator {
 public:
  PscEnumerator(const FiniteCategory& c, Budget& budget) : c_(c), budget_(budget) {
    const std::size_t m = c.arrow_count(), n = c.object_count();
    domain_.resize(m);
    for (ArrId f : c.arrows()) {
      if (c.is_identity(f)) {
        ObjId a = c.dom(f);
        for (ObjId b : c.objects())
          if (isomorphic(c, b, a)) domain_[f.index()].push_back(b);
      } else {
        domain_[f.index()] = c.objects();
      }
    }
    pairs_at_.resize(m);
    for (ArrId f : c.arrows())
      for (ArrId g : c.arrows_from(c.cod(f))) {
        ArrId h = c.compose(g, f);
        auto top = std::max({g.index(), f.index(), h.index()});
        pairs_at_[top].push_back({g, f, h});
      }
    typing_at_.resize(m);
    for (ArrId f : c.arrows()) {
      auto top = std::max({f.index(), c.identity(c.dom(f)).index(),
                           c.identity(c.cod(f)).index()});
      typing_at_[top].push_back(f);
    }
    btop_.assign(m, ObjId(0));
    star_val_.assign(n * n, ObjId(0));
    star_cnt_.assign(n * n, 0);
    typ_val_.assign(n, {ObjId(0), ObjId(0)});
    typ_cnt_.assign(n, 0);
  }

  // Calls visit(table) per structure until it returns false.
  // Returns false when stopped early.
  bool run(const std::function<bool(const PscTable&)>& visit) {
    visit_ = &visit;
    return dfs(0);
  }

 private:
  struct Pair {
    ArrId g, f, h;
  };

  bool dfs(std::size_t i) {
    if (i == c_.arrow_count()) return (*visit_)(table());
    for (ObjId v : domain_[i]) {
      if (!budget_.spend()) return false;
      btop_[i] = v;
      std::size_t done_pairs = 0, done_typing = 0;
      bool ok = true;
      for (const auto& p : pairs_at_[i]) {
        auto key = btop_[p.g.index()].index() * c_.object_count() + btop_[p.f.index()].index();
        auto want = btop_[p.h.index()];
        if (star_cnt_[key] && star_val_[key] != want) {
          ok = false;
          break;
        }
        star_val_[key] = want;
        ++star_cnt_[key];
        ++done_pairs;
      }
      if (ok)
        for (ArrId f : typing_at_[i]) {
          auto key = btop_[f.index()].index();
          std::pair ends{btop_[c_.identity(c_.dom(f)).index()],
                         btop_[c_.identity(c_.cod(f)).index()]};
          if (typ_cnt_[key] && typ_val_[key] != ends) {
            ok = false;
            break;
          }
          typ_val_[key] = ends;
          ++typ_cnt_[key];
          ++done_typing;
        }
      bool keep_going = !ok || dfs(i + 1);
      for (std::size_t k = 0; k < done_pairs; ++k) {
        const auto& p = pairs_at_[i][k];
        --star_cnt_[btop_[p.g.index()].index() * c_.object_count() + btop_[p.f.index()].index()];
      }
      for (std::size_t k = 0; k < done_typing; ++k)
        --typ_cnt_[btop_[typing_at_[i][k].index()].index()];
      if (!keep_going) return false;
    }
    return true;
  }

  PscTable table() const {
    PscTable t;
    t.btop = btop_;
    for (ArrId f : c_.arrows())
      for (ArrId g : c_.arrows_from(c_.cod(f)))
        t.star[{btop_[g.index()], btop_[f.index()]}] = btop_[c_.compose(g, f).index()];
    for (ObjId a : c_.objects())
      t.iso.push_back(find_isomorphisms(c_, btop_[c_.identity(a).index()], a).front());
    return t;
  }

  const FiniteCategory& c_;
  Budget& budget_;
  const std::function<bool(const PscTable&)>* visit_ = nullptr;
  std::vector<std::vector<ObjId>> domain_;
  std::vector<std::vector<Pair>> pairs_at_;
  std::vector<std::vector<ArrId>> typing_at_;
  std::vector<ObjId> btop_;
  std::vector<ObjId> star_val_;
  std::vector<std::uint32_t> star_cnt_;
  std::vector<std::pair<ObjId, ObjId>> typ_val_;
  std::vector<std::uint32_t> typ_cnt_;
};

}  // namespace detail

// Visits every PSC structure in lexicographic order of B⊤ until `visit`
// returns false. is_a is the lowest isomorphism B⊤(id_a) -> a.
inline SearchResult<PscTable> for_each_psc(const FiniteCategory& c,
                                           const std::function<bool(const PscTable&)>& visit,
                                           std::uint64_t budget = default_budget) {
  detail::Budget b{budget};
  detail::PscEnumerator e(c, b);
  SearchResult<PscTable> r;
  bool finished = e.run(visit);
  r.nodes = b.used;
  r.status = b.exceeded ? SearchStatus::BudgetExceeded
                        : (finished ? SearchStatus::Absent : SearchStatus::Found);
  return r;
}

// The lexicographically least PSC structure, if any.
inline SearchResult<PscTable> search_psc(const FiniteCategory& c,
                                         std::uint64_t budget = default_budget) {
  std::optional<PscTable> found;
  auto r = for_each_psc(c, [&](const PscTable& t) {
    found = t;
    return false;
  }, budget);
  r.value = std::move(found);
  return r;
}

template <Category C>
struct CoccStructure {
  PscStructure<C> psc;
  CommaPtr<C> comma;
  Functor<Comma<C>, C> te;
  NatTransf<C, C> phi;      // T_e▲ -> Id
  NatTransf<C, C> phi_inv;  // Id -> T_e▲
};

// φ and φ⁻¹ are taken from is_a and its inverse.
template <Category C>
CoccStructure<C> make_cocc(PscStructure<C> psc, CommaPtr<C> comma, Functor<Comma<C>, C> te) {
  auto te_delta = compose(te, diagonal_functor(comma));
  auto id = identity_functor(psc.cat);
  NatTransf<C, C> phi{te_delta, id, psc.iso, "phi"};
  NatTransf<C, C> phi_inv{id, te_delta, psc.iso_inv, "phi_inv"};
  return {std::move(psc), std::move(comma), std::move(te), std::move(phi), std::move(phi_inv)};
}

// T_e from a table indexed like comma->arrows(); te⁰ = B⊤.
inline CoccStructure<FiniteCategory> make_cocc(PscStructure<FiniteCategory> psc,
                                               CommaPtr<FiniteCategory> comma,
                                               std::vector<ArrId> te_table) {
  if (te_table.size() != comma->arrows().size())
    throw std::invalid_argument("T_e table is not total");
  auto btop = psc.btop;
  Functor<Comma<FiniteCategory>, FiniteCategory> te{
      comma, psc.cat, [btop](ArrId f) { return btop(f); },
      [comma, t = std::move(te_table)](const CommaSquare<ArrId>& s) {
        auto i = comma->index_of(s);
        if (!i) throw std::out_of_range("square outside the arrow category");
        return t[*i];
      },
      "T_e"};
  return make_cocc(std::move(psc), std::move(comma), std::move(te));
}

// te⁰ = B⊤, then functoriality of T_e, then φ: components, inverses,
// naturality.
template <Category C>
Report check_cocc(const CoccStructure<C>& s) {
  const C& c = *s.psc.cat;
  for (const auto& f : c.arrows())
    if (!(s.te.obj(f) == s.psc.btop(f)))
      return Report::fail("te-object", {{"f", c.describe(f)}});
  if (auto r = check_functor(s.te); !r.ok()) return r.nested("te");
  for (const auto& a : c.objects()) {
    if (!(s.phi.at(a) == s.psc.iso(a)) || !(s.phi_inv.at(a) == s.psc.iso_inv(a)))
      return Report::fail("phi-component", {{"object", c.describe(a)}});
    auto x = s.te.obj(c.identity(a));
    if (!(c.compose(s.phi.at(a), s.phi_inv.at(a)) == c.identity(a)) ||
        !(c.compose(s.phi_inv.at(a), s.phi.at(a)) == c.identity(x)))
      return Report::fail("phi-inverse", {{"object", c.describe(a)}});
  }
  if (auto r = check_naturality(s.phi); !r.ok()) return r.nested("phi");
  if (auto r = check_naturality(s.phi_inv); !r.ok()) return r.nested("phi_inv");
  return Report::pass();
}

template <Category C>
arrow_t<C> derived_arrow(const CoccStructure<C>& s, const arrow_t<C>& f) {
  const C& c = *s.psc.cat;
  auto delta = diagonal_functor(s.comma);
  return c.compose(s.phi.at(c.cod(f)), c.compose(s.te.arr(delta.arr(f)), s.phi_inv.at(c.dom(f))));
}

// τ(J(f)) = T_e(id_a;f).φ⁻¹(a) and τ⁻¹(J(f)) = φ(b).T_e(f;id_b).
template <Category C>
std::pair<NatTransf<Comma<C>, C>, NatTransf<Comma<C>, C>> derive_tau(const CoccStructure<C>& s) {
  auto base = s.psc.cat;
  auto te = s.te;
  auto phi = s.phi, phi_inv = s.phi_inv;
  NatTransf<Comma<C>, C> tau{
      fst_functor(s.comma), te,
      [base, te, phi_inv](const arrow_t<C>& f) {
        auto a = base->dom(f);
        auto ida = base->identity(a);
        return base->compose(te.arr({ida, f, ida, f}), phi_inv.at(a));
      },
      "tau"};
  NatTransf<Comma<C>, C> tau_inv{
      te, snd_functor(s.comma),
      [base, te, phi](const arrow_t<C>& f) {
        auto b = base->cod(f);
        auto idb = base->identity(b);
        return base->compose(phi.at(b), te.arr({f, idb, f, idb}));
      },
      "tau_inv"};
  return {std::move(tau), std::move(tau_inv)};
}

// τ⁻¹•τ = ψ componentwise, and T_e(f;f) = φ⁻¹(b).f.φ(a); both are
// evaluated for every arrow and must agree.
template <Category C>
Report check_sec(const CoccStructure<C>& s) {
  const C& c = *s.psc.cat;
  auto [tau, tau_inv] = derive_tau(s);
  auto delta = diagonal_functor(s.comma);
  for (const auto& f : c.arrows()) {
    auto composite = c.compose(tau_inv.at(f), tau.at(f));
    bool split = composite == f;
    auto tff = s.te.arr(delta.arr(f));
    auto expected = c.compose(s.phi_inv.at(c.cod(f)), c.compose(f, s.phi.at(c.dom(f))));
    bool closed = tff == expected;
    if (split != closed)
      return Report::fail("formulations-disagree", {{"f", c.describe(f)}});
    if (!split)
      return Report::fail("tau-composite", {{"f", c.describe(f)},
                                            {"tau_inv.tau", c.describe(composite)},
                                            {"te(f;f)", c.describe(tff)},
                                            {"expected", c.describe(expected)}});
  }
  return Report::pass();
}

struct ImcResult {
  Report report;
  bool eta_found = false;
  bool all_iso = false;
  bool internal_error = false;
};

// Searches a natural isomorphism η: Id -> ▲T_e on C↓C and cross-checks
// the result against "every arrow is an isomorphism".
template <Category C>
ImcResult check_imc(const CoccStructure<C>& s, std::uint64_t budget = default_budget) {
  using Sq = CommaSquare<arrow_t<C>>;
  const C& c = *s.psc.cat;
  const Comma<C>& k = *s.comma;
  ImcResult out;

  std::optional<arrow_t<C>> non_iso;
  for (const auto& f : c.arrows())
    if (!is_isomorphism(c, f)) {
      non_iso = f;
      break;
    }
  out.all_iso = !non_iso;

  const auto& objs = k.objects();
  auto target = [&](const arrow_t<C>& f) { return c.identity(s.te.obj(f)); };
  std::vector<std::vector<Sq>> cand(objs.size());
  std::optional<arrow_t<C>> stuck;
  for (std::size_t i = 0; i < objs.size() && !stuck; ++i) {
    for (const auto& sq : k.hom(objs[i], target(objs[i])))
      if (is_isomorphism(c, sq.h1) && is_isomorphism(c, sq.h2)) cand[i].push_back(sq);
    if (cand[i].empty()) stuck = objs[i];
  }

  detail::Budget b{budget};
  std::vector<Sq> eta(objs.size());
  bool found = false;
  if (!stuck) {
    std::vector<std::vector<const Sq*>> checks(objs.size());
    for (const auto& sq : k.arrows()) {
      auto i = *k.object_index(sq.src), j = *k.object_index(sq.dst);
      checks[std::max(i, j)].push_back(&sq);
    }
    auto delta = diagonal_functor(s.comma);
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
      if (i == objs.size()) return true;
      for (const auto& e : cand[i]) {
        if (!b.spend()) return false;
        eta[i] = e;
        bool ok = true;
        for (const Sq* sq : checks[i]) {
          auto x = *k.object_index(sq->src), y = *k.object_index(sq->dst);
          auto lhs = k.compose(delta.arr(s.te.arr(*sq)), eta[x]);
          auto rhs = k.compose(eta[y], *sq);
          if (!(lhs == rhs)) {
            ok = false;
            break;
          }
        }
        if (ok && dfs(i + 1)) return true;
        if (b.exceeded) return false;
      }
      return false;
    };
    found = dfs(0);
  }
  out.eta_found = found;

  if (b.exceeded) {
    out.report = Report::with(Verdict::Budget, "eta search exceeded " + std::to_string(budget) + " nodes");
    return out;
  }
  out.internal_error = out.eta_found != out.all_iso;
  if (found) {
    out.report = Report::pass();
  } else {
    std::vector<std::pair<std::string, std::string>> w;
    if (stuck) w.push_back({"no-iso-component", k.describe(*stuck)});
    if (non_iso) w.push_back({"non-iso", c.describe(*non_iso)});
    out.report = Report::fail("eta-absent", std::move(w));
  }
  if (out.internal_error) {
    out.report.note = "internal error: eta search and the all-iso criterion disagree";
    if (out.report.ok()) out.report.verdict = Verdict::Fail;
    out.report.law = "imc-cross-check";
  }
  return out;
}

// Backtracking for T_e over the squares of C↓C given a PSC structure.
// Identity and diagonal squares are forced by φ; `pinned` fixes further
// entries. Values ascend by ArrId, giving the least table.
inline SearchResult<std::vector<ArrId>> search_cocc(
    const PscStructure<FiniteCategory>& psc, const Comma<FiniteCategory>& k,
    const std::vector<std::optional<ArrId>>& pinned = {},
    std::uint64_t budget = default_budget, std::uint64_t* shared_used = nullptr) {
  const FiniteCategory& c = *psc.cat;
  const auto& sq = k.arrows();
  const std::size_t q = sq.size();
  std::vector<std::vector<ArrId>> domain(q);
  SearchResult<std::vector<ArrId>> r;
  for (std::size_t i = 0; i < q; ++i) {
    const auto& s = sq[i];
    auto x = psc.btop(s.src), y = psc.btop(s.dst);
    std::optional<ArrId> forced;
    if (i < pinned.size() && pinned[i]) forced = pinned[i];
    bool diag = c.is_identity(s.src) && c.is_identity(s.dst) && s.h1 == s.h2;
    if (diag) {
      auto a = c.dom(s.h1), bb = c.cod(s.h1);
      auto v = c.compose(psc.iso_inv(bb), c.compose(s.h1, psc.iso(a)));
      if (forced && *forced != v) return r;
      forced = v;
    }
    if (s.src == s.dst && c.is_identity(s.h1) && c.is_identity(s.h2)) {
      auto v = c.identity(x);
      if (forced && *forced != v) return r;
      forced = v;
    }
    if (forced) {
      if (c.dom(*forced) != x || c.cod(*forced) != y) return r;
      domain[i] = {*forced};
    } else {
      domain[i] = c.hom(x, y);
    }
    if (domain[i].empty()) return r;
  }
  struct Triple {
    std::size_t t, s, u;
  };
  std::vector<std::vector<Triple>> checks(q);
  for (std::size_t i = 0; i < q; ++i)
    for (const auto& t : k.arrows_from(sq[i].dst)) {
      std::size_t ti = *k.index_of(t);
      std::size_t ui = *k.index_of(k.compose(t, sq[i]));
      checks[std::max({i, ti, ui})].push_back({ti, i, ui});
    }
  detail::Budget b{budget, shared_used ? *shared_used : 0};
  std::vector<ArrId> te(q);
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == q) return true;
    for (ArrId v : domain[i]) {
      if (!b.spend()) return false;
      te[i] = v;
      bool ok = true;
      for (const auto& tr : checks[i])
        if (c.compose(te[tr.t], te[tr.s]) != te[tr.u]) {
          ok = false;
          break;
        }
      if (ok && dfs(i + 1)) return true;
      if (b.exceeded) return false;
    }
    return false;
  };
  bool found = dfs(0);
  if (shared_used) *shared_used = b.used;
  r.nodes = b.used;
  if (b.exceeded) {
    r.status = SearchStatus::BudgetExceeded;
  } else if (found) {
    r.status = SearchStatus::Found;
    r.value = std::move(te);
  }
  return r;
}

struct CoccWitness {
  PscTable psc;
  std::vector<ArrId> te;
};

// First (PSC, T_e) pair in lexicographic order; a particular B⊤ can admit
// no T_e while a later one does.
inline SearchResult<CoccWitness> search_cocc_joint(std::shared_ptr<const FiniteCategory> c,
                                                   CommaPtr<FiniteCategory> k,
                                                   std::uint64_t budget = default_budget) {
  SearchResult<CoccWitness> out;
  std::uint64_t used = 0;
  bool te_budget = false;
  auto r = for_each_psc(*c, [&](const PscTable& t) {
    auto psc = make_psc(c, t);
    auto found = search_cocc(psc, *k, {}, budget, &used);
    if (found.status == SearchStatus::BudgetExceeded) {
      te_budget = true;
      return false;
    }
    if (found.value) {
      out.value = CoccWitness{t, std::move(*found.value)};
      return false;
    }
    return true;
  }, budget);
  out.nodes = r.nodes + used;
  if (te_budget || r.status == SearchStatus::BudgetExceeded)
    out.status = SearchStatus::BudgetExceeded;
  else
    out.status = out.value ? SearchStatus::Found : SearchStatus::Absent;
  return out;
}

class StarNotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// →C (objects id_a, arrows as in C) and ~C (one formal arrow f̃ per arrow,
// labelled by B⊤(f)), with M: C -> →C, T: C -> ~C and the duality D.
struct Lifted {
  std::shared_ptr<const FiniteCategory> arrowrep, conceptrep;
  Functor<FiniteCategory, FiniteCategory> M, T, D, D_inv;
  std::vector<ObjId> label;  // B⊤(f) per arrow of ~C
  std::size_t distinct_concepts = 0;
};

inline Lifted lift_categories(const PscStructure<FiniteCategory>& s) {
  auto c = s.cat;
  for (ArrId f : c->arrows())
    for (ArrId g : c->arrows_from(c->cod(f))) {
      auto st = s.star(s.btop(g), s.btop(f));
      if (!st || *st != s.btop(c->compose(g, f)))
        throw StarNotClosed("star does not give B(" + c->name(g) + "." + c->name(f) + ")");
    }
  std::vector<std::string> arrow_objs, tilde_objs, tilde_arrs, names;
  std::vector<ObjId> dom, cod;
  std::vector<ArrId> ids;
  for (ObjId a : c->objects()) {
    arrow_objs.push_back(c->name(c->identity(a)));
    tilde_objs.push_back("~" + c->name(c->identity(a)));
    ids.push_back(c->identity(a));
  }
  std::vector<ObjId> label;
  std::set<ObjId> concepts;
  for (ArrId f : c->arrows()) {
    names.push_back(c->name(f));
    tilde_arrs.push_back("~" + c->name(f));
    dom.push_back(c->dom(f));
    cod.push_back(c->cod(f));
    label.push_back(s.btop(f));
    concepts.insert(s.btop(f));
  }
  auto comp = [&](ArrId g, ArrId f) { return c->compose(g, f); };
  auto arrowrep = std::make_shared<const FiniteCategory>(
      FiniteCategory::assemble(arrow_objs, names, dom, cod, ids, comp));
  auto conceptrep = std::make_shared<const FiniteCategory>(
      FiniteCategory::assemble(tilde_objs, tilde_arrs, dom, cod, ids, comp));
  std::vector<ObjId> obj_id(c->objects());
  std::vector<ArrId> arr_id(c->arrows());
  return {arrowrep,
          conceptrep,
          make_table_functor(c, arrowrep, obj_id, arr_id, "M"),
          make_table_functor(c, conceptrep, obj_id, arr_id, "T"),
          make_table_functor(arrowrep, conceptrep, obj_id, arr_id, "D"),
          make_table_functor(conceptrep, arrowrep, obj_id, arr_id, "D_inv"),
          std::move(label),
          concepts.size()};
}

struct HierarchyVerdict {
  Report psc, cocc, sec, imc;
  bool monotone = true;
  bool imc_internal_error = false;
  bool imc_eta_found = false;  // the two sides of the IMC cross-check
  bool imc_all_iso = false;
  std::optional<PscTable> psc_witness;
  std::optional<std::vector<ArrId>> te_witness;
};

struct ClassifyInput {
  std::optional<PscTable> psc;
  // Per square of C↓C; unset entries are searched for.
  std::vector<std::optional<ArrId>> te;
};

inline bool monotone(const HierarchyVerdict& v) {
  auto implies = [](const Report& hi, const Report& lo) { return !hi.ok() || lo.ok(); };
  return implies(v.imc, v.sec) && implies(v.sec, v.cocc) && implies(v.cocc, v.psc);
}

// Runs the layers bottom-up on given or discovered witnesses.
inline HierarchyVerdict classify(std::shared_ptr<const FiniteCategory> c,
                                 const ClassifyInput& given = {},
                                 std::uint64_t budget = default_budget, Caps caps = {}) {
  HierarchyVerdict v;
  auto below = [](std::string_view layer) {
    return Report::fail("requires-" + std::string(layer), {});
  };
  auto from_search = [&](SearchStatus st, std::string what) {
    if (st == SearchStatus::BudgetExceeded)
      return Report::with(Verdict::Budget, what + " search exceeded the budget");
    return Report::fail("no-structure", {}, "exhaustive search found no " + what + " structure");
  };

  std::optional<PscStructure<FiniteCategory>> psc;
  if (given.psc) {
    psc = make_psc(c, *given.psc);
    v.psc = check_psc(*psc);
    if (v.psc.ok()) v.psc_witness = given.psc;
  } else {
    auto r = search_psc(*c, budget);
    if (r.value) {
      psc = make_psc(c, *r.value);
      v.psc = check_psc(*psc);
      v.psc_witness = r.value;
    } else {
      v.psc = from_search(r.status, "PSC");
    }
  }
  if (!v.psc.ok()) {
    v.cocc = v.sec = v.imc = below("psc");
    v.monotone = monotone(v);
    return v;
  }

  auto k = std::make_shared<const Comma<FiniteCategory>>(c, caps);
  std::optional<CoccStructure<FiniteCategory>> cocc;
  if (given.psc || !given.te.empty()) {
    auto r = search_cocc(*psc, *k, given.te, budget);
    if (r.value) {
      cocc = make_cocc(*psc, k, *r.value);
      v.te_witness = r.value;
    } else if (r.status == SearchStatus::BudgetExceeded) {
      v.cocc = Report::with(Verdict::Budget, "T_e search exceeded the budget");
    } else {
      v.cocc = Report::fail("no-te", {}, given.te.empty()
                                             ? "no functor T_e exists for this PSC structure"
                                             : "the given T_e entries admit no functor");
    }
  } else {
    auto r = search_cocc_joint(c, k, budget);
    if (r.value) {
      psc = make_psc(c, r.value->psc);
      v.psc_witness = r.value->psc;
      cocc = make_cocc(*psc, k, r.value->te);
      v.te_witness = r.value->te;
    } else {
      v.cocc = from_search(r.status, "CoCC");
    }
  }
  if (cocc) v.cocc = check_cocc(*cocc);
  if (!cocc || !v.cocc.ok()) {
    v.sec = v.imc = below("cocc");
    v.monotone = monotone(v);
    return v;
  }
  v.sec = check_sec(*cocc);
  auto imc = check_imc(*cocc, budget);
  v.imc = imc.report;
  v.imc_internal_error = imc.internal_error;
  v.imc_eta_found = imc.eta_found;
  v.imc_all_iso = imc.all_iso;
  v.monotone = monotone(v);
  return v;
}

}  // namespace catsym
