#include <gtest/gtest.h>

#include <set>

#include "catsym/finset.hpp"

using namespace catsym;
using namespace catsym::finset;

namespace {

Value ints(std::initializer_list<int> xs) {
  std::vector<Value> v;
  for (int x : xs) v.push_back(Value::integer(x));
  return Value::set(v);
}

Value pairs(std::initializer_list<std::pair<Value, Value>> xs) {
  std::vector<Value> v;
  for (auto [a, b] : xs) v.push_back(Value::pair(a, b));
  return Value::set(v);
}

Value I(int n) { return Value::integer(n); }

// Relational composition written out over explicit pair lists.
std::set<std::pair<std::uint32_t, std::uint32_t>> compose_pairs(Value r, Value s) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (auto p : s.elements())
    for (auto q : r.elements())
      if (p.second() == q.first()) out.insert({p.first().id(), q.second().id()});
  return out;
}

}  // namespace

TEST(Values, HashConsingAndOrder) {
  EXPECT_EQ(ints({1, 0}), ints({0, 1, 1}));
  EXPECT_EQ(Value::pair(I(0), I(1)), Value::pair(I(0), I(1)));
  EXPECT_NE(Value::pair(I(0), I(1)), Value::pair(I(1), I(0)));
  EXPECT_LT(I(3), Value::pair(I(0), I(0)));
  EXPECT_LT(ints({0}), ints({0, 1}));
  EXPECT_LT(ints({0, 1}), ints({1}));
  EXPECT_EQ(ints({0, 1}).str(), "{0,1}");
  EXPECT_EQ(pairs({{I(0), I(1)}}).str(), "{(0,1)}");
}

TEST(Values, Surjections) {
  EXPECT_EQ(surjections(ints({0, 1}), ints({0})).size(), 1u);
  EXPECT_EQ(surjections(ints({0, 1, 2}), ints({0, 1})).size(), 6u);
  EXPECT_EQ(surjections(ints({0}), ints({0, 1})).size(), 0u);
  EXPECT_EQ(surjections(Value::set({}), Value::set({})).size(), 1u);
  EXPECT_EQ(surjections(Value::set({}), ints({0})).size(), 0u);
}

TEST(Universe, Sizes) {
  FinSetCategory c0(0);
  EXPECT_EQ(c0.objects().size(), 1u);
  EXPECT_EQ(c0.arrows().size(), 1u);
  FinSetCategory c1(1);
  // ∅, {0}, {(0,0)}
  EXPECT_EQ(c1.objects().size(), 3u);
  for (const auto& f : c1.arrows()) EXPECT_TRUE(f.bijective());
  FinSetCategory c2(2);
  EXPECT_EQ(c2.objects().size(), 12u);
  EXPECT_EQ(c2.arrows().size(), 117u);
  for (std::size_t i = 1; i < c2.arrows().size(); ++i)
    EXPECT_LT(c2.arrows()[i - 1], c2.arrows()[i]);
}

TEST(Graphs, Btop) {
  EXPECT_EQ(graph(Fn::identity(ints({0, 1}))), pairs({{I(0), I(0)}, {I(1), I(1)}}));
  auto f = Fn::from(ints({0, 1}), ints({1}), [](Value) { return I(1); });
  EXPECT_EQ(graph(f), pairs({{I(0), I(1)}, {I(1), I(1)}}));
}

TEST(Graphs, StarRelational) {
  FinSetCategory c(2);
  for (const auto& f : c.arrows())
    for (const auto& g : c.arrows_from(f.cod)) {
      auto st = star_relational(graph(g), graph(f));
      ASSERT_TRUE(st);
      EXPECT_EQ(*st, graph(c.compose(g, f)));
      std::set<std::pair<std::uint32_t, std::uint32_t>> got;
      for (auto p : st->elements()) got.insert({p.first().id(), p.second().id()});
      EXPECT_EQ(got, compose_pairs(graph(g), graph(f)));
    }
  auto a = ints({0, 1});
  auto f = Fn::from(ints({0, 1}), a, [](Value x) { return x; });
  EXPECT_EQ(*star_relational(diag(a), graph(f)), graph(f));
  EXPECT_EQ(*star_relational(Value::set({}), graph(f)), Value::set({}));
  EXPECT_FALSE(star_relational(a, graph(f)));
}

TEST(TeApply, IdentityDiagonalAndErrors) {
  FinSetCategory c(2);
  for (const auto& f : c.arrows()) {
    FinSquare id{f, f, c.identity(f.dom), c.identity(f.cod)};
    EXPECT_EQ(te_apply(c, id), c.identity(graph(f)));
    auto ida = c.identity(f.dom), idb = c.identity(f.cod);
    auto pair_map = te_apply(c, FinSquare{ida, idb, f, f});
    for (auto x : f.dom.elements())
      EXPECT_EQ(pair_map(Value::pair(x, x)), Value::pair(f(x), f(x)));
  }
  auto swap = Fn::from(ints({0, 1}), ints({0, 1}), [](Value x) { return I(1 - x.as_int()); });
  auto id = c.identity(ints({0, 1}));
  EXPECT_THROW(te_apply(c, FinSquare{id, id, swap, id}), NonCommutingSquare);
}

TEST(Model, ClaimsOnGroundTwo) {
  auto m = build_model(2);
  ASSERT_TRUE(m.exhaustive);
  auto claims = check_set_claims(m);
  for (auto [name, r] : claims.items()) EXPECT_TRUE(r->ok()) << name << ": " << r->summary();
  EXPECT_GT(claims.squares_checked, 1000u);
}

TEST(Model, GroundZeroAndOne) {
  auto m0 = check_set_claims(build_model(0));
  for (auto* r : {&m0.psc, &m0.cocc, &m0.sec, &m0.derived, &m0.rho, &m0.adjunction})
    EXPECT_TRUE(r->ok()) << r->summary();
  auto m1 = check_set_claims(build_model(1));
  for (auto* r : {&m1.psc, &m1.cocc, &m1.sec, &m1.derived, &m1.rho, &m1.adjunction})
    EXPECT_TRUE(r->ok()) << r->summary();
  // Surjections between at most one-element sets are bijections.
  EXPECT_FALSE(m1.imc_fails.ok());
}

TEST(Model, SampledGroundThree) {
  auto m = build_model(3);
  ASSERT_FALSE(m.exhaustive);
  auto claims = check_set_claims_sampled(m, 1000, 7);
  for (auto [name, r] : claims.items()) EXPECT_TRUE(r->ok()) << name << ": " << r->summary();
  EXPECT_GE(claims.squares_checked, 1000u);
}

TEST(Model, TauAndSecElementwise) {
  auto m = build_model(2);
  auto [tau, tau_inv] = derive_tau(m.cocc);
  for (const auto& f : m.cat->arrows()) {
    for (auto x : f.dom.elements()) EXPECT_EQ(tau.at(f)(x), Value::pair(x, f(x)));
    EXPECT_EQ(m.cat->compose(tau_inv.at(f), tau.at(f)), f);
    EXPECT_EQ(derived_arrow(m.cocc, f), f);
  }
}

TEST(Model, TwistedMutant) {
  auto m = build_model(2);
  // Replace T_e on one diagonal square (f;f) by a different map f̃ -> g̃
  // that is only isomorphic to the closure.
  const auto& c = *m.cat;
  std::optional<FinSquare> target;
  std::optional<Fn> other;
  for (const auto& f : c.arrows()) {
    if (f.dom.size() != 2 || f.cod.size() != 2 || f.dom != f.cod) continue;
    FinSquare sq{c.identity(f.dom), c.identity(f.cod), f, f};
    auto closed = te_apply(c, sq);
    for (const auto& h : c.hom(graph(sq.src), graph(sq.dst)))
      if (h != closed) {
        target = sq;
        other = h;
        break;
      }
    if (target) break;
  }
  ASSERT_TRUE(target);
  auto mutant = m;
  auto old = m.cocc.te;
  mutant.cocc.te.on_arrow = [old, t = *target, o = *other](const FinSquare& s) {
    return s == t ? o : old.arr(s);
  };
  mutant.cocc = make_cocc(mutant.psc, mutant.comma, mutant.cocc.te);
  auto sec = check_sec(mutant.cocc);
  EXPECT_EQ(sec.verdict, Verdict::Fail);
  EXPECT_FALSE(check_cocc(mutant.cocc).ok());
}

TEST(Internal, EOnFinSet) {
  auto m = build_model(2);
  auto e = build_E(m);
  auto a = ints({0, 1});
  EXPECT_EQ(e.obj(a), pairs({{I(0), I(0)}, {I(1), I(1)}}));
  EXPECT_EQ(act(IcsElement{2}, e, a), diag(diag(a)));
  auto o = orbit(e, a, 2);
  ASSERT_EQ(o.elements.size(), 3u);
  EXPECT_EQ(o.elements[1], diag(a));
  EXPECT_EQ(o.elements[2], diag(diag(a)));
  EXPECT_FALSE(o.cycle);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(is_isomorphism(*m.cat, o.witnesses[i]));
    EXPECT_FALSE(find_isomorphisms(*m.cat, a, o.elements[i + 1]).empty());
  }
  EXPECT_TRUE(check_internal_adjunction(e).ok()) << check_internal_adjunction(e).summary();
  for (const auto& f : m.cat->arrows()) {
    auto f1 = e.arr(f);
    for (auto x : f.dom.elements()) EXPECT_EQ(f1(Value::pair(x, x)), Value::pair(f(x), f(x)));
  }
}

TEST(Internal, TransformDiagramOnGroundThree) {
  auto m = build_model(3);
  auto e = build_E(m);
  const auto& c = *m.cat;
  std::size_t n = 0;
  for (const auto& g : c.arrows()) {
    if (!(g.dom.is_set() && g.dom.size() <= 3)) continue;
    for (const auto& h : c.arrows_from(g.cod)) {
      auto [g1, h1, f1] = transform_diagram(e, g, h, c.compose(h, g));
      EXPECT_EQ(c.compose(h1, g1), f1);
      ++n;
    }
    if (n > 20000) break;
  }
  EXPECT_GT(n, 0u);
}
