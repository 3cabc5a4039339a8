#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "catsym/catsym.hpp"
#include "corpus.hpp"

using namespace catsym;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> fixtures() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(CATSYM_DATA_DIR))
    if (e.path().extension() == ".cat") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

ParseError parse_error(std::string_view text) {
  try {
    parse_category_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError::incomplete("none");
}

void expect_round_trip(const CategoryFile& f) {
  auto text = print_category_file(f);
  auto again = parse_category_file(text);
  EXPECT_EQ(again, f) << text;
  EXPECT_EQ(print_category_file(again), text);
}

}  // namespace

TEST(Parse, Interval) {
  auto f = parse_category_file(slurp(std::filesystem::path(CATSYM_DATA_DIR) / "interval2.cat"));
  EXPECT_EQ(f.category->object_count(), 2u);
  EXPECT_EQ(f.category->arrow_count(), 3u);
  EXPECT_FALSE(f.psc);
  EXPECT_TRUE(f.te.empty());
  auto fa = *f.category->find_arrow("f");
  EXPECT_EQ(f.category->name(f.category->dom(fa)), "a");
  EXPECT_TRUE(f.category->find_arrow("id_b"));
}

TEST(Parse, GroupAndComments) {
  auto f = parse_category_file("objects: x   # one object\r\n\n  arrow: g:x->x\ncompose: g.g=id_x\n");
  const auto& c = *f.category;
  auto g = *c.find_arrow("g");
  EXPECT_EQ(c.compose(g, g), c.identity(*c.find_object("x")));
}

TEST(Parse, DeclaredIdentityIsUsed) {
  auto f = parse_category_file("objects: a\narrow: e : a -> a\narrow: id_a : a -> a\ncompose: e . e = e\n");
  const auto& c = *f.category;
  EXPECT_EQ(c.arrow_count(), 2u);
  EXPECT_EQ(c.identity(ObjId(0)), *c.find_arrow("id_a"));
}

TEST(ParseErrors, UnknownName) {
  auto e = parse_error("objects: a b\narrow: f : a -> b\ncompose: f . id_a = h\n");
  EXPECT_EQ(e.kind(), ParseError::Kind::UnknownName);
  EXPECT_EQ(e.name(), "h");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(parse_error("objects: a\narrow: f : a -> c\n").name(), "c");
  EXPECT_EQ(parse_error("objects: a\npsc.iso: a = q\n").kind(), ParseError::Kind::UnknownName);
}

TEST(ParseErrors, Syntax) {
  auto e = parse_error("objects: a b\narrow: f a -> b\n");
  EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 10u);
  EXPECT_EQ(e.expected(), "':'");
  EXPECT_EQ(parse_error("objects:\n").expected(), "a name");
  EXPECT_EQ(parse_error("morphism: f\n").column(), 1u);
  EXPECT_EQ(parse_error("objects: a\narrow: f : a -> a extra\n").expected(), "end of line");
  EXPECT_EQ(parse_error("objects: a\ncompose: f . f = \n").kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_error("objects a\n").kind(), ParseError::Kind::Syntax);
}

TEST(ParseErrors, Duplicates) {
  for (std::string_view text :
       {"objects: a a\n", "objects: a\nobjects: a\n",
        "objects: a\narrow: f : a -> a\narrow: f : a -> a\n",
        "objects: a b\narrow: id_a : a -> b\n",
        "objects: a\narrow: e : a -> a\ncompose: e . e = e\ncompose: e . e = e\n",
        "objects: a\npsc.btop: id_a -> a\npsc.btop: id_a -> a\n"}) {
    EXPECT_EQ(parse_error(text).kind(), ParseError::Kind::Duplicate) << text;
  }
}

TEST(ParseErrors, IncompletePscAndAxioms) {
  EXPECT_EQ(parse_error("objects: a\npsc.btop: id_a -> a\n").kind(), ParseError::Kind::Incomplete);
  // Well-formed syntax, but the table breaks the axioms.
  EXPECT_THROW(parse_category_file("objects: a\narrow: e : a -> a\n"), CategoryError);
  EXPECT_THROW(parse_category_file("objects: a b\narrow: f : a -> b\ncompose: f . f = f\n"),
               CategoryError);
}

TEST(Te, ExpansionAndPinning) {
  auto f = parse_category_file(slurp(std::filesystem::path(CATSYM_DATA_DIR) / "group2_structured.cat"));
  ASSERT_TRUE(f.psc);
  EXPECT_EQ(f.te.size(), 3u);  // two identity squares and one diagonal
  auto k = Comma<FiniteCategory>(f.category);
  auto entries = te_entries(f, k);
  ASSERT_EQ(entries.size(), k.arrows().size());
  std::size_t set = 0;
  for (const auto& e : entries) set += e.has_value();
  EXPECT_EQ(set, 3u);
  EXPECT_EQ(parse_error("objects: a b\narrow: f : a -> b\ncocc.te: (f;f) @ f => f -> f\n").kind(),
            ParseError::Kind::UnknownName);
  EXPECT_EQ(parse_error("objects: a\ncocc.te: (id_a;id_a) -> id_a\ncocc.te: (id_a;id_a) -> id_a\n").kind(),
            ParseError::Kind::Duplicate);
}

TEST(RoundTrip, BundledFixtures) {
  auto files = fixtures();
  ASSERT_GE(files.size(), 4u);
  for (const auto& p : files) {
    SCOPED_TRACE(p.string());
    expect_round_trip(parse_category_file(slurp(p)));
  }
}

TEST(RoundTrip, Levels) {
  for (const auto& p : fixtures()) {
    LevelTower t(parse_category_file(slurp(p)).category);
    for (std::size_t n = 2; n <= 3; ++n) {
      auto c = t.level(n);
      auto parsed = parse_category_file(print_category(c));
      EXPECT_EQ(*parsed.category, *c) << p << " level " << n;
    }
  }
}

TEST(RoundTrip, CorpusWithShuffledNames) {
  std::mt19937 rng(11);
  const std::string alphabet = "abcxyz_01[]|";
  auto cats = corpus::valid_categories();
  ASSERT_EQ(cats.size(), 664u);
  for (const auto& c : cats) {
    auto raw = c.to_raw();
    std::set<std::string> used;
    auto fresh = [&] {
      std::string s;
      do {
        s.clear();
        std::size_t len = 1 + rng() % 4;
        for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
      } while (!used.insert(s).second || s.rfind("id_", 0) == 0);
      return s;
    };
    for (auto& o : raw.objects) o = fresh();
    for (std::size_t a = 0; a < raw.objects.size(); ++a)
      raw.arrows[raw.identities[a]].name = "id_" + raw.objects[a];
    for (std::size_t i = 0; i < raw.arrows.size(); ++i)
      if (std::find(raw.identities.begin(), raw.identities.end(), i) == raw.identities.end())
        raw.arrows[i].name = fresh();
    CategoryFile f{std::make_shared<const FiniteCategory>(validate_category(raw)), std::nullopt, {}};
    // The empty category has an empty PSC table, which the format cannot tell
    // apart from no table.
    if (auto r = search_psc(*f.category); r.value && c.object_count()) f.psc = r.value;
    expect_round_trip(f);
  }
}

TEST(Print, RejectsUnprintable) {
  auto raw = RawCategory{{"a b"}, {{"id_a b", 0, 0}}, {0}, {}};
  EXPECT_THROW(print_category(std::make_shared<const FiniteCategory>(validate_category(raw))),
               std::invalid_argument);
  raw = RawCategory{{"a"}, {{"e", 0, 0}}, {0}, {}};
  EXPECT_THROW(print_category(std::make_shared<const FiniteCategory>(validate_category(raw))),
               std::invalid_argument);
}

TEST(Digest, Fnv1aVectors) {
  EXPECT_EQ(digest_hex(""), "cbf29ce484222325");
  EXPECT_EQ(digest_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(digest_hex("foobar"), "85944171f73967e8");
}
