#pragma once

// The line-oriented category description format: parser, canonical
// printer and the FNV-1a input digest.
//
//   objects: a b
//   arrow: f : a -> b          # id_<obj> is generated unless declared
//   compose: g . f = h
//   psc.btop: f -> a
//   psc.star: a * b = c
//   psc.iso: a = is_a
//   cocc.te: (h1;h2) -> k      # every square with these components
//   cocc.te: (h1;h2) @ f => g -> k

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catsym/category.hpp"
#include "catsym/comma.hpp"
#include "catsym/symmetry.hpp"

namespace catsym {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownName, Duplicate, Incomplete };

  static ParseError syntax(std::size_t line, std::size_t col, std::string expected) {
    return {Kind::Syntax, line, col, {}, expected,
            "SyntaxError(line " + std::to_string(line) + ", col " + std::to_string(col) +
                ", expected " + expected + ")"};
  }
  static ParseError unknown(std::string name, std::size_t line) {
    return {Kind::UnknownName, line, 0, name, {},
            "UnknownName(" + name + ", line " + std::to_string(line) + ")"};
  }
  static ParseError duplicate(std::string name, std::size_t line) {
    return {Kind::Duplicate, line, 0, name, {},
            "DuplicateDefinition(" + name + ", line " + std::to_string(line) + ")"};
  }
  static ParseError incomplete(std::string what) {
    return {Kind::Incomplete, 0, 0, what, {}, "Incomplete(" + what + ")"};
  }

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }
  const std::string& name() const { return name_; }
  const std::string& expected() const { return expected_; }

 private:
  ParseError(Kind k, std::size_t line, std::size_t col, std::string name,
             std::string expected, const std::string& msg)
      : std::runtime_error(msg),
        kind_(k),
        line_(line),
        col_(col),
        name_(std::move(name)),
        expected_(std::move(expected)) {}

  Kind kind_;
  std::size_t line_, col_;
  std::string name_, expected_;
};

struct CategoryFile {
  std::shared_ptr<const FiniteCategory> category;
  std::optional<PscTable> psc;
  std::map<CommaSquare<ArrId>, ArrId> te;

  friend bool operator==(const CategoryFile& a, const CategoryFile& b) {
    return *a.category == *b.category && a.psc == b.psc && a.te == b.te;
  }
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string digest_hex(std::string_view s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return buf;
}

inline bool is_name_char(char ch) {
  auto c = static_cast<unsigned char>(ch);
  if (c >= 0x80 || std::isalnum(c)) return true;
  return std::string_view("_[]|,'~!?+^$%&/{}").find(ch) != std::string_view::npos;
}

inline bool is_valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

namespace detail {

struct Token {
  enum Kind { Name, Punct, End } kind = End;
  std::string text;
  std::size_t col = 0;
};

class LineLexer {
 public:
  LineLexer(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  // The statement keyword, e.g. "psc.btop", up to and including ':'.
  std::string keyword() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      ++pos_;
    std::string kw(s_.substr(start, pos_ - start));
    skip();
    if (kw.empty() || pos_ >= s_.size() || s_[pos_] != ':')
      throw ParseError::syntax(line_, start + 1, "a statement keyword followed by ':'");
    ++pos_;
    return kw;
  }

  Token next() {
    skip();
    Token t;
    t.col = pos_ + 1;
    if (pos_ >= s_.size()) return t;
    if (is_name_char(s_[pos_])) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
      t.kind = Token::Name;
      t.text = s_.substr(start, pos_ - start);
      return t;
    }
    for (std::string_view p : {"->", "=>", ":", ".", "=", "*", "(", ")", ";", "@"})
      if (s_.substr(pos_, p.size()) == p) {
        pos_ += p.size();
        t.kind = Token::Punct;
        t.text = p;
        return t;
      }
    throw ParseError::syntax(line_, pos_ + 1, "a name or punctuation");
  }

  Token peek() {
    auto save = pos_;
    auto t = next();
    pos_ = save;
    return t;
  }

  std::pair<std::string, std::size_t> name() {
    auto t = next();
    if (t.kind != Token::Name) throw ParseError::syntax(line_, t.col, "a name");
    return {t.text, t.col};
  }
  void punct(std::string_view p) {
    auto t = next();
    if (t.kind != Token::Punct || t.text != p)
      throw ParseError::syntax(line_, t.col, "'" + std::string(p) + "'");
  }
  void end() {
    auto t = next();
    if (t.kind != Token::End) throw ParseError::syntax(line_, t.col, "end of line");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Statement {
  std::string keyword;
  std::vector<std::string> names;
  std::size_t line = 0;
};

}  // namespace detail

inline CategoryFile parse_category_file(std::string_view text) {
  using detail::Statement;
  std::vector<Statement> stmts;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto nl = text.find('\n', begin);
    auto line = text.substr(begin, nl == std::string_view::npos ? std::string_view::npos : nl - begin);
    begin = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    detail::LineLexer lx(line, line_no);
    Statement st;
    st.line = line_no;
    st.keyword = lx.keyword();
    auto name = [&] { st.names.push_back(lx.name().first); };
    if (st.keyword == "objects") {
      name();
      while (lx.peek().kind == detail::Token::Name) name();
    } else if (st.keyword == "arrow") {
      name(), lx.punct(":"), name(), lx.punct("->"), name();
    } else if (st.keyword == "compose") {
      name(), lx.punct("."), name(), lx.punct("="), name();
    } else if (st.keyword == "psc.btop") {
      name(), lx.punct("->"), name();
    } else if (st.keyword == "psc.star") {
      name(), lx.punct("*"), name(), lx.punct("="), name();
    } else if (st.keyword == "psc.iso") {
      name(), lx.punct("="), name();
    } else if (st.keyword == "cocc.te") {
      lx.punct("("), name(), lx.punct(";"), name(), lx.punct(")");
      if (auto t = lx.peek(); t.kind == detail::Token::Punct && t.text == "@") {
        lx.punct("@"), name(), lx.punct("=>"), name();
      }
      lx.punct("->"), name();
    } else {
      throw ParseError::syntax(line_no, 1, "one of objects, arrow, compose, psc.*, cocc.te");
    }
    lx.end();
    stmts.push_back(std::move(st));
  }

  RawCategory raw;
  std::unordered_map<std::string, std::size_t> obj_index, arr_index;
  for (const auto& st : stmts)
    if (st.keyword == "objects")
      for (const auto& n : st.names) {
        if (!obj_index.emplace(n, raw.objects.size()).second) throw ParseError::duplicate(n, st.line);
        raw.objects.push_back(n);
      }
  auto object = [&](const std::string& n, std::size_t line) {
    auto it = obj_index.find(n);
    if (it == obj_index.end()) throw ParseError::unknown(n, line);
    return it->second;
  };

  // Generated identities come first, in object order.
  std::map<std::string, std::size_t> declared;  // name -> line
  for (const auto& st : stmts)
    if (st.keyword == "arrow") {
      if (!declared.emplace(st.names[0], st.line).second)
        throw ParseError::duplicate(st.names[0], st.line);
    }
  raw.identities.assign(raw.objects.size(), 0);
  for (std::size_t a = 0; a < raw.objects.size(); ++a) {
    std::string id = "id_" + raw.objects[a];
    if (declared.count(id)) continue;
    raw.identities[a] = raw.arrows.size();
    arr_index.emplace(id, raw.arrows.size());
    raw.arrows.push_back({id, a, a});
  }
  for (const auto& st : stmts)
    if (st.keyword == "arrow") {
      const auto& n = st.names[0];
      if (arr_index.count(n)) throw ParseError::duplicate(n, st.line);
      auto d = object(st.names[1], st.line), c = object(st.names[2], st.line);
      arr_index.emplace(n, raw.arrows.size());
      raw.arrows.push_back({n, d, c});
    }
  for (std::size_t a = 0; a < raw.objects.size(); ++a) {
    std::string id = "id_" + raw.objects[a];
    if (!declared.count(id)) continue;
    auto i = arr_index.at(id);
    // A mistyped id_<obj> clashes with the generated identity.
    if (raw.arrows[i].dom != a || raw.arrows[i].cod != a)
      throw ParseError::duplicate(id, declared.at(id));
    raw.identities[a] = i;
  }
  auto arrow = [&](const std::string& n, std::size_t line) {
    auto it = arr_index.find(n);
    if (it == arr_index.end()) throw ParseError::unknown(n, line);
    return it->second;
  };

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& st : stmts)
    if (st.keyword == "compose") {
      auto g = arrow(st.names[0], st.line), f = arrow(st.names[1], st.line);
      auto h = arrow(st.names[2], st.line);
      if (!seen.insert({g, f}).second)
        throw ParseError::duplicate(st.names[0] + " . " + st.names[1], st.line);
      raw.composites.push_back({g, f, h});
    }

  CategoryFile out;
  out.category = std::make_shared<const FiniteCategory>(validate_category(raw));
  const auto& c = *out.category;

  bool has_psc = false;
  PscTable t;
  std::vector<bool> btop_set(raw.arrows.size()), iso_set(raw.objects.size());
  t.btop.assign(raw.arrows.size(), ObjId(0));
  t.iso.assign(raw.objects.size(), ArrId(0));
  for (const auto& st : stmts) {
    if (st.keyword == "psc.btop") {
      auto f = arrow(st.names[0], st.line);
      if (btop_set[f]) throw ParseError::duplicate("psc.btop " + st.names[0], st.line);
      btop_set[f] = true;
      t.btop[f] = ObjId(object(st.names[1], st.line));
    } else if (st.keyword == "psc.star") {
      std::pair key{ObjId(object(st.names[0], st.line)), ObjId(object(st.names[1], st.line))};
      if (!t.star.emplace(key, ObjId(object(st.names[2], st.line))).second)
        throw ParseError::duplicate("psc.star " + st.names[0] + " * " + st.names[1], st.line);
    } else if (st.keyword == "psc.iso") {
      auto a = object(st.names[0], st.line);
      if (iso_set[a]) throw ParseError::duplicate("psc.iso " + st.names[0], st.line);
      iso_set[a] = true;
      t.iso[a] = ArrId(arrow(st.names[1], st.line));
    } else {
      continue;
    }
    has_psc = true;
  }
  if (has_psc) {
    for (std::size_t i = 0; i < btop_set.size(); ++i)
      if (!btop_set[i]) throw ParseError::incomplete("psc.btop " + raw.arrows[i].name);
    for (std::size_t i = 0; i < iso_set.size(); ++i)
      if (!iso_set[i]) throw ParseError::incomplete("psc.iso " + raw.objects[i]);
    out.psc = std::move(t);
  }

  for (const auto& st : stmts) {
    if (st.keyword != "cocc.te") continue;
    bool pinned = st.names.size() == 5;
    ArrId h1(arrow(st.names[0], st.line)), h2(arrow(st.names[1], st.line));
    ArrId k(arrow(st.names.back(), st.line));
    std::vector<CommaSquare<ArrId>> squares;
    auto consider = [&](ArrId f, ArrId g) {
      if (c.dom(f) == c.dom(h1) && c.cod(f) == c.dom(h2) &&
          c.dom(g) == c.cod(h1) && c.cod(g) == c.cod(h2) && c.compose(g, h1) == c.compose(h2, f))
        squares.push_back({f, g, h1, h2});
    };
    if (pinned) {
      consider(ArrId(arrow(st.names[2], st.line)), ArrId(arrow(st.names[3], st.line)));
    } else {
      for (ArrId f : c.hom(c.dom(h1), c.dom(h2)))
        for (ArrId g : c.hom(c.cod(h1), c.cod(h2))) consider(f, g);
    }
    std::string label = "(" + st.names[0] + ";" + st.names[1] + ")";
    if (pinned) label += " @ " + st.names[2] + " => " + st.names[3];
    if (squares.empty()) throw ParseError::unknown(label, st.line);
    for (const auto& s : squares)
      if (!out.te.emplace(s, k).second) throw ParseError::duplicate("cocc.te " + label, st.line);
  }
  return out;
}

struct PrintOptions {
  std::vector<std::string> header;  // emitted as leading comments
  std::function<std::string(ObjId)> object_note;
  std::function<std::string(ArrId)> arrow_note;
};

// Canonical form: objects in order, then arrows (generated identities are
// left implicit when they lead the arrow list), every composite of two
// non-identities, PSC and T_e entries. parse_category_file inverts it.
inline std::string print_category_file(const CategoryFile& file, const PrintOptions& opt = {}) {
  const auto& c = *file.category;
  for (ObjId a : c.objects())
    if (!is_valid_name(c.name(a))) throw std::invalid_argument("unprintable name: " + c.name(a));
  for (ArrId f : c.arrows())
    if (!is_valid_name(c.name(f))) throw std::invalid_argument("unprintable name: " + c.name(f));
  for (ObjId a : c.objects())
    if (c.name(c.identity(a)) != "id_" + c.name(a))
      throw std::invalid_argument("identity of " + c.name(a) + " is not named id_" + c.name(a));

  std::ostringstream os;
  for (const auto& h : opt.header) os << "# " << h << "\n";
  auto note = [&](const auto& fn, auto x) {
    if (fn) {
      auto s = fn(x);
      if (!s.empty()) os << "  # " << s;
    }
    os << "\n";
  };
  if (opt.object_note) {
    for (ObjId a : c.objects()) {
      os << "objects: " << c.name(a);
      note(opt.object_note, a);
    }
  } else if (c.object_count()) {
    os << "objects:";
    for (ObjId a : c.objects()) os << " " << c.name(a);
    os << "\n";
  }
  bool implicit = c.arrow_count() >= c.object_count();
  for (ObjId a : c.objects()) implicit = implicit && c.identity(a) == ArrId(a.index());
  for (ArrId f : c.arrows()) {
    if (implicit && f.index() < c.object_count()) continue;
    os << "arrow: " << c.name(f) << " : " << c.name(c.dom(f)) << " -> " << c.name(c.cod(f));
    note(opt.arrow_note, f);
  }
  for (ArrId f : c.arrows()) {
    if (c.is_identity(f)) continue;
    for (ArrId g : c.arrows_from(c.cod(f)))
      if (!c.is_identity(g))
        os << "compose: " << c.name(g) << " . " << c.name(f) << " = " << c.name(c.compose(g, f))
           << "\n";
  }
  if (file.psc) {
    const auto& t = *file.psc;
    for (ArrId f : c.arrows())
      os << "psc.btop: " << c.name(f) << " -> " << c.name(t.btop[f.index()]) << "\n";
    for (const auto& [xy, z] : t.star)
      os << "psc.star: " << c.name(xy.first) << " * " << c.name(xy.second) << " = " << c.name(z)
         << "\n";
    for (ObjId a : c.objects())
      os << "psc.iso: " << c.name(a) << " = " << c.name(t.iso[a.index()]) << "\n";
  }
  for (const auto& [s, k] : file.te)
    os << "cocc.te: (" << c.name(s.h1) << ";" << c.name(s.h2) << ") @ " << c.name(s.src)
       << " => " << c.name(s.dst) << " -> " << c.name(k) << "\n";
  return os.str();
}

inline std::string print_category(std::shared_ptr<const FiniteCategory> c,
                                  const PrintOptions& opt = {}) {
  return print_category_file(CategoryFile{std::move(c), std::nullopt, {}}, opt);
}

// T_e entries in the square order of a comma category, for ClassifyInput.
inline std::vector<std::optional<ArrId>> te_entries(const CategoryFile& file,
                                                    const Comma<FiniteCategory>& k) {
  if (file.te.empty()) return {};
  std::vector<std::optional<ArrId>> out(k.arrows().size());
  for (const auto& [s, v] : file.te)
    if (auto i = k.index_of(s)) out[*i] = v;
  return out;
}

}  // namespace catsym
