#include "lpg/lpfile.hpp"

#include <cctype>
#include <set>

namespace lpg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  [[noreturn]] void fail(const std::string& msg) const { throw LpParseError(msg, line_, col_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t line, std::size_t col) const {
    throw LpParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_arrow() {
    skip();
    if (s_.substr(pos_, 2) == "->") {
      advance();
      advance();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      fail("expected identifier");
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) advance();
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      advance();
      skip();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000) fail("exponent too large");
      v = v * 10 + (s_[pos_] - '0');
      advance();
    }
    return neg ? -v : v;
  }

  // word := term ('*' term)*
  FreeWord word(const Alphabet& X) {
    FreeWord w = term(X);
    while (accept('*')) w = w * term(X);
    return w;
  }

  std::vector<FreeWord> word_list(const Alphabet& X) {
    std::vector<FreeWord> out;
    if (peek() == ';') return out;
    out.push_back(word(X));
    while (accept(',')) out.push_back(word(X));
    return out;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }
  std::size_t pos() const { return pos_; }
  void rewind(std::size_t pos, std::size_t line, std::size_t col) {
    pos_ = pos;
    line_ = line;
    col_ = col;
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // term := factor ('^' (integer | generator | '(' word ')'))*
  FreeWord term(const Alphabet& X) {
    FreeWord w = factor(X);
    while (accept('^')) {
      if (accept('(')) {
        FreeWord v = word(X);
        expect(')');
        w = conjugate(w, v);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        w = conjugate(w, factor(X));
      } else {
        w = power(w, integer());
      }
    }
    return w;
  }

  FreeWord factor(const Alphabet& X) {
    char c = peek();
    if (c == '(') {
      advance();
      FreeWord w = word(X);
      expect(')');
      return w;
    }
    if (c == '[') {
      advance();
      FreeWord u = word(X);
      expect(',');
      FreeWord v = word(X);
      expect(']');
      return commutator(u, v);
    }
    if (c == '1') {
      advance();
      return FreeWord(X.size());
    }
    std::size_t l = line_, col = col_;
    std::string name = identifier();
    auto idx = X.index_of(name);
    if (!idx) fail_at("unknown generator '" + name + "'", l, col);
    return FreeWord::generator(X.size(), *idx);
  }

  std::string_view s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace

LPresentation parse_lp(std::string_view text) {
  Parser p(text);
  std::string kw = p.identifier();
  if (kw != "gens") p.fail("expected 'gens'");
  p.expect(':');
  std::vector<std::string> names;
  std::set<std::string> seen;
  if (p.peek() != ';') {
    do {
      std::size_t l = p.line(), c = p.column();
      std::string n = p.identifier();
      if (!seen.insert(n).second) p.fail_at("duplicate generator '" + n + "'", l, c);
      names.push_back(n);
    } while (p.accept(','));
  }
  p.expect(';');
  Alphabet X(names);
  const std::size_t rank = X.size();
  std::vector<FreeWord> Q, R;
  std::vector<Substitution> subs;
  std::set<std::string> sub_names;
  bool invariant = false;
  while (!p.at_end()) {
    std::size_t l = p.line(), c = p.column();
    std::string key = p.identifier();
    if (key == "Q") {
      p.expect(':');
      auto ws = p.word_list(X);
      Q.insert(Q.end(), ws.begin(), ws.end());
    } else if (key == "R") {
      p.expect(':');
      auto ws = p.word_list(X);
      R.insert(R.end(), ws.begin(), ws.end());
    } else if (key == "phi") {
      std::size_t nl = p.line(), nc = p.column();
      std::string name = p.identifier();
      if (!sub_names.insert(name).second) p.fail_at("duplicate substitution '" + name + "'", nl, nc);
      p.expect(':');
      std::vector<FreeWord> images;
      for (std::size_t i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, static_cast<int>(i)));
      std::vector<char> set(rank, 0);
      if (p.peek() != ';') {
        do {
          std::size_t gl = p.line(), gc = p.column();
          std::string g = p.identifier();
          auto idx = X.index_of(g);
          if (!idx) p.fail_at("unknown generator '" + g + "'", gl, gc);
          if (set[static_cast<std::size_t>(*idx - 1)]) p.fail_at("generator '" + g + "' mapped twice", gl, gc);
          set[static_cast<std::size_t>(*idx - 1)] = 1;
          if (!p.accept_arrow()) p.fail("expected '->'");
          images[static_cast<std::size_t>(*idx - 1)] = p.word(X);
        } while (p.accept(','));
      }
      subs.push_back({name, FreeEndomorphism(std::move(images))});
    } else if (key == "flags") {
      p.expect(':');
      if (p.peek() != ';') {
        do {
          std::size_t fl = p.line(), fc = p.column();
          std::string f = p.identifier();
          if (f == "invariant")
            invariant = true;
          else
            p.fail_at("unknown flag '" + f + "'", fl, fc);
        } while (p.accept(','));
      }
    } else if (key == "gens") {
      p.fail_at("duplicate 'gens' statement", l, c);
    } else {
      p.fail_at("unknown statement '" + key + "'", l, c);
    }
    p.expect(';');
  }
  return LPresentation(std::move(X), std::move(Q), std::move(subs), std::move(R), invariant);
}

FreeWord parse_word(std::string_view text, const Alphabet& alphabet) {
  Parser p(text);
  FreeWord w = p.word(alphabet);
  if (!p.at_end()) p.fail("trailing input");
  return w;
}

std::vector<FreeWord> parse_word_list(std::string_view text, const Alphabet& alphabet) {
  Parser p(text);
  std::vector<FreeWord> out;
  if (p.at_end()) return out;
  out.push_back(p.word(alphabet));
  while (p.accept(',')) out.push_back(p.word(alphabet));
  if (!p.at_end()) p.fail("trailing input");
  return out;
}

namespace {

void print_list(std::string& out, const char* key, const std::vector<FreeWord>& ws, const Alphabet& X) {
  out += key;
  out += ":";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    out += i ? ",\n   " : " ";
    out += to_string(ws[i], X);
  }
  out += ";\n";
}

}  // namespace

std::string print_lp(const LPresentation& L) {
  const Alphabet& X = L.alphabet();
  std::string out = "gens:";
  for (std::size_t i = 1; i <= X.size(); ++i) out += (i > 1 ? ", " : " ") + X.name(i);
  out += ";\n";
  if (!L.fixed_relators().empty()) print_list(out, "Q", L.fixed_relators(), X);
  for (const auto& s : L.substitutions()) {
    out += "phi " + s.name + ":";
    for (std::size_t i = 1; i <= X.size(); ++i)
      out += (i > 1 ? ", " : " ") + X.name(i) + " -> " + to_string(s.map.image(static_cast<int>(i)), X);
    out += ";\n";
  }
  if (!L.iterated_relators().empty()) print_list(out, "R", L.iterated_relators(), X);
  if (L.invariant() && !L.ascending()) out += "flags: invariant;\n";
  return out;
}

}  // namespace lpg
