#include "boalch/parser.hpp"

#include <cctype>
#include <set>

namespace boalch {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ColoredQuiver& q) : text_(text), q_(q) {
    for (int s = 1; s <= q.n; ++s) alphabet_.insert(GenSymbol::idem(s));
    for (const auto& g : double_quiver(q)) alphabet_.insert(g);
    for (const auto& g : extended_double(q)) alphabet_.insert(g);
  }

  AlgElem parse() {
    AlgElem out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  const std::string& text_;
  const ColoredQuiver& q_;
  size_t pos_ = 0;
  std::set<GenSymbol> alphabet_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  AlgElem expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++pos_;
    }
    AlgElem out = term();
    if (neg) out = -out;
    while (true) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        AlgElem t = term();
        if (c == '-')
          out -= t;
        else
          out += t;
      } else {
        break;
      }
    }
    return out;
  }

  // Product of factors, by '*' or juxtaposition.
  AlgElem term() {
    AlgElem out = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        out = out * factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        out = out * factor();
      } else {
        break;
      }
    }
    return out;
  }

  AlgElem factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      AlgElem inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_factor();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol_factor();
    fail("expected a symbol, number or '('");
  }

  AlgElem rational_factor() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      size_t save = pos_;
      ++pos_;
      size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == dstart) {
        pos_ = save;  // not a fraction after all
      } else {
        num += "/" + text_.substr(dstart, pos_ - dstart);
      }
    }
    Rational r = parse_rational(num);
    // A scalar multiplies whatever follows; standalone scalars are rejected
    // (the path algebra has no global unit term in this language).
    return scalar_times_next(r);
  }

  AlgElem scalar_times_next(const Rational& r) {
    char c = peek();
    AlgElem rest;
    if (c == '(') {
      rest = factor();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      rest = symbol_factor();
    } else {
      fail("a rational literal must multiply a symbol or parenthesized expression");
    }
    return r * rest;
  }

  AlgElem symbol_factor() {
    skip_ws();
    size_t start = pos_;
    auto ident = [&]() {
      size_t s = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return text_.substr(s, pos_ - s);
    };
    std::string tok = ident();
    int color = 0;
    if (pos_ < text_.size() && text_[pos_] == ':') {
      color = q_.color_index(tok);
      if (color < 0) {
        pos_ = start;
        fail("unknown color '" + tok + "'");
      }
      ++pos_;
      tok = ident();
    }
    GenSymbol g;
    if (!decode(tok, color, g)) {
      pos_ = start;
      fail("unrecognized symbol '" + tok + "'");
    }
    if (!alphabet_.count(g)) {
      pos_ = start;
      fail("symbol '" + tok + "' does not exist in this quiver");
    }
    return AlgElem::from_sym(g);
  }

  static bool split_digits(const std::string& d, int& i, int& j) {
    if (d.size() != 2 || !std::isdigit(static_cast<unsigned char>(d[0])) ||
        !std::isdigit(static_cast<unsigned char>(d[1])))
      return false;
    i = d[0] - '0';
    j = d[1] - '0';
    return true;
  }

  static bool decode(const std::string& tok, int color, GenSymbol& out) {
    if (tok.size() < 2) return false;
    char kind = tok[0];
    std::string rest = tok.substr(1);
    if (kind == 'e') {
      for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      out = GenSymbol::idem(std::stoi(rest));
      return true;
    }
    if (kind == 'g') {
      bool inv = false;
      if (rest.size() > 3 && rest.substr(rest.size() - 3) == "inv") {
        inv = true;
        rest = rest.substr(0, rest.size() - 3);
      }
      for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      if (rest.empty()) return false;
      int s = std::stoi(rest);
      out = inv ? GenSymbol::gamma_inv(s, color) : GenSymbol::gamma(s, color);
      return true;
    }
    if (kind == 'v' || kind == 'w') {
      int i, j;
      if (!split_digits(rest, i, j)) return false;
      out = (kind == 'v') ? GenSymbol::v(i, j, color) : GenSymbol::w(i, j, color);
      return true;
    }
    return false;
  }
};

}  // namespace

AlgElem parse_expr(const std::string& text, const ColoredQuiver& q) {
  return Parser(text, q).parse();
}

TensorElem2 parse_tensor2(const std::string& text, const ColoredQuiver& q) {
  // Split into signed additive chunks at depth 0, treating the literal "(x)"
  // as an opaque separator token rather than a parenthesized group.
  struct Chunk {
    bool neg;
    std::string body;
  };
  std::vector<Chunk> chunks;
  std::string cur;
  bool cur_neg = false;
  int depth = 0;
  auto flush = [&]() {
    if (cur.find_first_not_of(" \t\n") != std::string::npos)
      chunks.push_back({cur_neg, cur});
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "(x)") == 0) {
      cur += "\x01";  // internal marker for the tensor separator
      i += 2;
      continue;
    }
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      flush();
      cur_neg = (c == '-');
      continue;
    }
    cur += c;
  }
  flush();
  TensorElem2 out = TensorElem2::zero();
  if (chunks.size() == 1 && chunks[0].body.find('\x01') == std::string::npos) {
    std::string t = chunks[0].body;
    t.erase(0, t.find_first_not_of(" \t\n"));
    t.erase(t.find_last_not_of(" \t\n") + 1);
    if (t == "0" && !chunks[0].neg) return out;
  }
  for (const auto& ch : chunks) {
    size_t sep = ch.body.find('\x01');
    if (sep == std::string::npos || ch.body.find('\x01', sep + 1) != std::string::npos)
      throw ParseError("each tensor term needs exactly one (x) separator", 0);
    AlgElem l = parse_expr(ch.body.substr(0, sep), q);
    AlgElem r = parse_expr(ch.body.substr(sep + 1), q);
    TensorElem2 t = TensorElem2::tensor(l, r);
    if (ch.neg)
      out -= t;
    else
      out += t;
  }
  return out;
}

}  // namespace boalch
