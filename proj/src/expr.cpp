#include "witt/expr.hpp"

#include <cctype>

namespace witt {

ParseError::ParseError(std::size_t offset, std::string message, std::vector<std::string> expected)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset),
      expected_(std::move(expected)) {}

bool same_tree(const Node& l, const Node& r) {
  if (l.kind != r.kind || l.value != r.value || l.name != r.name || l.tuple != r.tuple ||
      l.separators != r.separators || l.kids.size() != r.kids.size())
    return false;
  for (std::size_t i = 0; i < l.kids.size(); ++i)
    if (!same_tree(*l.kids[i], *r.kids[i])) return false;
  return true;
}

namespace {

struct Token {
  enum class Type { Int, Ident, Punct, End };
  Type type = Type::End;
  std::string text;
  std::size_t offset = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (std::isdigit(c)) {
      t.type = Token::Type::Int;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t.text += s[i++];
    } else if (std::isalpha(c) || c == '_') {
      t.type = Token::Type::Ident;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) t.text += s[i++];
    } else if (std::string_view("()+-*/^,;").find(static_cast<char>(c)) != std::string_view::npos) {
      t.type = Token::Type::Punct;
      t.text = std::string(1, static_cast<char>(c));
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.offset = s.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int rank) : toks_(lex(text)), rank_(rank) {}

  NodePtr run() {
    NodePtr n = expr();
    if (peek().type != Token::Type::End) fail({"operator", "end of input"});
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const char* p) const { return peek().type == Token::Type::Punct && peek().text == p; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
    msg += t.type == Token::Type::End ? ", found end of input" : ", found '" + t.text + "'";
    throw ParseError(t.offset, msg, std::move(expected));
  }

  void expect(const char* p) {
    if (!is(p)) fail({std::string("'") + p + "'"});
    ++pos_;
  }

  static NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

  static NodePtr binary(Node::Kind k, NodePtr l, NodePtr r, std::size_t off) {
    Node n;
    n.kind = k;
    n.offset = off;
    n.kids = {std::move(l), std::move(r)};
    return make(std::move(n));
  }

  NodePtr expr() {
    NodePtr l = term();
    while (is("+") || is("-")) {
      auto k = is("+") ? Node::Kind::Add : Node::Kind::Sub;
      std::size_t off = peek().offset;
      ++pos_;
      l = binary(k, l, term(), off);
    }
    return l;
  }

  NodePtr term() {
    NodePtr l = unary();
    while (is("*") || is("/")) {
      auto k = is("*") ? Node::Kind::Mul : Node::Kind::Div;
      std::size_t off = peek().offset;
      ++pos_;
      l = binary(k, l, unary(), off);
    }
    return l;
  }

  NodePtr unary() {
    if (is("-")) {
      Node n;
      n.kind = Node::Kind::Neg;
      n.offset = peek().offset;
      ++pos_;
      n.kids = {unary()};
      return make(std::move(n));
    }
    return power();
  }

  std::int32_t signed_int() {
    bool neg = false;
    if (is("-")) {
      neg = true;
      ++pos_;
    }
    if (peek().type != Token::Type::Int) fail({"integer"});
    const Token& t = peek();
    Integer v(t.text);
    if (v > 1000000000) throw ParseError(t.offset, "integer out of range");
    ++pos_;
    auto x = static_cast<std::int32_t>(v.get_si());
    return neg ? -x : x;
  }

  // '(' int (',' int)* ')'
  std::vector<std::int32_t> tuple(std::size_t open_offset, bool check_rank) {
    expect("(");
    std::vector<std::int32_t> out{signed_int()};
    while (is(",")) {
      ++pos_;
      out.push_back(signed_int());
    }
    if (!is(")")) fail({"','", "')'"});
    ++pos_;
    if (check_rank && rank_ > 0 && static_cast<int>(out.size()) != rank_)
      throw ParseError(open_offset, "tuple has " + std::to_string(out.size()) + " entries, session rank is " +
                                        std::to_string(rank_));
    return out;
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!is("^")) return base;
    std::size_t off = peek().offset;
    ++pos_;
    Node n;
    n.kind = Node::Kind::Pow;
    n.offset = off;
    if (peek().type == Token::Type::Int) {
      n.tuple = {signed_int()};
    } else if (is("(")) {
      std::size_t open = peek().offset;
      n.tuple = tuple(open, false);
      if (n.tuple.size() > 1) {
        if (base->kind != Node::Kind::TAtom || base->name != "t")
          throw ParseError(open, "a degree tuple exponent needs the bare atom t");
        if (rank_ > 0 && static_cast<int>(n.tuple.size()) != rank_)
          throw ParseError(open, "tuple has " + std::to_string(n.tuple.size()) + " entries, session rank is " +
                                     std::to_string(rank_));
        Node t;
        t.kind = Node::Kind::TAtom;
        t.name = "t^";
        t.tuple = std::move(n.tuple);
        t.offset = base->offset;
        return make(std::move(t));
      }
    } else {
      fail({"integer", "'('"});
    }
    if (base->kind == Node::Kind::TAtom && base->name == "t" && rank_ > 1)
      throw ParseError(base->offset, "bare t needs rank 1; write t^(...) or t(...)");
    n.kids = {std::move(base)};
    return make(std::move(n));
  }

  NodePtr atom() {
    const Token t = peek();
    if (t.type == Token::Type::Int) {
      ++pos_;
      Node n;
      n.kind = Node::Kind::Integer;
      n.value = Integer(t.text);
      n.offset = t.offset;
      return make(std::move(n));
    }
    if (is("(")) {
      ++pos_;
      NodePtr n = expr();
      expect(")");
      return n;
    }
    if (t.type != Token::Type::Ident) fail({"integer", "identifier", "'('", "'-'"});
    ++pos_;
    Node n;
    n.offset = t.offset;
    n.name = t.text;
    const bool call = is("(");
    if (t.text == "e" || t.text == "v" || t.text == "pmu" || (t.text == "t" && call)) {
      if (!call) fail({"'('"});
      n.tuple = tuple(peek().offset, true);
      if (t.text == "e") n.kind = Node::Kind::Generator;
      if (t.text == "v") n.kind = Node::Kind::Basis;
      if (t.text == "pmu") n.kind = Node::Kind::Call;
      if (t.text == "t") {
        n.kind = Node::Kind::TAtom;
        n.name = "t()";
      }
      return make(std::move(n));
    }
    if (t.text == "t") {
      if (rank_ > 1 && !is("^")) throw ParseError(t.offset, "bare t needs rank 1; write t^(...) or t(...)");
      n.kind = Node::Kind::TAtom;
      return make(std::move(n));
    }
    if (t.text == "inf" && !call) {
      n.kind = Node::Kind::Infinity;
      return make(std::move(n));
    }
    if (!call) {
      n.kind = Node::Kind::Symbol;
      return make(std::move(n));
    }
    n.kind = Node::Kind::Call;
    ++pos_;
    n.kids.push_back(expr());
    while (is(",") || is(";")) {
      n.separators += peek().text;
      ++pos_;
      n.kids.push_back(expr());
    }
    if (!is(")")) fail({"','", "';'", "')'"});
    ++pos_;
    return make(std::move(n));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int rank_;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Add:
    case Node::Kind::Sub:
      return 1;
    case Node::Kind::Mul:
    case Node::Kind::Div:
      return 2;
    case Node::Kind::Neg:
      return 3;
    case Node::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string join(const std::vector<std::int32_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

std::string wrap(const Node& n, int min_prec) {
  std::string s = print(n);
  return precedence(n) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

NodePtr parse(std::string_view text, int rank) { return Parser(text, rank).run(); }

std::string print(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Integer:
      return n.value.get_str();
    case Node::Kind::Symbol:
      return n.name;
    case Node::Kind::Infinity:
      return "inf";
    case Node::Kind::Generator:
      return "e(" + join(n.tuple) + ")";
    case Node::Kind::Basis:
      return "v(" + join(n.tuple) + ")";
    case Node::Kind::TAtom:
      if (n.name == "t") return "t";
      if (n.name == "t()") return "t(" + join(n.tuple) + ")";
      return "t^(" + join(n.tuple) + ")";
    case Node::Kind::Call: {
      if (n.kids.empty()) return n.name + "(" + join(n.tuple) + ")";
      std::string s = n.name + "(";
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) s += std::string(1, n.separators[i - 1]);
        s += print(*n.kids[i]);
      }
      return s + ")";
    }
    case Node::Kind::Add:
      return wrap(*n.kids[0], 1) + " + " + wrap(*n.kids[1], 2);
    case Node::Kind::Sub:
      return wrap(*n.kids[0], 1) + " - " + wrap(*n.kids[1], 2);
    case Node::Kind::Mul:
      return wrap(*n.kids[0], 2) + "*" + wrap(*n.kids[1], 3);
    case Node::Kind::Div:
      return wrap(*n.kids[0], 2) + "/" + wrap(*n.kids[1], 3);
    case Node::Kind::Neg:
      return "-" + wrap(*n.kids[0], 3);
    case Node::Kind::Pow: {
      std::string base = wrap(*n.kids[0], 5);
      if (n.tuple.size() == 1 && n.tuple[0] >= 0) return base + "^" + std::to_string(n.tuple[0]);
      return base + "^(" + join(n.tuple) + ")";
    }
  }
  return "";
}

}  // namespace witt
