#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Expression tree of the command-line language.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' exponent)?
///   exponent:= int | '(' int (',' int)* ')'        ints may carry a '-'
///   atom    := int | ident | ident '(' args ')' | '(' expr ')'
///
/// Tuples (e(1,-2), t(0,3), v(2), pmu(1)) must have the session rank; the
/// bare atom `t` is t^1 in rank 1 and `t^(i,j)` is a degree tuple.
struct Node {
  enum class Kind {
    Integer,    // value
    Symbol,     // name
    Generator,  // e(tuple)
    TAtom,      // t(tuple), bare t, or t^(tuple)
    Basis,      // v(tuple)
    Call,       // name(args), args in kids
    Infinity,   // inf
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,  // kids[0]^exponent, exponent in tuple[0]
  };
  Kind kind = Kind::Integer;
  Integer value;
  std::string name;
  std::vector<std::int32_t> tuple;
  std::vector<NodePtr> kids;
  std::size_t offset = 0;
  /// Argument separators of a Call: ',' or ';' before each argument but the first.
  std::string separators;
};

bool same_tree(const Node& l, const Node& r);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {});
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// rank <= 0 skips the tuple-length check.
NodePtr parse(std::string_view text, int rank);

/// Prints with the fewest parentheses that parse back to the same tree.
std::string print(const Node& n);

}  // namespace witt
