#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "witt/expr.hpp"
#include "witt/families.hpp"
#include "witt/idealizer.hpp"

namespace witt {

struct MembershipSpace {
  enum class Kind { Idealizer, RightIdeal, LeftIdeal, PolyIdeal, B0, B1 };
  Kind kind = Kind::Idealizer;
  IdealizerSpec idealizer;
  PointSpec point;
};

std::string to_string(const MembershipSpace& s);

using Value = std::variant<Scalar, UElt, SkewElt, ModVec, bool>;

std::string to_string(const Value& v);
const char* type_name(const Value& v);

/// Error raised while evaluating a well-formed expression; offset points at
/// the offending node.
class EvalError : public std::runtime_error {
 public:
  EvalError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class Session {
 public:
  explicit Session(Embedding emb) : env_(emb) {}
  const Enveloping& env() const { return env_; }
  const Embedding& embedding() const { return env_.embedding(); }

  NodePtr parse(std::string_view text) const { return witt::parse(text, embedding().rank()); }
  Value eval(const Node& n) const;
  Value eval(std::string_view text) const { return eval(*parse(text)); }

  FamilySpec family(const Node& n) const;
  FamilySpec family(std::string_view text) const { return family(*parse(text)); }
  MembershipSpace space(const Node& n) const;
  MembershipSpace space(std::string_view text) const { return space(*parse(text)); }
  bool member(const Value& v, const MembershipSpace& s, std::size_t offset = 0) const;

  Scalar scalar(const Node& n) const;
  UElt uelt(const Node& n) const;
  SkewElt skew(const Node& n) const;

 private:
  Gamma gamma(const Node& n) const;
  Enveloping env_;
};

}  // namespace witt
