#include "witt/session.hpp"

namespace witt {

std::string to_string(const MembershipSpace& s) {
  auto pt = [](const PointSpec& p) {
    std::string r = to_string(p.alpha) + "," + to_string(p.beta);
    if (!p.is_affine()) r += ";" + to_string(p.x) + "," + to_string(p.y);
    return r;
  };
  switch (s.kind) {
    case MembershipSpace::Kind::Idealizer:
      return to_string(s.idealizer);
    case MembershipSpace::Kind::RightIdeal:
      return "right(" + pt(s.point) + ")";
    case MembershipSpace::Kind::LeftIdeal:
      return "left(" + pt(s.point) + ")";
    case MembershipSpace::Kind::PolyIdeal:
      return "point(" + pt(s.point) + ")";
    case MembershipSpace::Kind::B0:
      return "B0";
    case MembershipSpace::Kind::B1:
      return "B1";
  }
  return "?";
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return to_string(x);
        }
      },
      v);
}

const char* type_name(const Value& v) {
  switch (v.index()) {
    case 0:
      return "scalar";
    case 1:
      return "enveloping";
    case 2:
      return "skew";
    case 3:
      return "module";
    default:
      return "bool";
  }
}

Gamma Session::gamma(const Node& n) const {
  if (static_cast<int>(n.tuple.size()) != embedding().rank())
    throw EvalError(n.offset, "degree tuple does not match the session rank " + std::to_string(embedding().rank()));
  return Gamma::from_vector(n.tuple);
}

Value Session::eval(const Node& n) const {
  const SkewRing& T = env_.ring();
  auto fail = [&](const std::string& msg) -> EvalError { return EvalError(n.offset, msg); };
  switch (n.kind) {
    case Node::Kind::Integer:
      return Scalar(Rational(n.value));
    case Node::Kind::Symbol: {
      if (n.name == "a") return T.a();
      if (n.name == "b") return T.b();
      auto v = find_symbol(n.name);
      if (!v) throw fail("unknown symbol '" + n.name + "'");
      return Scalar::symbol(*v);
    }
    case Node::Kind::Infinity:
      throw fail("inf is only allowed as a tilde-family parameter");
    case Node::Kind::Generator:
      return env_.generator(gamma(n));
    case Node::Kind::Basis: {
      ModVec v;
      v.add(gamma(n), Scalar(1));
      return v;
    }
    case Node::Kind::TAtom:
      if (n.name == "t") {
        if (embedding().rank() != 1) throw fail("bare t needs rank 1");
        return T.t(Gamma{1});
      }
      return T.t(gamma(n));
    case Node::Kind::Call: {
      if (n.name == "pmu") {
        Gamma mu = gamma(n);
        if (mu.is_zero()) throw fail("pmu needs a nonzero degree");
        return p_mu(env_, mu);
      }
      if (n.name == "Phi" || n.name == "PhiPrime") {
        if (n.kids.size() != 1) throw fail(n.name + " takes one argument");
        UElt u = uelt(*n.kids[0]);
        if (n.name == "Phi") return env_.phi(u);
        if (!embedding().numeric()) throw fail("PhiPrime requires the integer embedding");
        return env_.phi_prime(u);
      }
      if (n.name == "act") {
        if (n.kids.size() != 3) throw fail("act takes (family, u, vector)");
        FamilySpec f = family(*n.kids[0]);
        UElt u = uelt(*n.kids[1]);
        Value v = eval(*n.kids[2]);
        if (!std::holds_alternative<ModVec>(v)) throw EvalError(n.kids[2]->offset, "act expects a vector of v(...) terms");
        try {
          return act_u(env_, f, u, std::get<ModVec>(v));
        } catch (const std::domain_error& e) {
          throw fail(e.what());
        }
      }
      if (n.name == "member") {
        if (n.kids.size() != 2) throw fail("member takes (element, space)");
        return member(eval(*n.kids[0]), space(*n.kids[1]), n.kids[0]->offset);
      }
      throw fail("'" + n.name + "' is not a function here");
    }
    case Node::Kind::Neg: {
      Value v = eval(*n.kids[0]);
      return std::visit(
          [&](const auto& x) -> Value {
            using T0 = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T0, bool>) {
              throw fail("cannot negate a truth value");
            } else if constexpr (std::is_same_v<T0, Scalar>) {
              return -x;
            } else {
              return x.scaled(Scalar(-1));
            }
          },
          v);
    }
    case Node::Kind::Pow: {
      Value v = eval(*n.kids[0]);
      const int e = n.tuple.at(0);
      try {
        if (auto* s = std::get_if<Scalar>(&v)) return pow(*s, e);
        if (auto* u = std::get_if<UElt>(&v)) {
          if (e < 0) throw fail("negative powers do not exist in the enveloping algebra");
          return env_.pow(*u, static_cast<unsigned>(e));
        }
        if (auto* s = std::get_if<SkewElt>(&v)) return T.pow(*s, e);
      } catch (const std::domain_error& ex) {
        throw fail(ex.what());
      }
      throw fail(std::string("cannot raise a ") + type_name(v) + " to a power");
    }
    case Node::Kind::Add:
    case Node::Kind::Sub:
    case Node::Kind::Mul:
    case Node::Kind::Div:
      break;
  }

  Value l = eval(*n.kids[0]);
  Value r = eval(*n.kids[1]);
  auto mismatch = [&]() {
    return EvalError(n.offset, std::string("cannot combine ") + type_name(l) + " and " + type_name(r));
  };
  if (n.kind == Node::Kind::Div) {
    auto* d = std::get_if<Scalar>(&r);
    if (!d) throw EvalError(n.kids[1]->offset, "the divisor must be a scalar");
    if (d->is_zero()) throw EvalError(n.kids[1]->offset, "division by zero");
    Scalar inv = d->inverse();
    if (auto* s = std::get_if<Scalar>(&l)) return *s * inv;
    if (auto* u = std::get_if<UElt>(&l)) return u->scaled(inv);
    if (auto* s = std::get_if<SkewElt>(&l)) return s->scaled(inv);
    if (auto* m = std::get_if<ModVec>(&l)) return m->scaled(inv);
    throw mismatch();
  }

  // Promote scalars to the other operand's algebra.
  auto promote = [&](const Scalar& c, const Value& like) -> Value {
    if (std::holds_alternative<UElt>(like)) return UElt(c);
    if (std::holds_alternative<SkewElt>(like)) return T.scalar(c);
    return c;
  };
  if (n.kind == Node::Kind::Mul) {
    if (auto* c = std::get_if<Scalar>(&l)) {
      if (auto* s = std::get_if<Scalar>(&r)) return *c * *s;
      if (auto* u = std::get_if<UElt>(&r)) return u->scaled(*c);
      if (auto* s = std::get_if<SkewElt>(&r)) return s->scaled(*c);
      if (auto* m = std::get_if<ModVec>(&r)) return m->scaled(*c);
      throw mismatch();
    }
    if (auto* c = std::get_if<Scalar>(&r)) {
      if (auto* u = std::get_if<UElt>(&l)) return u->scaled(*c);
      if (auto* s = std::get_if<SkewElt>(&l)) return s->scaled(*c);
      if (auto* m = std::get_if<ModVec>(&l)) return m->scaled(*c);
      throw mismatch();
    }
    if (std::holds_alternative<UElt>(l) && std::holds_alternative<UElt>(r))
      return env_.mul(std::get<UElt>(l), std::get<UElt>(r));
    if (std::holds_alternative<SkewElt>(l) && std::holds_alternative<SkewElt>(r))
      return T.mul(std::get<SkewElt>(l), std::get<SkewElt>(r));
    throw mismatch();
  }

  if (auto* c = std::get_if<Scalar>(&l); c && !std::holds_alternative<Scalar>(r)) l = promote(*c, r);
  if (auto* c = std::get_if<Scalar>(&r); c && !std::holds_alternative<Scalar>(l)) r = promote(*c, l);
  if (l.index() != r.index() || std::holds_alternative<bool>(l)) throw mismatch();
  const bool add = n.kind == Node::Kind::Add;
  return std::visit(
      [&](const auto& x) -> Value {
        using T0 = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T0, bool>) {
          throw mismatch();
        } else if constexpr (std::is_same_v<T0, ModVec>) {
          const auto& y = std::get<ModVec>(r);
          return add ? x + y : x + y.scaled(Scalar(-1));
        } else {
          const auto& y = std::get<T0>(r);
          return add ? x + y : x - y;
        }
      },
      l);
}

Scalar Session::scalar(const Node& n) const {
  Value v = eval(n);
  if (auto* s = std::get_if<Scalar>(&v)) return *s;
  throw EvalError(n.offset, std::string("expected a scalar, got ") + type_name(v));
}

UElt Session::uelt(const Node& n) const {
  Value v = eval(n);
  if (auto* s = std::get_if<Scalar>(&v)) return UElt(*s);
  if (auto* u = std::get_if<UElt>(&v)) return *u;
  throw EvalError(n.offset, std::string("expected an element of U(W), got ") + type_name(v));
}

SkewElt Session::skew(const Node& n) const {
  Value v = eval(n);
  if (auto* s = std::get_if<Scalar>(&v)) return env_.ring().scalar(*s);
  if (auto* s = std::get_if<SkewElt>(&v)) return *s;
  throw EvalError(n.offset, std::string("expected an element of T, got ") + type_name(v));
}

FamilySpec Session::family(const Node& n) const {
  auto fail = [&](const std::string& msg) { return EvalError(n.offset, msg); };
  if (n.kind != Node::Kind::Call || n.kids.empty())
    throw fail("expected a family: V(a,b), A(x,y), B(x,y), Atilde(a'), Btilde(a'), P(x,y), Q(x,y) or Dual(F)");
  const auto& k = n.kids;
  auto arity = [&](std::size_t want) {
    if (k.size() != want) throw fail(n.name + " takes " + std::to_string(want) + " argument(s)");
  };
  try {
    if (n.name == "V") {
      arity(2);
      return FamilySpec::V(scalar(*k[0]), scalar(*k[1]));
    }
    if (n.name == "A" || n.name == "B") {
      arity(2);
      return n.name == "A" ? FamilySpec::A(scalar(*k[0]), scalar(*k[1])) : FamilySpec::B(scalar(*k[0]), scalar(*k[1]));
    }
    if (n.name == "Atilde" || n.name == "Btilde") {
      arity(1);
      std::optional<Scalar> ap;
      if (k[0]->kind != Node::Kind::Infinity) ap = scalar(*k[0]);
      return n.name == "Atilde" ? FamilySpec::Atilde(ap) : FamilySpec::Btilde(ap);
    }
    if (n.name == "P" || n.name == "Q") {
      if (k.size() != 2 && k.size() != 3) throw fail(n.name + " takes (x,y) or (x,y;X|Y)");
      Chart chart = Chart::Auto;
      if (k.size() == 3) {
        if (k[2]->kind != Node::Kind::Symbol || (k[2]->name != "X" && k[2]->name != "Y"))
          throw EvalError(k[2]->offset, "chart must be X or Y");
        chart = k[2]->name == "X" ? Chart::X : Chart::Y;
      }
      return n.name == "P" ? FamilySpec::P(scalar(*k[0]), scalar(*k[1]), chart)
                           : FamilySpec::Q(scalar(*k[0]), scalar(*k[1]), chart);
    }
    if (n.name == "Dual") {
      arity(1);
      return FamilySpec::Dual(family(*k[0]));
    }
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  throw fail("unknown family '" + n.name + "'");
}

MembershipSpace Session::space(const Node& n) const {
  auto fail = [&](const std::string& msg) { return EvalError(n.offset, msg); };
  MembershipSpace s;
  if (n.kind == Node::Kind::Symbol && (n.name == "B0" || n.name == "B1")) {
    s.kind = n.name == "B0" ? MembershipSpace::Kind::B0 : MembershipSpace::Kind::B1;
    return s;
  }
  if (n.kind != Node::Kind::Call)
    throw fail("expected a space: S(p), R(p0;p1), right(p[;x,y]), left(p), point(p[;x,y]), B0 or B1");
  const auto& k = n.kids;
  auto point = [&](std::size_t i) { return PointSpec::affine(scalar(*k[i]), scalar(*k[i + 1])); };
  auto seps_ok = [&](const std::string& want) {
    if (n.separators != want) throw fail("malformed arguments for " + n.name);
  };
  try {
    if (n.name == "S") {
      seps_ok(",");
      s.idealizer = IdealizerSpec::S(point(0));
      return s;
    }
    if (n.name == "R") {
      seps_ok(",;,");
      s.idealizer = IdealizerSpec::R(point(0), point(2));
      return s;
    }
    if (n.name == "right" || n.name == "point" || n.name == "left") {
      s.kind = n.name == "right" ? MembershipSpace::Kind::RightIdeal
                                 : (n.name == "left" ? MembershipSpace::Kind::LeftIdeal : MembershipSpace::Kind::PolyIdeal);
      if (n.separators == ",") {
        s.point = point(0);
      } else if (n.separators == ",;," && n.name != "left") {
        s.point = PointSpec::infinitely_near(scalar(*k[0]), scalar(*k[1]), scalar(*k[2]), scalar(*k[3]));
      } else {
        throw fail("malformed arguments for " + n.name);
      }
      return s;
    }
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  throw fail("unknown space '" + n.name + "'");
}

bool Session::member(const Value& v, const MembershipSpace& s, std::size_t offset) const {
  SkewElt u;
  if (auto* c = std::get_if<Scalar>(&v)) {
    u = env_.ring().scalar(*c);
  } else if (auto* x = std::get_if<SkewElt>(&v)) {
    u = *x;
  } else {
    throw EvalError(offset, std::string("membership needs an element of T, got ") + type_name(v) +
                                (std::holds_alternative<UElt>(v) ? " (apply Phi first)" : ""));
  }
  const SkewRing& T = env_.ring();
  try {
    switch (s.kind) {
      case MembershipSpace::Kind::Idealizer:
        return in_idealizer(T, u, s.idealizer);
      case MembershipSpace::Kind::RightIdeal:
        return in_right_point_ideal(u, s.point);
      case MembershipSpace::Kind::LeftIdeal:
        return in_left_point_ideal(T, u, s.point);
      case MembershipSpace::Kind::PolyIdeal:
        for (const auto& [g, f] : u.components())
          if (!g.is_zero()) throw EvalError(offset, "point ideals contain polynomials in a, b only");
        return poly_in_point_ideal(u.component(embedding().zero()), s.point);
      case MembershipSpace::Kind::B0:
      case MembershipSpace::Kind::B1:
        return beta_membership(T, u, s.kind == MembershipSpace::Kind::B0 ? BetaSubring::B0 : BetaSubring::B1);
    }
  } catch (const std::invalid_argument& e) {
    throw EvalError(offset, e.what());
  }
  return false;
}

}  // namespace witt
