#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "witt/cli.hpp"
#include "witt/suites.hpp"

using namespace witt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("witt_test_" + name);
  std::ofstream(p) << content;
  return p;
}

// Random expression text over the grammar, rank 1.
std::string random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 5 : 11), small(0, 4), sgn(-3, 3);
  switch (pick(rng)) {
    case 0: return std::to_string(small(rng));
    case 1: return "a";
    case 2: return "b";
    case 3: return "e(" + std::to_string(sgn(rng)) + ")";
    case 4: return "t(" + std::to_string(sgn(rng)) + ")";
    case 5: return "alpha";
    case 6: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 7: return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 8: return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
    case 9: return "-" + random_expr(rng, depth - 1);
    case 10: return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(small(rng) % 3);
    default: return "(" + random_expr(rng, depth - 1) + ")";
  }
}

}  // namespace

TEST_CASE("parser examples") {
  auto n = parse("e(2)*e(1)", 1);
  CHECK(n->kind == Node::Kind::Mul);
  REQUIRE(n->kids.size() == 2);
  CHECK(n->kids[0]->kind == Node::Kind::Generator);
  CHECK(n->kids[1]->tuple == std::vector<std::int32_t>{1});

  auto p = parse("Phi(e(1)*e(3) - e(2)^2 - e(4))", 1);
  CHECK(p->kind == Node::Kind::Call);
  CHECK(p->name == "Phi");
  CHECK(th::session().eval(*p) == Value(th::T("b*(1-b)*t^4")));

  try {
    parse("e(", 1);
    FAIL("no error");
  } catch (const ParseError& ex) {
    CHECK(ex.offset() == 2);
    CHECK(std::find(ex.expected().begin(), ex.expected().end(), "integer") != ex.expected().end());
  }
  CHECK_THROWS_AS(parse("e(1,2)", 1), ParseError);
  CHECK_THROWS_AS(parse("t", 2), ParseError);
  CHECK_THROWS_AS(parse("a b", 1), ParseError);
  CHECK_THROWS_AS(parse("a $ b", 1), ParseError);
  CHECK(parse("e(1,-2)", 2)->tuple == std::vector<std::int32_t>{1, -2});
}

TEST_CASE("precedence") {
  auto neg = parse("-a^2", 1);
  CHECK(neg->kind == Node::Kind::Neg);
  CHECK(neg->kids[0]->kind == Node::Kind::Pow);
  auto sum = parse("1 - 2*3 + 4", 1);
  CHECK(sum->kind == Node::Kind::Add);
  CHECK(sum->kids[0]->kind == Node::Kind::Sub);
  CHECK(th::S("1 - 2*3 + 4") == Scalar(-1));
  CHECK(th::S("-2^2") == Scalar(-4));
  CHECK(th::S("2/3*3") == Scalar(2));
}

TEST_CASE("print then parse is the identity on random trees") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_expr(rng, 4);
    auto tree = parse(text, 1);
    const std::string printed = print(*tree);
    auto back = parse(printed, 1);
    CHECK_MESSAGE(same_tree(*tree, *back), text << " printed as " << printed);
    CHECK(print(*back) == printed);
  }
}

TEST_CASE("printed values evaluate back to themselves") {
  const Session& s = th::session();
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const UElt u = random_uelt(s.env(), rng, 3, 3);
    CHECK(s.eval(to_string(u)) == Value(u));
    const SkewElt p = s.env().phi(u);
    CHECK(s.eval(to_string(p)) == Value(p));
  }
  const Scalar q = th::S("(x + 2*y)/(x - y) + 1/3");
  CHECK(s.eval(to_string(q)) == Value(q));
  const Session& s2 = th::session(2);
  const SkewElt r2 = s2.env().phi(s2.uelt(*s2.parse("e(1,-1)*e(0,2)")));
  CHECK(s2.eval(to_string(r2)) == Value(r2));
}

TEST_CASE("session errors") {
  const Session& s = th::session();
  CHECK_THROWS_AS(s.eval("mystery + 1"), std::exception);
  CHECK_THROWS_AS(s.eval("Phi(t)"), EvalError);
  CHECK_THROWS_AS(s.eval("e(1)/a"), EvalError);
  CHECK_THROWS_AS(s.family("V(1)"), EvalError);
}

TEST_CASE("command examples") {
  auto e = run({"eval", "Phi(pmu(1))"});
  CHECK(e.code == 0);
  CHECK(th::T(trim(e.out)) == th::T("b*(1-b)*t^4"));

  auto v = run({"verify", "antihom", "--box", "2"});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
  CHECK(v.out.find("25 pairs checked") != std::string::npos);
  CHECK(v.out.find("[-2,2]") != std::string::npos);

  auto m = run({"member", "Phi(e(3))", "--space", "R(0,0;0,1)"});
  CHECK(m.code == 0);
  CHECK(trim(m.out) == "true");
  auto mf = run({"member", "t", "--space", "R(0,0;0,1)"});
  CHECK(mf.code == 1);
  CHECK(trim(mf.out) == "false");
  auto warn = run({"member", "a", "--space", "R(0,0;2,0)"});
  CHECK(warn.err.find("warning") != std::string::npos);

  auto n = run({"normalize", "e(2)*e(1)"});
  CHECK(trim(n.out) == "e(1)*e(2) - e(3)");
  CHECK(trim(run({"normalize", "--rightmost", "e(1)*e(2)*e(0)"}).out) == "e(0)*e(1)*e(2) - 3*e(1)*e(2)");
  CHECK(trim(run({"phi", "--prime", "e(2)"}).out) == "(-a - 2*b)*t^2");
  CHECK(th::T(trim(run({"phi", "e(1)*e(3) - e(2)^2 - e(4)"}).out)) == th::T("b*(1-b)*t^4"));

  auto a = run({"act", "V(alpha,beta)", "e(1)*e(2)", "v(0)"});
  CHECK(a.code == 0);
  CHECK(th::session().eval(trim(a.out)) == th::session().eval("(alpha+2*beta)*(alpha+beta+2)*v(3)"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "e("}).code == 2);
  CHECK(run({"eval", "e(1)", "--rank", "2"}).code == 2);
  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"--embedding", "integer", "--rank", "2", "eval", "1"}).code == 2);
  CHECK(run({"witness", "pmu"}).code == 2);
  CHECK(run({"witness", "pmu", "1"}).code == 0);
  CHECK(run({"witness", "tprime"}).code == 1);
  CHECK(run({"witness", "tprime", "--corrected"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("structured output is deterministic") {
  auto r1 = run({"verify", "nonfg", "--format", "json", "--samples", "20", "--seed", "5"});
  auto r2 = run({"verify", "nonfg", "--format", "json", "--samples", "20", "--seed", "5"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  auto j = nlohmann::json::parse(r1.out);
  for (const char* key : {"schema_version", "claim", "paper_ref", "inputs", "computed", "expected", "pass"})
    CHECK(j.contains(key));
  CHECK(j["pass"] == true);
  CHECK(j["inputs"]["seed"] == "5");

  auto w = nlohmann::json::parse(run({"witness", "beta", "1/2", "1", "2", "--format", "json"}).out);
  CHECK(w["claim"] == "beta");
  CHECK(th::T(w["computed"][0].get<std::string>()) == th::T("-1/2*t^3"));
}

TEST_CASE("config file with flags winning") {
  auto cfg = temp_file("config.json", R"({"rank": 2, "format": "json", "box": 1})");
  auto r = run({"--config", cfg.string(), "verify", "antihom"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["inputs"]["embedding"] == "symbolic rank 2");
  CHECK(j["cases"].size() == 81);
  auto r2 = run({"--config", cfg.string(), "--rank", "1", "--format", "text", "verify", "antihom"});
  CHECK(r2.out.find("9 pairs checked") != std::string::npos);
  auto bad = temp_file("bad.json", R"({"colour": 1})");
  CHECK(run({"--config", bad.string(), "eval", "1"}).code == 2);
}

TEST_CASE("classify reads action tables") {
  std::string table = "rank 1\n# V(2,3)\n";
  for (int mu = -2; mu <= 2; ++mu)
    for (int nu = -2; nu <= 2; ++nu) table += std::to_string(mu) + "; " + std::to_string(nu) + "; " + std::to_string(2 + 3 * mu + nu) + "\n";
  auto r = run({"classify", temp_file("v23.txt", table).string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("V(2,3)", 0) == 0);

  auto junk = run({"classify", temp_file("junk.txt", "rank 1\n0; 0; 1\n1; 0; 5\n0; 1; 2\n1; 1; 7\n-1; 1; 1\n1; -1; 3\n").string()});
  CHECK(junk.code == 1);
  CHECK(trim(junk.out) == "unknown");
  CHECK(run({"classify", temp_file("nohdr.txt", "0; 0; 1\n").string()}).code == 2);
  CHECK(run({"classify", temp_file("badrow.txt", "rank 1\n0; 0\n").string()}).code == 2);
}
