#include "witt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "witt/session.hpp"
#include "witt/suites.hpp"

namespace witt {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int rank = 1;
  std::string embedding;  // empty: integer at rank 1, symbolic otherwise
  std::optional<int> box;
  std::optional<std::uint32_t> degree_cap;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string format = "text";

  Embedding make_embedding() const {
    const std::string mode = embedding.empty() ? (rank == 1 ? "integer" : "symbolic") : embedding;
    if (mode == "integer") {
      if (rank != 1) throw UsageError("--embedding integer requires --rank 1");
      return Embedding::integer();
    }
    return Embedding::symbolic(rank);
  }
};

void apply_config_file(const std::string& path, Config& cfg, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw UsageError("config file: " + std::string(ex.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [&](const char* flag) { return app.count(flag) == 0; };
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "rank") {
        if (unset("--rank")) cfg.rank = val.get<int>();
      } else if (key == "embedding") {
        if (unset("--embedding")) cfg.embedding = val.get<std::string>();
      } else if (key == "box") {
        if (unset("--box")) cfg.box = val.get<int>();
      } else if (key == "degree_cap") {
        if (unset("--degree-cap")) cfg.degree_cap = val.get<std::uint32_t>();
      } else if (key == "seed") {
        if (unset("--seed")) cfg.seed = val.get<std::uint64_t>();
      } else if (key == "samples") {
        if (unset("--samples")) cfg.samples = val.get<std::size_t>();
      } else if (key == "format") {
        if (unset("--format")) cfg.format = val.get<std::string>();
      } else {
        throw UsageError("config file: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& ex) {
    throw UsageError("config file: " + std::string(ex.what()));
  }
  if (cfg.embedding != "" && cfg.embedding != "integer" && cfg.embedding != "symbolic")
    throw UsageError("config file: embedding must be integer or symbolic");
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("config file: format must be text or json");
}

Gamma parse_gamma(const std::string& text, int rank) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::int32_t> coords;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw UsageError("bad degree '" + text + "'");
    coords.push_back(v);
  }
  if (static_cast<int>(coords.size()) != rank)
    throw UsageError("degree '" + text + "' has " + std::to_string(coords.size()) + " entries, session rank is " +
                     std::to_string(rank));
  return Gamma::from_vector(coords);
}

json inputs_json(const std::vector<std::pair<std::string, std::string>>& inputs) {
  json j = json::object();
  for (const auto& [k, v] : inputs) j[k] = v;
  return j;
}

json report_json(const WitnessReport& w) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["claim"] = w.claim;
  j["paper_ref"] = w.statement;
  j["inputs"] = inputs_json(w.inputs);
  j["computed"] = json::array();
  j["expected"] = json::array();
  for (const auto& c : w.computed) j["computed"].push_back(to_string(c));
  for (const auto& e : w.expected) j["expected"].push_back(to_string(e));
  j["pass"] = w.pass;
  j["degenerate"] = w.degenerate;
  j["cases"] = w.cases;
  j["notes"] = w.notes;
  return j;
}

json report_json(const SuiteReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["claim"] = r.name;
  j["criterion"] = r.criterion;
  j["paper_ref"] = r.statement;
  j["inputs"] = inputs_json(r.inputs);
  j["computed"] = json::array();
  j["expected"] = json::array();
  j["cases"] = json::array();
  for (const auto& c : r.cases) {
    j["computed"].push_back(c.computed);
    j["expected"].push_back(c.expected);
    j["cases"].push_back({{"label", c.label}, {"pass", c.pass}});
  }
  j["notes"] = r.notes;
  j["pass"] = r.pass;
  return j;
}

json value_json(const std::string& claim, const std::vector<std::pair<std::string, std::string>>& inputs,
                const std::string& computed, std::optional<bool> pass = std::nullopt) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["claim"] = claim;
  j["paper_ref"] = "";
  j["inputs"] = inputs_json(inputs);
  j["computed"] = computed;
  j["expected"] = nullptr;
  j["pass"] = pass.value_or(true);
  return j;
}

void print_witness(std::ostream& out, const WitnessReport& w) {
  out << w.claim << ": " << (w.pass ? "PASS" : "FAIL") << (w.degenerate ? " (degenerate)" : "") << "\n";
  out << "  statement: " << w.statement << "\n";
  for (const auto& [k, v] : w.inputs) out << "  " << k << " = " << v << "\n";
  for (std::size_t i = 0; i < w.computed.size(); ++i) {
    out << "  computed: " << to_string(w.computed[i]) << "\n";
    if (i < w.expected.size()) out << "  expected: " << to_string(w.expected[i]) << "\n";
  }
  if (w.cases) out << "  elements checked: " << w.cases << "\n";
  for (const auto& n : w.notes) out << "  note: " << n << "\n";
}

void print_suite(std::ostream& out, const SuiteReport& r, bool verbose) {
  out << "criterion " << r.criterion << " " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.cases.size()
      << " cases, " << r.failures() << " failing)\n";
  out << "  statement: " << r.statement << "\n";
  for (const auto& [k, v] : r.inputs) out << "  " << k << " = " << v << "\n";
  for (const auto& c : r.cases) {
    if (c.pass && !verbose) continue;
    out << "  " << (c.pass ? "ok   " : "FAIL ") << c.label << "\n";
    out << "       computed: " << c.computed << "\n";
    if (!c.pass || c.computed != c.expected) out << "       expected: " << c.expected << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

void warn_orbits(const Session& s, const MembershipSpace& space, std::ostream& err) {
  if (space.kind != MembershipSpace::Kind::Idealizer || space.idealizer.kind != IdealizerSpec::Kind::R) return;
  if (orbits_may_coincide(s.env().ring(), space.idealizer.p0, space.idealizer.p1))
    err << "warning: the orbits of " << to_string(space.idealizer.p0) << " and " << to_string(space.idealizer.p1)
        << " may coincide; R is computed as defined but the two-point idealizer assumption may fail\n";
}

ActionTable read_action_table(const std::string& path, Config& cfg, std::optional<Session>& session) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open action table '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  ActionTable table;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = path + ":" + std::to_string(lineno) + ": ";
    if (!header) {
      std::istringstream hs(line);
      std::string word;
      int rank = 0;
      if (!(hs >> word >> rank) || word != "rank" || rank < 1 || rank > 8)
        throw UsageError(where + "expected header 'rank n'");
      cfg.rank = rank;
      session.emplace(cfg.make_embedding());
      header = true;
      continue;
    }
    const auto s1 = line.find(';');
    const auto s2 = s1 == std::string::npos ? s1 : line.find(';', s1 + 1);
    if (s2 == std::string::npos) throw UsageError(where + "expected 'mu; nu; coefficient'");
    try {
      Gamma mu = parse_gamma(line.substr(0, s1), cfg.rank);
      Gamma nu = parse_gamma(line.substr(s1 + 1, s2 - s1 - 1), cfg.rank);
      Scalar c = session->scalar(*session->parse(line.substr(s2 + 1)));
      if (!table.emplace(std::make_pair(mu, nu), c).second) throw UsageError("duplicate entry");
    } catch (const std::exception& ex) {
      throw UsageError(where + ex.what());
    }
  }
  if (!header) throw UsageError(path + ": missing header 'rank n'");
  return table;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Witt algebra, its enveloping algebra and k[a,b]#G", "witt"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  bool verbose = false;
  app.add_option("--rank", cfg.rank, "rank of the grading group")->check(CLI::Range(1, 8));
  app.add_option("--embedding", cfg.embedding, "integer (rank 1) or symbolic")
      ->check(CLI::IsMember({"integer", "symbolic"}));
  app.add_option("--box", cfg.box, "box radius for suites and tables")->check(CLI::NonNegativeNumber);
  app.add_option("--degree-cap", cfg.degree_cap, "a,b-degree cap for ideal spans");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--samples", cfg.samples, "random samples per check")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", config_path, "JSON file with defaults; flags win");
  app.add_flag("-v,--verbose", verbose, "list passing cases too");
  app.fallthrough();

  std::string expr, family_text, vec_text, space_text, file, suite, claim;
  std::vector<std::string> claim_args;
  bool prime = false, rightmost = false, corrected = false, monoid = false;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  eval_cmd->add_option("expr", expr)->required();
  auto* norm_cmd = app.add_subcommand("normalize", "PBW normal form of an element of U(W)");
  norm_cmd->add_option("expr", expr)->required();
  norm_cmd->add_flag("--rightmost", rightmost, "rewrite rightmost inversions first");
  auto* phi_cmd = app.add_subcommand("phi", "image of an element of U(W) in k[a,b]#G");
  phi_cmd->add_option("expr", expr)->required();
  phi_cmd->add_flag("--prime", prime, "use Phi' (integer embedding)");
  auto* act_cmd = app.add_subcommand("act", "action of U(W) on a module");
  act_cmd->add_option("family", family_text)->required();
  act_cmd->add_option("u", expr)->required();
  act_cmd->add_option("vec", vec_text)->required();
  auto* member_cmd = app.add_subcommand("member", "membership of an element in a subspace of k[a,b]#G");
  member_cmd->add_option("expr", expr)->required();
  member_cmd->add_option("--space", space_text, "S(p), R(p0;p1), right(p), left(p), point(p), B0, B1")->required();
  auto* classify_cmd = app.add_subcommand("classify", "identify an action table up to rescaling");
  classify_cmd->add_option("file", file)->required();
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite)->required();
  auto* witness_cmd = app.add_subcommand("witness", "compute a single witness");
  witness_cmd->add_option("claim", claim)->required();
  witness_cmd->add_option("args", claim_args);
  witness_cmd->add_flag("--corrected", corrected, "tprime: use u -> (-a-b)t");
  witness_cmd->add_flag("--monoid", monoid, "nonfg: positive multiplier degrees only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg, app);
    const bool json_out = cfg.format == "json";
    auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };

    if (*classify_cmd) {
      std::optional<Session> session;
      ActionTable table = read_action_table(file, cfg, session);
      Classification c = classify(session->env(), table);
      std::string computed = c.family ? to_string(*c.family) : "unknown";
      if (json_out) {
        json j = value_json("classify", {{"file", file}, {"entries", std::to_string(table.size())}}, computed,
                            c.family.has_value());
        json resc = json::object();
        for (const auto& [g, l] : c.rescaling) resc[to_string(g)] = to_string(l);
        j["rescaling"] = resc;
        emit(j);
      } else {
        out << computed << "\n";
        if (c.family)
          for (const auto& [g, l] : c.rescaling) out << "  lambda_" << to_string(g) << " = " << to_string(l) << "\n";
      }
      return c.family ? 0 : 1;
    }

    Session session(cfg.make_embedding());

    if (*verify_cmd) {
      SuiteOptions opt;
      opt.embedding = session.embedding();
      opt.box = cfg.box;
      opt.seed = cfg.seed;
      opt.samples = cfg.samples;
      opt.degree_cap = cfg.degree_cap;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else if (is_suite(suite)) {
        names = {suite};
      } else {
        std::string list;
        for (const auto& n : suite_names()) list += " " + n;
        throw UsageError("unknown suite '" + suite + "'; known:" + list + " all");
      }
      bool all_pass = true;
      json reports = json::array();
      for (const auto& n : names) {
        if (n == "tprime" && !opt.embedding.numeric()) {
          if (suite != "all") throw UsageError("the tprime suite needs --rank 1 --embedding integer");
          err << "skipping tprime: needs the integer embedding\n";
          continue;
        }
        SuiteReport r = run_suite(n, opt);
        all_pass = all_pass && r.pass;
        if (json_out) {
          reports.push_back(report_json(r));
        } else {
          print_suite(out, r, verbose);
        }
      }
      if (json_out) {
        if (reports.size() == 1) {
          emit(reports[0]);
        } else {
          emit(json{{"schema_version", kSchemaVersion}, {"reports", reports}, {"pass", all_pass}});
        }
      } else if (names.size() > 1) {
        out << (all_pass ? "all suites PASS" : "some suites FAIL") << "\n";
      }
      return all_pass ? 0 : 1;
    }

    if (*witness_cmd) {
      const Enveloping& env = session.env();
      const int rank = session.embedding().rank();
      auto need = [&](std::size_t n, const char* usage) {
        if (claim_args.size() != n) throw UsageError("usage: witness " + claim + " " + usage);
      };
      WitnessReport w;
      if (claim == "pmu") {
        need(1, "MU");
        w = pmu_check(env, parse_gamma(claim_args[0], rank));
      } else if (claim == "ideal") {
        need(2, "NU MU");
        w = ideal_witness(env, parse_gamma(claim_args[0], rank), parse_gamma(claim_args[1], rank));
      } else if (claim == "saturation") {
        need(2, "N M");
        const int box = cfg.box.value_or(4);
        w = saturation_check(env, std::stoi(claim_args[0]), std::stoi(claim_args[1]), gamma_box(rank, box));
      } else if (claim == "beta") {
        need(3, "BETA MU NU");
        w = beta_witness(env, session.scalar(*session.parse(claim_args[0])), parse_gamma(claim_args[1], rank),
                         parse_gamma(claim_args[2], rank));
      } else if (claim == "nonfg-left" || claim == "nonfg-right") {
        if (claim_args.size() < 2) throw UsageError("usage: witness " + claim + " TEST_DEGREE GEN_DEGREE...");
        NonFgOptions o;
        o.test_degree = parse_gamma(claim_args[0], rank);
        for (std::size_t i = 1; i < claim_args.size(); ++i) o.generator_degrees.push_back(parse_gamma(claim_args[i], rank));
        o.samples = cfg.samples;
        o.seed = cfg.seed;
        o.monoid = monoid;
        o.degree_cap = cfg.degree_cap;
        w = claim == "nonfg-left" ? nonfg_left_check(env, o) : nonfg_right_check(env, o);
      } else if (claim == "support-reduction") {
        need(2, "C MU0");
        SkewElt c = session.skew(*session.parse(claim_args[0]));
        Gamma mu0 = parse_gamma(claim_args[1], rank);
        SkewElt r = support_reduction(env.ring(), c, mu0);
        w.claim = claim;
        w.statement = "c a - (a + mu0) c removes the t^mu0 term of c";
        w.inputs = {{"c", to_string(c)}, {"mu0", to_string(mu0)}};
        w.computed = {r};
        w.pass = r.component(mu0).is_zero() && r.components().size() < c.components().size();
        for (const auto& [g, f] : c.components())
          if (!f.is_rational()) w.pass = false;
        if (!w.pass) w.notes.push_back("c must lie in k#G and have mu0 in its support");
      } else if (claim == "tprime") {
        need(0, "");
        if (!session.embedding().numeric()) throw UsageError("witness tprime needs --rank 1 --embedding integer");
        TPrimeImages im = corrected ? TPrimeImages::corrected(env.ring()) : TPrimeImages::printed(env.ring());
        const int range = cfg.box.value_or(6);
        BridgeReport br = tprime_bridge_check(env, range, im);
        w.claim = claim;
        w.statement = "alpha(phi_hat(e_n)) = Phi'(e_n); T' relations map to 0";
        w.inputs = {{"alpha", im.label}, {"range", "|n| <= " + std::to_string(range)}};
        for (const auto& c : br.relations) {
          w.computed.push_back(c.lhs);
          w.expected.push_back(SkewElt());
        }
        for (const auto& c : br.triangle) {
          w.computed.push_back(c.lhs);
          w.expected.push_back(c.rhs);
        }
        w.pass = br.relations_pass() && br.triangle_pass();
        w.notes.push_back(std::string("relations ") + (br.relations_pass() ? "hold" : "fail") + ", triangle " +
                          (br.triangle_pass() ? "commutes" : "does not commute"));
      } else {
        throw UsageError("unknown claim '" + claim +
                         "'; known: pmu ideal saturation beta nonfg-left nonfg-right support-reduction tprime");
      }
      if (json_out) {
        emit(report_json(w));
      } else {
        print_witness(out, w);
      }
      return w.pass ? 0 : 1;
    }

    if (*member_cmd) {
      MembershipSpace space = session.space(space_text);
      warn_orbits(session, space, err);
      Value v = session.eval(expr);
      const bool in = session.member(v, space);
      if (json_out) {
        emit(value_json("member", {{"expr", expr}, {"space", to_string(space)}}, in ? "true" : "false", in));
      } else {
        out << (in ? "true" : "false") << "\n";
      }
      return in ? 0 : 1;
    }

    std::string computed;
    std::vector<std::pair<std::string, std::string>> inputs = {{"expr", expr}};
    if (*eval_cmd) {
      computed = to_string(session.eval(expr));
    } else if (*norm_cmd) {
      const Enveloping& env = session.env();
      UElt u = session.uelt(*session.parse(expr));
      if (rightmost) {
        std::map<PbwMonomial, Scalar> pending(u.terms().begin(), u.terms().end());
        u = env.normal_form(std::move(pending), RewriteStrategy::RightmostFirst);
      }
      computed = to_string(u);
    } else if (*phi_cmd) {
      UElt u = session.uelt(*session.parse(expr));
      computed = to_string(prime ? session.env().phi_prime(u) : session.env().phi(u));
    } else if (*act_cmd) {
      FamilySpec f = session.family(family_text);
      UElt u = session.uelt(*session.parse(expr));
      Value v = session.eval(vec_text);
      if (!std::holds_alternative<ModVec>(v))
        throw UsageError("vector '" + vec_text + "' is a " + type_name(v) + ", expected a combination of v(...)");
      computed = to_string(act_u(session.env(), f, u, std::get<ModVec>(v)));
      inputs = {{"family", to_string(f)}, {"u", to_string(u)}, {"vec", vec_text}};
    }
    if (json_out) {
      emit(value_json(app.get_subcommands().front()->get_name(), inputs, computed));
    } else {
      out << computed << "\n";
    }
    return 0;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return 2;
  } catch (const EvalError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const DegreeCapExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace witt
