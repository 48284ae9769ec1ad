#include <fstream>
#include <sstream>

#include "doctest.h"
#include "solenoid/cli.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/verify/generators.hpp"

using namespace solenoid;
using namespace solenoid::cli;

namespace {

Invocation call(std::vector<std::string> args) { return invoke(args); }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SOLENOID_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"reduce_rt.txt", {"reduce", "R^2 x T", "T^3"}},
      {"reduce_violator.json", {"reduce", "Sol{2:w} x Sol{3:w}", "Sol{2:w,3:w} x T", "--json"}},
      {"reduce_solsol.json", {"reduce", "Sol{2:5,3:w} x T", "Sol{2:7,3:w,5:1} x T", "--json", "--certificate"}},
      {"compare_incomparable.txt", {"compare", "Sol{2:w}", "Sol{3:w}"}},
      {"dual.json", {"dual", "T x Sol{2:6,3:w} x Sol{default=w}", "--json"}},
      {"preceq_oracle.txt", {"preceq", "{2:7,3:w}", "{2:5,3:w}", "--oracle-window", "200"}},
      {"family_demo.txt", {"family-demo", "--depth", "3", "--power", "2"}},
      {"family_expand.txt", {"family-expand", "--a", "ups{period=2; word=10}", "--len", "12"}},
      {"family_compare.txt",
       {"family-compare", "--a", "ups{period=2; word=10}", "--b", "ups{period=2; word=01}", "--crosscheck", "100"}},
      {"normalize.txt", {"normalize", "(R x T)^2 x S[4,6,8|9]"}},
  };
  for (const auto& [file, args] : cases) {
    CAPTURE(file);
    const Invocation r = call(args);
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == golden(file));
  }
}

TEST_CASE("parse_command") {
  const Command c = parse_command(std::vector<std::string>{"reduce", "R^2 x T", "T^3", "--json"});
  CHECK(c.verb == Verb::Reduce);
  CHECK(c.json);
  CHECK(c.groups[0] == parse_group("R x R x T"));
  CHECK(c.groups[1] == parse_group("T^3"));

  const Command p = parse_command(std::vector<std::string>{"preceq", "{2:7,3:w}", "{2:5,3:w}"});
  CHECK(p.verb == Verb::Preceq);
  CHECK(p.profiles[0] == parse_profile("{2:7, 3:w}"));
  CHECK_FALSE(p.oracle_window);

  CHECK_THROWS_AS((void)parse_command(std::vector<std::string>{"reduce", "Sol{2:3}", "T"}), UsageError);
  CHECK_THROWS_AS((void)parse_command(std::vector<std::string>{"frobnicate"}), UsageError);
  CHECK_THROWS_AS((void)parse_command(std::vector<std::string>{"dim", "R", "--json"}), UsageError);
  CHECK_THROWS_AS((void)parse_command(std::vector<std::string>{"family-expand", "--a", "fin{1}"}), UsageError);
  CHECK_THROWS_AS((void)parse_command(std::vector<std::string>{"family-compare", "--a", "evens", "--b", "fin{}"}),
                  UsageError);
}

TEST_CASE("exit codes") {
  CHECK(call({"reduce", "R^2 x T", "T^3"}).exit_code == kExitOk);
  CHECK(call({"reduce", "T", "R"}).exit_code == kExitOk);
  CHECK(call({"reduce", "T", "R", "--exit-verdict"}).exit_code == kExitFalse);
  CHECK(call({"reduce", "R", "T", "--exit-verdict"}).exit_code == kExitOk);

  const Invocation bad = call({"reduce", "Sol{2:3}", "T"});
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("finite total") != std::string::npos);
  CHECK(call({}).exit_code == kExitUsage);
  CHECK(call({"bogus"}).err.find("bogus") != std::string::npos);
  CHECK(call({"reduce", "R", "T", "--frob"}).exit_code == kExitUsage);
  CHECK(call({"reduce", "R x Z", "T"}).err.find("offset 4") != std::string::npos);

  CHECK(call({"family-new", "--p", "{default=w}"}).exit_code == kExitDomain);
  CHECK(call({"family-demo", "--depth", "1"}).exit_code == kExitDomain);
  CHECK(call({"family-compare", "--a", "fin{}", "--b", "fin{}", "--power", "0"}).exit_code == kExitDomain);
  CHECK(call({"family-new"}).exit_code == kExitOk);
  CHECK(call({"family-new", "--p", "{2:w, 3:4}", "--q", "{default=w}"}).exit_code == kExitOk);

  const Invocation help = call({"--help"});
  CHECK(help.exit_code == kExitOk);
  CHECK(help.out.find("family-compare") != std::string::npos);
  CHECK(call({"reduce", "--help"}).out.find("--exit-verdict") != std::string::npos);
}

TEST_CASE("verbs") {
  CHECK(call({"dim", "R^2 x T x Sol{2:w}"}).out == "4\n");
  CHECK(call({"dim", "1"}).out == "0\n");
  CHECK(call({"compare", "R", "Sol{2:w}"}).out.starts_with("LEFT_STRICT\n"));
  CHECK(call({"compare", "Sol{2:5,3:w}", "Sol{2:9,3:w}"}).out.starts_with("EQUIVALENT\n"));
  CHECK(call({"dual", "R x T"}).out.starts_with("R x Z\n"));
  CHECK(call({"preceq", "{default=w}", "{2:w}"}).out.starts_with("false\n"));
  const Invocation refuted = call({"preceq", "{default=w}", "{2:w}", "--oracle-window", "50"});
  CHECK(refuted.out.find("oracle: agrees") != std::string::npos);
  CHECK(call({"family-expand", "--a", "cofin{0,2}", "--len", "4"}).out.starts_with("3,2,11,2\n"));
  CHECK(call({"family-compare", "--a", "ups{period=4; word=1000}", "--b", "ups{period=2; word=10}", "--power", "2"})
            .out.starts_with("true\n"));
}

TEST_CASE("selftest") {
  const Invocation r = call({"selftest"});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.starts_with("true\n"));
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json schema") {
  const Invocation r = call({"reduce", "Sol{2:w} x Sol{3:w}", "Sol{2:w,3:w} x T", "--json"});
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"verb", "inputs", "verdict", "certificate", "diagnostics"});
  CHECK(j["verdict"].is_boolean());
  CHECK(j["certificate"]["violator"]["K"] == nlohmann::ordered_json::array({1, 2}));
  CHECK(j["certificate"]["violator"]["NK"] == nlohmann::ordered_json::array({2}));

  const auto c = nlohmann::ordered_json::parse(call({"compare", "R", "T", "--json"}).out);
  CHECK(c["verdict"] == "LEFT_STRICT");
  CHECK_FALSE(c.contains("certificate"));

  const auto big = nlohmann::ordered_json::parse(
      call({"reduce", "Sol{2:1, 3:w}", "Sol{2:100000000000000000000001, 3:w}", "--json"}).out);
  CHECK(big["certificate"]["edges"][0]["deficit"][0][1] == "100000000000000000000000");
  const auto omega = nlohmann::ordered_json::parse(call({"reduce", "T", "T", "--json"}).out);
  CHECK(omega["certificate"]["edges"][0]["deficit"].empty());
}

TEST_CASE("json round-trip") {
  verify::Gen gen(601);
  for (int i = 0; i < 300; ++i) {
    Command c;
    c.verb = Verb::Reduce;
    c.groups = {gen.group(5), gen.group(5)};
    c.inputs = {to_string(c.groups[0]), to_string(c.groups[1])};
    c.certificate = gen.coin();
    const Outcome o = run(c);
    const Report back = report_from_json(nlohmann::ordered_json::parse(render_json(o.report)));
    CHECK(back == o.report);
  }
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compare", "R", "T"}, {"dual", "T x Sol{2:w}"}, {"family-demo"}, {"preceq", "{2:w}", "{3:w}"}}) {
    const Outcome o = run(parse_command(args));
    CHECK(report_from_json(nlohmann::ordered_json::parse(render_json(o.report))) == o.report);
  }
}

TEST_CASE("rendered groups reparse") {
  verify::Gen gen(602);
  for (int i = 0; i < 300; ++i) {
    const GroupExpr g = gen.group(6);
    const Invocation r = call({"normalize", to_string(g)});
    REQUIRE(r.exit_code == 0);
    CHECK(parse_group(r.out.substr(0, r.out.size() - 1)) == g);
  }
}
