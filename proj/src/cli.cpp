#include "solenoid/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "solenoid/duality.hpp"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/verify/acceptance.hpp"
#include "solenoid/verify/oracles.hpp"

namespace solenoid::cli {
namespace {

using json = nlohmann::ordered_json;

template <typename T, typename Parse>
T parse_literal(const std::string& kind, const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError("invalid " + kind + " literal '" + text + "': " + e.what());
  } catch (const DomainError& e) {
    throw UsageError("invalid " + kind + " literal '" + text + "': " + e.what());
  }
}

GroupExpr group_arg(const std::string& text) {
  return parse_literal<GroupExpr>("group", text, [](const std::string& t) { return parse_group(t); });
}

SupernaturalProfile profile_arg(const std::string& text) {
  return parse_literal<SupernaturalProfile>("profile", text, [](const std::string& t) { return parse_profile(t); });
}

poset::UPSet upset_arg(const std::string& text) {
  return parse_literal<poset::UPSet>("set", text, [](const std::string& t) { return parse_upset(t); });
}

std::string join_primes(const std::vector<Prime>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

json mult_to_json(const Mult& m) {
  if (m.is_omega()) return "w";
  if (m.finite() <= std::numeric_limits<std::uint64_t>::max()) return m.finite().convert_to<std::uint64_t>();
  return m.finite().str();
}

Mult mult_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    return s == "w" ? Mult::omega() : Mult(Natural(s));
  }
  return Mult(j.get<std::uint64_t>());
}

std::shared_ptr<const poset::Family> standard_family() {
  static const auto family = poset::Family::standard();
  return family;
}

Outcome run_reduce(const Command& c, Report r) {
  const GroupExpr& g = c.groups.at(0);
  const GroupExpr& h = c.groups.at(1);
  const Verdict v = reduces(g, h);
  r.verdict = v.reducible;
  r.certificate = to_report_certificate(v);
  r.diagnostics.push_back("normalized: " + to_string(g) + " vs " + to_string(h));
  r.diagnostics.push_back("dimension: " + std::to_string(dimension(g)) + " vs " + std::to_string(dimension(h)));
  if (is_compact(g) && is_compact(h)) {
    const bool agrees = dual_reduces(g, h) == v.reducible;
    r.diagnostics.emplace_back(agrees ? "dual path: agrees" : "dual path: DISAGREES");
  }
  if (c.certificate) {
    r.diagnostics.emplace_back(verify_certificate(g, h, v) ? "certificate check: valid" : "certificate check: INVALID");
  }
  const int code = (c.exit_verdict && !v.reducible) ? kExitFalse : kExitOk;
  return {std::move(r), code};
}

Outcome run_compare(const Command& c, Report r) {
  const GroupExpr& g = c.groups.at(0);
  const GroupExpr& h = c.groups.at(1);
  const Comparison cmp = compare(g, h);
  r.verdict = to_string(cmp);
  r.diagnostics.push_back("E(G) <= E(H): " + std::string(reduces(g, h).reducible ? "true" : "false"));
  r.diagnostics.push_back("E(H) <= E(G): " + std::string(reduces(h, g).reducible ? "true" : "false"));
  return {std::move(r), kExitOk};
}

Outcome run_dual(const Command& c, Report r) {
  const DualExpr d = dual(c.groups.at(0));
  r.verdict = to_string(d);
  if (is_compact(c.groups.at(0))) {
    r.diagnostics.push_back("rank: " + std::to_string(rank(d)));
  } else {
    r.diagnostics.emplace_back("rank: not reported (R factor; the group is not compact)");
  }
  return {std::move(r), kExitOk};
}

Outcome run_preceq(const Command& c, Report r) {
  const SupernaturalProfile& q = c.profiles.at(0);
  const SupernaturalProfile& p = c.profiles.at(1);
  const DeficitTable table = deficit_table(q.multiplicities(), p.multiplicities());
  r.verdict = !table.total.is_omega();
  r.diagnostics.push_back("deficit: " + table.total.str());
  for (const auto& [prime, surplus] : table.surplus) {
    r.diagnostics.push_back("surplus at " + std::to_string(prime) + ": " + surplus.str());
  }
  if (table.default_surplus) r.diagnostics.emplace_back("surplus at every prime outside the listed keys: w");
  if (c.oracle_window) {
    const auto check = verify::check_preceq_oracle(q, p, *c.oracle_window);
    r.diagnostics.push_back(std::string("oracle: ") + (check.agrees ? "agrees" : "DISAGREES") + " (" + check.detail + ")");
  }
  return {std::move(r), kExitOk};
}

Outcome run_family_new(const Command& c, Report r) {
  const SupernaturalProfile p = c.family_p.value_or(standard_family()->p());
  const SupernaturalProfile q = c.family_q.value_or(standard_family()->q());
  const auto family = poset::Family::create(p, q);
  r.verdict = "family P=" + to_string(p) + " Q=" + to_string(q);
  r.diagnostics.push_back("D(P,Q) begins " + join_primes(poset::D_enumeration(*family, 12)) + ",...");
  std::vector<Prime> p0;
  for (std::size_t i = 0; i < 6; ++i) p0.push_back(family->d(3 * i));
  r.diagnostics.push_back("P_0* begins " + join_primes(p0) + ",...");
  r.diagnostics.push_back("P begins " + join_primes(canonical_sequence(p, 8)) + ",...");
  return {std::move(r), kExitOk};
}

Outcome run_family_compare(const Command& c, Report r) {
  const poset::MemberRef a(standard_family(), *c.set_a, c.power);
  const poset::MemberRef b(standard_family(), *c.set_b, c.power);
  r.verdict = poset::member_reduces(a, b);
  r.diagnostics.push_back("G_A = " + a.describe());
  r.diagnostics.push_back("G_B = " + b.describe('B'));
  r.diagnostics.push_back("A \\ B = " + poset::to_string(poset::set_difference(a.set, b.set)));
  if (c.crosscheck) {
    const auto report = poset::member_crosscheck(a, b, *c.crosscheck);
    for (const auto& line : report.diagnostics) r.diagnostics.push_back("crosscheck: " + line);
  }
  return {std::move(r), kExitOk};
}

Outcome run_family_expand(const Command& c, Report r) {
  const poset::MemberRef a(standard_family(), *c.set_a, 1);
  r.verdict = join_primes(poset::member_sequence(a, static_cast<std::int64_t>(c.length)));
  r.diagnostics.push_back("P_A for A = " + poset::to_string(a.set) + (a.set.is_cofinite() ? " (cofinite: P_0* + P)" : ""));
  return {std::move(r), kExitOk};
}

Outcome run_family_demo(const Command& c, Report r) {
  const auto demo = poset::chain_demo(standard_family(), c.depth, c.power);
  r.verdict = demo.chain_strictly_decreasing && demo.antichain_incomparable;
  std::string header = "<=_B";
  for (std::size_t j = 0; j < demo.labels.size(); ++j) header += " " + std::to_string(j);
  r.diagnostics.push_back(header);
  for (std::size_t i = 0; i < demo.labels.size(); ++i) {
    std::string row = std::to_string(i) + "   ";
    for (std::size_t j = 0; j < demo.labels.size(); ++j) row += demo.matrix[i][j] ? " 1" : " 0";
    r.diagnostics.push_back(row + "  " + demo.labels[i]);
  }
  r.diagnostics.push_back(std::string("chain strictly decreasing: ") + (demo.chain_strictly_decreasing ? "yes" : "NO"));
  r.diagnostics.push_back(std::string("evens/odds incomparable: ") + (demo.antichain_incomparable ? "yes" : "NO"));
  return {std::move(r), kExitOk};
}

Outcome run_selftest(Report r) {
  const auto results = verify::run_acceptance(verify::Scale::Fast);
  bool all = true;
  for (const auto& res : results) {
    all = all && res.passed;
    r.diagnostics.push_back(verify::format_result(res));
  }
  r.verdict = all;
  return {std::move(r), all ? kExitOk : kExitFalse};
}

}  // namespace

std::string to_string(Verb v) {
  switch (v) {
    case Verb::Reduce:
      return "reduce";
    case Verb::Compare:
      return "compare";
    case Verb::Dual:
      return "dual";
    case Verb::Dim:
      return "dim";
    case Verb::Normalize:
      return "normalize";
    case Verb::Preceq:
      return "preceq";
    case Verb::FamilyNew:
      return "family-new";
    case Verb::FamilyCompare:
      return "family-compare";
    case Verb::FamilyExpand:
      return "family-expand";
    case Verb::FamilyDemo:
      return "family-demo";
    case Verb::Selftest:
      return "selftest";
    case Verb::Help:
      return "help";
  }
  return {};
}

Command parse_command(std::span<const std::string> args) {
  CLI::App app{"Decide Borel reducibility E(G) <=_B E(H) for products of R, T and P-adic solenoids.", "solenoid"};
  app.require_subcommand(1, 1);

  Command c;
  std::string arg1;
  std::string arg2;
  std::string opt_p;
  std::string opt_q;
  std::string opt_a;
  std::string opt_b;
  std::size_t oracle_window = 0;
  std::size_t crosscheck = 0;

  auto* reduce = app.add_subcommand("reduce", "Decide E(G) <=_B E(H) and print a certificate");
  reduce->add_option("G", arg1, "group literal, e.g. \"R^2 x T\"")->required();
  reduce->add_option("H", arg2, "group literal")->required();
  reduce->add_flag("--json", c.json, "emit the JSON report");
  reduce->add_flag("--certificate", c.certificate, "re-check the certificate with the independent checker");
  reduce->add_flag("--exit-verdict", c.exit_verdict, "exit 3 when the verdict is false");

  auto* cmp = app.add_subcommand("compare", "Classify G, H as EQUIVALENT, LEFT_STRICT, RIGHT_STRICT or INCOMPARABLE");
  cmp->add_option("G", arg1)->required();
  cmp->add_option("H", arg2)->required();
  cmp->add_flag("--json", c.json);

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual group");
  dual_cmd->add_option("G", arg1)->required();
  dual_cmd->add_flag("--json", c.json);

  auto* dim = app.add_subcommand("dim", "Print the covering dimension");
  dim->add_option("G", arg1)->required();

  auto* norm = app.add_subcommand("normalize", "Print the normalized product");
  norm->add_option("G", arg1)->required();

  auto* pre = app.add_subcommand("preceq", "Decide Q preceq P for two profiles");
  pre->add_option("Q", arg1, "profile literal, e.g. \"{2:7, 3:w}\"")->required();
  pre->add_option("P", arg2)->required();
  auto* ow = pre->add_option("--oracle-window", oracle_window, "cross-check with the finite injection oracle");

  auto* fnew = app.add_subcommand("family-new", "Describe the embedding family for (P, Q)");
  auto* fp = fnew->add_option("--p", opt_p, "profile P (default {2:w})");
  auto* fq = fnew->add_option("--q", opt_q, "profile Q (default {default=w})");

  auto* fcmp = app.add_subcommand("family-compare", "Decide E(G_A) <=_B E(G_B) in the default family");
  fcmp->add_option("--a", opt_a, "set literal")->required();
  fcmp->add_option("--b", opt_b, "set literal")->required();
  fcmp->add_option("--power", c.power, "dimension n of G_A = (Sol_{P_A})^n");
  auto* cc = fcmp->add_option("--crosscheck", crosscheck, "validate with finite windows of this length");

  auto* fexp = app.add_subcommand("family-expand", "Print the first terms of P_A in the default family");
  fexp->add_option("--a", opt_a)->required();
  fexp->add_option("--len", c.length)->required();

  auto* fdemo = app.add_subcommand("family-demo", "Chain of multiples of 2^i plus the evens/odds antichain");
  fdemo->add_option("--depth", c.depth);
  fdemo->add_option("--power", c.power);

  auto* self = app.add_subcommand("selftest", "Run the fast acceptance subset");

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    throw UsageError("unknown verb '" + args.front() + "' (argument 1)");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    c.verb = Verb::Help;
    const auto subs = app.get_subcommands();
    c.help_text = subs.empty() ? app.help() : subs.front()->help();
    return c;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto* chosen = app.get_subcommands().front();
  if (chosen == reduce || chosen == cmp) {
    c.verb = chosen == reduce ? Verb::Reduce : Verb::Compare;
    c.inputs = {arg1, arg2};
    c.groups = {group_arg(arg1), group_arg(arg2)};
  } else if (chosen == dual_cmd || chosen == dim || chosen == norm) {
    c.verb = chosen == dual_cmd ? Verb::Dual : (chosen == dim ? Verb::Dim : Verb::Normalize);
    c.inputs = {arg1};
    c.groups = {group_arg(arg1)};
  } else if (chosen == pre) {
    c.verb = Verb::Preceq;
    c.inputs = {arg1, arg2};
    c.profiles = {profile_arg(arg1), profile_arg(arg2)};
    if (*ow) c.oracle_window = oracle_window;
  } else if (chosen == fnew) {
    c.verb = Verb::FamilyNew;
    if (*fp) {
      c.inputs.push_back("--p=" + opt_p);
      c.family_p = profile_arg(opt_p);
    }
    if (*fq) {
      c.inputs.push_back("--q=" + opt_q);
      c.family_q = profile_arg(opt_q);
    }
  } else if (chosen == fcmp) {
    c.verb = Verb::FamilyCompare;
    c.inputs = {opt_a, opt_b};
    c.set_a = upset_arg(opt_a);
    c.set_b = upset_arg(opt_b);
    if (*cc) c.crosscheck = crosscheck;
  } else if (chosen == fexp) {
    c.verb = Verb::FamilyExpand;
    c.inputs = {opt_a};
    c.set_a = upset_arg(opt_a);
  } else if (chosen == fdemo) {
    c.verb = Verb::FamilyDemo;
  } else if (chosen == self) {
    c.verb = Verb::Selftest;
  }
  return c;
}

ReportCertificate to_report_certificate(const Verdict& v) {
  if (v.reducible) {
    std::vector<ReportEdge> edges;
    for (const EdgeWitness& e : v.certificate) {
      edges.push_back({.left = e.left + 1, .right = e.right + 1, .reason = to_string(e.reason), .deficit = e.deficit.surplus});
    }
    return edges;
  }
  ReportViolator out;
  if (v.violator) {
    for (std::size_t i : v.violator->k) out.k.push_back(i + 1);
    for (std::size_t j : v.violator->nk) out.nk.push_back(j + 1);
  }
  return out;
}

nlohmann::ordered_json to_json(const Report& r) {
  json j;
  j["verb"] = r.verb;
  j["inputs"] = r.inputs;
  if (const bool* b = std::get_if<bool>(&r.verdict)) {
    j["verdict"] = *b;
  } else {
    j["verdict"] = std::get<std::string>(r.verdict);
  }
  if (r.certificate) {
    if (const auto* edges = std::get_if<std::vector<ReportEdge>>(&*r.certificate)) {
      json list = json::array();
      for (const ReportEdge& e : *edges) {
        json deficit = json::array();
        for (const auto& [prime, surplus] : e.deficit) deficit.push_back(json::array({prime, mult_to_json(surplus)}));
        list.push_back({{"left", e.left}, {"right", e.right}, {"reason", e.reason}, {"deficit", deficit}});
      }
      j["certificate"] = {{"edges", list}};
    } else {
      const auto& hv = std::get<ReportViolator>(*r.certificate);
      j["certificate"] = {{"violator", {{"K", hv.k}, {"NK", hv.nk}}}};
    }
  }
  j["diagnostics"] = r.diagnostics;
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.verb = j.at("verb").get<std::string>();
  r.inputs = j.at("inputs").get<std::vector<std::string>>();
  const json& verdict = j.at("verdict");
  if (verdict.is_boolean()) {
    r.verdict = verdict.get<bool>();
  } else {
    r.verdict = verdict.get<std::string>();
  }
  if (j.contains("certificate")) {
    const json& cert = j.at("certificate");
    if (cert.contains("edges")) {
      std::vector<ReportEdge> edges;
      for (const json& e : cert.at("edges")) {
        ReportEdge edge{.left = e.at("left").get<std::size_t>(),
                        .right = e.at("right").get<std::size_t>(),
                        .reason = e.at("reason").get<std::string>(),
                        .deficit = {}};
        for (const json& entry : e.at("deficit")) {
          edge.deficit.emplace_back(entry.at(0).get<Prime>(), mult_from_json(entry.at(1)));
        }
        edges.push_back(std::move(edge));
      }
      r.certificate = std::move(edges);
    } else {
      const json& hv = cert.at("violator");
      r.certificate = ReportViolator{hv.at("K").get<std::vector<std::size_t>>(), hv.at("NK").get<std::vector<std::size_t>>()};
    }
  }
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return r;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream out;
  if (const bool* b = std::get_if<bool>(&r.verdict)) {
    if (r.verb == "reduce") {
      out << (*b ? "REDUCIBLE" : "NOT REDUCIBLE") << "\n";
    } else {
      out << (*b ? "true" : "false") << "\n";
    }
  } else {
    out << std::get<std::string>(r.verdict) << "\n";
  }
  if (r.certificate) {
    if (const auto* edges = std::get_if<std::vector<ReportEdge>>(&*r.certificate)) {
      for (const ReportEdge& e : *edges) {
        out << "theta*: " << e.left << " -> " << e.right << " (" << e.reason;
        if (e.reason == "SOL_SOL") {
          Mult total;
          std::string parts;
          for (const auto& [prime, surplus] : e.deficit) {
            total = total + surplus;
            parts += (parts.empty() ? "" : ", ") + std::to_string(prime) + ":" + surplus.str();
          }
          out << ", deficit " << total.str() << (parts.empty() ? "" : " [" + parts + "]");
        }
        out << ")\n";
      }
    } else {
      const auto& hv = std::get<ReportViolator>(*r.certificate);
      out << "violator: K = " << join_indices(hv.k) << ", N(K) = " << join_indices(hv.nk) << "\n";
    }
  }
  for (const auto& d : r.diagnostics) out << "  " << d << "\n";
  return out.str();
}

Outcome run(const Command& c) {
  Report r;
  r.verb = to_string(c.verb);
  r.inputs = c.inputs;
  try {
    switch (c.verb) {
      case Verb::Reduce:
        return run_reduce(c, std::move(r));
      case Verb::Compare:
        return run_compare(c, std::move(r));
      case Verb::Dual:
        return run_dual(c, std::move(r));
      case Verb::Dim:
        r.verdict = std::to_string(dimension(c.groups.at(0)));
        return {std::move(r), kExitOk};
      case Verb::Normalize:
        r.verdict = to_string(c.groups.at(0));
        return {std::move(r), kExitOk};
      case Verb::Preceq:
        return run_preceq(c, std::move(r));
      case Verb::FamilyNew:
        return run_family_new(c, std::move(r));
      case Verb::FamilyCompare:
        return run_family_compare(c, std::move(r));
      case Verb::FamilyExpand:
        return run_family_expand(c, std::move(r));
      case Verb::FamilyDemo:
        return run_family_demo(c, std::move(r));
      case Verb::Selftest:
        return run_selftest(std::move(r));
      case Verb::Help:
        r.verdict = c.help_text;
        return {std::move(r), kExitOk};
    }
  } catch (const DomainError& e) {
    r.verdict = std::string("error");
    r.certificate.reset();
    r.diagnostics = {std::string("domain error: ") + e.what()};
    return {std::move(r), kExitDomain};
  }
  return {std::move(r), kExitOk};
}

Invocation invoke(std::span<const std::string> args) {
  Invocation inv;
  Command c;
  try {
    c = parse_command(args);
  } catch (const UsageError& e) {
    inv.err = std::string("error: ") + e.what() + "\nRun with --help for usage.\n";
    inv.exit_code = kExitUsage;
    return inv;
  }
  if (c.verb == Verb::Help) {
    inv.out = c.help_text;
    return inv;
  }
  Outcome outcome = run(c);
  inv.exit_code = outcome.exit_code;
  if (c.json) {
    inv.out = render_json(outcome.report);
  } else if (outcome.exit_code == kExitDomain) {
    inv.err = "error: " + outcome.report.diagnostics.front() + "\n";
  } else {
    inv.out = render_text(outcome.report);
  }
  return inv;
}

}  // namespace solenoid::cli
