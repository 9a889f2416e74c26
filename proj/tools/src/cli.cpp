#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "render.hpp"

namespace nsg::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::WorkBoundExceeded:
    case ErrorCode::ArithmeticOverflow:
      return kResource;
    default:
      return kContract;
  }
}

OracleLimits limits_from(std::optional<Int> flag) {
  OracleLimits limits;
  if (flag) {
    limits.work_bound = *flag;
  } else if (const char* env = std::getenv("NSG_WORK_BOUND"); env && *env) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v <= 0)
      throw Error(ErrorCode::InvalidParams, "NSG_WORK_BOUND must be a positive integer");
    limits.work_bound = v;
  }
  if (limits.work_bound <= 0) throw Error(ErrorCode::InvalidParams, "--work-bound must be positive");
  return limits;
}

bool pretty_json() {
  const char* env = std::getenv("NSG_JSON_PRETTY");
  return env && *env && std::string_view(env) != "0";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup toolkit: Frobenius numbers, symmetry and the k-family analysis"};
  app.name("nsg");
  app.require_subcommand(1);

  bool json = false;
  std::optional<Int> work_bound;
  app.add_flag("--json", json, "Emit the JSON document instead of a table");
  app.add_option("--work-bound", work_bound, "Limit on min*max generator work (env NSG_WORK_BOUND)");

  auto* profile = app.add_subcommand("profile", "Frobenius number, gaps, genus and symmetry of a tuple");
  profile->fallthrough();
  std::vector<Int> generators;
  bool allow_scaled = false;
  profile->add_option("generators", generators, "Generators")->required();
  profile->add_flag("--allow-scaled", allow_scaled, "Divide out a common factor instead of failing");

  auto* family = app.add_subcommand("family", "Analyse the family {r1^2, r1 r2 + r1^2 k, r3 - r1^2 k}");
  family->fallthrough();
  family->require_subcommand(1);
  FamilyArgs fa;
  family->add_option("r1", fa.r1)->required();
  family->add_option("r2", fa.r2)->required();
  family->add_option("r3", fa.r3)->required();
  auto action = [&](const char* name, const char* help) {
    auto* sub = family->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  action("special-k", "Exact special k-values, mu1, mu2 and the window");
  action("classify", "Classify the triple at one k")->add_option("--k", fa.k)->required();
  auto* scan = action("scan", "Classify every k in a range");
  scan->add_option("--from", fa.from)->required();
  scan->add_option("--to", fa.to)->required();
  action("window", "Oracle verdicts for the integers strictly between mu1 and mu2");
  action("reduce", "Values of k where the second generator is a multiple of the third");
  action("table1-row", "Special k-values with F at their floors, checked against the reference rows");
  action("ordering", "Orderings of the special k-values, by criterion and by comparison");

  auto* verify = app.add_subcommand("verify-arnold", "Check both Arnold sequences against the oracle");
  verify->fallthrough();

  auto* enumerate = app.add_subcommand("enumerate-small", "List the small symmetric records");
  enumerate->fallthrough();
  std::optional<Int> enum_r1;
  enumerate->add_option("--r1", enum_r1, "Only records with this r1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kContract;
  }

  try {
    const OracleLimits limits = limits_from(work_bound);
    Output result;
    if (*profile) {
      result = cmd_profile(generators, allow_scaled, limits);
    } else if (*family) {
      fa.action = family->get_subcommands().front()->get_name();
      result = cmd_family(fa, limits);
    } else if (*verify) {
      result = cmd_verify_arnold(limits);
    } else {
      result = cmd_enumerate_small(enum_r1, limits);
    }

    if (json) {
      out << result.doc.dump(pretty_json() ? 2 : -1) << "\n";
    } else {
      render_table(result.doc, out);
      for (const auto& d : result.doc["diagnostics"]) err << "note: " << d.get<std::string>() << "\n";
    }
    return result.verified ? kSuccess : kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace nsg::cli
