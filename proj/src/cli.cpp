#include "pbij/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pbij/algebra.hpp"
#include "pbij/error.hpp"
#include "pbij/json_codec.hpp"
#include "pbij/oracle.hpp"

namespace pbij::cli
{

namespace
{

using codec::json;
using codec::to_json;

// An argument is inline JSON if it starts with '{' or '[', a file path
// otherwise.
json load(std::string const &arg)
{
  auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in)
      throw Error(ErrorCode::IoError, "cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    return json::parse(text);
  } catch (json::exception const &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

PartialBijection load_map(std::string const &arg)
{ return codec::partial_bijection_from_json(load(arg)); }

json disagreements_json(DisagreementSet const &d)
{
  if (std::holds_alternative<Infinite>(d))
    return "infinite";
  return to_json(std::get<FiniteNatSet>(d));
}

json check_partial(PartialBijection const &f, Natural window)
{
  auto t = oracle::materialize(f, window);
  return {
    {"domain_complement", oracle::domain_complement(t) == f.holes()},
    {"codomain_complement", oracle::image_complement(t) == f.codomain_complement()},
    {"index", oracle::oracle_index(t) == f.index()},
  };
}

json check_near(NearBijection const &f, Natural window)
{
  auto t = oracle::materialize(f, window);
  auto restricted = restrict_to_partial(f);
  return {
    {"monoset_complement", oracle::shared_points(t) == monoset_complement(f)},
    {"range_complement", oracle::image_complement(t) == range_complement(f)},
    {"legacy_index", oracle::oracle_legacy_index(t) == legacy_index(f)},
    {"restriction_index", restricted.index() == legacy_index(f)},
    {"monoset_image_complement",
     oracle::oracle_monoset_image_complement_size(t) == restricted.codomain_complement().size()},
    {"reconciliation", reconciliation_check(f)},
  };
}

bool all_true(json const &checks)
{
  for (auto const &[name, ok] : checks.items()) {
    if (!ok.get<bool>())
      return false;
  }
  return true;
}

json run_check(std::vector<std::string> const &inputs, std::optional<Natural> window)
{
  if (inputs.empty() || inputs.size() > 2)
    throw Error(ErrorCode::ParseError, "check takes one map, or two maps g f");

  auto first = load(inputs[0]);
  if (first.is_object() && first.contains("prefix")) {
    if (inputs.size() != 1)
      throw Error(ErrorCode::ParseError, "check takes a single near-bijection");
    auto f = codec::near_bijection_from_json(first);
    auto w = window.value_or(f.structural_bound());
    auto checks = check_near(f, w);
    return {{"ok", all_true(checks)}, {"window", w}, {"checks", checks}};
  }

  auto g = codec::partial_bijection_from_json(first);
  if (inputs.size() == 1) {
    auto w = window.value_or(g.structural_bound());
    auto checks = check_partial(g, w);
    return {{"ok", all_true(checks)}, {"window", w}, {"checks", checks}};
  }

  auto f = load_map(inputs[1]);
  auto composite = compose(g, f);
  auto w = window.value_or(std::max({f.structural_bound(),
                                     g.structural_bound(),
                                     composite.structural_bound()}));
  json checks = {
    {"composition", oracle::oracle_compose_check(g, f, w)},
    {"composite", check_partial(composite, w)},
  };
  bool ok = checks["composition"].get<bool>() && all_true(checks["composite"]);
  return {{"ok", ok}, {"window", w}, {"checks", checks}};
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Index theory for partial bijections of the naturals"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  std::optional<Natural> window;
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--window", window, "Oracle window for `check` (default: structural bound)");

  std::vector<std::string> inputs;
  std::function<json()> action;

  auto command = [&](char const *name, char const *help, std::size_t arity,
                     char const *operands, std::function<json()> body) {
    auto *sub = app.add_subcommand(name, help);
    auto *opt = sub->add_option(operands, inputs, "Inline JSON or a file path")->required();
    if (arity > 0)
      opt->expected(static_cast<int>(arity));
    sub->callback([&action, body] { action = body; });
  };

  command("index", "Print the index of a map", 1, "map", [&] {
    return json{{"index", load_map(inputs[0]).index()}};
  });
  command("compose", "Print g after f", 2, "g_f", [&] {
    return to_json(compose(load_map(inputs[0]), load_map(inputs[1])));
  });
  command("invert", "Print the inverse map", 1, "map", [&] {
    return to_json(inverse(load_map(inputs[0])));
  });
  command("extend", "Extend an index-zero map to a permutation", 1, "map", [&] {
    return to_json(extend_to_permutation(load_map(inputs[0])));
  });
  command("factor", "Permutations lambda, rho with lambda f = g = f rho", 2, "f_g", [&] {
    auto f = load_map(inputs[0]);
    auto g = load_map(inputs[1]);
    return json{{"lambda", to_json(factor_left(f, g))}, {"rho", to_json(factor_right(f, g))}};
  });
  command("equal", "Almost-equality of two maps", 2, "f_g", [&] {
    auto f = load_map(inputs[0]);
    auto g = load_map(inputs[1]);
    return json{{"almost_equal", almost_equal(f, g)},
                {"disagreements", disagreements_json(disagreement_set(f, g))}};
  });
  command("class", "Almost-equality class and its index", 1, "map", [&] {
    auto c = class_of(load_map(inputs[0]));
    return json{{"class", to_json(c)}, {"Ind", class_index(c)}};
  });
  command("near", "Monoset, range and index of a near-bijection", 1, "near_bijection", [&] {
    auto f = codec::near_bijection_from_json(load(inputs[0]));
    return json{{"monoset_complement", to_json(monoset_complement(f))},
                {"range_complement", to_json(range_complement(f))},
                {"legacy_index", legacy_index(f)},
                {"restriction", to_json(restrict_to_partial(f))}};
  });
  command("check", "Recount everything with the brute-force oracle", 0, "maps", [&] {
    return run_check(inputs, window);
  });

  auto report = [&](ErrorCode code, std::string const &detail) {
    err << json{{"error", error_name(code)}, {"detail", detail}}.dump() << "\n";
    return exit_status(code);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::Success const &) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const &e) {
    return report(ErrorCode::ParseError, e.what());
  }

  try {
    out << action().dump(pretty ? 2 : -1) << "\n";
    return 0;
  } catch (Error const &e) {
    return report(e.code(), e.detail());
  }
}

} // namespace pbij::cli
