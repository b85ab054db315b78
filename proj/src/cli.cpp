#include "tgrw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tgrw/algebra_packs.hpp"
#include "tgrw/convergence.hpp"
#include "tgrw/errors.hpp"
#include "tgrw/graph_pack.hpp"
#include "tgrw/io.hpp"
#include "tgrw/tg_group.hpp"

namespace tgrw::cli {

namespace {

struct Outcome {
  std::string status = "ok";
  Json result = Json::object();
  int exit_code = kOk;
};

struct Options {
  std::size_t max_steps = Budgets{}.max_steps;
  std::size_t max_nodes = Budgets{}.max_nodes;
  std::size_t max_len = Budgets{}.max_length;
  std::vector<CLI::Option*> max_steps_flags;
  bool no_timing = false;

  std::string system_path;
  std::string graph_path;
  std::string weights;
  std::size_t max_letter_len = 4;
  std::optional<std::size_t> max_trace_len;
  std::string trace;
  std::string left;
  std::string right;
  std::string strategy = "leftmost";
  std::uint64_t seed = 0;
  int vertex_cap = kDefaultVertexCap;
  std::string word;
  bool central = false;
  std::string order = "abc";
  std::string kind;
  std::int64_t n = 0;
  std::vector<std::string> shuffle;
  std::vector<std::int64_t> compose;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": malformed JSON: " + e.what());
  }
}

Budgets budgets_of(const Options& o) {
  Budgets b{o.max_steps, o.max_nodes, o.max_len};
  const bool flag_given =
      std::any_of(o.max_steps_flags.begin(), o.max_steps_flags.end(), [](const CLI::Option* f) { return f->count() > 0; });
  if (!flag_given) {
    if (const char* env = std::getenv("TGRW_BUDGET_STEPS")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) throw InputError("TGRW_BUDGET_STEPS must be a positive integer");
      b.max_steps = static_cast<std::size_t>(v);
    }
  }
  return b;
}

LoadedSystem load_system(const Options& o) {
  return build_system(parse_system_document(read_file(o.system_path)), budgets_of(o));
}

Trace trace_arg(const RewriteSystem& system, const std::string& text, const std::string& what) {
  return system.trace(word_from_json(parse_json_text(text, what), what));
}

const WeightCertificate& pick_weights(const LoadedSystem& loaded, const Options& o) {
  const std::string name = o.weights.empty() ? loaded.default_weights : o.weights;
  if (name.empty()) throw InputError("no weight certificate: pass --weights or add \"weights\" to the document");
  auto it = loaded.weights.find(name);
  if (it == loaded.weights.end()) {
    std::string offered;
    for (const auto& [k, v] : loaded.weights) offered += (offered.empty() ? "" : ", ") + k;
    throw InputError("unknown weights '" + name + "' for " + loaded.pack + " (offered: " +
                     (offered.empty() ? "none" : offered) + ")");
  }
  return it->second;
}

Scope scope_of(const LoadedSystem& loaded, const Options& o, const std::vector<Trace>& extra = {}) {
  const auto& alphabet = *loaded.system.alphabet();
  Scope scope = loaded.finite ? full_scope(alphabet, o.max_trace_len.value_or(2))
                              : enumerated_scope(alphabet, o.max_letter_len, o.max_trace_len.value_or(1));
  bool added = false;
  for (const auto& t : extra)
    for (const auto& x : t.word())
      if (std::find(scope.letters.begin(), scope.letters.end(), x) == scope.letters.end()) {
        scope.letters.push_back(x);
        added = true;
      }
  if (added) scope.description += " plus the letters of the input";
  return scope;
}

Outcome cmd_check(const Options& o) {
  const auto loaded = load_system(o);
  const auto report = certify_convergence(loaded.system, pick_weights(loaded, o), scope_of(loaded, o));
  Outcome out;
  out.result = to_json(report);
  if (report.convergent()) return out;
  if (report.confluence == ConfluenceStatus::Counterexample || report.termination != TerminationStatus::Certified) {
    out.status = "check-failed";
    out.exit_code = kCheckFailed;
  } else {
    out.status = "budget-exceeded";
    out.exit_code = kBudgetExceeded;
  }
  return out;
}

Outcome cmd_normalize(const Options& o) {
  const auto loaded = load_system(o);
  Strategy strategy;
  if (o.strategy == "rightmost") strategy.kind = StrategyKind::Rightmost;
  else if (o.strategy == "random") strategy.kind = StrategyKind::Random;
  else if (o.strategy != "leftmost") throw InputError("unknown strategy '" + o.strategy + "'");
  strategy.seed = o.seed;
  const auto report = loaded.system.normalize(trace_arg(loaded.system, o.trace, "--trace"), strategy);
  Outcome out;
  out.result = to_json(report);
  if (!report.ok()) {
    out.status = "budget-exceeded";
    out.exit_code = kBudgetExceeded;
  }
  return out;
}

Outcome cmd_irr(const Options& o) {
  const auto loaded = load_system(o);
  const auto scope = scope_of(loaded, o);
  Outcome out;
  out.result = {{"scope", scope.description}, {"irreducible", irreducible_letters(loaded.system, scope.letters)}};
  return out;
}

Outcome cmd_equiv(const Options& o) {
  const auto loaded = load_system(o);
  const auto left = trace_arg(loaded.system, o.left, "--left");
  const auto right = trace_arg(loaded.system, o.right, "--right");
  const auto system = require_convergent(loaded.system, pick_weights(loaded, o), scope_of(loaded, o, {left, right}));
  Outcome out;
  out.result = {{"equivalent", system.thue_equivalent(left, right)},
                {"left_normal_form", to_json(system.normalize(left).trace)},
                {"right_normal_form", to_json(system.normalize(right).trace)},
                {"certificate", system.certificate()->scope()}};
  return out;
}

Outcome cmd_invariant(const Options& o) {
  const auto loaded = load_system(o);
  const auto t = trace_arg(loaded.system, o.trace, "--trace");
  const auto system = require_convergent(loaded.system, pick_weights(loaded, o), scope_of(loaded, o, {t}));
  Outcome out;
  out.result = {{"invariant", to_json(universal_invariant(system, t))}, {"certificate", system.certificate()->scope()}};
  return out;
}

Outcome cmd_present(const Options& o) {
  const auto doc = parse_system_document(read_file(o.system_path));
  if (doc.pack) throw UnsupportedError("present needs a finite alphabet; pack '" + *doc.pack + "' is infinite");
  const auto loaded = build_system(doc, budgets_of(o));
  Outcome out;
  out.result = to_json(group_presentation(loaded.system, doc.letters));
  return out;
}

Outcome cmd_tutte(const Options& o) {
  const auto g = graph_from_json(parse_json_text(read_file(o.graph_path), o.graph_path));
  GraphPack pack(GraphPackOptions{o.vertex_cap, budgets_of(o)});
  const auto poly = pack.tutte_polynomial(g);
  Outcome out;
  out.result = to_json(poly);
  out.result["text"] = poly.to_string();
  out.result["certificate"] = pack.letter(g);
  return out;
}

Outcome cmd_weyl(const Options& o) {
  Outcome out;
  out.result = {{"word", o.word}, {"central", o.central}, {"normal_order", weyl_normal_order(o.word, o.central, budgets_of(o))}};
  return out;
}

Outcome cmd_pbw(const Options& o) {
  Outcome out;
  out.result = {{"word", o.word}, {"order", o.order}, {"normal_form", pbw_reorder(o.word, o.order, budgets_of(o))}};
  return out;
}

Json index_multiset_json(const IndexMultiset& m) {
  Json j = Json::object();
  for (const auto& [i, k] : m) j[arith_letter(i)] = k;
  return j;
}

Outcome cmd_prefab(const Options& o) {
  Outcome out;
  if (o.kind == "shuffle") {
    if (!o.shuffle.empty()) {
      out.result["shuffle_set"] = shuffle_set(o.shuffle.at(0), o.shuffle.at(1));
    } else if (!o.word.empty()) {
      out.result["word"] = o.word;
      out.result["invariant"] = shuffle_prefab_invariant(o.word, budgets_of(o));
    } else {
      throw InputError("prefab --kind shuffle needs --word or --shuffle W1 W2");
    }
  } else if (o.kind == "arith") {
    if (!o.compose.empty()) {
      Json set = Json::array();
      for (const auto& m : arith_compose(o.compose.at(0), o.compose.at(1))) set.push_back(index_multiset_json(m));
      out.result["composition"] = set;
    } else if (o.n >= 2) {
      Json inv = Json::object();
      for (const auto& [p, k] : arith_invariant(o.n, budgets_of(o))) inv[std::to_string(p)] = k;
      Json decs = Json::array();
      for (const auto& d : arith_decompositions(o.n)) decs.push_back(index_multiset_json(d));
      out.result = {{"n", o.n}, {"invariant", inv}, {"decompositions", decs}};
    } else {
      throw InputError("prefab --kind arith needs --n N (N >= 2) or --compose M N");
    }
  } else {
    throw InputError("prefab --kind must be shuffle or arith");
  }
  return out;
}

void add_budget_flags(CLI::App* sub, Options& o) {
  o.max_steps_flags.push_back(sub->add_option("--max-steps", o.max_steps, "Rewriting step budget (env TGRW_BUDGET_STEPS)"));
  sub->add_option("--max-nodes", o.max_nodes, "Reduct-set node budget");
  sub->add_option("--max-len", o.max_len, "Trace length budget");
  sub->add_flag("--no-timing", o.no_timing, "Omit timing from the report");
}

void add_scope_flags(CLI::App* sub, Options& o) {
  sub->add_option("--weights", o.weights, "Weight certificate name (document, inversions, edges, length, omega)");
  sub->add_option("--max-letter-len", o.max_letter_len, "Size bound for enumerated pack letters");
  sub->add_option("--max-trace-len", o.max_trace_len, "Trace length bound for the confluence model check");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alphabetic rewriting over traces, Tutte-Grothendieck invariants"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, Outcome (*handler)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    add_budget_flags(sub, o);
    commands.emplace_back(sub, handler);
    return sub;
  };

  auto* check = add("check", "Certify termination and local confluence on a scope", cmd_check);
  check->add_option("--system", o.system_path, "System document")->required();
  add_scope_flags(check, o);

  auto* normalize = add("normalize", "Normalize a trace", cmd_normalize);
  normalize->add_option("--system", o.system_path)->required();
  normalize->add_option("--trace", o.trace, "Trace as a JSON token array")->required();
  normalize->add_option("--strategy", o.strategy, "leftmost, rightmost or random");
  normalize->add_option("--seed", o.seed);

  auto* irr = add("irr", "List irreducible letters in scope", cmd_irr);
  irr->add_option("--system", o.system_path)->required();
  irr->add_option("--max-letter-len", o.max_letter_len);

  auto* equiv = add("equiv", "Decide Thue equivalence of two traces", cmd_equiv);
  equiv->add_option("--system", o.system_path)->required();
  equiv->add_option("--left", o.left)->required();
  equiv->add_option("--right", o.right)->required();
  add_scope_flags(equiv, o);

  auto* invariant = add("invariant", "Universal invariant of a trace", cmd_invariant);
  invariant->add_option("--system", o.system_path)->required();
  invariant->add_option("--trace", o.trace)->required();
  add_scope_flags(invariant, o);

  auto* present = add("present", "Group presentation of a finite system", cmd_present);
  present->add_option("--system", o.system_path)->required();

  auto* tutte = add("tutte", "Tutte polynomial of a multigraph", cmd_tutte);
  tutte->add_option("--graph", o.graph_path, "Graph document")->required();
  tutte->add_option("--vertex-cap", o.vertex_cap);

  auto* weyl = add("weyl", "Normal ordering in the Weyl algebra", cmd_weyl);
  weyl->add_option("--word", o.word)->required();
  weyl->add_flag("--central", o.central, "Adjoin the central letter c");

  auto* pbw = add("pbw", "PBW re-ordering of a word", cmd_pbw);
  pbw->add_option("--word", o.word)->required();
  pbw->add_option("--order", o.order, "Base symbols in increasing order");

  auto* prefab = add("prefab", "Shuffle and arithmetic prefabs", cmd_prefab);
  prefab->add_option("--kind", o.kind, "shuffle or arith")->required();
  prefab->add_option("--word", o.word);
  prefab->add_option("--shuffle", o.shuffle)->expected(2);
  prefab->add_option("--n", o.n);
  prefab->add_option("--compose", o.compose)->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Json report;
  report["command"] = args;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string error;
  try {
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) outcome = handler(o);
  } catch (const InputError& e) {
    outcome = {"input-error", Json::object(), kInputError};
    error = e.what();
  } catch (const DomainError& e) {
    outcome = {"input-error", Json::object(), kInputError};
    error = e.what();
  } catch (const PreconditionError& e) {
    outcome = {"precondition-error", Json::object(), kCheckFailed};
    error = e.what();
  } catch (const UnsupportedError& e) {
    outcome = {"precondition-error", Json::object(), kCheckFailed};
    error = e.what();
  } catch (const ResourceError& e) {
    outcome = {"budget-exceeded", Json::object(), kBudgetExceeded};
    error = e.what();
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  report["status"] = outcome.status;
  report["result"] = outcome.result;
  if (!error.empty()) {
    report["error"] = error;
    err << "tgrw: " << error << '\n';
  }
  if (!o.no_timing) report["timing_ms"] = static_cast<std::int64_t>(elapsed);
  out << report.dump(2) << '\n';
  return outcome.exit_code;
}

}  // namespace tgrw::cli
