#include "tgrw/io.hpp"

#include <algorithm>
#include <set>

#include "tgrw/algebra_packs.hpp"
#include "tgrw/errors.hpp"

namespace tgrw {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::int64_t integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& item : j.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return item.key() == k; }))
      fail(where, "unknown field '" + item.key() + "'");
}

Budgets budgets_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  reject_unknown(j, {"max_steps", "max_nodes", "max_len"}, where);
  Budgets b;
  auto read = [&](const char* key, std::size_t& slot) {
    if (!j.contains(key)) return;
    const auto v = integer_at(j[key], where + "." + key);
    if (v <= 0) fail(where + "." + key, "budgets must be positive");
    slot = static_cast<std::size_t>(v);
  };
  read("max_steps", b.max_steps);
  read("max_nodes", b.max_nodes);
  read("max_len", b.max_length);
  return b;
}

// Pack parameters with defaults filled in.
Json pack_parameters(const std::string& pack, const Json& given) {
  const std::string where = "pack '" + pack + "'";
  Json params = Json::object();
  if (pack == "weyl") {
    reject_unknown(given, {"central"}, where);
    params["central"] = false;
    if (given.contains("central")) {
      if (!given["central"].is_boolean()) fail(where + ".central", "expected a boolean");
      params["central"] = given["central"];
    }
  } else if (pack == "pbw") {
    reject_unknown(given, {"order"}, where);
    params["order"] = given.contains("order") ? string_at(given["order"], where + ".order") : std::string("abc");
  } else if (pack == "shuffle") {
    reject_unknown(given, {"base"}, where);
    params["base"] = given.contains("base") ? string_at(given["base"], where + ".base") : std::string("abc");
  } else if (pack == "arith") {
    reject_unknown(given, {}, where);
  } else if (pack == "graph") {
    reject_unknown(given, {"vertex_cap"}, where);
    params["vertex_cap"] = kDefaultVertexCap;
    if (given.contains("vertex_cap")) {
      const auto cap = integer_at(given["vertex_cap"], where + ".vertex_cap");
      if (cap < 1 || cap > 12) fail(where + ".vertex_cap", "must lie in [1, 12]");
      params["vertex_cap"] = cap;
    }
  } else {
    fail("pack", "unknown pack '" + pack + "' (expected weyl, pbw, shuffle, arith or graph)");
  }
  return params;
}

}  // namespace

SystemDocument system_document_from_json(const Json& j) {
  if (!j.is_object()) fail("document", "expected a JSON object");
  SystemDocument doc;
  if (j.contains("budgets")) doc.budgets = budgets_from_json(j["budgets"], "budgets");

  if (j.contains("pack")) {
    doc.pack = string_at(j["pack"], "pack");
    Json given = j;
    given.erase("pack");
    given.erase("budgets");
    for (const char* key : {"letters", "commutations", "rules", "weights"})
      if (given.contains(key)) fail("pack", std::string("field '") + key + "' is not allowed in a pack document");
    doc.pack_parameters = pack_parameters(*doc.pack, given);
    return doc;
  }

  reject_unknown(j, {"letters", "commutations", "rules", "weights", "budgets"}, "document");
  const auto& letters = field(j, "letters", "document");
  if (!letters.is_array() || letters.empty()) fail("letters", "expected a nonempty array of tokens");
  std::map<Letter, std::size_t> rank;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const std::string where = "letters[" + std::to_string(i) + "]";
    auto x = string_at(letters[i], where);
    if (x.empty()) fail(where, "empty token");
    if (!rank.emplace(x, i).second) fail(where, "duplicate letter '" + x + "'");
    doc.letters.push_back(std::move(x));
  }
  auto known = [&](const Letter& x, const std::string& where) {
    if (!rank.count(x)) fail(where, "'" + x + "' is not listed in letters");
  };

  if (j.contains("commutations")) {
    const auto& c = j["commutations"];
    if (c.is_string()) {
      const auto mode = c.get<std::string>();
      if (mode == "total") doc.commutation = CommutationKind::Total;
      else if (mode == "none") doc.commutation = CommutationKind::None;
      else fail("commutations", "expected \"total\", \"none\" or an array of pairs");
    } else if (c.is_array()) {
      std::set<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string where = "commutations[" + std::to_string(i) + "]";
        if (!c[i].is_array() || c[i].size() != 2) fail(where, "expected a pair of tokens");
        auto x = string_at(c[i][0], where + "[0]");
        auto y = string_at(c[i][1], where + "[1]");
        known(x, where);
        known(y, where);
        if (x == y) fail(where, "commutation pairs must be irreflexive");
        pairs.insert(std::minmax(rank[x], rank[y]));
      }
      doc.commutation = pairs.empty() ? CommutationKind::None : CommutationKind::Relation;
      for (auto [a, b] : pairs) doc.commutations.emplace_back(doc.letters[a], doc.letters[b]);
    } else {
      fail("commutations", "expected \"total\", \"none\" or an array of pairs");
    }
  }

  if (j.contains("rules")) {
    const auto& rules = j["rules"];
    if (!rules.is_array()) fail("rules", "expected an array");
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const std::string where = "rules[" + std::to_string(i) + "]";
      if (!rules[i].is_object()) fail(where, "expected an object");
      reject_unknown(rules[i], {"lhs", "rhs"}, where);
      RuleDocument rule;
      rule.lhs = string_at(field(rules[i], "lhs", where), where + ".lhs");
      known(rule.lhs, where + ".lhs");
      const auto& rhs = field(rules[i], "rhs", where);
      if (!rhs.is_array()) fail(where + ".rhs", "expected an array of tokens");
      if (rhs.empty()) fail(where + ".rhs", "rules must map into S, not M (empty right-hand side)");
      for (std::size_t k = 0; k < rhs.size(); ++k) {
        auto y = string_at(rhs[k], where + ".rhs[" + std::to_string(k) + "]");
        known(y, where + ".rhs[" + std::to_string(k) + "]");
        rule.rhs.push_back(std::move(y));
      }
      doc.rules.push_back(std::move(rule));
    }
  }

  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_object()) fail("weights", "expected an object token -> positive integer");
    for (const auto& item : w.items()) {
      const std::string where = "weights." + item.key();
      known(item.key(), where);
      const auto v = integer_at(item.value(), where);
      if (v <= 0) fail(where, "weights must be positive");
      doc.weights.emplace(item.key(), v);
    }
  }
  return doc;
}

SystemDocument parse_system_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return system_document_from_json(j);
}

Json to_json(const SystemDocument& doc) {
  Json j = Json::object();
  if (doc.pack) {
    j = doc.pack_parameters;
    j["pack"] = *doc.pack;
  } else {
    j["letters"] = doc.letters;
    switch (doc.commutation) {
      case CommutationKind::None:
        j["commutations"] = "none";
        break;
      case CommutationKind::Total:
        j["commutations"] = "total";
        break;
      case CommutationKind::Relation: {
        Json pairs = Json::array();
        for (const auto& [x, y] : doc.commutations) pairs.push_back({x, y});
        j["commutations"] = pairs;
        break;
      }
    }
    Json rules = Json::array();
    for (const auto& r : doc.rules) rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
    j["rules"] = rules;
    if (!doc.weights.empty()) j["weights"] = doc.weights;
  }
  if (doc.budgets) j["budgets"] = to_json(*doc.budgets);
  return j;
}

LoadedSystem build_system(const SystemDocument& doc, std::optional<Budgets> budgets_override) {
  const Budgets budgets = budgets_override.value_or(doc.budgets.value_or(Budgets{}));
  if (!doc.pack) {
    auto alphabet = CommutationAlphabet::finite(doc.letters, doc.commutation, doc.commutations);
    std::vector<std::pair<Letter, Word>> rules;
    for (const auto& r : doc.rules) rules.emplace_back(r.lhs, r.rhs);
    LoadedSystem loaded{RewriteSystem::finite(alphabet, rules, budgets), "finite", {}, {}, true};
    if (!doc.weights.empty()) {
      auto table = std::make_shared<std::map<Letter, std::int64_t>>(doc.weights);
      loaded.weights.emplace("document", WeightCertificate{"document", [table](const Letter& x) {
                                                             auto it = table->find(x);
                                                             return it == table->end() ? std::int64_t{0} : it->second;
                                                           }});
      loaded.default_weights = "document";
    }
    return loaded;
  }
  const auto& pack = *doc.pack;
  const auto& p = doc.pack_parameters;
  if (pack == "weyl")
    return {weyl_system(p.at("central").get<bool>(), budgets), pack, {{"inversions", weyl_inversion_weights()}}, "inversions", false};
  if (pack == "pbw") {
    const auto order = p.at("order").get<std::string>();
    return {pbw_system(order, budgets), pack, {{"inversions", pbw_inversion_weights(order)}}, "inversions", false};
  }
  if (pack == "shuffle")
    return {prefab_system(shuffle_prefab(p.at("base").get<std::string>()), budgets), pack, {{"length", length_weights()}}, "length", false};
  if (pack == "arith") return {prefab_system(arithmetic_prefab(), budgets), pack, {{"omega", omega_weights()}}, "omega", false};
  if (pack == "graph") {
    GraphPackOptions options{p.at("vertex_cap").get<int>(), budgets};
    return {graph_system(options), pack, {{"edges", GraphPack::edge_weights()}}, "edges", false};
  }
  fail("pack", "unknown pack '" + pack + "'");
}

RewriteSystem parse_system(std::string_view text) { return build_system(parse_system_document(text)).system; }

Word word_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of tokens");
  if (j.empty()) fail(where, "expected a nonempty array (traces are nonempty)");
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) w.push_back(string_at(j[i], where + "[" + std::to_string(i) + "]"));
  return w;
}

Json to_json(const Trace& t) { return t.word(); }

Json to_json(const Multiplicities& m) {
  Json j = Json::object();
  for (const auto& [x, k] : m) j[x] = k;
  return j;
}

Json to_json(const BivarPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"x", e.first}, {"y", e.second}, {"coeff", c}});
  return {{"terms", terms}};
}

BivarPoly poly_from_json(const Json& j) {
  if (!j.is_object()) fail("polynomial", "expected an object");
  const auto& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) fail("polynomial.terms", "expected an array");
  BivarPoly p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "polynomial.terms[" + std::to_string(i) + "]";
    const auto x = integer_at(field(terms[i], "x", where), where + ".x");
    const auto y = integer_at(field(terms[i], "y", where), where + ".y");
    if (x < 0 || y < 0) fail(where, "exponents must be non-negative");
    p += BivarPoly::monomial(static_cast<int>(x), static_cast<int>(y), integer_at(field(terms[i], "coeff", where), where + ".coeff"));
  }
  return p;
}

Multigraph graph_from_json(const Json& j) {
  if (!j.is_object()) fail("graph", "expected an object");
  reject_unknown(j, {"vertices", "edges"}, "graph");
  Multigraph g;
  const auto n = integer_at(field(j, "vertices", "graph"), "graph.vertices");
  if (n < 1 || n > 64) fail("graph.vertices", "must lie in [1, 64]");
  g.vertices = static_cast<int>(n);
  const auto& edges = field(j, "edges", "graph");
  if (!edges.is_array()) fail("graph.edges", "expected an array of [u, v] pairs");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) fail(where, "expected a pair [u, v]");
    const auto u = integer_at(edges[i][0], where + "[0]");
    const auto v = integer_at(edges[i][1], where + "[1]");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(where, "endpoint outside [0, vertices)");
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"vertices", g.vertices}, {"edges", edges}};
}

Json to_json(const SignedWord& w) {
  Json j = Json::array();
  for (const auto& s : w) j.push_back({s.letter, s.sign});
  return j;
}

SignedWord signed_word_from_json(const Json& j) {
  if (!j.is_array()) fail("signed word", "expected an array of [token, sign] pairs");
  SignedWord w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "signed word[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) fail(where, "expected [token, sign]");
    const auto sign = integer_at(j[i][1], where + "[1]");
    if (sign != 1 && sign != -1) fail(where, "sign must be 1 or -1");
    w.push_back({string_at(j[i][0], where + "[0]"), static_cast<int>(sign)});
  }
  return w;
}

Json to_json(const TGElement& e) {
  Json j = Json::object();
  if (e.abelian()) j["exponents"] = to_json(Multiplicities(e.exponents()));
  else j["word"] = to_json(e.word());
  j["text"] = e.to_string();
  return j;
}

Json to_json(const Presentation& p) {
  Json relations = Json::array();
  for (const auto& r : p.relations) relations.push_back({{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  return {{"generators", p.generators}, {"relations", relations}, {"text", p.to_string()}};
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) fail("presentation", "expected an object");
  Presentation p;
  p.generators = word_from_json(field(j, "generators", "presentation"), "presentation.generators");
  const auto& relations = field(j, "relations", "presentation");
  if (!relations.is_array()) fail("presentation.relations", "expected an array");
  for (const auto& r : relations)
    p.relations.push_back({signed_word_from_json(field(r, "lhs", "relation")), signed_word_from_json(field(r, "rhs", "relation"))});
  return p;
}

std::string to_string(ReductionStatus status) {
  switch (status) {
    case ReductionStatus::Normalized:
      return "normalized";
    case ReductionStatus::StepBudgetExceeded:
      return "step-budget-exceeded";
    case ReductionStatus::LengthBudgetExceeded:
      return "length-budget-exceeded";
  }
  return "normalized";
}

Json to_json(const ReductionReport& r) {
  return {{"trace", to_json(r.trace)}, {"status", to_string(r.status)}, {"steps", r.steps}, {"budget_hit", r.budget_hit()}};
}

Json to_json(const ConvergenceReport& r) {
  Json j = {
      {"convergent", r.convergent()},
      {"termination", to_string(r.termination)},
      {"local_confluence", to_string(r.confluence)},
      {"scope",
       {{"description", r.scope_description},
        {"letters", r.scope_letters},
        {"max_trace_length", r.max_trace_length},
        {"full_alphabet", r.full_alphabet}}},
      {"rules_checked", r.rules_checked},
      {"peaks_checked", r.peaks_checked},
  };
  if (r.weight_violation)
    j["weight_violation"] = {{"lhs", r.weight_violation->lhs},
                             {"rhs", to_json(r.weight_violation->rhs)},
                             {"heavy_letter", r.weight_violation->heavy}};
  if (r.counterexample)
    j["counterexample"] = {{"source", to_json(r.counterexample->source)},
                           {"left", to_json(r.counterexample->left)},
                           {"right", to_json(r.counterexample->right)},
                           {"left_closure", r.counterexample->left_closure},
                           {"right_closure", r.counterexample->right_closure}};
  if (r.certificate) j["certificate"] = r.certificate->scope();
  return j;
}

Json to_json(const Budgets& b) {
  return {{"max_steps", b.max_steps}, {"max_nodes", b.max_nodes}, {"max_len", b.max_length}};
}

}  // namespace tgrw
