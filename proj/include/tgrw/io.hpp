#pragma once

// JSON documents: systems, traces, reports, polynomials, presentations.
// Traces are always token arrays so multi-character letters stay unambiguous.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tgrw/bivar_poly.hpp"
#include "tgrw/convergence.hpp"
#include "tgrw/graph_pack.hpp"
#include "tgrw/rewrite.hpp"
#include "tgrw/tg_group.hpp"

namespace tgrw {

using Json = nlohmann::json;

struct RuleDocument {
  Letter lhs;
  Word rhs;

  friend bool operator==(const RuleDocument&, const RuleDocument&) = default;
};

/// Either a finite system (letters, commutations, rules) or a named pack
/// with its parameters.
struct SystemDocument {
  std::optional<std::string> pack;
  Json pack_parameters = Json::object();

  std::vector<Letter> letters;
  CommutationKind commutation = CommutationKind::None;
  std::vector<std::pair<Letter, Letter>> commutations;  // CommutationKind::Relation only
  std::vector<RuleDocument> rules;
  std::map<Letter, std::int64_t> weights;

  std::optional<Budgets> budgets;

  friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

/// Validates the schema and normalizes (pack defaults filled in, commutation
/// pairs oriented by letter order and sorted). Throws InputError with the
/// offending location.
SystemDocument parse_system_document(std::string_view text);
SystemDocument system_document_from_json(const Json& j);
Json to_json(const SystemDocument& doc);

struct LoadedSystem {
  RewriteSystem system;
  std::string pack;  // "finite" for letter-list documents
  /// Weight certificates this document offers, by name.
  std::map<std::string, WeightCertificate> weights;
  std::string default_weights;  // empty when none
  bool finite = false;
};

LoadedSystem build_system(const SystemDocument& doc, std::optional<Budgets> budgets_override = {});

/// parse_system_document + build_system.
RewriteSystem parse_system(std::string_view text);

Word word_from_json(const Json& j, const std::string& where = "trace");
Json to_json(const Trace& t);
Json to_json(const Multiplicities& m);
Json to_json(const BivarPoly& p);
BivarPoly poly_from_json(const Json& j);
Multigraph graph_from_json(const Json& j);
Json to_json(const Multigraph& g);
Json to_json(const SignedWord& w);
SignedWord signed_word_from_json(const Json& j);
Json to_json(const TGElement& e);
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
Json to_json(const ReductionReport& r);
Json to_json(const ConvergenceReport& r);
Json to_json(const Budgets& b);

std::string to_string(ReductionStatus status);

}  // namespace tgrw
