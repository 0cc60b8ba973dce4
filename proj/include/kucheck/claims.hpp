#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kucheck/properties.hpp"

namespace kuc {

enum class ClaimId {
  Remark1,             // UE != empty implies negative introspection fails
  Theorem1,            // UE != empty implies K'(omega) != omega
  Theorem2,            // K'E = KE for proper E; K'(omega) = omega \ U(omega)
  Remark2,             // UE subset of U(omega) for every E
  Remark3Consistency,  // union over all events matches a fresh recomputation
  EqU02,               // U'(U(omega)) = U(omega)
  EqU03,               // U'(empty) = U(omega)
  DlrChain,            // the four-step collapse under standard K
  DlrrChain,           // the revised chain under K', conclusion UE subset of U(omega)
  Footnote8Symmetry,   // UE != empty implies some E has U(E) != U(~E)
  DiscussionCollapse,  // iterates touching omega force the intersection to empty
};

inline constexpr int kClaimCount = 11;

const std::vector<ClaimId>& all_claims();
const char* claim_id_string(ClaimId c);  // stable kebab-case, e.g. "dlr-chain"
std::optional<ClaimId> claim_from_string(std::string_view s);

enum class StepStatus { Holds, Fails, NotApplicable };
const char* step_status_string(StepStatus s);

enum class Verdict {
  Verified,            // every applicable step holds
  VerifiedConclusion,  // the conclusion holds though an intermediate step fails
  PremiseNotMet,       // a structural precondition fails (e.g. non-serial model)
  RefutedStep,         // a step fails and the conclusion does not hold
  Vacuous,             // the existential premise has no witness
};
const char* verdict_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view s);
bool verdict_is_success(Verdict v);  // Verified, VerifiedConclusion, Vacuous

struct ClaimStep {
  std::string description;
  std::vector<NamedSet> sets;
  StepStatus status = StepStatus::NotApplicable;
};

struct ClaimReport {
  ClaimId claim;
  std::vector<ClaimStep> steps;
  bool premise_status = true;
  Verdict verdict = Verdict::Verified;
};

// chosen_event overrides the default event for dlr-chain, dlrr-chain and
// discussion-collapse; passing it for any other claim is a usage error.
ClaimReport verify_claim(const Model& m, ClaimId c,
                         std::optional<Event> chosen_event = std::nullopt,
                         const Caps& caps = {});

}  // namespace kuc
