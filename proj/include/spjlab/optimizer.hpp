#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spjlab/ra.hpp"

namespace spjlab {

enum class RewriteRule {
  SplitConjunction,
  PushPastJoinLeft,
  PushPastJoinRight,
  PushPastCrossLeft,
  PushPastCrossRight,
};

std::string_view to_string(RewriteRule rule);

struct RewriteStep {
  RewriteRule rule;
  NodePath at;  // the Selection the rule fired on, addressed before the rewrite

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteTrace = std::vector<RewriteStep>;

struct Rewritten {
  RaExpr expr;
  RewriteTrace trace;
};

// σ[a AND b](E) -> σ[a](σ[b](E)), repeated until no Selection has a top-level
// AND. OR and NOT are left alone.
Rewritten split_conjunctions(const RaExpr& expr);

// Moves each Selection below the nearest Join / CrossProduct when all of its
// columns come from one input, stepping over intermediate Selections that
// cannot move themselves. Predicates that reference no column stay put.
// Rules fire one at a time on the first match in pre-order until none does.
Rewritten push_down_selections(const RaExpr& expr);

// split_conjunctions followed by push_down_selections. `expr` must be
// qualified.
Rewritten optimize(const RaExpr& expr);

// Applies one recorded step. Returns nullopt if `step.rule` does not fire at
// `step.at`.
std::optional<RaExpr> apply_step(const RaExpr& expr, const RewriteStep& step);

// Replays a whole trace; throws std::invalid_argument on a step that does
// not apply.
RaExpr replay(const RaExpr& expr, const RewriteTrace& trace);

}  // namespace spjlab
