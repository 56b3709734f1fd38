#include "spjlab/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "spjlab/error.hpp"

namespace spjlab {
namespace {

enum class RuleFamily { Split, Push };

struct Match {
  RewriteRule rule;
  RaExpr replacement;
};

std::optional<Match> match_split(const RaExpr& node) {
  const auto* selection = node.get_if<Selection>();
  if (selection == nullptr) return std::nullopt;
  const auto* conjunction = selection->predicate.get_if<And>();
  if (conjunction == nullptr) return std::nullopt;
  return Match{RewriteRule::SplitConjunction,
               RaExpr::selection(conjunction->left,
                                 RaExpr::selection(conjunction->right, selection->child))};
}

bool subset_of(const std::set<QualifiedName>& columns, const std::set<std::string>& owners) {
  return std::all_of(columns.begin(), columns.end(),
                     [&](const QualifiedName& column) { return owners.contains(column.first); });
}

// σ[p] over zero or more Selections over a Join/CrossProduct whose one input
// owns every column of p. The intermediate Selections stay where they are;
// σ[p] lands directly on that input.
std::optional<Match> match_push(const RaExpr& node) {
  const auto* selection = node.get_if<Selection>();
  if (selection == nullptr) return std::nullopt;

  std::vector<Predicate> stepped_over;
  const RaExpr* below = &selection->child;
  while (const auto* inner = below->get_if<Selection>()) {
    stepped_over.push_back(inner->predicate);
    below = &inner->child;
  }
  const NodeKind kind = below->kind();
  if (kind != NodeKind::Join && kind != NodeKind::CrossProduct) return std::nullopt;

  const auto columns = predicate_columns(selection->predicate);
  if (columns.empty()) return std::nullopt;

  std::optional<std::size_t> side;
  if (subset_of(columns, qualifiers(below->child(0)))) {
    side = 0;
  } else if (subset_of(columns, qualifiers(below->child(1)))) {
    side = 1;
  } else {
    return std::nullopt;
  }

  RaExpr rewritten =
      below->with_child(*side, RaExpr::selection(selection->predicate, below->child(*side)));
  for (auto it = stepped_over.rbegin(); it != stepped_over.rend(); ++it) {
    rewritten = RaExpr::selection(*it, std::move(rewritten));
  }

  RewriteRule rule;
  if (kind == NodeKind::Join) {
    rule = *side == 0 ? RewriteRule::PushPastJoinLeft : RewriteRule::PushPastJoinRight;
  } else {
    rule = *side == 0 ? RewriteRule::PushPastCrossLeft : RewriteRule::PushPastCrossRight;
  }
  return Match{rule, std::move(rewritten)};
}

std::optional<Match> match(RuleFamily family, const RaExpr& node) {
  return family == RuleFamily::Split ? match_split(node) : match_push(node);
}

// First node in pre-order where the family fires.
std::optional<std::pair<NodePath, Match>> first_match(RuleFamily family, const RaExpr& expr,
                                                      const NodePath& path) {
  if (auto found = match(family, expr)) return std::make_pair(path, std::move(*found));
  for (std::size_t i = 0; i < expr.arity(); ++i) {
    if (auto found = first_match(family, expr.child(i), path.child(i))) return found;
  }
  return std::nullopt;
}

Rewritten run_to_fixpoint(RuleFamily family, const RaExpr& expr) {
  Rewritten out{expr, {}};
  while (auto found = first_match(family, out.expr, NodePath{})) {
    auto& [path, m] = *found;
    out.expr = replace_at(out.expr, path, std::move(m.replacement));
    out.trace.push_back({m.rule, std::move(path)});
  }
  return out;
}

}  // namespace

std::string_view to_string(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::SplitConjunction:
      return "SplitConjunction";
    case RewriteRule::PushPastJoinLeft:
      return "PushPastJoinLeft";
    case RewriteRule::PushPastJoinRight:
      return "PushPastJoinRight";
    case RewriteRule::PushPastCrossLeft:
      return "PushPastCrossLeft";
    case RewriteRule::PushPastCrossRight:
      return "PushPastCrossRight";
  }
  return "?";
}

Rewritten split_conjunctions(const RaExpr& expr) { return run_to_fixpoint(RuleFamily::Split, expr); }

Rewritten push_down_selections(const RaExpr& expr) { return run_to_fixpoint(RuleFamily::Push, expr); }

Rewritten optimize(const RaExpr& expr) {
  Rewritten split = split_conjunctions(expr);
  Rewritten pushed = push_down_selections(split.expr);
  split.trace.insert(split.trace.end(), pushed.trace.begin(), pushed.trace.end());
  return {std::move(pushed.expr), std::move(split.trace)};
}

std::optional<RaExpr> apply_step(const RaExpr& expr, const RewriteStep& step) {
  const RaExpr* target = nullptr;
  try {
    target = &node_at(expr, step.at);
  } catch (const InvalidPath&) {
    return std::nullopt;
  }
  const RuleFamily family =
      step.rule == RewriteRule::SplitConjunction ? RuleFamily::Split : RuleFamily::Push;
  auto found = match(family, *target);
  if (!found || found->rule != step.rule) return std::nullopt;
  return replace_at(expr, step.at, std::move(found->replacement));
}

RaExpr replay(const RaExpr& expr, const RewriteTrace& trace) {
  RaExpr current = expr;
  for (const auto& step : trace) {
    auto next = apply_step(current, step);
    if (!next) {
      throw std::invalid_argument(std::string(to_string(step.rule)) + " does not apply at '" +
                                  step.at.to_dotted() + "'");
    }
    current = std::move(*next);
  }
  return current;
}

}  // namespace spjlab
