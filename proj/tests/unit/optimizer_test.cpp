#include <gtest/gtest.h>

#include <stdexcept>

#include "spjlab/optimizer.hpp"
#include "spjlab/translator.hpp"

namespace spjlab {
namespace {

ColumnRef col(std::string qualifier, std::string attribute) {
  return ColumnRef{std::move(qualifier), std::move(attribute), std::nullopt};
}
Operand lit(std::int64_t v) { return Literal{v, std::nullopt}; }
Operand lit(const char* v) { return Literal{std::string(v), std::nullopt}; }
Predicate eq(Operand a, Operand b) { return Predicate::comparison(std::move(a), CompareOp::Eq, std::move(b)); }
Predicate conj(Predicate a, Predicate b) { return Predicate::conjunction(std::move(a), std::move(b)); }

const RaExpr kDepartment = RaExpr::relation("Department");
const RaExpr kDoctor = RaExpr::relation("Doctor");
const RaExpr kPatient = RaExpr::relation("Patient");
const Predicate kFk = eq(col("Doctor", "id"), col("Patient", "doctorId"));
const Predicate kDeptFk = eq(col("Department", "id"), col("Doctor", "departmentId"));
const Predicate kCardiology = eq(col("Doctor", "departmentId"), lit(1));
const Predicate kEve = eq(col("Patient", "name"), lit("Eve"));

RaExpr three_way() { return RaExpr::join(kFk, RaExpr::join(kDeptFk, kDepartment, kDoctor), kPatient); }

TEST(Optimizer, PushesPastJoinLeft) {
  const auto out = push_down_selections(RaExpr::selection(kCardiology, RaExpr::join(kFk, kDoctor, kPatient)));
  EXPECT_EQ(out.expr, RaExpr::join(kFk, RaExpr::selection(kCardiology, kDoctor), kPatient));
  EXPECT_EQ(out.trace, (RewriteTrace{{RewriteRule::PushPastJoinLeft, {}}}));
}

TEST(Optimizer, PredicateOverBothInputsStays) {
  const RaExpr expr = RaExpr::selection(kFk, RaExpr::cross_product(kDoctor, kPatient));
  const auto out = push_down_selections(expr);
  EXPECT_EQ(out.expr, expr);
  EXPECT_TRUE(out.trace.empty());
}

TEST(Optimizer, PushesOneHopRight) {
  const auto out = push_down_selections(RaExpr::selection(kEve, three_way()));
  EXPECT_EQ(out.expr, RaExpr::join(kFk, RaExpr::join(kDeptFk, kDepartment, kDoctor), RaExpr::selection(kEve, kPatient)));
  EXPECT_EQ(out.trace, (RewriteTrace{{RewriteRule::PushPastJoinRight, {}}}));
}

TEST(Optimizer, PushesTwoHops) {
  const Predicate cardiology = eq(col("Department", "name"), lit("Cardiology"));
  const auto out = push_down_selections(RaExpr::selection(cardiology, three_way()));
  EXPECT_EQ(out.expr, RaExpr::join(kFk, RaExpr::join(kDeptFk, RaExpr::selection(cardiology, kDepartment), kDoctor),
                                   kPatient));
  EXPECT_EQ(out.trace,
            (RewriteTrace{{RewriteRule::PushPastJoinLeft, {}}, {RewriteRule::PushPastJoinLeft, {0}}}));
}

TEST(Optimizer, CrossProductRules) {
  const auto left = push_down_selections(RaExpr::selection(kCardiology, RaExpr::cross_product(kDoctor, kPatient)));
  EXPECT_EQ(left.expr, RaExpr::cross_product(RaExpr::selection(kCardiology, kDoctor), kPatient));
  EXPECT_EQ(left.trace[0].rule, RewriteRule::PushPastCrossLeft);
  const auto right = push_down_selections(RaExpr::selection(kEve, RaExpr::cross_product(kDoctor, kPatient)));
  EXPECT_EQ(right.expr, RaExpr::cross_product(kDoctor, RaExpr::selection(kEve, kPatient)));
  EXPECT_EQ(right.trace[0].rule, RewriteRule::PushPastCrossRight);
}

TEST(Optimizer, SplitsAndPushesBothConjuncts) {
  const RaExpr expr = RaExpr::projection(
      {col("Patient", "name")}, RaExpr::selection(conj(kCardiology, kEve), RaExpr::join(kFk, kDoctor, kPatient)));
  const auto out = optimize(expr);
  EXPECT_EQ(out.expr, RaExpr::projection({col("Patient", "name")},
                                         RaExpr::join(kFk, RaExpr::selection(kCardiology, kDoctor),
                                                      RaExpr::selection(kEve, kPatient))));
  ASSERT_FALSE(out.trace.empty());
  EXPECT_EQ(out.trace.front(), (RewriteStep{RewriteRule::SplitConjunction, {0}}));
  EXPECT_EQ(out.trace, (RewriteTrace{{RewriteRule::SplitConjunction, {0}},
                                     {RewriteRule::PushPastJoinLeft, {0}},
                                     {RewriteRule::PushPastJoinRight, {0}}}));
}

TEST(Optimizer, SplitOrder) {
  const Predicate a = eq(col("Doctor", "id"), lit(10));
  const Predicate b = eq(col("Doctor", "id"), lit(11));
  const Predicate c = eq(col("Doctor", "id"), lit(12));
  const auto out = split_conjunctions(RaExpr::selection(conj(conj(a, b), c), kDoctor));
  EXPECT_EQ(out.expr, RaExpr::selection(a, RaExpr::selection(b, RaExpr::selection(c, kDoctor))));
  EXPECT_EQ(out.trace, (RewriteTrace{{RewriteRule::SplitConjunction, {}}, {RewriteRule::SplitConjunction, {}}}));
}

TEST(Optimizer, OrAndNotAreNotSplit) {
  const Predicate either = Predicate::disjunction(conj(kCardiology, kEve), kFk);
  const Predicate negated = Predicate::negation(conj(kCardiology, kEve));
  for (const auto& p : {either, negated}) {
    const RaExpr expr = RaExpr::selection(p, RaExpr::join(kFk, kDoctor, kPatient));
    const auto out = optimize(expr);
    EXPECT_EQ(out.expr, expr);
    EXPECT_TRUE(out.trace.empty());
  }
}

TEST(Optimizer, NoSelectionMeansNoChange) {
  const RaExpr expr = RaExpr::projection({col("Patient", "name")}, three_way());
  const auto out = optimize(expr);
  EXPECT_EQ(out.expr, expr);
  EXPECT_TRUE(out.trace.empty());
}

TEST(Optimizer, ConstantPredicatesStayPut) {
  const RaExpr expr = RaExpr::selection(eq(lit(1), lit(1)), RaExpr::join(kFk, kDoctor, kPatient));
  EXPECT_EQ(optimize(expr).expr, expr);
}

TEST(Optimizer, StepsOverSelectionThatCannotMove) {
  // The upper σ owns only Patient columns; the lower one spans both inputs.
  const RaExpr expr = RaExpr::selection(kEve, RaExpr::selection(kFk, RaExpr::cross_product(kDoctor, kPatient)));
  const auto out = push_down_selections(expr);
  EXPECT_EQ(out.expr, RaExpr::selection(kFk, RaExpr::cross_product(kDoctor, RaExpr::selection(kEve, kPatient))));
  EXPECT_EQ(out.trace, (RewriteTrace{{RewriteRule::PushPastCrossRight, {}}}));
}

TEST(Optimizer, AliasesAreOwners) {
  const RaExpr d = RaExpr::relation("Doctor", "d");
  const RaExpr e = RaExpr::relation("Doctor", "e");
  const Predicate p = eq(col("e", "name"), lit("Bob"));
  const auto out = optimize(RaExpr::selection(p, RaExpr::cross_product(d, e)));
  EXPECT_EQ(out.expr, RaExpr::cross_product(d, RaExpr::selection(p, e)));
}

TEST(Optimizer, Idempotent) {
  const RaExpr expr = RaExpr::selection(conj(conj(kCardiology, kEve), kDeptFk), three_way());
  const auto once = optimize(expr);
  const auto twice = optimize(once.expr);
  EXPECT_EQ(twice.expr, once.expr);
  EXPECT_TRUE(twice.trace.empty());
}

TEST(Optimizer, TraceReplays) {
  const RaExpr expr = RaExpr::projection(
      {col("Patient", "name")},
      RaExpr::selection(conj(conj(kCardiology, kEve), eq(col("Department", "name"), lit("Oncology"))), three_way()));
  const auto out = optimize(expr);
  EXPECT_EQ(replay(expr, out.trace), out.expr);
}

TEST(Optimizer, ApplyStepRejectsStepsThatDoNotFire) {
  const RaExpr expr = RaExpr::selection(kCardiology, RaExpr::join(kFk, kDoctor, kPatient));
  EXPECT_FALSE(apply_step(expr, {RewriteRule::PushPastJoinRight, {}}).has_value());
  EXPECT_FALSE(apply_step(expr, {RewriteRule::SplitConjunction, {}}).has_value());
  EXPECT_FALSE(apply_step(expr, {RewriteRule::PushPastJoinLeft, {0}}).has_value());
  EXPECT_FALSE(apply_step(expr, {RewriteRule::PushPastJoinLeft, {7, 7}}).has_value());
  EXPECT_TRUE(apply_step(expr, {RewriteRule::PushPastJoinLeft, {}}).has_value());
  EXPECT_THROW(replay(expr, {{RewriteRule::PushPastCrossLeft, {}}}), std::invalid_argument);
}

TEST(Optimizer, SchemaPreservedOnTranslatedQuery) {
  const Catalog catalog = load_catalog();
  const RaExpr expr = translate(parse("SELECT * FROM Department JOIN Doctor ON Department.id = Doctor.departmentId, "
                                      "Patient WHERE Patient.name = 'Eve' AND Department.id = 1"),
                                catalog);
  const auto out = optimize(expr);
  EXPECT_EQ(infer_schema(out.expr, catalog), infer_schema(expr, catalog));
  EXPECT_EQ(out.trace.size(), 4u);
}

TEST(Optimizer, RuleNames) {
  EXPECT_EQ(to_string(RewriteRule::SplitConjunction), "SplitConjunction");
  EXPECT_EQ(to_string(RewriteRule::PushPastCrossRight), "PushPastCrossRight");
}

}  // namespace
}  // namespace spjlab
