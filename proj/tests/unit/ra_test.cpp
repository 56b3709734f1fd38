#include <gtest/gtest.h>

#include "spjlab/error.hpp"
#include "spjlab/ra.hpp"

namespace spjlab {
namespace {

ColumnRef col(std::string attribute) { return ColumnRef{std::nullopt, std::move(attribute), std::nullopt}; }
ColumnRef col(std::string qualifier, std::string attribute) {
  return ColumnRef{std::move(qualifier), std::move(attribute), std::nullopt};
}
Operand lit(std::int64_t v) { return Literal{v, std::nullopt}; }
Operand lit(const char* v) { return Literal{std::string(v), std::nullopt}; }
Predicate eq(Operand a, Operand b) { return Predicate::comparison(std::move(a), CompareOp::Eq, std::move(b)); }

RaExpr doctor_join_patient() {
  return RaExpr::join(eq(col("Doctor", "id"), col("Patient", "doctorId")), RaExpr::relation("Doctor"),
                      RaExpr::relation("Patient"));
}

BindErrorCode bind_code_of(auto&& fn) {
  try {
    fn();
  } catch (const BindError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a BindError";
  return BindErrorCode::UnknownRelation;
}

std::vector<std::string> names(const BoundSchema& schema) {
  std::vector<std::string> out;
  for (const auto& c : schema.columns) out.push_back(c.qualified_name());
  return out;
}

class RaTest : public ::testing::Test {
 protected:
  Catalog catalog_ = load_catalog();
};

TEST_F(RaTest, JoinSchemaConcatenatesInputs) {
  EXPECT_EQ(names(infer_schema(doctor_join_patient(), catalog_)),
            (std::vector<std::string>{"Doctor.id", "Doctor.name", "Doctor.departmentId", "Patient.id", "Patient.name",
                                      "Patient.doctorId"}));
}

TEST_F(RaTest, ProjectionResolvesUnqualifiedColumn) {
  const BoundSchema schema = infer_schema(RaExpr::projection({col("name")}, RaExpr::relation("Doctor")), catalog_);
  ASSERT_EQ(schema.size(), 1u);
  EXPECT_EQ(schema.columns[0], (BoundColumn{"Doctor", "name", AttributeType::Text}));
}

TEST_F(RaTest, AmbiguousUnqualifiedColumn) {
  EXPECT_EQ(bind_code_of([&] { infer_schema(RaExpr::projection({col("name")}, doctor_join_patient()), catalog_); }),
            BindErrorCode::AmbiguousColumn);
}

TEST_F(RaTest, BindingErrors) {
  EXPECT_EQ(bind_code_of([&] { infer_schema(RaExpr::relation("Nurse"), catalog_); }), BindErrorCode::UnknownRelation);
  EXPECT_EQ(bind_code_of([&] { infer_schema(RaExpr::projection({col("salary")}, RaExpr::relation("Doctor")), catalog_); }),
            BindErrorCode::UnknownColumn);
  EXPECT_EQ(bind_code_of([&] {
              infer_schema(RaExpr::projection({col("X", "name")}, RaExpr::relation("Doctor")), catalog_);
            }),
            BindErrorCode::UnknownColumn);
  EXPECT_EQ(bind_code_of([&] {
              infer_schema(RaExpr::cross_product(RaExpr::relation("Doctor"), RaExpr::relation("Doctor")), catalog_);
            }),
            BindErrorCode::DuplicateQualifier);
  EXPECT_EQ(bind_code_of([&] {
              infer_schema(RaExpr::selection(eq(col("name"), lit(1)), RaExpr::relation("Doctor")), catalog_);
            }),
            BindErrorCode::TypeMismatch);
  EXPECT_EQ(bind_code_of([&] {
              infer_schema(RaExpr::selection(eq(lit("a"), lit(1)), RaExpr::relation("Doctor")), catalog_);
            }),
            BindErrorCode::TypeMismatch);
}

TEST_F(RaTest, AliasesQualifySelfJoins) {
  const RaExpr self_join = RaExpr::join(eq(col("a", "departmentId"), col("b", "departmentId")),
                                        RaExpr::relation("Doctor", "a"), RaExpr::relation("Doctor", "b"));
  const BoundSchema schema = infer_schema(self_join, catalog_);
  EXPECT_EQ(schema.columns[0].qualifier, "a");
  EXPECT_EQ(schema.columns[3].qualifier, "b");
  // The relation name is hidden behind its alias.
  EXPECT_EQ(bind_code_of([&] {
              infer_schema(RaExpr::projection({col("Doctor", "id")}, RaExpr::relation("Doctor", "a")), catalog_);
            }),
            BindErrorCode::UnknownColumn);
}

TEST_F(RaTest, SelectionKeepsChildSchema) {
  const RaExpr expr = RaExpr::selection(eq(col("departmentId"), lit(1)), RaExpr::relation("Doctor"));
  EXPECT_EQ(infer_schema(expr, catalog_), infer_schema(RaExpr::relation("Doctor"), catalog_));
}

TEST_F(RaTest, QualifyRewritesEveryReference) {
  const RaExpr expr = RaExpr::projection(
      {col("name")}, RaExpr::selection(eq(col("departmentId"), lit(1)), RaExpr::relation("Doctor")));
  const RaExpr expected = RaExpr::projection(
      {col("Doctor", "name")},
      RaExpr::selection(eq(col("Doctor", "departmentId"), lit(1)), RaExpr::relation("Doctor")));
  EXPECT_EQ(qualify(expr, catalog_), expected);
  EXPECT_EQ(infer_schema(qualify(expr, catalog_), catalog_), infer_schema(expr, catalog_));
}

TEST_F(RaTest, NodeAt) {
  const RaExpr a = RaExpr::relation("Doctor");
  const RaExpr b = RaExpr::relation("Patient");
  const RaExpr join = RaExpr::join(eq(col("Doctor", "id"), col("Patient", "doctorId")), a, b);
  const RaExpr root = RaExpr::selection(eq(col("Doctor", "id"), lit(10)), join);
  EXPECT_EQ(node_at(root, {}), root);
  EXPECT_EQ(node_at(root, {0}), join);
  EXPECT_EQ(node_at(root, {0, 1}), b);
  EXPECT_THROW(node_at(RaExpr::relation("Doctor"), {0}), InvalidPath);
  EXPECT_THROW(node_at(root, {1}), InvalidPath);
  EXPECT_THROW(node_at(root, {0, 2}), InvalidPath);
}

TEST_F(RaTest, EnumerateNodesIsPreOrder) {
  const RaExpr chain = RaExpr::projection(
      {col("Doctor", "name")}, RaExpr::selection(eq(col("Doctor", "id"), lit(10)), RaExpr::relation("Doctor")));
  EXPECT_EQ(enumerate_nodes(chain), (std::vector<NodeEntry>{{{}, NodeKind::Projection},
                                                             {{0}, NodeKind::Selection},
                                                             {{0, 0}, NodeKind::Relation}}));
  EXPECT_EQ(enumerate_nodes(RaExpr::relation("Doctor")), (std::vector<NodeEntry>{{{}, NodeKind::Relation}}));
  EXPECT_EQ(enumerate_nodes(doctor_join_patient()),
            (std::vector<NodeEntry>{{{}, NodeKind::Join}, {{0}, NodeKind::Relation}, {{1}, NodeKind::Relation}}));
}

TEST_F(RaTest, EnumeratedPathsAreExactlyTheValidOnes) {
  const RaExpr expr = RaExpr::projection(
      {col("Patient", "name")},
      RaExpr::selection(eq(col("Doctor", "id"), lit(10)),
                        RaExpr::cross_product(doctor_join_patient(), RaExpr::relation("Department"))));
  const auto entries = enumerate_nodes(expr);
  EXPECT_EQ(entries.size(), node_count(expr));
  std::set<NodePath> valid;
  for (const auto& entry : entries) {
    EXPECT_EQ(node_at(expr, entry.path).kind(), entry.kind);
    valid.insert(entry.path);
  }
  // Every path of length <= 5 over indices {0,1,2}: valid iff enumerated.
  std::vector<NodePath> frontier{NodePath{}};
  for (int depth = 0; depth < 5; ++depth) {
    std::vector<NodePath> next;
    for (const auto& path : frontier) {
      for (std::size_t i = 0; i < 3; ++i) {
        const NodePath candidate = path.child(i);
        if (valid.contains(candidate)) {
          EXPECT_NO_THROW(node_at(expr, candidate));
        } else {
          EXPECT_THROW(node_at(expr, candidate), InvalidPath) << candidate.to_dotted();
        }
        next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
}

TEST_F(RaTest, PredicateColumns) {
  using Set = std::set<QualifiedName>;
  EXPECT_EQ(predicate_columns(eq(col("Doctor", "departmentId"), lit(1))), (Set{{"Doctor", "departmentId"}}));
  EXPECT_EQ(predicate_columns(eq(col("Doctor", "id"), col("Patient", "doctorId"))),
            (Set{{"Doctor", "id"}, {"Patient", "doctorId"}}));
  EXPECT_EQ(predicate_columns(eq(lit(1), lit(1))), Set{});
  EXPECT_EQ(predicate_columns(Predicate::negation(Predicate::disjunction(eq(col("A", "x"), lit(1)),
                                                                          eq(col("B", "y"), col("A", "x"))))),
            (Set{{"A", "x"}, {"B", "y"}}));
  EXPECT_THROW(predicate_columns(eq(col("name"), lit("x"))), std::logic_error);
}

TEST_F(RaTest, DottedPaths) {
  EXPECT_EQ(NodePath::parse_dotted(""), NodePath{});
  EXPECT_EQ(NodePath::parse_dotted("0.1.12"), (NodePath{0, 1, 12}));
  EXPECT_EQ((NodePath{3, 0}).to_dotted(), "3.0");
  for (const char* bad : {".", "0.", ".1", "a", "1..2", "-1", "1.x"}) {
    EXPECT_THROW(NodePath::parse_dotted(bad), InvalidPath) << bad;
  }
}

TEST_F(RaTest, ReplaceAtSharesUntouchedSubtrees) {
  const RaExpr expr = doctor_join_patient();
  const RaExpr replaced = replace_at(expr, {1}, RaExpr::relation("Department"));
  EXPECT_EQ(node_at(replaced, {0}), node_at(expr, {0}));
  EXPECT_EQ(node_at(replaced, {1}), RaExpr::relation("Department"));
  EXPECT_EQ(node_at(expr, {1}), RaExpr::relation("Patient"));
  EXPECT_THROW(replace_at(expr, {2}, RaExpr::relation("X")), InvalidPath);
}

}  // namespace
}  // namespace spjlab
