#include <gtest/gtest.h>

#include "lieidx/classical.hpp"

using namespace lieidx;

namespace {

std::vector<Partition> rigid_rows(const ClassicalSweepReport& rep) {
  std::vector<Partition> out;
  for (const auto& r : rep.rows) {
    if (r.valid && r.rigidity == Rigidity::Rigid) out.push_back(r.partition);
  }
  return out;
}

const SweepRow& row(const ClassicalSweepReport& rep, const std::vector<int>& parts) {
  for (const auto& r : rep.rows) {
    if (r.partition == Partition(parts)) return r;
  }
  throw std::runtime_error("no row");
}

void expect_all_certified(const ClassicalSweepReport& rep) {
  for (const auto& r : rep.rows) {
    if (!r.valid) continue;
    SCOPED_TRACE(r.partition.to_string());
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_EQ(r.dim_centralizer, r.formula_dim);
    EXPECT_TRUE(r.index.certified);
    EXPECT_EQ(r.index.stabilizer_dim, static_cast<std::size_t>(rep.rank));
  }
}

}  // namespace

TEST(Classical, RigidityClassification) {
  EXPECT_EQ(classify_rigidity('A', Partition({1, 1, 1})), Rigidity::Rigid);
  EXPECT_EQ(classify_rigidity('A', Partition({2, 1})), Rigidity::Induced);
  EXPECT_EQ(classify_rigidity('B', Partition({2, 2, 1})), Rigidity::Rigid);
  EXPECT_EQ(classify_rigidity('B', Partition({3, 1, 1})), Rigidity::Induced);
  EXPECT_EQ(classify_rigidity('C', Partition({2, 2, 1, 1})), Rigidity::NotClassified);
  EXPECT_EQ(to_string(Rigidity::NotClassified), "not classified");
  EXPECT_EQ(sweep_label('B', 3, Partition({3, 3, 1})), "B3(3,3,1)");
}

TEST(Classical, B2Sweep) {
  ClassicalSweepReport rep = sweep('B', 2, RunConfig{});
  EXPECT_EQ(rep.rows.size(), partitions_of(5).size());
  EXPECT_EQ(rep.valid_count(), 4u);
  std::vector<Partition> rigid = {Partition({2, 2, 1}), Partition({1, 1, 1, 1, 1})};
  EXPECT_EQ(rigid_rows(rep), rigid);
  EXPECT_EQ(rep.rigid_nonzero_count(), 1u);
  EXPECT_TRUE(row(rep, {2, 2, 1}).powers_check);
  EXPECT_EQ(row(rep, {2, 2, 1}).dim_center, 1u);
  EXPECT_FALSE(row(rep, {4, 1}).valid);
  expect_all_certified(rep);
  EXPECT_TRUE(rep.passed());
}

TEST(Classical, B3SweepCoversThreeThreeOne) {
  ClassicalSweepReport rep = sweep('B', 3, RunConfig{});
  const SweepRow& r = row(rep, {3, 3, 1});
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(r.rigidity, Rigidity::Induced);
  ASSERT_TRUE(r.powers_predicted.has_value());
  EXPECT_FALSE(*r.powers_predicted);
  EXPECT_FALSE(r.powers_check);
  expect_all_certified(rep);
  EXPECT_TRUE(rep.passed());
}

TEST(Classical, D4SweepRigidRowsPass) {
  ClassicalSweepReport rep = sweep('D', 4, RunConfig{});
  EXPECT_GE(rep.rigid_nonzero_count(), 1u);
  for (const auto& r : rep.rows) {
    if (r.valid && r.rigidity == Rigidity::Rigid) {
      EXPECT_TRUE(r.powers_check) << r.partition.to_string();
    }
  }
  expect_all_certified(rep);
  EXPECT_TRUE(rep.passed());
}

TEST(Classical, A3OnlyZeroOrbitRigid) {
  ClassicalSweepReport rep = sweep('A', 3, RunConfig{});
  EXPECT_EQ(rep.valid_count(), 5u);
  EXPECT_EQ(rigid_rows(rep), std::vector<Partition>{Partition({1, 1, 1, 1})});
  // every other orbit is induced from 0 in the Levi of its dual partition
  const long dim_g = 15;
  for (const auto& r : rep.rows) {
    if (r.is_zero_orbit()) continue;
    long levi = -1;
    const Partition dual = r.partition.dual();
    for (int k : dual.parts()) levi += static_cast<long>(k) * k;
    EXPECT_EQ(induced_dim(dim_g, levi, 0), dim_g - static_cast<long>(r.dim_centralizer));
  }
  expect_all_certified(rep);
  EXPECT_TRUE(rep.passed());
}

TEST(Classical, C3RowsNotClassified) {
  ClassicalSweepReport rep = sweep('C', 3, RunConfig{});
  EXPECT_EQ(rep.valid_count(), 8u);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.rigidity, Rigidity::NotClassified);
    EXPECT_FALSE(r.powers_predicted.has_value());
  }
  expect_all_certified(rep);
  EXPECT_TRUE(rep.passed());
}

TEST(Classical, ReportIndependentOfThreadCount) {
  RunConfig cfg;
  cfg.seed = 11;
  ClassicalSweepReport one = sweep('B', 2, cfg, 1);
  ClassicalSweepReport many = sweep('B', 2, cfg, 4);
  ASSERT_EQ(one.rows.size(), many.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].index.witness, many.rows[i].index.witness);
    EXPECT_EQ(one.rows[i].index.observed, many.rows[i].index.observed);
  }
}

TEST(Classical, RejectsBadInput) {
  EXPECT_THROW(sweep('E', 6, RunConfig{}), InputError);
  EXPECT_THROW(sweep('A', 13, RunConfig{}), InputError);
  EXPECT_THROW(sweep('D', 3, RunConfig{}), InputError);
}

// rigid_bd true implies powers check true, on every B/D sweep up to n = 9
TEST(ClassicalProperty, RigidImpliesPowersCheck) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'B', 4}, {'D', 4}}) {
    ClassicalSweepReport rep = sweep(type, rank, RunConfig{});
    for (const auto& r : rep.rows) {
      if (!r.valid) continue;
      EXPECT_EQ(r.powers_check, *r.powers_predicted) << type << rank << r.partition.to_string();
      if (r.rigidity == Rigidity::Rigid) EXPECT_TRUE(r.powers_check);
    }
    EXPECT_TRUE(rep.passed()) << type << rank;
  }
}

// B2 has only two induced nonzero orbits, (5) and (3,1,1); both get witnesses.
TEST(Classical, B2InducedOrbitsHaveBolsinovWitnesses) {
  ClassicalRealization real('B', 2);
  std::size_t induced = 0;
  for (const auto& p : partitions_of(5)) {
    if (!valid_for('B', 2, p) || classify_rigidity('B', p) != Rigidity::Induced) continue;
    ++induced;
    Element a = nilpotent_from_partition(real, p);
    BolsinovCertificate c = bolsinov_condition5(real.algebra(), a, 50, 3);
    EXPECT_TRUE(c.found) << p.to_string();
    EXPECT_TRUE(c.condition4) << p.to_string();
    EXPECT_EQ(c.dim_v, (10 - c.dim_centralizer) / 2 + 2);
  }
  EXPECT_EQ(induced, 2u);
}
