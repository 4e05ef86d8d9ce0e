#include <gtest/gtest.h>

#include <random>

#include "homalg/constructions.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/kernels.hpp"

using namespace homalg;

TEST(Kernels, SerialAndParallelReducersAgree) {
  const Field q = Field::rational();
  std::vector<Element> rows;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) rows.push_back(random_element(q, 30, rng));
  const RowTask task = [&](std::size_t t, RowReducer& sink) { sink.add(rows[t]); };
  const RowReducer s = reduce_tasks(q, 30, rows.size(), task, Execution::serial);
  const RowReducer p = reduce_tasks(q, 30, rows.size(), task, Execution::openmp);
  EXPECT_EQ(s.row_space(), p.row_space());
  EXPECT_EQ(s.rank(), 30u);
}

TEST(Kernels, TwistSpacesAgreeAcrossPaths) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.dim = 4;
    cfg.field = seed % 2 ? Field::prime(3) : Field::rational();
    cfg.pool = default_pool(cfg.field);
    const Algebra a = random_algebra(cfg);
    EXPECT_EQ(twist_space(a, Execution::serial).flat, twist_space(a, Execution::openmp).flat) << seed;
    EXPECT_EQ(hu_t(a, Side::left, Execution::serial), hu_t(a, Side::left, Execution::openmp)) << seed;
    EXPECT_EQ(ac_left_conditions(a, Execution::serial), ac_left_conditions(a, Execution::openmp)) << seed;
  }
}

TEST(Kernels, SedenionTwistSpaceIsZeroOnBothPaths) {
  const Algebra s = cayley_dickson_chain(4).base();
  EXPECT_EQ(twist_space(s, Execution::serial).dim(), 0u);
  EXPECT_EQ(twist_space(s, Execution::openmp).dim(), 0u);
}
