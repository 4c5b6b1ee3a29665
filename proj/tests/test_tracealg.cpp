#include <cmath>
#include <vector>

#include "doctest.h"
#include "holdercert/error.hpp"
#include "holdercert/numkernel.hpp"
#include "holdercert/tracealg.hpp"
#include "test_support.hpp"

using namespace holdercert;
using testsupport::mat;

namespace {

BlockOperator single(const ComplexMatrix& m) { return BlockOperator({m}); }

BlockOperator random_block(Xoshiro256pp& rng, const TraceAlgebra& alg) {
  std::vector<ComplexMatrix> blocks;
  for (int d : alg.block_dims) blocks.push_back(testsupport::random_ginibre(rng, d));
  return BlockOperator(std::move(blocks));
}

double block_dist(const BlockOperator& a, const BlockOperator& b) {
  double acc = 0.0;
  for (int k = 0; k < a.block_count(); ++k) {
    acc += testsupport::dist(a.block(k), b.block(k));
  }
  return acc;
}

}  // namespace

TEST_CASE("algebra construction validates") {
  CHECK_THROWS_AS(TraceAlgebra({}, {}), Error);
  CHECK_THROWS_AS(TraceAlgebra({2}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(TraceAlgebra({0}, {1.0}), Error);
  CHECK_THROWS_AS(TraceAlgebra({2}, {0.0}), Error);
  CHECK_THROWS_AS(TraceAlgebra({2}, {-1.0}), Error);
  try {
    TraceAlgebra({2}, {-1.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAlgebra);
  }
  TraceAlgebra ok({2, 3}, {0.5, 2.0});
  CHECK(ok.block_count() == 2);
}

TEST_CASE("trace with weights") {
  TraceAlgebra alg({1, 1}, {2.0, 3.0});
  BlockOperator x({mat({{1}}), mat({{1}})});
  CHECK(trace(alg, x).real() == doctest::Approx(5.0));

  TraceAlgebra single_alg({2}, {1.0});
  CHECK(std::abs(trace(single_alg, single(mat({{0, 1}, {1, 0}})))) <= 1e-15);

  BlockOperator y({mat({{Complex(0, 1)}}), mat({{Complex(0, -1)}})});
  Complex t = trace(alg, y);
  CHECK(t.real() == doctest::Approx(0.0));
  CHECK(t.imag() == doctest::Approx(-1.0));
}

TEST_CASE("trace rejects mismatched shapes") {
  TraceAlgebra alg({2}, {1.0});
  CHECK_THROWS_AS(trace(alg, single(mat({{1}}))), Error);
  CHECK_THROWS_AS(trace(alg, BlockOperator({mat({{1, 0}, {0, 1}}), mat({{1}})})), Error);
}

TEST_CASE("inner product examples") {
  TraceAlgebra alg({2}, {1.0});
  CHECK(inner(alg, BlockOperator::identity(alg), BlockOperator::identity(alg)).real() ==
        doctest::Approx(2.0));
  CHECK(inner(alg, single(mat({{1, 0}, {0, 2}})), single(mat({{2, 0}, {0, 4}}))).real() ==
        doctest::Approx(10.0));
  CHECK(std::abs(inner(alg, single(mat({{1, 0}, {0, 0}})), single(mat({{0, 0}, {0, 1}})))) <=
        1e-15);
}

TEST_CASE("inner is a faithful inner product") {
  TraceAlgebra alg({3, 2}, {0.7, 1.4});
  Xoshiro256pp rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    BlockOperator x = random_block(rng, alg);
    Complex self = inner(alg, x, x);
    CHECK(self.real() > 0.0);
    CHECK(std::abs(self.imag()) <= 1e-12 * self.real());
    BlockOperator y = random_block(rng, alg);
    // conjugate symmetry
    Complex xy = inner(alg, x, y);
    Complex yx = inner(alg, y, x);
    CHECK(std::abs(xy - std::conj(yx)) <= 1e-12 * (1.0 + std::abs(xy)));
  }
  CHECK(std::abs(inner(alg, BlockOperator::zero(alg), BlockOperator::zero(alg))) == 0.0);
}

TEST_CASE("trace is tracial") {
  TraceAlgebra alg({4, 3}, {2.5, 0.3});
  Xoshiro256pp rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    BlockOperator x = random_block(rng, alg);
    BlockOperator y = random_block(rng, alg);
    Complex xy = trace(alg, x * y);
    Complex yx = trace(alg, y * x);
    CHECK(std::abs(xy - yx) <= 1e-10 * (1.0 + std::abs(xy)));
  }
}

TEST_CASE("pnorm examples") {
  TraceAlgebra alg({2}, {1.0});
  CHECK(pnorm(alg, single(mat({{2, 0}, {0, 1}})), 3.0) ==
        doctest::Approx(std::cbrt(9.0)).epsilon(1e-12));

  TraceAlgebra two({1, 1}, {2.0, 3.0});
  BlockOperator x({mat({{1}}), mat({{2}})});
  CHECK(pnorm(two, x, 2.0) == doctest::Approx(std::sqrt(14.0)).epsilon(1e-12));

  CHECK(pnorm(alg, BlockOperator::zero(alg), 1.5) == 0.0);
}

TEST_CASE("pnorm rejects p below one") {
  TraceAlgebra alg({2}, {1.0});
  CHECK_THROWS_AS(pnorm(alg, BlockOperator::identity(alg), 0.5), Error);
  try {
    pnorm(alg, BlockOperator::identity(alg), 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadExponent);
  }
}

TEST_CASE("pnorm at the infinity sentinel is the operator norm") {
  TraceAlgebra alg({2, 2}, {5.0, 0.1});
  BlockOperator x({mat({{3, 0}, {0, 1}}), mat({{0, 2}, {0, 0}})});
  CHECK(pnorm(alg, x, kInfiniteExponent) == doctest::Approx(3.0));
  CHECK(opnorm(alg, x) == doctest::Approx(3.0));
}

TEST_CASE("opnorm ignores weights") {
  TraceAlgebra heavy({2}, {100.0});
  CHECK(opnorm(heavy, single(mat({{3, 0}, {0, 1}}))) == doctest::Approx(3.0));
  CHECK(opnorm(heavy, single(mat({{0, 2}, {0, 0}}))) == doctest::Approx(2.0));
  ComplexMatrix u = mat({{0, Complex(0, 1)}, {Complex(0, 1), 0}});
  CHECK(opnorm(heavy, single(u)) == doctest::Approx(1.0));
}

TEST_CASE("pnorm is absolutely homogeneous") {
  TraceAlgebra alg({3, 2}, {1.2, 0.4});
  Xoshiro256pp rng(33);
  BlockOperator x = random_block(rng, alg);
  for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) {
    double base = pnorm(alg, x, p);
    Complex c(3.0, -4.0);  // |c| = 5
    CHECK(pnorm(alg, c * x, p) == doctest::Approx(5.0 * base).epsilon(1e-9));
  }
}

TEST_CASE("pnorm is unitarily invariant") {
  TraceAlgebra alg({3, 2}, {1.0, 2.0});
  Xoshiro256pp rng(34);
  BlockOperator x = random_block(rng, alg);
  std::vector<ComplexMatrix> ublocks, vblocks;
  for (int d : alg.block_dims) {
    ublocks.push_back(polar(testsupport::random_ginibre(rng, d)).unitary_extension);
    vblocks.push_back(polar(testsupport::random_ginibre(rng, d)).unitary_extension);
  }
  BlockOperator u(ublocks), v(vblocks);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    double lhs = pnorm(alg, u * x * v, p);
    double rhs = pnorm(alg, x, p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("pnorm approaches opnorm for large p") {
  TraceAlgebra alg({4, 3}, {0.8, 1.7});
  Xoshiro256pp rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    BlockOperator x = random_block(rng, alg);
    double target = opnorm(alg, x);
    CHECK(std::abs(pnorm(alg, x, 64.0) - target) <= 0.10 * target);
    CHECK(std::abs(pnorm(alg, x, 1024.0) - target) <= 0.01 * target);
  }
}

TEST_CASE("pnorm does not overflow at large p") {
  TraceAlgebra alg({2}, {1.0});
  BlockOperator big = single(mat({{1e150, 0}, {0, 1e149}}));
  double n = pnorm(alg, big, 1024.0);
  CHECK(std::isfinite(n));
  CHECK(n >= 1e150);
  CHECK(n <= 1.01e150);
}

TEST_CASE("Cauchy-Schwarz holds numerically") {
  TraceAlgebra alg({3, 2}, {0.6, 2.2});
  Xoshiro256pp rng(36);
  for (int trial = 0; trial < 50; ++trial) {
    BlockOperator x = random_block(rng, alg);
    BlockOperator y = random_block(rng, alg);
    CHECK(std::abs(inner(alg, x, y)) <= pnorm(alg, x, 2.0) * pnorm(alg, y, 2.0) + 1e-10);
  }
}

TEST_CASE("conjugate exponent") {
  CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0));
  CHECK(conjugate_exponent(3.0) == doctest::Approx(1.5));
  CHECK(conjugate_exponent(1.0) == kInfiniteExponent);
  CHECK(conjugate_exponent(kInfiniteExponent) == 1.0);
  CHECK_THROWS_AS(conjugate_exponent(0.9), Error);
  for (double p : {1.05, 1.3, 2.0, 4.7, 11.0, 64.0}) {
    double q = conjugate_exponent(p);
    CHECK(std::abs(conjugate_exponent(q) - p) <= 1e-14 * p);
  }
}

TEST_CASE("block arithmetic and adjoint") {
  TraceAlgebra alg({2, 1}, {1.0, 1.0});
  BlockOperator x({mat({{1, Complex(0, 2)}, {0, 1}}), mat({{Complex(3, -1)}})});
  BlockOperator y = x.adjoint();
  CHECK(y.block(0)(1, 0) == Complex(0, -2));
  CHECK(y.block(1)(0, 0) == Complex(3, 1));
  BlockOperator sum = x + y;
  CHECK(sum.block(0)(0, 0) == Complex(2, 0));
  BlockOperator diff = x - x;
  CHECK(diff.is_zero());
  BlockOperator prod = x * y;
  CHECK(prod.block(1)(0, 0) == Complex(10, 0));
  CHECK_THROWS_AS(x + BlockOperator::identity(TraceAlgebra({3}, {1.0})), Error);
}

TEST_CASE("blockwise modulus power and range projection") {
  BlockOperator x({mat({{0, 1}, {0, 0}}), mat({{-2}})});
  BlockOperator m = modulus(x);
  CHECK(block_dist(m, BlockOperator({mat({{0, 0}, {0, 1}}), mat({{2}})})) <= 1e-12);
  BlockOperator sq = power(m, 2.0);
  CHECK(block_dist(sq, BlockOperator({mat({{0, 0}, {0, 1}}), mat({{4}})})) <= 1e-12);
  BlockOperator supp = range_projection(x);
  CHECK(block_dist(supp, BlockOperator({mat({{1, 0}, {0, 0}}), mat({{1}})})) <= 1e-12);
}
