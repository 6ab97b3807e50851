#include "lutz/exact_linalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lutz;

namespace {

// The slid linking matrix of the full-twist link.
IntMatrix matrix_a(long t) { return IntMatrix{{t + 1, -1, -1, 0}, {-1, 0, -1, 0}, {-1, -1, 0, -1}, {0, 0, -1, 0}}; }

const IntMatrix kS1xS2Linking{{0, -1, -1, -1, -1},
                              {-1, 0, -1, -1, -1},
                              {-1, -1, -2, -3, -3},
                              {-1, -1, -3, -2, -3},
                              {-1, -1, -3, -3, -4}};

void expect_valid_smith(const IntMatrix& a, const SmithForm& f) {
  ASSERT_EQ(f.U * a * f.V, f.D) << a.to_string();
  const Integer du = determinant(f.U);
  const Integer dv = determinant(f.V);
  EXPECT_TRUE(du == 1 || du == -1);
  EXPECT_TRUE(dv == 1 || dv == -1);
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j) EXPECT_EQ(f.D(i, j), 0);
  const auto d = f.diagonal();
  for (std::size_t k = 0; k < d.size(); ++k) {
    EXPECT_GE(d[k], 0);
    if (k + 1 < d.size()) {
      if (d[k] == 0)
        EXPECT_EQ(d[k + 1], 0);
      else
        EXPECT_EQ(d[k + 1] % d[k], 0);
    }
  }
}

}  // namespace

TEST(SmithNormalForm, IdentityIsFixed) {
  const SmithForm f = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(f.D, IntMatrix::identity(2));
  EXPECT_EQ(f.U, IntMatrix::identity(2));
  EXPECT_EQ(f.V, IntMatrix::identity(2));
}

TEST(SmithNormalForm, SmallExampleMatchesDeterminantalDivisors) {
  const IntMatrix a{{2, 4}, {6, 8}};
  EXPECT_EQ(oracle::smith_invariants(a), (std::vector<Integer>{2, 4}));
  const SmithForm f = smith_normal_form(a);
  expect_valid_smith(a, f);
  EXPECT_EQ(f.diagonal(), (std::vector<Integer>{2, 4}));
}

TEST(SmithNormalForm, S1xS2LinkingMatrixHasOneFreeGenerator) {
  const std::vector<Integer> expected{1, 1, 1, 1, 0};
  EXPECT_EQ(oracle::smith_invariants(kS1xS2Linking), expected);
  const SmithForm f = smith_normal_form(kS1xS2Linking);
  expect_valid_smith(kS1xS2Linking, f);
  EXPECT_EQ(f.diagonal(), expected);
}

TEST(SmithNormalForm, ZeroAndRectangularInputs) {
  for (const IntMatrix& a : {IntMatrix(3, 2), IntMatrix{{0, 6, 4}}, IntMatrix{{3}, {5}, {0}}, IntMatrix(0, 0)}) {
    const SmithForm f = smith_normal_form(a);
    expect_valid_smith(a, f);
    EXPECT_EQ(f.diagonal(), oracle::smith_invariants(a));
  }
}

TEST(SmithNormalForm, RandomMatricesReconstructAndMatchOracle) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng));
    const SmithForm f = smith_normal_form(a);
    expect_valid_smith(a, f);
    EXPECT_EQ(f.diagonal(), oracle::smith_invariants(a)) << a.to_string();
  }
}

TEST(Cokernel, ZeroOneByOneIsZ) {
  const AbelianGroupPresentation g = cokernel(IntMatrix(1, 1));
  EXPECT_EQ(g.free_rank, 1u);
  EXPECT_TRUE(g.torsion.empty());
  ASSERT_EQ(g.generator_images.size(), 1u);
  const Integer img = g.generator_images[0][0];
  EXPECT_TRUE(img == 1 || img == -1);
}

TEST(Cokernel, DiagonalThreeIsCyclicOfOrderThree) {
  const AbelianGroupPresentation g = cokernel(IntMatrix{{3}});
  EXPECT_EQ(g.free_rank, 0u);
  EXPECT_EQ(g.torsion, std::vector<Integer>{3});
  EXPECT_EQ(g.to_string(), "Z/3");
  EXPECT_FALSE(g.is_zero(g.generator_images[0]));
  const std::vector<Integer> three{3};
  EXPECT_TRUE(g.is_zero(g.combination(three)));
}

TEST(Cokernel, S1xS2MeridianRelations) {
  const AbelianGroupPresentation g = cokernel(kS1xS2Linking);
  EXPECT_EQ(g.to_string(), "Z");
  std::vector<Integer> mu;
  for (const auto& img : g.generator_images) mu.push_back(img.at(0));
  const Integer s = mu[0];
  EXPECT_TRUE(s == 1 || s == -1);
  EXPECT_EQ(mu, (std::vector<Integer>{s, s, -s, -s, s}));
}

TEST(Cokernel, AgreesWithSmithDiagonal) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), -4, 4);
    const AbelianGroupPresentation g = cokernel(a);
    const auto inv = oracle::smith_invariants(a);
    std::vector<Integer> torsion;
    std::size_t zeros = a.rows() - inv.size();
    for (const auto& d : inv) {
      if (d > 1) torsion.push_back(d);
      if (d == 0) ++zeros;
    }
    EXPECT_EQ(g.torsion, torsion);
    EXPECT_EQ(g.free_rank, zeros);
    // Every column of a is a relation.
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<Integer> col;
      for (std::size_t i = 0; i < a.rows(); ++i) col.push_back(a(i, j));
      EXPECT_TRUE(g.is_zero(g.combination(col)));
    }
  }
}

TEST(SolveRational, IdentityReturnsRightHandSide) {
  const RationalVector b{Rational(1, 2), Rational(-3), Rational(0)};
  const SolveResult r = solve_rational(IntMatrix::identity(3), b);
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.solution, b);
}

TEST(SolveRational, LinkingSystemAtZero) {
  const IntMatrix m{{1, 0, 0, 0}, {0, -1, -2, -2}, {0, -2, -1, -2}, {0, -2, -2, -3}};
  const SolveResult r = solve_rational(m, RationalVector{0, -2, -2, -4});
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.solution, (RationalVector{0, -2, -2, 4}));
}

TEST(SolveRational, DistinguishesInconsistentFromUnderdetermined) {
  const IntMatrix m{{1, 1}, {1, 1}};
  EXPECT_EQ(solve_rational(m, RationalVector{1, 2}).status, SolveStatus::no_solution);
  EXPECT_EQ(solve_rational(m, RationalVector{1, 1}).status, SolveStatus::non_unique);
  EXPECT_THROW(solve_rational(m, RationalVector{1}), std::invalid_argument);
}

TEST(SolveRational, RectangularConsistentSystem) {
  const IntMatrix m{{1, 2}, {3, 4}, {5, 6}};
  const SolveResult r = solve_rational(m, RationalVector{5, 11, 17});
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.solution, (RationalVector{1, 2}));
  EXPECT_EQ(solve_rational(m, RationalVector{5, 11, 18}).status, SolveStatus::no_solution);
}

TEST(SolveRational, FractionalSolution) {
  const SolveResult r = solve_rational(IntMatrix{{-3}}, RationalVector{1});
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.solution[0], Rational(-1, 3));
}

TEST(Signature, Basics) {
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix{{1, 0}, {0, -1}}), 0);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix(matrix_a(0))), 0);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}), 1);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix(IntMatrix(3, 3))), 0);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix{{2, 1}, {1, 2}}), 2);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix{{-3}}), -1);
  EXPECT_EQ(signature_symmetric(SymmetricIntMatrix{}), 0);
}

TEST(Signature, RandomMatchesEigenvalueOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = oracle::random_symmetric(rng, 5);
    EXPECT_EQ(signature_symmetric(SymmetricIntMatrix(a)), oracle::eigen_signature(a)) << a.to_string();
  }
}

TEST(SymmetricIntMatrix, RejectsAsymmetricAndNonSquare) {
  EXPECT_THROW(SymmetricIntMatrix(IntMatrix{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(SymmetricIntMatrix(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(CharPoly, IdentityAndLemmaMatrix) {
  EXPECT_EQ(char_poly(IntMatrix::identity(2)), (IntPolynomial{1, -2, 1}));
  EXPECT_EQ(char_poly(matrix_a(0)), (IntPolynomial{1, 4, -4, -1, 1}));
  EXPECT_EQ(char_poly(matrix_a(3)), (IntPolynomial{1, 10, -4, -4, 1}));
  EXPECT_EQ(char_poly(IntMatrix(0, 0)), IntPolynomial{1});
  EXPECT_EQ(char_poly(matrix_a(0)).to_string(), "x^4 - x^3 - 4x^2 + 4x + 1");
  EXPECT_THROW(char_poly(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(CharPoly, MatchesCofactorDeterminantAtSamplePoints) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 4, 4);
    const IntPolynomial p = char_poly(a);
    EXPECT_EQ(p.degree(), 4);
    for (int x = -3; x <= 3; ++x) {
      IntMatrix shifted(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) shifted(i, j) = (i == j ? Integer(x) : Integer(0)) - a(i, j);
      EXPECT_EQ(p.evaluate(x), oracle::cofactor_det(shifted));
    }
  }
}

TEST(CharPoly, ConstantTermIsSignedDeterminant) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const IntMatrix a = oracle::random_matrix(rng, n, n);
    const Integer sign = n % 2 == 0 ? 1 : -1;
    EXPECT_EQ(char_poly(a).evaluate(0), sign * determinant(a));
  }
}

TEST(CharPoly, EigenvalueIdentitiesForEveryT) {
  for (long t = -10; t <= 10; ++t) {
    const IntPolynomial p = char_poly(matrix_a(t));
    EXPECT_EQ(p.coefficient(2), -4) << "t=" << t;  // sum of pairwise products
    EXPECT_EQ(p.coefficient(0), 1) << "t=" << t;   // product
  }
}

TEST(CharPoly, InterpolatedCoefficientsInT) {
  const std::vector<Integer> ts{-2, -1, 0, 1, 2};
  const std::vector<RationalVector> expected{{1}, {4, 2}, {-4}, {-1, -1}, {1}};
  for (std::size_t k = 0; k <= 4; ++k) {
    RationalVector ys;
    for (const auto& t : ts) ys.emplace_back(char_poly(matrix_a(t.convert_to<long>())).coefficient(k));
    EXPECT_EQ(interpolate(ts, ys), expected[k]) << "coefficient of x^" << k;
  }
}

TEST(Interpolate, RecoversQuadraticAndRejectsRepeats) {
  const std::vector<Integer> xs{0, 1, 3};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(Rational(x * x) / 2 - 1);  // x^2/2 - 1
  EXPECT_EQ(interpolate(xs, ys), (RationalVector{-1, 0, Rational(1, 2)}));
  const std::vector<Integer> dup{1, 1};
  const std::vector<Rational> two{0, 0};
  EXPECT_THROW(interpolate(dup, two), std::invalid_argument);
}

TEST(CongruenceSlide, ExpandsElementaryCongruence) {
  EXPECT_EQ(congruence_slide(SymmetricIntMatrix(IntMatrix::identity(2)), 0, 1, +1),
            (SymmetricIntMatrix{{2, 1}, {1, 1}}));
}

TEST(CongruenceSlide, RejectsBadIndices) {
  const SymmetricIntMatrix m(IntMatrix::identity(3));
  EXPECT_THROW(congruence_slide(m, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(congruence_slide(m, 0, 3, 1), std::out_of_range);
  EXPECT_THROW(congruence_slide(m, 0, 1, 2), std::invalid_argument);
}

TEST(CongruenceSlide, PreservesSignatureAndDeterminant) {
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng);
    SymmetricIntMatrix m(oracle::random_symmetric(rng, n));
    const long sig = signature_symmetric(m);
    const Integer det = determinant(m.matrix());
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int step = 0; step < 4; ++step) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) j = (j + 1) % n;
      m = congruence_slide(m, i, j, coin(rng) ? 1 : -1);
    }
    EXPECT_EQ(signature_symmetric(m), sig);
    EXPECT_EQ(determinant(m.matrix()), det);
  }
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(determinant(IntMatrix::identity(4)), 1);
  EXPECT_EQ(determinant(matrix_a(0)), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, RandomFourByFourMatchesCofactorExpansion) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 4, 4);
    EXPECT_EQ(determinant(a), oracle::cofactor_det(a)) << a.to_string();
  }
}

TEST(Determinant, LargeEntriesStayExact) {
  const Integer big = Integer(1) << 200;
  const IntMatrix a{{big, 1}, {1, big}};
  EXPECT_EQ(determinant(a), big * big - 1);
}
