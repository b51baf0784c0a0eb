#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hopfpi;
using testing_support::Q;
using testing_support::random_matrix;

namespace {

std::size_t coset_a3(std::size_t g) { return g < 3 ? 0 : 1; }

// Transports a comodule with constant dimensions along v -> P v.
ComoduleFamily<Q> conjugate(const CoalgebraFamily<Q>& c, const ComoduleFamily<Q>& m, const Matrix<Q>& p) {
  const auto pinv = *inverse(p);
  auto out = m;
  const std::size_t n = c.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto& t = out.coaction[a * n + b];
      t = m.side == Side::right ? kron(p, eye<Q>(c.dim(b))) * t * pinv : kron(eye<Q>(c.dim(a)), p) * t * pinv;
    }
  return out;
}

Matrix<Q> random_invertible(std::mt19937& rng, std::size_t d) {
  for (;;) {
    auto m = random_matrix(rng, d, d);
    if (rank(m) == d) return m;
  }
}

}  // namespace

TEST(Induced, QuotientCotensorBasis) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto ind = build_induced(p, regular_comodule(p.C(), Side::right));
  EXPECT_TRUE(ind.verification.ok());
  // V = k[C2] with q -> q (x) q: the cotensor product is spanned by q (x) g with g in the coset q.
  std::vector<Vec<Q>> expected;
  for (std::size_t g = 0; g < 6; ++g) expected.push_back(kron(unit_vector<Q>(2, coset_a3(g)), unit_vector<Q>(6, g)));
  for (const auto& sp : ind.spaces) EXPECT_EQ(sp, Subspace<Q>::span(12, expected));
}

TEST(Induced, SelfPairIsTheComultiplicationImage) {
  const auto [p, s] = make_self_pair(fixtures::sw2<Q>());
  const auto ind = build_induced(p, regular_comodule(p.C(), Side::right));
  EXPECT_TRUE(ind.verification.ok());
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(ind.spaces[a].dim(), 4u);
    EXPECT_EQ(ind.spaces[a], Subspace<Q>::span(p.ambient.comul(0, a).transpose()));
  }
}

TEST(Induced, TrivialFamily) {
  const auto [p, s] = make_self_pair(fixtures::trivial_c2<Q>());
  const auto ind = build_induced(p, regular_comodule(p.C(), Side::right));
  for (const auto& sp : ind.spaces) EXPECT_EQ(sp.dim(), 1u);
  EXPECT_TRUE(ind.verification.ok());
}

TEST(Induced, RejectsLeftComodule) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  EXPECT_THROW(build_induced(p, regular_comodule(p.C(), Side::left)), ShapeMismatch);
}

TEST(Induced, ParallelVerificationAgrees) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto v = regular_comodule(p.C(), Side::right);
  const auto a = build_induced(p, v, 1);
  const auto b = build_induced(p, v, 4);
  EXPECT_EQ(a.coaction, b.coaction);
  ASSERT_EQ(a.verification.clauses.size(), b.verification.clauses.size());
}

TEST(InducedProperty, DimensionIsDimVTimesDimB) {
  std::mt19937 rng(404);
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto b = compute_B(p);
  auto reg = regular_comodule(p.C(), Side::right);
  for (int t = 0; t < 4; ++t) {
    const auto v = conjugate(p.C(), reg, random_invertible(rng, 2));
    ASSERT_TRUE(check_comodule(p.C(), v).ok());
    const auto ind = build_induced(p, v);
    EXPECT_TRUE(ind.verification.ok());
    for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(ind.spaces[a].dim(), 2 * b[a].dim());
  }
}

TEST(InducedAction, ModuleOverB) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto ind = build_induced(p, regular_comodule(p.C(), Side::right));
  const auto act = induced_action(p, ind, compute_B(p));
  EXPECT_TRUE(act.verification.ok());
  EXPECT_EQ(act.lambda[0].rows(), 6u);
  EXPECT_EQ(act.lambda[0].cols(), 18u);
}

TEST(InducedAction, SubspaceNotClosedIsRejected) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto ind = build_induced(p, regular_comodule(p.C(), Side::right));
  SubspaceFamily<Q> bad(2, Subspace<Q>::span(6, {unit_vector<Q>(6, 1)}));
  EXPECT_THROW(induced_action(p, ind, bad), ClosureViolation);
}

TEST(Trivialization, HEqualsCTensorB) {
  const auto [qp, qs] = fixtures::qp_s3_a3<Q>();
  const auto w = iso_H_CB(qp, qs);
  EXPECT_TRUE(w.verified);
  EXPECT_EQ(w.sizes, (std::vector<std::size_t>{6, 6}));
  EXPECT_EQ(w.forward[1] * w.backward[1], eye<Q>(6));

  const auto [sp, ss] = make_self_pair(fixtures::sw2<Q>());
  const auto v = iso_H_CB(sp, ss);
  EXPECT_EQ(v.sizes, (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(v.backward[0] * v.forward[0], eye<Q>(4));
}

TEST(Trivialization, ForwardMapIsMultiplicationBySection) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto w = iso_H_CB(p, s);
  const auto g = symmetric_group_3();
  // c (x) b with c the coset of (12) and b = (123): g(c) b = (12)(123).
  EXPECT_EQ(w.forward[0].col(1 * 3 + 1), unit_vector<Q>(6, g.mul(3, 1)));
}

TEST(Trivialization, WrongDimensionsAreNotBijective) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  SubspaceFamily<Q> whole(2, Subspace<Q>::whole(6));
  try {
    iso_H_CB(p, s, whole);
    FAIL();
  } catch (const NotBijective& e) {
    EXPECT_EQ(e.alpha(), 0u);
    EXPECT_EQ(e.defect(), 6u);
  }
}

TEST(Trivialization, DegenerateSectionIsNotBijective) {
  auto [p, s] = fixtures::qp_s3_a3<Q>();
  for (std::size_t i = 0; i < 6; ++i) s.g[0](i, 1) = Q(0);
  EXPECT_THROW(iso_H_CB(p, s), NotBijective);
}

TEST(Trivialization, InducedEqualsVTensorB) {
  for (const auto& [p, s] : {fixtures::qp_s3_a3<Q>(), make_self_pair(fixtures::sw2<Q>())}) {
    const auto ind = build_induced(p, regular_comodule(p.C(), Side::right));
    const auto b = compute_B(p);
    const auto w = iso_Ind_VB(p, s, identity_cosection(p.ambient), ind, b);
    EXPECT_TRUE(w.verified);
    for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(w.sizes[a], p.C().dim(0) * b[a].dim());
  }
}

TEST(Trivialization, InducedEqualsVTensorBForConjugatedV) {
  std::mt19937 rng(77);
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto v = conjugate(p.C(), regular_comodule(p.C(), Side::right), random_invertible(rng, 2));
  const auto ind = build_induced(p, v);
  EXPECT_TRUE(iso_Ind_VB(p, s, identity_cosection(p.ambient), ind, compute_B(p)).verified);
}

TEST(Trivialization, HEqualsCTensorGForIsolatedPair) {
  const auto [p, s] = make_isolated_pair(fixtures::iso_s3<Q>());
  const auto w = iso_H_CG(p, s);
  EXPECT_EQ(w.context, IsoContext::H_CG);
  EXPECT_EQ(w.sizes, (std::vector<std::size_t>{6, 6}));
  const auto [qp, qs] = fixtures::qp_s3_a3<Q>();
  EXPECT_THROW(iso_H_CG(qp, qs), PreconditionFailed);
}

TEST(LemmaSuite, PassesOnEveryPair) {
  EXPECT_TRUE(verify_lemma_suite(fixtures::qp_s3_a3<Q>().first, fixtures::qp_s3_a3<Q>().second).ok());
  const auto [sp, ss] = make_self_pair(fixtures::sw2<Q>());
  EXPECT_TRUE(verify_lemma_suite(sp, ss).ok());
  const auto [ip, is] = make_isolated_pair(fixtures::iso_s3<Q>());
  const auto r = verify_lemma_suite(ip, is);
  EXPECT_TRUE(r.ok());
  EXPECT_NE(r.find("ginv_condition2(1)"), nullptr);
  EXPECT_NE(r.find("space_triple_coproduct(0)"), nullptr);
}

TEST(LemmaSuite, CorruptedInverseOnlyBreaksInverseClauses) {
  for (auto [p, s] : {fixtures::qp_s3_a3<Q>(), make_self_pair(fixtures::sw2<Q>()),
                      make_isolated_pair(fixtures::iso_s3<Q>())}) {
    s.ginv[1](0, 0) += Q(1);
    const auto r = verify_lemma_suite(p, s);
    const auto f = r.failures();
    ASSERT_FALSE(f.empty());
    for (const auto* c : f) EXPECT_TRUE(lemma_clause_uses_ginv(c->name)) << c->name;
  }
}

TEST(LemmaSuite, CorruptedSectionIsCaught) {
  auto [p, s] = fixtures::qp_s3_a3<Q>();
  s.g[0](0, 0) = Q(2);
  EXPECT_FALSE(verify_lemma_suite(p, s).ok());
}
