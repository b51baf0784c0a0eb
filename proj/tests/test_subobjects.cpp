#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace hopfpi;
using testing_support::mat;
using testing_support::Q;

namespace {

std::size_t coset_a3(std::size_t g) { return g < 3 ? 0 : 1; }

}  // namespace

TEST(SubHopf, ImproperSubfamily) {
  const auto h = fixtures::sw2<Q>();
  SubHopfFamily<Q> sub{h, std::vector<Subspace<Q>>(2, Subspace<Q>::whole(4)), std::nullopt};
  const auto r = check_subhopf(sub);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.find("direct_sum(0)"), nullptr);
}

TEST(SubHopf, IsolatedSymmetricGroup) {
  const auto sub = fixtures::iso_s3<Q>();
  EXPECT_EQ(sub.subspaces[0].dim(), 2u);
  EXPECT_EQ(sub.complement->at(0).dim(), 4u);
  EXPECT_EQ(rank(hstack(sub.subspaces[0].embedding(), sub.complement->at(0).embedding())), 6u);
  EXPECT_TRUE(check_subhopf(sub).ok());
}

TEST(SubHopf, NonComplementTransversalFails) {
  const auto r = check_subhopf(fixtures::iso_s3_bad<Q>());
  bool ideal_or_coideal = false;
  for (const auto* c : r.failures())
    if (c->name.rfind("ideal", 0) == 0 || c->name.rfind("coideal", 0) == 0) {
      ideal_or_coideal = true;
      EXPECT_FALSE(c->witness.empty()) << c->name;
    }
  EXPECT_TRUE(ideal_or_coideal);
}

TEST(SubHopf, MakeIsolatedRejectsBadComplements) {
  const auto s3 = symmetric_group_3();
  EXPECT_THROW(make_isolated<Q>(s3, {0, 1, 2}, {0, 1}, cyclic_group(2)), NotComplement);
  EXPECT_THROW(make_isolated<Q>(s3, {0, 1, 2}, {0, 3, 4}, cyclic_group(2)), NotComplement);
  EXPECT_THROW(make_isolated<Q>(s3, {0, 3}, {0, 1, 2}, cyclic_group(2)), NotNormal);
  EXPECT_THROW(make_isolated<Q>(s3, {0, 1, 2}, {0, 3}, cyclic_group(2), FieldSpec::prime_field(3)), NotComplement);
}

TEST(PiSubcoalgebra, SelfAndQuotientPairsPass) {
  EXPECT_TRUE(check_pi_subcoalgebra(make_self_pair(fixtures::sw2<Q>()).first).ok());
  EXPECT_TRUE(check_pi_subcoalgebra(fixtures::qp_s3_a3<Q>().first).ok());
}

TEST(PiSubcoalgebra, QuotientMapIsTheSign) {
  const auto p = fixtures::qp_s3_a3<Q>().first;
  for (std::size_t g = 0; g < 6; ++g) EXPECT_EQ(p.sigma[0].col(g), unit_vector<Q>(2, coset_a3(g)));
}

TEST(PiSubcoalgebra, ScaledSigmaBreaksAlgebraMap) {
  auto p = fixtures::qp_s3_a3<Q>().first;
  p.sigma[0](1, 3) = Q(2);
  const auto r = check_pi_subcoalgebra(p);
  ASSERT_NE(r.find("sigma_algebra_map(0)"), nullptr);
  EXPECT_TRUE(r.find("sigma_algebra_map(0)")->failed());
}

TEST(Coisotropic, DerivedPairsPass) {
  EXPECT_TRUE(check_coisotropic(subcoalgebra_to_coisotropic(make_self_pair(fixtures::sw2<Q>()).first)).ok());
  EXPECT_TRUE(check_coisotropic(subcoalgebra_to_coisotropic(fixtures::qp_s3_a3<Q>().first)).ok());
  EXPECT_TRUE(check_coisotropic(isolated_to_coisotropic(fixtures::iso_s3<Q>())).ok());
}

TEST(Coisotropic, ActionsOnBasis) {
  const auto triv = subcoalgebra_to_coisotropic(make_self_pair(fixtures::trivial_c2<Q>()).first);
  EXPECT_EQ((*triv.omega)[0], mat({{1}}));

  const auto sw = subcoalgebra_to_coisotropic(make_self_pair(fixtures::sw2<Q>()).first);
  EXPECT_EQ((*sw.omega)[1], sweedler_algebra<Q>().mul);

  const auto qp = subcoalgebra_to_coisotropic(fixtures::qp_s3_a3<Q>().first);
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t q = 0; q < 2; ++q)
      EXPECT_EQ((*qp.omega)[0].col(g * 2 + q), unit_vector<Q>(2, (coset_a3(g) + q) % 2)) << g << "," << q;
}

TEST(Coisotropic, SubcoalgebraConversionNeedsValidPair) {
  auto p = fixtures::qp_s3_a3<Q>().first;
  p.sigma[1](0, 0) = Q(0);
  EXPECT_THROW(subcoalgebra_to_coisotropic(p), PreconditionFailed);
}

TEST(IsolatedToCoisotropic, WholeSpaceGivesIdentity) {
  const auto h = fixtures::sw2<Q>();
  SubHopfFamily<Q> sub{h, std::vector<Subspace<Q>>(2, Subspace<Q>::whole(4)),
                       std::vector<Subspace<Q>>(2, Subspace<Q>::zero(4))};
  const auto p = isolated_to_coisotropic(sub);
  EXPECT_EQ(p.sigma[0], eye<Q>(4));
  EXPECT_EQ((*p.omega)[0], h.mul(0));
}

TEST(IsolatedToCoisotropic, ProjectionHasRankTwo) {
  const auto p = isolated_to_coisotropic(fixtures::iso_s3<Q>());
  for (const auto& s : p.sigma) EXPECT_EQ(rank(s), 2u);
  const auto i = fixtures::iso_s3<Q>().complement->at(0);
  EXPECT_TRUE((p.sigma[0] * i.embedding()).is_zero());
}

TEST(LMap, Examples) {
  const auto self = make_self_pair(fixtures::sw2<Q>()).first;
  EXPECT_EQ(compute_L(self, 0, 1), self.ambient.comul(0, 1));
  const auto triv = make_self_pair(fixtures::trivial_c2<Q>()).first;
  EXPECT_EQ(compute_L(triv, 1, 1), mat({{1}}));
  const auto qp = fixtures::qp_s3_a3<Q>().first;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t g = 0; g < 6; ++g)
      EXPECT_EQ(compute_L(qp, 0, a).col(g), kron(unit_vector<Q>(2, coset_a3(g)), unit_vector<Q>(6, g)));
}

TEST(LMap, ThetaProductIdentityExhaustive) {
  const std::vector<QuotientPair<Q>> pairs = {fixtures::qp_s3_a3<Q>().first, make_self_pair(fixtures::sw2<Q>()).first};
  for (const auto& p : pairs) {
    const auto cp = subcoalgebra_to_coisotropic(p);
    const std::size_t d = p.ambient.dim(0);
    for (std::size_t al = 0; al < 2; ++al)
      for (std::size_t be = 0; be < 2; ++be) {
        const auto delta = p.ambient.comul(al, be);
        const auto L = compute_L(cp, al, be);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            const auto ab = p.ambient.mul(p.ambient.group.mul(al, be)).col(a * d + b);
            EXPECT_EQ(theta_product(cp, al, be, delta.col(a), L.col(b)), L.apply(ab));
          }
      }
  }
}

TEST(LMap, TrivialModuleUnit) {
  const auto cp = subcoalgebra_to_coisotropic(fixtures::qp_s3_a3<Q>().first);
  const auto one = kron(unit_vector<Q>(6, 0), unit_vector<Q>(6, 0));
  const auto y = kron(unit_vector<Q>(2, 1), unit_vector<Q>(6, 4));
  EXPECT_EQ(theta_product(cp, 0, 0, one, y), y);
}

TEST(LMap, IdentitiesReport) {
  const auto qp = check_L_identities(fixtures::qp_s3_a3<Q>().first);
  EXPECT_TRUE(qp.ok());
  EXPECT_NE(qp.find("L_algebra_map(1,0)"), nullptr);
  EXPECT_NE(qp.find("L_coassoc(1,1,0)"), nullptr);
  EXPECT_TRUE(check_L_identities(isolated_to_coisotropic(fixtures::iso_s3<Q>())).ok());
}

TEST(HomogeneousSpace, BExamples) {
  const auto sw = compute_B(make_self_pair(fixtures::sw2<Q>()).first);
  for (const auto& b : sw) EXPECT_EQ(b.basis(), mat({{1, 0, 0, 0}}));

  const auto qp = compute_B(fixtures::qp_s3_a3<Q>().first);
  for (const auto& b : qp) EXPECT_EQ(b.basis(), mat({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));

  for (const auto& b : compute_B(make_self_pair(fixtures::trivial_c2<Q>()).first)) EXPECT_EQ(b.dim(), 1u);
}

TEST(HomogeneousSpace, BAgainstHandElimination) {
  // h = sum c_g g satisfies sigma(g) (x) g = 1 (x) g exactly on the support A3.
  const auto p = fixtures::qp_s3_a3<Q>().first;
  Matrix<Q> cond(12, 6);
  for (std::size_t g = 0; g < 6; ++g) {
    cond(coset_a3(g) * 6 + g, g) += Q(1);
    cond(0 * 6 + g, g) -= Q(1);
  }
  EXPECT_EQ(null_space(cond), compute_B(p)[1]);
}

TEST(HomogeneousSpace, QuotientRecoversNormalSubgroup) {
  struct Case {
    GroupTable g;
    std::vector<std::size_t> n;
  };
  for (const auto& c : {Case{symmetric_group_3(), {0, 1, 2}}, Case{cyclic_group(2), {0, 1}},
                        Case{symmetric_group_3(), {0}}, Case{cyclic_group(4), {0, 2}},
                        Case{symmetric_group_3(), {0, 1, 2, 3, 4, 5}}}) {
    const auto [p, s] = make_quotient_pair<Q>(c.g, c.n, cyclic_group(2));
    ASSERT_TRUE(check_pi_subcoalgebra(p).ok());
    ASSERT_TRUE(check_section(p, s).ok());
    std::vector<Vec<Q>> expected;
    for (auto x : c.n) expected.push_back(unit_vector<Q>(c.g.order(), x));
    for (const auto& b : compute_B(p)) EXPECT_EQ(b, Subspace<Q>::span(c.g.order(), expected));
  }
}

TEST(HomogeneousSpace, TrivialQuotientIsSelf) {
  const auto [p, s] = make_quotient_pair<Q>(symmetric_group_3(), {0}, cyclic_group(2));
  EXPECT_EQ(p.sigma[0], eye<Q>(6));
}

TEST(HomogeneousSpace, NonNormalSubgroupRejected) {
  EXPECT_THROW(make_quotient_pair<Q>(symmetric_group_3(), {0, 3}, cyclic_group(2)), NotNormal);
  EXPECT_THROW(make_quotient_pair<Q>(symmetric_group_3(), {0, 1}, cyclic_group(2)), NotNormal);
}

TEST(HomogeneousSpace, GExamples) {
  const auto qp = fixtures::qp_s3_a3<Q>().first;
  const auto cp = subcoalgebra_to_coisotropic(qp);
  const auto b = compute_B(qp);
  const auto g = compute_G(cp);
  for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(g[a], b[a]);
  for (const auto& x : compute_G(isolated_to_coisotropic(fixtures::iso_s3<Q>()))) EXPECT_EQ(x.dim(), 3u);
  for (const auto& x : compute_G(subcoalgebra_to_coisotropic(make_self_pair(fixtures::trivial_c2<Q>()).first)))
    EXPECT_EQ(x.dim(), 1u);
}

TEST(HomogeneousSpace, ClosureInvariants) {
  std::vector<QuotientPair<Q>> pairs = {fixtures::qp_s3_a3<Q>().first, make_self_pair(fixtures::sw2<Q>()).first,
                                        isolated_to_coisotropic(fixtures::iso_s3<Q>())};
  for (const auto& p : pairs) {
    const auto space = p.variant == PairVariant::pi_subcoalgebra ? compute_B(p) : compute_G(p);
    const auto& h = p.ambient;
    for (std::size_t a = 0; a < 2; ++a) {
      EXPECT_TRUE(space[a].contains(h.unit(a)));
      for (std::size_t i = 0; i < space[a].dim(); ++i)
        for (std::size_t j = 0; j < space[a].dim(); ++j)
          EXPECT_TRUE(space[a].contains(h.mul(a).apply(kron(space[a].vector(i), space[a].vector(j)))));
      for (std::size_t b = 0; b < 2; ++b) {
        const auto target = tensor(space[a], Subspace<Q>::whole(h.dim(b)));
        const auto ab = h.group.mul(a, b);
        for (std::size_t i = 0; i < space[ab].dim(); ++i)
          EXPECT_TRUE(target.contains(h.comul(a, b).apply(space[ab].vector(i))));
      }
    }
  }
}

TEST(ConvolutionInverse, SweedlerSelfSectionGivesAntipode) {
  const auto [p, s] = make_self_pair(fixtures::sw2<Q>());
  const auto solved = solve_convolution_inverse(p, s.g);
  ASSERT_TRUE(solved);
  for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(solved->ginv[a], p.ambient.antipode[a]);
}

TEST(ConvolutionInverse, QuotientSectionGivesInverseRepresentatives) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  const auto solved = solve_convolution_inverse(p, s.g);
  ASSERT_TRUE(solved);
  const auto g = symmetric_group_3();
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(solved->ginv[a].col(0), unit_vector<Q>(6, 0));
    EXPECT_EQ(solved->ginv[a].col(1), unit_vector<Q>(6, g.inv(3)));
  }
}

TEST(ConvolutionInverse, ZeroAtUnitHasNoInverse) {
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  auto g = s.g;
  for (auto& m : g)
    for (std::size_t i = 0; i < 6; ++i) m(i, 0) = Q(0);
  EXPECT_FALSE(solve_convolution_inverse(p, g).has_value());
}

TEST(ConvolutionInverse, IsolatedInclusion) {
  const auto sub = fixtures::iso_s3<Q>();
  const auto p = isolated_to_coisotropic(sub);
  std::vector<Matrix<Q>> g;
  for (const auto& a : sub.subspaces) g.push_back(a.embedding());
  const auto solved = solve_convolution_inverse(p, g);
  ASSERT_TRUE(solved);
  for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(solved->ginv[a], g[a] * p.target_hopf()->antipode[p.ambient.group.inv(a)]);
}

TEST(SectionCheck, PassingAndCrosswise) {
  const auto [self, ss] = make_self_pair(fixtures::sw2<Q>());
  EXPECT_TRUE(check_section(self, ss).ok());
  const auto [p, s] = fixtures::qp_s3_a3<Q>();
  EXPECT_TRUE(check_section(p, s).ok());

  auto cross = s;
  for (auto& m : cross.g) {
    m = Matrix<Q>(6, 2);
    m(3, 0) = Q(1);
    m(0, 1) = Q(1);
  }
  const auto r = check_section(p, cross);
  ASSERT_NE(r.find("unit(0)"), nullptr);
  EXPECT_TRUE(r.find("unit(0)")->failed());
}

TEST(SectionCheck, CoisotropicConditionTwo) {
  const auto [p, s] = make_isolated_pair(fixtures::iso_s3<Q>());
  const auto r = check_section(p, s);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.find("condition2(0)")->passed());
  EXPECT_TRUE(r.find("condition2_other_preimage(1)")->passed());
}

TEST(SectionProperty, ConvolutionIdentitiesOnRandomQuotients) {
  std::mt19937 rng(31);
  const auto g = symmetric_group_3();
  for (int t = 0; t < 5; ++t) {
    // Random representatives of the two A3 cosets.
    const std::size_t r0 = rng() % 3, r1 = 3 + rng() % 3;
    auto [p, s] = fixtures::qp_s3_a3<Q>();
    for (std::size_t a = 0; a < 2; ++a) {
      s.g[a] = Matrix<Q>(6, 2);
      s.g[a](r0, 0) = Q(1);
      s.g[a](r1, 1) = Q(1);
    }
    const auto solved = solve_convolution_inverse(p, s.g);
    ASSERT_TRUE(solved);
    EXPECT_EQ(solved->ginv[0].col(1), unit_vector<Q>(6, g.inv(r1)));
    const auto r = check_section(p, *solved);
    EXPECT_TRUE(r.find("convolution_inverse(0)")->passed());
    EXPECT_EQ(r.find("unit(0)")->passed(), r0 == 0);
  }
}
