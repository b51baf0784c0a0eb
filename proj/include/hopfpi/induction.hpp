#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/subobjects.hpp"

namespace hopfpi {

/// Ind_a inside V_1 (x) H_a together with the coaction (I (x) Delta) in Ind
/// coordinates: coaction[a*n+b] : Ind_ab -> Ind_a (x) H_b.
template <ExactField K>
struct InducedComodule {
  ComoduleFamily<K> source;
  std::vector<Subspace<K>> spaces;
  std::vector<Matrix<K>> coaction;
  AxiomReport verification;

  ComoduleFamily<K> as_comodule() const {
    ComoduleFamily<K> m;
    m.side = Side::right;
    for (const auto& s : spaces) m.dims.push_back(s.dim());
    m.coaction = coaction;
    return m;
  }
};

namespace detail {

/// Coordinates of the columns of m in the basis given by the (independent)
/// columns of basis, or nullopt when some column lies outside.
template <ExactField K>
std::optional<Matrix<K>> coordinates_in(const Matrix<K>& basis, const Matrix<K>& m) {
  return solve(basis, m);
}

}  // namespace detail

template <ExactField K>
Matrix<K> induced_condition(const QuotientPair<K>& p, const ComoduleFamily<K>& v, std::size_t a) {
  const std::size_t v1 = v.dims.at(0);
  const auto& rho = v.coact(0, 0, p.ambient.order());
  return kron(eye<K>(v1), compute_L(p, 0, a)) - kron(rho, eye<K>(p.ambient.dim(a)));
}

template <ExactField K>
InducedComodule<K> build_induced(const QuotientPair<K>& p, const ComoduleFamily<K>& v, std::size_t jobs = 1) {
  p.validate_shapes();
  if (v.side != Side::right) throw ShapeMismatch("side: induction needs a right comodule");
  v.validate_shapes(p.C());
  const auto& h = p.ambient;
  const auto& grp = h.group;
  const std::size_t n = h.order();
  const std::size_t v1 = v.dims[0];
  InducedComodule<K> ind;
  ind.source = v;
  for (std::size_t a = 0; a < n; ++a) ind.spaces.push_back(null_space(induced_condition(p, v, a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto image = kron(eye<K>(v1), h.comul(a, b)) * ind.spaces[grp.mul(a, b)].embedding();
      auto coords = detail::coordinates_in(kron(ind.spaces[a].embedding(), eye<K>(h.dim(b))), image);
      if (!coords)
        throw ContainmentViolation("(I (x) Delta)(" + std::to_string(a) + "," + std::to_string(b) +
                                   ") leaves Ind (x) H");
      ind.coaction.push_back(std::move(*coords));
    }
  for (std::size_t a = 0; a < n; ++a) {
    const auto residual = induced_condition(p, v, a) * ind.spaces[a].embedding();
    ind.verification.add(residual.is_zero() ? Clause::pass(clause_name("defining_property", {a}))
                                            : compare_maps(clause_name("defining_property", {a}), residual,
                                                           Matrix<K>(residual.rows(), residual.cols())));
  }
  ind.verification.append(check_comodule<K>(h, ind.as_comodule(), jobs));
  return ind;
}

/// lambda[a] : Ind_a (x) S_a -> Ind_a, right multiplication in the H factor,
/// together with the multiplication and unit of S_a in its own coordinates.
template <ExactField K>
struct InducedAction {
  std::vector<Matrix<K>> lambda;
  std::vector<Matrix<K>> mul_s;
  std::vector<Vec<K>> unit_s;
  AxiomReport verification;
};

template <ExactField K>
InducedAction<K> induced_action(const QuotientPair<K>& p, const InducedComodule<K>& ind, const SubspaceFamily<K>& s) {
  const auto& h = p.ambient;
  const std::size_t n = h.order();
  const std::size_t v1 = ind.source.dims.at(0);
  if (s.size() != n || ind.spaces.size() != n) throw ShapeMismatch("induced_action: family sizes");
  InducedAction<K> out;
  for (std::size_t a = 0; a < n; ++a) {
    const auto e_ind = ind.spaces[a].embedding();
    const auto e_s = s[a].embedding();
    const auto image = kron(eye<K>(v1), h.mul(a)) * kron(e_ind, e_s);
    auto lam = s[a].dim() == 0 ? std::optional<Matrix<K>>(Matrix<K>(ind.spaces[a].dim(), 0))
                               : detail::coordinates_in(e_ind, image);
    if (!lam) throw ClosureViolation("Ind(" + std::to_string(a) + ") is not stable under the action");
    auto ms = s[a].coordinates_of_columns(h.mul(a) * kron(e_s, e_s));
    if (!ms) throw ClosureViolation("S(" + std::to_string(a) + ") is not closed under multiplication");
    auto us = s[a].coordinates(h.unit(a));
    if (!us) throw ClosureViolation("unit not in S(" + std::to_string(a) + ")");
    const auto ii = eye<K>(ind.spaces[a].dim());
    const auto is = eye<K>(s[a].dim());
    out.verification.add(first_failure(
        clause_name("action_module", {a}),
        {compare_maps("associativity", *lam * kron(*lam, is), *lam * kron(ii, *ms)),
         compare_maps("unit", *lam * kron(ii, Matrix<K>::column(*us)), ii)}));
    out.lambda.push_back(std::move(*lam));
    out.mul_s.push_back(std::move(*ms));
    out.unit_s.push_back(std::move(*us));
  }
  return out;
}

enum class IsoContext { H_CB, Ind_VB, H_CG };

inline const char* to_string(IsoContext c) {
  switch (c) {
    case IsoContext::H_CB: return "H=C(x)B";
    case IsoContext::Ind_VB: return "Ind=V(x)B";
    case IsoContext::H_CG: return "H=C(x)G";
  }
  return "?";
}

/// forward[a] and backward[a] are mutually inverse, verified exactly.
template <ExactField K>
struct IsoWitness {
  IsoContext context = IsoContext::H_CB;
  std::vector<Matrix<K>> forward;
  std::vector<Matrix<K>> backward;
  std::vector<std::size_t> sizes;
  bool verified = false;
};

namespace detail {

template <ExactField K>
void require_identity(const Matrix<K>& composite, std::size_t a, const std::string& what) {
  const auto id = eye<K>(composite.rows());
  if (composite.rows() != composite.cols() || !(composite == id))
    throw NotBijective(a, composite.rows() - std::min(composite.rows(), rank(composite)), what);
}

template <ExactField K>
IsoWitness<K> iso_H_CS(const QuotientPair<K>& p, const Section<K>& s, const SubspaceFamily<K>& space, IsoContext ctx) {
  p.validate_shapes();
  validate_section_shapes(p, s);
  const auto& h = p.ambient;
  const auto& c = p.C();
  const auto& grp = h.group;
  const std::size_t n = h.order();
  IsoWitness<K> w;
  w.context = ctx;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = grp.inv(a);
    const std::size_t da = h.dim(a);
    const std::size_t product = c.dim(a) * space[a].dim();
    if (product != da)
      throw NotBijective(a, da > product ? da - product : product - da,
                         "dim H = " + std::to_string(da) + " but dim C * dim S = " + std::to_string(product));
    const auto e_s = space[a].embedding();
    const auto forward = h.mul(a) * kron(s.g[a], e_s);
    const auto right = h.mul(a) * kron(s.ginv[a] * p.sigma[ai], eye<K>(da));
    const auto ambient =
        kron(p.sigma[a], right) * kron(h.comul(a, ai), eye<K>(da)) * h.comul(0, a);
    const auto backward = coordinates_in(kron(eye<K>(c.dim(a)), e_s), ambient);
    if (!backward) throw NotBijective(a, 0, "backward image leaves C (x) S");
    require_identity(forward * *backward, a, "forward * backward");
    require_identity(*backward * forward, a, "backward * forward");
    w.forward.push_back(forward);
    w.backward.push_back(*backward);
    w.sizes.push_back(da);
  }
  w.verified = true;
  return w;
}

}  // namespace detail

/// H_a = C_a (x) B_a via c (x) b -> g(c) b.
template <ExactField K>
IsoWitness<K> iso_H_CB(const QuotientPair<K>& p, const Section<K>& s) {
  return detail::iso_H_CS(p, s, compute_B(p), IsoContext::H_CB);
}

template <ExactField K>
IsoWitness<K> iso_H_CB(const QuotientPair<K>& p, const Section<K>& s, const SubspaceFamily<K>& b) {
  return detail::iso_H_CS(p, s, b, IsoContext::H_CB);
}

/// H_a = C_a (x) G_a for a coisotropic pair.
template <ExactField K>
IsoWitness<K> iso_H_CG(const QuotientPair<K>& p, const Section<K>& s) {
  if (p.variant != PairVariant::coisotropic) throw PreconditionFailed("variant: H = C (x) G needs a coisotropic pair");
  return detail::iso_H_CS(p, s, compute_G(p), IsoContext::H_CG);
}

/// Ind_a = V_1 (x) B_a via q(v (x) b) = lambda(T(v) (x) b), T = (I (x) eta g_1) rho_{1,1}.
/// Also checks that q is a right module map.
template <ExactField K>
IsoWitness<K> iso_Ind_VB(const QuotientPair<K>& p, const Section<K>& s, const Cosection<K>& eta,
                         const InducedComodule<K>& ind, const SubspaceFamily<K>& b) {
  p.validate_shapes();
  validate_section_shapes(p, s);
  const auto& h = p.ambient;
  const std::size_t n = h.order();
  if (eta.maps.size() != n) throw ShapeMismatch("cosection: expected " + std::to_string(n) + " maps");
  const std::size_t v1 = ind.source.dims.at(0);
  const auto& rho = ind.source.coact(0, 0, n);
  const auto action = induced_action(p, ind, b);
  IsoWitness<K> w;
  w.context = IsoContext::Ind_VB;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t da = h.dim(a);
    const std::size_t product = v1 * b[a].dim();
    const std::size_t di = ind.spaces[a].dim();
    if (product != di)
      throw NotBijective(a, di > product ? di - product : product - di,
                         "dim Ind = " + std::to_string(di) + " but dim V * dim B = " + std::to_string(product));
    const auto e_ind = ind.spaces[a].embedding();
    const auto e_b = b[a].embedding();
    const auto t = kron(eye<K>(v1), eta.maps[a] * s.g[0]) * rho;
    const auto q_ambient = kron(eye<K>(v1), h.mul(a)) * kron(t, e_b);
    const auto q = detail::coordinates_in(e_ind, q_ambient);
    if (!q) throw NotBijective(a, 0, "q leaves Ind");
    const auto qinv_ambient =
        kron(eye<K>(v1), h.mul(a) * kron(eta.maps[a] * s.ginv[0], eye<K>(da))) * kron(rho, eye<K>(da));
    const auto qinv = detail::coordinates_in(kron(eye<K>(v1), e_b), qinv_ambient * e_ind);
    if (!qinv) throw NotBijective(a, 0, "backward image leaves V (x) B");
    detail::require_identity(*q * *qinv, a, "q * q^-1");
    detail::require_identity(*qinv * *q, a, "q^-1 * q");
    const auto lhs = *q * kron(eye<K>(v1), action.mul_s[a]);
    const auto rhs = action.lambda[a] * kron(*q, eye<K>(b[a].dim()));
    if (!(lhs == rhs)) {
      const auto c = compare_maps("module_map", lhs, rhs);
      throw ModuleMapViolation("component " + std::to_string(a) + ", basis triple " +
                               std::to_string(c.witness_index.empty() ? 0 : c.witness_index[0]));
    }
    w.forward.push_back(*q);
    w.backward.push_back(*qinv);
    w.sizes.push_back(di);
  }
  w.verified = true;
  return w;
}

/// Names of the clauses in verify_lemma_suite that read ginv.
inline bool lemma_clause_uses_ginv(const std::string& name) {
  for (const char* prefix : {"conv_right", "conv_left", "ginv_colinear", "reconstruction", "ginv_projection",
                             "ginv_condition2"})
    if (name.rfind(prefix, 0) == 0) return true;
  return false;
}

/// The identities leading up to the trivialization isomorphisms, each as an
/// exact matrix identity or membership test. space is B for subcoalgebra
/// pairs and G for coisotropic ones.
template <ExactField K>
AxiomReport verify_lemma_suite(const QuotientPair<K>& p, const Section<K>& s, const SubspaceFamily<K>& space) {
  p.validate_shapes();
  validate_section_shapes(p, s);
  const auto& h = p.ambient;
  const auto& c = p.C();
  const auto& grp = h.group;
  const std::size_t n = h.order();
  const std::size_t d1 = h.dim(0);
  const std::size_t c1 = c.dim(0);
  AxiomReport r;
  const auto target = [&](std::size_t a) { return h.unit_col(a) * c.counit_row(); };
  for (std::size_t a = 0; a < n; ++a) {
    r.add(compare_maps(clause_name("conv_right", {a}), convolve_right(p, a, s.g[a], s.ginv[a]), target(a)));
    r.add(compare_maps(clause_name("conv_left", {a}), convolve_left(p, a, s.g[a], s.ginv[a]), target(a)));
  }
  const auto split_first = [&](const CoalgebraFamily<K>& f, std::size_t a) {
    const std::size_t ai = grp.inv(a);
    const auto lhs = kron(f.comul(0, a), f.comul(ai, 0)) * f.comul(a, ai);
    const auto rhs = kron(kron(eye<K>(f.dim(0)), f.comul(a, ai)), eye<K>(f.dim(0))) *
                     kron(f.comul(0, 0), eye<K>(f.dim(0))) * f.comul(0, 0);
    return std::pair{lhs, rhs};
  };
  const auto split_second = [&](const CoalgebraFamily<K>& f, std::size_t a) {
    const std::size_t ai = grp.inv(a);
    const auto lhs = kron(f.comul(ai, 0), f.comul(0, a)) * f.comul(ai, a);
    const auto rhs = kron(kron(eye<K>(f.dim(ai)), f.comul(0, 0)), eye<K>(f.dim(a))) *
                     kron(f.comul(ai, 0), eye<K>(f.dim(a))) * f.comul(ai, a);
    return std::pair{lhs, rhs};
  };
  for (std::size_t a = 0; a < n; ++a) {
    auto [l1, r1] = split_first(h, a);
    r.add(compare_maps(clause_name("coproduct_split_first", {a}), l1, r1));
    auto [l2, r2] = split_second(h, a);
    r.add(compare_maps(clause_name("coproduct_split_second", {a}), l2, r2));
    auto [l3, r3] = split_first(c, a);
    r.add(compare_maps(clause_name("C_coproduct_split_first", {a}), l3, r3));
    auto [l4, r4] = split_second(c, a);
    r.add(compare_maps(clause_name("C_coproduct_split_second", {a}), l4, r4));
  }
  const auto* ch = p.target_hopf();
  for (std::size_t a = 0; a < n; ++a) {
    const std::string name = clause_name("ginv_colinear", {a});
    if (!ch) {
      r.add(Clause::skip(name, "target has no antipode"));
      continue;
    }
    const std::size_t ai = grp.inv(a);
    const auto lhs = compute_L(p, 0, a) * s.ginv[a];
    const auto rhs = kron(ch->antipode[0], s.ginv[a]) * swap_map<K>(c.dim(ai), c1) * c.comul(ai, 0);
    r.add(compare_maps(name, lhs, rhs));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = grp.inv(a);
    const std::size_t da = h.dim(a);
    const auto inner = kron(kron(s.g[a] * p.sigma[a], s.ginv[a] * p.sigma[ai]), eye<K>(da));
    const auto lhs = h.mul(a) * kron(h.mul(a), eye<K>(da)) * inner * kron(eye<K>(da), h.comul(ai, a)) * h.comul(a, 0);
    r.add(compare_maps(clause_name("reconstruction", {a}), lhs, eye<K>(da)));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = grp.inv(a);
    const auto images = h.mul(a) * kron(s.ginv[a] * p.sigma[ai], eye<K>(h.dim(a))) * h.comul(ai, a);
    r.add(detail::subspace_contains_images(clause_name("ginv_projection", {a}), space[a], images));
  }
  const auto triple = [&](std::size_t a) {
    const std::size_t ai = grp.inv(a);
    return kron(kron(p.sigma[a], p.sigma[ai]), eye<K>(h.dim(a))) * kron(h.comul(a, ai), eye<K>(h.dim(a))) *
           h.comul(0, a);
  };
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = grp.inv(a);
    const auto lhs = triple(a) * s.g[a];
    const auto rhs = kron(kron(eye<K>(c.dim(a)), eye<K>(c.dim(ai))), s.g[a]) * kron(eye<K>(c.dim(a)), c.comul(ai, a)) *
                     c.comul(a, 0);
    r.add(compare_maps(clause_name("section_triple_coproduct", {a}), lhs, rhs));
  }
  const auto u = Matrix<K>::column(b_reference_unit(p));
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = grp.inv(a);
    const auto e = space[a].embedding();
    r.add(compare_maps(clause_name("space_triple_coproduct", {a}), triple(a) * e, kron(c.comul(a, ai) * u, e)));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const std::string name = clause_name("ginv_condition2", {a});
    const std::size_t ai = grp.inv(a);
    const auto right_inv = solve_right_inverse(p.sigma[ai]);
    if (!right_inv) {
      r.add(Clause::fail(name, {}, {}, "sigma is not surjective"));
      continue;
    }
    const auto lhs = detail::twisted_left_factor(p, a, h.comul(0, a) * s.ginv[a]);
    const auto reorder = permute_factors<K>({d1, h.dim(ai), d1}, {0, 2, 1});
    const auto twisted = kron(p.sigma[0], p.sigma[ai]) * kron(h.mul(0) * kron(h.antipode[0], eye<K>(d1)), eye<K>(h.dim(ai))) *
                         reorder * kron(swap_map<K>(h.dim(ai), d1) * h.comul(ai, 0), eye<K>(d1));
    const auto rhs = kron(eye<K>(c1), s.ginv[a]) * twisted * kron(*right_inv, eye<K>(d1));
    r.add(compare_maps(name, lhs, rhs));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto i = eye<K>(h.dim(a));
    r.add(first_failure(clause_name("left_H1_comodule", {a}),
                        {compare_maps("coassociativity", kron(eye<K>(d1), h.comul(0, a)) * h.comul(0, a),
                                      kron(h.comul(0, 0), i) * h.comul(0, a)),
                         compare_maps("counit", kron(h.counit_row(), i) * h.comul(0, a), i)}));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        r.add(compare_maps(clause_name("L_coassoc", {a, b, d}),
                           kron(compute_L(p, a, b), eye<K>(h.dim(d))) * h.comul(grp.mul(a, b), d),
                           kron(eye<K>(c.dim(a)), h.comul(b, d)) * compute_L(p, a, grp.mul(b, d))));
  return r;
}

template <ExactField K>
AxiomReport verify_lemma_suite(const QuotientPair<K>& p, const Section<K>& s) {
  return verify_lemma_suite(p, s, p.variant == PairVariant::pi_subcoalgebra ? compute_B(p) : compute_G(p));
}

}  // namespace hopfpi
