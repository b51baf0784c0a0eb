#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfpi/structures.hpp"

namespace hopfpi {

/// Subspaces A_a of each H_a, with an optional complementary family I_a.
template <ExactField K>
struct SubHopfFamily {
  HopfFamily<K> ambient;
  std::vector<Subspace<K>> subspaces;
  std::optional<std::vector<Subspace<K>>> complement;
};

enum class PairVariant { pi_subcoalgebra, coisotropic };

inline const char* to_string(PairVariant v) {
  return v == PairVariant::pi_subcoalgebra ? "subcoalgebra" : "coisotropic";
}

/// sigma[a] : H_a -> C_a; omega[a] : H_a (x) C_a -> C_a.
template <ExactField K>
struct QuotientPair {
  HopfFamily<K> ambient;
  std::variant<HopfFamily<K>, CoalgebraFamily<K>> target;
  std::vector<Matrix<K>> sigma;
  std::optional<std::vector<Matrix<K>>> omega;
  PairVariant variant = PairVariant::pi_subcoalgebra;

  const CoalgebraFamily<K>& C() const {
    if (const auto* h = std::get_if<HopfFamily<K>>(&target)) return *h;
    return std::get<CoalgebraFamily<K>>(target);
  }
  const HopfFamily<K>* target_hopf() const { return std::get_if<HopfFamily<K>>(&target); }
  const HopfFamily<K>& H() const { return ambient; }

  void validate_shapes() const {
    ambient.validate_shapes();
    if (const auto* h = target_hopf())
      h->validate_shapes();
    else
      C().validate_shapes();
    if (!(C().group == ambient.group)) throw ShapeMismatch("target group differs from ambient group");
    const std::size_t n = ambient.order();
    if (sigma.size() != n) throw ShapeMismatch("sigma: expected " + std::to_string(n) + " maps");
    for (std::size_t a = 0; a < n; ++a)
      if (sigma[a].rows() != C().dim(a) || sigma[a].cols() != ambient.dim(a))
        throw ShapeMismatch("sigma " + std::to_string(a) + " has shape " + sigma[a].shape());
    if (omega) {
      if (omega->size() != n) throw ShapeMismatch("omega: expected " + std::to_string(n) + " maps");
      for (std::size_t a = 0; a < n; ++a)
        if ((*omega)[a].rows() != C().dim(a) || (*omega)[a].cols() != ambient.dim(a) * C().dim(a))
          throw ShapeMismatch("omega " + std::to_string(a) + " has shape " + (*omega)[a].shape());
    }
    if (variant == PairVariant::pi_subcoalgebra && !target_hopf())
      throw ShapeMismatch("target: a subcoalgebra pair needs a Hopf target");
  }
};

/// g[a] : C_a -> H_a and ginv[a] : C_{a^-1} -> H_a.
template <ExactField K>
struct Section {
  std::vector<Matrix<K>> g;
  std::vector<Matrix<K>> ginv;
};

template <ExactField K>
using SubspaceFamily = std::vector<Subspace<K>>;

template <ExactField K>
void validate_section_shapes(const QuotientPair<K>& p, const Section<K>& s) {
  const std::size_t n = p.ambient.order();
  if (s.g.size() != n || s.ginv.size() != n) throw ShapeMismatch("section: expected " + std::to_string(n) + " maps");
  for (std::size_t a = 0; a < n; ++a) {
    if (s.g[a].rows() != p.ambient.dim(a) || s.g[a].cols() != p.C().dim(a))
      throw ShapeMismatch("section g " + std::to_string(a) + " has shape " + s.g[a].shape());
    if (s.ginv[a].rows() != p.ambient.dim(a) || s.ginv[a].cols() != p.C().dim(p.ambient.group.inv(a)))
      throw ShapeMismatch("section ginv " + std::to_string(a) + " has shape " + s.ginv[a].shape());
  }
}

namespace detail {

template <ExactField K>
Clause subspace_contains_images(std::string name, const Subspace<K>& target, const Matrix<K>& images) {
  for (std::size_t j = 0; j < images.cols(); ++j) {
    const auto col = images.col(j);
    if (!target.contains(col)) return Clause::fail(std::move(name), {j}, to_strings<K>(col));
  }
  return Clause::pass(std::move(name));
}

/// Products of all basis pairs of a and b, column i*dim(b)+j holding a_i b_j.
template <ExactField K>
Matrix<K> basis_products(const Matrix<K>& mul, const Subspace<K>& a, const Subspace<K>& b) {
  return mul * kron(a.embedding(), b.embedding());
}

}  // namespace detail

template <ExactField K>
AxiomReport check_subhopf(const SubHopfFamily<K>& sub) {
  const auto& h = sub.ambient;
  h.validate_shapes();
  const std::size_t n = h.order();
  const auto& grp = h.group;
  if (sub.subspaces.size() != n) throw ShapeMismatch("subspaces: expected " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a)
    if (sub.subspaces[a].ambient_dim() != h.dim(a)) throw ShapeMismatch("subspace " + std::to_string(a) + " ambient");
  if (sub.complement) {
    if (sub.complement->size() != n) throw ShapeMismatch("complement: expected " + std::to_string(n));
    for (std::size_t a = 0; a < n; ++a)
      if ((*sub.complement)[a].ambient_dim() != h.dim(a))
        throw ShapeMismatch("complement " + std::to_string(a) + " ambient");
  }
  const auto& A = sub.subspaces;
  AxiomReport r;
  for (std::size_t a = 0; a < n; ++a)
    r.add(A[a].contains(h.unit(a)) ? Clause::pass(clause_name("unit", {a}))
                                   : Clause::fail(clause_name("unit", {a}), {}, to_strings<K>(h.unit(a))));
  for (std::size_t a = 0; a < n; ++a)
    r.add(detail::subspace_contains_images(clause_name("mul_closed", {a}), A[a],
                                           detail::basis_products(h.mul(a), A[a], A[a])));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r.add(detail::subspace_contains_images(clause_name("delta_closed", {a, b}), tensor(A[a], A[b]),
                                             h.comul(a, b) * A[grp.mul(a, b)].embedding()));
  for (std::size_t a = 0; a < n; ++a)
    r.add(detail::subspace_contains_images(clause_name("antipode_closed", {a}), A[grp.inv(a)],
                                           h.antipode[a] * A[a].embedding()));
  if (!sub.complement) return r;
  const auto& I = *sub.complement;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string name = clause_name("direct_sum", {a});
    const std::size_t total = sum(A[a], I[a]).dim();
    if (A[a].dim() + I[a].dim() == h.dim(a) && total == h.dim(a))
      r.add(Clause::pass(name));
    else
      r.add(Clause::fail(name, {A[a].dim(), I[a].dim(), total}, {},
                         "dims A + I = " + std::to_string(A[a].dim() + I[a].dim()) + ", span " + std::to_string(total) +
                             ", ambient " + std::to_string(h.dim(a))));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto whole = Subspace<K>::whole(h.dim(a));
    r.add(first_failure(clause_name("ideal", {a}),
                        {detail::subspace_contains_images("left", I[a], detail::basis_products(h.mul(a), whole, I[a])),
                         detail::subspace_contains_images("right", I[a], detail::basis_products(h.mul(a), I[a], whole))}));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto target = sum(tensor(I[a], Subspace<K>::whole(h.dim(b))), tensor(Subspace<K>::whole(h.dim(a)), I[b]));
      r.add(detail::subspace_contains_images(clause_name("coideal", {a, b}), target,
                                             h.comul(a, b) * I[grp.mul(a, b)].embedding()));
    }
  {
    const auto values = h.counit_row() * I[0].embedding();
    r.add(values.is_zero() ? Clause::pass("counit_zero")
                           : Clause::fail("counit_zero", {}, to_strings<K>(values.entries())));
  }
  for (std::size_t a = 0; a < n; ++a)
    r.add(detail::subspace_contains_images(clause_name("antipode_stable", {a}), I[grp.inv(a)],
                                           h.antipode[a] * I[a].embedding()));
  return r;
}

template <ExactField K>
Clause check_surjective(std::string name, const Matrix<K>& m) {
  const std::size_t r = rank(m);
  if (r == m.rows()) return Clause::pass(std::move(name));
  return Clause::fail(std::move(name), {r, m.rows()}, {}, "rank " + std::to_string(r) + " < " + std::to_string(m.rows()));
}

template <ExactField K>
AxiomReport check_pi_subcoalgebra(const QuotientPair<K>& p) {
  p.validate_shapes();
  const auto* c = p.target_hopf();
  if (!c) throw ShapeMismatch("target: a subcoalgebra pair needs a Hopf target");
  const auto& h = p.ambient;
  const auto& grp = h.group;
  const std::size_t n = h.order();
  AxiomReport r;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& s = p.sigma[a];
    r.add(first_failure(clause_name("sigma_algebra_map", {a}),
                        {compare_maps("multiplicative", s * h.mul(a), c->mul(a) * kron(s, s)),
                         compare_maps("unital", s * h.unit_col(a), c->unit_col(a))}));
  }
  for (std::size_t a = 0; a < n; ++a) r.add(check_surjective(clause_name("sigma_surjective", {a}), p.sigma[a]));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r.add(compare_maps(clause_name("delta_intertwine", {a, b}), c->comul(a, b) * p.sigma[grp.mul(a, b)],
                         kron(p.sigma[a], p.sigma[b]) * h.comul(a, b)));
  r.add(compare_maps("counit_intertwine", c->counit_row() * p.sigma[0], h.counit_row()));
  for (std::size_t a = 0; a < n; ++a)
    r.add(compare_maps(clause_name("antipode_intertwine", {a}), c->antipode[a] * p.sigma[a],
                       p.sigma[grp.inv(a)] * h.antipode[a]));
  return r;
}

/// omega_a, either stored or derived as mu^C (sigma (x) I) on a Hopf target.
template <ExactField K>
Matrix<K> action_of(const QuotientPair<K>& p, std::size_t a) {
  if (p.omega) return (*p.omega).at(a);
  if (const auto* c = p.target_hopf()) return c->mul(a) * kron(p.sigma[a], eye<K>(c->dim(a)));
  throw PreconditionFailed("omega");
}

template <ExactField K>
AxiomReport check_coisotropic(const QuotientPair<K>& p, std::size_t jobs = 1) {
  p.validate_shapes();
  if (!p.omega) throw PreconditionFailed("omega: a coisotropic pair needs an action");
  const auto& h = p.ambient;
  const auto& c = p.C();
  const auto& grp = h.group;
  const std::size_t n = h.order();
  AxiomReport r = check_coalgebra(c, jobs, "C_coalgebra", "C_counit");
  for (std::size_t a = 0; a < n; ++a) {
    const auto& w = (*p.omega)[a];
    const auto ic = eye<K>(c.dim(a));
    r.add(first_failure(clause_name("module", {a}),
                        {compare_maps("associativity", w * kron(h.mul(a), ic), w * kron(eye<K>(h.dim(a)), w)),
                         compare_maps("unit", w * kron(h.unit_col(a), ic), ic)}));
  }
  for (std::size_t a = 0; a < n; ++a)
    r.add(compare_maps(clause_name("sigma_module_map", {a}), p.sigma[a] * h.mul(a),
                       (*p.omega)[a] * kron(eye<K>(h.dim(a)), p.sigma[a])));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r.add(compare_maps(clause_name("delta_intertwine", {a, b}), c.comul(a, b) * p.sigma[grp.mul(a, b)],
                         kron(p.sigma[a], p.sigma[b]) * h.comul(a, b)));
  r.add(compare_maps("counit_intertwine", c.counit_row() * p.sigma[0], h.counit_row()));
  for (std::size_t a = 0; a < n; ++a) r.add(check_surjective(clause_name("sigma_surjective", {a}), p.sigma[a]));
  return r;
}

template <ExactField K>
QuotientPair<K> subcoalgebra_to_coisotropic(const QuotientPair<K>& p) {
  const auto report = check_pi_subcoalgebra(p);
  if (!report.ok()) throw PreconditionFailed(report.failures().front()->name);
  QuotientPair<K> out = p;
  out.variant = PairVariant::coisotropic;
  std::vector<Matrix<K>> omega;
  for (std::size_t a = 0; a < p.ambient.order(); ++a) {
    const auto* c = p.target_hopf();
    omega.push_back(c->mul(a) * kron(p.sigma[a], eye<K>(c->dim(a))));
  }
  out.omega = std::move(omega);
  return out;
}

/// The coisotropic pair (A, sigma) of an isolated subHopf family, with sigma
/// the projection onto A along I written in the canonical basis of A. The
/// target carries the restricted Hopf structure.
template <ExactField K>
QuotientPair<K> isolated_to_coisotropic(const SubHopfFamily<K>& sub) {
  if (!sub.complement) throw PreconditionFailed("complement: an isolated family needs a complement");
  const auto report = check_subhopf(sub);
  if (!report.ok()) throw PreconditionFailed(report.failures().front()->name);
  const auto& h = sub.ambient;
  const auto& grp = h.group;
  const std::size_t n = h.order();
  std::vector<Matrix<K>> emb(n), sigma(n);
  for (std::size_t a = 0; a < n; ++a) {
    emb[a] = sub.subspaces[a].embedding();
    const auto basis = hstack(emb[a], (*sub.complement)[a].embedding());
    const auto inv = inverse(basis);
    if (!inv) throw PreconditionFailed(clause_name("direct_sum", {a}));
    sigma[a] = inv->row_block(0, sub.subspaces[a].dim());
  }
  HopfFamily<K> c;
  c.group = grp;
  c.field = h.field;
  for (std::size_t a = 0; a < n; ++a) c.dims.push_back(sub.subspaces[a].dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.delta.push_back(kron(sigma[a], sigma[b]) * h.comul(a, b) * emb[grp.mul(a, b)]);
  c.counit = (h.counit_row() * emb[0]).row_vec(0);
  for (std::size_t a = 0; a < n; ++a) {
    AlgebraComponent<K> comp;
    comp.dim = c.dims[a];
    comp.mul = sigma[a] * h.mul(a) * kron(emb[a], emb[a]);
    comp.unit = sigma[a].apply(h.unit(a));
    c.components.push_back(std::move(comp));
    c.antipode.push_back(sigma[grp.inv(a)] * h.antipode[a] * emb[a]);
  }
  QuotientPair<K> out;
  out.ambient = h;
  out.target = std::move(c);
  out.sigma = sigma;
  std::vector<Matrix<K>> omega;
  for (std::size_t a = 0; a < n; ++a) omega.push_back(sigma[a] * h.mul(a) * kron(emb[a] * sigma[a], emb[a]));
  out.omega = std::move(omega);
  out.variant = PairVariant::coisotropic;
  return out;
}

/// L_{a,b} = (sigma_a (x) I) Delta_{a,b} : H_ab -> C_a (x) H_b.
template <ExactField K>
Matrix<K> compute_L(const QuotientPair<K>& p, std::size_t a, std::size_t b) {
  return kron(p.sigma.at(a), eye<K>(p.ambient.dim(b))) * p.ambient.comul(a, b);
}

/// (m (x) n) Theta (u (x) v) = omega_a(m (x) u) (x) n v as a map
/// (H_a (x) H_b) (x) (C_a (x) H_b) -> C_a (x) H_b.
template <ExactField K>
Matrix<K> theta_map(const QuotientPair<K>& p, std::size_t a, std::size_t b) {
  const auto& h = p.ambient;
  const auto mid = permute_factors<K>({h.dim(a), h.dim(b), p.C().dim(a), h.dim(b)}, {0, 2, 1, 3});
  return kron(action_of(p, a), h.mul(b)) * mid;
}

template <ExactField K>
Vec<K> theta_product(const QuotientPair<K>& p, std::size_t a, std::size_t b, const Vec<K>& x, const Vec<K>& y) {
  const auto& h = p.ambient;
  if (x.size() != h.dim(a) * h.dim(b)) throw ShapeMismatch("theta_product: x length");
  if (y.size() != p.C().dim(a) * h.dim(b)) throw ShapeMismatch("theta_product: y length");
  return theta_map(p, a, b).apply(kron(x, y));
}

/// Both identities of the L-map: the Theta product rule and the coassociativity
/// rule, on every basis pair. Subcoalgebra pairs also get the algebra-map clause.
template <ExactField K>
AxiomReport check_L_identities(const QuotientPair<K>& p) {
  p.validate_shapes();
  const auto& h = p.ambient;
  const auto& grp = h.group;
  const std::size_t n = h.order();
  AxiomReport r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = grp.mul(a, b);
      const auto L = compute_L(p, a, b);
      r.add(compare_maps(clause_name("L_theta_product", {a, b}), L * h.mul(ab),
                         theta_map(p, a, b) * kron(h.comul(a, b), L)));
      if (p.variant == PairVariant::pi_subcoalgebra) {
        const auto* c = p.target_hopf();
        const auto mu = tensor_algebra_mul(c->mul(a), c->dim(a), h.mul(b), h.dim(b));
        r.add(compare_maps(clause_name("L_algebra_map", {a, b}), L * h.mul(ab), mu * kron(L, L)));
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        r.add(compare_maps(clause_name("L_coassoc", {a, b, d}),
                           kron(eye<K>(p.C().dim(a)), h.comul(b, d)) * compute_L(p, a, grp.mul(b, d)),
                           kron(compute_L(p, a, b), eye<K>(h.dim(d))) * h.comul(grp.mul(a, b), d)));
  return r;
}

/// The element of C_1 used to cut out B: C's own unit for subcoalgebra pairs,
/// sigma_1(1) otherwise.
template <ExactField K>
Vec<K> b_reference_unit(const QuotientPair<K>& p) {
  if (p.variant == PairVariant::pi_subcoalgebra) return p.target_hopf()->unit(0);
  return p.sigma.at(0).apply(p.ambient.unit(0));
}

namespace detail {

template <ExactField K>
SubspaceFamily<K> solve_homogeneous(const QuotientPair<K>& p, const Vec<K>& u, const std::string& what) {
  p.validate_shapes();
  const auto& h = p.ambient;
  const auto& grp = h.group;
  const std::size_t n = h.order();
  SubspaceFamily<K> out;
  for (std::size_t a = 0; a < n; ++a)
    out.push_back(null_space(compute_L(p, 0, a) - kron(Matrix<K>::column(u), eye<K>(h.dim(a)))));
  for (std::size_t a = 0; a < n; ++a) {
    const auto prods = basis_products(h.mul(a), out[a], out[a]);
    for (std::size_t j = 0; j < prods.cols(); ++j)
      if (!out[a].contains(prods.col(j)))
        throw ClosureViolation(what + "(" + std::to_string(a) + ") is not closed under multiplication");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto target = tensor(out[a], Subspace<K>::whole(h.dim(b)));
      const auto images = h.comul(a, b) * out[grp.mul(a, b)].embedding();
      for (std::size_t j = 0; j < images.cols(); ++j)
        if (!target.contains(images.col(j)))
          throw ClosureViolation("Delta(" + std::to_string(a) + "," + std::to_string(b) + ") of " + what + " escapes " +
                                 what + " (x) H");
    }
  return out;
}

}  // namespace detail

/// B_a = {h : L_{1,a}(h) = 1 (x) h}.
template <ExactField K>
SubspaceFamily<K> compute_B(const QuotientPair<K>& p) {
  p.validate_shapes();
  return detail::solve_homogeneous(p, b_reference_unit(p), "B");
}

/// G_a = {h : L_{1,a}(h) = sigma_1(1) (x) h}.
template <ExactField K>
SubspaceFamily<K> compute_G(const QuotientPair<K>& p) {
  p.validate_shapes();
  return detail::solve_homogeneous(p, p.sigma.at(0).apply(p.ambient.unit(0)), "G");
}

/// mu_a (g_a (x) X) Delta^C_{a,a^-1} as a map C_1 -> H_a, for any X : C_{a^-1} -> H_a.
template <ExactField K>
Matrix<K> convolve_right(const QuotientPair<K>& p, std::size_t a, const Matrix<K>& g, const Matrix<K>& x) {
  const std::size_t ai = p.ambient.group.inv(a);
  return p.ambient.mul(a) * kron(g, x) * p.C().comul(a, ai);
}

/// mu_a (X (x) g_a) Delta^C_{a^-1,a}.
template <ExactField K>
Matrix<K> convolve_left(const QuotientPair<K>& p, std::size_t a, const Matrix<K>& g, const Matrix<K>& x) {
  const std::size_t ai = p.ambient.group.inv(a);
  return p.ambient.mul(a) * kron(x, g) * p.C().comul(ai, a);
}

template <ExactField K>
Clause check_convolution_inverse(std::string name, const QuotientPair<K>& p, std::size_t a, const Matrix<K>& g,
                                 const Matrix<K>& ginv) {
  const auto target = p.ambient.unit_col(a) * p.C().counit_row();
  return first_failure(std::move(name), {compare_maps("right", convolve_right(p, a, g, ginv), target),
                                         compare_maps("left", convolve_left(p, a, g, ginv), target)});
}

/// Solves the right convolution equation for ginv with free variables zeroed
/// and accepts the solution only when the left equation holds too.
template <ExactField K>
std::optional<Section<K>> solve_convolution_inverse(const QuotientPair<K>& p, const std::vector<Matrix<K>>& g) {
  p.validate_shapes();
  const auto& h = p.ambient;
  const std::size_t n = h.order();
  if (g.size() != n) throw ShapeMismatch("section: expected " + std::to_string(n) + " maps");
  Section<K> s;
  s.g = g;
  for (std::size_t a = 0; a < n; ++a) {
    if (g[a].rows() != h.dim(a) || g[a].cols() != p.C().dim(a))
      throw ShapeMismatch("section g " + std::to_string(a) + " has shape " + g[a].shape());
    const std::size_t rows = h.dim(a);
    const std::size_t cols = p.C().dim(h.group.inv(a));
    const auto system =
        matrix_of_operator<K>(rows, cols, [&](const Matrix<K>& x) { return convolve_right(p, a, g[a], x); });
    const auto rhs = flatten(Matrix<K>(h.unit_col(a) * p.C().counit_row()));
    const auto sol = solve(system, Matrix<K>::column(rhs));
    if (!sol) return std::nullopt;
    auto ginv = unflatten<K>(sol->col(0), rows, cols);
    if (!check_convolution_inverse("convolution_inverse", p, a, g[a], ginv).passed()) return std::nullopt;
    s.ginv.push_back(std::move(ginv));
  }
  return s;
}

namespace detail {

/// (sigma_1 (x) I)(mu_1 (x) I)(I (x) tau)(X (x) I_1) for X landing in H_1 (x) H_a:
/// sends x (x) u to sigma_1(x_1 u) (x) x_2.
template <ExactField K>
Matrix<K> twisted_left_factor(const QuotientPair<K>& p, std::size_t a, const Matrix<K>& x) {
  const auto& h = p.ambient;
  const std::size_t d1 = h.dim(0);
  const auto reorder = permute_factors<K>({d1, h.dim(a), d1}, {0, 2, 1});
  return kron(p.sigma[0], eye<K>(h.dim(a))) * kron(h.mul(0), eye<K>(h.dim(a))) * reorder * kron(x, eye<K>(d1));
}

/// condition (2) of a coisotropic section for the preimage map r : C_a -> H_a.
template <ExactField K>
Clause condition2_clause(std::string name, const QuotientPair<K>& p, std::size_t a, const Matrix<K>& g,
                         const Matrix<K>& r) {
  const auto& h = p.ambient;
  const auto lhs = twisted_left_factor(p, a, h.comul(0, a) * g);
  const auto rhs = kron(eye<K>(p.C().dim(0)), g * p.sigma[a]) * twisted_left_factor(p, a, h.comul(0, a)) *
                   kron(r, eye<K>(h.dim(0)));
  auto c = compare_maps(std::move(name), lhs, rhs);
  if (c.failed() && !c.witness_index.empty()) {
    const std::size_t j = c.witness_index[0];
    c.witness_index = {j / h.dim(0), j % h.dim(0)};
    c.note = "basis pair (c, u)";
  }
  return c;
}

}  // namespace detail

template <ExactField K>
AxiomReport check_section(const QuotientPair<K>& p, const Section<K>& s) {
  p.validate_shapes();
  validate_section_shapes(p, s);
  const auto& h = p.ambient;
  const std::size_t n = h.order();
  AxiomReport r;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string name = clause_name("unit", {a});
    Vec<K> one;
    if (p.variant == PairVariant::pi_subcoalgebra)
      one = p.target_hopf()->unit(a);
    else
      one = p.sigma[a].apply(h.unit(a));
    r.add(compare_vectors<K>(name, {}, s.g[a].apply(one), h.unit(a)));
  }
  for (std::size_t a = 0; a < n; ++a)
    r.add(check_convolution_inverse(clause_name("convolution_inverse", {a}), p, a, s.g[a], s.ginv[a]));
  for (std::size_t a = 0; a < n; ++a)
    r.add(compare_maps(clause_name("colinear", {a}), compute_L(p, 0, a) * s.g[a],
                       kron(eye<K>(p.C().dim(0)), s.g[a]) * p.C().comul(0, a)));
  if (p.variant != PairVariant::coisotropic) return r;
  for (std::size_t a = 0; a < n; ++a) {
    const auto right_inv = solve_right_inverse(p.sigma[a]);
    if (!right_inv) {
      r.add(Clause::fail(clause_name("condition2", {a}), {}, {}, "sigma is not surjective"));
      continue;
    }
    r.add(detail::condition2_clause(clause_name("condition2", {a}), p, a, s.g[a], *right_inv));
    const auto kernel = null_space(p.sigma[a]);
    const std::string alt = clause_name("condition2_other_preimage", {a});
    if (kernel.dim() == 0) {
      r.add(Clause::skip(alt, "sigma is injective"));
      continue;
    }
    Vec<K> k(h.dim(a));
    for (std::size_t i = 0; i < kernel.dim(); ++i)
      for (std::size_t j = 0; j < h.dim(a); ++j) k[j] += kernel.basis()(i, j);
    Matrix<K> shifted = *right_inv;
    for (std::size_t i = 0; i < shifted.rows(); ++i)
      for (std::size_t j = 0; j < shifted.cols(); ++j) shifted(i, j) += k[i];
    r.add(detail::condition2_clause(alt, p, a, s.g[a], shifted));
  }
  return r;
}

}  // namespace hopfpi
