#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/coinduction.hpp"
#include "hopfpi/induction.hpp"
#include "hopfpi/subobjects.hpp"

namespace hopfpi {

/// An ordinary finite-dimensional Hopf algebra in structure constants.
template <ExactField K>
struct HopfAlgebra {
  std::size_t dim = 0;
  Matrix<K> mul;
  Vec<K> unit;
  Matrix<K> delta;
  Vec<K> counit;
  Matrix<K> antipode;
};

namespace detail {

template <ExactField K>
Matrix<K> mul_from_table(std::size_t d, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>>& t) {
  Matrix<K> m(d, d * d);
  for (auto [i, j, k, c] : t) m(k, i * d + j) += K(c);
  return m;
}

}  // namespace detail

/// Sweedler's algebra on the basis 1, g, x, gx.
template <ExactField K>
HopfAlgebra<K> sweedler_algebra() {
  HopfAlgebra<K> h;
  h.dim = 4;
  // (left, right, result, coefficient)
  h.mul = detail::mul_from_table<K>(4, {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1}, {1, 0, 1, 1},
                                        {2, 0, 2, 1}, {3, 0, 3, 1}, {1, 1, 0, 1}, {1, 2, 3, 1}, {1, 3, 2, 1},
                                        {2, 1, 3, -1}, {3, 1, 2, -1}});
  h.unit = unit_vector<K>(4, 0);
  h.delta = Matrix<K>(16, 4);
  h.delta(0 * 4 + 0, 0) = K(1);
  h.delta(1 * 4 + 1, 1) = K(1);
  h.delta(2 * 4 + 0, 2) = K(1);
  h.delta(1 * 4 + 2, 2) = K(1);
  h.delta(3 * 4 + 1, 3) = K(1);
  h.delta(0 * 4 + 3, 3) = K(1);
  h.counit = {K(1), K(1), K(0), K(0)};
  h.antipode = Matrix<K>(4, 4);
  h.antipode(0, 0) = K(1);
  h.antipode(1, 1) = K(1);
  h.antipode(3, 2) = K(-1);
  h.antipode(2, 3) = K(1);
  return h;
}

template <ExactField K>
HopfAlgebra<K> group_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfAlgebra<K> h;
  h.dim = n;
  h.mul = Matrix<K>(n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.mul(g.mul(a, b), a * n + b) = K(1);
  h.unit = unit_vector<K>(n, 0);
  h.delta = Matrix<K>(n * n, n);
  for (std::size_t a = 0; a < n; ++a) h.delta(a * n + a, a) = K(1);
  h.counit = Vec<K>(n, K(1));
  h.antipode = Matrix<K>(n, n);
  for (std::size_t a = 0; a < n; ++a) h.antipode(g.inv(a), a) = K(1);
  return h;
}

/// Functions on a finite group in the basis of point indicators.
template <ExactField K>
HopfAlgebra<K> function_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfAlgebra<K> h;
  h.dim = n;
  h.mul = Matrix<K>(n, n * n);
  for (std::size_t a = 0; a < n; ++a) h.mul(a, a * n + a) = K(1);
  h.unit = Vec<K>(n, K(1));
  h.delta = Matrix<K>(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.delta(a * n + b, g.mul(a, b)) = K(1);
  h.counit = unit_vector<K>(n, 0);
  h.antipode = Matrix<K>(n, n);
  for (std::size_t a = 0; a < n; ++a) h.antipode(g.inv(a), a) = K(1);
  return h;
}

/// The family with every component equal to base.
template <ExactField K>
HopfFamily<K> make_constant(const HopfAlgebra<K>& base, const GroupTable& pi, FieldSpec field = {}) {
  HopfFamily<K> h;
  h.group = pi;
  h.field = field;
  const std::size_t n = pi.order();
  h.dims.assign(n, base.dim);
  h.delta.assign(n * n, base.delta);
  h.counit = base.counit;
  h.components.assign(n, AlgebraComponent<K>{base.dim, base.mul, base.unit});
  h.antipode.assign(n, base.antipode);
  return h;
}

template <ExactField K>
HopfFamily<K> make_trivial(const GroupTable& pi, FieldSpec field = {}) {
  HopfAlgebra<K> k;
  k.dim = 1;
  k.mul = eye<K>(1);
  k.unit = {K(1)};
  k.delta = eye<K>(1);
  k.counit = {K(1)};
  k.antipode = eye<K>(1);
  return make_constant(k, pi, field);
}

/// sigma = identity, g = identity, ginv_a = S_{a^-1}.
template <ExactField K>
std::pair<QuotientPair<K>, Section<K>> make_self_pair(const HopfFamily<K>& h) {
  QuotientPair<K> p;
  p.ambient = h;
  p.target = h;
  p.variant = PairVariant::pi_subcoalgebra;
  Section<K> s;
  for (std::size_t a = 0; a < h.order(); ++a) {
    p.sigma.push_back(eye<K>(h.dim(a)));
    s.g.push_back(eye<K>(h.dim(a)));
    s.ginv.push_back(h.antipode[h.group.inv(a)]);
  }
  return {p, s};
}

template <ExactField K>
Cosection<K> identity_cosection(const HopfFamily<K>& h) {
  Cosection<K> c;
  for (std::size_t a = 0; a < h.order(); ++a) {
    if (h.dim(a) != h.dim(0)) throw ShapeMismatch("identity cosection needs equal dimensions");
    c.maps.push_back(eye<K>(h.dim(0)));
  }
  return c;
}

template <ExactField K>
ComoduleFamily<K> regular_comodule(const CoalgebraFamily<K>& c, Side side) {
  ComoduleFamily<K> m;
  m.side = side;
  m.dims = c.dims;
  m.coaction = c.delta;
  return m;
}

/// Cosets of a normal subgroup, ordered by their minimal element.
struct CosetData {
  GroupTable quotient;
  std::vector<std::size_t> coset_of;
  std::vector<std::size_t> representative;
};

inline CosetData quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal) {
  const std::size_t n = g.order();
  const std::set<std::size_t> nset(normal.begin(), normal.end());
  if (!nset.contains(0)) throw NotNormal("subgroup does not contain the identity");
  for (auto a : nset) {
    if (a >= n) throw NotNormal("element " + std::to_string(a) + " out of range");
    for (auto b : nset)
      if (!nset.contains(g.mul(a, b))) throw NotNormal("not closed under multiplication");
    if (!nset.contains(g.inv(a))) throw NotNormal("not closed under inverses");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto a : nset)
      if (!nset.contains(g.mul(g.mul(x, a), g.inv(x))))
        throw NotNormal("conjugate of " + std::to_string(a) + " by " + std::to_string(x) + " leaves the subgroup");
  CosetData d;
  d.coset_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (d.coset_of[x] != n) continue;
    const std::size_t idx = d.representative.size();
    d.representative.push_back(x);
    for (auto a : nset) d.coset_of[g.mul(x, a)] = idx;
  }
  const std::size_t q = d.representative.size();
  GroupTable::Table t(q, std::vector<std::size_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) t[i][j] = d.coset_of[g.mul(d.representative[i], d.representative[j])];
  d.quotient = validate_group(std::move(t));
  return d;
}

/// k[G] -> k[G/N] on the constant families over pi, with the section given by
/// minimal coset representatives and ginv(q) = rep(q)^-1.
template <ExactField K>
std::pair<QuotientPair<K>, Section<K>> make_quotient_pair(const GroupTable& g, const std::vector<std::size_t>& normal,
                                                          const GroupTable& pi, FieldSpec field = {}) {
  const auto cosets = quotient_group(g, normal);
  const std::size_t n = g.order();
  const std::size_t q = cosets.quotient.order();
  QuotientPair<K> p;
  p.ambient = make_constant(group_algebra<K>(g), pi, field);
  p.target = make_constant(group_algebra<K>(cosets.quotient), pi, field);
  p.variant = PairVariant::pi_subcoalgebra;
  Matrix<K> sigma(q, n);
  for (std::size_t x = 0; x < n; ++x) sigma(cosets.coset_of[x], x) = K(1);
  Matrix<K> rep(n, q), rep_inv(n, q);
  for (std::size_t c = 0; c < q; ++c) {
    rep(cosets.representative[c], c) = K(1);
    rep_inv(g.inv(cosets.representative[c]), c) = K(1);
  }
  Section<K> s;
  for (std::size_t a = 0; a < pi.order(); ++a) {
    p.sigma.push_back(sigma);
    s.g.push_back(rep);
    s.ginv.push_back(rep_inv);
  }
  return {p, s};
}

/// Functions on G with A = functions constant on the cosets of N and I =
/// functions vanishing on transversal, without checking any hypothesis.
template <ExactField K>
SubHopfFamily<K> isolated_family_unchecked(const GroupTable& g, const std::vector<std::size_t>& normal,
                                           const std::vector<std::size_t>& transversal, const GroupTable& pi,
                                           FieldSpec field = {}) {
  const std::size_t n = g.order();
  const std::set<std::size_t> nset(normal.begin(), normal.end());
  const std::set<std::size_t> tset(transversal.begin(), transversal.end());
  std::vector<std::size_t> coset_of(n, n);
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    for (auto a : nset) coset_of[g.mul(x, a)] = count;
    ++count;
  }
  std::vector<Vec<K>> indicators(count, Vec<K>(n));
  for (std::size_t x = 0; x < n; ++x) indicators[coset_of[x]][x] = K(1);
  std::vector<Vec<K>> vanishing;
  for (std::size_t x = 0; x < n; ++x)
    if (!tset.contains(x)) vanishing.push_back(unit_vector<K>(n, x));
  SubHopfFamily<K> sub;
  sub.ambient = make_constant(function_algebra<K>(g), pi, field);
  const auto a_space = Subspace<K>::span(n, indicators);
  const auto i_space = Subspace<K>::span(n, vanishing);
  sub.subspaces.assign(pi.order(), a_space);
  sub.complement = std::vector<Subspace<K>>(pi.order(), i_space);
  return sub;
}

/// G = N x| T. The field must not have characteristic dividing |G|.
template <ExactField K>
SubHopfFamily<K> make_isolated(const GroupTable& g, const std::vector<std::size_t>& normal,
                               const std::vector<std::size_t>& complement, const GroupTable& pi, FieldSpec field = {}) {
  quotient_group(g, normal);
  const std::set<std::size_t> tset(complement.begin(), complement.end());
  const std::set<std::size_t> nset(normal.begin(), normal.end());
  if (!tset.contains(0)) throw NotComplement("T does not contain the identity");
  for (auto a : tset)
    if (a >= g.order()) throw NotComplement("element " + std::to_string(a) + " out of range");
  for (auto a : tset) {
    for (auto b : tset)
      if (!tset.contains(g.mul(a, b))) throw NotComplement("T is not closed under multiplication");
  }
  for (auto a : tset)
    if (a != 0 && nset.contains(a)) throw NotComplement("T meets N in " + std::to_string(a));
  if (tset.size() * nset.size() != g.order()) throw NotComplement("|T| * |N| != |G|");
  if (field.characteristic() != 0 && g.order() % field.characteristic() == 0)
    throw NotComplement("field characteristic divides the group order");
  return isolated_family_unchecked<K>(g, normal, complement, pi, field);
}

/// The coisotropic pair of the isolated S3 decomposition with g the inclusion
/// of A and ginv solved from the convolution equations.
template <ExactField K>
std::pair<QuotientPair<K>, Section<K>> make_isolated_pair(const SubHopfFamily<K>& sub) {
  auto pair = isolated_to_coisotropic(sub);
  std::vector<Matrix<K>> g;
  for (std::size_t a = 0; a < sub.ambient.order(); ++a) g.push_back(sub.subspaces[a].embedding());
  auto section = solve_convolution_inverse(pair, g);
  if (!section) throw PreconditionFailed("convolution_inverse: the inclusion has no convolution inverse");
  return {std::move(pair), std::move(*section)};
}

/// Named catalog entries.
namespace fixtures {

inline std::vector<std::size_t> a3() { return {0, 1, 2}; }
inline std::vector<std::size_t> transposition_12() { return {0, 3}; }

template <ExactField K>
HopfFamily<K> trivial_c2(FieldSpec field = {}) {
  return make_trivial<K>(cyclic_group(2), field);
}
template <ExactField K>
HopfFamily<K> sw2(FieldSpec field = {}) {
  return make_constant(sweedler_algebra<K>(), cyclic_group(2), field);
}
template <ExactField K>
HopfFamily<K> kg_s3(FieldSpec field = {}) {
  return make_constant(group_algebra<K>(symmetric_group_3()), cyclic_group(2), field);
}
template <ExactField K>
HopfFamily<K> fn_s3(FieldSpec field = {}) {
  return make_constant(function_algebra<K>(symmetric_group_3()), cyclic_group(2), field);
}
template <ExactField K>
std::pair<QuotientPair<K>, Section<K>> qp_s3_a3(FieldSpec field = {}) {
  return make_quotient_pair<K>(symmetric_group_3(), a3(), cyclic_group(2), field);
}
template <ExactField K>
SubHopfFamily<K> iso_s3(FieldSpec field = {}) {
  return make_isolated<K>(symmetric_group_3(), a3(), transposition_12(), cyclic_group(2), field);
}
template <ExactField K>
SubHopfFamily<K> iso_s3_bad(FieldSpec field = {}) {
  return isolated_family_unchecked<K>(symmetric_group_3(), a3(), {0, 1}, cyclic_group(2), field);
}

inline const std::vector<std::string>& hopf_names() {
  static const std::vector<std::string> names = {"trivial-c2", "sw2", "kg-s3", "fn-s3"};
  return names;
}
inline const std::vector<std::string>& pair_names() {
  static const std::vector<std::string> names = {"qp-s3-a3", "self-sw2", "self-trivial-c2", "iso-s3-pair"};
  return names;
}
inline const std::vector<std::string>& pipeline_names() {
  static const std::vector<std::string> names = {"iso-s3", "qp-s3-a3", "trivial-c2", "sw2"};
  return names;
}

template <ExactField K>
std::optional<HopfFamily<K>> hopf(const std::string& name, FieldSpec field = {}) {
  if (name == "trivial-c2") return trivial_c2<K>(field);
  if (name == "sw2") return sw2<K>(field);
  if (name == "kg-s3") return kg_s3<K>(field);
  if (name == "fn-s3") return fn_s3<K>(field);
  return std::nullopt;
}

template <ExactField K>
std::optional<std::pair<QuotientPair<K>, Section<K>>> pair(const std::string& name, FieldSpec field = {}) {
  if (name == "qp-s3-a3") return qp_s3_a3<K>(field);
  if (name == "self-sw2") return make_self_pair(sw2<K>(field));
  if (name == "self-trivial-c2") return make_self_pair(trivial_c2<K>(field));
  if (name == "iso-s3-pair") return make_isolated_pair(iso_s3<K>(field));
  return std::nullopt;
}

}  // namespace fixtures

}  // namespace hopfpi
