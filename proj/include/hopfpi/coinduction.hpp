#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfpi/subobjects.hpp"

namespace hopfpi {

/// W_a inside Hom(V_1, H_a), maps flattened column-major (entry (i, j) at
/// index j*dim(H_a)+i). coaction[a*n+b] : W_ab -> W_a (x) H_b in W coordinates.
template <ExactField K>
struct CoinducedComodule {
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

  /// The i-th basis map of W_a as a dim(H_a) x dim(V_1) matrix.
  Matrix<K> basis_map(std::size_t a, std::size_t i, std::size_t dim_h) const {
    return unflatten<K>(spaces.at(a).vector(i), dim_h, source.dims.at(0));
  }
};

template <ExactField K>
Matrix<K> coinduced_condition(const QuotientPair<K>& p, const ComoduleFamily<K>& v, std::size_t a) {
  const auto& rho = v.coact(0, 0, p.ambient.order());
  const auto L = compute_L(p, 0, a);
  const std::size_t c1 = p.C().dim(0);
  return matrix_of_operator<K>(p.ambient.dim(a), v.dims.at(0),
                               [&](const Matrix<K>& f) { return L * f - kron(eye<K>(c1), f) * rho; });
}

/// Omega_{a,b} computed from the dual pair (basis, basis^-1) of H_b; the
/// result is in W_a (x) H_b coordinates with the standard basis of H_b.
template <ExactField K>
Matrix<K> coinduced_coaction_in_basis(const QuotientPair<K>& p, const CoinducedComodule<K>& w, std::size_t a,
                                      std::size_t b, const Matrix<K>& basis) {
  const auto& h = p.ambient;
  const std::size_t ab = h.group.mul(a, b);
  const std::size_t db = h.dim(b);
  const auto dual = inverse(basis);
  if (!dual) throw ShapeMismatch("coinduced_coaction_in_basis: basis is singular");
  const auto& target = w.spaces[a];
  Matrix<K> omega(target.dim() * db, w.spaces[ab].dim());
  for (std::size_t j = 0; j < w.spaces[ab].dim(); ++j) {
    const auto delta_f = h.comul(a, b) * w.basis_map(ab, j, h.dim(ab));
    for (std::size_t i = 0; i < db; ++i) {
      const auto part = kron(eye<K>(h.dim(a)), dual->row_block(i, 1)) * delta_f;
      const auto coords = target.coordinates(flatten(part));
      if (!coords)
        throw ContainmentViolation("Omega(" + std::to_string(a) + "," + std::to_string(b) + ") summand " +
                                   std::to_string(i) + " of basis map " + std::to_string(j) + " leaves W");
      const auto e = basis.col(i);
      for (std::size_t k = 0; k < target.dim(); ++k) {
        if ((*coords)[k].is_zero()) continue;
        for (std::size_t r = 0; r < db; ++r)
          if (!e[r].is_zero()) omega(k * db + r, j) += (*coords)[k] * e[r];
      }
    }
  }
  return omega;
}

template <ExactField K>
CoinducedComodule<K> build_coinduced(const QuotientPair<K>& p, const ComoduleFamily<K>& v, std::size_t jobs = 1) {
  p.validate_shapes();
  if (v.side != Side::left) throw ShapeMismatch("side: coinduction needs a left comodule");
  v.validate_shapes(p.C());
  const auto& h = p.ambient;
  const std::size_t n = h.order();
  CoinducedComodule<K> w;
  w.source = v;
  for (std::size_t a = 0; a < n; ++a) w.spaces.push_back(null_space(coinduced_condition(p, v, a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      w.coaction.push_back(coinduced_coaction_in_basis(p, w, a, b, eye<K>(h.dim(b))));
  for (std::size_t a = 0; a < n; ++a) {
    const auto residual = coinduced_condition(p, v, a) * w.spaces[a].embedding();
    w.verification.add(compare_maps(clause_name("defining_property", {a}), residual,
                                    Matrix<K>(residual.rows(), residual.cols())));
  }
  w.verification.append(check_comodule<K>(h, w.as_comodule(), jobs));
  return w;
}

/// Both dual-basis expansions of (I (x) Delta) Delta F(v) evaluated literally
/// for every basis map F of W_abc and basis vector v of V_1.
template <ExactField K>
AxiomReport verify_xi(const QuotientPair<K>& p, const CoinducedComodule<K>& w, std::size_t a, std::size_t b,
                      std::size_t c) {
  const auto& h = p.ambient;
  const auto& grp = h.group;
  const std::size_t bc = grp.mul(b, c);
  const std::size_t abc = grp.mul(a, bc);
  const std::size_t da = h.dim(a), db = h.dim(b), dc = h.dim(c), dbc = h.dim(bc);
  const std::size_t v1 = w.source.dims.at(0);
  const std::string name = clause_name("xi", {a, b, c});
  AxiomReport r;
  for (std::size_t f = 0; f < w.spaces[abc].dim(); ++f) {
    const auto F = w.basis_map(abc, f, h.dim(abc));
    for (std::size_t v = 0; v < v1; ++v) {
      const auto x = h.comul(a, bc).apply(F.col(v));
      Vec<K> xi1(da * db * dc), xi2(da * db * dc);
      for (std::size_t i = 0; i < dbc; ++i) {
        const auto y = kron(eye<K>(da), Matrix<K>::row(unit_vector<K>(dbc, i))).apply(x);
        const auto term = kron(y, h.comul(b, c).col(i));
        for (std::size_t k = 0; k < term.size(); ++k) xi1[k] += term[k];
      }
      const auto z = kron(eye<K>(da), h.comul(b, c)).apply(x);
      for (std::size_t hh = 0; hh < db; ++hh)
        for (std::size_t l = 0; l < dc; ++l) {
          const auto fun = kron(unit_vector<K>(db, hh), unit_vector<K>(dc, l));
          const auto y = kron(eye<K>(da), Matrix<K>::row(fun)).apply(z);
          const auto term = kron(y, fun);
          for (std::size_t k = 0; k < term.size(); ++k) xi2[k] += term[k];
        }
      if (!(xi1 == xi2)) {
        r.add(compare_vectors<K>(name, {f, v}, xi1, xi2));
        return r;
      }
    }
  }
  r.add(Clause::pass(name));
  return r;
}

template <ExactField K>
AxiomReport verify_xi_all(const QuotientPair<K>& p, const CoinducedComodule<K>& w) {
  const std::size_t n = p.ambient.order();
  AxiomReport r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) r.append(verify_xi(p, w, a, b, c));
  return r;
}

}  // namespace hopfpi
