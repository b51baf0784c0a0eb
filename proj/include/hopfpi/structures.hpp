#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfpi/field.hpp"
#include "hopfpi/group.hpp"
#include "hopfpi/matrix.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

inline std::string clause_name(const std::string& base, std::initializer_list<std::size_t> idx) {
  std::string s = base + "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

/// mul has shape dim x dim^2 with column i*dim+j holding e_i e_j.
template <ExactField K>
struct AlgebraComponent {
  std::size_t dim = 0;
  Matrix<K> mul;
  Vec<K> unit;

  Matrix<K> unit_col() const { return Matrix<K>::column(unit); }
  Vec<K> product(const Vec<K>& a, const Vec<K>& b) const { return mul.apply(kron(a, b)); }
};

/// A pi-coalgebra: spaces C_a, comultiplications delta[a*n+b] : C_ab -> C_a (x) C_b
/// and a counit on C_1.
template <ExactField K>
struct CoalgebraFamily {
  GroupTable group;
  FieldSpec field;
  std::vector<std::size_t> dims;
  std::vector<Matrix<K>> delta;
  Vec<K> counit;

  std::size_t order() const { return group.order(); }
  std::size_t dim(std::size_t a) const { return dims.at(a); }
  const Matrix<K>& comul(std::size_t a, std::size_t b) const { return delta.at(a * order() + b); }
  Matrix<K> counit_row() const { return Matrix<K>::row(counit); }

  void validate_shapes() const {
    const std::size_t n = order();
    if (dims.size() != n) throw ShapeMismatch("dims: expected " + std::to_string(n) + " components");
    if (delta.size() != n * n) throw ShapeMismatch("delta: expected " + std::to_string(n * n) + " entries");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& d = comul(a, b);
        if (d.rows() != dims[a] * dims[b] || d.cols() != dims[group.mul(a, b)])
          throw ShapeMismatch("delta " + std::to_string(a) + "," + std::to_string(b) + " has shape " + d.shape());
      }
    if (counit.size() != dims[0]) throw ShapeMismatch("counit length");
  }
};

template <ExactField K>
struct HopfFamily : CoalgebraFamily<K> {
  std::vector<AlgebraComponent<K>> components;
  std::vector<Matrix<K>> antipode;

  const Matrix<K>& mul(std::size_t a) const { return components.at(a).mul; }
  Matrix<K> unit_col(std::size_t a) const { return components.at(a).unit_col(); }
  const Vec<K>& unit(std::size_t a) const { return components.at(a).unit; }

  void validate_shapes() const {
    CoalgebraFamily<K>::validate_shapes();
    const std::size_t n = this->order();
    if (components.size() != n) throw ShapeMismatch("components: expected " + std::to_string(n));
    if (antipode.size() != n) throw ShapeMismatch("antipode: expected " + std::to_string(n));
    for (std::size_t a = 0; a < n; ++a) {
      const auto& c = components[a];
      const std::string where = "component " + std::to_string(a);
      if (c.dim == 0) throw ShapeMismatch(where + ": dim must be at least 1");
      if (c.dim != this->dims[a]) throw ShapeMismatch(where + ": dim");
      if (c.mul.rows() != c.dim || c.mul.cols() != c.dim * c.dim) throw ShapeMismatch(where + ": mul");
      if (c.unit.size() != c.dim) throw ShapeMismatch(where + ": unit");
      const auto& s = antipode[a];
      if (s.rows() != this->dims[this->group.inv(a)] || s.cols() != c.dim)
        throw ShapeMismatch("antipode " + std::to_string(a) + " has shape " + s.shape());
    }
  }
};

enum class Side { right, left };

inline const char* to_string(Side s) { return s == Side::right ? "right" : "left"; }

/// Right: coaction[a*n+b] : M_ab -> M_a (x) C_b. Left: M_ab -> C_a (x) M_b.
template <ExactField K>
struct ComoduleFamily {
  Side side = Side::right;
  std::vector<std::size_t> dims;
  std::vector<Matrix<K>> coaction;

  const Matrix<K>& coact(std::size_t a, std::size_t b, std::size_t n) const { return coaction.at(a * n + b); }

  void validate_shapes(const CoalgebraFamily<K>& c) const {
    const std::size_t n = c.order();
    if (dims.size() != n) throw ShapeMismatch("comodule dims: expected " + std::to_string(n));
    if (coaction.size() != n * n) throw ShapeMismatch("coaction: expected " + std::to_string(n * n) + " entries");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& t = coact(a, b, n);
        const std::size_t rows = side == Side::right ? dims[a] * c.dim(b) : c.dim(a) * dims[b];
        if (t.rows() != rows || t.cols() != dims[c.group.mul(a, b)])
          throw ShapeMismatch("coaction " + std::to_string(a) + "," + std::to_string(b) + " has shape " + t.shape());
      }
  }
};

/// actions[a] : M_a (x) H_a -> M_a.
template <ExactField K>
struct HopfComoduleFamily {
  ComoduleFamily<K> base;
  std::vector<Matrix<K>> actions;
};

/// maps[a] : H_1 -> H_a.
template <ExactField K>
struct Cosection {
  std::vector<Matrix<K>> maps;
};

/// Multiplication of the tensor product algebra A (x) B.
template <ExactField K>
Matrix<K> tensor_algebra_mul(const Matrix<K>& mu_a, std::size_t da, const Matrix<K>& mu_b, std::size_t db) {
  const std::size_t d = da * db;
  Matrix<K> r(d, d * d);
  for (std::size_t p = 0; p < da; ++p)
    for (std::size_t q = 0; q < db; ++q)
      for (std::size_t u = 0; u < da; ++u)
        for (std::size_t v = 0; v < db; ++v) {
          const std::size_t col = (p * db + q) * d + (u * db + v);
          for (std::size_t i = 0; i < da; ++i) {
            const auto& x = mu_a(i, p * da + u);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < db; ++j) {
              const auto& y = mu_b(j, q * db + v);
              if (!y.is_zero()) r(i * db + j, col) = x * y;
            }
          }
        }
  return r;
}

template <ExactField K>
Matrix<K> eye(std::size_t n) {
  return Matrix<K>::identity(n);
}

namespace detail {

inline AxiomReport run_tasks(const std::vector<std::function<Clause()>>& tasks, std::size_t jobs) {
  AxiomReport r;
  r.clauses = ordered_map<Clause>(tasks.size(), jobs, [&](std::size_t i) { return tasks[i](); });
  return r;
}

template <ExactField K>
Clause check_algebra(std::string name, const AlgebraComponent<K>& c) {
  const auto i = eye<K>(c.dim);
  const auto u = c.unit_col();
  return first_failure(std::move(name),
                       {compare_maps("associativity", c.mul * kron(c.mul, i), c.mul * kron(i, c.mul)),
                        compare_maps("left unit", c.mul * kron(u, i), i),
                        compare_maps("right unit", c.mul * kron(i, u), i)});
}

template <ExactField K>
void add_coalgebra_tasks(std::vector<std::function<Clause()>>& tasks, const CoalgebraFamily<K>& c,
                         const std::string& coassoc, const std::string& counit) {
  const std::size_t n = c.order();
  const auto& g = c.group;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        tasks.emplace_back([&c, &g, a, b, d, coassoc] {
          const auto lhs = kron(c.comul(a, b), eye<K>(c.dim(d))) * c.comul(g.mul(a, b), d);
          const auto rhs = kron(eye<K>(c.dim(a)), c.comul(b, d)) * c.comul(a, g.mul(b, d));
          return compare_maps(clause_name(coassoc, {a, b, d}), lhs, rhs);
        });
  for (std::size_t a = 0; a < n; ++a)
    tasks.emplace_back([&c, a, counit] {
      const auto e = c.counit_row();
      const auto i = eye<K>(c.dim(a));
      return first_failure(clause_name(counit, {a}),
                           {compare_maps("left counit", kron(e, i) * c.comul(0, a), i),
                            compare_maps("right counit", kron(i, e) * c.comul(a, 0), i)});
    });
}

}  // namespace detail

/// Coassociativity and counit of a pi-coalgebra.
template <ExactField K>
AxiomReport check_coalgebra(const CoalgebraFamily<K>& c, std::size_t jobs = 1, const std::string& coassoc = "coassoc",
                            const std::string& counit = "counit") {
  c.validate_shapes();
  std::vector<std::function<Clause()>> tasks;
  detail::add_coalgebra_tasks(tasks, c, coassoc, counit);
  return detail::run_tasks(tasks, jobs);
}

template <ExactField K>
AxiomReport check_hopf_family(const HopfFamily<K>& h, std::size_t jobs = 1) {
  h.validate_shapes();
  const std::size_t n = h.order();
  const auto& g = h.group;
  std::vector<std::function<Clause()>> tasks;
  for (std::size_t a = 0; a < n; ++a)
    tasks.emplace_back([&h, a] { return detail::check_algebra(clause_name("component_algebra", {a}), h.components[a]); });
  detail::add_coalgebra_tasks(tasks, h, "coassoc", "counit");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      tasks.emplace_back([&h, &g, a, b] {
        const std::size_t ab = g.mul(a, b);
        const auto& d = h.comul(a, b);
        const auto mu_ab = tensor_algebra_mul(h.mul(a), h.dim(a), h.mul(b), h.dim(b));
        return first_failure(clause_name("delta_algebra_map", {a, b}),
                             {compare_maps("multiplicative", d * h.mul(ab), mu_ab * kron(d, d)),
                              compare_maps("unital", d * h.unit_col(ab), kron(h.unit_col(a), h.unit_col(b)))});
      });
  tasks.emplace_back([&h] {
    const auto e = h.counit_row();
    return first_failure("counit_algebra_map", {compare_maps("multiplicative", e * h.mul(0), kron(e, e)),
                                                compare_maps("unital", e * h.unit_col(0), eye<K>(1))});
  });
  for (std::size_t a = 0; a < n; ++a)
    tasks.emplace_back([&h, &g, a] {
      const std::size_t ai = g.inv(a);
      const auto rhs = h.unit_col(a) * h.counit_row();
      const auto lhs = h.mul(a) * kron(h.antipode[ai], eye<K>(h.dim(a))) * h.comul(ai, a);
      return compare_maps(clause_name("antipode_left", {a}), lhs, rhs);
    });
  for (std::size_t a = 0; a < n; ++a)
    tasks.emplace_back([&h, &g, a] {
      const std::size_t ai = g.inv(a);
      const auto rhs = h.unit_col(a) * h.counit_row();
      const auto lhs = h.mul(a) * kron(eye<K>(h.dim(a)), h.antipode[ai]) * h.comul(a, ai);
      return compare_maps(clause_name("antipode_right", {a}), lhs, rhs);
    });
  return detail::run_tasks(tasks, jobs);
}

/// The component at the identity as a family over the trivial group.
template <ExactField K>
HopfFamily<K> identity_component(const HopfFamily<K>& h) {
  HopfFamily<K> r;
  r.group = trivial_group();
  r.field = h.field;
  r.dims = {h.dim(0)};
  r.delta = {h.comul(0, 0)};
  r.counit = h.counit;
  r.components = {h.components.at(0)};
  r.antipode = {h.antipode.at(0)};
  return r;
}

template <ExactField K>
AxiomReport check_comodule(const CoalgebraFamily<K>& c, const ComoduleFamily<K>& m, std::size_t jobs = 1) {
  c.validate_shapes();
  m.validate_shapes(c);
  const std::size_t n = c.order();
  const auto& g = c.group;
  std::vector<std::function<Clause()>> tasks;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        tasks.emplace_back([&c, &m, &g, n, a, b, d] {
          Matrix<K> lhs, rhs;
          if (m.side == Side::right) {
            lhs = kron(m.coact(a, b, n), eye<K>(c.dim(d))) * m.coact(g.mul(a, b), d, n);
            rhs = kron(eye<K>(m.dims[a]), c.comul(b, d)) * m.coact(a, g.mul(b, d), n);
          } else {
            lhs = kron(eye<K>(c.dim(a)), m.coact(b, d, n)) * m.coact(a, g.mul(b, d), n);
            rhs = kron(c.comul(a, b), eye<K>(m.dims[d])) * m.coact(g.mul(a, b), d, n);
          }
          return compare_maps(clause_name("coassoc_coaction", {a, b, d}), lhs, rhs);
        });
  for (std::size_t a = 0; a < n; ++a)
    tasks.emplace_back([&c, &m, n, a] {
      const auto e = c.counit_row();
      const auto i = eye<K>(m.dims[a]);
      const auto lhs = m.side == Side::right ? kron(i, e) * m.coact(a, 0, n) : kron(e, i) * m.coact(0, a, n);
      return compare_maps(clause_name("counit_coaction", {a}), lhs, i);
    });
  return detail::run_tasks(tasks, jobs);
}

template <ExactField K>
AxiomReport check_hopf_comodule(const HopfFamily<K>& h, const HopfComoduleFamily<K>& m, std::size_t jobs = 1) {
  h.validate_shapes();
  m.base.validate_shapes(h);
  if (m.base.side != Side::right) throw ShapeMismatch("side: Hopf comodule must be a right comodule");
  const std::size_t n = h.order();
  if (m.actions.size() != n) throw ShapeMismatch("actions: expected " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a)
    if (m.actions[a].rows() != m.base.dims[a] || m.actions[a].cols() != m.base.dims[a] * h.dim(a))
      throw ShapeMismatch("action " + std::to_string(a) + " has shape " + m.actions[a].shape());
  const auto& g = h.group;
  std::vector<std::function<Clause()>> tasks;
  for (std::size_t a = 0; a < n; ++a)
    tasks.emplace_back([&h, &m, a] {
      const auto& r = m.actions[a];
      const auto im = eye<K>(m.base.dims[a]);
      const auto ih = eye<K>(h.dim(a));
      return first_failure(clause_name("module", {a}),
                           {compare_maps("associativity", r * kron(r, ih), r * kron(im, h.mul(a))),
                            compare_maps("unit", r * kron(im, h.unit_col(a)), im)});
    });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      tasks.emplace_back([&h, &m, &g, n, a, b] {
        const std::size_t ab = g.mul(a, b);
        const auto& theta = m.base.coact(a, b, n);
        const std::size_t ma = m.base.dims[a];
        const auto lhs = theta * m.actions[ab];
        const auto mid = permute_factors<K>({ma, h.dim(b), h.dim(a), h.dim(b)}, {0, 2, 1, 3});
        const auto rhs = kron(m.actions[a], h.mul(b)) * mid * kron(theta, h.comul(a, b));
        return compare_maps(clause_name("compat", {a, b}), lhs, rhs);
      });
  return detail::run_tasks(tasks, jobs);
}

template <ExactField K>
AxiomReport check_cosection(const HopfFamily<K>& h, const Cosection<K>& eta) {
  h.validate_shapes();
  const std::size_t n = h.order();
  if (eta.maps.size() != n) throw ShapeMismatch("cosection: expected " + std::to_string(n) + " maps");
  for (std::size_t a = 0; a < n; ++a)
    if (eta.maps[a].rows() != h.dim(a) || eta.maps[a].cols() != h.dim(0))
      throw ShapeMismatch("cosection " + std::to_string(a) + " has shape " + eta.maps[a].shape());
  AxiomReport r;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& e = eta.maps[a];
    r.add(first_failure(clause_name("algebra_map", {a}),
                        {compare_maps("multiplicative", e * h.mul(0), h.mul(a) * kron(e, e)),
                         compare_maps("unital", e * h.unit_col(0), h.unit_col(a))}));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto& e = eta.maps[a];
    r.add(compare_maps(clause_name("comodule_map", {a}), h.comul(0, a) * e, kron(eye<K>(h.dim(0)), e) * h.comul(0, 0)));
  }
  return r;
}

}  // namespace hopfpi
