#include "ag/nilpoly.hpp"

#include <algorithm>

namespace ag {

AdmissibleProjection::AdmissibleProjection(AlgebraPtr algebra, AlgebraElement socle,
                                           RatVec omega,
                                           std::vector<AlgebraElement> kernel_basis,
                                           RatMatrix frame_inverse)
    : algebra_(std::move(algebra)),
      socle_(std::move(socle)),
      omega_(std::move(omega)),
      kernel_basis_(std::move(kernel_basis)),
      frame_inverse_(std::move(frame_inverse)) {}

AdmissibleProjection AdmissibleProjection::make(
    AlgebraPtr algebra, std::optional<std::vector<AlgebraElement>> complement_basis,
    std::optional<AlgebraElement> socle_generator) {
  if (!algebra->is_gorenstein())
    throw std::invalid_argument("algebra is not Gorenstein (socle dimension " +
                                std::to_string(algebra->socle_dimension()) + ")");
  if (algebra->dimension() < 2)
    throw std::invalid_argument("projection requires dimension > 1");
  const std::size_t d = algebra->dimension();

  AlgebraElement s = socle_generator ? *socle_generator : algebra->socle_generator();
  if (socle_generator) {
    if (s.algebra() != algebra) throw std::invalid_argument("algebra mismatch");
    RowSpan socle_span(d);
    for (const auto& v : algebra->socle_subspace()) socle_span.insert(v);
    if (s.is_zero() || !socle_span.contains(s.coords()))
      throw std::invalid_argument("socle generator does not span the socle");
  }

  std::vector<AlgebraElement> complement;
  if (complement_basis) {
    complement = std::move(*complement_basis);
    if (complement.size() != d - 2)
      throw std::invalid_argument("complement basis must have " + std::to_string(d - 2) +
                                  " elements");
    for (const auto& v : complement) {
      if (v.algebra() != algebra) throw std::invalid_argument("algebra mismatch");
      if (!v.in_maximal_ideal())
        throw std::invalid_argument("complement basis element outside the maximal ideal");
    }
  } else {
    // greedy completion of (1, s) by the non-socle maximal-ideal basis
    // labels, in label order
    RowSpan span(d);
    span.insert(algebra->one().coords());
    span.insert(s.coords());
    for (std::size_t i = 1; i < d && complement.size() < d - 2; ++i) {
      const AlgebraElement e = algebra->basis_element(i);
      if (span.insert(e.coords())) complement.push_back(e);
    }
  }

  std::vector<RatVec> frame_cols;
  frame_cols.push_back(algebra->one().coords());
  for (const auto& v : complement) frame_cols.push_back(v.coords());
  frame_cols.push_back(s.coords());
  RatMatrix frame = RatMatrix::from_columns(frame_cols);
  RatMatrix frame_inv;
  try {
    frame_inv = frame.inverse();
  } catch (const SingularMatrixError&) {
    throw std::invalid_argument("1, complement basis and socle generator are dependent");
  }
  RatVec omega = frame_inv.row(d - 1);
  return AdmissibleProjection(algebra, std::move(s), std::move(omega),
                              std::move(complement), std::move(frame_inv));
}

Rational AdmissibleProjection::apply_functional(const AlgebraElement& a) const {
  if (a.algebra() != algebra_) throw std::invalid_argument("algebra mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < omega_.size(); ++i)
    if (omega_[i] != 0) acc += omega_[i] * a.coord(i);
  return acc;
}

AlgebraElement AdmissibleProjection::project(const AlgebraElement& a) const {
  return socle_ * apply_functional(a);
}

std::pair<RatVec, Rational> AdmissibleProjection::split(const AlgebraElement& x) const {
  if (x.algebra() != algebra_) throw std::invalid_argument("algebra mismatch");
  if (!x.in_maximal_ideal())
    throw std::invalid_argument("element outside the maximal ideal");
  const RatVec frame_coords = frame_inverse_.apply(x.coords());
  if (frame_coords[0] != 0) throw std::logic_error("maximal-ideal split failed");
  RatVec kernel_part(frame_coords.begin() + 1, frame_coords.end() - 1);
  return {std::move(kernel_part), frame_coords.back()};
}

AlgebraElement AdmissibleProjection::from_kernel_coords(const RatVec& coords) const {
  if (coords.size() != kernel_basis_.size())
    throw std::invalid_argument("kernel coordinate size mismatch");
  AlgebraElement acc = algebra_->zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    acc = acc + kernel_basis_[i] * coords[i];
  return acc;
}

NilPolynomial nil_polynomial(const AdmissibleProjection& pi) {
  const auto& algebra = *pi.algebra();
  const std::size_t n = pi.kernel_dimension();
  const std::size_t d = algebra.dimension();

  // generic element of K with polynomial coordinates
  SymbolicElement generic(d, Polynomial(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial var = Polynomial::variable(n, k);
    const auto& basis_vec = pi.kernel_basis()[k];
    for (std::size_t i = 0; i < d; ++i)
      if (basis_vec.coord(i) != 0) generic[i] += var * basis_vec.coord(i);
  }

  Polynomial P(n);
  SymbolicElement power = generic;
  for (std::uint32_t m = 2; m <= algebra.socle_degree(); ++m) {
    power = symbolic_product(algebra, power, generic);
    P += apply_functional(pi.functional(), power) * (1 / factorial(m));
  }

  if (!homogeneous_component(P, 0).is_zero() || !homogeneous_component(P, 1).is_zero())
    throw std::logic_error("nil-polynomial has constant or linear terms");
  if (algebra.dimension() > 2 &&
      P.degree() != static_cast<int>(algebra.socle_degree()))
    throw std::logic_error("nil-polynomial degree differs from the socle degree");
  return NilPolynomial{pi, std::move(P)};
}

RatMatrix bilinear_form_gram(const LocalAlgebra& algebra, const RatVec& omega) {
  const std::size_t d = algebra.dimension();
  if (omega.size() != d) throw std::invalid_argument("functional size mismatch");
  RatMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const RatVec& prod = algebra.product_coords(i, j);
      Rational v = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (omega[k] != 0 && prod[k] != 0) v += omega[k] * prod[k];
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  return gram;
}

RatMatrix bilinear_form_bpi(const AdmissibleProjection& pi) {
  RatMatrix gram = bilinear_form_gram(*pi.algebra(), pi.functional());
  if (!gram.invertible())
    throw SingularMatrixError("algebra is not Gorenstein or projection invalid");
  return gram;
}

SymmetricForm::SymmetricForm(std::size_t dim, std::uint32_t order)
    : dim_(dim), order_(order) {
  std::size_t size = 1;
  for (std::uint32_t k = 0; k < order; ++k) size *= dim;
  entries_.assign(size, Rational(0));
}

std::size_t SymmetricForm::flat(const std::vector<std::size_t>& index) const {
  if (index.size() != order_) throw std::invalid_argument("index order mismatch");
  std::size_t f = 0;
  for (const std::size_t i : index) {
    if (i >= dim_) throw std::invalid_argument("index out of range");
    f = f * dim_ + i;
  }
  return f;
}

const Rational& SymmetricForm::value(const std::vector<std::size_t>& index) const {
  return entries_[flat(index)];
}

void SymmetricForm::set_symmetric(std::vector<std::size_t> index, const Rational& v) {
  std::sort(index.begin(), index.end());
  do {
    entries_[flat(index)] = v;
  } while (std::next_permutation(index.begin(), index.end()));
}

Polynomial SymmetricForm::diagonal_polynomial() const {
  Polynomial out(dim_);
  std::vector<std::size_t> index(order_, 0);
  const std::size_t total = entries_.size();
  for (std::size_t f = 0; f < total; ++f) {
    if (entries_[f] != 0) {
      std::vector<std::uint32_t> exps(dim_, 0);
      std::size_t rest = f;
      for (std::uint32_t k = 0; k < order_; ++k) {
        exps[rest % dim_] += 1;
        rest /= dim_;
      }
      out.add_term(Monomial(std::move(exps)), entries_[f]);
    }
  }
  return out;
}

SymmetricForm pi_m_form(const AdmissibleProjection& pi, std::uint32_t m) {
  const auto& algebra = *pi.algebra();
  if (m < 2 || m > algebra.socle_degree())
    throw std::invalid_argument("form order out of range");
  const std::size_t n = pi.kernel_dimension();
  SymmetricForm form(n, m);

  std::vector<std::size_t> index(m, 0);
  // nondecreasing index tuples; symmetric fill covers the rest
  const auto advance = [&]() -> bool {
    for (std::size_t k = m; k-- > 0;) {
      if (index[k] + 1 < n) {
        const std::size_t next = index[k] + 1;
        for (std::size_t j = k; j < m; ++j) index[j] = next;
        return true;
      }
    }
    return false;
  };
  for (bool more = n > 0; more; more = advance()) {
    AlgebraElement prod = pi.kernel_basis()[index[0]];
    for (std::size_t k = 1; k < m; ++k) prod = prod * pi.kernel_basis()[index[k]];
    form.set_symmetric(index, pi.apply_functional(prod));
  }
  return form;
}

FormTensors form_tensors(const AdmissibleProjection& pi) {
  const std::size_t n = pi.kernel_dimension();
  SymmetricForm pi2 = pi_m_form(pi, 2);
  SymmetricForm pi3 = pi_m_form(pi, 3);
  RatMatrix gram2(n, n);
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram2.at(i, j) = pi2.value({i, j});
      g.at(i, j) = gram2.at(i, j) / 2;
    }
  SymmetricForm h(n, 3);
  std::vector<std::size_t> idx(3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = j; l < n; ++l) {
        idx = {i, j, l};
        h.set_symmetric(idx, pi3.value(idx) / 6);
      }
  return FormTensors{std::move(gram2), std::move(pi3), std::move(g), std::move(h)};
}

RatVec star_product(const AdmissibleProjection& pi, const RatVec& x, const RatVec& y) {
  const std::size_t n = pi.kernel_dimension();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("kernel coordinate size mismatch");
  const AlgebraElement prod = pi.from_kernel_coords(x) * pi.from_kernel_coords(y);
  RatVec rhs(n);
  for (std::size_t l = 0; l < n; ++l)
    rhs[l] = pi.apply_functional(prod * pi.kernel_basis()[l]);
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.at(i, j) = pi.apply_functional(pi.kernel_basis()[i] * pi.kernel_basis()[j]);
  RatMatrix inv;
  try {
    inv = gram.inverse();
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("quadratic form is degenerate; projection invalid");
  }
  return inv.apply(rhs);
}

RatVec blaschke_residual(const Polynomial& P) {
  const std::size_t n = P.arity();
  const Polynomial quad = homogeneous_component(P, 2);
  const Polynomial cubic = homogeneous_component(P, 3);
  RatMatrix g(n, n);
  for (const auto& [m, c] : quad.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) vars.push_back(i);
    if (vars[0] == vars[1]) {
      g.at(vars[0], vars[0]) = c;
    } else {
      g.at(vars[0], vars[1]) = c / 2;
      g.at(vars[1], vars[0]) = c / 2;
    }
  }
  RatMatrix g_inv;
  try {
    g_inv = g.inverse();
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("quadratic part is degenerate");
  }
  SymmetricForm h(n, 3);
  for (const auto& [m, c] : cubic.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) vars.push_back(i);
    // multinomial count of distinct orderings
    std::size_t orderings = 6;
    if (vars[0] == vars[1] && vars[1] == vars[2])
      orderings = 1;
    else if (vars[0] == vars[1] || vars[1] == vars[2] || vars[0] == vars[2])
      orderings = 3;
    h.set_symmetric(vars, c / Rational(static_cast<long>(orderings)));
  }
  RatVec residual(n);
  for (std::size_t l = 0; l < n; ++l) {
    Rational acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (g_inv.at(i, j) == 0) continue;
        const Rational& hv = h.value({i, j, l});
        if (hv != 0) acc += g_inv.at(i, j) * hv;
      }
    residual[l] = acc;
  }
  return residual;
}

RatVec blaschke_residual(const NilPolynomial& P) { return blaschke_residual(P.poly); }

Rational hypersurface_eval(const AdmissibleProjection& pi, const AlgebraElement& x,
                           HypersurfaceVariant variant) {
  if (!x.in_maximal_ideal())
    throw std::invalid_argument("element outside the maximal ideal");
  if (variant == HypersurfaceVariant::zero_set)
    return pi.apply_functional(exp_m(x));
  const auto [kernel_coords, socle_coord] = pi.split(x);
  const AlgebraElement x_kernel = pi.from_kernel_coords(kernel_coords);
  return pi.apply_functional(exp_m(x_kernel)) - socle_coord;
}

AlgebraElement find_translation(const AdmissibleProjection& pi1,
                                const AdmissibleProjection& pi2) {
  if (pi1.algebra() != pi2.algebra())
    throw std::invalid_argument("projections live on different algebras");
  const auto algebra_ptr = pi1.algebra();
  const auto& algebra = *algebra_ptr;
  const std::size_t d = algebra.dimension();
  const std::size_t n = pi1.kernel_dimension();

  // socle generators are proportional: s2 = kappa * s1
  Rational kappa = 0;
  {
    const auto& s1 = pi1.socle_generator().coords();
    const auto& s2 = pi2.socle_generator().coords();
    for (std::size_t i = 0; i < d; ++i) {
      if (s1[i] != 0) {
        kappa = s2[i] / s1[i];
        break;
      }
    }
    AlgebraElement diff = pi2.socle_generator() - pi1.socle_generator() * kappa;
    if (!diff.is_zero()) throw std::logic_error("socle generators are not proportional");
  }

  // lambda = pi2 - pi1 as a functional with values identified via s1
  RatVec lambda(d);
  for (std::size_t i = 0; i < d; ++i)
    lambda[i] = kappa * pi2.functional()[i] - pi1.functional()[i];
  {
    Rational lambda_socle = 0;
    for (std::size_t i = 0; i < d; ++i)
      lambda_socle += lambda[i] * pi1.socle_generator().coord(i);
    if (lambda[0] != 0 || lambda_socle != 0)
      throw std::logic_error("projection difference does not vanish on 1 and the socle");
  }

  // solve lambda|_{K1} = pi1 ( y0 . ) on the kernel basis
  RatMatrix gram(n, n);
  RatVec rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const AlgebraElement& vj = pi1.kernel_basis()[j];
    for (std::size_t k = 0; k < n; ++k)
      gram.at(j, k) = pi1.apply_functional(pi1.kernel_basis()[k] * vj);
    Rational lam = 0;
    for (std::size_t i = 0; i < d; ++i) lam += lambda[i] * vj.coord(i);
    rhs[j] = lam;
  }
  const auto y0_coords = gram.solve(rhs);
  if (!y0_coords || gram.rank() != n)
    throw SingularMatrixError("multiplication pairing is degenerate; projection invalid");
  const AlgebraElement y0 = pi1.from_kernel_coords(*y0_coords);
  const AlgebraElement x0 = log_unit(algebra.one() + y0);

  // verify pi2(exp(x)) = pi1(exp(x + x0)) as an exact polynomial identity
  // over the maximal-ideal coordinates
  {
    const std::size_t nm = d - 1;
    SymbolicElement generic(d, Polynomial(nm));
    for (std::size_t i = 1; i < d; ++i) generic[i] = Polynomial::variable(nm, i - 1);
    SymbolicElement shifted = generic;
    for (std::size_t i = 0; i < d; ++i)
      shifted[i] += Polynomial::constant(nm, x0.coord(i));

    const auto symbolic_exp = [&](const SymbolicElement& x) {
      SymbolicElement acc(d, Polynomial(nm));
      acc[0] = Polynomial::constant(nm, 1);
      SymbolicElement power(d, Polynomial(nm));
      power[0] = Polynomial::constant(nm, 1);
      for (std::uint32_t k = 1; k <= algebra.socle_degree(); ++k) {
        power = symbolic_product(algebra, power, x);
        const Rational inv_fact = 1 / factorial(k);
        for (std::size_t i = 0; i < d; ++i) acc[i] += power[i] * inv_fact;
      }
      return acc;
    };

    const Polynomial lhs =
        apply_functional(pi2.functional(), symbolic_exp(generic)) * kappa;
    const Polynomial rhs_poly =
        apply_functional(pi1.functional(), symbolic_exp(shifted));
    if (!(lhs == rhs_poly))
      throw std::logic_error("translation postcondition failed");
  }
  return x0;
}

AdmissibleProjection twist_projection(const AdmissibleProjection& pi,
                                      const AlgebraElement& z0) {
  if (z0.algebra() != pi.algebra()) throw std::invalid_argument("algebra mismatch");
  if (hypersurface_eval(pi, z0, HypersurfaceVariant::zero_set) != 0)
    throw std::invalid_argument("translation point is not on the zero-set hypersurface");
  const auto algebra_ptr = pi.algebra();
  const auto& algebra = *algebra_ptr;
  const std::size_t d = algebra.dimension();
  const AlgebraElement factor = exp_m(z0);

  // omega'(a) = omega(exp(z0) a); kernel basis recomputed inside m
  RatVec omega_twisted(d);
  for (std::size_t i = 0; i < d; ++i)
    omega_twisted[i] = pi.apply_functional(factor * algebra.basis_element(i));

  RatMatrix constraint(1, d - 1);
  for (std::size_t i = 1; i < d; ++i) constraint.at(0, i - 1) = omega_twisted[i];
  std::vector<AlgebraElement> complement;
  for (const auto& k : constraint.kernel()) {
    RatVec coords(d);
    for (std::size_t i = 1; i < d; ++i) coords[i] = k[i - 1];
    complement.push_back(algebra.element(std::move(coords)));
  }
  return AdmissibleProjection::make(algebra_ptr, std::move(complement),
                                    pi.socle_generator());
}

}  // namespace ag
