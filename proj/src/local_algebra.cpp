#include "ag/local_algebra.hpp"

#include <algorithm>
#include <set>

namespace ag {

namespace {

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("algebra mismatch");
}

}  // namespace

AlgebraElement::AlgebraElement(AlgebraPtr algebra, RatVec coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dimension())
    throw std::invalid_argument("coordinate size mismatch");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  require_same_algebra(*this, other);
  RatVec c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  require_same_algebra(*this, other);
  RatVec c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  require_same_algebra(*this, other);
  const std::size_t d = coords_.size();
  RatVec c(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coords_[j] == 0) continue;
      const Rational factor = coords_[i] * other.coords_[j];
      const RatVec& prod = algebra_->product_coords(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        if (prod[k] != 0) c[k] += factor * prod[k];
      }
    }
  }
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const Rational& scalar) const {
  RatVec c = coords_;
  for (auto& x : c) x *= scalar;
  return AlgebraElement(algebra_, std::move(c));
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return algebra_ == other.algebra_ && coords_ == other.coords_;
}

AlgebraPtr LocalAlgebra::build(IdealPresentation pres, AlgebraBuildOptions opts) {
  const std::size_t m = pres.variables.size();
  if (m == 0) throw std::invalid_argument("presentation needs at least one variable");
  {
    std::set<std::string> names(pres.variables.begin(), pres.variables.end());
    if (names.size() != m) throw std::invalid_argument("duplicate variable names");
  }
  for (const auto& g : pres.generators) {
    if (g.arity() != m) throw std::invalid_argument("generator arity mismatch");
    if (g.constant_term() != 0)
      throw std::invalid_argument("generator has nonzero constant term");
  }

  // Truncated quotients A_D = k[x]/(I + (x)^D) for growing D. Columns are
  // monomials of degree < D in descending canonical order, so pivots land
  // on the canonical-largest monomials and the standard monomials are the
  // canonical-minimal ones.
  struct Stage {
    std::vector<Monomial> columns;  // descending canonical order
    Echelon echelon;
    std::size_t dim = 0;
  };
  std::optional<Stage> previous;
  std::optional<Stage> stable;
  std::uint32_t stab_degree = 0;

  for (std::uint32_t D = 2; D <= opts.max_truncation_degree + 1; ++D) {
    Stage stage;
    stage.columns = monomials_up_to_degree(m, D - 1);
    std::reverse(stage.columns.begin(), stage.columns.end());
    std::map<Monomial, std::size_t> col_index;
    for (std::size_t j = 0; j < stage.columns.size(); ++j)
      col_index.emplace(stage.columns[j], j);

    RatMatrix rows;
    const auto alphas = monomials_up_to_degree(m, D - 2);
    for (const auto& g : pres.generators) {
      if (g.is_zero()) continue;
      for (const auto& alpha : alphas) {
        const Polynomial row_poly =
            truncate(Polynomial::term(alpha, 1) * g, static_cast<int>(D) - 1);
        if (row_poly.is_zero()) continue;
        RatVec row(stage.columns.size());
        for (const auto& [mono, c] : row_poly.terms()) row[col_index.at(mono)] = c;
        rows.append_row(std::move(row));
      }
    }
    if (rows.rows() == 0) rows = RatMatrix(0, stage.columns.size());

    stage.echelon = rows.row_reduce();
    stage.dim = stage.columns.size() - stage.echelon.pivot_cols.size();

    if (previous && previous->dim == stage.dim) {
      stable = std::move(*previous);
      stab_degree = D - 1;
      break;
    }
    previous = std::move(stage);
  }
  if (!stable)
    throw NotArtinianError("not Artinian at origin or truncation cap too small");

  auto algebra = std::shared_ptr<LocalAlgebra>(new LocalAlgebra());
  algebra->pres_ = std::move(pres);
  algebra->stab_degree_ = stab_degree;

  // reduction table: standard monomials map to themselves, pivot
  // monomials to minus their residual row
  std::vector<Monomial> standard;
  for (std::size_t j = 0; j < stable->columns.size(); ++j)
    if (stable->echelon.pivot_row_of_col[j] < 0) standard.push_back(stable->columns[j]);
  std::sort(standard.begin(), standard.end());
  const std::size_t d = standard.size();
  if (d != stable->dim) throw std::logic_error("standard monomial count mismatch");
  std::map<Monomial, std::size_t> label_index;
  for (std::size_t i = 0; i < d; ++i) label_index.emplace(standard[i], i);
  if (standard[0].degree() != 0) throw std::logic_error("1 must be a standard monomial");

  for (std::size_t j = 0; j < stable->columns.size(); ++j) {
    const Monomial& mono = stable->columns[j];
    RatVec coords(d);
    const long prow = stable->echelon.pivot_row_of_col[j];
    if (prow < 0) {
      coords[label_index.at(mono)] = 1;
    } else {
      for (std::size_t k = 0; k < stable->columns.size(); ++k) {
        if (stable->echelon.pivot_row_of_col[k] >= 0) continue;
        const Rational& entry = stable->echelon.reduced.at(prow, k);
        if (entry != 0) coords[label_index.at(stable->columns[k])] = -entry;
      }
    }
    algebra->reduction_.emplace(mono, std::move(coords));
  }

  algebra->labels_ = standard;
  algebra->dim_ = d;

  if (!opts.basis_override.empty()) {
    const auto& user = opts.basis_override;
    if (user.size() != d - 1)
      throw std::invalid_argument("basis override must list " + std::to_string(d - 1) +
                                  " monomials (dimension is " + std::to_string(d) + ")");
    std::vector<RatVec> columns;
    RatVec unit(d);
    unit[0] = 1;
    columns.push_back(unit);
    for (const auto& mono : user) {
      if (mono.arity() != m) throw std::invalid_argument("basis monomial arity mismatch");
      if (mono.degree() == 0)
        throw std::invalid_argument("basis override monomials must lie in the maximal ideal");
      if (mono.degree() >= stab_degree) {
        columns.push_back(RatVec(d));
      } else {
        columns.push_back(algebra->reduction_.at(mono));
      }
    }
    const RatMatrix change = RatMatrix::from_columns(columns);
    RatMatrix change_inv;
    try {
      change_inv = change.inverse();
    } catch (const SingularMatrixError&) {
      throw std::invalid_argument("basis override is not linearly independent in the quotient");
    }
    for (auto& [mono, coords] : algebra->reduction_)
      coords = change_inv.apply(coords);
    std::vector<Monomial> labels;
    labels.push_back(Monomial(m));
    labels.insert(labels.end(), user.begin(), user.end());
    algebra->labels_ = std::move(labels);
  }

  // structure constants from the reduction table
  auto reduce_monomial = [&](const Monomial& mono) -> RatVec {
    if (mono.degree() >= stab_degree) return RatVec(d);
    return algebra->reduction_.at(mono);
  };
  algebra->mult_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      RatVec prod = reduce_monomial(algebra->labels_[i] * algebra->labels_[j]);
      algebra->mult_[i * d + j] = prod;
      algebra->mult_[j * d + i] = std::move(prod);
    }

  // construction-time sanity: identity row, commutativity by symmetry,
  // associativity exhaustively at desk scale
  for (std::size_t j = 0; j < d; ++j) {
    RatVec expect(d);
    expect[j] = 1;
    if (algebra->product_coords(0, j) != expect)
      throw std::logic_error("basis index 0 does not act as identity");
  }
  if (d <= 64) {
    auto mul_with_basis = [&](const RatVec& a, std::size_t j) {
      RatVec c(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        const RatVec& p = algebra->product_coords(i, j);
        for (std::size_t k = 0; k < d; ++k)
          if (p[k] != 0) c[k] += a[i] * p[k];
      }
      return c;
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          // (e_i e_j) e_l == e_i (e_j e_l); products against a basis
          // vector reduce to one structure-constant row
          const RatVec left = mul_with_basis(algebra->product_coords(i, j), l);
          RatVec right(d);
          const RatVec& jl = algebra->product_coords(j, l);
          for (std::size_t k = 0; k < d; ++k) {
            if (jl[k] == 0) continue;
            const RatVec& p = algebra->product_coords(i, k);
            for (std::size_t q = 0; q < d; ++q)
              if (p[q] != 0) right[q] += jl[k] * p[q];
          }
          if (left != right)
            throw std::logic_error("structure constants not associative");
        }
  }

  // socle = joint kernel of multiplication by the maximal-ideal basis
  {
    RatMatrix stacked(0, d);
    for (std::size_t i = 1; i < d; ++i) {
      // rows of M_{e_i}: output coordinate k as a function of input j
      for (std::size_t k = 0; k < d; ++k) {
        RatVec row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = algebra->product_coords(i, j)[k];
        stacked.append_row(std::move(row));
      }
    }
    if (d == 1) {
      algebra->socle_basis_ = {RatVec{Rational(1)}};
    } else {
      algebra->socle_basis_ = stacked.kernel();
    }
  }

  // powers of the maximal ideal: socle degree and Hilbert function
  {
    std::vector<RatVec> current;  // spanning vectors of m^k
    for (std::size_t i = 1; i < d; ++i) {
      RatVec e(d);
      e[i] = 1;
      current.push_back(std::move(e));
    }
    std::vector<std::size_t> power_dims;  // dim m^k for k = 1,2,...
    auto mul_basis = [&](std::size_t i, const RatVec& v) {
      RatVec c(d);
      for (std::size_t j = 0; j < d; ++j) {
        if (v[j] == 0) continue;
        const RatVec& p = algebra->product_coords(i, j);
        for (std::size_t k = 0; k < d; ++k)
          if (p[k] != 0) c[k] += v[j] * p[k];
      }
      return c;
    };
    while (true) {
      RowSpan span(d);
      std::vector<RatVec> reduced;
      for (const auto& v : current)
        if (span.insert(v)) reduced.push_back(v);
      if (span.rank() == 0) break;
      power_dims.push_back(span.rank());
      std::vector<RatVec> next;
      for (std::size_t i = 1; i < d; ++i)
        for (const auto& v : reduced) next.push_back(mul_basis(i, v));
      current = std::move(next);
      if (power_dims.size() > d) throw std::logic_error("maximal ideal is not nilpotent");
    }
    algebra->socle_degree_ = static_cast<std::uint32_t>(power_dims.size());
    algebra->hilbert_.assign(power_dims.size() + 1, 0);
    algebra->hilbert_[0] = 1;
    for (std::size_t k = 0; k < power_dims.size(); ++k) {
      const std::size_t next_dim = k + 1 < power_dims.size() ? power_dims[k + 1] : 0;
      algebra->hilbert_[k + 1] = power_dims[k] - next_dim;
    }
    std::size_t total = 0;
    for (const auto h : algebra->hilbert_) total += h;
    if (total != d) throw std::logic_error("Hilbert function does not sum to the dimension");
    algebra->embedding_dim_ = algebra->hilbert_.size() > 1 ? algebra->hilbert_[1] : 0;
    // for Gorenstein algebras Soc(A) = m^nu
    if (algebra->socle_basis_.size() == 1 && algebra->socle_degree_ > 0 &&
        power_dims.back() != 1)
      throw std::logic_error("socle does not equal the top power of the maximal ideal");
  }

  // chosen socle generator: normalized kernel vector, or the override
  if (algebra->socle_basis_.size() == 1) {
    RatVec gen = algebra->socle_basis_.front();
    for (std::size_t i = 0; i < d; ++i) {
      if (gen[i] != 0) {
        const Rational inv = 1 / gen[i];
        for (auto& x : gen) x *= inv;
        break;
      }
    }
    algebra->socle_generator_ = std::move(gen);
  }
  if (opts.socle_override) {
    if (algebra->socle_basis_.size() != 1)
      throw std::invalid_argument("socle generator override requires a Gorenstein algebra");
    const AlgebraElement s = algebra->normal_form(*opts.socle_override);
    RowSpan span(d);
    for (const auto& v : algebra->socle_basis_) span.insert(v);
    if (s.is_zero() || !span.contains(s.coords()))
      throw std::invalid_argument("socle override does not span the socle");
    algebra->socle_generator_ = s.coords();
  }

  return algebra;
}

std::string LocalAlgebra::label_string(std::size_t i) const {
  return to_string(labels_[i], pres_.variables);
}

AlgebraElement LocalAlgebra::socle_generator() const {
  if (!is_gorenstein())
    throw std::invalid_argument("algebra is not Gorenstein (socle dimension " +
                                std::to_string(socle_basis_.size()) + ")");
  return AlgebraElement(shared_from_this(), socle_generator_);
}

AlgebraElement LocalAlgebra::zero() const {
  return AlgebraElement(shared_from_this(), RatVec(dim_));
}

AlgebraElement LocalAlgebra::one() const { return basis_element(0); }

AlgebraElement LocalAlgebra::basis_element(std::size_t i) const {
  RatVec c(dim_);
  c.at(i) = 1;
  return AlgebraElement(shared_from_this(), std::move(c));
}

AlgebraElement LocalAlgebra::element(RatVec coords) const {
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement LocalAlgebra::normal_form(const Polynomial& f) const {
  if (f.arity() != pres_.variables.size()) throw std::invalid_argument("arity mismatch");
  RatVec coords(dim_);
  for (const auto& [mono, c] : f.terms()) {
    if (mono.degree() >= stab_degree_) continue;  // (x)^D lies in the ideal
    const RatVec& reduced = reduction_.at(mono);
    for (std::size_t i = 0; i < dim_; ++i)
      if (reduced[i] != 0) coords[i] += c * reduced[i];
  }
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement exp_m(const AlgebraElement& x) {
  if (!x.in_maximal_ideal())
    throw std::invalid_argument("exp requires an element of the maximal ideal");
  const auto& algebra = *x.algebra();
  AlgebraElement acc = algebra.one();
  AlgebraElement pow = algebra.one();
  for (std::uint32_t k = 1; k <= algebra.socle_degree(); ++k) {
    pow = pow * x;
    acc = acc + pow * (1 / factorial(k));
  }
  return acc;
}

AlgebraElement log_unit(const AlgebraElement& u) {
  if (u.coord(0) != 1)
    throw std::invalid_argument("log requires an element of 1 + maximal ideal");
  const auto& algebra = *u.algebra();
  const AlgebraElement x = u - algebra.one();
  AlgebraElement acc = algebra.zero();
  AlgebraElement pow = algebra.one();
  for (std::uint32_t k = 1; k <= algebra.socle_degree(); ++k) {
    pow = pow * x;
    const Rational coeff = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    acc = acc + pow * coeff;
  }
  return acc;
}

Polynomial to_polynomial(const AlgebraElement& a) {
  const auto& algebra = *a.algebra();
  Polynomial f(algebra.variables().size());
  for (std::size_t i = 0; i < algebra.dimension(); ++i)
    f.add_term(algebra.basis_labels()[i], a.coord(i));
  return f;
}

std::string to_string(const AlgebraElement& a) {
  return to_string(to_polynomial(a), a.algebra()->variables());
}

SymbolicElement symbolic_product(const LocalAlgebra& algebra, const SymbolicElement& a,
                                 const SymbolicElement& b) {
  const std::size_t d = algebra.dimension();
  if (a.size() != d || b.size() != d)
    throw std::invalid_argument("symbolic element size mismatch");
  const std::size_t nvars = a.empty() ? 0 : a.front().arity();
  SymbolicElement out(d, Polynomial(nvars));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Polynomial pij = a[i] * b[j];
      const RatVec& prod = algebra.product_coords(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (prod[k] != 0) out[k] += pij * prod[k];
    }
  }
  return out;
}

Polynomial apply_functional(const RatVec& omega, const SymbolicElement& a) {
  if (omega.size() != a.size()) throw std::invalid_argument("functional size mismatch");
  const std::size_t nvars = a.empty() ? 0 : a.front().arity();
  Polynomial out(nvars);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (omega[i] != 0) out += a[i] * omega[i];
  return out;
}

}  // namespace ag
