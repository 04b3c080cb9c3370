#include "ag/polynomial.hpp"

#include <stdexcept>

#include "ag/linalg.hpp"

namespace ag {

namespace {

void require_same_arity(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
}

}  // namespace

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial f(arity);
  f.add_term(Monomial(arity), c);
  return f;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  Polynomial f(arity);
  f.add_term(Monomial::variable(arity, index), 1);
  return f;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial f(m.arity());
  f.add_term(m, c);
  return f;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(arity_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) throw std::invalid_argument("arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial f(arity_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial f = *this;
  for (const auto& [m, c] : other.terms_) f.add_term(m, c);
  return f;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial f = *this;
  for (const auto& [m, c] : other.terms_) f.add_term(m, -c);
  return f;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial f(arity_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) f.add_term(ma * mb, ca * cb);
  return f;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial f(arity_);
  if (scalar == 0) return f;
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, c * scalar);
  return f;
}

Polynomial truncate(const Polynomial& f, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  Polynomial g(f.arity());
  for (const auto& [m, c] : f.terms())
    if (static_cast<int>(m.degree()) <= max_degree) g.add_term(m, c);
  return g;
}

Polynomial homogeneous_component(const Polynomial& f, std::uint32_t m) {
  Polynomial g(f.arity());
  for (const auto& [mono, c] : f.terms())
    if (mono.degree() == m) g.add_term(mono, c);
  return g;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.arity()) throw std::invalid_argument("variable index out of range");
  Polynomial g(f.arity());
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = m.exponent(var);
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[var] = e - 1;
    g.add_term(Monomial(exps), c * e);
  }
  return g;
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  if (f.arity() == 0) throw std::invalid_argument("jacobian needs at least one variable");
  std::vector<Polynomial> out;
  out.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

Polynomial apolarity_apply(const Polynomial& f, const Polynomial& g) {
  require_same_arity(f, g);
  Polynomial out(f.arity());
  for (const auto& [alpha, cf] : f.terms()) {
    for (const auto& [beta, cg] : g.terms()) {
      if (!beta.divisible_by(alpha)) continue;
      // falling factorial per variable: beta_i!/(beta_i-alpha_i)!
      Rational factor = cf * cg;
      for (std::size_t i = 0; i < f.arity(); ++i) {
        for (std::uint32_t k = 0; k < alpha.exponent(i); ++k)
          factor *= Rational(beta.exponent(i) - k);
      }
      out.add_term(beta.divided_by(alpha), factor);
    }
  }
  return out;
}

Rational apolarity_pairing(const Polynomial& f, const Polynomial& g) {
  return apolarity_apply(f, g).constant_term();
}

namespace {

// powers[i][k] caches images[i]^k, optionally truncated
class PowerCache {
 public:
  PowerCache(const std::vector<Polynomial>& images, int max_degree)
      : images_(images), max_degree_(max_degree) {
    powers_.resize(images.size());
  }

  const Polynomial& get(std::size_t i, std::uint32_t k) {
    auto& column = powers_[i];
    if (column.empty()) {
      const std::size_t result_arity = images_[i].arity();
      column.push_back(Polynomial::constant(result_arity, 1));
    }
    while (column.size() <= k) {
      Polynomial next = column.back() * images_[i];
      if (max_degree_ >= 0) next = truncate(next, max_degree_);
      column.push_back(std::move(next));
    }
    return column[k];
  }

 private:
  const std::vector<Polynomial>& images_;
  int max_degree_;
  std::vector<std::vector<Polynomial>> powers_;
};

Polynomial substitute_impl(const Polynomial& f, const std::vector<Polynomial>& images,
                           int max_degree) {
  if (images.size() != f.arity())
    throw std::invalid_argument("substitution image count must match arity");
  std::size_t result_arity = images.empty() ? 0 : images.front().arity();
  for (const auto& im : images)
    if (im.arity() != result_arity)
      throw std::invalid_argument("substitution images must share one arity");

  PowerCache cache(images, max_degree);
  Polynomial out(result_arity);
  for (const auto& [m, c] : f.terms()) {
    if (max_degree >= 0 && static_cast<int>(m.degree()) > max_degree) continue;
    Polynomial prod = Polynomial::constant(result_arity, c);
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (m.exponent(i) == 0) continue;
      prod = prod * cache.get(i, m.exponent(i));
      if (max_degree >= 0) prod = truncate(prod, max_degree);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  return substitute_impl(f, images, -1);
}

Polynomial substitute_truncated(const Polynomial& f,
                                const std::vector<Polynomial>& images,
                                std::uint32_t truncation_degree) {
  if (truncation_degree < 1) throw std::invalid_argument("truncation degree must be >= 1");
  if (images.size() != f.arity())
    throw std::invalid_argument("substitution image count must match arity");
  for (const auto& im : images)
    if (im.constant_term() != 0)
      throw std::invalid_argument("substitution component has nonzero constant term");
  // linear parts as rows; independence means full row rank
  const std::size_t result_arity = images.empty() ? 0 : images.front().arity();
  RatMatrix linear(images.size(), result_arity);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < result_arity; ++j)
      linear.at(i, j) = images[i].coefficient(Monomial::variable(result_arity, j));
  if (linear.rank() != images.size())
    throw std::invalid_argument("substitution components have dependent linear parts");
  // skipping source terms of degree > nu is exact: images vanish at the
  // origin, so their image has order >= the source degree
  return substitute_impl(f, images, static_cast<int>(truncation_degree));
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
  if (point.size() != f.arity()) throw std::invalid_argument("point size mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < f.arity(); ++i)
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

Polynomial embed(const Polynomial& f, std::size_t new_arity) {
  if (new_arity < f.arity()) throw std::invalid_argument("embed cannot drop variables");
  Polynomial g(new_arity);
  for (const auto& [m, c] : f.terms()) {
    auto exps = m.exponents();
    exps.resize(new_arity, 0);
    g.add_term(Monomial(exps), c);
  }
  return g;
}

Polynomial instantiate_last_variable(const Polynomial& f, const Rational& value) {
  if (f.arity() == 0) throw std::invalid_argument("no variable to instantiate");
  const std::size_t last = f.arity() - 1;
  Polynomial g(last);
  for (const auto& [m, c] : f.terms()) {
    Rational coeff = c;
    for (std::uint32_t k = 0; k < m.exponent(last); ++k) coeff *= value;
    auto exps = m.exponents();
    exps.pop_back();
    g.add_term(Monomial(exps), coeff);
  }
  return g;
}

}  // namespace ag
