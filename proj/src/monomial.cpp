#include "ag/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ag {

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  Monomial m(arity);
  m.exps_[index] = power;
  return m;
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("arity mismatch");
  Monomial p(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    p.exps_[i] = exps_[i] + other.exps_[i];
  return p;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("arity mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < other.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!divisible_by(other)) throw std::invalid_argument("not divisible");
  Monomial q(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    q.exps_[i] = exps_[i] - other.exps_[i];
  return q;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  const std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void enumerate(std::size_t arity, std::uint32_t degree, std::size_t pos,
               std::vector<std::uint32_t>& current, std::vector<Monomial>& out) {
  if (pos + 1 == arity) {
    current[pos] = degree;
    out.emplace_back(current);
    return;
  }
  for (std::uint32_t e = 0; e <= degree; ++e) {
    current[pos] = e;
    enumerate(arity, degree - e, pos + 1, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> current(arity, 0);
  enumerate(arity, degree, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t arity, std::uint32_t degree) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= degree; ++d) {
    auto block = monomials_of_degree(arity, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace ag
