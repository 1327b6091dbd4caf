#include "sphereflow/sturm.hpp"

#include <stdexcept>

namespace sphereflow {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
  : coeffs_(std::move(coefficients))
{
  trim();
}

void UnivariatePolynomial::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational UnivariatePolynomial::operator()(Rational const &t) const
{
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const
{
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * static_cast<long>(k));
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial remainder(UnivariatePolynomial const &a, UnivariatePolynomial const &b)
{
  if (b.is_zero()) {
    throw std::domain_error("polynomial remainder by zero");
  }
  std::vector<Rational> r = a.coefficients();
  auto const &bc = b.coefficients();
  int const db = b.degree();
  Rational const lead = b.leading();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k] == 0) {
      continue;
    }
    Rational const factor = r[k] / lead;
    for (int j = 0; j <= db; ++j) {
      r[k - db + j] -= factor * bc[j];
    }
  }
  if (static_cast<int>(r.size()) > db) {
    r.resize(db > 0 ? db : 0);
  }
  return UnivariatePolynomial(std::move(r));
}

std::vector<UnivariatePolynomial> sturm_sequence(UnivariatePolynomial const &p)
{
  std::vector<UnivariatePolynomial> seq{p};
  if (p.degree() < 1) {
    return seq;
  }
  seq.push_back(p.derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UnivariatePolynomial r = remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) {
      break;
    }
    std::vector<Rational> neg = r.coefficients();
    for (auto &c : neg) {
      c = -c;
    }
    seq.emplace_back(std::move(neg));
  }
  return seq;
}

int sign_variations_at_infinity(std::vector<UnivariatePolynomial> const &sequence, bool positive)
{
  int variations = 0;
  int last = 0;
  for (auto const &q : sequence) {
    if (q.is_zero()) {
      continue;
    }
    int s = sign(q.leading());
    if (!positive && (q.degree() % 2 == 1)) {
      s = -s;
    }
    if (last != 0 && s != last) {
      ++variations;
    }
    last = s;
  }
  return variations;
}

RealRootCount count_real_roots(UnivariatePolynomial const &p)
{
  if (p.is_zero()) {
    throw std::domain_error("root count of the zero polynomial");
  }
  auto const seq = sturm_sequence(p);
  RealRootCount out;
  out.variations_at_neg_inf = sign_variations_at_infinity(seq, false);
  out.variations_at_pos_inf = sign_variations_at_infinity(seq, true);
  out.roots = out.variations_at_neg_inf - out.variations_at_pos_inf;
  return out;
}

} // namespace sphereflow
