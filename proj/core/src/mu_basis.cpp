#include "dgli/mu_basis.hpp"

#include <stdexcept>

namespace dgli {
namespace {

std::size_t x_index(const Element& e) { return e.alphabet().index_of("x"); }

}  // namespace

Element mu(unsigned n, unsigned k, const Element& gamma) {
  if (2 * k > n) throw std::domain_error("mu needs 0 <= 2k <= n");
  if (!gamma.is_homogeneous_of(-1)) {
    throw std::domain_error("mu needs gamma homogeneous of degree -1");
  }
  if (gamma.truncation() < static_cast<int>(n + 2)) {
    throw std::invalid_argument("mu needs truncation >= n + 2");
  }
  const std::size_t x = x_index(gamma);
  const Element inner = ad_pow(x, k, gamma);
  return ad_pow(x, n - 2 * k, bracket(inner, inner));
}

std::vector<Element> mu_family(unsigned n, const Element& gamma) {
  std::vector<Element> family;
  for (unsigned k = 0; 2 * k <= n; ++k) family.push_back(mu(n, k, gamma));
  return family;
}

bool xb_bidegree_support(const Element& e, std::size_t x_count,
                         std::size_t beta_count) {
  const auto x = static_cast<std::uint8_t>(e.alphabet().index_of("x"));
  const auto beta = static_cast<std::uint8_t>(e.alphabet().index_of("β"));
  for (const auto& [word, c] : e.terms()) {
    if (letter_count(word, x) != x_count ||
        letter_count(word, beta) != beta_count) {
      return false;
    }
  }
  return true;
}

bool mu_independent(unsigned n, int truncation) {
  const auto& alphabet = GradedAlphabet::xb();
  const Element beta =
      Element::generator(alphabet, alphabet.index_of("β"), truncation);
  return rank(mu_family(n, beta)) == n / 2 + 1;
}

AdjointCompositionReport adjoint_composition_report(const VTable& v,
                                                    unsigned p, unsigned q,
                                                    const Element& gamma) {
  const unsigned diff = p > q ? p - q : q - p;
  const unsigned low = p > q ? q : p;
  if (v.max_n() < static_cast<int>(diff)) {
    throw std::out_of_range("v table too small for adjoint composition");
  }
  AdjointCompositionReport report{false,
                                  Element(gamma.alphabet(), gamma.truncation()),
                                  Element(gamma.alphabet(), gamma.truncation())};
  const std::size_t x = x_index(gamma);
  report.lhs = bracket(ad_pow(x, p, gamma), ad_pow(x, q, gamma));
  for (unsigned k = 0; 2 * k <= diff; ++k) {
    report.rhs += v.at(static_cast<int>(diff), static_cast<int>(k)) *
                  mu(p + q, low + k, gamma);
  }
  report.ok = report.lhs == report.rhs;
  return report;
}

bool adjoint_composition_holds(const VTable& v, unsigned p, unsigned q,
                               const Element& gamma) {
  return adjoint_composition_report(v, p, q, gamma).ok;
}

}  // namespace dgli
