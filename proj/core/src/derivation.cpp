#include "dgli/derivation.hpp"

#include <stdexcept>

#include "dgli/mu_basis.hpp"

namespace dgli {
namespace {

bool odd(int degree) { return (degree & 1) != 0; }

}  // namespace

Derivation::Derivation(const GradedAlphabet& alphabet, int degree,
                       std::vector<Element> generator_values)
    : alphabet_(&alphabet), degree_(degree), values_(std::move(generator_values)) {
  if (values_.size() != alphabet.size()) {
    throw std::invalid_argument("one value per generator required");
  }
  truncation_ = values_.front().truncation();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Element& v = values_[i];
    if (!(v.alphabet() == alphabet) || v.truncation() != truncation_) {
      throw std::invalid_argument("derivation value in wrong algebra");
    }
    if (!v.is_homogeneous_of(alphabet.gen(i).degree + degree)) {
      throw std::invalid_argument(
          "derivation value must be homogeneous of generator degree + "
          "derivation degree");
    }
  }
}

Element derive(const Derivation& d, const Element& u) {
  if (!(d.alphabet() == u.alphabet())) {
    throw std::invalid_argument("derivation and element alphabets differ");
  }
  Element out(u.alphabet(), u.truncation());
  const bool d_odd = odd(d.degree());
  for (const auto& [word, c] : u.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const Element& image = d.value(word[i]);
      if (!image.is_zero()) {
        const bool negate = d_odd && odd(prefix_degree);
        for (const auto& [iw, ic] : image.terms()) {
          if (word.size() - 1 + iw.size() >
              static_cast<std::size_t>(u.truncation())) {
            continue;
          }
          Word w;
          w.reserve(word.size() - 1 + iw.size());
          w.insert(w.end(), word.begin(), word.begin() + static_cast<long>(i));
          w.insert(w.end(), iw.begin(), iw.end());
          w.insert(w.end(), word.begin() + static_cast<long>(i) + 1, word.end());
          out.add_term(std::move(w), negate ? -(c * ic) : c * ic);
        }
      }
      prefix_degree += u.alphabet().gen(word[i]).degree;
    }
  }
  return out;
}

Element compose(const Derivation& outer, const Derivation& inner,
                const Element& u) {
  return derive(outer, derive(inner, u));
}

Derivation derivation_bracket(const Derivation& d1, const Derivation& d2) {
  if (!(d1.alphabet() == d2.alphabet())) {
    throw std::invalid_argument("derivation alphabets differ");
  }
  if (d1.truncation() != d2.truncation()) {
    throw std::invalid_argument("derivation truncations differ");
  }
  const bool both_odd = odd(d1.degree()) && odd(d2.degree());
  std::vector<Element> values;
  for (std::size_t g = 0; g < d1.alphabet().size(); ++g) {
    Element v = derive(d1, d2.value(g));
    Element w = derive(d2, d1.value(g));
    values.push_back(both_odd ? v + w : v - w);
  }
  return Derivation(d1.alphabet(), d1.degree() + d2.degree(),
                    std::move(values));
}

Derivation theta(unsigned n, int truncation) {
  if (truncation < static_cast<int>(n) + 1) {
    throw std::invalid_argument("theta(n) needs truncation >= n + 1");
  }
  const auto& alphabet = GradedAlphabet::xb();
  const auto x = alphabet.index_of("x");
  const auto beta = alphabet.index_of("β");
  std::vector<Element> values(2, Element(alphabet, truncation));
  values[x] = ad_pow(x, n, Element::generator(alphabet, beta, truncation));
  return Derivation(alphabet, -1, std::move(values));
}

ThetaCompositionReport theta_composition_report(const VTable& v, unsigned p,
                                                unsigned q, int truncation) {
  if (q < 1) throw std::domain_error("theta composition needs q >= 1");
  if (truncation < static_cast<int>(p + q) + 1) {
    throw std::invalid_argument("theta composition needs truncation >= p+q+1");
  }
  const unsigned n = p + q - 1;
  if (v.max_n() < static_cast<int>(p > q ? p : q)) {
    throw std::out_of_range("v table too small for theta composition");
  }

  ThetaCompositionReport report;
  const auto& alphabet = GradedAlphabet::xb();
  const Element x_gen =
      Element::generator(alphabet, alphabet.index_of("x"), truncation);
  const Element beta =
      Element::generator(alphabet, alphabet.index_of("β"), truncation);
  const Element composed = compose(theta(p, truncation), theta(q, truncation), x_gen);

  const auto coords = solve_in_span(mu_family(n, beta), composed);
  report.span_ok = coords.has_value();

  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational c;
    if (p >= q) {
      for (unsigned i = 0; i < q; ++i) {
        c += v.at(static_cast<int>(p - i), static_cast<int>(k) - static_cast<int>(i));
      }
    } else {
      for (unsigned i = 0; i <= q - p - 1; ++i) {
        c += v.at(static_cast<int>(q - p - 1 - i),
                  static_cast<int>(k) - static_cast<int>(p));
      }
      for (unsigned i = 1; i <= p; ++i) {
        c += v.at(static_cast<int>(i),
                  static_cast<int>(k) - static_cast<int>(p) + static_cast<int>(i));
      }
    }
    report.predicted.push_back(c);
  }
  if (report.span_ok) {
    report.computed = *coords;
    report.formula_ok = report.computed == report.predicted;
  }
  return report;
}

bool theta_composition_check(const VTable& v, unsigned p, unsigned q,
                             int truncation) {
  const auto report = theta_composition_report(v, p, q, truncation);
  return report.span_ok && report.formula_ok;
}

}  // namespace dgli
