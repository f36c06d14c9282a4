#include "dgli/models.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace dgli {
namespace {

using ordered_json = nlohmann::ordered_json;

Element gen_elem(const GradedAlphabet& alphabet, const char* name,
                 int truncation) {
  return Element::generator(alphabet, alphabet.index_of(name), truncation);
}

Rational over_factorial(const Rational& c, unsigned n) {
  return c / Rational(factorial(n));
}

// b - a, the odd generator of the embedded one-generator presentation.
Element endpoint_difference(int truncation) {
  const auto& abx = GradedAlphabet::abx();
  return gen_elem(abx, "b", truncation) - gen_elem(abx, "a", truncation);
}

ordered_json coefficients_json(const std::vector<Rational>& coefficients) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    arr.push_back({{"i", i}, {"value", coefficients[i].str()}});
  }
  return arr;
}

ordered_json certificates_json(const std::vector<StepCertificate>& certs) {
  ordered_json arr = ordered_json::array();
  for (const auto& cert : certs) {
    arr.push_back({{"step", cert.step},
                   {"cycle_was_zero", cert.cycle_was_zero},
                   {"eta", cert.eta.str()},
                   {"proportionality_ok", cert.proportionality_ok}});
  }
  return arr;
}

}  // namespace

Derivation d0_xb(int truncation) {
  const auto& xb = GradedAlphabet::xb();
  std::vector<Element> values(2, Element(xb, truncation));
  values[xb.index_of("x")] = gen_elem(xb, "β", truncation);
  return Derivation(xb, -1, std::move(values));
}

Derivation d0_abx(int truncation) {
  const auto& abx = GradedAlphabet::abx();
  std::vector<Element> values(3, Element(abx, truncation));
  values[abx.index_of("x")] = endpoint_difference(truncation);
  return Derivation(abx, -1, std::move(values));
}

Derivation d1_abx(int truncation) {
  const auto& abx = GradedAlphabet::abx();
  const Element a = gen_elem(abx, "a", truncation);
  const Element b = gen_elem(abx, "b", truncation);
  std::vector<Element> values(3, Element(abx, truncation));
  const Rational minus_half(-1, 2);
  values[abx.index_of("a")] = minus_half * bracket(a, a);
  values[abx.index_of("b")] = minus_half * bracket(b, b);
  values[abx.index_of("x")] =
      Rational(1, 2) * bracket(gen_elem(abx, "x", truncation), a + b);
  return Derivation(abx, -1, std::move(values));
}

Derivation dn_abx(unsigned n, const Rational& coefficient, int truncation) {
  if (n < 2) throw std::domain_error("dn_abx covers weights n >= 2");
  const auto& abx = GradedAlphabet::abx();
  std::vector<Element> values(3, Element(abx, truncation));
  values[abx.index_of("x")] =
      over_factorial(coefficient, n) *
      ad_pow(abx.index_of("x"), n, endpoint_difference(truncation));
  return Derivation(abx, -1, std::move(values));
}

Element xb_to_abx(const Element& e, int truncation) {
  const auto& xb = GradedAlphabet::xb();
  const auto& abx = GradedAlphabet::abx();
  if (!(e.alphabet() == xb)) {
    throw std::invalid_argument("embedding expects the xb alphabet");
  }
  std::vector<Element> images(2, Element(abx, truncation));
  images[xb.index_of("x")] = gen_elem(abx, "x", truncation);
  images[xb.index_of("β")] = endpoint_difference(truncation);
  return substitute(e, abx, truncation, images);
}

Element abx_to_xb(const Element& e, int truncation) {
  const auto& xb = GradedAlphabet::xb();
  const auto& abx = GradedAlphabet::abx();
  if (!(e.alphabet() == abx)) {
    throw std::invalid_argument("retraction expects the abx alphabet");
  }
  const Element beta = gen_elem(xb, "β", truncation);
  std::vector<Element> images(3, Element(xb, truncation));
  images[abx.index_of("a")] = Rational(-1, 2) * beta;
  images[abx.index_of("b")] = Rational(1, 2) * beta;
  images[abx.index_of("x")] = gen_elem(xb, "x", truncation);
  return substitute(e, xb, truncation, images);
}

Element inductive_cycle(const std::vector<Rational>& lambdas, unsigned step,
                        int truncation) {
  if (step < 2) throw std::domain_error("cycles start at step 2");
  if (lambdas.size() < step) {
    throw std::invalid_argument("cycle needs all coefficients below the step");
  }
  const auto& xb = GradedAlphabet::xb();
  if (step == 2) {
    const Derivation d1 = d1_abx(truncation);
    const Element in_abx =
        compose(d1, d1, gen_elem(GradedAlphabet::abx(), "x", truncation));
    const Element pulled = abx_to_xb(in_abx, truncation);
    if (xb_to_abx(pulled, truncation) != in_abx) {
      throw std::logic_error("quadratic obstruction left the embedded image");
    }
    return pulled;
  }
  Element cycle(xb, truncation);
  const Element x = gen_elem(xb, "x", truncation);
  for (unsigned i = 2; i + 2 <= step; ++i) {
    const unsigned j = step - i;
    const Rational weight =
        over_factorial(lambdas[i], i) * over_factorial(lambdas[j], j);
    if (weight.is_zero()) continue;
    cycle += weight * compose(theta(i, truncation), theta(j, truncation), x);
  }
  return cycle;
}

ModelCoefficients inductive_build(unsigned max_index, int truncation) {
  if (max_index < 2) throw std::domain_error("build needs max_index >= 2");
  if (truncation < static_cast<int>(max_index) + 2) {
    throw std::invalid_argument("build needs truncation >= max_index + 2");
  }
  ModelCoefficients model;
  model.truncation = truncation;
  model.lambdas = {Rational(1), Rational(-1, 2)};

  const Derivation d0 = d0_xb(truncation);
  const auto& xb = GradedAlphabet::xb();
  const Element beta = gen_elem(xb, "β", truncation);
  const auto x_index = xb.index_of("x");

  for (unsigned step = 2; step <= max_index; ++step) {
    const Element cycle = inductive_cycle(model.lambdas, step, truncation);
    const Element boundary = derive(d0, ad_pow(x_index, step, beta));
    const auto eta = proportionality(cycle, boundary);

    StepCertificate cert;
    cert.step = step;
    cert.cycle_was_zero = cycle.is_zero();
    cert.proportionality_ok = eta.has_value();
    if (!eta) {
      model.certificates.push_back(cert);
      throw std::runtime_error("obstruction at step " + std::to_string(step) +
                               " is not a boundary multiple");
    }
    cert.eta = *eta;
    if (step % 2 == 1 && !cert.cycle_was_zero) {
      throw std::runtime_error("odd step " + std::to_string(step) +
                               " has a nonzero obstruction");
    }
    model.lambdas.push_back(-Rational(factorial(step)) * cert.eta);
    model.certificates.push_back(cert);
  }
  return model;
}

bool coefficients_match_bernoulli(const ModelCoefficients& built,
                                  const BernoulliTable& table) {
  if (built.lambdas.size() > table.max_index() + 1) return false;
  for (std::size_t i = 0; i < built.lambdas.size(); ++i) {
    if (built.lambdas[i] != table.at(i)) return false;
  }
  return true;
}

bool cross_presentation_consistent(const std::vector<Rational>& lambdas,
                                   unsigned step, int truncation) {
  const auto& abx = GradedAlphabet::abx();
  const Element x = gen_elem(abx, "x", truncation);

  auto piece = [&](unsigned i) {
    return i == 1 ? d1_abx(truncation) : dn_abx(i, lambdas.at(i), truncation);
  };

  Element full(abx, truncation);
  for (unsigned i = 1; i + 1 <= step; ++i) {
    full += compose(piece(i), piece(step - i), x);
  }
  return xb_to_abx(inductive_cycle(lambdas, step, truncation), truncation) ==
         full;
}

IntervalModel::IntervalModel(std::vector<Rational> coefficients,
                             int truncation)
    : coefficients_(std::move(coefficients)),
      truncation_(truncation),
      differential_([&] {
        if (coefficients_.empty()) {
          throw std::invalid_argument("model needs at least one coefficient");
        }
        const auto& abx = GradedAlphabet::abx();
        const Element a = gen_elem(abx, "a", truncation_);
        const Element b = gen_elem(abx, "b", truncation_);
        const auto x_index = abx.index_of("x");
        const Element diff = endpoint_difference(truncation_);

        Element on_x = bracket(Element::generator(abx, x_index, truncation_), b);
        for (std::size_t i = 0; i < coefficients_.size(); ++i) {
          on_x += over_factorial(coefficients_[i], static_cast<unsigned>(i)) *
                  ad_pow(x_index, static_cast<unsigned>(i), diff);
        }
        const Rational minus_half(-1, 2);
        std::vector<Element> values(3, Element(abx, truncation_));
        values[abx.index_of("a")] = minus_half * bracket(a, a);
        values[abx.index_of("b")] = minus_half * bracket(b, b);
        values[x_index] = on_x;
        return Derivation(abx, -1, std::move(values));
      }()) {}

IntervalModel IntervalModel::geometric(const BernoulliTable& table,
                                       unsigned max_order, int truncation) {
  if (truncation < static_cast<int>(max_order) + 2) {
    throw std::invalid_argument("geometric model needs truncation >= order + 2");
  }
  std::vector<Rational> coefficients;
  for (unsigned i = 0; i <= max_order; ++i) coefficients.push_back(table.at(i));
  return IntervalModel(std::move(coefficients), truncation);
}

IntervalModel IntervalModel::with_coefficients(
    std::vector<Rational> coefficients, int truncation) {
  if (truncation < static_cast<int>(coefficients.size()) + 1) {
    throw std::invalid_argument("model needs truncation >= order + 2");
  }
  return IntervalModel(std::move(coefficients), truncation);
}

DSquaredReport d_squared_report(const IntervalModel& model) {
  const auto& d = model.differential();
  const auto& abx = GradedAlphabet::abx();
  DSquaredReport report;

  for (const char* name : {"a", "b"}) {
    const Element square =
        derive(d, d.value(abx.index_of(name)));
    if (!square.is_zero()) {
      report.ok = false;
      report.generator = name;
      report.failing_length =
          static_cast<int>(square.terms().begin()->first.size());
      report.residue_json = element_json(square);
      return report;
    }
  }

  const Element square_x = derive(d, d.value(abx.index_of("x")));
  for (unsigned len = 2; len <= model.max_order() + 1; ++len) {
    const Element component = square_x.component_of_length(len);
    if (!component.is_zero()) {
      report.ok = false;
      report.generator = "x";
      report.failing_length = static_cast<int>(len);
      report.residue_json = element_json(component);
      return report;
    }
  }
  return report;
}

bool d_squared_holds(const IntervalModel& model) {
  return d_squared_report(model).ok;
}

bool d1_anticommute_holds(unsigned n, int truncation) {
  if (n < 2) throw std::domain_error("anticommute check covers weights n >= 2");
  const auto& abx = GradedAlphabet::abx();
  const Element x = gen_elem(abx, "x", truncation);
  const Derivation d1 = d1_abx(truncation);
  const Derivation dn = dn_abx(n, Rational(1), truncation);
  return (compose(d1, dn, x) + compose(dn, d1, x)).is_zero();
}

bool d1_restriction_holds(const Element& xb_sample, int truncation) {
  const auto& abx = GradedAlphabet::abx();
  const Element embedded = xb_to_abx(xb_sample, truncation);
  const Element lhs = derive(d1_abx(truncation), embedded);
  const Element rhs =
      Rational(-1, 2) *
      bracket(gen_elem(abx, "a", truncation) + gen_elem(abx, "b", truncation),
              embedded);
  return lhs == rhs;
}

Rational operator_projection_coordinate(const BernoulliTable& table,
                                        unsigned n, unsigned k,
                                        int truncation) {
  if (n <= 2 || n % 2 != 0) {
    throw std::domain_error("projection defined for even n > 2");
  }
  if (2 * k > n - 1) throw std::domain_error("projection needs 2k <= n - 1");
  if (truncation < static_cast<int>(n) + 1) {
    throw std::invalid_argument("projection needs truncation >= n + 1");
  }
  const auto& xb = GradedAlphabet::xb();
  const Element x = gen_elem(xb, "x", truncation);
  const Element beta = gen_elem(xb, "β", truncation);

  auto weighted_theta = [&](unsigned i) {
    const Derivation t = theta(i, truncation);
    std::vector<Element> values = {
        over_factorial(table.at(i), i) * t.value(xb.index_of("x")),
        Element(xb, truncation)};
    return Derivation(xb, -1, std::move(values));
  };

  Element total = compose(d0_xb(truncation), weighted_theta(n), x);
  for (unsigned i = 2; i + 2 <= n; ++i) {
    total += compose(weighted_theta(i), weighted_theta(n - i), x);
  }

  const auto coords = solve_in_span(mu_family(n - 1, beta), total);
  if (!coords) {
    throw std::logic_error("projection target left the mu span");
  }
  return (*coords)[k];
}

bool operator_projection_zero(const BernoulliTable& table, unsigned n,
                              unsigned k, int truncation) {
  return operator_projection_coordinate(table, n, k, truncation).is_zero();
}

std::string model_json(const ModelCoefficients& model) {
  ordered_json doc;
  doc["alphabet"] = "xb";
  doc["truncation"] = model.truncation;
  doc["coefficients"] = coefficients_json(model.lambdas);
  doc["certificates"] = certificates_json(model.certificates);
  return doc.dump();
}

std::string model_json(const IntervalModel& model) {
  ordered_json doc;
  doc["alphabet"] = "abx";
  doc["truncation"] = model.truncation();
  doc["coefficients"] = coefficients_json(model.coefficients());
  doc["certificates"] = ordered_json::array();
  return doc.dump();
}

}  // namespace dgli
