#pragma once

#include <string>
#include <vector>

#include "dgli/bernoulli.hpp"
#include "dgli/derivation.hpp"
#include "dgli/mu_basis.hpp"

namespace dgli {

struct StepCertificate {
  unsigned step = 0;
  bool cycle_was_zero = false;
  Rational eta;
  bool proportionality_ok = false;
};

struct ModelCoefficients {
  std::vector<Rational> lambdas;
  std::vector<StepCertificate> certificates;
  int truncation = 0;
};

// Weight-0 differential of the one-generator presentation:
// x -> beta, beta -> 0.
Derivation d0_xb(int truncation);

// Differential pieces of the endpoint presentation, by weight:
// weight 0 sends x to b - a, weight 1 is the quadratic piece fixed by
// flatness on the endpoints, weight n >= 2 sends x to
// (coefficient / n!) ad_x^n(b - a). Endpoints die under every piece except
// the quadratic one.
Derivation d0_abx(int truncation);
Derivation d1_abx(int truncation);
Derivation dn_abx(unsigned n, const Rational& coefficient, int truncation);

// Presentation change: the embedding keeps x and sends beta to b - a; the
// retraction keeps x and folds a, b onto -beta/2, beta/2. The retraction is
// a left inverse of the embedding.
Element xb_to_abx(const Element& e, int truncation);
Element abx_to_xb(const Element& e, int truncation);

// Obstruction cycle killed at the given step (>= 2), from the coefficients
// of lower index. Steps >= 3 only mix weights 2 <= i, j (mixed terms with
// the quadratic piece cancel pairwise); the quadratic step itself has no
// such pair, so its cycle is computed in the endpoint presentation and
// pulled back, with the round trip checked.
Element inductive_cycle(const std::vector<Rational>& lambdas, unsigned step,
                        int truncation);

// Degree-by-degree construction: seeds 1, -1/2, then at each step divides
// the obstruction cycle by the boundary d0(ad_x^step beta) and records a
// certificate. Cycles at odd steps must vanish. Needs truncation >=
// max_index + 2.
ModelCoefficients inductive_build(unsigned max_index, int truncation);

bool coefficients_match_bernoulli(const ModelCoefficients& built,
                                  const BernoulliTable& table);

// The embedded image of the one-step cycle agrees with the full obstruction
// sum_{i+j=step, i,j>=1} of the endpoint presentation.
bool cross_presentation_consistent(const std::vector<Rational>& lambdas,
                                   unsigned step, int truncation);

// Endpoint-presentation model with an explicit coefficient list: the
// weight-n piece on x is (coefficients[n] / n!) ad_x^n(b - a) plus the fixed
// ad_x(b) summand, and both endpoints carry their quadratic image.
class IntervalModel {
 public:
  static IntervalModel geometric(const BernoulliTable& table,
                                 unsigned max_order, int truncation);
  static IntervalModel with_coefficients(std::vector<Rational> coefficients,
                                         int truncation);

  const Derivation& differential() const { return differential_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  unsigned max_order() const {
    return static_cast<unsigned>(coefficients_.size()) - 1;
  }
  int truncation() const { return truncation_; }

 private:
  IntervalModel(std::vector<Rational> coefficients, int truncation);

  std::vector<Rational> coefficients_;
  int truncation_;
  Derivation differential_;
};

// d^2 = 0 up to the reliable word length: exactly zero on both endpoints,
// and zero on x in every word length 2 .. max_order + 1. Longer components
// only reflect the truncated coefficient list and are not inspected.
struct DSquaredReport {
  bool ok = true;
  std::string generator;    // offending generator when not ok
  int failing_length = -1;  // offending word length when not ok
  std::string residue_json; // offending component when not ok
};
DSquaredReport d_squared_report(const IntervalModel& model);
bool d_squared_holds(const IntervalModel& model);

// (d1 dn + dn d1)(x) = 0 in the endpoint presentation.
bool d1_anticommute_holds(unsigned n, int truncation);

// On embedded elements the quadratic piece is -(1/2) ad_{a+b}.
bool d1_restriction_holds(const Element& xb_sample, int truncation);

// mu-coordinate k of (d0 dn + sum_{i+j=n, i,j>=2} di dj)(x) with Bernoulli
// weights, computed in the tensor algebra; flatness makes it vanish. This is
// the operator-level counterpart of bernoulli_v_relation_holds.
Rational operator_projection_coordinate(const BernoulliTable& table,
                                        unsigned n, unsigned k,
                                        int truncation);
bool operator_projection_zero(const BernoulliTable& table, unsigned n,
                              unsigned k, int truncation);

std::string model_json(const ModelCoefficients& model);
std::string model_json(const IntervalModel& model);

}  // namespace dgli
