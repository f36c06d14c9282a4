#pragma once

#include <vector>

#include "dgli/element.hpp"
#include "dgli/linalg.hpp"
#include "dgli/vtable.hpp"

namespace dgli {

// Degree-homogeneous derivation of the tensor algebra, determined by its
// values on generators and extended by the graded Leibniz rule. Each value
// must be homogeneous of (generator degree + derivation degree); all values
// share one truncation.
class Derivation {
 public:
  Derivation(const GradedAlphabet& alphabet, int degree,
             std::vector<Element> generator_values);

  const GradedAlphabet& alphabet() const { return *alphabet_; }
  int degree() const { return degree_; }
  int truncation() const { return truncation_; }
  const Element& value(std::size_t generator_index) const {
    return values_.at(generator_index);
  }

 private:
  const GradedAlphabet* alphabet_;
  int degree_;
  int truncation_;
  std::vector<Element> values_;
};

// Leibniz extension: D(g1...gm) = sum_i (-1)^{|D| deg(g1...g_{i-1})}
// g1...g_{i-1} D(g_i) g_{i+1}...gm, clipped at u's truncation.
Element derive(const Derivation& d, const Element& u);

// outer(inner(u)); a composition of derivations is not itself a derivation.
Element compose(const Derivation& outer, const Derivation& inner,
                const Element& u);

// [D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1, again a derivation.
Derivation derivation_bracket(const Derivation& d1, const Derivation& d2);

// theta(n): x -> ad_x^n(beta), beta -> 0, on the xb alphabet; needs
// truncation >= n + 1 to store its own value.
Derivation theta(unsigned n, int truncation);

// theta(p) . theta(q) applied to x lands in span{mu(p+q-1, k, beta)}; its
// coordinates there are compared against the closed formula
//   p >= q: c_k = sum_{i=0}^{q-1} v(p-i, k-i)
//   p <  q: c_k = sum_{i=0}^{q-p-1} v(q-p-1-i, k-p)
//              + sum_{i=1}^{p} v(i, k-p+i).
// The tensor computation is the authority; a mismatch is reported, not fixed.
struct ThetaCompositionReport {
  bool span_ok = false;
  bool formula_ok = false;
  std::vector<Rational> computed;
  std::vector<Rational> predicted;
};
ThetaCompositionReport theta_composition_report(const VTable& v, unsigned p,
                                                unsigned q, int truncation);
bool theta_composition_check(const VTable& v, unsigned p, unsigned q,
                             int truncation);

}  // namespace dgli
