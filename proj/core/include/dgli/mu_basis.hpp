#pragma once

#include <vector>

#include "dgli/element.hpp"
#include "dgli/linalg.hpp"
#include "dgli/vtable.hpp"

namespace dgli {

// mu(n, k, gamma) = ad_x^{n-2k}([ad_x^k gamma, ad_x^k gamma]) for an odd
// element gamma (homogeneous of degree -1). Requires 0 <= 2k <= n and enough
// truncation room; violations throw.
Element mu(unsigned n, unsigned k, const Element& gamma);

// The family mu(n, k, gamma) for k = 0 .. n/2.
std::vector<Element> mu_family(unsigned n, const Element& gamma);

// True when every word of e uses exactly x_count letters x and beta_count
// letters beta (an exact support statement over the two-letter alphabet).
bool xb_bidegree_support(const Element& e, std::size_t x_count,
                         std::size_t beta_count);

// The mu(n, k, beta) are linearly independent: rank n/2 + 1.
bool mu_independent(unsigned n, int truncation);

// [ad_x^p gamma, ad_x^q gamma] =
//   sum_k v(|p-q|, k) mu(p+q, min(p,q)+k, gamma).
struct AdjointCompositionReport {
  bool ok = false;
  Element lhs;
  Element rhs;
};
AdjointCompositionReport adjoint_composition_report(const VTable& v, unsigned p,
                                                    unsigned q,
                                                    const Element& gamma);
bool adjoint_composition_holds(const VTable& v, unsigned p, unsigned q,
                               const Element& gamma);

}  // namespace dgli
