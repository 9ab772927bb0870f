#pragma once

// Closed forms for generators a, a+d, ..., a+(k-1)d. None of these build the
// Apery table; they work from (a, d, k, q, r) alone.

#include "sylvsum/apery.hpp"
#include "sylvsum/exact.hpp"
#include "sylvsum/method.hpp"
#include "sylvsum/numberfield.hpp"
#include "sylvsum/sparse_poly.hpp"

#include <cstdint>

namespace sylvsum {

/// floor((a-2)/(k-1)) a + (a-1) d.
std::int64_t frobenius_ap(const ArithProgression& ap);

/// ((a-1)(q+d) + r(q+1)) / 2.
BigInt genus_ap(const ArithProgression& ap);

/// Triple Bernoulli sum over (kappa, l, j) plus the B_{mu+1} tail.
BigInt power_sum_ap(const ArithProgression& ap, unsigned mu);

/// sum_i x^(m_i) rebuilt from geometric blocks:
///   1 + x^(a+d) G_{k-1}(x^d) G_q(x^{a_k}) + x^(q a_k + a + d) G_r(x^d),
/// G_n(y) = 1 + y + ... + y^(n-1). Equals apery_polynomial(apery_arith(ap)).
SparsePoly residue_polynomial(const ArithProgression& ap);

/// sum_{i=0}^{a-1} lambda^(m_i) m_i^nu as sum_h S(nu,h) lambda^h P^(h)(lambda)
/// with P = residue_polynomial(ap). Valid for every lambda; the closed form
/// path only calls it when lambda^a != 1 and lambda^d != 1.
RingElement bracket_moment(const ArithProgression& ap, unsigned nu, const RingElement& lambda);

/// sum_{i=0}^{a-1} lambda^(m_i) m_i^nu for lambda^d = 1 via row-wise Bernoulli
/// sums. The m_0 term contributes 1 when nu = 0. Throws wrong_branch unless
/// lambda^d = 1.
RingElement d_unity_moment(const ArithProgression& ap, unsigned nu, const RingElement& lambda);

/// lambda^(j d) j^l, the per-entry weight along the progression.
RingElement progression_term(std::int64_t j, unsigned l, std::int64_t d, const RingElement& lambda);

/// The same quantity as sum_h S(l,h) x^h (d/dx)^h x^j at x = lambda^d.
RingElement progression_term_stirling(std::int64_t j, unsigned l, std::int64_t d,
                                      const RingElement& lambda);

/// sum_{i=1}^{a-1} lambda^(m_i) m_i^nu for lambda^a = 1 built from
/// progression_term. Throws wrong_branch unless lambda^a = 1.
RingElement a_unity_moment(const ArithProgression& ap, unsigned nu, const RingElement& lambda);

enum class ApBranch { generic, d_unity, a_unity };

/// lambda^a = lambda^d = 1 forces lambda = 1 since gcd(a,d) = 1, so exactly one
/// branch applies to any admissible weight. Throws std::invalid_argument for
/// lambda in {0, 1}.
ApBranch classify(const ArithProgression& ap, const RingElement& lambda);

/// Weighted power sum dispatched over the three weight regimes. Rejects
/// lambda = 1 (use power_sum_ap).
Tagged<RingElement> weighted_sum_ap(const ArithProgression& ap, unsigned mu, const RingElement& lambda);

} // namespace sylvsum
