#pragma once

// Frobenius number, genus, power sums and weighted power sums of the gap set,
// computed from the minimal residue system m_0..m_{a1-1} of any generator set.

#include "sylvsum/apery.hpp"
#include "sylvsum/exact.hpp"
#include "sylvsum/method.hpp"
#include "sylvsum/numberfield.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sylvsum {

/// max m_i - a1.
std::int64_t frobenius(const AperyTable& t);

/// Number of gaps: (1/a1) sum m_i - (a1-1)/2.
BigInt genus(const AperyTable& t);

/// Sum of n^mu over the gaps, from Bernoulli numbers and the power sums of the
/// m_i. mu = 0 gives the genus. Throws consistency_error if the rational
/// evaluation is not an integer.
BigInt power_sum(const AperyTable& t, unsigned mu);

/// sum_{i=0}^{a1-1} m_i^nu lambda^(m_i), with 0^0 = 1 for the m_0 term.
RingElement weighted_moment_direct(const AperyTable& t, unsigned nu, const RingElement& lambda);

/// Same sum as sum_h S(nu,h) lambda^h P^(h)(lambda), P = apery_polynomial(t).
RingElement weighted_moment_stirling(const AperyTable& t, unsigned nu, const RingElement& lambda);

/// Evaluates both routes and throws consistency_error if they differ.
RingElement weighted_moment(const AperyTable& t, unsigned nu, const RingElement& lambda);

/// Assembles the weighted sum for lambda^modulus != 1 from the moments
/// moments[nu] = sum_{i=0}^{modulus-1} m_i^nu lambda^(m_i), nu = 0..mu. The
/// nu = mu term uses the full residue sum including m_0, so no 0^0 convention
/// is needed anywhere else. Shared by the Apery engine and the
/// arithmetic-progression closed forms, which differ only in their moments.
RingElement weighted_sum_from_moments(std::int64_t modulus, unsigned mu, const RingElement& lambda,
                                      std::span<const RingElement> moments);

/// Weighted power sum for lambda^a1 != 1. Throws wrong_branch when lambda^a1 == 1
/// and std::invalid_argument for lambda in {0, 1} or mu == 0.
RingElement weighted_sum_general(const AperyTable& t, unsigned mu, const RingElement& lambda);

/// The lambda^a1 = 1 assembly from moments[p] = sum_{i=1}^{a1-1} m_i^p
/// lambda^(m_i) for p = 1..mu+1 (index 0 unused), with the Eulerian tail.
RingElement unity_sum_from_moments(std::int64_t modulus, unsigned mu, const RingElement& lambda,
                                   std::span<const RingElement> moments);

/// Weighted power sum for lambda^a1 = 1, evaluated in two forms (the
/// residue-difference form pairing m_i with i = m_i mod a1, and the
/// Eulerian-tail form) that must agree. Both forms are derived from the
/// residue structure alone, so any generator set is accepted; the published
/// statement covers arithmetic progressions and the wider use rests on the
/// oracle property tests. Throws wrong_branch when lambda^a1 != 1.
RingElement weighted_sum_unity_a(const AperyTable& t, unsigned mu, const RingElement& lambda);

/// The residue-difference form on its own.
RingElement weighted_sum_unity_a_residue_form(const AperyTable& t, unsigned mu,
                                              const RingElement& lambda);
/// The Eulerian-tail form on its own.
RingElement weighted_sum_unity_a_tail_form(const AperyTable& t, unsigned mu,
                                           const RingElement& lambda);

/// Routes to the general or the lambda^a1 = 1 formula.
Tagged<RingElement> weighted_sum(const AperyTable& t, unsigned mu, const RingElement& lambda);
Tagged<RingElement> weighted_sum(const Generators& g, unsigned mu, const RingElement& lambda);

/// Everything the Apery engine knows about one generator set.
struct GapSummary {
    std::int64_t frobenius;
    BigInt genus;
    std::map<unsigned, Tagged<BigInt>> power_sums;
    /// Keyed by (mu, weight label).
    std::map<std::pair<unsigned, std::string>, Tagged<RingElement>> weighted_sums;
};

struct LabeledWeight {
    std::string label;
    RingElement value;
};

GapSummary summarize(const AperyTable& t, std::span<const unsigned> mus,
                     std::span<const LabeledWeight> weights);

} // namespace sylvsum
