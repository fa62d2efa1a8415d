#pragma once

#include <cstdint>

#include "qcseq/correlation.hpp"
#include "qcseq/number_theory.hpp"
#include "qcseq/sequences.hpp"

namespace qcseq {

/// Branch cases for period-q shifts keyed on k itself.
enum class ComponentCase : std::uint8_t { Zero, PMultNonzero, D0, D1 };

/// Branch cases for period-q shifts keyed on an odd residue of Z_2q.
enum class OddKeyCase : std::uint8_t { PCase, D0, D1 };

enum class CrossDir : std::uint8_t { S1S2, S2S1 };

ComponentCase component_case(std::int64_t k, const PrimePowerParams& params);

/// Case of an odd key taken mod 2q: PCase when p divides it, else its class.
OddKeyCase odd_key_case(std::int64_t key, const PrimePowerParams& params);

/// The odd residue the cross-correlation branch is decided by: 2k-1 for
/// S1S2 and 2k+1 for S2S1, both mod 2q. (The S2S1 table is printed with key
/// 2k-1, which belongs to the shift k-1 of the decomposition; re-keying on
/// 2k+1 is what matches the definition-level cross-correlation at shift k.)
std::int64_t cross_branch_key(CrossDir dir, std::int64_t k,
                              const PrimePowerParams& params);

/// Closed-form difference count for the (1, 0) class pair. Kinds U and V
/// branch on shift mod q (shift = 0 has no stated value and throws
/// std::domain_error); kinds UV and VU branch on 2*shift - 1 mod 2q.
std::int64_t predict_difference_count(DiffKind kind, std::int64_t shift,
                                      const PrimePowerParams& params);

/// Closed-form autocorrelation of s1 or s2 at shift k (peak (q, 0) at k = 0).
GaussianInt predict_component_acf(SeqKind which, std::int64_t k,
                                  const PrimePowerParams& params);

/// Closed-form cross-correlation of the two components at shift k.
GaussianInt predict_cross_ccf(CrossDir dir, std::int64_t k,
                              const PrimePowerParams& params);

/// Closed-form autocorrelation of the interleaved sequence at shift tau
/// (peak (2q, 0) at tau = 0).
GaussianInt predict_acf_s(std::int64_t tau, const PrimePowerParams& params);

/// The four brute-force component profiles entering the decomposition of
/// the full-period autocorrelation.
struct ComponentCorrelations {
  explicit ComponentCorrelations(const PrimePowerParams& params, int threads = 1);

  CorrelationProfile acf_s1;
  CorrelationProfile acf_s2;
  CorrelationProfile ccf_s1s2;
  CorrelationProfile ccf_s2s1;
};

/// Reassembles C_s(tau) from component correlations:
/// C_s1(k) + C_s2(k) at tau = 2k, C_s2s1(k-1) + C_s1s2(k) at tau = 2k-1.
GaussianInt decompose_acf(std::int64_t tau, const ComponentCorrelations& parts);

/// Convenience overload that computes the component profiles itself.
GaussianInt decompose_acf(std::int64_t tau, const PrimePowerParams& params);

}  // namespace qcseq
