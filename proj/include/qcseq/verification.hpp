#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcseq/closed_form.hpp"
#include "qcseq/correlation.hpp"
#include "qcseq/cyclotomy.hpp"
#include "qcseq/sequences.hpp"

namespace qcseq {

/// Everything computed once per (p, m): table, sequences, characteristic
/// sets and the five brute-force correlation profiles.
struct Instance {
  PrimePowerParams params;
  ClassTable table;
  CharacteristicSets sets;
  QuaternarySequence s, s1, s2;
  BinarySequence u, v;
  CorrelationProfile acf_s;
  ComponentCorrelations components;

  static Instance make(const PrimePowerParams& params, int threads = 1);
};

struct Mismatch {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string id;
  std::int64_t cases = 0;
  std::vector<Mismatch> mismatches;

  bool pass() const { return mismatches.empty(); }
};

/// One documented divergence between a stated branch and what brute force
/// shows, together with the in-source value or condition that does match.
struct TypoResolution {
  std::string lemma;
  std::string printed;
  std::string resolved;
};

/// Brute force against the closed form (or the stated structural fact) for
/// one claim id in {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}.
/// Throws std::invalid_argument for any other id.
CheckResult verify_lemma(int id, const Instance& inst);

/// Full-period autocorrelation against its closed form at every shift.
CheckResult verify_theorem16(const Instance& inst);

/// Partition completeness, class cardinalities, classifier agreement,
/// g-independence, interleaving, component relations, conjugate symmetry,
/// and balance.
std::vector<CheckResult> verify_structural(const Instance& inst);

/// Evaluates the claim tables exactly as stated (before the corrections the
/// predictors carry) and reports which branches had to be reassigned, only
/// ever to values present in the stated material.
std::vector<TypoResolution> scan_printed_forms(const Instance& inst);

struct EntryReport {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::vector<CheckResult> checks;
  std::vector<TypoResolution> typo_resolutions;
  bool pass = false;
};

struct GridRejection {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::string reason;
};

struct VerificationReport {
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  std::string omega_convention;  ///< "+i", "-i", or "both-fail"
  std::vector<EntryReport> entries;
  std::vector<GridRejection> rejected;
  bool pass = false;
};

/// All (p, m) with p prime <= max_p and 2 p^m <= max_n.
std::vector<std::pair<std::int64_t, std::int64_t>> default_grid(
    std::int64_t max_p = 31, std::int64_t max_n = 5000);

/// Runs every check on every grid entry. Invalid entries are collected in
/// `rejected` (and fail the report) rather than aborting the suite; a
/// mismatch never stops enumeration. Entries are processed and reported in
/// ascending (p, m) order, so identical grids give identical reports.
VerificationReport run_suite(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& grid);

/// JSON rendering of the report (stable key order, no timestamps).
std::string report_to_json(const VerificationReport& report, int indent = 2);

}  // namespace qcseq
