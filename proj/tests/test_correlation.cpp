#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qcseq/correlation.hpp"

using namespace qcseq;

namespace {

// Second route for small instances: floating-point accumulation with the
// same root, rounded back to integers.
std::vector<GaussianInt> float_profile(const QuaternarySequence& a,
                                       const QuaternarySequence& b) {
  const std::int64_t period = a.size();
  const std::complex<double> omega(0.0, 1.0);
  std::vector<GaussianInt> out;
  for (std::int64_t tau = 0; tau < period; ++tau) {
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t n = 0; n < period; ++n) {
      const int e = (a[(n + tau) % period] - b[n] + 4) % 4;
      acc += std::pow(omega, e);
    }
    out.push_back({std::llround(acc.real()), std::llround(acc.imag())});
  }
  return out;
}

}  // namespace

TEST_CASE("omega powers") {
  CHECK(omega_power(0) == GaussianInt{1, 0});
  CHECK(omega_power(1) == GaussianInt{0, 1});
  CHECK(omega_power(2) == GaussianInt{-1, 0});
  CHECK(omega_power(3) == GaussianInt{0, -1});
  CHECK(omega_power(4) == GaussianInt{1, 0});
  CHECK(omega_power(-1) == GaussianInt{0, -1});
  CHECK(omega_power(-2) == GaussianInt{-1, 0});
}

TEST_CASE("gaussian integer arithmetic") {
  const GaussianInt z{3, -4};
  CHECK(z.conj() == GaussianInt{3, 4});
  CHECK(z.norm() == 25);
  CHECK((z + GaussianInt{-3, 4}) == GaussianInt{0, 0});
  CHECK(-z == GaussianInt{-3, 4});
  CHECK((GaussianInt{1, 1} - GaussianInt{2, -1}) == GaussianInt{-1, 2});
}

TEST_CASE("autocorrelation of the 10-period instance") {
  const CorrelationProfile acf =
      autocorrelation(build_s(PrimePowerParams::make(5, 1)));
  const std::vector<GaussianInt> expected = {
      {10, 0}, {-2, 0}, {0, 0}, {-2, 0}, {0, 0},
      {-2, 0}, {0, 0},  {-2, 0}, {0, 0}, {-2, 0}};
  CHECK(acf.values == expected);
  CHECK(acf.at(5) == GaussianInt{-2, 0});
  CHECK(acf.at(-3) == acf.at(7));
}

TEST_CASE("autocorrelation of the 18-period instance") {
  const CorrelationProfile acf =
      autocorrelation(build_s(PrimePowerParams::make(3, 2)));
  CHECK(acf.at(0) == GaussianInt{18, 0});
  CHECK(acf.at(1) == GaussianInt{0, 0});
  CHECK(acf.at(3) == GaussianInt{-6, 0});
  CHECK(acf.at(6) == GaussianInt{18, 0});
  CHECK(acf.at(2) == GaussianInt{-6, 0});
}

TEST_CASE("zero shift is the period") {
  for (std::int64_t p : {3, 5, 7, 11}) {
    const QuaternarySequence s1 = build_s1(PrimePowerParams::make(p, 1));
    CHECK(autocorrelation(s1).at(0) == GaussianInt{p, 0});
  }
}

TEST_CASE("profiles are conjugate-symmetric") {
  for (const auto& [p, m] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {5, 1}, {7, 2}, {13, 1}}) {
    const PrimePowerParams params = PrimePowerParams::make(p, m);
    for (const QuaternarySequence& seq :
         {build_s(params), build_s1(params), build_s2(params)}) {
      const CorrelationProfile acf = autocorrelation(seq);
      CHECK(acf.at(0) == GaussianInt{acf.period, 0});
      for (std::int64_t tau = 0; tau < acf.period; ++tau) {
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(tau);
        CHECK(acf.at(acf.period - tau) == acf.at(tau).conj());
      }
    }
  }
}

TEST_CASE("exact values agree with the floating-point route") {
  for (const auto& [p, m] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 1}, {7, 1}, {7, 2}}) {
    const PrimePowerParams params = PrimePowerParams::make(p, m);
    const QuaternarySequence s1 = build_s1(params);
    const QuaternarySequence s2 = build_s2(params);
    CHECK(cross_correlation(s1, s2).values == float_profile(s1, s2));
    CHECK(autocorrelation(build_s(params)).values ==
          float_profile(build_s(params), build_s(params)));
  }
}

TEST_CASE("mismatched periods are rejected") {
  const PrimePowerParams params = PrimePowerParams::make(5, 1);
  CHECK_THROWS_AS(cross_correlation(build_s(params), build_s1(params)),
                  std::invalid_argument);
}

TEST_CASE("correlation sweeps enforce the period cap") {
  // 2 * 3^10 = 118098 is fine to build but beyond the O(L^2) sweep cap.
  const QuaternarySequence s = build_s(PrimePowerParams::make(3, 10));
  CHECK(s.size() == 118098);
  CHECK_THROWS_AS(autocorrelation(s), resource_limit_error);
}

TEST_CASE("worker count does not change the result") {
  const PrimePowerParams params = PrimePowerParams::make(7, 2);
  const QuaternarySequence s = build_s(params);
  const CorrelationProfile serial = autocorrelation(s, 1);
  CHECK(serial.values == autocorrelation(s, 3).values);
  CHECK(serial.values == autocorrelation(s, 8).values);
  const QuaternarySequence tiny = build_s(PrimePowerParams::make(3, 1));
  CHECK(autocorrelation(tiny, 50).values == autocorrelation(tiny, 1).values);
}

TEST_CASE("difference counts on known values") {
  const ClassTable t31 = build_class_table(PrimePowerParams::make(3, 1));
  CHECK(difference_count(DiffKind::U, 1, t31) == 1);
  const ClassTable t51 = build_class_table(PrimePowerParams::make(5, 1));
  CHECK(difference_count(DiffKind::V, 1, t51) == 1);
  const ClassTable t32 = build_class_table(PrimePowerParams::make(3, 2));
  CHECK(difference_count(DiffKind::U, 3, t32) == 0);
  CHECK(difference_count(DiffKind::UV, 2, t32) == 3);  // 2k-1 = 3 = p (mod 2p)
}

TEST_CASE("difference counts sum to q and are (1,0)/(0,1) symmetric") {
  for (const auto& [p, m] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}) {
    const PrimePowerParams params = PrimePowerParams::make(p, m);
    const CharacteristicSets sets(build_class_table(params));
    for (DiffKind kind : {DiffKind::U, DiffKind::V, DiffKind::UV, DiffKind::VU}) {
      for (std::int64_t t = 0; t < params.q; ++t) {
        std::int64_t total = 0;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) total += difference_count(kind, i, j, t, sets);
        }
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(t);
        CHECK(total == params.q);
        CHECK(difference_count(kind, 1, 0, t, sets) ==
              difference_count(kind, 0, 1, t, sets));
      }
    }
  }
}

TEST_CASE("difference counts reject bad class indices") {
  const CharacteristicSets sets(build_class_table(PrimePowerParams::make(5, 1)));
  CHECK_THROWS_AS(difference_count(DiffKind::U, 2, 0, 1, sets), std::invalid_argument);
}
