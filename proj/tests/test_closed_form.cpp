#include <doctest.h>

#include <vector>

#include "qcseq/closed_form.hpp"
#include "qcseq/verification.hpp"

using namespace qcseq;

namespace {

const std::vector<std::pair<std::int64_t, std::int64_t>> kGrid = {
    {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2},
    {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}};

}  // namespace

TEST_CASE("difference-count predictions on known branches") {
  const PrimePowerParams p71 = PrimePowerParams::make(7, 1);
  for (std::int64_t t = 1; t < 7; ++t) {
    CHECK(predict_difference_count(DiffKind::U, t, p71) == 2);  // (p+1)/4
  }
  const PrimePowerParams p32 = PrimePowerParams::make(3, 2);
  CHECK(predict_difference_count(DiffKind::U, 3, p32) == 0);
  CHECK(predict_difference_count(DiffKind::UV, 2, p32) == 3);  // 2k-1 = p case

  const PrimePowerParams p51 = PrimePowerParams::make(5, 1);
  CHECK(predict_difference_count(DiffKind::V, 1, p51) == 1);  // 1 in D_0
  CHECK(predict_difference_count(DiffKind::V, 4, p51) == 1);  // 4 in D_0
  CHECK(predict_difference_count(DiffKind::V, 2, p51) == 2);  // 2 in D_1

  CHECK_THROWS_AS(predict_difference_count(DiffKind::U, 0, p51), std::domain_error);
  CHECK_THROWS_AS(predict_difference_count(DiffKind::V, 5, p51), std::domain_error);
}

TEST_CASE("component autocorrelation predictions on known branches") {
  const PrimePowerParams p51 = PrimePowerParams::make(5, 1);
  CHECK(predict_component_acf(SeqKind::S1, 1, p51) == GaussianInt{-1, 0});
  CHECK(predict_component_acf(SeqKind::S1, 0, p51) == GaussianInt{5, 0});

  const PrimePowerParams p32 = PrimePowerParams::make(3, 2);
  CHECK(predict_component_acf(SeqKind::S1, 3, p32) == GaussianInt{9, 0});
  CHECK(predict_component_acf(SeqKind::S1, 1, p32) == GaussianInt{-3, 6});

  const PrimePowerParams p71 = PrimePowerParams::make(7, 1);
  CHECK(predict_component_acf(SeqKind::S2, 1, p71) == GaussianInt{1, 2});  // 1 in D_0
  CHECK(predict_component_acf(SeqKind::S2, 3, p71) == GaussianInt{1, -2});  // 3 in D_1

  CHECK_THROWS_AS(predict_component_acf(SeqKind::S, 1, p51), std::invalid_argument);
}

TEST_CASE("cross-correlation predictions on known branches") {
  const PrimePowerParams p32 = PrimePowerParams::make(3, 2);
  CHECK(predict_cross_ccf(CrossDir::S1S2, 2, p32) == GaussianInt{-3, 0});

  const PrimePowerParams p51 = PrimePowerParams::make(5, 1);
  CHECK(cross_branch_key(CrossDir::S2S1, 4, p51) == 9);  // 9 in D_0^(10)
  CHECK(predict_cross_ccf(CrossDir::S2S1, 4, p51) == GaussianInt{-1, -2});
  CHECK(predict_cross_ccf(CrossDir::S2S1, 2, p51) == GaussianInt{-1, 0});  // key 5 = p

  const PrimePowerParams p171 = PrimePowerParams::make(17, 1);
  CHECK(cross_branch_key(CrossDir::S1S2, 1, p171) == 1);  // 1 in D_0^(34)
  CHECK(predict_cross_ccf(CrossDir::S1S2, 1, p171) == GaussianInt{-5, 0});
}

TEST_CASE("full-period autocorrelation predictions on known branches") {
  const PrimePowerParams p32 = PrimePowerParams::make(3, 2);
  CHECK(predict_acf_s(0, p32) == GaussianInt{18, 0});
  CHECK(predict_acf_s(6, p32) == GaussianInt{18, 0});
  CHECK(predict_acf_s(3, p32) == GaussianInt{-6, 0});
  CHECK(predict_acf_s(1, p32) == GaussianInt{0, 0});

  const PrimePowerParams p71 = PrimePowerParams::make(7, 1);
  CHECK(predict_acf_s(2, p71) == GaussianInt{2, 4});  // 2 = 2*1, 1 in D_0^(7)
  CHECK(predict_acf_s(7, p71) == GaussianInt{-14, 0});
}

TEST_CASE("decomposition on known shifts") {
  const PrimePowerParams p51 = PrimePowerParams::make(5, 1);
  CHECK(decompose_acf(0, p51) == GaussianInt{10, 0});
  CHECK(decompose_acf(2, p51) == GaussianInt{0, 0});
  const PrimePowerParams p32 = PrimePowerParams::make(3, 2);
  CHECK(decompose_acf(0, p32) == GaussianInt{18, 0});
  CHECK(decompose_acf(3, p32) == GaussianInt{-6, 0});
}

TEST_CASE("case labels") {
  const PrimePowerParams p32 = PrimePowerParams::make(3, 2);
  CHECK(component_case(0, p32) == ComponentCase::Zero);
  CHECK(component_case(3, p32) == ComponentCase::PMultNonzero);
  CHECK(component_case(4, p32) == ComponentCase::D0);
  CHECK(component_case(2, p32) == ComponentCase::D1);
  CHECK(odd_key_case(3, p32) == OddKeyCase::PCase);
  CHECK(odd_key_case(13, p32) == OddKeyCase::D0);
  CHECK(odd_key_case(5, p32) == OddKeyCase::D1);
  CHECK_THROWS_AS(odd_key_case(4, p32), std::invalid_argument);
}

TEST_CASE("every closed form matches brute force on the grid") {
  for (const auto& [p, m] : kGrid) {
    const Instance inst = Instance::make(PrimePowerParams::make(p, m));
    const PrimePowerParams& params = inst.params;
    CAPTURE(p);
    CAPTURE(m);

    for (std::int64_t t = 1; t < params.q; ++t) {
      CHECK(predict_difference_count(DiffKind::U, t, params) ==
            difference_count(DiffKind::U, 1, 0, t, inst.sets));
      CHECK(predict_difference_count(DiffKind::V, t, params) ==
            difference_count(DiffKind::V, 1, 0, t, inst.sets));
    }
    for (std::int64_t t = 0; t < params.q; ++t) {
      CHECK(predict_difference_count(DiffKind::UV, t, params) ==
            difference_count(DiffKind::UV, 1, 0, t, inst.sets));
      CHECK(predict_difference_count(DiffKind::VU, t, params) ==
            difference_count(DiffKind::VU, 1, 0, t, inst.sets));
    }
    for (std::int64_t k = 0; k < params.q; ++k) {
      CHECK(predict_component_acf(SeqKind::S1, k, params) == inst.components.acf_s1.at(k));
      CHECK(predict_component_acf(SeqKind::S2, k, params) == inst.components.acf_s2.at(k));
      CHECK(predict_cross_ccf(CrossDir::S1S2, k, params) == inst.components.ccf_s1s2.at(k));
      CHECK(predict_cross_ccf(CrossDir::S2S1, k, params) == inst.components.ccf_s2s1.at(k));
    }
    for (std::int64_t tau = 0; tau < params.n; ++tau) {
      CHECK(predict_acf_s(tau, params) == inst.acf_s.at(tau));
      CHECK(decompose_acf(tau, inst.components) == inst.acf_s.at(tau));
    }
  }
}

TEST_CASE("even shifts split into the component predictions") {
  for (const auto& [p, m] : kGrid) {
    const PrimePowerParams params = PrimePowerParams::make(p, m);
    for (std::int64_t k = 0; k < params.q; ++k) {
      CAPTURE(p);
      CAPTURE(m);
      CAPTURE(k);
      const GaussianInt sum = predict_component_acf(SeqKind::S1, k, params) +
                              predict_component_acf(SeqKind::S2, k, params);
      CHECK(predict_acf_s(2 * k % params.n, params) == sum);
    }
  }
}
