#include "qcseq/correlation.hpp"

#include <algorithm>
#include <thread>

namespace qcseq {

namespace {

void sweep_range(const std::vector<std::uint8_t>& a,
                 const std::vector<std::uint8_t>& b, std::int64_t lo,
                 std::int64_t hi, std::vector<GaussianInt>& out) {
  const std::int64_t period = static_cast<std::int64_t>(a.size());
  for (std::int64_t tau = lo; tau < hi; ++tau) {
    std::int64_t counts[4] = {0, 0, 0, 0};
    std::int64_t idx = tau;
    for (std::int64_t n = 0; n < period; ++n) {
      counts[(a[static_cast<std::size_t>(idx)] - b[static_cast<std::size_t>(n)] + 4) & 3]++;
      if (++idx == period) idx = 0;
    }
    out[static_cast<std::size_t>(tau)] = {counts[0] - counts[2], counts[1] - counts[3]};
  }
}

}  // namespace

CorrelationProfile cross_correlation(const QuaternarySequence& a,
                                     const QuaternarySequence& b, int threads) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cross_correlation: period mismatch");
  }
  const std::int64_t period = a.size();
  if (period > kMaxCorrelationPeriod) {
    throw resource_limit_error("cross_correlation: period exceeds the sweep cap");
  }

  CorrelationProfile profile{period, a.kind, b.kind, {}};
  profile.values.resize(static_cast<std::size_t>(period));

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(period)));
  if (workers == 1) {
    sweep_range(a.symbols, b.symbols, 0, period, profile.values);
    return profile;
  }
  // Each worker owns a contiguous shift range; values never alias.
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::int64_t chunk = (period + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(period, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(sweep_range, std::cref(a.symbols), std::cref(b.symbols),
                      lo, hi, std::ref(profile.values));
  }
  for (auto& t : pool) t.join();
  return profile;
}

CorrelationProfile autocorrelation(const QuaternarySequence& a, int threads) {
  return cross_correlation(a, a, threads);
}

CharacteristicSets::CharacteristicSets(const ClassTable& table)
    : params(table.params) {
  const std::int64_t q = params.q;
  const std::int64_t n = params.n;
  u_class.assign(static_cast<std::size_t>(q), 1);
  for (std::int64_t x : table.d_pm(static_cast<int>(params.m), 0)) {
    u_class[static_cast<std::size_t>(x)] = 0;
  }
  v_class.assign(static_cast<std::size_t>(n), -1);
  for (std::int64_t x = 1; x < n; x += 2) {
    v_class[static_cast<std::size_t>(x)] = 1;  // D_1 and the odd multiples of p
  }
  for (std::int64_t x : table.d_2pm(static_cast<int>(params.m), 0)) {
    v_class[static_cast<std::size_t>(x)] = 0;
  }
}

std::int64_t difference_count(DiffKind kind, int i, int j, std::int64_t shift,
                              const CharacteristicSets& sets) {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw std::invalid_argument("difference_count: class indices must be 0 or 1");
  }
  const std::int64_t q = sets.params.q;
  const std::int64_t n = sets.params.n;
  const auto& uc = sets.u_class;
  const auto& vc = sets.v_class;
  std::int64_t count = 0;

  switch (kind) {
    case DiffKind::U: {
      const std::int64_t t = ((shift % q) + q) % q;
      for (std::int64_t x = 0; x < q; ++x) {
        if (uc[static_cast<std::size_t>(x)] == i &&
            uc[static_cast<std::size_t>((x - t + q) % q)] == j) {
          ++count;
        }
      }
      return count;
    }
    case DiffKind::V: {
      const std::int64_t t = ((2 * shift % n) + n) % n;
      for (std::int64_t x = 1; x < n; x += 2) {
        if (vc[static_cast<std::size_t>(x)] == i &&
            vc[static_cast<std::size_t>((x - t + n) % n)] == j) {
          ++count;
        }
      }
      return count;
    }
    case DiffKind::UV: {
      const std::int64_t t = (((2 * shift - 1) % n) + n) % n;
      for (std::int64_t x = 0; x < n; x += 2) {
        if (uc[static_cast<std::size_t>(x / 2 % q)] == i &&
            vc[static_cast<std::size_t>((x - t + n) % n)] == j) {
          ++count;
        }
      }
      return count;
    }
    case DiffKind::VU: {
      const std::int64_t t = (((2 * shift - 1) % n) + n) % n;
      for (std::int64_t x = 1; x < n; x += 2) {
        if (vc[static_cast<std::size_t>(x)] != i) continue;
        const std::int64_t y = (x - t + n) % n;  // always even: odd minus odd
        if (uc[static_cast<std::size_t>(y / 2 % q)] == j) ++count;
      }
      return count;
    }
  }
  throw std::invalid_argument("difference_count: unknown kind");
}

std::int64_t difference_count(DiffKind kind, std::int64_t shift,
                              const ClassTable& table) {
  return difference_count(kind, 1, 0, shift, CharacteristicSets(table));
}

}  // namespace qcseq
