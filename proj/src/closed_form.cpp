#include "qcseq/closed_form.hpp"

namespace qcseq {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t mod) {
  return ((x % mod) + mod) % mod;
}

}  // namespace

ComponentCase component_case(std::int64_t k, const PrimePowerParams& params) {
  const std::int64_t r = mod_reduce(k, params.q);
  if (r == 0) return ComponentCase::Zero;
  if (r % params.p == 0) return ComponentCase::PMultNonzero;
  return qr_class(r, params.p) == 0 ? ComponentCase::D0 : ComponentCase::D1;
}

OddKeyCase odd_key_case(std::int64_t key, const PrimePowerParams& params) {
  const std::int64_t r = mod_reduce(key, params.n);
  if (r % 2 == 0) throw std::invalid_argument("odd_key_case: key must be odd");
  if (r % params.p == 0) return OddKeyCase::PCase;
  return qr_class(r, params.p) == 0 ? OddKeyCase::D0 : OddKeyCase::D1;
}

std::int64_t cross_branch_key(CrossDir dir, std::int64_t k,
                              const PrimePowerParams& params) {
  const std::int64_t off = dir == CrossDir::S1S2 ? -1 : 1;
  return mod_reduce(2 * k + off, params.n);
}

std::int64_t predict_difference_count(DiffKind kind, std::int64_t shift,
                                      const PrimePowerParams& params) {
  const std::int64_t p = params.p;
  const std::int64_t scale = params.pm1();
  const int r8 = static_cast<int>(p % 8);

  if (kind == DiffKind::U || kind == DiffKind::V) {
    const std::int64_t t = mod_reduce(shift, params.q);
    if (t == 0) {
      throw std::domain_error("predict_difference_count: shift 0 has no stated value");
    }
    if (t % p == 0) return 0;
    const int cls = qr_class(t, p);
    if (kind == DiffKind::U) {
      if (p % 4 == 3) return scale * (p + 1) / 4;
      return cls == 0 ? scale * (p + 3) / 4 : scale * (p - 1) / 4;
    }
    switch (r8) {
      case 1: return cls == 0 ? scale * (p + 3) / 4 : scale * (p - 1) / 4;
      case 5: return cls == 0 ? scale * (p - 1) / 4 : scale * (p + 3) / 4;
      default: return scale * (p + 1) / 4;
    }
  }

  const std::int64_t key = mod_reduce(2 * shift - 1, params.n);
  if (key % p == 0) {
    // Stated as p^m / p^{m-1}; the derivations and brute force give these.
    return (r8 == 1 || r8 == 7) ? 0 : scale * (p - 1) / 2;
  }
  const int cls = qr_class(key, p);
  switch (r8) {
    case 1: return cls == 0 ? scale * (p + 3) / 4 : scale * (p - 1) / 4;
    case 5: return scale * (p - 1) / 4;
    case 3:
      if (kind == DiffKind::UV) {
        return cls == 0 ? scale * (p - 3) / 4 : scale * (p + 1) / 4;
      }
      return cls == 0 ? scale * (p + 1) / 4 : scale * (p - 3) / 4;
    default: return scale * (p + 1) / 4;
  }
}

GaussianInt predict_component_acf(SeqKind which, std::int64_t k,
                                  const PrimePowerParams& params) {
  if (which == SeqKind::S) {
    throw std::invalid_argument("predict_component_acf: expects S1 or S2");
  }
  const std::int64_t p = params.p;
  const std::int64_t scale = params.pm1();
  switch (component_case(k, params)) {
    case ComponentCase::Zero: return {params.q, 0};
    case ComponentCase::PMultNonzero: return {params.q, 0};
    case ComponentCase::D0:
      if (which == SeqKind::S1) {
        if (p % 4 == 1) return {scale * (p - 7) / 2, 0};
        return {scale * (p - 5) / 2, 2 * scale};
      }
      switch (p % 8) {
        case 1: return {scale * (p - 7) / 2, 0};
        case 3: return {scale * (p - 5) / 2, -2 * scale};
        case 5: return {scale * (p - 3) / 2, 0};
        default: return {scale * (p - 5) / 2, 2 * scale};
      }
    case ComponentCase::D1:
      if (which == SeqKind::S1) {
        if (p % 4 == 1) return {scale * (p - 3) / 2, 0};
        return {scale * (p - 5) / 2, -2 * scale};
      }
      switch (p % 8) {
        case 1: return {scale * (p - 3) / 2, 0};
        case 3: return {scale * (p - 5) / 2, 2 * scale};
        case 5: return {scale * (p - 7) / 2, 0};
        default: return {scale * (p - 5) / 2, -2 * scale};
      }
  }
  throw std::logic_error("predict_component_acf: unreachable");
}

GaussianInt predict_cross_ccf(CrossDir dir, std::int64_t k,
                              const PrimePowerParams& params) {
  const std::int64_t p = params.p;
  const std::int64_t scale = params.pm1();
  const std::int64_t key = cross_branch_key(dir, k, params);
  const OddKeyCase branch = odd_key_case(key, params);

  if (branch == OddKeyCase::PCase) {
    return (p % 8 == 1 || p % 8 == 7) ? GaussianInt{-params.q, 0}
                                      : GaussianInt{-scale, 0};
  }
  const bool d0 = branch == OddKeyCase::D0;
  switch (p % 8) {
    case 1:
      return d0 ? GaussianInt{scale * (7 - p) / 2, 0}
                : GaussianInt{scale * (3 - p) / 2, 0};
    case 3: {
      const std::int64_t a = dir == CrossDir::S1S2 ? (1 - p) : (5 - p);
      const std::int64_t b = dir == CrossDir::S1S2 ? (5 - p) : (1 - p);
      return d0 ? GaussianInt{scale * a / 2, 0} : GaussianInt{scale * b / 2, 0};
    }
    case 5: {
      const std::int64_t sgn = dir == CrossDir::S1S2 ? 1 : -1;
      return d0 ? GaussianInt{scale * (3 - p) / 2, sgn * 2 * scale}
                : GaussianInt{scale * (3 - p) / 2, -sgn * 2 * scale};
    }
    default:
      return d0 ? GaussianInt{scale * (5 - p) / 2, -2 * scale}
                : GaussianInt{scale * (5 - p) / 2, 2 * scale};
  }
}

GaussianInt predict_acf_s(std::int64_t tau, const PrimePowerParams& params) {
  const std::int64_t p = params.p;
  const std::int64_t scale = params.pm1();
  const std::int64_t t = ((tau % params.n) + params.n) % params.n;
  const int r8 = static_cast<int>(p % 8);

  if (t % (2 * p) == 0) return {params.n, 0};
  if (t % (2 * p) == p) {
    return (r8 == 1 || r8 == 7) ? GaussianInt{-params.n, 0}
                                : GaussianInt{-2 * scale, 0};
  }
  if (t % 2 == 0) {
    const int cls = qr_class(t / 2, p);
    switch (r8) {
      case 1: return cls == 0 ? GaussianInt{scale * (p - 7), 0}
                              : GaussianInt{scale * (p - 3), 0};
      case 7: return cls == 0 ? GaussianInt{scale * (p - 5), 4 * scale}
                              : GaussianInt{scale * (p - 5), -4 * scale};
      default: return {scale * (p - 5), 0};
    }
  }
  const int cls = qr_class(t, p);
  switch (r8) {
    case 1: return cls == 0 ? GaussianInt{scale * (7 - p), 0}
                            : GaussianInt{scale * (3 - p), 0};
    case 7: return cls == 0 ? GaussianInt{scale * (5 - p), -4 * scale}
                            : GaussianInt{scale * (5 - p), 4 * scale};
    default: return {scale * (3 - p), 0};
  }
}

ComponentCorrelations::ComponentCorrelations(const PrimePowerParams& params,
                                             int threads) {
  const QuaternarySequence s1 = build_s1(params);
  const QuaternarySequence s2 = build_s2(params);
  acf_s1 = cross_correlation(s1, s1, threads);
  acf_s2 = cross_correlation(s2, s2, threads);
  ccf_s1s2 = cross_correlation(s1, s2, threads);
  ccf_s2s1 = cross_correlation(s2, s1, threads);
}

GaussianInt decompose_acf(std::int64_t tau, const ComponentCorrelations& parts) {
  const std::int64_t period = 2 * parts.acf_s1.period;
  const std::int64_t t = ((tau % period) + period) % period;
  if (t % 2 == 0) {
    const std::int64_t k = t / 2;
    return parts.acf_s1.at(k) + parts.acf_s2.at(k);
  }
  const std::int64_t k = (t + 1) / 2;
  return parts.ccf_s2s1.at(k - 1) + parts.ccf_s1s2.at(k);
}

GaussianInt decompose_acf(std::int64_t tau, const PrimePowerParams& params) {
  return decompose_acf(tau, ComponentCorrelations(params));
}

}  // namespace qcseq
