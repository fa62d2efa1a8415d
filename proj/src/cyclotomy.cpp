#include "qcseq/cyclotomy.hpp"

#include <algorithm>

namespace qcseq {

std::string to_string(const ResidueLabel& label) {
  switch (label.kind) {
    case LabelKind::ZeroMod2p: return "ZeroMod2p";
    case LabelKind::PMod2p: return "PMod2p";
    case LabelKind::Unit2pm: return "Unit2pm(" + std::to_string(label.cls) + ")";
    case LabelKind::TwoUnit: return "TwoUnit(" + std::to_string(label.cls) + ")";
  }
  return "?";
}

const std::vector<std::int64_t>& ClassTable::d_pm(int level, int cls) const {
  if (level < 1 || level > params.m || cls < 0 || cls > 1) {
    throw std::invalid_argument("d_pm: bad level or class index");
  }
  return units_pm[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(cls)];
}

const std::vector<std::int64_t>& ClassTable::d_2pm(int level, int cls) const {
  if (level < 1 || level > params.m || cls < 0 || cls > 1) {
    throw std::invalid_argument("d_2pm: bad level or class index");
  }
  return units_2pm[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(cls)];
}

ClassTable build_class_table(const PrimePowerParams& params) {
  if (params.n > kMaxTableModulus) {
    throw resource_limit_error("class table: 2 p^m exceeds the size cap");
  }

  ClassTable table;
  table.params = params;
  table.units_pm.resize(static_cast<std::size_t>(params.m));
  table.units_2pm.resize(static_cast<std::size_t>(params.m));

  std::int64_t pj = 1;
  for (std::int64_t j = 1; j <= params.m; ++j) {
    pj *= params.p;
    const std::int64_t phi_j = pj / params.p * (params.p - 1);
    auto& dq = table.units_pm[static_cast<std::size_t>(j - 1)];
    auto& dn = table.units_2pm[static_cast<std::size_t>(j - 1)];
    // g^t lands in class t mod 2 at both moduli.
    std::int64_t x = 1 % pj;
    std::int64_t y = 1 % (2 * pj);
    for (std::int64_t t = 0; t < phi_j; ++t) {
      dq[static_cast<std::size_t>(t & 1)].push_back(x);
      dn[static_cast<std::size_t>(t & 1)].push_back(y);
      x = x * (params.g % pj) % pj;
      y = y * (params.g % (2 * pj)) % (2 * pj);
    }
    for (auto& v : dq) std::sort(v.begin(), v.end());
    for (auto& v : dn) std::sort(v.begin(), v.end());
  }

  // Top-level label array, derived from the enumerated sets.
  table.label_of.assign(static_cast<std::size_t>(params.n), ResidueLabel{});
  const auto& top_q = table.units_pm.back();
  const auto& top_n = table.units_2pm.back();
  for (int cls = 0; cls < 2; ++cls) {
    for (std::int64_t x : top_n[static_cast<std::size_t>(cls)]) {
      table.label_of[static_cast<std::size_t>(x)] = {LabelKind::Unit2pm, cls};
    }
    for (std::int64_t x : top_q[static_cast<std::size_t>(cls)]) {
      table.label_of[static_cast<std::size_t>(2 * x % params.n)] = {LabelKind::TwoUnit, cls};
    }
  }
  for (std::int64_t x = 0; x < params.n; x += params.p) {
    table.label_of[static_cast<std::size_t>(x)] =
        (x % 2 == 0) ? ResidueLabel{LabelKind::ZeroMod2p, 0}
                     : ResidueLabel{LabelKind::PMod2p, 0};
  }
  return table;
}

ResidueLabel classify(std::int64_t n, const ClassTable& table) {
  if (n < 0 || n >= table.params.n) {
    throw std::invalid_argument("classify: residue out of range");
  }
  return table.label_of[static_cast<std::size_t>(n)];
}

ResidueLabel fast_class(std::int64_t n, const PrimePowerParams& params) {
  if (n < 0 || n >= params.n) {
    throw std::invalid_argument("fast_class: residue out of range");
  }
  if (n % params.p == 0) {
    return (n % 2 == 0) ? ResidueLabel{LabelKind::ZeroMod2p, 0}
                        : ResidueLabel{LabelKind::PMod2p, 0};
  }
  if (n % 2 == 1) return {LabelKind::Unit2pm, qr_class(n, params.p)};
  return {LabelKind::TwoUnit, qr_class(n / 2, params.p)};
}

std::int64_t cyclotomic_number_bf(int i, int j, const ClassTable& table) {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw std::invalid_argument("cyclotomic_number_bf: class indices must be 0 or 1");
  }
  const std::int64_t q = table.params.q;
  const auto& di = table.d_pm(static_cast<int>(table.params.m), i);
  const auto& dj = table.d_pm(static_cast<int>(table.params.m), j);
  std::int64_t count = 0;
  for (std::int64_t x : di) {
    count += std::binary_search(dj.begin(), dj.end(), (x + 1) % q) ? 1 : 0;
  }
  return count;
}

std::int64_t cyclotomic_number_cf(int i, int j, const PrimePowerParams& params) {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw std::invalid_argument("cyclotomic_number_cf: class indices must be 0 or 1");
  }
  const std::int64_t scale = params.pm1();
  if (params.p % 4 == 1) {
    if (i == 0 && j == 0) return scale * (params.p - 5) / 4;
    return scale * (params.p - 1) / 4;
  }
  if (i == 0 && j == 1) return scale * (params.p + 1) / 4;
  return scale * (params.p - 3) / 4;
}

}  // namespace qcseq
