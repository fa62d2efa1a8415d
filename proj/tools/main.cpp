#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcseq/closed_form.hpp"
#include "qcseq/correlation.hpp"
#include "qcseq/cyclotomy.hpp"
#include "qcseq/number_theory.hpp"
#include "qcseq/sequences.hpp"
#include "qcseq/verification.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qcseq;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string component_label(std::int64_t k, const PrimePowerParams& params) {
  switch (component_case(k, params)) {
    case ComponentCase::Zero: return "Zero";
    case ComponentCase::PMultNonzero: return "pMultNonzero";
    case ComponentCase::D0: return "D0";
    case ComponentCase::D1: return "D1";
  }
  return "?";
}

std::string odd_key_label(std::int64_t key, const PrimePowerParams& params) {
  switch (odd_key_case(key, params)) {
    case OddKeyCase::PCase: return "PCase";
    case OddKeyCase::D0: return "D0";
    case OddKeyCase::D1: return "D1";
  }
  return "?";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

ordered_json gaussian_json(const GaussianInt& z) {
  return ordered_json{{"re", z.re}, {"im", z.im}};
}

struct CorrelationRow {
  std::int64_t shift = 0;
  GaussianInt value;
  GaussianInt predicted;
  std::string label;
  bool match = false;
};

void emit_correlation(const std::string& shift_name, const std::string& kind_desc,
                      const PrimePowerParams& params,
                      const std::vector<CorrelationRow>& rows,
                      const std::string& format) {
  if (format == "csv") {
    std::cout << shift_name << ",re,im,predicted_re,predicted_im,branch_label,match\n";
    for (const auto& row : rows) {
      std::cout << row.shift << ',' << row.value.re << ',' << row.value.im << ','
                << row.predicted.re << ',' << row.predicted.im << ',' << row.label
                << ',' << bool_str(row.match) << '\n';
    }
  } else if (format == "json") {
    ordered_json doc;
    doc["p"] = params.p;
    doc["m"] = params.m;
    doc["kind"] = kind_desc;
    doc["period"] = static_cast<std::int64_t>(rows.size());
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      doc["rows"].push_back(ordered_json{{shift_name, row.shift},
                                         {"value", gaussian_json(row.value)},
                                         {"predicted", gaussian_json(row.predicted)},
                                         {"branch_label", row.label},
                                         {"match", row.match}});
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& row : rows) {
      std::cout << row.shift << ' ' << row.value.re << ' ' << row.value.im << ' '
                << row.predicted.re << ' ' << row.predicted.im << ' ' << row.label
                << ' ' << bool_str(row.match) << '\n';
    }
  }
}

int cmd_gen(std::int64_t p, std::int64_t m, const std::string& seq,
            const std::string& format) {
  const PrimePowerParams params = PrimePowerParams::make(p, m);
  std::vector<std::uint8_t> symbols;
  std::vector<std::string> labels;

  if (seq == "s") {
    symbols = build_s(params).symbols;
    for (std::int64_t n = 0; n < params.n; ++n) {
      labels.push_back(to_string(fast_class(n, params)));
    }
  } else if (seq == "s1" || seq == "u") {
    symbols = seq == "s1" ? build_s1(params).symbols : build_u(params).symbols;
    for (std::int64_t n = 0; n < params.q; ++n) {
      labels.push_back(component_label(n, params));
    }
  } else if (seq == "s2" || seq == "v") {
    symbols = seq == "s2" ? build_s2(params).symbols : build_v(params).symbols;
    for (std::int64_t n = 0; n < params.q; ++n) {
      labels.push_back(odd_key_label((2 * n + 1) % params.n, params));
    }
  } else {
    throw std::invalid_argument("--seq must be one of s, s1, s2, u, v");
  }

  if (format == "raw") {
    for (std::uint8_t sym : symbols) std::cout << static_cast<int>(sym);
    std::cout << '\n';
  } else if (format == "csv") {
    std::cout << "index,symbol,class_label\n";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      std::cout << i << ',' << static_cast<int>(symbols[i]) << ',' << labels[i] << '\n';
    }
  } else {
    ordered_json doc;
    doc["p"] = params.p;
    doc["m"] = params.m;
    doc["kind"] = seq;
    doc["period"] = static_cast<std::int64_t>(symbols.size());
    doc["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      doc["rows"].push_back(ordered_json{{"index", i},
                                         {"symbol", static_cast<int>(symbols[i])},
                                         {"class_label", labels[i]}});
    }
    std::cout << doc.dump(2) << '\n';
  }
  return kExitPass;
}

int cmd_acf(std::int64_t p, std::int64_t m, const std::string& seq,
            const std::string& format) {
  const PrimePowerParams params = PrimePowerParams::make(p, m);
  QuaternarySequence sequence;
  if (seq == "s") {
    sequence = build_s(params);
  } else if (seq == "s1") {
    sequence = build_s1(params);
  } else if (seq == "s2") {
    sequence = build_s2(params);
  } else {
    throw std::invalid_argument("--seq must be one of s, s1, s2");
  }

  const CorrelationProfile profile = autocorrelation(sequence);
  std::vector<CorrelationRow> rows;
  for (std::int64_t tau = 0; tau < profile.period; ++tau) {
    CorrelationRow row;
    row.shift = tau;
    row.value = profile.at(tau);
    if (seq == "s") {
      row.predicted = predict_acf_s(tau, params);
      row.label = tau == 0 ? "peak" : to_string(fast_class(tau, params));
    } else {
      row.predicted = predict_component_acf(
          seq == "s1" ? SeqKind::S1 : SeqKind::S2, tau, params);
      row.label = tau == 0 ? "peak" : component_label(tau, params);
    }
    row.match = row.value == row.predicted;
    rows.push_back(row);
  }
  emit_correlation("tau", "acf:" + seq, params, rows, format);
  return kExitPass;
}

int cmd_ccf(std::int64_t p, std::int64_t m, const std::string& a,
            const std::string& b, const std::string& format) {
  if ((a != "s1" && a != "s2") || (b != "s1" && b != "s2")) {
    throw std::invalid_argument("--a and --b must each be s1 or s2");
  }
  const PrimePowerParams params = PrimePowerParams::make(p, m);
  const QuaternarySequence lhs = a == "s1" ? build_s1(params) : build_s2(params);
  const QuaternarySequence rhs = b == "s1" ? build_s1(params) : build_s2(params);
  const CorrelationProfile profile = cross_correlation(lhs, rhs);

  std::vector<CorrelationRow> rows;
  for (std::int64_t k = 0; k < profile.period; ++k) {
    CorrelationRow row;
    row.shift = k;
    row.value = profile.at(k);
    if (a == b) {
      row.predicted = predict_component_acf(lhs.kind, k, params);
      row.label = k == 0 ? "peak" : component_label(k, params);
    } else {
      const CrossDir dir = a == "s1" ? CrossDir::S1S2 : CrossDir::S2S1;
      row.predicted = predict_cross_ccf(dir, k, params);
      row.label = odd_key_label(cross_branch_key(dir, k, params), params);
    }
    row.match = row.value == row.predicted;
    rows.push_back(row);
  }
  emit_correlation("k", "ccf:" + a + ":" + b, params, rows, format);
  return kExitPass;
}

int cmd_cycnum(std::int64_t p, std::int64_t m, const std::string& format) {
  const PrimePowerParams params = PrimePowerParams::make(p, m);
  const ClassTable table = build_class_table(params);

  if (format == "csv") {
    std::cout << "i,j,brute,closed\n";
  }
  ordered_json doc;
  doc["p"] = params.p;
  doc["m"] = params.m;
  doc["rows"] = ordered_json::array();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::int64_t bf = cyclotomic_number_bf(i, j, table);
      const std::int64_t cf = cyclotomic_number_cf(i, j, params);
      if (format == "csv") {
        std::cout << i << ',' << j << ',' << bf << ',' << cf << '\n';
      } else if (format == "raw") {
        std::cout << '(' << i << ',' << j << "): brute=" << bf << " closed=" << cf
                  << ' ' << (bf == cf ? "ok" : "MISMATCH") << '\n';
      } else {
        doc["rows"].push_back(ordered_json{{"i", i}, {"j", j}, {"brute", bf}, {"closed", cf}});
      }
    }
  }
  if (format == "json") std::cout << doc.dump(2) << '\n';
  return kExitPass;
}

int cmd_classes(std::int64_t p, std::int64_t m, std::int64_t level,
                const std::string& format) {
  const PrimePowerParams params = PrimePowerParams::make(p, m);
  if (level == 0) level = params.m;
  if (level < 1 || level > params.m) {
    throw std::invalid_argument("--level must lie in [1, m]");
  }
  const ClassTable table = build_class_table(params);

  std::int64_t pj = 1;
  for (std::int64_t i = 0; i < level; ++i) pj *= params.p;

  struct NamedSet {
    std::string name;
    const std::vector<std::int64_t>* elements;
  };
  const std::vector<NamedSet> sets = {
      {"D_0^(" + std::to_string(pj) + ")", &table.d_pm(static_cast<int>(level), 0)},
      {"D_1^(" + std::to_string(pj) + ")", &table.d_pm(static_cast<int>(level), 1)},
      {"D_0^(" + std::to_string(2 * pj) + ")", &table.d_2pm(static_cast<int>(level), 0)},
      {"D_1^(" + std::to_string(2 * pj) + ")", &table.d_2pm(static_cast<int>(level), 1)},
  };

  if (format == "csv") {
    std::cout << "set,element\n";
    for (const auto& s : sets) {
      for (std::int64_t x : *s.elements) std::cout << s.name << ',' << x << '\n';
    }
  } else if (format == "json") {
    ordered_json doc;
    doc["p"] = params.p;
    doc["m"] = params.m;
    doc["level"] = level;
    doc["sets"] = ordered_json::array();
    for (const auto& s : sets) {
      doc["sets"].push_back(ordered_json{{"name", s.name}, {"elements", *s.elements}});
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& s : sets) {
      std::cout << s.name << " = ";
      for (std::size_t i = 0; i < s.elements->size(); ++i) {
        std::cout << (i ? "," : "") << (*s.elements)[i];
      }
      std::cout << '\n';
    }
  }
  return kExitPass;
}

int cmd_verify(std::vector<std::int64_t> ps, std::vector<std::int64_t> ms,
               std::int64_t max_n, const std::string& format) {
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  if (ps.empty()) {
    for (std::int64_t p = 3; p <= 31; p += 2) {
      if (is_prime(p)) ps.push_back(p);
    }
  }
  for (const std::int64_t cand : ps) {
    // Invalid p or m values are passed through so the suite can report the
    // rejection; only valid over-cap combinations are filtered out.
    if (ms.empty()) {
      if (cand < 3 || !is_prime(cand)) {
        grid.emplace_back(cand, 1);
        continue;
      }
      std::int64_t q = cand;
      std::int64_t mm = 1;
      while (2 * q <= max_n) {
        grid.emplace_back(cand, mm);
        q *= cand;
        ++mm;
      }
    } else {
      for (const std::int64_t mm : ms) {
        if (mm < 1 || cand < 3 || !is_prime(cand)) {
          grid.emplace_back(cand, mm);
          continue;
        }
        std::int64_t q = 1;
        bool over = false;
        for (std::int64_t i = 0; i < mm && !over; ++i) {
          over = q > max_n / cand;
          if (!over) q *= cand;
        }
        if (!over && 2 * q <= max_n) grid.emplace_back(cand, mm);
      }
    }
  }
  if (grid.empty()) {
    throw std::invalid_argument("grid is empty after applying --max-n");
  }

  const VerificationReport report = run_suite(grid);
  for (const auto& rej : report.rejected) {
    std::cerr << "rejected p=" << rej.p << " m=" << rej.m << ": " << rej.reason << '\n';
  }

  if (format == "json") {
    std::cout << report_to_json(report) << '\n';
  } else if (format == "csv") {
    std::cout << "p,m,check,cases,mismatches\n";
    for (const auto& entry : report.entries) {
      for (const auto& check : entry.checks) {
        std::cout << entry.p << ',' << entry.m << ',' << check.id << ','
                  << check.cases << ',' << check.mismatches.size() << '\n';
      }
    }
  } else {
    for (const auto& entry : report.entries) {
      std::int64_t cases = 0;
      std::int64_t bad = 0;
      for (const auto& check : entry.checks) {
        cases += check.cases;
        bad += static_cast<std::int64_t>(check.mismatches.size());
      }
      std::cout << "p=" << entry.p << " m=" << entry.m << ": " << entry.checks.size()
                << " checks, " << cases << " cases, " << bad << " mismatches"
                << (entry.pass ? "" : "  << FAIL") << '\n';
      for (const auto& t : entry.typo_resolutions) {
        std::cout << "  " << t.lemma << ": " << t.printed << " -> " << t.resolved << '\n';
      }
    }
    std::cout << "omega convention: " << report.omega_convention << '\n';
    std::cout << (report.pass ? "PASS" : "FAIL") << '\n';
  }

  std::cerr << "omega convention: " << report.omega_convention
            << "; overall: " << (report.pass ? "PASS" : "FAIL") << '\n';
  if (!report.rejected.empty()) return kExitUsage;
  return report.pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternary generalized cyclotomic sequences of period 2p^m: "
               "generation, exact correlations, closed-form verification"};
  app.require_subcommand(1);

  std::int64_t p = 0;
  std::int64_t m = 0;
  std::int64_t level = 0;
  std::int64_t max_n = 5000;
  std::string seq = "s";
  std::string a = "s1";
  std::string b = "s2";
  std::string format = "csv";
  std::vector<std::int64_t> ps;
  std::vector<std::int64_t> ms;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "odd prime p")->required();
    cmd->add_option("--m", m, "exponent m >= 1")->required();
    cmd->add_option("--format", format, "raw, csv, or json")
        ->check(CLI::IsMember({"raw", "csv", "json"}));
  };

  CLI::App* gen = app.add_subcommand("gen", "emit a sequence");
  add_common(gen);
  gen->add_option("--seq", seq, "s, s1, s2, u, or v");

  CLI::App* acf = app.add_subcommand("acf", "autocorrelation with predictions");
  add_common(acf);
  acf->add_option("--seq", seq, "s, s1, or s2");

  CLI::App* ccf = app.add_subcommand("ccf", "cross-correlation with predictions");
  add_common(ccf);
  ccf->add_option("--a", a, "left sequence: s1 or s2");
  ccf->add_option("--b", b, "right sequence: s1 or s2");

  CLI::App* cycnum = app.add_subcommand("cycnum", "cyclotomic numbers, brute and closed");
  add_common(cycnum);

  CLI::App* classes = app.add_subcommand("classes", "class sets at a level");
  add_common(classes);
  classes->add_option("--level", level, "level j in [1, m]; defaults to m");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--p", ps, "primes to include (default: all p <= 31)")->delimiter(',');
  verify->add_option("--m", ms, "exponents to include (default: all with 2p^m <= max-n)")
      ->delimiter(',');
  verify->add_option("--max-n", max_n, "period cap for the grid (default 5000)");
  verify->add_option("--format", format, "raw, csv, or json")
      ->check(CLI::IsMember({"raw", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(p, m, seq, format);
    if (acf->parsed()) return cmd_acf(p, m, seq, format);
    if (ccf->parsed()) return cmd_ccf(p, m, a, b, format);
    if (cycnum->parsed()) return cmd_cycnum(p, m, format);
    if (classes->parsed()) return cmd_classes(p, m, level, format);
    if (verify->parsed()) return cmd_verify(ps, ms, max_n, format);
  } catch (const qcseq::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
