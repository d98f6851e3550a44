// quartic: additive quartic forms over 2-adic quadratic fields.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quartic/aniso.hpp"
#include "quartic/certificate.hpp"
#include "quartic/errors.hpp"
#include "quartic/forms.hpp"
#include "quartic/kernels.hpp"
#include "quartic/powers.hpp"
#include "quartic/qring.hpp"
#include "quartic/solver.hpp"

using namespace quartic;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Expected {
  const char* two;                // digits of 2 mod pi^7
  std::vector<const char*> unit_powers;  // unit fourth powers mod pi^7, when known
};

Expected expected(FieldTag tag) {
  switch (tag) {
    case FieldTag::sqrt2: return {"0010000", {"1000000", "1000010"}};
    case FieldTag::sqrt_m2: return {"0010100", {"1000000", "1000011"}};
    case FieldTag::sqrt10: return {"0010001", {"1000000", "1000010"}};
    case FieldTag::sqrt_m10: return {"0010101", {"1000000", "1000011"}};
    case FieldTag::sqrt_m1: return {"0011011", {}};
    case FieldTag::sqrt_m5: return {"0011101", {}};
  }
  return {"", {}};
}

std::string pi_text(const FieldParams& f) {
  return f.pi_a == 0 ? "sqrt(" + std::to_string(f.m) + ")" : "1+sqrt(" + std::to_string(f.m) + ")";
}

bool table_row_ok(const FieldParams& f) {
  return digit_string(RingElt(f, 2, 0, 7), 7) == expected(f.tag).two;
}

bool unit_powers_ok(const FieldParams& f) {
  const auto known = expected(f.tag).unit_powers;
  const std::set<std::string> want(known.begin(), known.end());
  std::set<std::string> got;
  for (const auto& [k, v] : unit_fourth_powers(f, 7)) got.insert(k);
  return got == want;
}

int cmd_fields() {
  bool all = true;
  std::printf("%-8s %-12s %5s  %-8s %s\n", "field", "pi", "N(pi)", "2", "check");
  for (const auto& f : all_fields()) {
    const bool ok = table_row_ok(f);
    all = all && ok;
    std::printf("%-8s %-12s %5lld  %-8s %s\n", std::string(f.name).c_str(), pi_text(f).c_str(),
                static_cast<long long>(f.norm_pi), digit_string(RingElt(f, 2, 0, 7), 7).c_str(),
                ok ? "ok" : "MISMATCH");
  }
  return all ? kOk : kNo;
}

int cmd_powers(const FieldParams& f, int k, bool all_values) {
  const ResidueSet s = all_values ? fourth_power_values(f, k) : unit_fourth_powers(f, k);
  for (const auto& [digits, rep] : s) std::cout << digits << '\n';
  std::cout << s.size() << (all_values ? " fourth powers" : " unit fourth powers") << " mod pi^" << k
            << '\n';
  return kOk;
}

int cmd_expand(const FieldParams& f, int n, const std::string& expr) {
  const RingElt x = parse_coefficient(expr, f, f.max_precision());
  std::cout << digit_string(x, n) << '\n';
  return kOk;
}

int cmd_solve(const FieldParams& f, int m, bool json, const std::string& text) {
  const AdditiveForm form = parse_form(text, f, f.max_precision());
  Witness w = [&] {
    try {
      return solve(form, m);
    } catch (const NoZeroFound& e) {
      std::cerr << "no zero: " << e.what() << '\n';
      throw;
    }
  }();
  if (json) {
    std::cout << witness_to_json(form, w).dump(2) << '\n';
    return kOk;
  }
  std::cout << "zero mod pi^" << w.check_modulus << ", lifted variable " << w.lifted_index << '\n';
  for (std::size_t i = 0; i < w.assignment.size(); ++i) {
    std::cout << "  x" << i << " = " << digit_string(w.assignment[i], m) << '\n';
  }
  std::cout << "  F(x) = " << digit_string(w.residual, m) << '\n';
  return kOk;
}

int cmd_check_aniso(const FieldParams& f, int k, bool json, const std::string& text) {
  const AdditiveForm form = parse_form(text, f, f.max_precision());
  const ZeroSearch z = has_primitive_zero_mod(form, k);
  if (json) {
    std::cout << zero_search_to_json(form, k, z).dump(2) << '\n';
  } else if (z.has_zero) {
    std::cout << "primitive zero mod pi^" << k << ":";
    for (const auto& x : z.witness) std::cout << ' ' << digit_string(x, k);
    std::cout << '\n';
  } else {
    std::cout << "no primitive zero mod pi^" << k << '\n';
  }
  return kOk;
}

int cmd_verify_paper(std::optional<std::string> only) {
  int failures = 0;
  auto line = [&](bool ok, const std::string& what) {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
  };
  for (const auto& f : all_fields()) {
    if (only && f.name != *only) continue;
    const std::string name(f.name);
    line(table_row_ok(f), name + " digits of 2 = " + expected(f.tag).two);
    if (f.theorem_field()) line(unit_powers_ok(f), name + " unit fourth powers mod pi^7");
    const FixtureReport r = verify_paper_forms(f);
    char buf[96];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    if (!r.pass && r.certifying_modulus) {
      std::snprintf(buf, sizeof buf, " (%.2fs; primitive zero exists, none mod pi^%d)", r.seconds,
                    *r.certifying_modulus);
    }
    line(r.pass, name + " " + r.fixture.form_text + " anisotropic mod pi^" +
                     std::to_string(r.fixture.modulus) + buf);
  }
  return failures ? kNo : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive quartic forms over 2-adic quadratic fields"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads for the enumeration kernels (0 = default)");

  std::string field_name;
  int modulus = 7;
  int precision = kDefaultFormPrecision;
  int n_digits = 7;
  bool json = false;
  bool all_values = false;
  std::string text;

  auto* fields = app.add_subcommand("fields", "uniformizers, norms and the expansion of 2");

  auto* powers = app.add_subcommand("powers", "fourth powers modulo pi^k");
  powers->add_option("--field", field_name)->required();
  powers->add_option("--modulus", modulus)->check(CLI::Range(1, 24));
  powers->add_flag("--all", all_values, "include non-units");

  auto* expand = app.add_subcommand("expand", "pi-adic digits of a coefficient expression");
  expand->add_option("--field", field_name)->required();
  expand->add_option("--digits", n_digits)->check(CLI::Range(1, 64));
  expand->add_option("expr", text)->required();

  auto* solve_cmd = app.add_subcommand("solve", "nontrivial zero modulo pi^precision");
  solve_cmd->add_option("--field", field_name)->required();
  solve_cmd->add_option("--precision", precision)->check(CLI::Range(1, 56));
  solve_cmd->add_flag("--json", json);
  solve_cmd->add_option("form", text)->required();

  auto* aniso = app.add_subcommand("check-aniso", "decide whether a primitive zero mod pi^k exists");
  aniso->add_option("--field", field_name)->required();
  aniso->add_option("--modulus", modulus)->check(CLI::Range(1, kMaxTableModulus));
  aniso->add_flag("--json", json);
  aniso->add_option("form", text)->required();

  auto* verify_paper = app.add_subcommand("verify-paper", "built-in fixture suite");
  verify_paper->add_option("--field", field_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (threads > 0) set_worker_threads(threads);

  try {
    if (fields->parsed()) return cmd_fields();
    if (verify_paper->parsed()) {
      if (!field_name.empty()) field_by_name(field_name);
      return cmd_verify_paper(field_name.empty() ? std::nullopt : std::optional(field_name));
    }
    const FieldParams& f = field_by_name(field_name);
    if (powers->parsed()) return cmd_powers(f, modulus, all_values);
    if (expand->parsed()) return cmd_expand(f, n_digits, text);
    if (solve_cmd->parsed()) return cmd_solve(f, precision, json, text);
    if (aniso->parsed()) return cmd_check_aniso(f, modulus, json, text);
  } catch (const NoZeroFound&) {
    return kNo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kFormGrammar << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
