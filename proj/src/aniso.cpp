#include "quartic/aniso.hpp"

#include <chrono>
#include <stdexcept>

#include "quartic/solver.hpp"

namespace quartic {

ZeroSearch has_primitive_zero_mod(const AdditiveForm& form, int k, Backend backend) {
  const ReachTable table = dp_reach(form, k, {}, backend);
  ZeroSearch out;
  if (!table.reachable(0, true)) return out;
  out.has_zero = true;
  for (const auto& pick : table.reconstruct(0, true)) {
    out.witness.push_back(pick.representative.with_precision(k));
  }
  return out;
}

std::set<int> representable_valuations(const AdditiveForm& form, int k, bool primitive_only,
                                       Backend backend) {
  const ReachTable table = dp_reach(form, k, {}, backend);
  std::set<int> out;
  for (std::uint64_t code = 1; code < table.codec().size(); ++code) {
    const bool hit = primitive_only ? table.reachable(code, true)
                                    : table.reachable(code, true) || table.reachable(code, false);
    if (hit) out.insert(table.codec().valuation(code));
  }
  return out;
}

AnisoFixture aniso_fixture(FieldTag tag) {
  switch (tag) {
    case FieldTag::sqrt2:
    case FieldTag::sqrt10:
      return {tag, "1,1,1,1,p,p,p,p,p,p", 8, 10};
    case FieldTag::sqrt_m2:
    case FieldTag::sqrt_m10:
      return {tag, "1,1,1,1,p+p^2,p+p^2,p+p^2,p+p^2,p+p^2,p+p^2", 8, 10};
    case FieldTag::sqrt_m1:
      return {tag, "1,1,1,1,p+p^3,p+p^3,p+p^3,p+p^3,p^2+p^3,p^3+p^4+p^5", 7, 10};
    case FieldTag::sqrt_m5:
      return {tag, "1,1,1,1,p,p,p,p", 7, 8};
  }
  throw std::invalid_argument("unknown field tag");
}

FixtureReport verify_paper_forms(const FieldParams& f, Backend backend) {
  FixtureReport report{aniso_fixture(f.tag)};
  const auto start = std::chrono::steady_clock::now();
  const AdditiveForm form = parse_form(report.fixture.form_text, f);
  report.has_zero = has_primitive_zero_mod(form, report.fixture.modulus, backend).has_zero;
  report.pass = !report.has_zero;
  for (int k = 1; k <= kMaxTableModulus; ++k) {
    if (!has_primitive_zero_mod(form, k, backend).has_zero) {
      report.certifying_modulus = k;
      break;
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace quartic
