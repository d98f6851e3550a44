#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "quartic/aniso.hpp"
#include "quartic/forms.hpp"
#include "support.hpp"

using namespace quartic;
using quartic::testing::Rng;

namespace {

const FieldParams& F2 = field(FieldTag::sqrt2);

RingElt from_pattern(const FieldParams& f, unsigned p, int k) {
  const RingElt pi = RingElt::pi(f, f.max_precision());
  RingElt x = RingElt::zero(f, f.max_precision());
  RingElt pw = RingElt::one(f, f.max_precision());
  for (int i = 0; i < k; ++i, pw = pw * pi) {
    if (p >> i & 1) x = x + pw;
  }
  return x;
}

bool zero_mod(const RingElt& v, int k) {
  const Valuation val = valuation(v);
  return !val.exact || val.value >= k;
}

// every x mod pi^k, tiny forms only
struct Naive {
  bool primitive_zero = false;
  std::set<int> vals_primitive, vals_all;
};

Naive naive(const AdditiveForm& form, int k) {
  const FieldParams& f = form.field();
  const std::size_t n = form.size();
  const unsigned per = 1u << k;
  Naive out;
  std::vector<unsigned> idx(n, 0);
  while (true) {
    std::vector<RingElt> x;
    bool unit = false;
    for (unsigned p : idx) {
      x.push_back(from_pattern(f, p, k));
      unit = unit || (p & 1);
    }
    const RingElt v = evaluate(form, x, k);
    if (zero_mod(v, k)) {
      if (unit) out.primitive_zero = true;
    } else {
      const int l = valuation(v).value;
      out.vals_all.insert(l);
      if (unit) out.vals_primitive.insert(l);
    }
    std::size_t i = 0;
    while (i < n && ++idx[i] == per) idx[i++] = 0;
    if (i == n) break;
  }
  return out;
}

void expect_witness(const AdditiveForm& form, int k, const ZeroSearch& z) {
  ASSERT_TRUE(z.has_zero);
  ASSERT_EQ(z.witness.size(), form.size());
  bool unit = false;
  for (const auto& x : z.witness) unit = unit || is_unit(x);
  EXPECT_TRUE(unit);
  EXPECT_TRUE(zero_mod(evaluate(form, z.witness, k), k));
}

}  // namespace

TEST(PrimitiveZero, Examples) {
  EXPECT_FALSE(has_primitive_zero_mod(parse_form("1,1,1,1,p,p,p,p,p,p", F2), 8).has_zero);

  const AdditiveForm diff = parse_form("1,-1", F2);
  const ZeroSearch z = has_primitive_zero_mod(diff, 8);
  expect_witness(diff, 8, z);
  EXPECT_TRUE(is_unit(z.witness[0]) && is_unit(z.witness[1]));

  EXPECT_FALSE(has_primitive_zero_mod(parse_form("1", F2), 3).has_zero);
  EXPECT_THROW(has_primitive_zero_mod(parse_form("1", F2), 13), std::exception);
}

TEST(PrimitiveZero, LowerBoundFixtures) {
  for (FieldTag tag : {FieldTag::sqrt2, FieldTag::sqrt10, FieldTag::sqrt_m2, FieldTag::sqrt_m10, FieldTag::sqrt_m5}) {
    const FixtureReport r = verify_paper_forms(field(tag));
    EXPECT_TRUE(r.pass) << field(tag).name;
    EXPECT_FALSE(r.has_zero);
    ASSERT_TRUE(r.certifying_modulus.has_value());
    EXPECT_LE(*r.certifying_modulus, r.fixture.modulus);
  }
  EXPECT_EQ(aniso_fixture(FieldTag::sqrt2).variables, 10);
  EXPECT_EQ(aniso_fixture(FieldTag::sqrt_m5).variables, 8);
  EXPECT_EQ(aniso_fixture(FieldTag::sqrt_m1).variables, 10);
}

// The ten-variable sqrt-1 form has a primitive zero mod pi^7 (x6=x7=x10=1,
// x5=pi gives pi^7 (1 - pi)) but none mod pi^8.
TEST(PrimitiveZero, SqrtMinusOneForm) {
  const FieldParams& f = field(FieldTag::sqrt_m1);
  const AnisoFixture fx = aniso_fixture(FieldTag::sqrt_m1);
  const AdditiveForm form = parse_form(fx.form_text, f, f.max_precision());
  const ZeroSearch z7 = has_primitive_zero_mod(form, 7);
  expect_witness(form, 7, z7);

  std::vector<RingElt> x(10, RingElt::zero(f, 64));
  x[5] = x[6] = x[9] = RingElt::one(f, 64);
  x[4] = RingElt::pi(f, 64);
  const RingElt v = evaluate(form, x, 20);
  EXPECT_TRUE(zero_mod(v, 7));
  EXPECT_FALSE(zero_mod(v, 8));

  EXPECT_FALSE(has_primitive_zero_mod(form, 8).has_zero);
  const FixtureReport r = verify_paper_forms(f);
  EXPECT_TRUE(r.has_zero);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.certifying_modulus, std::optional<int>(8));
}

TEST(PrimitiveZero, Backends) {
  Rng rng(21);
  for (const auto& f : all_fields()) {
    for (int n = 0; n < 10; ++n) {
      const AdditiveForm form = quartic::testing::random_form(f, rng, quartic::testing::random_levels(rng, 1 + rng() % 7));
      const int k = 1 + static_cast<int>(rng() % 10);
      const ZeroSearch a = has_primitive_zero_mod(form, k, Backend::serial);
      const ZeroSearch b = has_primitive_zero_mod(form, k, Backend::parallel);
      EXPECT_EQ(a.has_zero, b.has_zero);
      if (a.has_zero) {
        expect_witness(form, k, a);
        expect_witness(form, k, b);
      }
      EXPECT_EQ(representable_valuations(form, k, true, Backend::serial),
                representable_valuations(form, k, true, Backend::parallel));
    }
  }
}

TEST(PrimitiveZero, Monotone) {
  Rng rng(22);
  for (const auto& f : all_fields()) {
    for (int n = 0; n < 15; ++n) {
      const AdditiveForm form = quartic::testing::random_form(f, rng, quartic::testing::random_levels(rng, 1 + rng() % 9));
      bool prev = true;
      for (int k = 1; k <= 10; ++k) {
        const bool now = has_primitive_zero_mod(form, k).has_zero;
        if (!prev) EXPECT_FALSE(now) << f.name << " k=" << k;
        prev = now;
      }
    }
  }
}

TEST(PrimitiveZero, NaiveOracle) {
  Rng rng(23);
  for (const auto& f : all_fields()) {
    for (int n = 0; n < 12; ++n) {
      const std::size_t s = 1 + rng() % 3;
      const int k = 1 + static_cast<int>(rng() % (s == 3 ? 4 : 6));
      const AdditiveForm form = quartic::testing::random_form(f, rng, quartic::testing::random_levels(rng, s));
      const Naive ref = naive(form, k);
      EXPECT_EQ(has_primitive_zero_mod(form, k).has_zero, ref.primitive_zero) << f.name << " k=" << k;
      EXPECT_EQ(representable_valuations(form, k, true), ref.vals_primitive) << f.name << " k=" << k;
      EXPECT_EQ(representable_valuations(form, k, false), ref.vals_all) << f.name << " k=" << k;
    }
  }
}

TEST(Valuations, Examples) {
  const AdditiveForm g = parse_form("1,1,1,1", F2);
  const std::set<int> vg = representable_valuations(g, 7);
  EXPECT_TRUE(vg.contains(0));
  EXPECT_TRUE(vg.contains(2));
  EXPECT_TRUE(vg.contains(4));
  for (int v : vg) EXPECT_EQ(v % 2, 0) << v;

  const AdditiveForm one = parse_form("1", F2);
  EXPECT_EQ(representable_valuations(one, 5, false), (std::set<int>{0, 4}));
  EXPECT_EQ(representable_valuations(one, 5, true), (std::set<int>{0}));

  // pi H shifts the non-primitive value set of H by one
  const AdditiveForm h = parse_form("1,1,1,1,1,1", F2);
  const AdditiveForm ph = parse_form("p,p,p,p,p,p", F2);
  std::set<int> shifted;
  for (int v : representable_valuations(h, 7, false)) shifted.insert(v + 1);
  EXPECT_EQ(representable_valuations(ph, 8, false), shifted);
}
