#include <doctest.h>

#include <set>
#include <string>

#include "harmonid/catalog.hpp"
#include "harmonid/error.hpp"
#include "harmonid/special.hpp"
#include "oracle.hpp"

using namespace harmonid;
using oracle::Q;
using oracle::q;

namespace {

ExactPair exact(std::string_view id, const Assignment& a) {
  const IdentitySpec* spec = find_entry(id);
  REQUIRE(spec != nullptr);
  return std::get<ExactPair>(evaluate(*spec, a));
}

// sum (-1)^k / binom(2n,k) f(k)
template <typename F>
Q alternating_inverse(unsigned n, F f) {
  Q s = 0;
  for (unsigned k = 0; k <= 2 * n; ++k) {
    s += oracle::sign(k) * f(k) / oracle::binom(2 * n, k);
  }
  return s;
}

Q prop_a_oracle(unsigned n) {
  return alternating_inverse(n, [](unsigned k) { return Q(oracle::H(k) * oracle::H(k)); });
}

}  // namespace

TEST_CASE("catalog contents and order") {
  const auto& entries = catalog_entries();
  REQUIRE(entries.size() == 33);
  std::set<std::string> ids;
  int exact_count = 0;
  for (const auto& e : entries) {
    ids.insert(e.id);
    exact_count += e.mode() == Mode::exact ? 1 : 0;
    CHECK_FALSE(e.anchor.empty());
    CHECK_FALSE(e.checks.empty());
  }
  CHECK(ids.size() == 33);
  CHECK(exact_count == 26);
  CHECK(entries.front().id == "dougall_5f4");
  CHECK(entries.back().id == "bisect_relation");
  CHECK(find_entry("harmonic_hh") != nullptr);
  CHECK(find_entry("nope") == nullptr);
  for (const char* id : {"dougall_5f4", "dixon_3f2", "dixonlike_3f2", "kummer"}) {
    const auto* e = find_entry(id);
    REQUIRE(e->checks.size() == 2);
    CHECK(e->checks[1].mode == Mode::exact);
  }
}

TEST_CASE("assignments") {
  Assignment a{{"n", Rational(3)}, {"x", Rational(1, 2)}};
  CHECK(a.nat("n") == 3);
  CHECK(a.get("x") == Rational(1, 2));
  CHECK(a.has("x"));
  CHECK_FALSE(a.has("y"));
  a.set("x", Rational(2));
  CHECK(a.bindings().size() == 2);
  CHECK(to_string(a) == "n=3/1, x=2/1");
  CHECK_THROWS_AS((void)a.get("y"), UsageError);
  const Assignment half{{"n", Rational(1, 2)}};
  CHECK_THROWS_AS((void)half.nat("n"), UsageError);
}

TEST_CASE("spot values reproduce independent direct sums") {
  {
    const auto v = exact("prop_a", {{"n", Rational(1)}});
    CHECK(v.lhs == Rational(7, 4));
    CHECK(v.rhs == Rational(7, 4));
    CHECK(oracle::R(prop_a_oracle(1)) == Rational(7, 4));
  }
  {
    // sum_{k<=2} (-1)^k binom(2,k) binom(k,k)^2/binom(2,k)^2 H_k^<2>
    Q s = 0;
    for (unsigned k = 0; k <= 2; ++k) {
      s += oracle::sign(k) * oracle::binom(2, k) / (oracle::binom(2, k) * oracle::binom(2, k)) * oracle::H(k, 0, 2);
    }
    const auto v = exact("harmonic_bb", {{"n", Rational(1)}, {"p", Rational(0)}});
    CHECK(v.lhs == Rational(3, 4));
    CHECK(v.rhs == Rational(3, 4));
    CHECK(oracle::R(s) == Rational(3, 4));
  }
  {
    const auto v = exact("thm_c", {{"n", Rational(1)}, {"x", Rational(0)}});
    CHECK(v.lhs == Rational(-1, 2));
    CHECK(v.rhs == Rational(-1, 2));
  }
  {
    // n = 1, x = 2, y = z = 0: terms k = 0, 1 of the well-poised sum
    const Q x = 2;
    const Q y = 0;
    const Q z = 0;
    Q s = 0;
    for (unsigned k = 0; k <= 1; ++k) {
      s += oracle::sign(k) * oracle::binom(1, k) * oracle::binom(x + k, k) * oracle::binom(y + k, k) *
           oracle::binom(z + k, k) /
           (oracle::binom(x + 1 + k, k) * oracle::binom(x - y + k, k) * oracle::binom(x - z + k, k)) *
           (1 + x + 2 * k) / (1 + x + 1 + k);
    }
    const auto v = exact("eq_e", {{"n", Rational(1)}, {"x", Rational(2)}, {"y", Rational(0)}, {"z", Rational(0)}});
    CHECK(v.lhs == Rational(2, 3));
    CHECK(v.rhs == Rational(2, 3));
    CHECK(oracle::R(s) == Rational(2, 3));
  }
}

TEST_CASE("prop_a and intro_id1 against oracle sums") {
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto a = exact("prop_a", {{"n", Rational(n)}});
    CHECK(a.lhs == oracle::R(prop_a_oracle(n)));
    CHECK(a.lhs == a.rhs);
    const auto b = exact("intro_id1", {{"n", Rational(n)}});
    CHECK(b.lhs == oracle::R(alternating_inverse(n, [](unsigned k) { return oracle::H(k, 0, 2); })));
    CHECK(b.rhs == oracle::R(q(1 + 2 * n, 2 + 2 * n) * oracle::H(n, 0, 2)));
  }
}

TEST_CASE("n = 0 cases") {
  const Rational x(3, 7);
  const Rational y(-2, 9);
  CHECK(exact("eq_a", {{"n", Rational(0)}, {"x", x}, {"y", y}}).rhs == Rational(1));
  CHECK(exact("prop_a", {{"n", Rational(0)}}).lhs == Rational(0));
  CHECK(exact("wgy_cor21", {{"n", Rational(0)}}).rhs == Rational(0));
  for (const auto& e : catalog_entries()) {
    const Check& c = e.checks.front();
    if (c.mode != Mode::exact) {
      continue;
    }
    bool has_positive = false;
    Assignment a;
    for (const auto& p : c.params) {
      has_positive = has_positive || p.kind == ParamKind::natural_positive;
      if (p.axis == SweepAxis::index) {
        a.set(p.name, Rational(0));
      } else if (p.kind == ParamKind::rational) {
        a.set(p.name, p.name == "x" ? x : y);
      } else {
        a.set(p.name, Rational(p.name == "p" ? 2 : 0));
      }
    }
    if (has_positive || (c.constraint && !c.constraint(a)) || (c.pole_guard && !c.pole_guard(a))) {
      continue;
    }
    CAPTURE(e.id);
    const auto v = std::get<ExactPair>(evaluate(c, a));
    CHECK(v.lhs == v.rhs);
  }
}

TEST_CASE("4^(n-1) and 2^(2n-1) stay exact at n = 0") {
  // eq_c carries 2^{2n-1}; its n = 0 value is the k = 0 term, 1.
  const auto v = exact("eq_c", {{"n", Rational(0)}, {"x", Rational(5, 3)}, {"y", Rational(1, 4)}});
  CHECK(v.lhs == Rational(1));
  CHECK(v.rhs == Rational(1));
}

TEST_CASE("structural relations") {
  for (unsigned n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(exact("intro_id1", {{"n", Rational(n)}}).lhs ==
          exact("harmonic_bb", {{"n", Rational(n)}, {"p", Rational(0)}}).lhs);
    const auto eqb = exact("eq_b", {{"n", Rational(n)}, {"x", Rational(0)}});
    const auto cor = exact("wgy_cor21", {{"n", Rational(n)}});
    CHECK(exact("prop_a", {{"n", Rational(n)}}).lhs == eqb.lhs - cor.lhs);
  }
}

TEST_CASE("reversal symmetry") {
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(reversal_symmetry_check(n, Rational(1, 3), Rational(-5, 7)));
    CHECK(reversal_symmetry_check(n, Rational(9, 2), Rational(2)));
  }
}

TEST_CASE("sub-evaluators against the derivative-step identities") {
  // d/dy of the rewritten thm_e, expressed through A_n and B_n:
  //   sum (-1)^k C(n,k) C(2x+k,k)C(2y+k,k)/[C(2x+n+k,k)C(2x-2y+k,k)] (1+2x+2k)/(1+2x+n+k) H_k(x){H_k(2y)+H_k(2x-2y)}
  //   = 1/(2(x-2y+n)) C(2x+n,n)C(x-2y+n,n)/[C(x+n,n)C(2x-2y+n,n)] {(x-2y)A - nB/(x-2y+n) - 2n/(x-2y+n)^2}
  const Q x = q(5, 3);
  const Q y = q(2, 7);
  for (unsigned n = 0; n <= 8; ++n) {
    CAPTURE(n);
    Q lhs = 0;
    for (unsigned k = 0; k <= n; ++k) {
      lhs += oracle::sign(k) * oracle::binom(n, k) * oracle::binom(2 * x + k, k) * oracle::binom(2 * y + k, k) /
             (oracle::binom(2 * x + n + k, k) * oracle::binom(2 * x - 2 * y + k, k)) * (1 + 2 * x + 2 * k) /
             (1 + 2 * x + n + k) * oracle::H(k, x) * (oracle::H(k, 2 * y) + oracle::H(k, 2 * x - 2 * y));
    }
    const Q t = x - 2 * y + n;
    const Q pre = oracle::binom(2 * x + n, n) * oracle::binom(x - 2 * y + n, n) /
                  (oracle::binom(x + n, n) * oracle::binom(2 * x - 2 * y + n, n)) / (2 * t);
    const Q a = sub::a_n(n, oracle::R(x), oracle::R(y)).raw();
    const Q b = sub::b_n(n, oracle::R(x), oracle::R(y)).raw();
    CHECK(lhs == pre * ((x - 2 * y) * a - n * b / t - 2 * n / (t * t)));
  }

  // d/dy of eq_f, expressed through C_n:
  //   sum (-1)^k C(n,k) C(x+k,k)C(y+k,k)C(z+k,k)/[C(x+n+k,k)C(x-y+k,k)C(x-z+k,k)] (1+x+2k)/(1+x+n+k)
  //       {H_k(y)+H_k(x-y)}{H_k(z)+H_k(x-z)}
  //   = C(x+n,n)C(x-y-z-1+n,n)/[C(x-y+n,n)C(x-z+n,n)] {C_n - H_n^<2>(x-y-z-1)}
  const Q z = q(-3, 4);
  for (unsigned n = 0; n <= 8; ++n) {
    CAPTURE(n);
    Q lhs = 0;
    for (unsigned k = 0; k <= n; ++k) {
      lhs += oracle::sign(k) * oracle::binom(n, k) * oracle::binom(x + k, k) * oracle::binom(y + k, k) *
             oracle::binom(z + k, k) /
             (oracle::binom(x + n + k, k) * oracle::binom(x - y + k, k) * oracle::binom(x - z + k, k)) *
             (1 + x + 2 * k) / (1 + x + n + k) * (oracle::H(k, y) + oracle::H(k, x - y)) *
             (oracle::H(k, z) + oracle::H(k, x - z));
    }
    const Q w = x - y - z - 1;
    const Q pre = oracle::binom(x + n, n) * oracle::binom(w + n, n) /
                  (oracle::binom(x - y + n, n) * oracle::binom(x - z + n, n));
    const Q c = sub::c_n(n, oracle::R(x), oracle::R(y), oracle::R(z)).raw();
    CHECK(lhs == pre * (c - oracle::H(n, w, 2)));
  }
}

TEST_CASE("perturbed clones break equality") {
  const IdentitySpec bad = perturbed(*find_entry("prop_a"), Rational(1, 1000));
  const auto v = std::get<ExactPair>(evaluate(bad, {{"n", Rational(2)}}));
  CHECK(v.lhs != v.rhs);
  CHECK(v.rhs - v.lhs == Rational(1, 1000));

  const IdentitySpec badf = perturbed(*find_entry("dixon_3f2"), Rational(1), 1e-3);
  Rng rng(1);
  const Assignment a = badf.checks.front().sampler(rng);
  const auto f = std::get<FloatPair>(evaluate(badf, a));
  CHECK(f.rhs.value == doctest::Approx(f.lhs.value * 1.001).epsilon(1e-6));
}

TEST_CASE("pole points are reported") {
  // x = -1 puts a zero in binom(x+2n, k) denominators and a pole in H_k(x).
  const Assignment at_pole{{"n", Rational(2)}, {"x", Rational(-1)}, {"y", Rational(1, 2)}};
  CHECK_THROWS_AS((void)evaluate(*find_entry("thm_a"), at_pole), PoleError);
}

TEST_CASE("float identities hold at sampled points") {
  for (const auto& e : catalog_entries()) {
    if (e.mode() != Mode::floating) {
      continue;
    }
    CAPTURE(e.id);
    Rng rng(derive_seed(11, e.id, 0));
    const Check& c = e.checks.front();
    for (int i = 0; i < 5; ++i) {
      const Assignment a = c.sampler(rng);
      if (c.pole_guard && !c.pole_guard(a)) {
        continue;
      }
      const auto f = std::get<FloatPair>(evaluate(c, a));
      CHECK(f.lhs.converged);
      CHECK(f.lhs.value == doctest::Approx(f.rhs.value).epsilon(1e-7));
    }
  }
}
