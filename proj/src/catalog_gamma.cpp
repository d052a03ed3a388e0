// Gamma-form summation theorems: float track at generic points inside the
// convergence region, plus an exact track at a terminating specialization.
//
// Regions are chosen so every gamma argument is positive and the parameter
// excess of each 3F2/5F4 at unit argument is at least 2, which bounds the
// truncation tail well below the comparison tolerance.

#include <array>
#include <cmath>

#include "catalog_detail.hpp"
#include "harmonid/hypergeom.hpp"

namespace harmonid::detail {

namespace {

double d(const Assignment& a, std::string_view name) { return a.get(name).to_double(); }

FloatValue from_sum(const FloatSum& s) { return {s.value, s.converged}; }

bool gamma_guard(std::initializer_list<R> gamma_args, std::initializer_list<R> series_denominators) {
  PoleGuard g;
  for (const auto& v : gamma_args) {
    g.gamma(v);
  }
  for (const auto& v : series_denominators) {
    g.gamma(v);  // b + k = 0 for some k exactly when b is a nonpositive integer
  }
  return static_cast<bool>(g);
}

Rational between(Rng& rng, const R& lo, const R& hi) { return sample_rational_between(rng, lo, hi); }

Check float_check(std::vector<Param> params, RegionSampler sampler, Predicate guard, FloatEvaluator lhs,
                  FloatEvaluator rhs) {
  Check c;
  c.label = "float";
  c.mode = Mode::floating;
  c.params = std::move(params);
  c.sampler = std::move(sampler);
  c.pole_guard = std::move(guard);
  c.lhs_float = std::move(lhs);
  c.rhs_float = std::move(rhs);
  c.tolerance = 1e-6;
  return c;
}

// Exact track: both sides of a terminating form, with the series denominators
// and the closed-form denominators required nonzero up to k = n.
Check terminating_check(TerminatingForm form, std::vector<std::string> names,
                        std::function<bool(unsigned, std::span<const R>)> guard) {
  Check c;
  c.label = "terminating";
  c.mode = Mode::exact;
  c.params.push_back(index_param());
  for (const auto& name : names) {
    c.params.push_back(rational_param(name));
  }
  auto collect = [names](const Assignment& a) {
    std::vector<R> values;
    values.reserve(names.size());
    for (const auto& name : names) {
      values.push_back(a.get(name));
    }
    return values;
  };
  c.pole_guard = [collect, guard](const Assignment& a) { return guard(a.nat("n"), collect(a)); };
  c.lhs = [collect, form](const Assignment& a) {
    return pfq_exact(terminating_series(form, a.nat("n"), collect(a)));
  };
  c.rhs = [collect, form](const Assignment& a) {
    return terminating_gamma_reduction(form, a.nat("n"), collect(a));
  };
  return c;
}

}  // namespace

void add_gamma_forms(std::vector<IdentitySpec>& out) {
  const R one(1);
  const R two(2);
  const R lo(1, 20);
  const R tenth(1, 10);

  // Dougall: excess 2(1+a-b-c-d) >= 2.
  {
    auto sampler = [lo, tenth](Rng& rng) {
      const R b = between(rng, lo, R(1));
      const R c = between(rng, lo, R(1));
      const R dd = between(rng, lo, R(1));
      const R a = b + c + dd + between(rng, tenth, R(3));
      return Assignment{{"a", a}, {"b", b}, {"c", c}, {"d", dd}};
    };
    auto guard = [one, two](const Assignment& as) {
      const R& a = as.get("a");
      const R& b = as.get("b");
      const R& c = as.get("c");
      const R& dd = as.get("d");
      return gamma_guard({one + a - b, one + a - c, one + a - dd, one + a - b - c - dd, one + a, one + a - b - c,
                          one + a - b - dd, one + a - c - dd},
                         {a / two, one + a - b, one + a - c, one + a - dd});
    };
    IdentitySpec spec{"dougall_5f4", "Dougall's 5F4 summation (very-well-poised, gamma quotient)", {}};
    spec.checks.push_back(float_check(
        {rational_param("a"), rational_param("b"), rational_param("c"), rational_param("d")}, sampler, guard,
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(dougall_series(d(a, "a"), d(a, "b"), d(a, "c"), d(a, "d")), s.tol, s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings&) {
          return FloatValue{dougall_gamma_rhs(d(a, "a"), d(a, "b"), d(a, "c"), d(a, "d")), true};
        }));
    spec.checks.push_back(terminating_check(
        TerminatingForm::dougall_d, {"a", "b", "c"}, [](unsigned n, std::span<const R> p) {
          const R& a = p[0];
          const R& b = p[1];
          const R& c = p[2];
          PoleGuard g;
          g.pochhammer(a / R(2), n)
              .pochhammer(R(1) + a - b, n)
              .pochhammer(R(1) + a - c, n)
              .pochhammer(R(1) + a + R(n), n);
          return static_cast<bool>(g);
        }));
    out.push_back(std::move(spec));
  }

  // Dixon: excess 2+a-2b-2c >= 2.
  {
    auto sampler = [lo, tenth](Rng& rng) {
      const R b = between(rng, lo, R(1));
      const R c = between(rng, lo, R(1));
      const R a = R(2) * b + R(2) * c + between(rng, tenth, R(3));
      return Assignment{{"a", a}, {"b", b}, {"c", c}};
    };
    auto guard = [one, two](const Assignment& as) {
      const R& a = as.get("a");
      const R& b = as.get("b");
      const R& c = as.get("c");
      return gamma_guard({one + a / two, one + a - b, one + a - c, one + a / two - b - c, one + a, one + a / two - b,
                          one + a / two - c, one + a - b - c},
                         {one + a - b, one + a - c});
    };
    IdentitySpec spec{"dixon_3f2", "Dixon's well-poised 3F2 summation (gamma quotient)", {}};
    spec.checks.push_back(float_check(
        {rational_param("a"), rational_param("b"), rational_param("c")}, sampler, guard,
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(dixon_series(d(a, "a"), d(a, "b"), d(a, "c")), s.tol, s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings&) {
          return FloatValue{dixon_gamma_rhs(d(a, "a"), d(a, "b"), d(a, "c")), true};
        }));
    spec.checks.push_back(
        terminating_check(TerminatingForm::dixon_c, {"a", "b"}, [](unsigned n, std::span<const R> p) {
          const R& a = p[0];
          const R& b = p[1];
          PoleGuard g;
          g.pochhammer(R(1) + a - b, n).pochhammer(R(1) + a + R(n), n).pochhammer(R(1) + a / R(2), n);
          return static_cast<bool>(g);
        }));
    out.push_back(std::move(spec));
  }

  // Dixon-like: excess 1+a-2b-2c >= 2.
  {
    auto sampler = [lo, tenth](Rng& rng) {
      const R b = between(rng, lo, R(1));
      const R c = between(rng, lo, R(1));
      const R a = R(1) + R(2) * b + R(2) * c + between(rng, tenth, R(3));
      return Assignment{{"a", a}, {"b", b}, {"c", c}};
    };
    auto guard = [one, two](const Assignment& as) {
      const R& a = as.get("a");
      const R& b = as.get("b");
      const R& c = as.get("c");
      return gamma_guard({one + a - b, (one + a) / two - b - c, (a - c) / two, (one + a - c) / two, one + a - b - c,
                          a / two, (one + a) / two - b, (one + a) / two - c, (two + a) / two - b - c, (one + a) / two,
                          (two + a) / two - b, a / two - c},
                         {one + a - b, a - c});
    };
    IdentitySpec spec{"dixonlike_3f2", "Dixon-like 3F2(a,b,c;1+a-b,a-c;1) as a sum of two gamma quotients", {}};
    spec.checks.push_back(float_check(
        {rational_param("a"), rational_param("b"), rational_param("c")}, sampler, guard,
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(dixonlike_series(d(a, "a"), d(a, "b"), d(a, "c")), s.tol, s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings&) {
          return FloatValue{dixonlike_gamma_rhs(d(a, "a"), d(a, "b"), d(a, "c")), true};
        }));
    spec.checks.push_back(
        terminating_check(TerminatingForm::dixonlike_c, {"a", "b"}, [](unsigned n, std::span<const R> p) {
          const R& a = p[0];
          const R& b = p[1];
          PoleGuard g;
          g.pochhammer(R(1) + a - b, n).pochhammer(a + R(n), n);
          return static_cast<bool>(g);
        }));
    out.push_back(std::move(spec));
  }

  // Whipple family: excess b >= 2.
  const auto whipple_params = [] {
    return std::vector<Param>{rational_param("a"), rational_param("b"), rational_param("c")};
  };
  const auto whipple_guard = [one, two](const Assignment& as, const R& shift) {
    const R a = as.get("a") + shift;  // shift 1 turns (a, 1-a) into (1+a, -a)
    const R& b = as.get("b");
    const R& c = as.get("c");
    return gamma_guard({c, one + two * b - c, (a + c) / two, (one + a - c) / two + b, (one - a + c) / two,
                        (two - a - c) / two + b},
                       {c, one + two * b - c});
  };
  {
    auto sampler = [lo, tenth](Rng& rng) {
      const R a = between(rng, lo, R(19, 20));
      const R b = between(rng, R(2), R(4));
      const R c = between(rng, tenth, R(2));
      return Assignment{{"a", a}, {"b", b}, {"c", c}};
    };
    IdentitySpec spec{"whipple", "Whipple's 3F2(a,1-a,b;c,1+2b-c;1) summation", {}};
    spec.checks.push_back(float_check(
        whipple_params(), sampler, [whipple_guard](const Assignment& a) { return whipple_guard(a, R(0)); },
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(whipple_series(d(a, "a"), d(a, "b"), d(a, "c")), s.tol, s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings&) {
          return FloatValue{whipple_gamma_rhs(d(a, "a"), d(a, "b"), d(a, "c")), true};
        }));
    out.push_back(std::move(spec));
  }

  // Shifted and combined forms need c > a for Gamma((c-a)/2).
  const auto shifted_sampler = [lo, tenth](Rng& rng) {
    const R a = between(rng, lo, R(9, 10));
    const R b = between(rng, R(2), R(4));
    const R c = a + between(rng, tenth, R(3, 2));
    return Assignment{{"a", a}, {"b", b}, {"c", c}};
  };
  {
    IdentitySpec spec{"whipple_shifted", "Whipple's summation after a -> 1+a: 3F2(1+a,-a,b;c,1+2b-c;1)", {}};
    spec.checks.push_back(float_check(
        whipple_params(), shifted_sampler, [whipple_guard](const Assignment& a) { return whipple_guard(a, R(1)); },
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(whipple_shifted_series(d(a, "a"), d(a, "b"), d(a, "c")), s.tol, s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings&) {
          return FloatValue{whipple_shifted_gamma_rhs(d(a, "a"), d(a, "b"), d(a, "c")), true};
        }));
    out.push_back(std::move(spec));
  }
  {
    IdentitySpec spec{"whipple_like", "half-sum of the two Whipple forms: 3F2(a,-a,b;c,1+2b-c;1)", {}};
    spec.checks.push_back(float_check(
        whipple_params(), shifted_sampler,
        [whipple_guard](const Assignment& a) { return whipple_guard(a, R(0)) && whipple_guard(a, R(1)); },
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(whipple_like_series(d(a, "a"), d(a, "b"), d(a, "c")), s.tol, s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings&) {
          return FloatValue{whipple_like_gamma_rhs(d(a, "a"), d(a, "b"), d(a, "c")), true};
        }));
    out.push_back(std::move(spec));
  }

  // Kummer: both series need excess >= 2, i.e. d+e-a-b-c >= 2 and e-a >= 2.
  {
    auto sampler = [lo, tenth](Rng& rng) {
      const R a = between(rng, lo, R(3, 2));
      const R b = between(rng, lo, R(3, 2));
      const R c = between(rng, lo, R(3, 2));
      const R dd = between(rng, R(1, 2), R(3));
      const R slack = std::max(R(2), R(2) + b + c - dd);
      const R e = a + slack + between(rng, tenth, R(2));
      return Assignment{{"a", a}, {"b", b}, {"c", c}, {"d", dd}, {"e", e}};
    };
    auto guard = [](const Assignment& as) {
      const R& a = as.get("a");
      const R& b = as.get("b");
      const R& c = as.get("c");
      const R& dd = as.get("d");
      const R& e = as.get("e");
      return gamma_guard({e, dd + e - a - b - c, e - a, dd + e - b - c}, {dd, e, dd + e - b - c});
    };
    IdentitySpec spec{"kummer", "Kummer's 3F2 transformation to 3F2(a,d-b,d-c;d,d+e-b-c;1)", {}};
    spec.checks.push_back(float_check(
        {rational_param("a"), rational_param("b"), rational_param("c"), rational_param("d"), rational_param("e")},
        sampler, guard,
        [](const Assignment& a, const SeriesSettings& s) {
          return from_sum(pfq_float(kummer_series(d(a, "a"), d(a, "b"), d(a, "c"), d(a, "d"), d(a, "e")), s.tol,
                                    s.max_terms));
        },
        [](const Assignment& a, const SeriesSettings& s) {
          const double av = d(a, "a");
          const double bv = d(a, "b");
          const double cv = d(a, "c");
          const double dv = d(a, "d");
          const double ev = d(a, "e");
          const FloatSum series = pfq_float(kummer_transformed_series(av, bv, cv, dv, ev), s.tol, s.max_terms);
          return FloatValue{kummer_gamma_prefactor(av, bv, cv, dv, ev) * series.value, series.converged};
        }));
    spec.checks.push_back(
        terminating_check(TerminatingForm::kummer_a, {"b", "c", "d", "e"}, [](unsigned n, std::span<const R> p) {
          const R& b = p[0];
          const R& c = p[1];
          const R& dd = p[2];
          const R& e = p[3];
          PoleGuard g;
          g.pochhammer(dd, n).pochhammer(e, n).pochhammer(dd + e - b - c, n);
          return static_cast<bool>(g);
        }));
    out.push_back(std::move(spec));
  }
}

}  // namespace harmonid::detail
