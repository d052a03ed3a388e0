// Sums weighted by the terminating very-well-poised Dougall series.

#include "catalog_detail.hpp"

namespace harmonid::detail {

namespace {

const R kHalf(1, 2);

// (-1)^k binom(n,k) prod binom(u+k,k) / prod binom(v+k,k) * (base+step*k) / (shift+step'*k)
struct WellPoisedWeights {
  std::vector<R> ups;
  std::vector<R> downs;
  R lin_base;   // numerator linear factor: lin_base + lin_step * k
  R lin_step;
  R den_base;   // denominator linear factor: den_base + den_step * k
  R den_step;
};

std::vector<R> well_poised_weights(unsigned n, const WellPoisedWeights& spec) {
  const auto outer = binomial_table(R(n), n);
  std::vector<std::vector<R>> up_tables;
  std::vector<std::vector<R>> down_tables;
  for (const auto& u : spec.ups) {
    up_tables.push_back(shifted_binomial_table(u, n));
  }
  for (const auto& v : spec.downs) {
    down_tables.push_back(shifted_binomial_table(v, n));
  }
  std::vector<R> w;
  w.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    const R kk(k);
    R num = sign_of(k) * outer[k] * (spec.lin_base + spec.lin_step * kk);
    for (const auto& t : up_tables) {
      num *= t[k];
    }
    R den = spec.den_base + spec.den_step * kk;
    for (const auto& t : down_tables) {
      den *= t[k];
    }
    w.push_back(over(num, den));
  }
  return w;
}

PoleGuard& guard_weights(PoleGuard& g, unsigned n, const WellPoisedWeights& spec) {
  for (const auto& v : spec.downs) {
    g.shifted_binomial(v, n);
  }
  for (unsigned k = 0; k <= n; ++k) {
    g.nonzero(spec.den_base + spec.den_step * R(k));
  }
  return g;
}

// eq_e weights.
WellPoisedWeights dougall_spec(unsigned n, const R& x, const R& y, const R& z) {
  return {{x, y, z}, {x + R(n), x - y, x - z}, R(1) + x, R(2), R(1) + x + R(n), R(1)};
}

// binom(x+n,n) binom(x-y-z-1+n,n) / [binom(x-y+n,n) binom(x-z+n,n)]
R dougall_closed_form(unsigned n, const R& x, const R& y, const R& z) {
  const R nn(n);
  return over(binom(x + nn, n) * binom(x - y - z - R(1) + nn, n), binom(x - y + nn, n) * binom(x - z + nn, n));
}

bool dougall_guard(unsigned n, const R& x, const R& y, const R& z) {
  PoleGuard g;
  guard_weights(g, n, dougall_spec(n, x, y, z));
  g.binomial(x - y + R(n), n).binomial(x - z + R(n), n);
  return static_cast<bool>(g);
}

// thm_e / thm_g weights: x -> 2x, y -> 2y, z -> x in eq_e. thm_g drops the y factors.
WellPoisedWeights thm_e_spec(unsigned n, const R& x, const R& y) {
  const R x2 = R(2) * x;
  return {{x2, R(2) * y}, {x2 + R(n), x2 - R(2) * y}, R(1) + x2, R(2), R(1) + x2 + R(n), R(1)};
}

WellPoisedWeights thm_g_spec(unsigned n, const R& x) {
  const R x2 = R(2) * x;
  return {{x2}, {x2 + R(n)}, R(1) + x2, R(2), R(1) + x2 + R(n), R(1)};
}

// thm_f / thm_h weights: x -> x-1/2, z -> x/2 in eq_f. thm_h takes y = x/2 as well.
WellPoisedWeights thm_f_spec(unsigned n, const R& x, const R& y) {
  return {{x * kHalf, x - kHalf, y},
          {(x - R(1)) * kHalf, x - kHalf + R(n), x - y - kHalf},
          R(1) + R(2) * x,
          R(4),
          R(1) + R(2) * x + R(2 * n),
          R(2)};
}

WellPoisedWeights thm_h_spec(unsigned n, const R& x) {
  return {{x * kHalf, x * kHalf, x - kHalf},
          {(x - R(1)) * kHalf, (x - R(1)) * kHalf, x - kHalf + R(n)},
          R(1) + R(2) * x,
          R(4),
          R(1) + R(2) * x + R(2 * n),
          R(2)};
}

bool thm_e_guard(unsigned n, const R& x, const R& y) {
  PoleGuard g;
  guard_weights(g, n, thm_e_spec(n, x, y));
  g.binomial(x + R(n), n).binomial(R(2) * x - R(2) * y + R(n), n);
  return static_cast<bool>(g);
}

R thm_e_closed_form(unsigned n, const R& x, const R& y) {
  const R nn(n);
  return over(binom(R(2) * x + nn, n) * binom(x - R(2) * y - R(1) + nn, n),
              binom(x + nn, n) * binom(R(2) * x - R(2) * y + nn, n));
}

bool thm_f_guard(unsigned n, const R& x, const R& y) {
  PoleGuard g;
  guard_weights(g, n, thm_f_spec(n, x, y));
  g.binomial((x - R(1)) * kHalf + R(n), n).binomial(x - y - kHalf + R(n), n);
  return static_cast<bool>(g);
}

R thm_f_closed_form(unsigned n, const R& x, const R& y) {
  const R nn(n);
  return over(binom(x - kHalf + nn, n) * binom((x - R(3)) * kHalf - y + nn, n),
              binom((x - R(1)) * kHalf + nn, n) * binom(x - y - kHalf + nn, n));
}

bool thm_g_guard(unsigned n, const R& x) {
  PoleGuard g;
  guard_weights(g, n, thm_g_spec(n, x));
  g.binomial(x + R(n), n);
  return static_cast<bool>(g);
}

R thm_g_closed_form(unsigned n, const R& x) {
  const R nn(n);
  const R b = binom(x + nn, n);
  return over(binom(R(2) * x + nn, n), R(2 * n) * b * b);
}

bool thm_h_guard(unsigned n, const R& x) {
  PoleGuard g;
  guard_weights(g, n, thm_h_spec(n, x));
  g.binomial((x - R(1)) * kHalf + R(n), n);
  return static_cast<bool>(g);
}

R thm_h_closed_form(unsigned n, const R& x) {
  const R nn(n);
  const R b = binom((x - R(1)) * kHalf + nn, n);
  return over(binom(x - kHalf + nn, n) * binom(R(-3, 2) + nn, n), R(4) * b * b);
}

R weighted_sum(const std::vector<R>& w, const std::vector<R>& values) {
  R sum(0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    sum += w[k] * values[k];
  }
  return sum;
}

}  // namespace

void add_dougall_family(std::vector<IdentitySpec>& out) {
  const std::vector<Param> nxyz = {index_param(), rational_param("x"), rational_param("y"), rational_param("z")};
  const std::vector<Param> nxy = {index_param(), rational_param("x"), rational_param("y")};

  out.push_back(exact_identity(
      "eq_e", "terminating Dougall sum: a=1+x, b=1+y, c=1+z, d=-n, closed form in binomials", nxyz,
      [](const Assignment& a) { return dougall_guard(a.nat("n"), a.get("x"), a.get("y"), a.get("z")); },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        R sum(0);
        for (const auto& w : well_poised_weights(n, dougall_spec(n, a.get("x"), a.get("y"), a.get("z")))) {
          sum += w;
        }
        return sum;
      },
      [](const Assignment& a) { return dougall_closed_form(a.nat("n"), a.get("x"), a.get("y"), a.get("z")); }));

  out.push_back(exact_identity(
      "eq_f", "z-derivative of the Dougall sum: weights times H_k(z)+H_k(x-z) = closed form {H_n(x-z)-H_n(x-y-z-1)}",
      nxyz,
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        const R& z = a.get("z");
        PoleGuard g;
        g.harmonic(z, n).harmonic(x - z, n).harmonic(x - y - z - R(1), n);
        return g && dougall_guard(n, x, y, z);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& z = a.get("z");
        const auto w = well_poised_weights(n, dougall_spec(n, x, a.get("y"), z));
        const auto hz = harmonic_table(z, n);
        const auto hxz = harmonic_table(x - z, n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * (hz[k] + hxz[k]);
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        const R& z = a.get("z");
        return dougall_closed_form(n, x, y, z) * (H(n, x - z) - H(n, x - y - z - R(1)));
      }));

  out.push_back(exact_identity(
      "thm_e", "well-poised sum of H_k(x) = 1/2 * closed form * {H_n(x)-H_n(x-2y-1)}", nxy,
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        PoleGuard g;
        g.harmonic(x, n).harmonic(x - R(2) * y - R(1), n);
        return g && thm_e_guard(n, x, y);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        return weighted_sum(well_poised_weights(n, thm_e_spec(n, x, a.get("y"))), harmonic_table(x, n));
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        return kHalf * thm_e_closed_form(n, x, y) * (H(n, x) - H(n, x - R(2) * y - R(1)));
      }));

  out.push_back(exact_identity(
      "harmonic_ee", "well-poised sum of H_{p+k} = 1/2 * closed form * {H_p+H_{p+n}+H_{p-q-1}-H_{p-q+n-1}}",
      {index_param(), p_param(), q_param()},
      [](const Assignment& a) { return thm_e_guard(a.nat("n"), a.get("p"), a.get("q") * kHalf); },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = well_poised_weights(n, thm_e_spec(n, R(p), a.get("q") * kHalf));
        const auto h = harmonic_table(R(0), p + n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[p + k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const unsigned q = a.nat("q");
        const R nn(n);
        const R pp(p);
        const R qq(q);
        const R closed = over(binom(R(2) * pp + nn, n) * binom(pp - qq + nn - R(1), n),
                              binom(pp + nn, n) * binom(R(2) * pp - qq + nn, n));
        return kHalf * closed * (H(p) + H(p + n) + H(p - q - 1) - H(p - q + n - 1));
      },
      [](const Assignment& a) { return a.nat("q") + 1 <= a.nat("p"); }));

  out.push_back(exact_identity(
      "thm_f", "bisected well-poised sum of H_{2k}(x) = 1/2 * closed form * {H_n((x-1)/2)-H_n((x-3)/2-y)}", nxy,
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        PoleGuard g;
        g.harmonic(x, 2 * n).harmonic((x - R(1)) * kHalf, n).harmonic((x - R(3)) * kHalf - y, n);
        return g && thm_f_guard(n, x, y);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const auto w = well_poised_weights(n, thm_f_spec(n, x, a.get("y")));
        const auto h = harmonic_table(x, 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[2 * k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        return kHalf * thm_f_closed_form(n, x, y) * (H(n, (x - R(1)) * kHalf) - H(n, (x - R(3)) * kHalf - y));
      }));

  out.push_back(exact_identity(
      "harmonic_ff", "bisected well-poised sum of H_{p+2k} = 1/2 * closed form * {2H_p+H_n((p-1)/2)-H_n((p-3)/2-q)}",
      {index_param(), p_param(), q_param()},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& p = a.get("p");
        const R& q = a.get("q");
        PoleGuard g;
        g.harmonic((p - R(1)) * kHalf, n).harmonic((p - R(3)) * kHalf - q, n);
        return g && thm_f_guard(n, p, q);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = well_poised_weights(n, thm_f_spec(n, R(p), a.get("q")));
        const auto h = harmonic_table(R(0), p + 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[p + 2 * k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const R pp(p);
        const R& q = a.get("q");
        return kHalf * thm_f_closed_form(n, pp, q) *
               (R(2) * H(p) + H(n, (pp - R(1)) * kHalf) - H(n, (pp - R(3)) * kHalf - q));
      }));

  out.push_back(exact_identity(
      "thm_g", "well-poised sum of H_k(x)^2 = 1/(2n) binom(2x+n,n)/binom(x+n,n)^2 {H_{n-1}-H_n(x)}",
      {positive_index_param(), rational_param("x")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        PoleGuard g;
        g.harmonic(x, n);
        return g && thm_g_guard(n, x);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        auto h = harmonic_table(x, n);
        for (auto& v : h) {
          v = v * v;
        }
        return weighted_sum(well_poised_weights(n, thm_g_spec(n, x)), h);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        return thm_g_closed_form(n, x) * (H(n - 1) - H(n, x));
      }));

  out.push_back(exact_identity(
      "harmonic_gg", "well-poised sum of H_{p+k}^2 = 1/(2n) binom(2p+n,n)/binom(p+n,n)^2 {H_{n-1}-H_p-H_{p+n}}",
      {positive_index_param(), p_param()}, [](const Assignment& a) { return thm_g_guard(a.nat("n"), a.get("p")); },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = well_poised_weights(n, thm_g_spec(n, R(p)));
        const auto h = harmonic_table(R(0), p + n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[p + k] * h[p + k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        return thm_g_closed_form(n, R(p)) * (H(n - 1) - H(p) - H(p + n));
      }));

  out.push_back(exact_identity(
      "thm_h", "bisected well-poised sum of H_{2k}(x)^2 = 1/4 closed form {[H_n((x-1)/2)-H_n(-3/2)]^2 - H_n^<2>(-3/2)}",
      {index_param(), rational_param("x")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        PoleGuard g;
        g.harmonic(x, 2 * n).harmonic((x - R(1)) * kHalf, n);
        return g && thm_h_guard(n, x);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const auto w = well_poised_weights(n, thm_h_spec(n, x));
        const auto h = harmonic_table(x, 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[2 * k] * h[2 * k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R d = H(n, (x - R(1)) * kHalf) - H(n, R(-3, 2));
        return thm_h_closed_form(n, x) * (d * d - H2(n, R(-3, 2)));
      }));

  out.push_back(exact_identity(
      "harmonic_hh",
      "bisected well-poised sum of H_{p+2k}^2 = 1/4 closed form {[...]^2 - H_n^<2>(-3/2) + 4H_p[H_p+H_n((p-1)/2)-H_n(-3/2)]}",
      {index_param(), p_param()},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& p = a.get("p");
        PoleGuard g;
        g.harmonic((p - R(1)) * kHalf, n);
        return g && thm_h_guard(n, p);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = well_poised_weights(n, thm_h_spec(n, R(p)));
        const auto h = harmonic_table(R(0), p + 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[p + 2 * k] * h[p + 2 * k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const R pp(p);
        const R hp = H(p);
        const R hm = H(n, (pp - R(1)) * kHalf) - H(n, R(-3, 2));
        return thm_h_closed_form(n, pp) * (hm * hm - H2(n, R(-3, 2)) + R(4) * hp * (hp + hm));
      }));
}

}  // namespace harmonid::detail
