// Sums weighted by the terminating Dixon series at a = -2n, b = 1+x, c = 1+y.

#include "catalog_detail.hpp"

namespace harmonid::detail {

std::vector<R> dixon_weights(unsigned n, const R& x, const R& y) {
  const unsigned m = 2 * n;
  const auto outer = binomial_table(R(m), m);
  const auto up_x = shifted_binomial_table(x, m);
  const auto up_y = shifted_binomial_table(y, m);
  const auto down_x = binomial_table(x + R(m), m);
  const auto down_y = binomial_table(y + R(m), m);
  std::vector<R> w;
  w.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    w.push_back(over(sign_of(k) * outer[k] * up_x[k] * up_y[k], down_x[k] * down_y[k]));
  }
  return w;
}

namespace {

// binom(x+n,n) binom(y+n,n) binom(1+x+y+2n,2n) / [binom(x+2n,2n) binom(y+2n,2n) binom(1+x+y+n,n)]
R dixon_closed_form(unsigned n, const R& x, const R& y) {
  const R s = R(1) + x + y;
  const R num = binom(x + R(n), n) * binom(y + R(n), n) * binom(s + R(2 * n), 2 * n);
  const R den = binom(x + R(2 * n), 2 * n) * binom(y + R(2 * n), 2 * n) * binom(s + R(n), n);
  return over(num, den);
}

bool dixon_guard(unsigned n, const R& x, const R& y) {
  PoleGuard g;
  g.binomial(x + R(2 * n), 2 * n).binomial(y + R(2 * n), 2 * n).binomial(R(1) + x + y + R(n), n);
  return static_cast<bool>(g);
}

// (-1)^k / binom(2n, k) for k = 0..2n.
std::vector<R> alternating_inverse_binomials(unsigned n) {
  const auto c = binomial_table(R(2 * n), 2 * n);
  std::vector<R> out;
  out.reserve(c.size());
  for (unsigned k = 0; k < c.size(); ++k) {
    out.push_back(over(sign_of(k), c[k]));
  }
  return out;
}

}  // namespace

void add_dixon_family(std::vector<IdentitySpec>& out) {
  const R half(1, 2);

  out.push_back(exact_identity(
      "eq_a", "terminating Dixon sum: a=-2n, b=1+x, c=1+y, closed form in binomials",
      {index_param(), rational_param("x"), rational_param("y")},
      [](const Assignment& a) { return dixon_guard(a.nat("n"), a.get("x"), a.get("y")); },
      [](const Assignment& a) {
        R sum(0);
        for (const auto& w : dixon_weights(a.nat("n"), a.get("x"), a.get("y"))) {
          sum += w;
        }
        return sum;
      },
      [](const Assignment& a) { return dixon_closed_form(a.nat("n"), a.get("x"), a.get("y")); }));

  out.push_back(exact_identity(
      "thm_a", "Dixon-weighted sum of H_k(x) = 1/2 * closed form * {H_n(x)-H_n(1+x+y)+H_{2n}(1+x+y)}",
      {index_param(), rational_param("x"), rational_param("y")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        PoleGuard g;
        g.harmonic(x, 2 * n).harmonic(R(1) + x + y, 2 * n);
        return g && dixon_guard(n, x, y);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const auto w = dixon_weights(n, a.get("x"), a.get("y"));
        const auto h = harmonic_table(a.get("x"), 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += w[k] * h[k];
        }
        return sum;
      },
      [half](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        const R s = R(1) + x + y;
        return half * dixon_closed_form(n, x, y) * (H(n, x) - H(n, s) + H(2 * n, s));
      }));

  out.push_back(exact_identity(
      "harmonic_aa", "Dixon-weighted sum of H_{p+k} = 1/2 * closed form * {H_p+H_{p+n}-H_{1+p+q+n}+H_{1+p+q+2n}}",
      {index_param(), p_param(), q_param()},
      [](const Assignment& a) { return dixon_guard(a.nat("n"), a.get("p"), a.get("q")); },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = dixon_weights(n, a.get("p"), a.get("q"));
        const auto h = harmonic_table(R(0), p + 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += w[k] * h[p + k];
        }
        return sum;
      },
      [half](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const unsigned q = a.nat("q");
        return half * dixon_closed_form(n, R(p), R(q)) *
               (H(p) + H(p + n) - H(1 + p + q + n) + H(1 + p + q + 2 * n));
      }));

  out.push_back(exact_identity(
      "eq_b", "y=x Dixon-weighted sum of H_k(x)^2 + H_k(x)H_{2n-k}(x), second-order closed form",
      {index_param(), rational_param("x")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        PoleGuard g;
        g.harmonic(x, 2 * n).harmonic(R(1) + R(2) * x, 2 * n);
        return g && dixon_guard(n, x, x);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const auto w = dixon_weights(n, x, x);
        const auto h = harmonic_table(x, 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += w[k] * (h[k] * h[k] + h[k] * h[2 * n - k]);
        }
        return sum;
      },
      [half](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R t = R(1) + R(2) * x;
        const R inner = H(n, t) - H(2 * n, t) - H(n, x);
        return half * dixon_closed_form(n, x, x) * (H2(n, t) - H2(2 * n, t) + inner * inner);
      }));

  out.push_back(exact_identity(
      "thm_b", "y=x Dixon-weighted sum of H_k^<2>(x) = 1/2 * closed form * H_n^<2>(x)",
      {index_param(), rational_param("x")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        PoleGuard g;
        g.harmonic(x, 2 * n);
        return g && dixon_guard(n, x, x);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const auto w = dixon_weights(n, x, x);
        const auto h2 = harmonic_table(x, 2 * n, HarmonicOrder(2));
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += w[k] * h2[k];
        }
        return sum;
      },
      [half](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        return half * dixon_closed_form(n, x, x) * H2(n, x);
      }));

  out.push_back(exact_identity(
      "harmonic_bb", "y=x Dixon-weighted sum of H_{p+k}^<2> = 1/2 * closed form * {H_{p+n}^<2>+H_p^<2>}",
      {index_param(), p_param()},
      [](const Assignment& a) { return dixon_guard(a.nat("n"), a.get("p"), a.get("p")); },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = dixon_weights(n, R(p), R(p));
        const auto h2 = harmonic_table(R(0), p + 2 * n, HarmonicOrder(2));
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += w[k] * h2[p + k];
        }
        return sum;
      },
      [half](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        return half * dixon_closed_form(n, R(p), R(p)) * (H2(p + n) + H2(p));
      }));

  out.push_back(exact_identity(
      "wgy_cor21", "sum (-1)^k/binom(2n,k) H_k H_{2n-k} = (1+2n)/(2(1+n)^2) {1/(1+n) - H_{1+2n}}",
      {index_param()}, [](const Assignment&) { return true; },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const auto c = alternating_inverse_binomials(n);
        const auto h = harmonic_table(R(0), 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += c[k] * h[k] * h[2 * n - k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R m = R(1) + R(n);
        return over(R(1) + R(2 * n), R(2) * m * m) * (m.reciprocal() - H(1 + 2 * n));
      }));

  out.push_back(exact_identity(
      "prop_a", "sum (-1)^k/binom(2n,k) H_k^2 = (1+2n)/(2+2n) {H_{1+2n}^2 - H_{1+2n}/(1+n) - H_{1+2n}^<2> + H_{1+n}^<2>}",
      {index_param()}, [](const Assignment&) { return true; },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const auto c = alternating_inverse_binomials(n);
        const auto h = harmonic_table(R(0), 2 * n);
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += c[k] * h[k] * h[k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R h = H(1 + 2 * n);
        return over(R(1) + R(2 * n), R(2) + R(2 * n)) *
               (h * h - over(h, R(1) + R(n)) - H2(1 + 2 * n) + H2(1 + n));
      }));

  out.push_back(exact_identity(
      "intro_id1", "sum (-1)^k/binom(2n,k) H_k^<2> = (1+2n)/(2+2n) H_n^<2>", {index_param()},
      [](const Assignment&) { return true; },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const auto c = alternating_inverse_binomials(n);
        const auto h2 = harmonic_table(R(0), 2 * n, HarmonicOrder(2));
        R sum(0);
        for (unsigned k = 0; k <= 2 * n; ++k) {
          sum += c[k] * h2[k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        return over(R(1) + R(2 * n), R(2) + R(2 * n)) * H2(n);
      }));
}

}  // namespace harmonid::detail
