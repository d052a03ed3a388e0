// Sums weighted by the terminating Dixon-like series and the bisection relation.

#include "catalog_detail.hpp"

namespace harmonid::detail {

namespace {

const R kHalf(1, 2);
const R kQuarter(1, 4);

// (-1)^k binom(n,k) prod binom(u+k,k) / prod binom(v+k,k), k = 0..n.
std::vector<R> hyper_weights(unsigned n, const std::vector<R>& ups, const std::vector<R>& downs) {
  const auto outer = binomial_table(R(n), n);
  std::vector<std::vector<R>> up_tables;
  std::vector<std::vector<R>> down_tables;
  for (const auto& u : ups) {
    up_tables.push_back(shifted_binomial_table(u, n));
  }
  for (const auto& v : downs) {
    down_tables.push_back(shifted_binomial_table(v, n));
  }
  std::vector<R> w;
  w.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    R num = sign_of(k) * outer[k];
    for (const auto& t : up_tables) {
      num *= t[k];
    }
    R den(1);
    for (const auto& t : down_tables) {
      den *= t[k];
    }
    w.push_back(over(num, den));
  }
  return w;
}

// Weights of the Dixon-like sum after a -> 1+x, b -> 1+y, c = -n.
std::vector<R> dixonlike_weights(unsigned n, const R& x, const R& y) {
  return hyper_weights(n, {x, y}, {x + R(n), x - y});
}

bool dixonlike_guard(unsigned n, const R& x, const R& y) {
  PoleGuard g;
  g.shifted_binomial(x + R(n), n).shifted_binomial(x - y, n).binomial(x + R(2 * n), n).binomial(x - y + R(n), n);
  return static_cast<bool>(g);
}

struct DixonlikeParts {
  R first;   // binom(x/2+n,n) binom((x-1)/2-y+n,n) / den
  R second;  // binom((x-1)/2+n,n) binom((x-2)/2-y+n,n) / den
};

DixonlikeParts dixonlike_parts(unsigned n, const R& x, const R& y) {
  const R nn(n);
  const R den = binom(x + R(2 * n), n) * binom(x - y + nn, n);
  return {over(binom(x * kHalf + nn, n) * binom((x - R(1)) * kHalf - y + nn, n), den),
          over(binom((x - R(1)) * kHalf + nn, n) * binom((x - R(2)) * kHalf - y + nn, n), den)};
}

// Weights of thm_c: (-1)^k binom(n,k) binom(2x+k,k) / binom(2x+n+k,k).
std::vector<R> thm_c_weights(unsigned n, const R& x) { return hyper_weights(n, {R(2) * x}, {R(2) * x + R(n)}); }

// Weights of thm_d: (-1)^k binom(n,k) binom(x/2+k,k) binom(x-1/2+k,k) / [binom((x-1)/2+k,k) binom(x-1/2+n+k,k)].
std::vector<R> thm_d_weights(unsigned n, const R& x) {
  return hyper_weights(n, {x * kHalf, x - kHalf}, {(x - R(1)) * kHalf, x - kHalf + R(n)});
}

bool thm_d_guard(unsigned n, const R& x) {
  const R nn(n);
  PoleGuard g;
  g.shifted_binomial((x - R(1)) * kHalf, n)
      .shifted_binomial(x - kHalf + nn, n)
      .binomial((x - R(1)) * kHalf + nn, n)
      .binomial(x - kHalf + R(2 * n), n);
  return static_cast<bool>(g);
}

struct ThmDParts {
  R first;   // 4^{n-1} binom(x/2-1/4+n,n) binom(-3/4+n,n) / den
  R second;  // 4^{n-1} binom(x/2-3/4+n,n) binom(-5/4+n,n) / den
};

ThmDParts thm_d_parts(unsigned n, const R& x) {
  const R nn(n);
  const R scale = R(4).pow(static_cast<int>(n) - 1);
  const R den = binom((x - R(1)) * kHalf + nn, n) * binom(x - kHalf + R(2 * n), n);
  return {scale * over(binom(x * kHalf - kQuarter + nn, n) * binom(R(-3, 4) + nn, n), den),
          scale * over(binom(x * kHalf - R(3, 4) + nn, n) * binom(R(-5, 4) + nn, n), den)};
}

}  // namespace

void add_dixonlike_family(std::vector<IdentitySpec>& out) {
  out.push_back(exact_identity(
      "eq_c", "terminating Dixon-like sum: a=1+x, b=1+y, c=-n, two-term binomial closed form",
      {index_param(), rational_param("x"), rational_param("y")},
      [](const Assignment& a) { return dixonlike_guard(a.nat("n"), a.get("x"), a.get("y")); },
      [](const Assignment& a) {
        R sum(0);
        for (const auto& w : dixonlike_weights(a.nat("n"), a.get("x"), a.get("y"))) {
          sum += w;
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const auto parts = dixonlike_parts(n, a.get("x"), a.get("y"));
        return two_pow(2 * static_cast<int>(n) - 1) * (parts.first + parts.second);
      }));

  out.push_back(exact_identity(
      "eq_d", "y-derivative of the Dixon-like sum: weights times H_k(y)+H_k(x-y)",
      {index_param(), rational_param("x"), rational_param("y")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        PoleGuard g;
        g.harmonic(y, n).harmonic(x - y, n).harmonic((x - R(1)) * kHalf - y, n).harmonic((x - R(2)) * kHalf - y, n);
        return g && dixonlike_guard(n, x, y);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        const auto w = dixonlike_weights(n, x, y);
        const auto hy = harmonic_table(y, n);
        const auto hxy = harmonic_table(x - y, n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * (hy[k] + hxy[k]);
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R& y = a.get("y");
        const auto parts = dixonlike_parts(n, x, y);
        const R hxy = H(n, x - y);
        return two_pow(2 * static_cast<int>(n) - 1) *
               (parts.first * (hxy - H(n, (x - R(1)) * kHalf - y)) +
                parts.second * (hxy - H(n, (x - R(2)) * kHalf - y)));
      }));

  out.push_back(exact_identity(
      "thm_c",
      "sum (-1)^k binom(n,k) binom(2x+k,k)/binom(2x+n+k,k) H_k(x) = 4^{n-1}[...]{H_n(x)+H_n-2H_{2n}} - 4^{n-1}/n [...]",
      {positive_index_param(), rational_param("x")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        PoleGuard g;
        g.shifted_binomial(R(2) * x + R(n), n)
            .binomial(R(2) * x + R(2 * n), n)
            .binomial(x + R(n), n)
            .harmonic(x, n);
        return static_cast<bool>(g);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const auto w = thm_c_weights(n, a.get("x"));
        const auto h = harmonic_table(a.get("x"), n);
        R sum(0);
        for (unsigned k = 0; k <= n; ++k) {
          sum += w[k] * h[k];
        }
        return sum;
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const R nn(n);
        const R scale = R(4).pow(static_cast<int>(n) - 1);
        const R b2 = binom(R(2) * x + R(2 * n), n);
        return scale * over(binom(nn - kHalf, n), b2) * (H(n, x) + H(n) - R(2) * H(2 * n)) -
               over(scale, nn) * over(binom(x + nn - kHalf, n), b2 * binom(x + nn, n));
      }));

  out.push_back(exact_identity(
      "harmonic_cc",
      "sum (-1)^k binom(n,k) binom(2p+k,k)/binom(2p+n+k,k) H_{p+k} = 4^{n-1}[...]{H_{p+n}+H_p+H_n-2H_{2n}} - 4^{n-1}/n [...]",
      {positive_index_param(), p_param()},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& p = a.get("p");
        PoleGuard g;
        g.shifted_binomial(R(2) * p + R(n), n).binomial(R(2) * p + R(2 * n), n).binomial(p + R(n), n);
        return static_cast<bool>(g);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = thm_c_weights(n, R(p));
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
        const R nn(n);
        const R pp(p);
        const R scale = R(4).pow(static_cast<int>(n) - 1);
        const R b2 = binom(R(2) * pp + R(2 * n), n);
        return scale * over(binom(nn - kHalf, n), b2) * (H(p + n) + H(p) + H(n) - R(2) * H(2 * n)) -
               over(scale, nn) * over(binom(pp + nn - kHalf, n), b2 * binom(pp + nn, n));
      }));

  out.push_back(exact_identity(
      "thm_d", "bisected Dixon-like sum of H_{2k}(x), closed form with H_n((x-1)/2)-H_n(-3/4) and -H_n(-5/4)",
      {index_param(), rational_param("x")},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        PoleGuard g;
        g.harmonic(x, 2 * n).harmonic((x - R(1)) * kHalf, n);
        return g && thm_d_guard(n, x);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& x = a.get("x");
        const auto w = thm_d_weights(n, x);
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
        const auto parts = thm_d_parts(n, x);
        const R hx = H(n, (x - R(1)) * kHalf);
        return parts.first * (hx - H(n, R(-3, 4))) + parts.second * (hx - H(n, R(-5, 4)));
      }));

  out.push_back(exact_identity(
      "harmonic_dd", "bisected Dixon-like sum of H_{p+2k}, closed form with 2H_p+H_n((p-1)/2)-H_n(-3/4) and -H_n(-5/4)",
      {index_param(), p_param()},
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const R& p = a.get("p");
        PoleGuard g;
        g.harmonic((p - R(1)) * kHalf, n);
        return g && thm_d_guard(n, p);
      },
      [](const Assignment& a) {
        const unsigned n = a.nat("n");
        const unsigned p = a.nat("p");
        const auto w = thm_d_weights(n, R(p));
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
        const auto parts = thm_d_parts(n, pp);
        const R common = R(2) * H(p) + H(n, (pp - R(1)) * kHalf);
        return parts.first * (common - H(n, R(-3, 4))) + parts.second * (common - H(n, R(-5, 4)));
      }));

  out.push_back(exact_identity(
      "bisect_relation", "H_k(x/2) + H_k((x-1)/2) = 2 H_{2k}(x)", {index_param("k"), rational_param("x")},
      [](const Assignment& a) {
        const unsigned k = a.nat("k");
        const R& x = a.get("x");
        PoleGuard g;
        g.harmonic(x * kHalf, k).harmonic((x - R(1)) * kHalf, k).harmonic(x, 2 * k);
        return static_cast<bool>(g);
      },
      [](const Assignment& a) {
        const unsigned k = a.nat("k");
        const R& x = a.get("x");
        return H(k, x * kHalf) + H(k, (x - R(1)) * kHalf);
      },
      [](const Assignment& a) { return R(2) * H(2 * a.nat("k"), a.get("x")); }));
}

}  // namespace harmonid::detail
