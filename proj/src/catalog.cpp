#include "harmonid/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "catalog_detail.hpp"
#include "harmonid/error.hpp"
#include "harmonid/special.hpp"

namespace harmonid {

std::string_view to_string(ParamKind kind) {
  switch (kind) {
    case ParamKind::natural:
      return "natural";
    case ParamKind::natural_positive:
      return "natural_positive";
    case ParamKind::rational:
      return "rational";
  }
  return "?";
}

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Assignment::Assignment(std::initializer_list<std::pair<std::string, Rational>> bindings) {
  for (const auto& [name, value] : bindings) {
    set(name, value);
  }
}

Assignment& Assignment::set(std::string name, Rational value) {
  auto it = std::find_if(bindings_.begin(), bindings_.end(), [&](const auto& b) { return b.first == name; });
  if (it != bindings_.end()) {
    it->second = std::move(value);
  } else {
    bindings_.emplace_back(std::move(name), std::move(value));
  }
  return *this;
}

const Rational& Assignment::get(std::string_view name) const {
  for (const auto& [key, value] : bindings_) {
    if (key == name) {
      return value;
    }
  }
  throw UsageError("unbound parameter: " + std::string(name));
}

unsigned Assignment::nat(std::string_view name) const {
  const Rational& v = get(name);
  if (!v.is_integer() || v.sign() < 0 || !v.fits_long()) {
    throw UsageError("parameter " + std::string(name) + " is not a natural number: " + v.to_string());
  }
  return static_cast<unsigned>(v.to_long());
}

bool Assignment::has(std::string_view name) const {
  return std::any_of(bindings_.begin(), bindings_.end(), [&](const auto& b) { return b.first == name; });
}

std::string to_string(const Assignment& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : a.bindings()) {
    os << (first ? "" : ", ") << name << "=" << value.to_string();
    first = false;
  }
  return os.str();
}

const std::vector<IdentitySpec>& catalog_entries() {
  static const std::vector<IdentitySpec> entries = [] {
    std::vector<IdentitySpec> out;
    detail::add_gamma_forms(out);
    detail::add_dixon_family(out);
    detail::add_dixonlike_family(out);
    detail::add_dougall_family(out);
    // The bisection relation is a helper lemma; list it after the theorems.
    auto it = std::find_if(out.begin(), out.end(), [](const IdentitySpec& s) { return s.id == "bisect_relation"; });
    if (it != out.end()) {
      std::rotate(it, it + 1, out.end());
    }
    return out;
  }();
  return entries;
}

const IdentitySpec* find_entry(std::string_view id) {
  for (const auto& e : catalog_entries()) {
    if (e.id == id) {
      return &e;
    }
  }
  return nullptr;
}

Evaluation evaluate(const Check& check, const Assignment& a, const SeriesSettings& settings) {
  if (check.pole_guard && !check.pole_guard(a)) {
    throw PoleError("pole at " + to_string(a), to_string(a));
  }
  if (check.mode == Mode::exact) {
    return ExactPair{check.lhs(a), check.rhs(a)};
  }
  return FloatPair{check.lhs_float(a, settings), check.rhs_float(a, settings)};
}

Evaluation evaluate(const IdentitySpec& spec, const Assignment& a, const SeriesSettings& settings) {
  return evaluate(spec.checks.front(), a, settings);
}

IdentitySpec perturbed(const IdentitySpec& spec, const Rational& delta, double float_delta) {
  IdentitySpec out = spec;
  for (auto& check : out.checks) {
    if (check.rhs) {
      check.rhs = [inner = check.rhs, delta](const Assignment& a) { return inner(a) + delta; };
    }
    if (check.rhs_float) {
      check.rhs_float = [inner = check.rhs_float, float_delta](const Assignment& a, const SeriesSettings& s) {
        FloatValue v = inner(a, s);
        v.value *= 1.0 + float_delta;
        return v;
      };
    }
  }
  return out;
}

bool reversal_symmetry_check(unsigned n, const Rational& x, const Rational& y) {
  const auto w = detail::dixon_weights(n, x, y);
  const auto h = harmonic_table(x, 2 * n);
  Rational forward(0);
  Rational backward(0);
  for (unsigned k = 0; k <= 2 * n; ++k) {
    forward += w[k] * h[k];
    backward += w[k] * h[2 * n - k];
  }
  return forward == backward;
}

namespace sub {

Rational a_n(unsigned n, const Rational& x, const Rational& y) {
  const Rational base = x - Rational(2) * y;
  const Rational h0 = harmonic1(n, base);
  return (harmonic1(n, x) - h0) * (harmonic1(n, Rational(2) * x - Rational(2) * y) - h0) - harmonic2(n, base);
}

Rational b_n(unsigned n, const Rational& x, const Rational& y) {
  const Rational base = x - Rational(2) * y;
  return harmonic1(n, x) + harmonic1(n, Rational(2) * x - Rational(2) * y) - Rational(2) * harmonic1(n, base);
}

Rational c_n(unsigned n, const Rational& x, const Rational& y, const Rational& z) {
  const Rational base = x - y - z - Rational(1);
  const Rational h0 = harmonic1(n, base);
  return (harmonic1(n, x - y) - h0) * (harmonic1(n, x - z) - h0);
}

}  // namespace sub

}  // namespace harmonid
