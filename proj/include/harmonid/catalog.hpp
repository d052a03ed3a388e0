#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "harmonid/rational.hpp"
#include "harmonid/sampling.hpp"

namespace harmonid {

enum class ParamKind { natural, natural_positive, rational };

/// Which sweep range a natural parameter runs over.
enum class SweepAxis { index, p, q, none };

struct Param {
  std::string name;
  ParamKind kind;
  SweepAxis axis = SweepAxis::none;
};

enum class Mode { exact, floating };

std::string_view to_string(ParamKind kind);
std::string_view to_string(Mode mode);

/// Concrete parameter binding. Naturals are stored as integer Rationals.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::string, Rational>> bindings);

  Assignment& set(std::string name, Rational value);

  const Rational& get(std::string_view name) const;
  unsigned nat(std::string_view name) const;
  bool has(std::string_view name) const;

  const std::vector<std::pair<std::string, Rational>>& bindings() const { return bindings_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::pair<std::string, Rational>> bindings_;
};

std::string to_string(const Assignment& a);

struct FloatValue {
  double value = 0.0;
  bool converged = true;
};

/// Truncation settings for float-mode series.
struct SeriesSettings {
  double tol = 1e-14;
  std::size_t max_terms = 500000;
};

using Predicate = std::function<bool(const Assignment&)>;
using ExactEvaluator = std::function<Rational(const Assignment&)>;
using FloatEvaluator = std::function<FloatValue(const Assignment&, const SeriesSettings&)>;
/// Draws one parameter point inside a float identity's admissible region.
using RegionSampler = std::function<Assignment(Rng&)>;

/// One verification track of an identity: either exact rational evaluation
/// of both sides, or floating evaluation at points from a region sampler.
struct Check {
  std::string label;
  Mode mode = Mode::exact;
  std::vector<Param> params;
  /// Domain restriction on the natural grid (q <= p-1 and similar).
  Predicate constraint;
  /// True only where neither side has a zero denominator factor.
  Predicate pole_guard;
  ExactEvaluator lhs;
  ExactEvaluator rhs;
  FloatEvaluator lhs_float;
  FloatEvaluator rhs_float;
  RegionSampler sampler;
  double tolerance = 0.0;
};

struct IdentitySpec {
  std::string id;
  std::string anchor;
  /// checks.front() is the primary track and fixes the identity's mode.
  std::vector<Check> checks;

  Mode mode() const { return checks.front().mode; }
  const std::vector<Param>& params() const { return checks.front().params; }
};

/// Every identity, in a fixed order.
const std::vector<IdentitySpec>& catalog_entries();

const IdentitySpec* find_entry(std::string_view id);

struct ExactPair {
  Rational lhs;
  Rational rhs;
};

struct FloatPair {
  FloatValue lhs;
  FloatValue rhs;
};

using Evaluation = std::variant<ExactPair, FloatPair>;

/// Both sides evaluated independently. Throws PoleError when the point is a
/// pole of either side.
Evaluation evaluate(const Check& check, const Assignment& a, const SeriesSettings& settings = {});
Evaluation evaluate(const IdentitySpec& spec, const Assignment& a, const SeriesSettings& settings = {});

/// Copy of spec whose exact right-hand sides are shifted by delta and whose
/// float right-hand sides are scaled by (1 + float_delta).
IdentitySpec perturbed(const IdentitySpec& spec, const Rational& delta, double float_delta = 1e-3);

/// Sum of W_k H_k(x) against sum of W_k H_{2n-k}(x) with
/// W_k = (-1)^k binom(2n,k) binom(x+k,k) binom(y+k,k) / [binom(x+2n,k) binom(y+2n,k)].
bool reversal_symmetry_check(unsigned n, const Rational& x, const Rational& y);

/// Named pieces of the derivative chains behind the two quadratic theorems.
namespace sub {

/// [H_n(x) - H_n(x-2y)][H_n(2x-2y) - H_n(x-2y)] - H_n^<2>(x-2y)
Rational a_n(unsigned n, const Rational& x, const Rational& y);
/// H_n(x) + H_n(2x-2y) - 2 H_n(x-2y)
Rational b_n(unsigned n, const Rational& x, const Rational& y);
/// [H_n(x-y) - H_n(x-y-z-1)][H_n(x-z) - H_n(x-y-z-1)]
Rational c_n(unsigned n, const Rational& x, const Rational& y, const Rational& z);

}  // namespace sub

}  // namespace harmonid
