#include "harmonid/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <json.hpp>
#include <set>
#include <sstream>
#include <thread>

#include "harmonid/error.hpp"
#include "harmonid/hypergeom.hpp"
#include "harmonid/special.hpp"

namespace harmonid {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One enumerated point of a check. A point the guard rejected is kept so the
// skip is counted in enumeration order.
struct Point {
  Assignment assignment;
  bool pole = false;
};

struct Outcome {
  enum Kind { pass, fail, skip } kind = pass;
  std::string lhs;
  std::string rhs;
  std::string note;
};

unsigned axis_max(SweepAxis axis, const SweepConfig& cfg) {
  switch (axis) {
    case SweepAxis::p:
      return cfg.p_max;
    case SweepAxis::q:
      return cfg.q_max;
    default:
      return cfg.n_max;
  }
}

// p and q start at 0; index axes start at 1.
unsigned axis_min(const Param& p) { return p.axis == SweepAxis::p || p.axis == SweepAxis::q ? 0 : 1; }

bool guard_ok(const Check& check, const Assignment& a) { return !check.pole_guard || check.pole_guard(a); }

std::vector<Point> exact_points(const Check& check, const std::string& id, std::size_t track, const SweepConfig& cfg) {
  std::vector<const Param*> naturals;
  std::vector<const Param*> rationals;
  for (const auto& p : check.params) {
    (p.kind == ParamKind::rational ? rationals : naturals).push_back(&p);
  }

  Rng rng(derive_seed(cfg.seed, id, track));
  const RationalBounds bounds{cfg.numerator_bound, cfg.denominator_bound};
  std::vector<Point> points;

  std::vector<unsigned> tuple;
  for (const auto* p : naturals) {
    tuple.push_back(axis_min(*p));
  }
  for (const auto* p : naturals) {
    if (axis_min(*p) > axis_max(p->axis, cfg)) {
      return points;
    }
  }

  while (true) {
    Assignment base;
    for (std::size_t i = 0; i < naturals.size(); ++i) {
      base.set(naturals[i]->name, Rational(tuple[i]));
    }
    if (!check.constraint || check.constraint(base)) {
      if (rationals.empty()) {
        points.push_back({base, !guard_ok(check, base)});
      } else {
        for (unsigned slot = 0; slot < cfg.rational_samples; ++slot) {
          Point point{base, true};
          for (unsigned attempt = 0; attempt < kSampleRetryCap; ++attempt) {
            Assignment a = base;
            for (const auto* p : rationals) {
              a.set(p->name, sample_rational_unguarded(rng, bounds));
            }
            if (guard_ok(check, a)) {
              point = {std::move(a), false};
              break;
            }
          }
          points.push_back(std::move(point));
        }
      }
    }

    // Lexicographic increment, last parameter fastest.
    std::size_t i = naturals.size();
    while (i > 0) {
      --i;
      if (tuple[i] < axis_max(naturals[i]->axis, cfg)) {
        ++tuple[i];
        break;
      }
      tuple[i] = axis_min(*naturals[i]);
      if (i == 0) {
        return points;
      }
    }
    if (naturals.empty()) {
      return points;
    }
  }
}

std::vector<Point> float_points(const Check& check, const std::string& id, std::size_t track, const SweepConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, id, track));
  std::vector<Point> points;
  for (unsigned slot = 0; slot < cfg.rational_samples; ++slot) {
    Point point{{}, true};
    for (unsigned attempt = 0; attempt < kSampleRetryCap; ++attempt) {
      Assignment a = check.sampler(rng);
      if (guard_ok(check, a)) {
        point = {std::move(a), false};
        break;
      }
    }
    points.push_back(std::move(point));
  }
  return points;
}

Outcome evaluate_point(const Check& check, const Point& point, const SweepConfig& cfg) {
  if (point.pole) {
    return {Outcome::skip, {}, {}, {}};
  }
  try {
    const SeriesSettings settings{1e-14, cfg.max_terms};
    const Evaluation ev = evaluate(check, point.assignment, settings);
    if (const auto* e = std::get_if<ExactPair>(&ev)) {
      if (e->lhs == e->rhs) {
        return {Outcome::pass, {}, {}, {}};
      }
      return {Outcome::fail, e->lhs.to_string(), e->rhs.to_string(), "exact values differ"};
    }
    const auto& f = std::get<FloatPair>(ev);
    const std::string lhs = fmt_double(f.lhs.value);
    const std::string rhs = fmt_double(f.rhs.value);
    if (!f.lhs.converged || !f.rhs.converged) {
      return {Outcome::fail, lhs, rhs, "series did not converge"};
    }
    const double err = std::abs(f.lhs.value - f.rhs.value);
    if (std::isfinite(err) && err <= cfg.float_tol * std::max(1.0, std::abs(f.rhs.value))) {
      return {Outcome::pass, {}, {}, {}};
    }
    return {Outcome::fail, lhs, rhs, "relative error " + fmt_double(err / std::max(1.0, std::abs(f.rhs.value)))};
  } catch (const PoleError& e) {
    return {Outcome::fail, {}, {}, std::string("pole at guarded point: ") + e.what()};
  } catch (const Error& e) {
    return {Outcome::fail, {}, {}, std::string("evaluation error: ") + e.what()};
  }
}

std::vector<Outcome> evaluate_all(const Check& check, const std::vector<Point>& points, const SweepConfig& cfg) {
  std::vector<Outcome> outcomes(points.size());
  unsigned workers = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      outcomes[i] = evaluate_point(check, points[i], cfg);
    }
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < points.size(); i = next++) {
        outcomes[i] = evaluate_point(check, points[i], cfg);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  return outcomes;
}

nlohmann::ordered_json config_json(const SweepConfig& cfg) {
  return {{"n_max", cfg.n_max},
          {"p_max", cfg.p_max},
          {"q_max", cfg.q_max},
          {"rational_samples", cfg.rational_samples},
          {"seed", cfg.seed},
          {"numerator_bound", cfg.numerator_bound},
          {"denominator_bound", cfg.denominator_bound},
          {"float_tol", fmt_double(cfg.float_tol)},
          {"max_terms", cfg.max_terms}};
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.numerator_bound == 0 || cfg.denominator_bound == 0) {
    throw UsageError("sampling bounds must be positive");
  }
  if (!(cfg.float_tol > 0.0) || !std::isfinite(cfg.float_tol)) {
    throw UsageError("float tolerance must be positive");
  }
  if (cfg.max_terms == 0) {
    throw UsageError("max_terms must be positive");
  }
}

VerificationReport run_identity(const IdentitySpec& spec, const SweepConfig& cfg) {
  validate(cfg);
  const auto start = Clock::now();
  VerificationReport report;
  report.identity_id = spec.id;
  report.mode = spec.mode();
  report.config = cfg;

  for (std::size_t track = 0; track < spec.checks.size(); ++track) {
    const Check& check = spec.checks[track];
    const auto points = check.mode == Mode::exact ? exact_points(check, spec.id, track, cfg)
                                                  : float_points(check, spec.id, track, cfg);
    const auto outcomes = evaluate_all(check, points, cfg);

    TrackSummary summary{check.label, check.mode};
    for (std::size_t i = 0; i < points.size(); ++i) {
      ++summary.total;
      switch (outcomes[i].kind) {
        case Outcome::pass:
          ++summary.passed;
          break;
        case Outcome::skip:
          ++summary.skipped_pole;
          break;
        case Outcome::fail:
          ++summary.failed;
          if (report.counterexamples.size() < kMaxCounterexamples) {
            report.counterexamples.push_back(
                {check.label, points[i].assignment, outcomes[i].lhs, outcomes[i].rhs, outcomes[i].note});
          }
          break;
      }
    }
    report.total += summary.total;
    report.passed += summary.passed;
    report.failed += summary.failed;
    report.skipped_pole += summary.skipped_pole;
    report.tracks.push_back(std::move(summary));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::vector<VerificationReport> run_all(const SweepConfig& cfg, const std::vector<std::string>& filter) {
  validate(cfg);
  for (const auto& id : filter) {
    if (find_entry(id) == nullptr) {
      throw UsageError("unknown identity id: " + id);
    }
  }
  const std::set<std::string> wanted(filter.begin(), filter.end());
  std::vector<VerificationReport> reports;
  for (const auto& spec : catalog_entries()) {
    if (wanted.empty() || wanted.count(spec.id) != 0) {
      reports.push_back(run_identity(spec, cfg));
    }
  }
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed == 0; });
}

std::string to_json(const std::vector<VerificationReport>& reports, const SweepConfig& cfg, bool timing) {
  nlohmann::ordered_json root;
  root["config"] = config_json(cfg);
  auto& list = root["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["identity_id"] = r.identity_id;
    j["mode"] = to_string(r.mode);
    j["total"] = r.total;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["skipped_pole"] = r.skipped_pole;
    auto& tracks = j["tracks"] = nlohmann::ordered_json::array();
    for (const auto& t : r.tracks) {
      tracks.push_back({{"label", t.label},
                        {"mode", to_string(t.mode)},
                        {"total", t.total},
                        {"passed", t.passed},
                        {"failed", t.failed},
                        {"skipped_pole", t.skipped_pole}});
    }
    auto& ces = j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
      nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
      for (const auto& [name, value] : c.assignment.bindings()) {
        assignment[name] = value.to_string();
      }
      ces.push_back({{"check", c.check}, {"assignment", assignment}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"note", c.note}});
    }
    if (timing) {
      j["wall_ms"] = r.wall_ms;
    }
    list.push_back(std::move(j));
  }
  root["all_passed"] = all_passed(reports);
  return root.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationReport>& reports, bool timing) {
  std::ostringstream os;
  os << "id,total,passed,failed,skipped,wall_ms\n";
  for (const auto& r : reports) {
    os << r.identity_id << ',' << r.total << ',' << r.passed << ',' << r.failed << ',' << r.skipped_pole << ',';
    if (timing) {
      os << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_table(const std::vector<VerificationReport>& reports, bool timing) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "id" << std::setw(7) << "mode" << std::right << std::setw(8) << "total"
     << std::setw(8) << "passed" << std::setw(8) << "failed" << std::setw(8) << "skipped";
  if (timing) {
    os << std::setw(12) << "wall_ms";
  }
  os << '\n';
  for (const auto& r : reports) {
    os << std::left << std::setw(18) << r.identity_id << std::setw(7) << to_string(r.mode) << std::right
       << std::setw(8) << r.total << std::setw(8) << r.passed << std::setw(8) << r.failed << std::setw(8)
       << r.skipped_pole;
    if (timing) {
      os << std::setw(12) << std::fixed << std::setprecision(1) << r.wall_ms << std::defaultfloat;
    }
    os << '\n';
    for (const auto& c : r.counterexamples) {
      os << "    [" << c.check << "] " << to_string(c.assignment) << "  lhs=" << c.lhs << "  rhs=" << c.rhs;
      if (!c.note.empty()) {
        os << "  (" << c.note << ")";
      }
      os << '\n';
    }
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += r.failed != 0 ? 1 : 0;
  }
  os << reports.size() << " identities, " << failed << " with failures\n";
  return os.str();
}

DerivativeReport run_derivative_checks(const SweepConfig& cfg, unsigned s_max, unsigned n_max, unsigned ell_max) {
  validate(cfg);
  DerivativeReport out;
  const RationalBounds bounds{cfg.numerator_bound, cfg.denominator_bound};

  Rng rng(derive_seed(cfg.seed, "derivcheck/binomial", 0));
  for (unsigned s = 0; s <= s_max; ++s) {
    for (unsigned t = 0; t <= s; ++t) {
      for (unsigned i = 0; i < cfg.rational_samples; ++i) {
        // H_s(x) must be defined: x not an integer in [-s, -1].
        const Rational x = sample_rational(
            rng, bounds, [s](const Rational& v) { return !(v.is_integer() && v.sign() < 0 && v >= Rational(-long(s))); },
            "derivcheck binomial");
        ++out.binom_total;
        if (jet_deriv_binom_check(x, s, t)) {
          ++out.binom_passed;
        } else {
          out.failures.push_back("binomial s=" + std::to_string(s) + " t=" + std::to_string(t) + " x=" + x.to_string());
        }
      }
    }
  }

  rng.seed(derive_seed(cfg.seed, "derivcheck/harmonic", 0));
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
      for (unsigned i = 0; i < cfg.rational_samples; ++i) {
        const Rational x = sample_rational(
            rng, bounds, [n](const Rational& v) { return !(v.is_integer() && v.sign() < 0 && v >= Rational(-long(n))); },
            "derivcheck harmonic");
        ++out.harmonic_total;
        if (jet_deriv_harmonic_check(n, ell, x)) {
          ++out.harmonic_passed;
        } else {
          out.failures.push_back("harmonic n=" + std::to_string(n) + " l=" + std::to_string(ell) +
                                 " x=" + x.to_string());
        }
      }
    }
  }
  return out;
}

std::vector<BenchRow> bench_series(const std::vector<unsigned>& grid) {
  // Fixed non-integral parameters keep every denominator Pochhammer nonzero.
  const Rational a(1, 3);
  const Rational b(2, 7);
  const Rational c(3, 5);
  std::vector<BenchRow> rows;
  for (unsigned n : grid) {
    const PfqSpec spec = dougall_series(a, b, c, Rational(-static_cast<long>(n)));
    BenchRow row;
    row.n = n;

    reset_bigint_mul_count();
    auto start = Clock::now();
    const Rational full = pfq_exact(spec);
    row.full_ms = elapsed_ms(start);
    row.full_mults = bigint_mul_count();

    reset_bigint_mul_count();
    start = Clock::now();
    const Rational incremental = pfq_exact_incremental(spec);
    row.incremental_ms = elapsed_ms(start);
    row.incremental_mults = bigint_mul_count();

    row.equal = full == incremental;
    rows.push_back(row);
  }
  return rows;
}

std::string bench_to_table(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream os;
  os << std::setw(6) << "n" << std::setw(14) << "full_mults" << std::setw(14) << "incr_mults";
  if (timing) {
    os << std::setw(12) << "full_ms" << std::setw(12) << "incr_ms";
  }
  os << std::setw(8) << "equal" << '\n';
  for (const auto& r : rows) {
    os << std::setw(6) << r.n << std::setw(14) << r.full_mults << std::setw(14) << r.incremental_mults;
    if (timing) {
      os << std::fixed << std::setprecision(2) << std::setw(12) << r.full_ms << std::setw(12) << r.incremental_ms
         << std::defaultfloat;
    }
    os << std::setw(8) << (r.equal ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string bench_to_json(const std::vector<BenchRow>& rows, bool timing) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j{{"n", r.n},
                             {"full_mults", r.full_mults},
                             {"incremental_mults", r.incremental_mults},
                             {"equal", r.equal}};
    if (timing) {
      j["full_ms"] = r.full_ms;
      j["incremental_ms"] = r.incremental_ms;
    }
    list.push_back(std::move(j));
  }
  return list.dump(2) + "\n";
}

}  // namespace harmonid
