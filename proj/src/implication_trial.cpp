#include "janowski/implication_trial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include "json.hpp"

#include "janowski/error.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/quadrature.hpp"
#include "janowski/rng.hpp"
#include "janowski/sector_calculus.hpp"

namespace janowski {
namespace {

using Fn = std::function<Complex(Complex)>;

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<TheoremId, 7> kTheorems = {
    TheoremId::QuotientArgument, TheoremId::PowerArgument, TheoremId::Silverman,
    TheoremId::ReciprocalOrder,  TheoremId::DominantH,     TheoremId::LinearOperator,
    TheoremId::BestDominant,
};

constexpr std::array<std::string_view, 7> kNames = {
    "quotient-argument", "power-argument", "silverman",    "reciprocal-order",
    "dominant-h",        "linear-operator", "best-dominant",
};

std::size_t index_of(TheoremId id) { return static_cast<std::size_t>(id); }

// A candidate p together with z p'(z) and (for probes) a continuous log p.
struct Candidate {
  Fn p;
  Fn zp;
  Fn logp;
};

// z p'(z) from p by a radial central difference.
Fn radial_derivative(Fn p) {
  return [p = std::move(p)](Complex z) -> Complex {
    if (z == Complex(0.0)) return 0.0;
    constexpr double eps = 1e-5;
    return (p(z * std::exp(eps)) - p(z * std::exp(-eps))) / (2.0 * eps);
  };
}

// p = ((1 + a w)/(1 + b w))^k composed with omega.
Candidate power_probe(Complex a, Complex b, double k, const SchwarzPoly& omega) {
  Candidate c;
  c.logp = [=](Complex z) {
    const Complex w = omega(z);
    return k * std::log((1.0 + a * w) / (1.0 + b * w));
  };
  c.p = [logp = c.logp](Complex z) { return std::exp(logp(z)); };
  c.zp = [=, p = c.p](Complex z) {
    const Complex w = omega(z);
    return p(z) * k * z * omega.derivative(z) * (a / (1.0 + a * w) - b / (1.0 + b * w));
  };
  return c;
}

Complex tilted(double m) { return std::polar(1.0, m * kPi); }

struct Outcome {
  bool hypothesis = false;
  double hypothesis_margin = -kInf;
  bool conclusion = false;
  double conclusion_margin = -kInf;
};

double phase_margin(const Fn& f, double r, std::size_t n, double lo, double hi) {
  const auto phases = continuous_arg_on_circle(f, r, n);
  return phases ? sector_margin(*phases, lo, hi) : -kInf;
}

void conclude_sector(Outcome& out, const Fn& p, const TrialOptions& o, double lo, double hi) {
  out.conclusion_margin = phase_margin(p, o.radius, o.samples, lo, hi);
  out.conclusion = out.conclusion_margin >= -o.tolerance;
}

void conclude_subordinate(Outcome& out, const Fn& p, const JanowskiParams& target,
                          const TrialOptions& o) {
  const auto samples = sample_circle(p, o.radius, o.samples);
  const SubordinationCheck check = verify_subordination(samples, target, 1.0, o.tolerance);
  out.conclusion = check.holds;
  out.conclusion_margin = check.margin;
}

double max_modulus(const Fn& f, const TrialOptions& o) {
  double sup = 0.0;
  for (Complex v : sample_circle(f, o.radius, o.samples)) {
    sup = std::max(sup, std::isfinite(std::abs(v)) ? std::abs(v) : kInf);
  }
  return sup;
}

Outcome run(const QuotientArgumentParams& q, const TrialSetup& s, const TrialOptions& o) {
  const SectorParams sp = quotient_sector_params(q.alpha, q.m, q.beta, 0.0);
  const double lo = -q.alpha * sp.mu1 * kPi / 2.0;
  const double hi = q.alpha * sp.mu2 * kPi / 2.0;
  Fn p;
  Fn fprime;
  if (s.mode == TrialMode::Constructive) {
    const Complex e = tilted(sp.mu);
    const double kappa = sp.exponent;
    const SchwarzPoly omega = s.omega;
    fprime = [=](Complex z) {
      const Complex w = omega(z);
      return std::exp(kappa * std::log((1.0 + e * w) / (1.0 - w)));
    };
    p = [fprime](Complex z) -> Complex {
      if (z == Complex(0.0)) return 1.0;
      return quadrature::integrate([&](double t) { return fprime(t * z); }, 0.0, 1.0);
    };
  } else {
    const Candidate c = power_probe(tilted(q.m), -1.0, q.alpha * s.probe_scale, s.omega);
    p = c.p;
    fprime = [c](Complex z) { return c.p(z) + c.zp(z); };
  }
  Outcome out;
  out.hypothesis_margin = phase_margin(fprime, o.radius, o.samples, lo, hi);
  out.hypothesis = out.hypothesis_margin > 0.0;
  conclude_sector(out, p, o, -q.alpha * (1.0 - q.m) * kPi / 2.0, q.alpha * (1.0 + q.m) * kPi / 2.0);
  return out;
}

Outcome run(const PowerArgumentParams& q, const TrialSetup& s, const TrialOptions& o) {
  const Fn lambda = [q](Complex z) { return q.lambda0 + q.lambda1 * z; };
  const double eta = 0.95 * eta_infimum(lambda, q.beta, 64);
  const SectorParams sp = power_sector_params(q.alpha, q.beta, q.gamma, q.m, eta);
  const Candidate c = power_probe(tilted(q.m), -1.0, q.beta * s.probe_scale, s.omega);
  const Fn y = [c, lambda](Complex z) { return 1.0 + lambda(z) * c.zp(z) / c.p(z); };

  Outcome out;
  const auto phase_p = continuous_arg_on_circle(c.p, o.radius, o.samples);
  const auto phase_y = continuous_arg_on_circle(y, o.radius, o.samples);
  if (phase_p && phase_y) {
    std::vector<double> phase(o.samples);
    for (std::size_t k = 0; k < o.samples; ++k) {
      phase[k] = q.alpha * (*phase_p)[k] + q.gamma * (*phase_y)[k];
    }
    out.hypothesis_margin = sector_margin(phase, -sp.mu1 * kPi / 2.0, sp.mu2 * kPi / 2.0);
    out.hypothesis = out.hypothesis_margin > 0.0;
  }
  conclude_sector(out, c.p, o, -q.beta * (1.0 - q.m) * kPi / 2.0, q.beta * (1.0 + q.m) * kPi / 2.0);
  return out;
}

Outcome run(const SilvermanParams& q, const TrialSetup& s, const TrialOptions& o) {
  Fn p;
  Fn zp;
  if (s.mode == TrialMode::Constructive) {
    const SchwarzPoly omega = s.omega;
    const double beta = q.beta;
    p = [=](Complex z) { return 1.0 / (1.0 - beta * omega.integral_over_t(z)); };
    zp = radial_derivative(p);
  } else {
    const Candidate c = power_probe(q.A, -q.b, q.alpha * s.probe_scale, s.omega);
    p = c.p;
    zp = c.zp;
  }
  Outcome out;
  const double sup = max_modulus([&](Complex z) { const Complex v = p(z); return zp(z) / (v * v); }, o);
  out.hypothesis_margin = q.beta - sup;
  out.hypothesis = silverman_inclusion(q.A, q.b, q.alpha, q.beta) && out.hypothesis_margin > 0.0;
  conclude_subordinate(out, p, JanowskiParams(q.A, -q.b, q.alpha), o);
  return out;
}

Outcome run(const ReciprocalOrderParams& q, const TrialSetup& s, const TrialOptions& o) {
  const SchwarzPoly omega = s.omega;
  const double alpha = q.alpha;
  const double beta = q.beta;
  Fn P;
  if (s.mode == TrialMode::Constructive) {
    P = [=](Complex z) { return 1.0 / (1.0 - beta * omega.integral_over_t(z)); };
  } else {
    const double k = s.probe_scale * beta / (1.0 - alpha);
    P = [=](Complex z) { return 1.0 / (alpha + (1.0 - alpha) * (1.0 + k * omega(z))); };
  }
  const Fn zP = radial_derivative(P);
  Outcome out;
  const double sup = max_modulus([&](Complex z) { const Complex v = P(z); return zP(z) / (v * v); }, o);
  out.hypothesis_margin = beta - sup;
  out.hypothesis = out.hypothesis_margin > 0.0;
  const double half = reciprocal_order_sector(alpha, beta) * kPi / 2.0;
  const Fn shifted = [=](Complex z) { return (1.0 / P(z) - alpha) / (1.0 - alpha); };
  conclude_sector(out, shifted, o, -half, half);
  return out;
}

Outcome run(const DominantHParams& q, const TrialSetup& s, const TrialOptions& o) {
  const DominantSpec spec = q.spec;
  const Candidate c = power_probe(spec.A, -spec.b, spec.gamma * s.probe_scale, s.omega);
  const Fn e = [spec, c](Complex z) {
    const Complex lp = c.logp(z);
    return spec.mu * std::exp(spec.alpha * lp) * (spec.delta + spec.rho * std::exp(lp)) +
           spec.eta * c.zp(z) * std::exp((spec.alpha - 1.0) * lp);
  };
  const Fn h = [spec](Complex z) { return dominant_h(spec, z); };
  Outcome out;
  const TrackedCheck tracked = track_preimage(e, h, o.radius, o.samples);
  out.hypothesis_margin = 1.0 - tracked.max_preimage;
  out.hypothesis = tracked.tracked && out.hypothesis_margin > 0.0;
  conclude_subordinate(out, c.p, JanowskiParams(spec.A, -spec.b, spec.gamma), o);
  return out;
}

Outcome run(const LinearOperatorParams& q, const TrialSetup& s, const TrialOptions& o) {
  DominantSpec spec;
  spec.mu = 1.0 - q.lambda;
  spec.delta = 1.0;
  spec.rho = 0.0;
  spec.eta = q.lambda;
  spec.alpha = 1.0;
  spec.gamma = q.gamma;
  spec.A = tilted(q.m);
  spec.b = q.b;
  const Fn h = [spec](Complex z) { return dominant_h(spec, z); };

  const double lambda = q.lambda;
  Fn p;
  Fn e;
  if (s.mode == TrialMode::Constructive) {
    // Solution of (1-lambda) p + lambda z p' = h(omega) regular at 0, so E = h(omega) exactly.
    // Taylor coefficients of h(omega) from a DFT on |z| = radius; dividing the n-th one by
    // (1 - lambda) + lambda n solves the equation termwise.
    const SchwarzPoly omega = s.omega;
    const double radius = o.radius;
    constexpr std::size_t kTerms = 4096;
    std::vector<Complex> values(kTerms);
    for (std::size_t k = 0; k < kTerms; ++k) values[k] = h(omega(std::polar(radius, kTwoPi * k / kTerms)));
    std::vector<Complex> twiddle(kTerms);
    for (std::size_t k = 0; k < kTerms; ++k) twiddle[k] = std::polar(1.0, -kTwoPi * k / kTerms);
    auto coeffs = std::make_shared<std::vector<Complex>>(kTerms);
    for (std::size_t n = 0; n < kTerms; ++n) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < kTerms; ++k) {
        sum += values[k] * twiddle[(n * k) % kTerms];
      }
      (*coeffs)[n] = sum / static_cast<double>(kTerms) / ((1.0 - lambda) + lambda * static_cast<double>(n));
    }
    p = [coeffs, radius](Complex z) {
      const Complex x = z / radius;
      Complex acc = 0.0;
      for (auto it = coeffs->rbegin(); it != coeffs->rend(); ++it) acc = acc * x + *it;
      return acc;
    };
    e = [=](Complex z) { return h(omega(z)); };
  } else {
    const Candidate cand = power_probe(spec.A, -q.b, q.gamma * s.probe_scale, s.omega);
    p = cand.p;
    e = [=](Complex z) { return (1.0 - lambda) * cand.p(z) + lambda * cand.zp(z); };
  }
  Outcome out;
  const TrackedCheck tracked = track_preimage(e, h, o.radius, o.samples);
  out.hypothesis_margin = 1.0 - tracked.max_preimage;
  out.hypothesis = tracked.tracked && out.hypothesis_margin > 0.0;

  const double tilt = tilt_angle(q.b, q.m);
  const auto phases = continuous_arg_on_circle(p, o.radius, o.samples);
  if (phases) {
    double worst = 0.0;
    for (double a : *phases) worst = std::max(worst, std::abs(a / q.gamma - tilt));
    out.conclusion_margin = kPi / 2.0 - worst;
    out.conclusion = out.conclusion_margin >= -o.tolerance;
  }
  return out;
}

Outcome run(const BestDominantParams& q, const TrialSetup& s, const TrialOptions& o) {
  const JanowskiParams target(q.A, q.B, q.alpha);
  const Candidate c = power_probe(q.A, q.B, q.alpha * s.probe_scale, s.omega);
  const Fn e = [q, c](Complex z) {
    const Complex lambda = (1.0 + q.lambda_c * z) / (1.0 - q.lambda_c * z);
    const Complex p = c.p(z);
    return p + lambda * c.zp(z) / (q.beta * p + q.gamma);
  };
  Outcome out;
  const auto samples = sample_circle(e, o.radius, o.samples);
  const SubordinationCheck hyp = verify_subordination(samples, target, 1.0, 0.0);
  out.hypothesis_margin = hyp.margin;
  out.hypothesis = hyp.holds && hyp.margin > 0.0;
  conclude_subordinate(out, c.p, target, o);
  return out;
}

bool has_constructive(TheoremId id) {
  return id == TheoremId::QuotientArgument || id == TheoremId::Silverman ||
         id == TheoremId::ReciprocalOrder || id == TheoremId::LinearOperator;
}

TheoremParams draw_params(TheoremId id, CounterRng& rng) {
  switch (id) {
    case TheoremId::QuotientArgument: {
      QuotientArgumentParams q;
      q.alpha = rng.uniform(0.2, 1.0);
      q.m = rng.uniform(-0.8, 0.8);
      q.beta = rng.uniform(0.1, 0.95);
      return q;
    }
    case TheoremId::PowerArgument: {
      PowerArgumentParams q;
      q.alpha = rng.uniform(0.3, 1.0);
      q.beta = rng.uniform(0.3, 1.0);
      q.gamma = rng.uniform(0.0, 1.0);
      q.m = rng.uniform(-0.8, 0.8);
      q.lambda0 = Complex(rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5));
      q.lambda1 = rng.disk(0.9 * q.lambda0.real());
      return q;
    }
    case TheoremId::Silverman: {
      SilvermanParams q;
      do {
        q.A = rng.disk(1.0);
        q.b = rng.uniform(0.0, 1.0);
      } while (std::abs(q.A + q.b) < 0.05);
      q.alpha = rng.uniform(0.2, 1.0);
      q.beta = std::min(1.0, silverman_bound(q.A, q.b, q.alpha)) * rng.uniform(0.3, 1.0);
      return q;
    }
    case TheoremId::ReciprocalOrder: {
      ReciprocalOrderParams q;
      q.alpha = rng.uniform(0.0, 0.9);
      q.beta = (1.0 - q.alpha) * rng.uniform(0.1, 1.0);
      return q;
    }
    case TheoremId::DominantH: {
      DominantSpec spec;
      do {
        spec.b = rng.uniform(0.0, 0.95);
        const double re = rng.uniform(-1.0, 1.0);
        const double bound = std::sqrt((1.0 - spec.b * spec.b) * (1.0 - re * re));
        spec.A = Complex(re, rng.uniform(-bound, bound));
      } while (std::abs(spec.A + spec.b) < 0.05 || !spec.satisfies_dominant_conditions());
      spec.alpha = rng.uniform(0.0, 1.0);
      spec.gamma = rng.uniform(0.2, 1.0);
      spec.mu = Complex(1.0, rng.uniform(-0.3, 0.3));
      spec.eta = spec.mu / Complex(rng.uniform(0.3, 2.0), rng.uniform(-0.5, 0.5));
      spec.delta = Complex(rng.uniform(0.3, 1.5), rng.uniform(-0.3, 0.3));
      spec.rho = Complex(rng.uniform(0.0, 1.0), rng.uniform(-0.3, 0.3));
      return DominantHParams{spec};
    }
    case TheoremId::LinearOperator: {
      LinearOperatorParams q;
      q.lambda = rng.uniform(0.2, 0.8);
      q.gamma = rng.uniform(0.2, 1.0);
      q.m = rng.uniform(-0.9, 0.9);
      q.b = rng.uniform(0.0, 0.95);
      return q;
    }
    case TheoremId::BestDominant: {
      BestDominantParams q;
      q.alpha = rng.uniform(0.2, 1.0);
      q.B = rng.disk(0.9);
      bool found = false;
      for (int i = 0; i < 1000 && !found; ++i) {
        q.A = rng.disk(1.0);
        found = std::abs(q.A - q.B) > 0.05 &&
                std::abs(q.A - q.B) <= 1.0 - (q.A * std::conj(q.B)).real();
      }
      if (!found) q.A = q.B + 0.05 * (1.0 - std::norm(q.B)) * std::polar(1.0, rng.uniform(-kPi, kPi));
      q.beta = Complex(rng.uniform(0.5, 2.0), rng.uniform(-0.3, 0.3));
      q.gamma = Complex(rng.uniform(0.0, 1.0), rng.uniform(-0.3, 0.3));
      q.lambda_c = rng.disk(0.8);
      return q;
    }
  }
  throw Error(ErrorCode::InvalidTheoremId, "unknown theorem id");
}

}  // namespace

std::span<const TheoremId> all_theorems() noexcept { return kTheorems; }

std::string_view to_string(TheoremId id) noexcept { return kNames[index_of(id)]; }

TheoremId theorem_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kTheorems[i];
  }
  throw Error(ErrorCode::InvalidTheoremId, "unknown theorem id '" + std::string(name) + "'");
}

std::string_view to_string(TrialMode mode) noexcept {
  return mode == TrialMode::Constructive ? "constructive" : "probe";
}

TheoremId theorem_of(const TheoremParams& params) noexcept {
  return kTheorems[params.index()];
}

TrialSetup draw_trial(TheoremId id, std::uint64_t seed) {
  if (index_of(id) >= kTheorems.size()) throw Error(ErrorCode::InvalidTheoremId, "unknown theorem id");
  CounterRng rng(seed, 100 + index_of(id));
  TrialSetup setup;
  setup.params = draw_params(id, rng);
  setup.mode = (seed % 2 == 0 && has_constructive(id)) ? TrialMode::Constructive : TrialMode::Probe;
  const int degree = 1 + static_cast<int>(rng.next() % 16);
  setup.omega = random_schwarz(rng.next(), degree);
  if (rng.uniform() < 0.5) setup.omega = setup.omega.scaled(rng.uniform(0.1, 1.0));
  setup.probe_scale = rng.uniform(0.2, 1.6);
  return setup;
}

TrialReport run_trial(const TrialSetup& setup, std::uint64_t seed, const TrialOptions& options) {
  const Outcome out = std::visit([&](const auto& q) { return run(q, setup, options); }, setup.params);
  TrialReport report;
  report.theorem = theorem_of(setup.params);
  report.seed = seed;
  report.mode = setup.mode;
  report.hypothesis_holds = out.hypothesis;
  report.conclusion_holds = out.conclusion;
  report.hypothesis_margin = out.hypothesis_margin;
  report.worst_margin = out.conclusion_margin;
  return report;
}

TrialReport implication_trial(TheoremId id, std::uint64_t seed, const TrialOptions& options) {
  return run_trial(draw_trial(id, seed), seed, options);
}

std::string to_json_line(const TrialReport& report) {
  auto number = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json j = {
      {"theorem", std::string(to_string(report.theorem))},
      {"seed", report.seed},
      {"mode", std::string(to_string(report.mode))},
      {"hypothesis_holds", report.hypothesis_holds},
      {"conclusion_holds", report.conclusion_holds},
      {"hypothesis_margin", number(report.hypothesis_margin)},
      {"worst_margin", number(report.worst_margin)},
      {"violation", report.violation()},
  };
  return j.dump();
}

}  // namespace janowski
