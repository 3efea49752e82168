#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "janowski/special_eval.hpp"
#include "janowski/subordination_oracle.hpp"
#include "janowski/types.hpp"

namespace janowski {

enum class TheoremId {
  QuotientArgument,  // arg f'/g' in a sector  =>  f/g oblique power domain
  PowerArgument,     // arg p^a (1 + lambda z p'/p)^g in a sector  =>  p^{1/beta} oblique
  Silverman,         // |z p'/p^2| < beta  =>  p in the tilted power domain
  ReciprocalOrder,   // |z P'/P^2| < beta  =>  |arg(1/P - a)| < delta pi/2
  DominantH,         // mu p^a (delta + rho p) + eta z p' p^{a-1} < h  =>  p < J^gamma
  LinearOperator,    // (1-lambda) p + lambda z p' < h  =>  Re e^{-i tilt} p^{1/gamma} > 0
  BestDominant,      // p + lambda z p'/(beta p + gamma) < J^alpha  =>  p < J^alpha
};

std::span<const TheoremId> all_theorems() noexcept;
std::string_view to_string(TheoremId id) noexcept;
TheoremId theorem_from_string(std::string_view name);

enum class TrialMode { Constructive, Probe };
std::string_view to_string(TrialMode mode) noexcept;

struct QuotientArgumentParams {
  double alpha = 1.0;
  double m = 0.0;
  double beta = 0.5;
};

// lambda(z) = lambda0 + lambda1 z.
struct PowerArgumentParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double m = 0.0;
  Complex lambda0{1.0};
  Complex lambda1{0.0};
};

struct SilvermanParams {
  Complex A{1.0};
  double b = 1.0;
  double alpha = 1.0;
  double beta = 0.5;
};

struct ReciprocalOrderParams {
  double alpha = 0.0;
  double beta = 1.0;
};

struct DominantHParams {
  DominantSpec spec;
};

struct LinearOperatorParams {
  double lambda = 0.5;
  double gamma = 1.0;
  double m = 0.0;
  double b = 1.0;
};

// lambda(z) = (1 + c z)/(1 - c z).
struct BestDominantParams {
  double alpha = 1.0;
  Complex A{1.0};
  Complex B{-1.0};
  Complex beta{1.0};
  Complex gamma{0.0};
  Complex lambda_c{0.0};
};

using TheoremParams =
    std::variant<QuotientArgumentParams, PowerArgumentParams, SilvermanParams,
                 ReciprocalOrderParams, DominantHParams, LinearOperatorParams, BestDominantParams>;

TheoremId theorem_of(const TheoremParams& params) noexcept;

struct TrialSetup {
  TheoremParams params;
  TrialMode mode = TrialMode::Probe;
  SchwarzPoly omega;
  double probe_scale = 1.0;  // exponent applied to the conclusion dominant in probe mode
};

struct TrialOptions {
  std::size_t samples = 4096;
  double radius = 0.99;
  double tolerance = 1e-4;
};

struct TrialReport {
  TheoremId theorem = TheoremId::QuotientArgument;
  std::uint64_t seed = 0;
  TrialMode mode = TrialMode::Probe;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  double hypothesis_margin = 0.0;
  double worst_margin = 0.0;  // conclusion margin; negative means violated

  bool violation() const noexcept { return hypothesis_holds && !conclusion_holds; }
};

TrialSetup draw_trial(TheoremId id, std::uint64_t seed);

TrialReport run_trial(const TrialSetup& setup, std::uint64_t seed, const TrialOptions& options = {});

TrialReport implication_trial(TheoremId id, std::uint64_t seed, const TrialOptions& options = {});

std::string to_json_line(const TrialReport& report);

}  // namespace janowski
