#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "complex_literal.hpp"
#include "janowski/error.hpp"
#include "janowski/implication_trial.hpp"
#include "janowski/moebius_geometry.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/radius_solver.hpp"
#include "janowski/sector_calculus.hpp"
#include "janowski/special_eval.hpp"
#include "janowski/subordination_oracle.hpp"
#include "report.hpp"

namespace janowski::cli {
namespace {

struct Output {
  json parameters = json::object();
  json result = json::object();
  json oracle = json::object();
};

using Action = std::function<Output(bool verify)>;

// Exit code for failed oracle comparisons in `verify`.
constexpr int kNumericalExit = 3;

struct MapArgs {
  std::string A = "1";
  std::string B = "0";
  double alpha = 1.0;
  std::string gamma = "0";
  double r = 1.0;

  void add(CLI::App* app, bool with_power, bool with_r) {
    app->add_option("--A", A, "numerator coefficient (complex literal)")->capture_default_str();
    app->add_option("--B", B, "denominator coefficient, |B| <= 1")->capture_default_str();
    if (with_power) {
      app->add_option("--alpha", alpha, "power in (0, 1]")->capture_default_str();
      app->add_option("--gamma", gamma, "affine shift, gamma != 1")->capture_default_str();
    }
    if (with_r) app->add_option("--r", r, "radius in (0, 1]")->capture_default_str();
  }
  JanowskiParams params() const {
    return JanowskiParams(parse_complex(A), parse_complex(B), alpha, parse_complex(gamma));
  }
  json to_json_block(bool with_power, bool with_r) const {
    json j = {{"A", cli::to_json(parse_complex(A))}, {"B", cli::to_json(parse_complex(B))}};
    if (with_power) {
      j["alpha"] = alpha;
      j["gamma"] = cli::to_json(parse_complex(gamma));
    }
    if (with_r) j["r"] = r;
    return j;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidParams, "cannot open '" + path + "' for writing");
  f << content;
}

json sector_json(const SectorParams& s) {
  return {{"mu1", number(s.mu1)},       {"mu2", number(s.mu2)},   {"mu", number(s.mu)},
          {"delta", number(s.delta)},   {"exponent", number(s.exponent)},
          {"a_mag", number(s.a_mag)},   {"beta0", number(s.beta0)}, {"eta", number(s.eta)}};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("JANOWSKI_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParams, "JANOWSKI_SEED must be a non-negative integer");
    }
  }
  return 0;
}

class Registry {
 public:
  void set(std::string name, Action action) {
    name_ = std::move(name);
    action_ = std::move(action);
  }
  const std::string& name() const { return name_; }
  const Action& action() const { return action_; }

 private:
  std::string name_;
  Action action_;
};

void add_geometry(CLI::App& app, Registry& reg) {
  auto* geometry = app.add_subcommand("geometry", "first-order map geometry")->require_subcommand(1);

  auto* disk = geometry->add_subcommand("image-disk", "image circle or half-plane at radius r");
  auto m = std::make_shared<MapArgs>();
  m->add(disk, false, true);
  disk->callback([&reg, m] {
    reg.set("geometry image-disk", [m](bool verify) {
      Output o;
      o.parameters = m->to_json_block(false, true);
      const JanowskiParams p = m->params();
      const DiskGeometry g = image_disk(p, m->r);
      o.result = to_json(g);
      if (verify) {
        double worst = 0.0;
        std::size_t used = 0;
        for (std::size_t k = 0; k < 1000; ++k) {
          const Complex z = std::polar(m->r, kTwoPi * k / 1000.0);
          if (std::abs(1.0 + p.B() * z) < 1e-9) continue;
          const Complex w = eval_map(p, z);
          const double dev = g.kind == RegionKind::Disk
                                 ? std::abs(std::abs(w - g.center) - g.radius)
                                 : std::abs(((w - g.boundary_point) * std::conj(g.normal)).real());
          worst = std::max(worst, dev);
          ++used;
        }
        o.oracle = {{"samples", used}, {"max_boundary_deviation", number(worst)}};
      }
      return o;
    });
  });

  auto* origin = geometry->add_subcommand("origin", "position of w = 0 relative to the image");
  auto mo = std::make_shared<MapArgs>();
  mo->add(origin, false, false);
  origin->callback([&reg, mo] {
    reg.set("geometry origin", [mo](bool verify) {
      Output o;
      o.parameters = mo->to_json_block(false, false);
      const JanowskiParams p = mo->params();
      o.result = {{"position", to_string(origin_position(p))}};
      if (verify && std::abs(p.B()) < 1.0) {
        const DiskGeometry g = image_disk(p, 1.0);
        o.oracle = {{"center_modulus_minus_radius", number(std::abs(g.center) - g.radius)}};
      }
      return o;
    });
  });

  auto* canon = geometry->add_subcommand("canonicalize", "rotate to the form (1 + A'z)/(1 - bz)");
  auto mc = std::make_shared<MapArgs>();
  mc->add(canon, false, false);
  canon->callback([&reg, mc] {
    reg.set("geometry canonicalize", [mc](bool verify) {
      Output o;
      o.parameters = mc->to_json_block(false, false);
      const Complex A = parse_complex(mc->A);
      const Complex B = parse_complex(mc->B);
      const CanonicalParams c = canonicalize(A, B);
      o.result = {{"A", to_json(c.A)}, {"b", c.b}};
      if (verify) {
        double worst = 0.0;
        for (double r : {0.25, 0.5, 0.75, 0.9}) {
          const DiskGeometry g1 = image_disk(JanowskiParams(A, B), r);
          const DiskGeometry g2 = image_disk(JanowskiParams(c.A, -c.b), r);
          worst = std::max({worst, std::abs(g1.radius - g2.radius),
                            std::abs(std::abs(g1.center) - std::abs(g2.center))});
        }
        o.oracle = {{"max_geometry_difference", number(worst)}};
      }
      return o;
    });
  });

  auto* cont = geometry->add_subcommand("contains", "whether the outer image contains the inner one");
  auto outer = std::make_shared<MapArgs>();
  auto inner = std::make_shared<MapArgs>();
  cont->add_option("--outer-A", outer->A)->required();
  cont->add_option("--outer-B", outer->B)->required();
  cont->add_option("--outer-r", outer->r)->capture_default_str();
  cont->add_option("--inner-A", inner->A)->required();
  cont->add_option("--inner-B", inner->B)->required();
  cont->add_option("--inner-r", inner->r)->capture_default_str();
  cont->callback([&reg, outer, inner] {
    reg.set("geometry contains", [outer, inner](bool verify) {
      Output o;
      o.parameters = {{"outer", outer->to_json_block(false, true)}, {"inner", inner->to_json_block(false, true)}};
      const JanowskiParams po = outer->params();
      const JanowskiParams pi = inner->params();
      o.result = {{"contains", contains(image_disk(po, outer->r), image_disk(pi, inner->r))}};
      if (verify) {
        o.oracle = {{"samples", 10000},
                    {"sampled_contains", sampled_containment(po, outer->r, pi, inner->r, 10000, 1e-9)}};
      }
      return o;
    });
  });
}

void add_bounds(CLI::App& app, Registry& reg) {
  auto* bounds = app.add_subcommand("bounds", "envelope bounds of the powered map (default) and sector data");
  bounds->require_subcommand(0, 1);
  auto m = std::make_shared<MapArgs>();
  m->add(bounds, true, true);
  auto csv = std::make_shared<std::string>();
  auto csv_samples = std::make_shared<std::size_t>(720);
  bounds->add_option("--csv", *csv, "write curve samples t,u,v,M,N to this file");
  bounds->add_option("--samples", *csv_samples, "curve samples for --csv")->capture_default_str();
  bounds->callback([&reg, bounds, m, csv, csv_samples] {
    if (!bounds->get_subcommands().empty()) return;
    reg.set("bounds", [m, csv, csv_samples](bool verify) {
      Output o;
      o.parameters = m->to_json_block(true, true);
      const JanowskiParams p = m->params();
      const BoundReport report = envelope_bounds(p, m->r);
      o.result = to_json(report);
      if (!csv->empty()) {
        write_file(*csv, curve_csv(envelope_curve(p, m->r, *csv_samples)));
        o.result["csv"] = *csv;
      }
      if (verify) {
        const BoundReport e = empirical_bounds(p, m->r, 200000);
        const double dev = std::max({std::abs(e.arg.lo - report.arg.lo), std::abs(e.arg.hi - report.arg.hi),
                                     std::abs(e.modulus.lo - report.modulus.lo),
                                     std::abs(e.modulus.hi - report.modulus.hi),
                                     std::abs(e.re.lo - report.re.lo), std::abs(e.re.hi - report.re.hi),
                                     std::abs(e.im.lo - report.im.lo), std::abs(e.im.hi - report.im.hi)});
        o.oracle = {{"samples", 200000},
                    {"arg", to_json(e.arg)},
                    {"modulus", to_json(e.modulus)},
                    {"re", to_json(e.re)},
                    {"im", to_json(e.im)},
                    {"max_endpoint_deviation", number(dev)}};
      }
      return o;
    });
  });

  auto* crit = bounds->add_subcommand("critical", "critical parameters of Re and Im");
  auto mc = std::make_shared<MapArgs>();
  mc->add(crit, true, true);
  crit->callback([&reg, mc] {
    reg.set("bounds critical", [mc](bool) {
      Output o;
      o.parameters = mc->to_json_block(true, true);
      o.result = to_json(critical_points(mc->params(), mc->r));
      return o;
    });
  });

  auto* sector = bounds->add_subcommand("sector", "sector image of ((1+e^{im pi}z)/(1-z))^alpha");
  auto sm = std::make_shared<std::pair<double, double>>(0.0, 1.0);
  sector->add_option("--m", sm->first)->capture_default_str();
  sector->add_option("--alpha", sm->second)->capture_default_str();
  sector->callback([&reg, sm] {
    reg.set("bounds sector", [sm](bool) {
      Output o;
      o.parameters = {{"m", sm->first}, {"alpha", sm->second}};
      const Sector s = sector_image(sm->first, sm->second);
      o.result = {{"lo", s.lo}, {"hi", s.hi}, {"rotation", s.rotation}};
      return o;
    });
  });

  auto* tilt = bounds->add_subcommand("tilt", "tilt angle of (1+e^{im pi}z)/(1-bz)");
  auto tb = std::make_shared<std::pair<double, double>>(1.0, 0.0);
  tilt->add_option("--b", tb->first)->capture_default_str();
  tilt->add_option("--m", tb->second)->capture_default_str();
  tilt->callback([&reg, tb] {
    reg.set("bounds tilt", [tb](bool) {
      Output o;
      o.parameters = {{"b", tb->first}, {"m", tb->second}};
      o.result = {{"lambda", tilt_angle(tb->first, tb->second)}};
      return o;
    });
  });

  auto* nesting = bounds->add_subcommand("nesting", "whether the alpha1 power is subordinate to the alpha2 power");
  auto mn = std::make_shared<MapArgs>();
  auto powers = std::make_shared<std::pair<double, double>>(0.5, 1.0);
  mn->add(nesting, false, false);
  nesting->add_option("--a1", powers->first)->capture_default_str();
  nesting->add_option("--a2", powers->second)->capture_default_str();
  nesting->callback([&reg, mn, powers] {
    reg.set("bounds nesting", [mn, powers](bool verify) {
      Output o;
      o.parameters = mn->to_json_block(false, false);
      o.parameters["a1"] = powers->first;
      o.parameters["a2"] = powers->second;
      const JanowskiParams p = mn->params();
      o.result = {{"nested", alpha_nesting(p, powers->first, powers->second)}};
      if (verify) {
        o.oracle = {{"sampled_nested", alpha_nesting_sampled(p, powers->first, powers->second, 0.999, 4096)}};
      }
      return o;
    });
  });

  auto* qp = bounds->add_subcommand("quotient-params", "sector parameters for the f'/g' hypothesis");
  auto q = std::make_shared<std::array<double, 4>>(std::array<double, 4>{1.0, 0.0, 0.5, 0.0});
  qp->add_option("--alpha", (*q)[0])->capture_default_str();
  qp->add_option("--m", (*q)[1])->capture_default_str();
  qp->add_option("--beta", (*q)[2])->capture_default_str();
  qp->add_option("--arg-ratio", (*q)[3], "bound on arg(g/(z g'))")->capture_default_str();
  qp->callback([&reg, q] {
    reg.set("bounds quotient-params", [q](bool) {
      Output o;
      o.parameters = {{"alpha", (*q)[0]}, {"m", (*q)[1]}, {"beta", (*q)[2]}, {"arg_ratio", (*q)[3]}};
      o.result = sector_json(quotient_sector_params((*q)[0], (*q)[1], (*q)[2], (*q)[3]));
      return o;
    });
  });

  auto* dp = bounds->add_subcommand("derivative-params", "sector parameters for the f' hypothesis");
  auto d = std::make_shared<std::pair<double, double>>(1.0, 0.0);
  dp->add_option("--alpha", d->first)->capture_default_str();
  dp->add_option("--m", d->second)->capture_default_str();
  dp->callback([&reg, d] {
    reg.set("bounds derivative-params", [d](bool) {
      Output o;
      o.parameters = {{"alpha", d->first}, {"m", d->second}};
      const DerivativeSectorResult r = derivative_sector_params(d->first, d->second);
      o.result = sector_json(r.params);
      o.result["arg_bound"] = r.arg_bound;
      return o;
    });
  });

  auto* pp = bounds->add_subcommand("power-params", "sector parameters for the p^a(1+lambda zp'/p)^g hypothesis");
  auto pw = std::make_shared<std::array<double, 5>>(std::array<double, 5>{1.0, 1.0, 0.0, 0.0, 0.0});
  pp->add_option("--alpha", (*pw)[0])->capture_default_str();
  pp->add_option("--beta", (*pw)[1])->capture_default_str();
  pp->add_option("--gamma", (*pw)[2])->capture_default_str();
  pp->add_option("--m", (*pw)[3])->capture_default_str();
  pp->add_option("--eta", (*pw)[4])->capture_default_str();
  pp->callback([&reg, pw] {
    reg.set("bounds power-params", [pw](bool) {
      Output o;
      const auto& v = *pw;
      o.parameters = {{"alpha", v[0]}, {"beta", v[1]}, {"gamma", v[2]}, {"m", v[3]}, {"eta", v[4]}};
      o.result = sector_json(power_sector_params(v[0], v[1], v[2], v[3], v[4]));
      return o;
    });
  });

  auto* ro = bounds->add_subcommand("reciprocal-order", "sector exponent for reciprocal order");
  auto rov = std::make_shared<std::pair<double, double>>(0.0, 1.0);
  ro->add_option("--alpha", rov->first)->capture_default_str();
  ro->add_option("--beta", rov->second)->capture_default_str();
  ro->callback([&reg, rov] {
    reg.set("bounds reciprocal-order", [rov](bool) {
      Output o;
      o.parameters = {{"alpha", rov->first}, {"beta", rov->second}};
      o.result = {{"delta", reciprocal_order_sector(rov->first, rov->second)}};
      return o;
    });
  });

  auto* dt = bounds->add_subcommand("double-tilt", "opening and tilt for a pair of subordinations");
  auto t = std::make_shared<std::array<double, 7>>(std::array<double, 7>{0, 0, 0, 0, 0, 0, 1});
  const char* names[] = {"--a", "--b", "--c", "--d", "--l", "--m", "--alpha"};
  for (std::size_t i = 0; i < 7; ++i) dt->add_option(names[i], (*t)[i])->capture_default_str();
  dt->callback([&reg, t] {
    reg.set("bounds double-tilt", [t](bool) {
      Output o;
      const auto& v = *t;
      o.parameters = {{"a", v[0]}, {"b", v[1]}, {"c", v[2]}, {"d", v[3]}, {"l", v[4]}, {"m", v[5]}, {"alpha", v[6]}};
      const DoubleTilt r = double_subordination_tilt(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
      o.result = {{"mu", r.mu}, {"gamma", r.gamma}, {"admissible", r.admissible}, {"excess", r.excess}};
      return o;
    });
  });

  auto* eta = bounds->add_subcommand("eta", "admissible eta for lambda(z) = lambda0 + lambda1 z");
  auto ev = std::make_shared<std::tuple<std::string, std::string, double, std::size_t>>("1", "0", 1.0, 256);
  eta->add_option("--lambda0", std::get<0>(*ev))->capture_default_str();
  eta->add_option("--lambda1", std::get<1>(*ev))->capture_default_str();
  eta->add_option("--beta", std::get<2>(*ev))->capture_default_str();
  eta->add_option("--n", std::get<3>(*ev), "grid size per axis")->capture_default_str();
  eta->callback([&reg, ev] {
    reg.set("bounds eta", [ev](bool) {
      Output o;
      const Complex l0 = parse_complex(std::get<0>(*ev));
      const Complex l1 = parse_complex(std::get<1>(*ev));
      o.parameters = {{"lambda0", to_json(l0)}, {"lambda1", to_json(l1)}, {"beta", std::get<2>(*ev)},
                      {"n", std::get<3>(*ev)}};
      o.result = {{"eta", eta_infimum([&](Complex z) { return l0 + l1 * z; }, std::get<2>(*ev), std::get<3>(*ev))}};
      return o;
    });
  });
}

void add_radius(CLI::App& app, Registry& reg) {
  auto* radius = app.add_subcommand("radius", "radius problems and class inclusions")->require_subcommand(1);

  auto* sub = radius->add_subcommand("subordination", "largest r with source(rz) inside the target");
  auto target = std::make_shared<MapArgs>();
  auto source = std::make_shared<MapArgs>();
  target->add(sub, true, false);
  sub->add_option("--C", source->A)->capture_default_str();
  sub->add_option("--D", source->B)->capture_default_str();
  sub->add_option("--beta", source->alpha)->capture_default_str();
  sub->add_option("--delta", source->gamma)->capture_default_str();
  sub->callback([&reg, target, source] {
    reg.set("radius subordination", [target, source](bool verify) {
      Output o;
      o.parameters = {{"target", target->to_json_block(true, false)}, {"source", source->to_json_block(true, false)}};
      const RadiusProblem problem{source->params(), target->params()};
      const SubordinationRadius r = subordination_radius(problem);
      o.result = {{"radius", r.radius}, {"unclamped", number(r.unclamped)}};
      if (verify) {
        const double at = std::max(1e-9, r.radius - 1e-6);
        o.oracle = {{"r", at},
                    {"sampled_inside", sampled_containment(problem.target, 1.0, problem.source, at, 4096, 1e-9)}};
      }
      return o;
    });
  });

  auto* inc = radius->add_subcommand("inclusion", "starlike class inclusion criterion");
  auto ia = std::make_shared<MapArgs>();
  auto ic = std::make_shared<MapArgs>();
  ia->add(inc, false, false);
  inc->add_option("--alpha", ia->alpha)->capture_default_str();
  inc->add_option("--C", ic->A)->capture_default_str();
  inc->add_option("--D", ic->B)->capture_default_str();
  inc->add_option("--beta", ic->alpha)->capture_default_str();
  inc->callback([&reg, ia, ic] {
    reg.set("radius inclusion", [ia, ic](bool) {
      Output o;
      const Complex A = parse_complex(ia->A), B = parse_complex(ia->B);
      const Complex C = parse_complex(ic->A), D = parse_complex(ic->B);
      o.parameters = {{"A", to_json(A)}, {"B", to_json(B)}, {"alpha", ia->alpha},
                      {"C", to_json(C)}, {"D", to_json(D)}, {"beta", ic->alpha}};
      const InclusionResult r = class_inclusion(A, B, ia->alpha, C, D, ic->alpha);
      o.result = {{"included", r.included},
                  {"lhs", r.lhs},
                  {"rhs", r.rhs},
                  {"strong_into_target", r.into_target_from_strong},
                  {"source_into_strong", r.into_strong_from_source}};
      return o;
    });
  });

  for (const bool upper : {true, false}) {
    auto* cmd = radius->add_subcommand(upper ? "uralegaddi" : "reciprocal",
                                       upper ? "radius for Re(zf'/f) < beta2" : "radius for reciprocal order beta2");
    auto ma = std::make_shared<MapArgs>();
    auto beta2 = std::make_shared<double>(upper ? 2.0 : 0.5);
    ma->add(cmd, false, false);
    cmd->add_option("--alpha", ma->alpha)->capture_default_str();
    cmd->add_option("--beta2", *beta2)->capture_default_str();
    cmd->callback([&reg, ma, beta2, upper] {
      reg.set(upper ? "radius uralegaddi" : "radius reciprocal", [ma, beta2, upper](bool) {
        Output o;
        const Complex A = parse_complex(ma->A), B = parse_complex(ma->B);
        o.parameters = {{"A", to_json(A)}, {"B", to_json(B)}, {"alpha", ma->alpha}, {"beta2", *beta2}};
        o.result = {{"radius", upper ? uralegaddi_radius(A, B, ma->alpha, *beta2)
                                     : reciprocal_radius(A, B, ma->alpha, *beta2)}};
        return o;
      });
    });
  }

  auto* star = radius->add_subcommand("alpha-star", "root of 2a + (2/pi) atan a = 1");
  star->callback([&reg] {
    reg.set("radius alpha-star", [](bool) {
      Output o;
      const double a = alpha_star();
      o.result = {{"alpha_star", a},
                  {"residual", 2.0 * a + 2.0 / kPi * std::atan(a) - 1.0},
                  {"root_without_pi", alpha_star_without_pi()}};
      return o;
    });
  });

  auto* sl = radius->add_subcommand("starlike", "starlikeness radius for f' in the power domain");
  auto sv = std::make_shared<std::array<double, 3>>(std::array<double, 3>{1.0, -1.0, 1.0});
  sl->add_option("--A", (*sv)[0])->capture_default_str();
  sl->add_option("--B", (*sv)[1])->capture_default_str();
  sl->add_option("--beta", (*sv)[2])->capture_default_str();
  sl->callback([&reg, sv] {
    reg.set("radius starlike", [sv](bool) {
      Output o;
      o.parameters = {{"A", (*sv)[0]}, {"B", (*sv)[1]}, {"beta", (*sv)[2]}};
      const StarlikeRadius s = starlike_radius((*sv)[0], (*sv)[1], (*sv)[2]);
      o.result = {{"r0", s.r0},       {"r0_bisection", s.r0_bisection}, {"alpha_star", s.alpha_star},
                  {"theta", s.theta}, {"residual", s.residual}};
      return o;
    });
  });
}

void add_special(CLI::App& app, Registry& reg) {
  auto* special = app.add_subcommand("special", "special functions and dominants")->require_subcommand(1);

  auto* hyp = special->add_subcommand("hyp3f2", "3F2 series");
  auto hv = std::make_shared<std::tuple<std::string, std::string, double, double>>("1,1,1", "2,2", 0.5, 1e-15);
  hyp->add_option("--upper", std::get<0>(*hv), "three comma-separated reals")->capture_default_str();
  hyp->add_option("--lower", std::get<1>(*hv), "two comma-separated reals")->capture_default_str();
  hyp->add_option("--x", std::get<2>(*hv))->capture_default_str();
  hyp->add_option("--tol", std::get<3>(*hv))->capture_default_str();
  hyp->callback([&reg, hv] {
    reg.set("special hyp3f2", [hv](bool) {
      const auto up = parse_list(std::get<0>(*hv));
      const auto lo = parse_list(std::get<1>(*hv));
      if (up.size() != 3 || lo.size() != 2) {
        throw Error(ErrorCode::InvalidParams, "3F2 needs three upper and two lower parameters");
      }
      Output o;
      o.parameters = {{"upper", up}, {"lower", lo}, {"x", std::get<2>(*hv)}, {"tol", std::get<3>(*hv)}};
      const auto r = hyper_3f2({up[0], up[1], up[2]}, {lo[0], lo[1]}, std::get<2>(*hv), std::get<3>(*hv));
      o.result = {{"value", r.value}, {"terms", r.terms}};
      return o;
    });
  });

  auto* k = special->add_subcommand("K", "K(z) by nested quadrature or closed form");
  auto kv = std::make_shared<std::tuple<std::string, double, double, std::string>>("1", 1.0, 1.0, "0.5");
  k->add_option("--A", std::get<0>(*kv))->capture_default_str();
  k->add_option("--b", std::get<1>(*kv))->capture_default_str();
  k->add_option("--alpha", std::get<2>(*kv))->capture_default_str();
  k->add_option("--z", std::get<3>(*kv))->capture_default_str();
  k->callback([&reg, kv] {
    reg.set("special K", [kv](bool verify) {
      Output o;
      const Complex A = parse_complex(std::get<0>(*kv));
      const double b = std::get<1>(*kv);
      const double alpha = std::get<2>(*kv);
      const Complex z = parse_complex(std::get<3>(*kv));
      o.parameters = {{"A", to_json(A)}, {"b", b}, {"alpha", alpha}, {"z", to_json(z)}};
      const Complex value = K_function(A, b, alpha, z);
      o.result = {{"value", to_json(value)}};
      if (verify) {
        const Complex q = K_quadrature(A, b, alpha, z);
        o.oracle = {{"quadrature", to_json(q)}, {"difference", number(std::abs(q - value))}};
        if (A == Complex(0.0) || b == 0.0) {
          o.oracle["hypergeometric"] = to_json(K_hypergeometric(A, b, alpha, z));
        }
      }
      return o;
    });
  });

  auto* mg = special->add_subcommand("macgregor", "gamma(beta) = (1-2beta)/(2(2^{1-2beta}-1))");
  auto beta = std::make_shared<double>(0.5);
  mg->add_option("--beta", *beta)->capture_default_str();
  mg->callback([&reg, beta] {
    reg.set("special macgregor", [beta](bool) {
      Output o;
      o.parameters = {{"beta", *beta}};
      o.result = {{"gamma", macgregor_gamma(*beta)}};
      return o;
    });
  });

  auto* dh = special->add_subcommand("dominant-h", "dominant of the mu p^a(delta + rho p) + eta z p' p^{a-1} subordination");
  auto hs = std::make_shared<std::array<std::string, 6>>(std::array<std::string, 6>{"1", "1", "0", "1", "1", "0.5"});
  auto hr = std::make_shared<std::array<double, 3>>(std::array<double, 3>{1.0, 1.0, 1.0});
  dh->add_option("--mu", (*hs)[0])->capture_default_str();
  dh->add_option("--delta", (*hs)[1])->capture_default_str();
  dh->add_option("--rho", (*hs)[2])->capture_default_str();
  dh->add_option("--eta", (*hs)[3])->capture_default_str();
  dh->add_option("--A", (*hs)[4])->capture_default_str();
  dh->add_option("--z", (*hs)[5])->capture_default_str();
  dh->add_option("--alpha", (*hr)[0])->capture_default_str();
  dh->add_option("--gamma", (*hr)[1])->capture_default_str();
  dh->add_option("--b", (*hr)[2])->capture_default_str();
  dh->callback([&reg, hs, hr] {
    reg.set("special dominant-h", [hs, hr](bool) {
      Output o;
      DominantSpec s;
      s.mu = parse_complex((*hs)[0]);
      s.delta = parse_complex((*hs)[1]);
      s.rho = parse_complex((*hs)[2]);
      s.eta = parse_complex((*hs)[3]);
      s.A = parse_complex((*hs)[4]);
      const Complex z = parse_complex((*hs)[5]);
      s.alpha = (*hr)[0];
      s.gamma = (*hr)[1];
      s.b = (*hr)[2];
      o.parameters = {{"mu", to_json(s.mu)}, {"delta", to_json(s.delta)}, {"rho", to_json(s.rho)},
                      {"eta", to_json(s.eta)}, {"A", to_json(s.A)},         {"alpha", s.alpha},
                      {"gamma", s.gamma},      {"b", s.b},                  {"z", to_json(z)}};
      o.result = {{"value", to_json(dominant_h(s, z))},
                  {"conditions_hold", s.satisfies_dominant_conditions()}};
      return o;
    });
  });

  auto* bq = special->add_subcommand("best-q", "best dominant q for lambda(z) = (1+cz)/(1-cz)");
  auto bs = std::make_shared<std::array<std::string, 6>>(std::array<std::string, 6>{"1", "0", "1", "0", "0", "0.5"});
  auto ba = std::make_shared<double>(1.0);
  bq->add_option("--A", (*bs)[0])->capture_default_str();
  bq->add_option("--B", (*bs)[1])->capture_default_str();
  bq->add_option("--beta", (*bs)[2])->capture_default_str();
  bq->add_option("--gamma", (*bs)[3])->capture_default_str();
  bq->add_option("--lambda-c", (*bs)[4], "c in lambda(z) = (1+cz)/(1-cz)")->capture_default_str();
  bq->add_option("--z", (*bs)[5])->capture_default_str();
  bq->add_option("--alpha", *ba)->capture_default_str();
  bq->callback([&reg, bs, ba] {
    reg.set("special best-q", [bs, ba](bool) {
      Output o;
      const Complex A = parse_complex((*bs)[0]), B = parse_complex((*bs)[1]);
      const Complex beta = parse_complex((*bs)[2]), gamma = parse_complex((*bs)[3]);
      const Complex c = parse_complex((*bs)[4]), z = parse_complex((*bs)[5]);
      o.parameters = {{"A", to_json(A)},       {"B", to_json(B)},        {"alpha", *ba},
                      {"beta", to_json(beta)}, {"gamma", to_json(gamma)}, {"lambda_c", to_json(c)},
                      {"z", to_json(z)}};
      const auto lambda = [c](Complex t) { return (1.0 + c * t) / (1.0 - c * t); };
      o.result = {{"value", to_json(best_dominant_q(lambda, *ba, A, B, beta, gamma, z))}};
      return o;
    });
  });

  auto* sv = special->add_subcommand("silverman", "inclusion criterion for |zp'/p^2| < beta");
  auto ss = std::make_shared<std::string>("1");
  auto sr = std::make_shared<std::array<double, 3>>(std::array<double, 3>{1.0, 1.0, 0.5});
  sv->add_option("--A", *ss)->capture_default_str();
  sv->add_option("--b", (*sr)[0])->capture_default_str();
  sv->add_option("--alpha", (*sr)[1])->capture_default_str();
  sv->add_option("--beta", (*sr)[2])->capture_default_str();
  sv->callback([&reg, ss, sr] {
    reg.set("special silverman", [ss, sr](bool) {
      Output o;
      const Complex A = parse_complex(*ss);
      o.parameters = {{"A", to_json(A)}, {"b", (*sr)[0]}, {"alpha", (*sr)[1]}, {"beta", (*sr)[2]}};
      o.result = {{"included", silverman_inclusion(A, (*sr)[0], (*sr)[1], (*sr)[2])},
                  {"bound", silverman_bound(A, (*sr)[0], (*sr)[1])}};
      return o;
    });
  });
}

struct VerifyArgs {
  std::string theorem = "all";
  std::optional<std::uint64_t> seed_from;
  std::optional<std::uint64_t> seed_to;
  std::string jsonl;
  std::size_t samples = 4096;
};

void add_verify(CLI::App& app, Registry& reg, const std::uint64_t* seed, int* exit_override) {
  auto* verify = app.add_subcommand("verify", "randomized implication trials");
  auto v = std::make_shared<VerifyArgs>();
  verify->add_option("--theorem", v->theorem, "trial id or 'all'")->capture_default_str();
  verify->add_option("--seed-from", v->seed_from, "first seed (default: --seed)");
  verify->add_option("--seed-to", v->seed_to, "last seed, inclusive (default: first + 49)");
  verify->add_option("--jsonl", v->jsonl, "write one JSON line per trial to this file");
  verify->add_option("--samples", v->samples, "boundary samples per trial")->capture_default_str();
  verify->callback([&reg, v, seed, exit_override] {
    reg.set("verify", [v, seed, exit_override](bool) {
      std::vector<TheoremId> ids;
      if (v->theorem == "all") {
        ids.assign(all_theorems().begin(), all_theorems().end());
      } else {
        ids.push_back(theorem_from_string(v->theorem));
      }
      const std::uint64_t from = v->seed_from.value_or(*seed);
      const std::uint64_t to = v->seed_to.value_or(from + 49);
      if (to < from) throw Error(ErrorCode::InvalidParams, "--seed-to must not precede --seed-from");
      TrialOptions options;
      options.samples = v->samples;

      Output o;
      o.parameters = {{"theorem", v->theorem}, {"seed_from", from}, {"seed_to", to}, {"samples", v->samples}};
      std::ostringstream lines;
      json reports = json::array();
      std::size_t trials = 0, hypothesis = 0, violations = 0;
      for (TheoremId id : ids) {
        for (std::uint64_t s = from; s <= to; ++s) {
          const TrialReport r = implication_trial(id, s, options);
          ++trials;
          hypothesis += r.hypothesis_holds ? 1 : 0;
          violations += r.violation() ? 1 : 0;
          const std::string line = to_json_line(r);
          lines << line << '\n';
          if (v->jsonl.empty()) reports.push_back(json::parse(line));
        }
      }
      if (!v->jsonl.empty()) write_file(v->jsonl, lines.str());
      o.result = {{"trials", trials}, {"hypothesis_true", hypothesis}, {"violations", violations}};
      if (v->jsonl.empty()) {
        o.result["reports"] = reports;
      } else {
        o.result["jsonl"] = v->jsonl;
      }
      if (violations > 0) *exit_override = kNumericalExit;
      return o;
    });
  });
}

void add_plot(CLI::App& app, Registry& reg) {
  auto* plot = app.add_subcommand("plot", "SVG picture and CSV samples of the boundary curve");
  auto m = std::make_shared<MapArgs>();
  m->r = 0.9;
  m->add(plot, true, true);
  auto files = std::make_shared<std::pair<std::string, std::string>>();
  auto samples = std::make_shared<std::size_t>(2048);
  plot->add_option("--svg", files->first, "SVG output path");
  plot->add_option("--csv", files->second, "CSV output path");
  plot->add_option("--samples", *samples)->capture_default_str();
  plot->callback([&reg, m, files, samples] {
    reg.set("plot", [m, files, samples](bool) {
      if (files->first.empty() && files->second.empty()) {
        throw Error(ErrorCode::InvalidParams, "plot needs --svg and/or --csv");
      }
      Output o;
      o.parameters = m->to_json_block(true, true);
      o.parameters["samples"] = *samples;
      const JanowskiParams p = m->params();
      if (!files->first.empty()) {
        write_file(files->first, domain_svg(p, m->r, *samples));
        o.result["svg"] = files->first;
      }
      if (!files->second.empty()) {
        write_file(files->second, curve_csv(envelope_curve(p, m->r, *samples)));
        o.result["csv"] = files->second;
      }
      return o;
    });
  });
}

int report_error(const Error& e, std::ostream& err) {
  json j = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.code() == ErrorCode::ConditionFailed) j["excess"] = e.excess();
  err << j.dump() << '\n';
  return is_numerical(e.code()) ? 3 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometry, bounds and subordination checks for oblique Janowski domains", "janowski"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verify = false;
  std::string out_path;
  std::optional<std::uint64_t> seed_flag;
  app.add_flag("--verify", verify, "append an independent oracle block");
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_option("--seed", seed_flag, "seed (default: $JANOWSKI_SEED or 0)");
  app.set_version_flag("--version", kVersion);

  Registry reg;
  std::uint64_t seed = 0;
  int exit_override = 0;
  add_geometry(app, reg);
  add_bounds(app, reg);
  add_radius(app, reg);
  add_special(app, reg);
  add_verify(app, reg, &seed, &exit_override);
  add_plot(app, reg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    return report_error(e, err);
  }
  if (!reg.action()) {
    err << "no command selected; see --help\n";
    return 2;
  }

  try {
    seed = seed_flag ? *seed_flag : default_seed();
    const Output o = reg.action()(verify);
    json envelope = {{"command", reg.name()},
                     {"parameters", o.parameters},
                     {"result", o.result},
                     {"version", kVersion},
                     {"seed", seed}};
    if (verify) envelope["oracle"] = o.oracle;
    const std::string text = envelope.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
    }
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return 3;
  }
  return exit_override;
}

}  // namespace janowski::cli
