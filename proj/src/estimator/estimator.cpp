#include "lfsim/estimator/estimator.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace lfsim::estimator {

namespace {

double snap_pow10(double x) { return std::pow(10.0, std::round(std::log10(x))); }

constexpr double kPerLocationPrefactor = 0.03;

}  // namespace

void EstimatorInputs::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(name) + " must be positive");
  };
  positive(flops, "flops");
  positive(bits, "bits");
  positive(flop_to_bool, "flop_to_bool");
  positive(bool_parallel, "bool_parallel");
  positive(synth_overhead, "synth_overhead");
  positive(parallelism, "parallelism");
  positive(segment_seconds, "segment_seconds");
  positive(qubits_per_chip, "qubits_per_chip");
  positive(tau_qec_seconds, "tau_qec_seconds");
  positive(physical_per_logical, "physical_per_logical");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("eps must be in (0,1)");
  if (!(p_ratio > 0.0 && p_ratio < 1.0))
    throw std::invalid_argument(
        "p_ratio must be in (0,1): the physical error rate has to be below "
        "threshold for the code to help");
  if (reversibility.scheme == Reversibility::Scheme::kBennett &&
      reversibility.levels < 0)
    throw std::invalid_argument("Bennett levels must be nonnegative");
  if (q_route_override && !(*q_route_override > 0.0))
    throw std::invalid_argument("q_route_override must be positive");
  if (n_factories && !(*n_factories >= 0.0))
    throw std::invalid_argument("n_factories must be nonnegative");
}

ClassicalDerived derive_classical(const EstimatorInputs& in) {
  in.validate();
  ClassicalDerived d;
  d.gamma_per_second = in.flops * in.flop_to_bool;
  d.delta_per_second = d.gamma_per_second / (in.parallelism * in.bool_parallel);
  d.t_seg = d.delta_per_second * in.segment_seconds;
  d.g_seg = d.t_seg * in.parallelism * in.bool_parallel;
  d.s_seg = in.bits;
  return d;
}

ReversibleCost reversible_overhead(const EstimatorInputs& in, double gates,
                                   double bits, double depth) {
  if (!(gates > 0.0) || !(bits > 0.0) || !(depth > 0.0))
    throw std::invalid_argument("gates, bits, depth must be positive");
  if (in.reversibility.scheme == Reversibility::Scheme::kNaive)
    return {gates, gates + bits, depth};
  const int L = in.reversibility.levels;
  if (L < 0) throw std::invalid_argument("Bennett levels must be nonnegative");
  const double blowup = std::pow(1.5, L);
  return {gates * blowup, bits * double(L + 1), depth * blowup};
}

PebbleResult pebble_game_simulate(std::int64_t segments) {
  if (segments < 1 || (segments & (segments - 1)) != 0)
    throw std::invalid_argument("segment count must be a power of two");
  std::int64_t execs = 0;
  int cur = 0, peak = 0;
  // compute(n) leaves one new pebble n segments ahead; uncompute(n) removes
  // it. The input pebble is free and not counted.
  std::function<void(std::int64_t)> compute, uncompute;
  compute = [&](std::int64_t n) {
    if (n == 1) {
      ++execs;
      peak = std::max(peak, ++cur);
      return;
    }
    compute(n / 2);
    compute(n / 2);
    uncompute(n / 2);
  };
  uncompute = [&](std::int64_t n) {
    if (n == 1) {
      ++execs;
      --cur;
      return;
    }
    compute(n / 2);
    uncompute(n / 2);
    uncompute(n / 2);
  };
  compute(segments);
  return {execs, peak};
}

double routing_factor(RoutingModel model, double s_i) {
  if (!(s_i >= 2.0))
    throw std::invalid_argument("routing needs at least two qubits");
  switch (model) {
    case RoutingModel::kAlon:
      return 3.0 * s_i;
    case RoutingModel::kBeals: {
      const double deg = std::log2(s_i);
      return deg * (deg + 1.0) / 2.0;
    }
    case RoutingModel::kBrierley:
      return 6.0 * std::log2(s_i);
    case RoutingModel::kHerbert:
      return 4.0 * std::log2(s_i);
  }
  throw std::invalid_argument("unknown routing model");
}

LogicalResources logical_resources(const EstimatorInputs& in, double gates,
                                   double bits, double depth) {
  LogicalResources r;
  r.s_i = gates + bits;
  if (in.paper_rounded) r.s_i = snap_pow10(r.s_i);
  r.q_route = in.q_route_override
                  ? *in.q_route_override
                  : (40.0 / 3.0) * in.synth_overhead * std::log10(r.s_i);
  r.s_l = in.qubits_per_chip * r.s_i;
  r.t_l = r.q_route * depth;
  return r;
}

CodeDistanceResult code_distance(const EstimatorInputs& in, double t_l,
                                 double s_for_ell) {
  CodeDistanceResult res;
  res.err_locations = 2.0 * t_l * s_for_ell;
  if (in.paper_rounded) res.err_locations = snap_pow10(res.err_locations);
  res.p_l_target = in.eps / res.err_locations;
  res.r_exponent = std::log(res.p_l_target / kPerLocationPrefactor) /
                   std::log(in.p_ratio);
  if (!(res.r_exponent > 0.0))
    throw std::runtime_error(
        "required per-location error rate is not reachable at this p_ratio");
  res.code_distance =
      std::max(3, int(std::ceil(2.0 * res.r_exponent - 1.0)));
  return res;
}

double toffoli_time(int distance, double tau_qec_seconds,
                    ToffoliScheme scheme) {
  if (distance < 3) throw std::invalid_argument("distance must be >= 3");
  const double cycles =
      scheme == ToffoliScheme::kFactory5p5d ? 5.5 * distance : 3.0 * distance;
  return cycles * tau_qec_seconds;
}

FactoryCost factory_cost(int distance, double n_factories) {
  if (distance < 1) throw std::invalid_argument("distance must be >= 1");
  const double per = 144.0 * double(distance) * double(distance);
  return {per, per * n_factories};
}

double closed_form_time_ratio(const EstimatorInputs& in, bool literal_extra_t) {
  in.validate();
  const double a = in.flop_to_bool, F = in.flops, S = in.bits;
  const double T = in.segment_seconds;
  const double g = a * F * T;
  const double t = g / (in.parallelism * in.bool_parallel);
  const double q = 4.0 * in.synth_overhead * std::log2(g);
  const double t_l = q * t;
  const double s_l = in.qubits_per_chip * (g + S);
  const double ell = 2.0 * t_l * s_l * (literal_extra_t ? T : 1.0);
  const double r = std::log(in.eps / (kPerLocationPrefactor * ell)) /
                   std::log(in.p_ratio);
  if (!(r > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  const int d = std::max(3, int(std::ceil(2.0 * r - 1.0)));
  const double cycles =
      in.toffoli_scheme == ToffoliScheme::kFactory5p5d ? 5.5 : 3.0;
  return t_l * cycles * double(d) * in.tau_qec_seconds / T;
}

namespace {

ChainTail chain_tail(const EstimatorInputs& in, double t_l, double s_for_ell,
                     double T) {
  const CodeDistanceResult cd = code_distance(in, t_l, s_for_ell);
  ChainTail tail;
  tail.err_locations = cd.err_locations;
  tail.p_l_target = cd.p_l_target;
  tail.r_exponent = cd.r_exponent;
  tail.code_distance = cd.code_distance;
  tail.tau_ltof_seconds =
      toffoli_time(cd.code_distance, in.tau_qec_seconds, in.toffoli_scheme);
  tail.t_q_seconds = t_l * tail.tau_ltof_seconds;
  tail.time_ratio = tail.t_q_seconds / T;
  return tail;
}

}  // namespace

EstimatorReport full_report(const EstimatorInputs& in) {
  in.validate();
  EstimatorReport rep;
  rep.paper_rounded = in.paper_rounded;

  const ClassicalDerived cd = derive_classical(in);
  rep.gamma_per_second = cd.gamma_per_second;
  rep.delta_per_second = cd.delta_per_second;
  rep.t_seg = cd.t_seg;
  rep.g_seg = cd.g_seg;
  rep.s_seg = cd.s_seg;

  const ReversibleCost rc =
      reversible_overhead(in, cd.g_seg, cd.s_seg, cd.t_seg);
  rep.g_r = rc.gates;
  rep.s_r = rc.bits;
  rep.t_r = rc.depth;

  // In the naive scheme every gate output becomes a live bit, so the
  // instantaneous count is g+s; under Bennett only the checkpoints live.
  const bool naive = in.reversibility.scheme == Reversibility::Scheme::kNaive;
  const LogicalResources lr =
      naive ? logical_resources(in, cd.g_seg, cd.s_seg, rc.depth)
            : logical_resources(in, 0.0, rc.bits, rc.depth);
  rep.s_i = lr.s_i;
  rep.t_i = rc.depth;
  rep.q_route = lr.q_route;
  rep.s_l = lr.s_l;
  rep.t_l = lr.t_l;

  const double s_for_ell = in.ell_uses_s_i ? lr.s_i : lr.s_l;
  const ChainTail main_tail =
      chain_tail(in, lr.t_l, s_for_ell, in.segment_seconds);
  rep.err_locations = main_tail.err_locations;
  rep.p_l_target = main_tail.p_l_target;
  rep.r_exponent = main_tail.r_exponent;
  rep.code_distance = main_tail.code_distance;
  rep.tau_ltof_seconds = main_tail.tau_ltof_seconds;
  rep.t_q_seconds = main_tail.t_q_seconds;
  rep.time_ratio = main_tail.time_ratio;

  // Variant with the rounding mode flipped, for side-by-side reporting.
  try {
    EstimatorInputs flipped = in;
    flipped.paper_rounded = !in.paper_rounded;
    const LogicalResources lrf =
        naive ? logical_resources(flipped, cd.g_seg, cd.s_seg, rc.depth)
              : logical_resources(flipped, 0.0, rc.bits, rc.depth);
    const double s_f = in.ell_uses_s_i ? lrf.s_i : lrf.s_l;
    rep.other_mode = chain_tail(flipped, lrf.t_l, s_f, in.segment_seconds);
  } catch (const std::exception&) {
    rep.other_mode.reset();
  }

  const double nf = in.n_factories ? *in.n_factories : in.parallelism;
  const FactoryCost fc = factory_cost(rep.code_distance, nf);
  rep.factory_qubits_each = fc.per_factory;
  rep.factory_qubits_total = fc.total;
  rep.data_physical_qubits = rep.s_l * in.physical_per_logical *
                             double(rep.code_distance) *
                             double(rep.code_distance);

  rep.closed_form_ratio = closed_form_time_ratio(in, false);
  rep.closed_form_ratio_alt = closed_form_time_ratio(in, true);

  if (in.p_ratio > 0.5)
    rep.warnings.push_back(
        "p_ratio close to 1: operating near threshold, distances blow up");
  if (rep.code_distance == 3 && rep.r_exponent < 2.0)
    rep.warnings.push_back("code distance hit the floor of 3");
  if (!naive)
    rep.warnings.push_back(
        "Bennett mode: depth factor (3/2)^L applied to t before synthesis");
  return rep;
}

void set_parameter(EstimatorInputs& in, const std::string& name, double value) {
  static const std::map<std::string, double EstimatorInputs::*> kFields = {
      {"flops", &EstimatorInputs::flops},
      {"bits", &EstimatorInputs::bits},
      {"flop_to_bool", &EstimatorInputs::flop_to_bool},
      {"bool_parallel", &EstimatorInputs::bool_parallel},
      {"synth_overhead", &EstimatorInputs::synth_overhead},
      {"parallelism", &EstimatorInputs::parallelism},
      {"segment_seconds", &EstimatorInputs::segment_seconds},
      {"eps", &EstimatorInputs::eps},
      {"p_ratio", &EstimatorInputs::p_ratio},
      {"qubits_per_chip", &EstimatorInputs::qubits_per_chip},
      {"tau_qec_seconds", &EstimatorInputs::tau_qec_seconds},
      {"physical_per_logical", &EstimatorInputs::physical_per_logical},
  };
  if (auto it = kFields.find(name); it != kFields.end()) {
    in.*(it->second) = value;
    return;
  }
  if (name == "q_route") {
    in.q_route_override = value;
    return;
  }
  if (name == "n_factories") {
    in.n_factories = value;
    return;
  }
  if (name == "bennett_levels") {
    in.reversibility.scheme = Reversibility::Scheme::kBennett;
    in.reversibility.levels = int(value);
    return;
  }
  if (name == "paper_rounded") {
    in.paper_rounded = value != 0.0;
    return;
  }
  if (name == "ell_uses_s_i") {
    in.ell_uses_s_i = value != 0.0;
    return;
  }
  throw std::invalid_argument("unknown estimator parameter: " + name);
}

std::vector<EstimatorReport> sweep(const EstimatorInputs& in,
                                   const std::string& parameter,
                                   const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  std::vector<EstimatorReport> out;
  out.reserve(grid.size());
  for (double v : grid) {
    EstimatorInputs point = in;
    set_parameter(point, parameter, v);
    out.push_back(full_report(point));
  }
  return out;
}

}  // namespace lfsim::estimator
