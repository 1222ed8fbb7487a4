#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lfsim::estimator {

enum class RoutingModel { kAlon, kBeals, kBrierley, kHerbert };
enum class ToffoliScheme { kFactory5p5d, kBrown3d };

struct Reversibility {
  enum class Scheme { kNaive, kBennett };
  Scheme scheme = Scheme::kNaive;
  int levels = 0;  // Bennett recursion depth L
};

/// Inputs to the resource chain. Symbols renamed to avoid single-letter
/// collisions: flop_to_bool (a), bool_parallel (b), synth_overhead (c),
/// parallelism (k), qubits_per_chip (u).
struct EstimatorInputs {
  double flops = 1e15;               // F, FLOP/s
  double bits = 1e15;                // S, memory bits
  double flop_to_bool = 1e4;         // Boolean ops per FLOP
  double bool_parallel = 10.0;       // gates runnable per depth step
  double synth_overhead = 75.0 / 19.0;  // synthesis constant in q
  double parallelism = 1e7;          // concurrent processes
  double segment_seconds = 1.0;      // T
  double eps = 1e-2;                 // total logical failure budget
  double p_ratio = 0.01;             // p / p_th, must be in (0,1)
  double qubits_per_chip = 3.0;      // u
  double tau_qec_seconds = 1e-6;     // surface-code cycle time
  RoutingModel routing_model = RoutingModel::kBeals;
  ToffoliScheme toffoli_scheme = ToffoliScheme::kFactory5p5d;
  Reversibility reversibility{};

  /// Routing+synthesis depth factor q. Set to use a fixed value (the usual
  /// rounded 1e3); clear to use (40/3) * synth_overhead * log10(s_I).
  std::optional<double> q_route_override = 1e3;

  /// Snap s_I and the error-location count to the nearest power of 10
  /// before continuing the chain.
  bool paper_rounded = true;

  /// Which qubit count multiplies 2*t_L in the error-location count:
  /// false -> s_L (default), true -> s_I.
  bool ell_uses_s_i = false;

  double physical_per_logical = 2.0;  // times d^2, per surface-code patch
  std::optional<double> n_factories;  // default: one per concurrent process

  void validate() const;  // throws std::invalid_argument
};

struct ClassicalDerived {
  double gamma_per_second;  // Boolean ops / s
  double delta_per_second;  // circuit depth / s
  double t_seg;             // depth per segment
  double g_seg;             // gates per segment
  double s_seg;             // bits
};

struct ReversibleCost {
  double gates;  // g_R
  double bits;   // s_R
  double depth;  // t_R
};

struct PebbleResult {
  std::int64_t segment_executions;
  int max_pebbles;
};

struct LogicalResources {
  double s_i;      // instantaneous logical qubits
  double s_l;      // with chip overhead, u * s_I
  double q_route;  // depth factor actually used
  double t_l;      // logical Toffoli depth
};

struct CodeDistanceResult {
  double err_locations;  // ell
  double p_l_target;     // eps / ell
  double r_exponent;
  int code_distance;
};

/// Tail of the chain from the error-location count down, so a report can
/// carry both the rounded and the exact variant.
struct ChainTail {
  double err_locations = 0.0;
  double p_l_target = 0.0;
  double r_exponent = 0.0;
  int code_distance = 0;
  double tau_ltof_seconds = 0.0;
  double t_q_seconds = 0.0;
  double time_ratio = 0.0;
};

struct EstimatorReport {
  double gamma_per_second = 0.0;
  double delta_per_second = 0.0;
  double t_seg = 0.0, g_seg = 0.0, s_seg = 0.0;
  double g_r = 0.0, s_r = 0.0, t_r = 0.0;
  double s_i = 0.0, t_i = 0.0;
  double q_route = 0.0;
  double s_l = 0.0, t_l = 0.0;
  double err_locations = 0.0;
  double p_l_target = 0.0;
  double r_exponent = 0.0;
  int code_distance = 0;
  double tau_ltof_seconds = 0.0;
  double t_q_seconds = 0.0;
  double time_ratio = 0.0;  // T_Q / T
  double factory_qubits_each = 0.0;
  double factory_qubits_total = 0.0;
  double data_physical_qubits = 0.0;

  bool paper_rounded = true;
  /// Same chain with the rounding mode flipped (exact when the report is
  /// rounded and vice versa); absent if that variant fails.
  std::optional<ChainTail> other_mode;

  double closed_form_ratio = 0.0;      // corrected reading
  double closed_form_ratio_alt = 0.0;  // literal reading with the extra T
  std::vector<std::string> warnings;
};

ClassicalDerived derive_classical(const EstimatorInputs& in);

/// Cost of running one segment reversibly. Naive: every gate output is kept
/// (g gates, g+s bits). Bennett: binary pebbling with L levels, (3/2)^L
/// gates and depth, (L+1)s bits.
ReversibleCost reversible_overhead(const EstimatorInputs& in, double gates,
                                   double bits, double depth);

/// Exact binary compute/uncompute pebbling over `segments` (a power of two)
/// pieces; closed form is (3^L, L+1). Oracle for reversible_overhead.
PebbleResult pebble_game_simulate(std::int64_t segments);

/// Multiplicative depth factor for limited connectivity. Beals uses
/// hypercube degree D = log2(s_i).
double routing_factor(RoutingModel model, double s_i);

/// s_i = gates + bits of the reversible run; s_l = u * s_i; t_l = q * depth.
LogicalResources logical_resources(const EstimatorInputs& in, double gates,
                                   double bits, double depth);

/// Distance needed so 0.03 * p_ratio^((d+1)/2) per location keeps the total
/// failure under eps. Throws if the target is unreachable (r <= 0).
CodeDistanceResult code_distance(const EstimatorInputs& in, double t_l,
                                 double s_for_ell);

double toffoli_time(int distance, double tau_qec_seconds, ToffoliScheme scheme);

struct FactoryCost {
  double per_factory;
  double total;
};
FactoryCost factory_cost(int distance, double n_factories);

/// The compacted closed-form time ratio. With literal_extra_t the inner
/// logarithm argument carries the extra factor of T that the compact formula
/// appears to have; otherwise the corrected reading, which matches the
/// stepwise chain run with q = 4c*log2(g), no rounding.
double closed_form_time_ratio(const EstimatorInputs& in, bool literal_extra_t);

EstimatorReport full_report(const EstimatorInputs& in);

/// Assigns one input field by name ("flops", "eps", "p_ratio", ...). Throws
/// on unknown names. Shared by sweep and the CLI override flag.
void set_parameter(EstimatorInputs& in, const std::string& name, double value);

std::vector<EstimatorReport> sweep(const EstimatorInputs& in,
                                   const std::string& parameter,
                                   const std::vector<double>& grid);

}  // namespace lfsim::estimator
