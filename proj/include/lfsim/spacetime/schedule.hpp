#pragma once

#include <string>
#include <vector>

namespace lfsim::spacetime {

/// Event in 1+1-D Minkowski coordinates, units c = 1 (seconds and
/// light-seconds). Events occupy a bounded interval [t, t + duration] at a
/// fixed position.
struct Event {
  std::string label;
  double t = 0.0;         // seconds
  double pos = 0.0;       // light-seconds
  double duration = 0.0;  // seconds, >= 0
};

/// Timestamped protocol events for one run. Parties: the friend and Alice
/// near pos 0, Bob at pos bob_offset.
struct ProtocolSchedule {
  std::vector<Event> events;
  double segment_duration = 1.0;  // T, seconds
  double bob_offset = 0.0;        // light-seconds

  const Event& find(const std::string& label) const;  // throws if absent
  bool has(const std::string& label) const;
};

/// Relative timings of the canonical schedule, as fractions of T. The split
/// of T into observation, message composition, and slack is a construction
/// choice, not fixed by the protocol.
struct CanonicalTimings {
  double observe_frac = 0.45;   // tau / T
  double message_frac = 0.45;   // tau' / T
  // Alice picks x only once the message is sealed, so the message cannot
  // depend on her choice.
  double x_choice_frac = 0.95;
  double y_choice_frac = 0.5;
  double b_frac = 0.6;
  double a1_frac = 1.0;
  double reversal_frac = 1.0;   // R; reversal occupies [T, 2T]
  double q_return_frac = 2.0;
  double a2_frac = 2.05;
};

/// Builds the schedule of the minimal protocol for the given T and Bob
/// separation.
ProtocolSchedule canonical_schedule(double segment_duration, double bob_offset,
                                    const CanonicalTimings& timings = {});

/// Whole-interval light-cone relation: true iff e2 starts no earlier than the
/// light signal from the end of e1 can reach e2's position.
bool in_future_lightcone(const Event& e1, const Event& e2);

struct ConditionResult {
  std::string description;
  bool passed;
};

struct ScheduleReport {
  std::vector<ConditionResult> conditions;
  bool all_passed = false;
};

/// Checks the light-cone conditions the protocol needs:
///  (i)   c, m, b outside the future light-cone of x
///  (ii)  c, m, a1, a2 outside the future light-cone of y
///  (iii) a1, a2 inside the future light-cone of x
///  (iv)  b inside the future light-cone of y
///  (v)   m inside the future light-cone of c
///  (vi)  R no earlier than m, and q-return only after the reversal window
/// Throws if a mandatory event is missing.
ScheduleReport validate_schedule(const ProtocolSchedule& s);

struct MinSeparationResult {
  double overall;    // light-seconds
  double x1_branch;  // enough for the read-message branch alone
  double x2_branch;  // enough for the reverse-and-measure branch alone
};

/// Smallest bob_offset for which the canonical schedule validates, with all
/// timings fixed; located by bisection. Scales linearly with T.
MinSeparationResult min_bob_separation(double segment_duration,
                                       const CanonicalTimings& timings = {},
                                       double tol = 1e-9);

}  // namespace lfsim::spacetime
