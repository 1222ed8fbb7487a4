#include "lfsim/spacetime/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lfsim::spacetime {

const Event& ProtocolSchedule::find(const std::string& label) const {
  for (const Event& e : events)
    if (e.label == label) return e;
  throw std::invalid_argument("schedule is missing event: " + label);
}

bool ProtocolSchedule::has(const std::string& label) const {
  return std::any_of(events.begin(), events.end(),
                     [&](const Event& e) { return e.label == label; });
}

ProtocolSchedule canonical_schedule(double segment_duration, double bob_offset,
                                    const CanonicalTimings& tm) {
  if (segment_duration <= 0.0)
    throw std::invalid_argument("segment duration must be positive");
  const double T = segment_duration;
  ProtocolSchedule s;
  s.segment_duration = T;
  s.bob_offset = bob_offset;
  s.events = {
      {"c", 0.0, 0.0, tm.observe_frac * T},
      {"m", (tm.observe_frac + tm.message_frac) * T, 0.0, 0.0},
      {"x", tm.x_choice_frac * T, 0.0, 0.0},
      {"y", tm.y_choice_frac * T, bob_offset, 0.0},
      {"b", tm.b_frac * T, bob_offset, 0.0},
      {"a1", tm.a1_frac * T, 0.0, 0.0},
      {"R", tm.reversal_frac * T, 0.0, T},
      {"q-return", tm.q_return_frac * T, 0.0, 0.0},
      {"a2", tm.a2_frac * T, 0.0, 0.0},
  };
  return s;
}

bool in_future_lightcone(const Event& e1, const Event& e2) {
  return e2.t - (e1.t + e1.duration) >= std::abs(e2.pos - e1.pos);
}

namespace {

ScheduleReport validate_impl(const ProtocolSchedule& s, bool include_a1,
                             bool include_a2) {
  for (const char* label : {"x", "y", "c", "m", "b"}) (void)s.find(label);
  if (include_a1) (void)s.find("a1");
  if (include_a2) {
    (void)s.find("a2");
    (void)s.find("R");
    (void)s.find("q-return");
  }

  const Event& x = s.find("x");
  const Event& y = s.find("y");
  const Event& c = s.find("c");
  const Event& m = s.find("m");
  const Event& b = s.find("b");

  ScheduleReport report;
  auto check = [&](const std::string& desc, bool ok) {
    report.conditions.push_back({desc, ok});
  };

  check("c outside future light-cone of x", !in_future_lightcone(x, c));
  check("m outside future light-cone of x", !in_future_lightcone(x, m));
  check("b outside future light-cone of x", !in_future_lightcone(x, b));
  check("c outside future light-cone of y", !in_future_lightcone(y, c));
  check("m outside future light-cone of y", !in_future_lightcone(y, m));
  if (include_a1) {
    const Event& a1 = s.find("a1");
    check("a1 outside future light-cone of y", !in_future_lightcone(y, a1));
    check("a1 inside future light-cone of x", in_future_lightcone(x, a1));
  }
  if (include_a2) {
    const Event& a2 = s.find("a2");
    const Event& rev = s.find("R");
    const Event& qret = s.find("q-return");
    check("a2 outside future light-cone of y", !in_future_lightcone(y, a2));
    check("a2 inside future light-cone of x", in_future_lightcone(x, a2));
    check("reversal starts only after the message is sent", rev.t >= m.t);
    check("qubit returns only after the reversal window",
          qret.t >= rev.t + rev.duration);
    check("a2 happens after the qubit returns", in_future_lightcone(qret, a2));
  }
  check("b inside future light-cone of y", in_future_lightcone(y, b));
  check("m inside future light-cone of c", in_future_lightcone(c, m));

  report.all_passed =
      std::all_of(report.conditions.begin(), report.conditions.end(),
                  [](const ConditionResult& r) { return r.passed; });
  return report;
}

double bisect_offset(double T, const CanonicalTimings& tm, bool include_a1,
                     bool include_a2, double tol) {
  auto passes = [&](double offset) {
    return validate_impl(canonical_schedule(T, offset, tm), include_a1,
                         include_a2)
        .all_passed;
  };
  if (passes(0.0)) return 0.0;
  double hi = T;
  int doublings = 0;
  while (!passes(hi)) {
    hi *= 2.0;
    if (++doublings > 60)
      throw std::runtime_error("timing pattern admits no valid separation");
  }
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (passes(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ScheduleReport validate_schedule(const ProtocolSchedule& s) {
  return validate_impl(s, true, true);
}

MinSeparationResult min_bob_separation(double segment_duration,
                                       const CanonicalTimings& timings,
                                       double tol) {
  MinSeparationResult res;
  res.overall = bisect_offset(segment_duration, timings, true, true, tol);
  res.x1_branch = bisect_offset(segment_duration, timings, true, false, tol);
  res.x2_branch = bisect_offset(segment_duration, timings, false, true, tol);
  return res;
}

}  // namespace lfsim::spacetime
