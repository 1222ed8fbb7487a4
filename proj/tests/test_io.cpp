#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfsim/ewfs/scenario.hpp"
#include "lfsim/io/io.hpp"
#include "lfsim/lfpoly/lf.hpp"

using namespace lfsim;
using io::json;

namespace {

double max_diff(const ewfs::Behavior& u, const ewfs::Behavior& v) {
  double m = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          m = std::max(m, std::abs(u.at(x, y, a, b) - v.at(x, y, a, b)));
  return m;
}

}  // namespace

TEST_CASE("behavior JSON and CSV round-trip within 1e-12") {
  const ewfs::Behavior bh =
      ewfs::behavior(ewfs::ScenarioConfig::tsirelson_defaults());
  CHECK(max_diff(bh, io::behavior_from_json(io::behavior_to_json(bh))) <
        1e-12);
  CHECK(max_diff(bh, io::behavior_from_csv(io::behavior_to_csv(bh))) < 1e-12);
}

TEST_CASE("behavior CSV rejects malformed input") {
  CHECK_THROWS(io::behavior_from_csv("nope\n1,1,1,1,0.25\n"));
  // 15 rows only.
  std::string csv = "x,y,a,b,p\n";
  int rows = 0;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          if (++rows == 16) continue;
          csv += std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(a) + "," + std::to_string(b) + ",0.25\n";
        }
  CHECK_THROWS(io::behavior_from_csv(csv));
  CHECK_THROWS(io::behavior_from_csv("x,y,a,b,p\n3,1,1,1,1.0\n"));
}

TEST_CASE("schedule round-trips through JSON") {
  const spacetime::ProtocolSchedule s = spacetime::canonical_schedule(1.5, 2.5);
  const spacetime::ProtocolSchedule back =
      io::schedule_from_json(io::schedule_to_json(s));
  CHECK(back.segment_duration == s.segment_duration);
  CHECK(back.bob_offset == s.bob_offset);
  REQUIRE(back.events.size() == s.events.size());
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    CHECK(back.events[i].label == s.events[i].label);
    CHECK(back.events[i].t == s.events[i].t);
    CHECK(back.events[i].pos == s.events[i].pos);
    CHECK(back.events[i].duration == s.events[i].duration);
  }
}

TEST_CASE("scenario config round-trips, including complex amplitudes") {
  ewfs::ScenarioConfig cfg = ewfs::ScenarioConfig::tsirelson_defaults();
  cfg.initial_two_qubit_state(1) = qsim::Complex(0.1, 0.2);
  cfg.initial_two_qubit_state.normalize();
  cfg.scramble_seed = 12345;
  cfg.noise_point = ewfs::NoisePoint::kFriendBetween;
  cfg.depolarizing_p = 0.07;
  const ewfs::ScenarioConfig back =
      io::scenario_config_from_json(io::scenario_config_to_json(cfg));
  CHECK((back.initial_two_qubit_state - cfg.initial_two_qubit_state).norm() <
        1e-15);
  CHECK(back.scramble_seed == cfg.scramble_seed);
  CHECK(back.noise_point == cfg.noise_point);
  CHECK(back.depolarizing_p == cfg.depolarizing_p);
}

TEST_CASE("estimator inputs round-trip, q_route formula mode included") {
  estimator::EstimatorInputs in;
  in.flops = 3e14;
  in.q_route_override.reset();
  in.reversibility = {estimator::Reversibility::Scheme::kBennett, 5};
  in.routing_model = estimator::RoutingModel::kHerbert;
  in.toffoli_scheme = estimator::ToffoliScheme::kBrown3d;
  in.n_factories = 42.0;
  const estimator::EstimatorInputs back =
      io::estimator_inputs_from_json(io::estimator_inputs_to_json(in));
  CHECK(back.flops == in.flops);
  CHECK(!back.q_route_override.has_value());
  CHECK(back.reversibility.scheme == in.reversibility.scheme);
  CHECK(back.reversibility.levels == 5);
  CHECK(back.routing_model == in.routing_model);
  CHECK(back.toffoli_scheme == in.toffoli_scheme);
  CHECK(back.n_factories == 42.0);
}

TEST_CASE("estimator report JSON carries unit-suffixed keys") {
  const json j =
      io::estimator_report_to_json(estimator::full_report({}));
  CHECK(j.contains("tau_ltof_seconds"));
  CHECK(j.contains("t_q_seconds"));
  CHECK(j.contains("gamma_per_second"));
  CHECK(j.contains("time_ratio"));
  CHECK(j.contains("other_mode"));
  CHECK(j.at("code_distance").get<int>() == 34);
}

TEST_CASE("certificate JSON for both verdicts") {
  const auto vertices = lfpoly::enumerate_lf_vertices();
  const json feasible = io::certificate_to_json(lfpoly::lf_feasible(vertices[0]));
  CHECK(feasible.at("feasible").get<bool>());
  CHECK(feasible.contains("weights"));

  const ewfs::Behavior q =
      ewfs::behavior(ewfs::ScenarioConfig::tsirelson_defaults());
  const json infeasible = io::certificate_to_json(lfpoly::lf_feasible(q));
  CHECK(!infeasible.at("feasible").get<bool>());
  CHECK(std::abs(infeasible.at("violated_value").get<double>() -
                 2.0 * std::sqrt(2.0)) < 1e-7);
}

TEST_CASE("text file helpers") {
  const std::string path = "io_test_scratch.txt";
  io::write_text_file(path, "hello\n");
  CHECK(io::read_text_file(path) == "hello\n");
  CHECK_THROWS(io::read_text_file("definitely/not/here.txt"));
}
