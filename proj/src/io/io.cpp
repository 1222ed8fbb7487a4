#include "lfsim/io/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lfsim::io {

namespace {

int outcome_index(int value) {
  if (value == +1) return 0;
  if (value == -1) return 1;
  throw std::invalid_argument("outcomes must be +1 or -1");
}

}  // namespace

json behavior_to_json(const ewfs::Behavior& bh) {
  json rows = json::array();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          rows.push_back({{"x", x + 1},
                          {"y", y + 1},
                          {"a", ewfs::kOutcomeValue[a]},
                          {"b", ewfs::kOutcomeValue[b]},
                          {"p", bh.at(x, y, a, b)}});
  return json{{"behavior", rows}};
}

ewfs::Behavior behavior_from_json(const json& j) {
  const json& rows = j.contains("behavior") ? j.at("behavior") : j;
  if (!rows.is_array() || rows.size() != 16)
    throw std::invalid_argument("behavior needs exactly 16 entries");
  ewfs::Behavior bh{};
  for (const json& row : rows) {
    const int x = row.at("x").get<int>(), y = row.at("y").get<int>();
    if (x < 1 || x > 2 || y < 1 || y > 2)
      throw std::invalid_argument("settings must be 1 or 2");
    bh.at(x - 1, y - 1, outcome_index(row.at("a").get<int>()),
          outcome_index(row.at("b").get<int>())) = row.at("p").get<double>();
  }
  return bh;
}

std::string behavior_to_csv(const ewfs::Behavior& bh) {
  std::ostringstream out;
  out << "x,y,a,b,p\n";
  out.precision(17);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          out << x + 1 << ',' << y + 1 << ',' << ewfs::kOutcomeValue[a] << ','
              << ewfs::kOutcomeValue[b] << ',' << bh.at(x, y, a, b) << '\n';
  return out.str();
}

ewfs::Behavior behavior_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,y,a,b,p", 0) != 0)
    throw std::invalid_argument("behavior CSV must start with header x,y,a,b,p");
  ewfs::Behavior bh{};
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int x, y, a, b;
    double p;
    char c;
    if (!(ls >> x >> c >> y >> c >> a >> c >> b >> c >> p))
      throw std::invalid_argument("malformed behavior CSV row: " + line);
    if (x < 1 || x > 2 || y < 1 || y > 2)
      throw std::invalid_argument("settings must be 1 or 2");
    bh.at(x - 1, y - 1, outcome_index(a), outcome_index(b)) = p;
    ++rows;
  }
  if (rows != 16)
    throw std::invalid_argument("behavior CSV needs exactly 16 data rows");
  return bh;
}

namespace {

std::string noise_point_name(ewfs::NoisePoint p) {
  switch (p) {
    case ewfs::NoisePoint::kNone: return "none";
    case ewfs::NoisePoint::kInitialState: return "initial_state";
    case ewfs::NoisePoint::kFriendBetween: return "friend_between";
  }
  return "none";
}

ewfs::NoisePoint noise_point_from_name(const std::string& s) {
  if (s == "none") return ewfs::NoisePoint::kNone;
  if (s == "initial_state") return ewfs::NoisePoint::kInitialState;
  if (s == "friend_between") return ewfs::NoisePoint::kFriendBetween;
  throw std::invalid_argument("unknown noise point: " + s);
}

}  // namespace

json scenario_config_to_json(const ewfs::ScenarioConfig& cfg) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < cfg.initial_two_qubit_state.size(); ++i)
    amps.push_back({cfg.initial_two_qubit_state(i).real(),
                    cfg.initial_two_qubit_state(i).imag()});
  json j{{"initial_two_qubit_state", amps},
         {"n_friend_qubits", cfg.n_friend_qubits},
         {"alice_x2_angle", cfg.alice_x2_angle},
         {"bob_angles", {cfg.bob_angles[0], cfg.bob_angles[1]}},
         {"noise_point", noise_point_name(cfg.noise_point)},
         {"depolarizing_p", cfg.depolarizing_p},
         {"pullout_fraction", cfg.pullout_fraction}};
  if (cfg.scramble_seed) j["scramble_seed"] = *cfg.scramble_seed;
  return j;
}

ewfs::ScenarioConfig scenario_config_from_json(const json& j) {
  ewfs::ScenarioConfig cfg = ewfs::ScenarioConfig::tsirelson_defaults();
  if (j.contains("initial_two_qubit_state")) {
    const json& amps = j.at("initial_two_qubit_state");
    if (amps.size() != 4)
      throw std::invalid_argument("initial state needs 4 amplitudes");
    cfg.initial_two_qubit_state.resize(4);
    for (Eigen::Index i = 0; i < 4; ++i) {
      const json& a = amps[std::size_t(i)];
      cfg.initial_two_qubit_state(i) =
          a.is_array() ? qsim::Complex(a.at(0).get<double>(),
                                       a.at(1).get<double>())
                       : qsim::Complex(a.get<double>(), 0.0);
    }
  }
  if (j.contains("n_friend_qubits"))
    cfg.n_friend_qubits = j.at("n_friend_qubits").get<int>();
  if (j.contains("scramble_seed"))
    cfg.scramble_seed = j.at("scramble_seed").get<std::uint64_t>();
  if (j.contains("alice_x2_angle"))
    cfg.alice_x2_angle = j.at("alice_x2_angle").get<double>();
  if (j.contains("bob_angles")) {
    cfg.bob_angles[0] = j.at("bob_angles").at(0).get<double>();
    cfg.bob_angles[1] = j.at("bob_angles").at(1).get<double>();
  }
  if (j.contains("noise_point"))
    cfg.noise_point = noise_point_from_name(j.at("noise_point").get<std::string>());
  if (j.contains("depolarizing_p"))
    cfg.depolarizing_p = j.at("depolarizing_p").get<double>();
  if (j.contains("pullout_fraction"))
    cfg.pullout_fraction = j.at("pullout_fraction").get<double>();
  return cfg;
}

json schedule_to_json(const spacetime::ProtocolSchedule& s) {
  json events = json::array();
  for (const spacetime::Event& e : s.events)
    events.push_back({{"label", e.label},
                      {"t", e.t},
                      {"pos", e.pos},
                      {"duration", e.duration}});
  return json{{"segment_duration", s.segment_duration},
              {"bob_offset", s.bob_offset},
              {"events", events}};
}

spacetime::ProtocolSchedule schedule_from_json(const json& j) {
  spacetime::ProtocolSchedule s;
  s.segment_duration = j.value("segment_duration", 1.0);
  s.bob_offset = j.value("bob_offset", 0.0);
  for (const json& e : j.at("events"))
    s.events.push_back({e.at("label").get<std::string>(),
                        e.at("t").get<double>(), e.at("pos").get<double>(),
                        e.value("duration", 0.0)});
  return s;
}

json schedule_report_to_json(const spacetime::ScheduleReport& r) {
  json conditions = json::array();
  for (const spacetime::ConditionResult& c : r.conditions)
    conditions.push_back({{"description", c.description}, {"passed", c.passed}});
  return json{{"all_passed", r.all_passed}, {"conditions", conditions}};
}

json certificate_to_json(const lfpoly::LFCertificate& cert) {
  json j{{"feasible", cert.feasible}, {"gap", cert.gap}};
  if (cert.feasible && cert.decomposition) {
    const lfpoly::LFDecomposition& d = *cert.decomposition;
    j["weights"] = {d.weight[0], d.weight[1]};
    json bob = json::array(), joint = json::array();
    for (int c = 0; c < 2; ++c)
      for (int y = 0; y < 2; ++y) {
        for (int b = 0; b < 2; ++b)
          bob.push_back({{"c", c},
                         {"y", y + 1},
                         {"b", ewfs::kOutcomeValue[b]},
                         {"p", d.bob_given_c[c][y][b]}});
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            joint.push_back({{"c", c},
                             {"y", y + 1},
                             {"a", ewfs::kOutcomeValue[a]},
                             {"b", ewfs::kOutcomeValue[b]},
                             {"p", d.joint_x2[c][y][a][b]}});
      }
    j["bob_given_c"] = bob;
    j["joint_x2"] = joint;
  } else if (!cert.feasible) {
    j["violated_variant"] = cert.violated_variant;
    j["violated_value"] = cert.violated_value;
  }
  return j;
}

namespace {

std::string routing_name(estimator::RoutingModel m) {
  switch (m) {
    case estimator::RoutingModel::kAlon: return "alon";
    case estimator::RoutingModel::kBeals: return "beals";
    case estimator::RoutingModel::kBrierley: return "brierley";
    case estimator::RoutingModel::kHerbert: return "herbert";
  }
  return "beals";
}

estimator::RoutingModel routing_from_name(const std::string& s) {
  if (s == "alon") return estimator::RoutingModel::kAlon;
  if (s == "beals") return estimator::RoutingModel::kBeals;
  if (s == "brierley") return estimator::RoutingModel::kBrierley;
  if (s == "herbert") return estimator::RoutingModel::kHerbert;
  throw std::invalid_argument("unknown routing model: " + s);
}

json chain_tail_to_json(const estimator::ChainTail& t) {
  return json{{"err_locations", t.err_locations},
              {"p_l_target", t.p_l_target},
              {"r_exponent", t.r_exponent},
              {"code_distance", t.code_distance},
              {"tau_ltof_seconds", t.tau_ltof_seconds},
              {"t_q_seconds", t.t_q_seconds},
              {"time_ratio", t.time_ratio}};
}

}  // namespace

json estimator_inputs_to_json(const estimator::EstimatorInputs& in) {
  json j{{"flops", in.flops},
         {"bits", in.bits},
         {"flop_to_bool", in.flop_to_bool},
         {"bool_parallel", in.bool_parallel},
         {"synth_overhead", in.synth_overhead},
         {"parallelism", in.parallelism},
         {"segment_seconds", in.segment_seconds},
         {"eps", in.eps},
         {"p_ratio", in.p_ratio},
         {"qubits_per_chip", in.qubits_per_chip},
         {"tau_qec_seconds", in.tau_qec_seconds},
         {"routing_model", routing_name(in.routing_model)},
         {"toffoli_scheme",
          in.toffoli_scheme == estimator::ToffoliScheme::kFactory5p5d
              ? "factory_5p5d"
              : "brown_3d"},
         {"paper_rounded", in.paper_rounded},
         {"ell_uses_s_i", in.ell_uses_s_i},
         {"physical_per_logical", in.physical_per_logical}};
  if (in.reversibility.scheme == estimator::Reversibility::Scheme::kNaive)
    j["reversibility"] = "naive";
  else
    j["reversibility"] =
        json{{"scheme", "bennett"}, {"levels", in.reversibility.levels}};
  j["q_route"] = in.q_route_override ? json(*in.q_route_override)
                                     : json("formula");
  if (in.n_factories) j["n_factories"] = *in.n_factories;
  return j;
}

estimator::EstimatorInputs estimator_inputs_from_json(const json& j) {
  estimator::EstimatorInputs in;
  auto get = [&](const char* key, double& field) {
    if (j.contains(key)) field = j.at(key).get<double>();
  };
  get("flops", in.flops);
  get("bits", in.bits);
  get("flop_to_bool", in.flop_to_bool);
  get("bool_parallel", in.bool_parallel);
  get("synth_overhead", in.synth_overhead);
  get("parallelism", in.parallelism);
  get("segment_seconds", in.segment_seconds);
  get("eps", in.eps);
  get("p_ratio", in.p_ratio);
  get("qubits_per_chip", in.qubits_per_chip);
  get("tau_qec_seconds", in.tau_qec_seconds);
  get("physical_per_logical", in.physical_per_logical);
  if (j.contains("routing_model"))
    in.routing_model = routing_from_name(j.at("routing_model").get<std::string>());
  if (j.contains("toffoli_scheme")) {
    const std::string s = j.at("toffoli_scheme").get<std::string>();
    if (s == "factory_5p5d")
      in.toffoli_scheme = estimator::ToffoliScheme::kFactory5p5d;
    else if (s == "brown_3d")
      in.toffoli_scheme = estimator::ToffoliScheme::kBrown3d;
    else
      throw std::invalid_argument("unknown toffoli scheme: " + s);
  }
  if (j.contains("reversibility")) {
    const json& r = j.at("reversibility");
    if (r.is_string() && r.get<std::string>() == "naive") {
      in.reversibility = {};
    } else if (r.is_object() && r.at("scheme") == "bennett") {
      in.reversibility.scheme = estimator::Reversibility::Scheme::kBennett;
      in.reversibility.levels = r.at("levels").get<int>();
    } else {
      throw std::invalid_argument("unknown reversibility scheme");
    }
  }
  if (j.contains("q_route")) {
    const json& q = j.at("q_route");
    if (q.is_string() && q.get<std::string>() == "formula")
      in.q_route_override.reset();
    else
      in.q_route_override = q.get<double>();
  }
  if (j.contains("paper_rounded")) in.paper_rounded = j.at("paper_rounded").get<bool>();
  if (j.contains("ell_uses_s_i")) in.ell_uses_s_i = j.at("ell_uses_s_i").get<bool>();
  if (j.contains("n_factories")) in.n_factories = j.at("n_factories").get<double>();
  return in;
}

json estimator_report_to_json(const estimator::EstimatorReport& rep) {
  json j{{"gamma_per_second", rep.gamma_per_second},
         {"delta_per_second", rep.delta_per_second},
         {"t_seg", rep.t_seg},
         {"g_seg", rep.g_seg},
         {"s_seg", rep.s_seg},
         {"g_r", rep.g_r},
         {"s_r", rep.s_r},
         {"t_r", rep.t_r},
         {"s_i", rep.s_i},
         {"t_i", rep.t_i},
         {"q_route", rep.q_route},
         {"s_l", rep.s_l},
         {"t_l", rep.t_l},
         {"err_locations", rep.err_locations},
         {"p_l_target", rep.p_l_target},
         {"r_exponent", rep.r_exponent},
         {"code_distance", rep.code_distance},
         {"tau_ltof_seconds", rep.tau_ltof_seconds},
         {"t_q_seconds", rep.t_q_seconds},
         {"time_ratio", rep.time_ratio},
         {"factory_qubits_each", rep.factory_qubits_each},
         {"factory_qubits_total", rep.factory_qubits_total},
         {"data_physical_qubits", rep.data_physical_qubits},
         {"paper_rounded", rep.paper_rounded},
         {"closed_form_ratio", rep.closed_form_ratio},
         {"closed_form_ratio_alt", rep.closed_form_ratio_alt},
         {"warnings", rep.warnings}};
  if (rep.other_mode) j["other_mode"] = chain_tail_to_json(*rep.other_mode);
  return j;
}

std::string estimator_sweep_to_csv(
    const std::string& parameter, const std::vector<double>& grid,
    const std::vector<estimator::EstimatorReport>& rows) {
  if (grid.size() != rows.size())
    throw std::invalid_argument("grid and report counts differ");
  std::ostringstream out;
  out.precision(17);
  out << parameter
      << ",t_l,s_l,code_distance,tau_ltof_seconds,t_q_seconds,time_ratio\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const estimator::EstimatorReport& r = rows[i];
    out << grid[i] << ',' << r.t_l << ',' << r.s_l << ',' << r.code_distance
        << ',' << r.tau_ltof_seconds << ',' << r.t_q_seconds << ','
        << r.time_ratio << '\n';
  }
  return out.str();
}

json monte_carlo_to_json(const ewfs::MonteCarloResult& mc) {
  json counts = json::array();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      counts.push_back({{"x", x + 1},
                        {"y", y + 1},
                        {"n", mc.counts_per_setting[std::size_t(x)][std::size_t(y)]}});
  return json{{"empirical", behavior_to_json(mc.empirical)["behavior"]},
              {"standard_error", behavior_to_json(mc.standard_error)["behavior"]},
              {"counts_per_setting", counts},
              {"trials_kept", mc.trials_kept},
              {"trials_discarded", mc.trials_discarded},
              {"chsh", mc.chsh},
              {"chsh_standard_error", mc.chsh_standard_error}};
}

std::string noise_sweep_to_csv(const std::vector<ewfs::NoiseSweepRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "p_dep,chsh,lf_feasible\n";
  for (const ewfs::NoiseSweepRow& r : rows)
    out << r.p_dep << ',' << r.chsh << ',' << (r.lf_feasible ? 1 : 0) << '\n';
  return out.str();
}

json noise_sweep_to_json(const std::vector<ewfs::NoiseSweepRow>& rows) {
  json arr = json::array();
  for (const ewfs::NoiseSweepRow& r : rows)
    arr.push_back({{"p_dep", r.p_dep},
                   {"chsh", r.chsh},
                   {"lf_feasible", r.lf_feasible}});
  return json{{"rows", arr}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace lfsim::io
