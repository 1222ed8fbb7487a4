#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lfsim/estimator/estimator.hpp"
#include "lfsim/ewfs/behavior.hpp"
#include "lfsim/ewfs/monte_carlo.hpp"
#include "lfsim/ewfs/scenario.hpp"
#include "lfsim/lfpoly/lf.hpp"
#include "lfsim/spacetime/schedule.hpp"

namespace lfsim::io {

using nlohmann::json;

// Behaviors. The CSV schema is `x,y,a,b,p` with settings in {1,2} and
// outcomes as +1/-1, sixteen data rows.
json behavior_to_json(const ewfs::Behavior& bh);
ewfs::Behavior behavior_from_json(const json& j);
std::string behavior_to_csv(const ewfs::Behavior& bh);
ewfs::Behavior behavior_from_csv(const std::string& text);

json scenario_config_to_json(const ewfs::ScenarioConfig& cfg);
ewfs::ScenarioConfig scenario_config_from_json(const json& j);

json schedule_to_json(const spacetime::ProtocolSchedule& s);
spacetime::ProtocolSchedule schedule_from_json(const json& j);
json schedule_report_to_json(const spacetime::ScheduleReport& r);

json certificate_to_json(const lfpoly::LFCertificate& cert);

json estimator_inputs_to_json(const estimator::EstimatorInputs& in);
estimator::EstimatorInputs estimator_inputs_from_json(const json& j);
json estimator_report_to_json(const estimator::EstimatorReport& rep);
std::string estimator_sweep_to_csv(const std::string& parameter,
                                   const std::vector<double>& grid,
                                   const std::vector<estimator::EstimatorReport>& rows);

json monte_carlo_to_json(const ewfs::MonteCarloResult& mc);
std::string noise_sweep_to_csv(const std::vector<ewfs::NoiseSweepRow>& rows);
json noise_sweep_to_json(const std::vector<ewfs::NoiseSweepRow>& rows);

std::string read_text_file(const std::string& path);   // throws on failure
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lfsim::io
