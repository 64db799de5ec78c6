#pragma once

#include <string>

#include "rieszrep/dual.hpp"
#include "rieszrep/generator.hpp"
#include "rieszrep/group.hpp"
#include "rieszrep/sampling.hpp"
#include "rieszrep/signal.hpp"
#include "rieszrep/spectral.hpp"

#include <json.hpp>

namespace rieszrep::io {

using json = nlohmann::json;

// Numbers appear either as plain JSON numbers or as {"num": .., "den": ..}
// for the exact path; emission preserves exactness so round trips are
// bit-exact on rational data.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json group_to_json(const Group& g);
GroupPtr group_from_json(const json& j);

json signal_to_json(const GammaSignal& f);
GammaSignal signal_from_json(const json& j);

json generator_to_json(const Generator& g);
Generator generator_from_json(const json& j);

json report_to_json(const AnalysisReport& r);

json dual_result_to_json(const DualResult& d);

json spline_case_to_json(const SplineSamplingCase& sc);

/// CSV rows "n,h,value" (multi-d n joined with ';').
std::string samples_to_csv(const SampleMap& samples, int dim);
SampleMap samples_from_csv(const std::string& text, int dim);

json crystal_to_json(const CrystalGroupSpec& crystal);
CrystalGroupSpec crystal_from_json(const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace rieszrep::io
