#pragma once

// File outputs of an IRID run:
//
//   impulse.csv   t,h_cfoi,h_discrete,h_continuous
//   freq.csv      omega_rad_s,mag_db_cfoi,phase_deg_cfoi,mag_db_discrete,
//                 phase_deg_discrete,mag_db_continuous,phase_deg_continuous
//   coeffs.json   fitted models, stability flag and metrics
//   summary.txt   human-readable digest
//   impulse.svg, freq.svg   optional line charts
//
// Numbers are written in the shortest decimal form that reads back to the
// same double (at most 17 significant digits). Lines end with LF.

#include <filesystem>
#include <string>
#include <vector>

#include "irid/lti.hpp"
#include "irid/pipeline.hpp"

namespace irid::report {

struct WriteOptions {
    bool svg = true;
};

/// Creates dir if needed and writes the files in a fixed order. Returns the
/// paths written. Throws IoError (with the offending path) on failure.
std::vector<std::filesystem::path> write_outputs(const pipeline::IridResult& res,
                                                 const std::filesystem::path& dir,
                                                 const WriteOptions& opts = {});

std::string impulse_csv(const pipeline::IridResult& res);
std::string freq_csv(const pipeline::IridResult& res);
std::string coeffs_json(const pipeline::IridResult& res);
std::string summary_text(const pipeline::IridResult& res);
std::string impulse_svg(const pipeline::IridResult& res);
std::string freq_svg(const pipeline::IridResult& res);

struct FittedModels {
    lti::DiscreteTransferFunction gd;
    lti::ContinuousTransferFunction gc;
    bool stable_discrete;
};

/// Reads the models back from the contents of coeffs.json.
FittedModels parse_coeffs_json(const std::string& text);

/// Shortest round-trip decimal representation.
std::string format_number(double value);

}  // namespace irid::report
