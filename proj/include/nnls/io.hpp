#pragma once

#include "nnls/report.hpp"
#include "nnls/rh.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace nnls {

/// Flat configuration record embedded as a "provenance" block in every
/// output file so runs are reproducible from the artifact alone. Values are
/// strings; no timestamps or other run-varying data (outputs must be
/// bit-identical for identical inputs and configuration).
using Provenance = std::map<std::string, std::string>;

// SampledField JSON object: {"lo": float, "hi": float, "n": int,
//                            "values": [[re, im], ...]}
void save_field_json(const std::filesystem::path& path, const SampledField& field,
                     const Provenance& provenance = {});
SampledField load_field_json(const std::filesystem::path& path);

void save_potential_json(const std::filesystem::path& path, const Potential& potential,
                         const Provenance& provenance = {});
Potential load_potential_json(const std::filesystem::path& path);

void save_scattering_json(const std::filesystem::path& path, const ScatteringData& data,
                          const Provenance& provenance = {});
ScatteringData load_scattering_json(const std::filesystem::path& path);

void save_reflection_json(const std::filesystem::path& path, const ReflectionPair& reflection,
                          const Provenance& provenance = {});
ReflectionPair load_reflection_json(const std::filesystem::path& path);

void save_report_json(const std::filesystem::path& path, const DiagnosticsReport& report,
                      const Provenance& provenance = {});

// CSV alternatives with documented headers.
void save_field_csv(const std::filesystem::path& path, const SampledField& field);  // x,re,im
SampledField load_field_csv(const std::filesystem::path& path);
void save_reflection_csv(const std::filesystem::path& path, const ReflectionPair& reflection);
// k,re_r1,im_r1,re_r2,im_r2

/// Debug dump of Psi_- per x: flat records x,k_index,re/im of the four
/// entries (row-major), appended per solution.
void append_rh_debug_csv(const std::filesystem::path& path, const RHSolution& solution, bool header);

}  // namespace nnls
