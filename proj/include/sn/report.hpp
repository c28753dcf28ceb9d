#pragma once

#include "sn/boundary.hpp"
#include "sn/cayley.hpp"
#include "sn/lexcheck.hpp"
#include "sn/projector.hpp"
#include "sn/rational.hpp"
#include "sn/stability.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sn {

inline constexpr const char* kToolVersion = "sn-spectral 1.0.0";

enum class output_format { text, json, csv };

output_format parse_format(const std::string& name);

/// FNV-1a hash of the canonical invocation string, hex-printed; embedded in
/// every report so reruns can be matched to their inputs.
std::string input_digest(const std::string& canonical_input);

/// Common envelope: version, digest, optional seed, optional timestamp
/// (suppressed under --deterministic).
struct report_meta {
    std::string digest;
    std::optional<std::uint64_t> seed;
    bool deterministic = false;
};

std::string render_rat(const Rat& value, output_format format); // p/q or [p,q]

std::string render_spectrum(const spectrum_report& rep, const report_meta& meta,
                            output_format format);
std::string render_projection(const projection_report& rep, const report_meta& meta,
                              output_format format);
std::string render_boundary(const boundary_report& rep, const report_meta& meta,
                            output_format format);
std::string render_stability(const stability_report& rep, const report_meta& meta,
                             output_format format);
std::string render_lex_table(const lex_minimality_table& table, const report_meta& meta,
                             output_format format);

} // namespace sn
