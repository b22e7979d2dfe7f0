#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "penergy/energy.hpp"
#include "penergy/pinching.hpp"
#include "penergy/verify.hpp"

namespace penergy {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& text);

// Shortest-form number with `digits` significant digits ("inf"/"-inf" for
// infinities).
std::string format_number(double x, int digits = 12);

// Energy reports, one per (source, p). JSON objects carry the fields
// p, e_pos, e_neg, e_total, n_pos, n_zero, n_neg plus "source".
struct LabeledEnergy {
  std::string source;
  EnergyReport report;
};
void write_energy_reports(std::ostream& out, const std::vector<LabeledEnergy>& reports,
                          OutputFormat format);

struct LabeledGap {
  std::string kind;  // "pinching", "superadditivity_pos", "superadditivity_neg"
  GapReport gap;
};
void write_gap_reports(std::ostream& out, const std::vector<LabeledGap>& gaps,
                       OutputFormat format);

// CSV: theorem_id,n,graphs_checked,violations,min_slack,witness_g6,wall_time_s
// with one row per order and a final "all" row. Wall time is written as 0
// unless include_timing.
void write_verification(std::ostream& out, const VerificationResult& result, OutputFormat format,
                        bool include_timing);
void write_verifications(std::ostream& out, const std::vector<VerificationResult>& results,
                         OutputFormat format, bool include_timing);

void write_extremal(std::ostream& out, const std::vector<ExtremalRow>& rows, double p,
                    EnergySide side, OutputFormat format);

// Eigenvalues at 15 significant digits.
void write_spectrum(std::ostream& out, const std::string& source, const Spectrum& s,
                    OutputFormat format);

}  // namespace penergy
