#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqgfront/diagnostics.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

/// The stable CSV schema. Numbers serialize in shortest round-trip form.
inline constexpr const char* kCsvHeader =
    "time,F_max,A_mean,speed_variation,l2_norm,h2s_norm,holder,lambda_sup,"
    "dlambda_sup,dlambda_h_half,curvature_max,area,perimeter";

std::string csv_row(const DiagnosticsRecord& r);
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& rows);

/// Shortest decimal form that round-trips the exact double.
std::string format_shortest(double v);

/// Snapshot file: text header (version, n, time, s) followed by n lines of
/// `gamma x1 x2` in 17-significant-digit decimal, lossless for doubles.
void write_snapshot(const std::string& path, const ClosedCurve& curve, double s);
struct Snapshot {
  ClosedCurve curve;
  double s = 0.25;
};
Snapshot read_snapshot(const std::string& path);

}  // namespace sqgfront
