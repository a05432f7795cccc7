#include "sqgfront/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sqgfront {

std::string format_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_row(const DiagnosticsRecord& r) {
  std::string out;
  const double fields[] = {r.time,       r.f_max,          r.a_mean,
                           r.speed_variation, r.l2_norm,   r.h2s_norm,
                           r.holder_halfplus_s, r.lambda_sup, r.dlambda_sup,
                           r.dlambda_h_half, r.curvature_max, r.area,
                           r.perimeter};
  for (size_t i = 0; i < std::size(fields); ++i) {
    if (i) out += ',';
    out += format_shortest(fields[i]);
  }
  return out;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

void write_snapshot(const std::string& path, const ClosedCurve& curve, double s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  char buf[96];
  out << "# sqgfront snapshot 1\n";
  out << "# n " << curve.n() << '\n';
  std::snprintf(buf, sizeof(buf), "# time %.17g\n", curve.time);
  out << buf;
  std::snprintf(buf, sizeof(buf), "# s %.17g\n", s);
  out << buf;
  for (int i = 0; i < curve.n(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", curve.grid.node(i), curve.x1[i],
                  curve.x2[i]);
    out << buf;
  }
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open snapshot '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("# sqgfront snapshot", 0) != 0) {
    throw ConfigError("'" + path + "' is not a snapshot file");
  }
  int n = 0;
  double time = 0.0, s = 0.25;
  while (in.peek() == '#') {
    std::getline(in, line);
    std::istringstream ls(line);
    std::string hash, key;
    ls >> hash >> key;
    if (key == "n") ls >> n;
    else if (key == "time") ls >> time;
    else if (key == "s") ls >> s;
  }
  if (n < 8 || n % 2 != 0) throw ConfigError("snapshot '" + path + "': bad n");
  Snapshot snap;
  snap.s = s;
  snap.curve = ClosedCurve{Grid(n)};
  snap.curve.time = time;
  for (int i = 0; i < n; ++i) {
    double gamma;
    if (!(in >> gamma >> snap.curve.x1[i] >> snap.curve.x2[i])) {
      throw ConfigError("snapshot '" + path + "': truncated sample block");
    }
  }
  return snap;
}

}  // namespace sqgfront
