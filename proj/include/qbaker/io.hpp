#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qbaker/chaos.hpp"
#include "qbaker/kernels.hpp"
#include "qbaker/orbit.hpp"

namespace qbaker::io {

using HeaderEcho = std::vector<std::pair<std::string, std::string>>;

/// Locale-independent round-trippable float formatting ("%.17g").
std::string format_double(double x);

/// Leading "# key=value" comment lines; every run parameter is echoed so the
/// file is self-describing.
void write_header(std::ostream& os, const HeaderEcho& echo);

/// n,value_exact,value_float,provenance
void write_orbit_csv(std::ostream& os, const OrbitSeries& series, const HeaderEcho& echo);

/// n,D,W,K,base,orbit_provenance
void write_chaos_csv(std::ostream& os,
                     const std::vector<std::pair<std::size_t, double>>& series,
                     std::size_t window, int bins, chaos::LogBase base,
                     Provenance provenance, const HeaderEcho& echo);

/// row,col,re,im (all entries, row-major)
void write_operator_csv(std::ostream& os, const kern::Matrix& m, const HeaderEcho& echo);

}  // namespace qbaker::io
