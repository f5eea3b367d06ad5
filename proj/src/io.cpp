#include "qbaker/io.hpp"

#include <cstdio>

namespace qbaker::io {

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_header(std::ostream& os, const HeaderEcho& echo) {
    for (const auto& [key, value] : echo) {
        os << "# " << key << "=" << value << "\n";
    }
}

void write_orbit_csv(std::ostream& os, const OrbitSeries& series, const HeaderEcho& echo) {
    write_header(os, echo);
    os << "n,value_exact,value_float,provenance\n";
    const auto prov = to_string(series.provenance);
    for (std::size_t n = 0; n < series.length(); ++n) {
        const Dyadic& v = series.at(n);
        os << n << ',' << v.to_string() << ',' << format_double(v.to_double()) << ','
           << prov << '\n';
    }
}

void write_chaos_csv(std::ostream& os,
                     const std::vector<std::pair<std::size_t, double>>& series,
                     std::size_t window, int bins, chaos::LogBase base,
                     Provenance provenance, const HeaderEcho& echo) {
    write_header(os, echo);
    os << "n,D,W,K,base,orbit_provenance\n";
    const char* base_name = base == chaos::LogBase::Two ? "2" : "e";
    const auto prov = to_string(provenance);
    for (const auto& [n, d] : series) {
        os << n << ',' << format_double(d) << ',' << window << ',' << bins << ','
           << base_name << ',' << prov << '\n';
    }
}

void write_operator_csv(std::ostream& os, const kern::Matrix& m, const HeaderEcho& echo) {
    write_header(os, echo);
    os << "row,col,re,im\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << i << ',' << j << ',' << format_double(m.at(i, j).real()) << ','
               << format_double(m.at(i, j).imag()) << '\n';
        }
    }
}

}  // namespace qbaker::io
