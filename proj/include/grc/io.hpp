/**
 * @file io.hpp
 * @brief CSV and JSON export of generator matrices, geometry tables,
 *        weight distributions and verification reports.
 */

#ifndef GRC_IO_HPP
#define GRC_IO_HPP

#include <ostream>

#include "grc/autgroups.hpp"

namespace grc {

/// Quotes a CSV cell when it contains separators (extension-field elements
/// carry commas).
inline std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos &&
        s.find(';') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_genmat_csv(std::ostream& os, const LinearCode& c) {
    os << "# family=" << c.family << ",l=" << c.l << ",m=" << c.m
       << ",q=" << c.field().size() << ",n=" << c.length() << ",k=" << c.dim() << "\n";
    os << "# columns=";
    for (int j = 0; j < c.length(); ++j) {
        if (j) os << " ";
        os << (c.col_labels.empty() ? "?" : c.col_labels[j]);
    }
    os << "\n";
    for (int i = 0; i < c.dim(); ++i) {
        for (int j = 0; j < c.length(); ++j) {
            if (j) os << ",";
            os << csv_cell(c.genmat.at(i, j).to_string());
        }
        os << "\n";
    }
}

inline void write_geometry_csv(std::ostream& os, const Grassmannian& g) {
    os << "# geometry l=" << g.l() << ",m=" << g.m() << ",q=" << g.field().size()
       << ",points=" << g.num_points() << "\n";
    os << "index,stratum,basis,plucker\n";
    for (int i = 0; i < g.num_points(); ++i) {
        std::string coords;
        const ExteriorVector& p = g.plucker_of(i);
        for (size_t t = 0; t < p.coords.size(); ++t) {
            if (t) coords += " ";
            coords += p.coords[t].to_string();
        }
        os << i << "," << g.stratum_of(i) << "," << csv_cell(g.point(i).to_string()) << ","
           << csv_cell(coords) << "\n";
    }
}

inline void write_weights_csv(std::ostream& os, const std::map<int, long>& hist) {
    os << "weight,count\n";
    for (const auto& [w, c] : hist) os << w << "," << c << "\n";
}

inline void write_report_csv(std::ostream& os, const Report& rep) {
    for (const CheckResult& c : rep)
        os << c.id << "," << csv_cell(c.params) << "," << csv_cell(c.predicted) << ","
           << csv_cell(c.observed) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace grc

#endif  // GRC_IO_HPP
