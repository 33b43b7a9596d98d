#include "vssc/report.hpp"

#include "vssc/csvio.hpp"
#include "vssc/errors.hpp"

#include <fstream>
#include <sstream>

namespace vssc {

void write_growth_csv(const std::string& path, const GrowthReport& r,
                      const std::string& config_hash, const std::string& build_id) {
    CsvWriter csv(path, config_hash, build_id);
    csv.comment("epsilon=" + format_double(r.epsilon) +
                " stencil=" + format_double(r.stencil));
    csv.header({"t", "grad_sup", "eta1", "a", "b", "log_b_over_a", "K",
                "l1", "l2", "l4", "linf", "parity_violation", "exceptional_area",
                "trapezoid_cells", "trapezoid_violations", "sector_min_ratio", "cfl"});
    for (const auto& s : r.samples) {
        csv.row({s.t, s.grad_sup, s.eta1, s.a, s.b, s.log_b_over_a, s.kinetic,
                 s.l1, s.l2, s.l4, s.linf, s.parity_violation, s.exceptional_area,
                 static_cast<double>(s.trapezoid_cells),
                 static_cast<double>(s.trapezoid_violations),
                 s.sector_min_ratio, s.cfl});
    }
}

GrowthReport read_growth_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open report: " + path);
    GrowthReport r;
    std::string line;
    bool seen_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("epsilon=");
            if (pos != std::string::npos) {
                std::istringstream ss(line.substr(pos + 8));
                ss >> r.epsilon;
                auto sp = line.find("stencil=");
                if (sp != std::string::npos) {
                    std::istringstream s2(line.substr(sp + 8));
                    s2 >> r.stencil;
                }
            }
            continue;
        }
        if (!seen_header) {  // column names
            seen_header = true;
            continue;
        }
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() < 17) throw Error("malformed report row in " + path);
        GrowthSample s;
        s.t = vals[0];
        s.grad_sup = vals[1];
        s.eta1 = vals[2];
        s.a = vals[3];
        s.b = vals[4];
        s.log_b_over_a = vals[5];
        s.kinetic = vals[6];
        s.l1 = vals[7];
        s.l2 = vals[8];
        s.l4 = vals[9];
        s.linf = vals[10];
        s.parity_violation = vals[11];
        s.exceptional_area = vals[12];
        s.trapezoid_cells = static_cast<long>(vals[13]);
        s.trapezoid_violations = static_cast<long>(vals[14]);
        s.sector_min_ratio = vals[15];
        s.cfl = vals[16];
        r.samples.push_back(s);
    }
    return r;
}

} // namespace vssc
