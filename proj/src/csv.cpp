#include "gbkop/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace gbkop {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const ExperimentTable& table) {
    std::string out = "n1,n2,x,y,observed,bound_or_limit,ratio\n";
    for (const auto& row : table.rows) {
        out += std::to_string(row.n1);
        out += ',';
        out += std::to_string(row.n2);
        out += ',';
        out += format_number(row.x);
        out += ',';
        out += format_number(row.y);
        out += ',';
        out += format_number(row.observed);
        out += ',';
        out += format_number(row.bound_or_limit);
        out += ',';
        out += format_number(row.ratio);
        out += '\n';
    }
    return out;
}

void write_csv(const std::string& path, const ExperimentTable& table) {
    const std::string partial = path + ".partial";
    {
        std::ofstream file(partial, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + partial + " for writing");
        file << to_csv(table);
        if (!file) throw std::runtime_error("write failed for " + partial);
    }
    std::filesystem::rename(partial, path);
}

} // namespace gbkop
