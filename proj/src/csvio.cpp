#include "vssc/csvio.hpp"

#include "vssc/errors.hpp"

#include <charconv>

namespace vssc {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& config_hash,
                     const std::string& build_id)
    : os_(path, std::ios::trunc) {
    if (!os_) throw Error("cannot open CSV for writing: " + path);
    os_ << "# config_hash=" << config_hash << "\n";
    os_ << "# build=" << build_id << "\n";
}

void CsvWriter::comment(const std::string& text) { os_ << "# " << text << "\n"; }

void CsvWriter::header(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        os_ << (i ? "," : "") << names[i];
    os_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        os_ << (i ? "," : "") << format_double(values[i]);
    os_ << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        os_ << (i ? "," : "") << cells[i];
    os_ << "\n";
}

} // namespace vssc
