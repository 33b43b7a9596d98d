#ifndef VSSC_CSVIO_HPP
#define VSSC_CSVIO_HPP

#include <fstream>
#include <string>
#include <vector>

namespace vssc {

/** Shortest round-trip decimal form of a double (deterministic across runs). */
std::string format_double(double v);

/** CSV writer; every file starts with '#' comment lines carrying the config
 * hash and build id, then one header row, then data rows. */
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& config_hash,
              const std::string& build_id);
    void comment(const std::string& text);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

  private:
    std::ofstream os_;
};

} // namespace vssc

#endif
