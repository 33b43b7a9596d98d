#ifndef VSSC_COMMANDS_HPP
#define VSSC_COMMANDS_HPP

#include "vssc/config.hpp"

#include <string>
#include <vector>

namespace vssc {

/** t=0 invariant suites; writes verify.csv and a human summary, returns the
 * exit status (0 iff every enabled suite passed). */
int cmd_verify(const RunConfig& cfg);

/** Scenario run: checkpoints + growth.csv (+ config echo). Optional resume
 * from a checkpoint path (the .aux sidecar is looked up next to it). */
int cmd_run(const RunConfig& cfg, const std::string& resume_path = "");

/** Post-processing of a run directory: key-lemma tables, trapezoid verdicts,
 * differential-inequality and growth fits. */
int cmd_analyze(const RunConfig& cfg);

/** Renders summary.txt and SVG plots from the CSV artifacts. */
int cmd_report(const RunConfig& cfg);

/** Parameter grid over epsilon and n; one run directory per combination. */
int cmd_sweep(const RunConfig& cfg, const std::vector<double>& epsilons,
              const std::vector<int>& ns);

/** Exclusive-output-directory guard (lock file). */
class DirLock {
  public:
    explicit DirLock(const std::string& dir);
    ~DirLock();
    DirLock(const DirLock&) = delete;
    DirLock& operator=(const DirLock&) = delete;

  private:
    std::string path_;
};

} // namespace vssc

#endif
