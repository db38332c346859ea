#ifndef CURVSPACE_SCENARIO_HPP
#define CURVSPACE_SCENARIO_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace curvspace {

using ParamMap = std::map<std::string, std::string>;

/// One expected-vs-computed comparison inside a scenario run. The origin
/// field records where the expected value comes from: "reference" for
/// values stated by the source material, "oracle" for values recomputed
/// independently, "definition" for immediate consequences of definitions.
struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  std::string origin;
  bool pass = false;
};

struct Report {
  std::string scenario;
  ParamMap params;
  std::vector<CheckResult> checks;
  bool pass = true;
  std::string error; ///< non-empty when the computation itself failed
};

/// Named, parameterized check bundle. Expectations live in the registry as
/// data; the runner recomputes everything and compares.
struct Scenario {
  std::string name;
  std::string summary;
  ParamMap defaults;
  std::function<Report(const ParamMap&)> run;
};

const std::vector<Scenario>& scenario_registry();
const Scenario* find_scenario(const std::string& name);

/// Merges overrides into the scenario defaults and runs it. Computation
/// errors are captured in the report, not thrown.
Report run_scenario(const std::string& name, const ParamMap& overrides = {});

std::string report_to_json(const Report& report);
std::string reports_to_json(const std::vector<Report>& reports);
std::string report_to_text(const Report& report);

/// Deterministic pseudo-random stream (splitmix) used for seeded property
/// scenarios; stable across platforms.
class DetRng {
public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi].
  long int_in(long lo, long hi);

private:
  std::uint64_t state_;
};

} // namespace curvspace

#endif // CURVSPACE_SCENARIO_HPP
