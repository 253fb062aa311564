#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "shapeid/pipeline.hpp"

namespace shapeid::cli {

/// One classified file.
struct Report {
  std::string file;
  PipelineResult result;
};

/// {"file", "label", "elapsed_ms", "features", "evidence"}.
nlohmann::json report_json(const Report& r);

struct BenchRow {
  std::string shape;  ///< class name, or "average"
  std::string size;   ///< "WxH"
  double mean_ms = 0;
  double min_ms = 0;
  double max_ms = 0;
};

/// Times the full pipeline on each in-memory corpus shape `repeat` times.
/// Throws Error naming the shape if any run returns the wrong label.
std::vector<BenchRow> run_bench(int width, int height, int repeat);

/// "shape,size,mean_ms,min_ms,max_ms" followed by one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapeid::cli
