#include "shapeid/pipeline.hpp"

#include <chrono>

namespace shapeid {

PipelineResult run_pipeline(const Raster& image, const PipelineOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  const auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const StageError&) {
      throw;
    } catch (const Error& e) {
      throw StageError(name, e.what());
    }
  };

  const BinaryMask mask = stage("binarize", [&] { return binarize(image, options.threshold); });
  const BinaryMask object = stage("isolate", [&] { return isolate_object(mask); });
  PipelineResult out;
  out.features = stage("features", [&] { return build_features(object); });
  out.verdict = classify(out.features, options.tolerances);

  out.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return out;
}

}  // namespace shapeid
