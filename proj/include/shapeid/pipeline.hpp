#pragma once

#include <string>

#include "shapeid/classifier.hpp"
#include "shapeid/error.hpp"
#include "shapeid/geometry.hpp"
#include "shapeid/raster_io.hpp"
#include "shapeid/segment.hpp"

namespace shapeid {

/// A pipeline failure tagged with the stage that raised it
/// ("binarize", "isolate", "features").
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct PipelineOptions {
  ThresholdMethod threshold = OtsuThreshold{};
  Tolerances tolerances;
};

struct PipelineResult {
  FeatureVector features;
  Verdict verdict;
  double elapsed_ms = 0.0;  ///< binarize through classify
};

/// binarize -> isolate_object -> build_features -> classify.
PipelineResult run_pipeline(const Raster& image, const PipelineOptions& options = {});

}  // namespace shapeid
