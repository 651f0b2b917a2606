#pragma once

#include "surfcert/config.hpp"
#include "surfcert/report.hpp"

namespace surfcert {

struct PipelineOptions {
    unsigned seed = 0;
};

// Full certification run: curve and torsion checks, covering checks, the
// smoothness chain, surface assembly and fiber identities, local evidence,
// and the weak-approximation witness. Stage failures are recorded; later
// independent stages still run.
VerificationReport run_pipeline(const PipelineConfig& config, const PipelineOptions& opts = {});

}  // namespace surfcert
