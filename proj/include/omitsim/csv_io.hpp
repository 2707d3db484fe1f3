#pragma once
#include <string>

#include "omitsim/scenario.hpp"

namespace omitsim {

struct OutputManifest {
    std::string csv_path;
    std::string plot_path;
    std::string meta_path;
};

// Full-precision, locale-independent decimal formatting (17 significant
// digits); identical input bits give identical text.
std::string format_g17(double v);

// Writes <name>.csv (deterministic bytes), <name>.plot (renderer-agnostic
// command list) and <name>.meta (provenance) into out_dir.
OutputManifest write_outputs(const SweepResult& result, const std::string& out_dir);

} // namespace omitsim
