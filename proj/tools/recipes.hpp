#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ras/experiment.hpp"

namespace ras::cli {

enum class RecipeKind { kCdf, kErgodic, kBoundVsNr, kSweep, kAdaptive };

std::string_view to_string(RecipeKind kind);

/// Desk-scale preset reproducing one figure. Each panel is an independent
/// experiment; their rows are concatenated with a panel column.
struct FigureRecipe {
  std::string name;
  RecipeKind kind = RecipeKind::kErgodic;
  std::vector<ExperimentConfig> panels;
  /// Receive-array sizes swept by kBoundVsNr.
  std::vector<std::size_t> nr_grid;
};

/// Preset for "fig1" .. "fig12"; std::nullopt for anything else.
std::optional<FigureRecipe> figure_recipe(std::string_view name);

std::vector<std::string> figure_names();

}  // namespace ras::cli
