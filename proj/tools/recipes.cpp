#include "recipes.hpp"

namespace ras::cli {

namespace {

std::vector<std::size_t> stepped(std::size_t from, std::size_t to, std::size_t step) {
  std::vector<std::size_t> out;
  for (std::size_t v = from; v <= to; v += step) out.push_back(v);
  if (out.back() != to) out.push_back(to);
  return out;
}

ExperimentConfig base(std::size_t nr, std::size_t nt, std::size_t l, std::vector<double> snr,
                      std::size_t trials, SelectorKind selector) {
  ExperimentConfig cfg;
  cfg.master_seed = 2020;
  cfg.nr = nr;
  cfg.nt = nt;
  cfg.l = l;
  cfg.snr_db_grid = std::move(snr);
  cfg.trials = trials;
  cfg.selector = selector;
  return cfg;
}

const std::vector<double> kSnrSweep{0, 5, 10, 15, 20, 25, 30};

}  // namespace

std::string_view to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::kCdf: return "cdf";
    case RecipeKind::kErgodic: return "ergodic";
    case RecipeKind::kBoundVsNr: return "bound-vs-nr";
    case RecipeKind::kSweep: return "sweep";
    case RecipeKind::kAdaptive: return "adaptive";
  }
  return "unknown";
}

std::vector<std::string> figure_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 12; ++i) names.push_back("fig" + std::to_string(i));
  return names;
}

std::optional<FigureRecipe> figure_recipe(std::string_view name) {
  FigureRecipe r;
  r.name = std::string(name);
  const auto bab = SelectorKind::kBranchAndBound;
  const auto greedy = SelectorKind::kGreedy;

  if (name == "fig1") {
    r.kind = RecipeKind::kCdf;
    for (std::size_t nr : {32, 128}) {
      for (std::size_t l : {1, 2, 3}) r.panels.push_back(base(nr, 8, l, {8.0}, 10000, bab));
    }
  } else if (name == "fig2") {
    r.kind = RecipeKind::kErgodic;
    for (std::size_t l : {1, 2, 3, 4}) {
      r.panels.push_back(base(64, 8, l, {-10, -5, 0, 5, 10, 15, 20}, 500, bab));
    }
  } else if (name == "fig3") {
    r.kind = RecipeKind::kBoundVsNr;
    r.nr_grid = {32, 64, 128, 256, 512, 1024};
    for (std::size_t l : {2, 4, 16, 20}) r.panels.push_back(base(32, 8, l, {8.0}, 2000, bab));
  } else if (name == "fig4") {
    r.kind = RecipeKind::kSweep;
    for (std::size_t l : {2, 3, 4, 5}) {
      auto cfg = base(128, 8, l, {5.0}, 300, bab);
      cfg.csi_grid = stepped(8, 128, 8);
      r.panels.push_back(cfg);
    }
  } else if (name == "fig5") {
    r.kind = RecipeKind::kSweep;
    for (std::size_t l : {2, 4, 6, 8}) {
      auto cfg = base(128, 8, l, {-10, 0, 10}, 300, greedy);
      cfg.eta = 0.01;
      cfg.csi_grid = stepped(8, 128, 4);
      r.panels.push_back(cfg);
    }
  } else if (name == "fig6") {
    r.kind = RecipeKind::kSweep;
    for (std::size_t nt : {4, 8}) {
      auto cfg = base(128, nt, 4, {0, 10, 20, 30}, 300, bab);
      cfg.csi_grid = stepped(4, 128, 4);
      r.panels.push_back(cfg);
    }
  } else if (name == "fig7") {
    r.kind = RecipeKind::kSweep;
    auto cfg = base(128, 4, 4, {-20, -10, 0, 10, 20}, 300, bab);
    cfg.csi_grid = stepped(4, 128, 4);
    r.panels.push_back(cfg);
  } else if (name == "fig8" || name == "fig9") {
    r.kind = RecipeKind::kAdaptive;
    const std::size_t dims[][3] = {{64, 8, 5}, {100, 7, 5}, {128, 4, 4}, {128, 8, 4}};
    for (const auto& d : dims) {
      auto cfg = base(d[0], d[1], d[2], kSnrSweep, 200, bab);
      cfg.eta = 0.01;
      r.panels.push_back(cfg);
    }
  } else if (name == "fig10") {
    r.kind = RecipeKind::kSweep;
    auto cfg = base(128, 8, 20, {-20, -10, 0, 10, 20}, 200, greedy);
    cfg.csi_grid = stepped(20, 128, 4);
    r.panels.push_back(cfg);
  } else if (name == "fig11" || name == "fig12") {
    r.kind = RecipeKind::kAdaptive;
    const std::size_t dims[][3] = {{64, 8, 19}, {100, 7, 16}, {128, 4, 16}, {128, 8, 20}};
    for (const auto& d : dims) {
      auto cfg = base(d[0], d[1], d[2], kSnrSweep, 200, greedy);
      cfg.batch_size = 4;
      cfg.eta = 0.01;
      r.panels.push_back(cfg);
    }
  } else {
    return std::nullopt;
  }
  return r;
}

}  // namespace ras::cli
