#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "ras/bounds.hpp"
#include "ras/capacity.hpp"
#include "ras/channel.hpp"
#include "ras/errors.hpp"
#include "ras/experiment.hpp"
#include "ras/rng.hpp"
#include "ras/selection.hpp"
#include "recipes.hpp"

namespace ras::cli {

namespace {

using nlohmann::json;

// Argument problems surface as exit code 2.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  std::size_t nr = 0, nt = 0, l = 0, trials = 0, batch_size = 0;
  std::uint64_t seed = 0;
  std::vector<double> snr_db, snr_total;
  double eta = 0.0;
  std::string algo, target, config, out, figure, mode = "ergodic";
  std::vector<std::size_t> csi_grid, nr_grid;
  unsigned threads = 1;
  std::string bound_kind;
};

const std::vector<std::size_t> kDefaultNrGrid{32, 64, 128, 256, 512, 1024};

TargetSpec parse_target(const std::string& text) {
  if (text == "level09") return TargetSpec::level09();
  if (text.rfind("value:", 0) == 0) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(text.substr(6), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != text.size() - 6) throw ArgumentError("--target: cannot parse '" + text + "'");
    return TargetSpec::fixed(v);
  }
  throw ArgumentError("--target: expected level09 or value:<bits>, got '" + text + "'");
}

std::string target_text(const TargetSpec& t) {
  return t.mode == TargetSpec::Mode::kLevel ? "level09" : "value:" + CsvWriter::format(t.value);
}

SelectorKind parse_algo(const std::string& text) {
  auto kind = parse_selector(text);
  if (!kind) throw ArgumentError("--algo: unknown selector '" + text + "'");
  return *kind;
}

std::vector<double> total_to_normalized(const std::vector<double>& total_db, std::size_t nt) {
  std::vector<double> out;
  for (double s : total_db) out.push_back(s - linear_to_db(static_cast<double>(nt)));
  return out;
}

// JSON keys mirror the long flag names.
struct FileConfig {
  ExperimentConfig cfg;
  std::optional<std::vector<double>> snr_total;
  std::optional<std::vector<std::size_t>> nr_grid;
};

template <typename T>
T json_get(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ArgumentError("--config: key '" + key + "' has the wrong type");
  }
}

template <typename T>
std::vector<T> json_list(const json& v, const std::string& key) {
  if (v.is_array()) return json_get<std::vector<T>>(v, key);
  return {json_get<T>(v, key)};
}

FileConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("--config: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("--config: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ArgumentError("--config: top level must be an object");

  FileConfig fc;
  auto& c = fc.cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "nr") c.nr = json_get<std::size_t>(v, key);
    else if (key == "nt") c.nt = json_get<std::size_t>(v, key);
    else if (key == "l") c.l = json_get<std::size_t>(v, key);
    else if (key == "trials") c.trials = json_get<std::size_t>(v, key);
    else if (key == "seed") c.master_seed = json_get<std::uint64_t>(v, key);
    else if (key == "eta") c.eta = json_get<double>(v, key);
    else if (key == "snr-db") c.snr_db_grid = json_list<double>(v, key);
    else if (key == "snr-total") fc.snr_total = json_list<double>(v, key);
    else if (key == "algo") c.selector = parse_algo(json_get<std::string>(v, key));
    else if (key == "csi-grid") c.csi_grid = json_list<std::size_t>(v, key);
    else if (key == "batch-size") c.batch_size = json_get<std::size_t>(v, key);
    else if (key == "target") c.target = parse_target(json_get<std::string>(v, key));
    else if (key == "threads") c.threads = json_get<unsigned>(v, key);
    else if (key == "nr-grid") fc.nr_grid = json_list<std::size_t>(v, key);
    else throw ArgumentError("--config: unknown key '" + key + "'");
  }
  return fc;
}

// Maps a validation message from the library onto the flag that caused it.
[[noreturn]] void rethrow_with_flag(const std::invalid_argument& e) {
  static const std::pair<const char*, const char*> kPrefixes[] = {
      {"trials", "--trials"}, {"nr", "--nr"},         {"nt", "--nt"},
      {"l=", "--l"},          {"l ", "--l"},          {"snr", "--snr-db"},
      {"eta", "--eta"},       {"csi grid", "--csi-grid"}, {"batch size", "--batch-size"},
      {"target", "--target"},
  };
  const std::string msg = e.what();
  for (const auto& [prefix, flag] : kPrefixes) {
    if (msg.rfind(prefix, 0) == 0) throw ArgumentError(std::string(flag) + ": " + msg);
  }
  throw ArgumentError(msg);
}

void checked_validate(const ExperimentConfig& cfg) {
  try {
    cfg.validate();
  } catch (const CapacityBudgetError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    rethrow_with_flag(e);
  }
}

void emit_config(CsvWriter& csv, const ExperimentConfig& cfg, const std::string& prefix = "") {
  auto join_doubles = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + CsvWriter::format(v[i]);
    return s;
  };
  auto join_sizes = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
  };
  csv.comment(prefix + "seed", std::to_string(cfg.master_seed));
  csv.comment(prefix + "trials", std::to_string(cfg.trials));
  csv.comment(prefix + "nr", std::to_string(cfg.nr));
  csv.comment(prefix + "nt", std::to_string(cfg.nt));
  csv.comment(prefix + "l", std::to_string(cfg.l));
  csv.comment(prefix + "snr_db", join_doubles(cfg.snr_db_grid));
  csv.comment(prefix + "eta", CsvWriter::format(cfg.eta));
  csv.comment(prefix + "algo", std::string(to_string(cfg.selector)));
  csv.comment(prefix + "csi_grid", join_sizes(cfg.csi_grid));
  csv.comment(prefix + "batch_size", std::to_string(cfg.effective_batch_size()));
  csv.comment(prefix + "target", target_text(cfg.target));
}

std::string_view bound_name(BoundKind kind) {
  return kind == BoundKind::kBeamforming ? "bf" : "mrc";
}

void write_ergodic_header(CsvWriter& csv) {
  csv.header({"panel", "nr", "nt", "l", "snr_db", "algo", "bound", "capacity_mean", "capacity_se",
              "visited_nodes_mean", "bound_sample_mean", "bound_sample_var", "asym_mean",
              "asym_var", "approx"});
}

void write_ergodic(CsvWriter& csv, std::size_t panel, const ExperimentConfig& cfg) {
  for (const auto& r : run_ergodic(cfg)) {
    csv.row() << panel << cfg.nr << cfg.nt << cfg.l << r.snr_db << to_string(cfg.selector)
              << bound_name(r.bound_kind) << r.capacity.mean << r.capacity.std_error
              << r.mean_visited_nodes << r.bound_samples.mean << r.bound_samples.variance
              << r.asym_mean << r.asym_variance << r.approx_capacity;
  }
}

// ECDF rows are thinned to at most this many points per SNR.
constexpr std::size_t kMaxEcdfPoints = 1000;

void write_cdf_header(CsvWriter& csv) {
  csv.header({"panel", "nr", "nt", "l", "snr_db", "bound", "x", "ecdf", "gaussian_cdf",
              "gaussian_mean", "gaussian_var", "ks"});
}

void write_cdf(CsvWriter& csv, std::size_t panel, const ExperimentConfig& cfg) {
  for (const auto& r : run_cdf(cfg)) {
    const auto& xs = r.samples.ecdf_x;
    const std::size_t stride = std::max<std::size_t>(1, (xs.size() + kMaxEcdfPoints - 1) / kMaxEcdfPoints);
    for (std::size_t i = stride - 1; i < xs.size(); i += stride) {
      csv.row() << panel << cfg.nr << cfg.nt << cfg.l << r.snr_db << bound_name(r.bound_kind)
                << xs[i] << r.samples.ecdf_levels[i]
                << normal_cdf(xs[i], r.gaussian_mean, r.gaussian_variance) << r.gaussian_mean
                << r.gaussian_variance << r.ks;
    }
  }
}

void write_bound_vs_nr_header(CsvWriter& csv) {
  csv.header({"panel", "nr", "nt", "l", "snr_db", "bound", "asym_mean", "asym_var", "sampled_mean",
              "sampled_var", "sampled_se"});
}

void write_bound_vs_nr(CsvWriter& csv, std::size_t panel, const ExperimentConfig& cfg,
                       const std::vector<std::size_t>& nr_grid) {
  for (const auto& r : run_bound_vs_nr(cfg, nr_grid)) {
    csv.row() << panel << r.nr << cfg.nt << cfg.l << r.snr_db << bound_name(r.asym.kind)
              << r.asym.mean << r.asym.variance << r.sampled.mean << r.sampled.variance
              << r.sampled.std_error;
  }
}

void write_sweep_header(CsvWriter& csv) {
  csv.header({"panel", "nr", "nt", "l", "snr_db", "algo", "csi_rows", "r2", "capacity_mean",
              "capacity_se", "efficient_mean", "r1", "full_csi_mean", "asym_mean", "approx"});
}

void write_sweep(CsvWriter& csv, std::size_t panel, const ExperimentConfig& cfg) {
  for (const auto& r : sweep_csi(cfg)) {
    csv.row() << panel << cfg.nr << cfg.nt << cfg.l << r.snr_db << to_string(cfg.selector)
              << r.csi_rows << r.r2 << r.capacity.mean << r.capacity.std_error << r.mean_efficient
              << r.r1 << r.full_csi_mean << r.asym_mean << r.approx_capacity;
  }
}

void write_adaptive_header(CsvWriter& csv) {
  csv.header({"panel", "nr", "nt", "l", "snr_db", "algo", "batch_size", "target", "reached_rate",
              "csi_rows_mean", "capacity_mean", "capacity_se", "visited_nodes_mean",
              "efficient_mean", "full_capacity_mean", "full_visited_nodes_mean",
              "full_efficient"});
}

void write_adaptive(CsvWriter& csv, std::size_t panel, const ExperimentConfig& cfg) {
  for (const auto& r : run_adaptive(cfg)) {
    csv.row() << panel << cfg.nr << cfg.nt << cfg.l << r.snr_db << to_string(cfg.selector)
              << cfg.effective_batch_size() << r.target << r.reached_rate << r.csi_rows.mean
              << r.capacity.mean << r.capacity.std_error << r.visited_nodes.mean
              << r.efficient.mean << r.full_capacity.mean << r.full_visited_nodes.mean
              << r.full_efficient;
  }
}

std::vector<std::size_t> default_csi_grid(std::size_t nr, std::size_t l) {
  const std::size_t step = std::max<std::size_t>(1, nr / 16);
  std::vector<std::size_t> grid{l};
  for (std::size_t v = step; v <= nr; v += step) {
    if (v > l) grid.push_back(v);
  }
  if (grid.back() != nr) grid.push_back(nr);
  return grid;
}

class Runner {
 public:
  Runner(std::ostream& err) : err_(err) {}

  int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Receive antenna selection for massive MIMO", "ras"};
    app.require_subcommand(1);

    auto* bound = add(app, "bound", "Asymptotic bound parameters (bf, mrc or approx)");
    bound->add_option("kind", flags_.bound_kind, "bf, mrc or approx")
        ->required()
        ->check(CLI::IsMember({"bf", "mrc", "approx"}));
    auto* simulate = add(app, "simulate", "Monte-Carlo experiment or figure recipe");
    simulate->add_option("--figure", flags_.figure, "Figure recipe, fig1..fig12");
    simulate->add_option("--mode", flags_.mode, "ergodic, cdf or bound-vs-nr")
        ->check(CLI::IsMember({"ergodic", "cdf", "bound-vs-nr"}));
    simulate->add_option("--nr-grid", flags_.nr_grid, "Receive-array sizes for bound-vs-nr")
        ->delimiter(',');
    add(app, "select", "Select l rows of one channel draw");
    add(app, "adaptive", "Adaptive partial-CSI selection");
    add(app, "sweep", "Capacity against the number of rows with CSI");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err_);
      return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::ostringstream buffer;
    buffer.imbue(std::locale::classic());
    CsvWriter csv(buffer);
    csv.comment("command", sub->get_name());
    csv.comment("version", "0.1.0");
    dispatch(*sub, csv);

    if (flags_.out.empty()) {
      out << buffer.str();
      out.flush();
    } else {
      std::ofstream file(flags_.out, std::ios::binary | std::ios::trunc);
      if (!file) throw ArgumentError("--out: cannot open '" + flags_.out + "'");
      file << buffer.str();
      if (!file) throw std::runtime_error("failed writing '" + flags_.out + "'");
    }
    return 0;
  }

 private:
  CLI::App* add(CLI::App& app, const std::string& name, const std::string& description) {
    auto* s = app.add_subcommand(name, description);
    s->add_option("--nr", flags_.nr, "Receive antennas");
    s->add_option("--nt", flags_.nt, "Transmit antennas");
    s->add_option("--l", flags_.l, "Selected receive antennas");
    auto* db = s->add_option("--snr-db", flags_.snr_db, "Normalized SNR grid in dB")->delimiter(',');
    s->add_option("--snr-total", flags_.snr_total, "Total SNR grid in dB")
        ->delimiter(',')
        ->excludes(db);
    s->add_option("--trials", flags_.trials, "Monte-Carlo trials");
    s->add_option("--seed", flags_.seed, "Master seed");
    s->add_option("--eta", flags_.eta, "CSI acquisition cost per row, in [0, 1)");
    s->add_option("--algo", flags_.algo, "es, greedy, bab or norm");
    s->add_option("--csi-grid", flags_.csi_grid, "Rows with CSI, comma separated")->delimiter(',');
    s->add_option("--batch-size", flags_.batch_size, "Rows acquired per adaptive step");
    s->add_option("--target", flags_.target, "level09 or value:<bits>");
    s->add_option("--threads", flags_.threads, "Worker threads, 0 for all cores");
    s->add_option("--out", flags_.out, "Write CSV here instead of standard output");
    s->add_option("--config", flags_.config, "JSON config; flags override its keys");
    return s;
  }

  static bool given(const CLI::App& sub, const std::string& flag) {
    return sub.get_option_no_throw(flag) != nullptr && sub.count(flag) > 0;
  }

  // File values first, then explicitly passed flags on top.
  ExperimentConfig resolve(const CLI::App& sub) {
    FileConfig fc;
    if (!flags_.config.empty()) fc = load_config(flags_.config);
    if (fc.nr_grid && !given(sub, "--nr-grid")) flags_.nr_grid = *fc.nr_grid;
    ExperimentConfig cfg = fc.cfg;
    apply_flags(sub, cfg);
    if (given(sub, "--snr-total")) {
      cfg.snr_db_grid = total_to_normalized(flags_.snr_total, cfg.nt);
    } else if (fc.snr_total && !given(sub, "--snr-db")) {
      cfg.snr_db_grid = total_to_normalized(*fc.snr_total, cfg.nt);
    }
    return cfg;
  }

  void apply_flags(const CLI::App& sub, ExperimentConfig& cfg) {
    if (given(sub, "--nr")) cfg.nr = flags_.nr;
    if (given(sub, "--nt")) cfg.nt = flags_.nt;
    if (given(sub, "--l")) cfg.l = flags_.l;
    if (given(sub, "--trials")) cfg.trials = flags_.trials;
    if (given(sub, "--seed")) cfg.master_seed = flags_.seed;
    if (given(sub, "--eta")) cfg.eta = flags_.eta;
    if (given(sub, "--snr-db")) cfg.snr_db_grid = flags_.snr_db;
    if (given(sub, "--algo")) cfg.selector = parse_algo(flags_.algo);
    if (given(sub, "--csi-grid")) cfg.csi_grid = flags_.csi_grid;
    if (given(sub, "--batch-size")) cfg.batch_size = flags_.batch_size;
    if (given(sub, "--target")) cfg.target = parse_target(flags_.target);
    if (given(sub, "--threads")) cfg.threads = flags_.threads;
  }

  void dispatch(const CLI::App& sub, CsvWriter& csv) {
    const std::string& name = sub.get_name();
    if (name == "simulate" && given(sub, "--figure")) {
      run_figure(sub, csv);
      return;
    }
    ExperimentConfig cfg = resolve(sub);
    if (name == "sweep" && cfg.csi_grid.empty() && cfg.l >= 1 && cfg.l <= cfg.nr) {
      cfg.csi_grid = default_csi_grid(cfg.nr, cfg.l);
    }
    checked_validate(cfg);
    emit_config(csv, cfg);

    if (name == "bound") {
      run_bound(csv, cfg);
    } else if (name == "select") {
      run_select(csv, cfg);
    } else if (name == "adaptive") {
      write_adaptive_header(csv);
      write_adaptive(csv, 0, cfg);
    } else if (name == "sweep") {
      write_sweep_header(csv);
      write_sweep(csv, 0, cfg);
    } else if (flags_.mode == "cdf") {
      write_cdf_header(csv);
      write_cdf(csv, 0, cfg);
    } else if (flags_.mode == "bound-vs-nr") {
      if (flags_.nr_grid.empty()) flags_.nr_grid = kDefaultNrGrid;
      csv.comment("nr_grid", join(flags_.nr_grid));
      write_bound_vs_nr_header(csv);
      write_bound_vs_nr(csv, 0, cfg, flags_.nr_grid);
    } else {
      write_ergodic_header(csv);
      write_ergodic(csv, 0, cfg);
    }
  }

  static std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
  }

  void warn_regime(const std::string& kind, const ExperimentConfig& cfg) {
    if (kind == "bf" && cfg.l > cfg.nt) {
      err_ << "warning: bf bound with l=" << cfg.l << " > nt=" << cfg.nt
           << " is outside its intended regime; consider mrc\n";
    } else if (kind == "mrc" && cfg.l <= cfg.nt) {
      err_ << "warning: mrc bound with l=" << cfg.l << " <= nt=" << cfg.nt
           << " is outside its intended regime; consider bf\n";
    }
  }

  void run_bound(CsvWriter& csv, const ExperimentConfig& cfg) {
    const std::string& kind = flags_.bound_kind;
    warn_regime(kind, cfg);
    if (kind == "bf") {
      csv.header({"nr", "nt", "l", "snr_db", "u", "mu", "var"});
      for (double s : cfg.snr_db_grid) {
        const auto b = bf_bound_params(cfg.nr, cfg.nt, cfg.l, db_to_linear(s));
        csv.row() << cfg.nr << cfg.nt << cfg.l << s << b.threshold_u << b.mean << b.variance;
      }
    } else if (kind == "mrc") {
      const auto t = mrc_trimmed_params(cfg.nr, cfg.l);
      csv.header({"nr", "nt", "l", "snr_db", "mu_t", "sigma_t_sq", "mu", "var"});
      for (double s : cfg.snr_db_grid) {
        const auto b = mrc_bound_params(cfg.nr, cfg.nt, cfg.l, db_to_linear(s));
        csv.row() << cfg.nr << cfg.nt << cfg.l << s << t.mu_t << t.sigma_t_sq << b.mean
                  << b.variance;
      }
    } else {
      if (cfg.l > cfg.nt) {
        throw ArgumentError("--l: approx requires l <= nt (l=" + std::to_string(cfg.l) +
                            ", nt=" + std::to_string(cfg.nt) + ")");
      }
      csv.header({"nr", "nt", "l", "snr_db", "mu", "gap", "approx"});
      for (double s : cfg.snr_db_grid) {
        const double rho = db_to_linear(s);
        const auto b = bf_bound_params(cfg.nr, cfg.nt, cfg.l, rho);
        csv.row() << cfg.nr << cfg.nt << cfg.l << s << b.mean << gap(cfg.l, cfg.nt, s)
                  << approx_ergodic_capacity(cfg.nr, cfg.nt, cfg.l, rho);
      }
    }
  }

  void run_select(CsvWriter& csv, const ExperimentConfig& cfg) {
    RngStream rng = derive_stream(cfg.master_seed, stream_id_for(StreamPurpose::kChannel, 0));
    const ChannelMatrix h = sample_channel(rng, cfg.nr, cfg.nt);
    csv.header({"snr_db", "algo", "indices", "capacity", "visited_nodes"});
    for (double s : cfg.snr_db_grid) {
      const auto r = select(cfg.selector, h, cfg.l, db_to_linear(s));
      std::string idx;
      for (std::size_t i = 0; i < r.indices.size(); ++i) idx += (i ? ";" : "") + std::to_string(r.indices[i]);
      csv.row() << s << to_string(cfg.selector) << idx << r.capacity_bits
                << static_cast<std::size_t>(r.visited_nodes);
    }
  }

  void run_figure(const CLI::App& sub, CsvWriter& csv) {
    auto recipe = figure_recipe(flags_.figure);
    if (!recipe) throw ArgumentError("--figure: unknown recipe '" + flags_.figure + "'");
    // Only run-size flags apply on top of a recipe.
    for (auto& p : recipe->panels) {
      if (given(sub, "--trials")) p.trials = flags_.trials;
      if (given(sub, "--seed")) p.master_seed = flags_.seed;
      if (given(sub, "--threads")) p.threads = flags_.threads;
      checked_validate(p);
    }
    if (given(sub, "--nr-grid")) recipe->nr_grid = flags_.nr_grid;

    csv.comment("figure", recipe->name);
    csv.comment("kind", std::string(to_string(recipe->kind)));
    csv.comment("panels", std::to_string(recipe->panels.size()));
    if (recipe->kind == RecipeKind::kBoundVsNr) csv.comment("nr_grid", join(recipe->nr_grid));
    for (std::size_t i = 0; i < recipe->panels.size(); ++i) {
      emit_config(csv, recipe->panels[i], "panel" + std::to_string(i) + ".");
    }

    using Header = void (*)(CsvWriter&);
    std::function<void(std::size_t, const ExperimentConfig&)> body;
    Header header = nullptr;
    switch (recipe->kind) {
      case RecipeKind::kCdf:
        header = write_cdf_header;
        body = [&](std::size_t i, const ExperimentConfig& c) { write_cdf(csv, i, c); };
        break;
      case RecipeKind::kErgodic:
        header = write_ergodic_header;
        body = [&](std::size_t i, const ExperimentConfig& c) { write_ergodic(csv, i, c); };
        break;
      case RecipeKind::kBoundVsNr:
        header = write_bound_vs_nr_header;
        body = [&](std::size_t i, const ExperimentConfig& c) {
          write_bound_vs_nr(csv, i, c, recipe->nr_grid);
        };
        break;
      case RecipeKind::kSweep:
        header = write_sweep_header;
        body = [&](std::size_t i, const ExperimentConfig& c) { write_sweep(csv, i, c); };
        break;
      case RecipeKind::kAdaptive:
        header = write_adaptive_header;
        body = [&](std::size_t i, const ExperimentConfig& c) { write_adaptive(csv, i, c); };
        break;
    }
    header(csv);
    for (std::size_t i = 0; i < recipe->panels.size(); ++i) body(i, recipe->panels[i]);
  }

  std::ostream& err_;
  Flags flags_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Runner runner(err);
    return runner.run(args, out);
  } catch (const CapacityBudgetError& e) {
    err << "error: --algo: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ras::cli
