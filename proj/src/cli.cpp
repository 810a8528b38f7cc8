#include "bocsp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "bocsp/error.hpp"
#include "bocsp/instances.hpp"
#include "bocsp/scalarize.hpp"
#include "json.hpp"

namespace bocsp::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr const char* kMetricsHeader =
    "instance,method,colgen,sigma1,sigma2,sigma3_objects,sigma3_cycles,sigma4,sigma5,sigma6,"
    "nc,tt,it,ref_f1,ref_f2,status";

std::string number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw Error(ErrorKind::kIo, "cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

json load_json_or(const fs::path& path, json fallback) {
  if (!fs::exists(path)) return fallback;
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParseError, path.string() + ": " + e.what());
  }
}

json pair_json(const std::optional<std::pair<long, long>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

json point_json(const FrontPoint& point) {
  json solution = json::array();
  for (const UsedPattern& used : point.solution) {
    solution.push_back({{"counts", used.counts}, {"x", used.x}, {"y", used.y}});
  }
  return {{"f1", point.f1},
          {"f2", point.f2},
          {"proven", point.proven},
          {"method", point.method},
          {"solution", std::move(solution)}};
}

json front_document(const std::string& instance, const std::string& method,
                    const std::string& colgen, const Front& front) {
  json points = json::array();
  for (const FrontPoint& point : front) points.push_back(point_json(point));
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["instance"] = instance;
  doc["method"] = method;
  doc["colgen"] = colgen;
  doc["points"] = std::move(points);
  return doc;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  std::string item_class = "S";
  std::optional<int> m;  // generator default when unset
  int length = 10000;
  double mean_demand = 100.0;
  int shape = 1;
  bool no_rotation = false;
  std::string capacity = "7";
  std::uint64_t seed = 1;
  int count = 1;
  std::vector<int> subsets;
  std::string out = "instances";
};

void record_instance(json& manifest, const Instance& inst, const fs::path& file, json params) {
  params["file"] = file.filename().string();
  params["items_after_merge"] = inst.item_count();
  params["saw_capacity"] = inst.saw_capacity();
  manifest["instances"][inst.id()] = std::move(params);
}

int cmd_generate(bool two_d, const GenerateOptions& o, std::ostream& out) {
  const CapacitySpec capacity = CapacitySpec::parse(o.capacity);
  const fs::path dir(o.out);
  const fs::path manifest_path = dir / "manifest.json";
  json manifest = load_json_or(manifest_path, json::object());
  manifest["schema_version"] = kSchemaVersion;
  if (!manifest.contains("instances")) manifest["instances"] = json::object();

  for (int k = 0; k < o.count; ++k) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    std::optional<Instance> inst;
    json params;
    if (two_d) {
      Gen2DParams p;
      if (o.m) p.m = *o.m;
      p.shape = o.shape;
      p.capacity = capacity;
      p.allow_rotation = !o.no_rotation;
      p.seed = seed;
      inst = generate_2d(p);
      params = {{"generator", "2d"},  {"m", p.m},       {"shape", p.shape},
                {"capacity", capacity.to_string()}, {"rotation", p.allow_rotation},
                {"seed", seed}};
    } else {
      Gen1DParams p;
      if (o.m) p.m = *o.m;
      p.object_length = o.length;
      p.item_class = parse_item_class(o.item_class);
      p.mean_demand = o.mean_demand;
      p.capacity = capacity;
      p.seed = seed;
      inst = generate_1d(p);
      params = {{"generator", "1d"},
                {"m", p.m},
                {"length", p.object_length},
                {"class", o.item_class},
                {"mean_demand", p.mean_demand},
                {"capacity", capacity.to_string()},
                {"seed", seed}};
    }
    const fs::path file = dir / (inst->id() + ".txt");
    write_text(file, format_instance(*inst));
    record_instance(manifest, *inst, file, params);
    out << file.string() << '\n';

    for (int size : o.subsets) {
      if (size >= inst->item_count()) continue;
      const Instance sub = item_subset(*inst, size);
      const fs::path sub_file = dir / (sub.id() + ".txt");
      write_text(sub_file, format_instance(sub));
      record_instance(manifest, sub, sub_file, {{"subset_of", inst->id()}, {"first_items", size}});
      out << sub_file.string() << '\n';
    }
  }
  write_text(manifest_path, manifest.dump(2) + "\n");
  return kSuccess;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::vector<std::string> instances;
  std::string method = "all";
  std::string colgen = "dynamic";
  std::string capacity;
  std::string permutation = "21";
  double zeta = 0.3;
  double epsilon = 1.0;
  double rho = 1e-4;
  double time_limit_pricing = 15.0;
  double time_limit_master = 60.0;
  double gap_pricing = 0.01;
  double gap_master = 1e-4;
  bool no_limits = false;
  std::uint64_t seed = 1;
  std::string out = "results";
  bool enumerate = false;
  int threads = 1;
};

std::vector<Method> selected_methods(const std::string& text) {
  if (text == "all") return {Method::kLec, Method::kFpa, Method::kAwt};
  return {parse_method(text)};
}

MethodConfig method_config(Method method, const SolveOptions& o) {
  MethodConfig config;
  config.method = method;
  config.colgen.mode = o.colgen == "static" ? ColgenMode::kStatic : ColgenMode::kDynamic;
  if (o.no_limits) {
    config.colgen.pricing_limits = SolveLimits::unlimited();
    config.colgen.master_limits = SolveLimits::unlimited();
  } else {
    config.colgen.pricing_limits = {o.time_limit_pricing, o.gap_pricing, std::nullopt};
    config.colgen.master_limits = {o.time_limit_master, o.gap_master, std::nullopt};
  }
  config.permutation = o.permutation == "12" ? std::array<int, 2>{1, 2} : std::array<int, 2>{2, 1};
  config.zeta = o.zeta;
  config.epsilon = o.epsilon;
  config.rho = o.rho;
  return config;
}

json config_json(const SolveOptions& o) {
  json limits = json::object();
  if (o.no_limits) {
    limits = "none";
  } else {
    limits = {{"time_limit_pricing", o.time_limit_pricing},
              {"time_limit_master", o.time_limit_master},
              {"gap_pricing", o.gap_pricing},
              {"gap_master", o.gap_master}};
  }
  return {{"colgen", o.colgen},
          {"capacity", o.capacity.empty() ? json(nullptr) : json(o.capacity)},
          {"permutation", o.permutation},
          {"zeta", o.zeta},
          {"epsilon", o.epsilon},
          {"rho", o.rho},
          {"limits", std::move(limits)},
          {"enumerate", o.enumerate},
          {"seed", o.seed}};
}

struct RunOutcome {
  std::string instance;
  std::string method;
  std::optional<FrontResult> result;
  std::string error;
  MetricsReport metrics;

  std::string status() const {
    if (!result) return "failed";
    return result->aborted ? "partial" : "ok";
  }
};

std::string trace_text(const Instance& inst, const FrontResult& r, const std::string& colgen) {
  std::ostringstream t;
  t << "instance " << inst.id() << "\n";
  t << "method " << to_string(r.method) << " colgen " << colgen << "\n";
  t << "initial_columns " << r.initial_columns << " total_columns " << r.total_columns
    << " iterations " << r.iterations << " subproblems " << r.subproblems << "\n";
  t << "colgen_rounds " << r.colgen.iterations << " columns_added " << r.colgen.columns_added
    << " stalled " << (r.colgen.stalled ? 1 : 0) << "\n";
  t << "label status lp_objective objective gap nodes columns_added patterns seconds point\n";
  for (const SubproblemRecord& s : r.trace) {
    t << s.label << ' ' << to_string(s.status) << ' '
      << (s.lp_infeasible ? std::string("-") : number(s.lp_objective)) << ' '
      << (s.point ? number(s.objective) : std::string("-")) << ' '
      << (s.point ? number(s.gap) : std::string("-")) << ' ' << s.nodes << ' ' << s.columns_added
      << ' ' << s.patterns << ' ' << number(s.seconds) << ' ';
    if (s.point) {
      t << '(' << s.point->first << ',' << s.point->second << ')';
    } else {
      t << '-';
    }
    t << '\n';
  }
  if (r.aborted) t << "aborted: " << r.abort_reason << "\n";
  t << "seconds " << number(r.seconds) << "\n";
  return t.str();
}

std::string metrics_row(const RunOutcome& run, const std::string& colgen) {
  std::ostringstream row;
  const MetricsReport& m = run.metrics;
  row << run.instance << ',' << run.method << ',' << colgen << ',';
  if (run.result) {
    const FrontResult& r = *run.result;
    row << m.cardinality << ',' << number(m.hypervolume) << ',' << m.amplitude_objects << ','
        << m.amplitude_cycles << ',' << m.subproblems << ','
        << (m.per_second_defined ? number(m.per_second) : std::string("NA")) << ','
        << number(m.per_subproblem) << ',' << r.total_columns << ',' << number(r.seconds) << ','
        << r.iterations << ',' << number(m.reference.first) << ','
        << number(m.reference.second);
  } else {
    row << "NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA";
  }
  row << ',' << run.status();
  return row.str();
}

void merge_metrics(const fs::path& path, const std::vector<std::string>& rows) {
  // Rows are keyed by (instance, method, colgen); a rerun replaces its row.
  std::map<std::string, std::string> keyed;
  auto key_of = [](const std::string& row) {
    std::size_t cut = row.find(',');
    for (int k = 0; k < 2 && cut != std::string::npos; ++k) cut = row.find(',', cut + 1);
    return row.substr(0, cut);
  };
  if (fs::exists(path)) {
    std::istringstream in(read_text(path));
    std::string line;
    std::getline(in, line);
    if (line != kMetricsHeader) throw Error(ErrorKind::kParseError, path.string() + ": unexpected header");
    while (std::getline(in, line)) {
      if (!line.empty()) keyed[key_of(line)] = line;
    }
  }
  for (const std::string& row : rows) keyed[key_of(row)] = row;
  std::string text = std::string(kMetricsHeader) + "\n";
  for (const auto& [key, row] : keyed) text += row + "\n";
  write_text(path, text);
}

struct InstanceJob {
  std::string path;
  std::optional<Instance> instance;
  std::vector<RunOutcome> runs;
};

void solve_instance(InstanceJob& job, const SolveOptions& o, std::mutex& log_mutex,
                    std::ostream& out) {
  const Instance& inst = *job.instance;
  const fs::path dir = fs::path(o.out) / inst.id();
  std::optional<PatternSet> enumerated;
  if (o.enumerate) enumerated = enumerate_maximal_patterns_1d(inst);

  for (Method method : selected_methods(o.method)) {
    RunOutcome run;
    run.instance = inst.id();
    run.method = to_string(method);
    try {
      run.result = solve_method(inst, method_config(method, o), enumerated ? &*enumerated : nullptr);
    } catch (const Error& e) {
      run.error = e.what();
    }
    job.runs.push_back(std::move(run));
  }

  std::vector<Front> fronts;
  for (const RunOutcome& run : job.runs) {
    if (run.result) fronts.push_back(run.result->front);
  }
  const auto reference = reference_point(fronts);
  const json config = config_json(o);
  for (RunOutcome& run : job.runs) {
    const std::string stem = run.method + "-" + o.colgen;
    if (!run.result) {
      write_text(dir / (stem + ".trace.txt"), "instance " + inst.id() + "\nmethod " + run.method +
                                                   " colgen " + o.colgen + "\nerror: " +
                                                   run.error + "\n");
      std::lock_guard<std::mutex> lock(log_mutex);
      out << inst.id() << ' ' << stem << ": failed: " << run.error << '\n';
      continue;
    }
    const FrontResult& r = *run.result;
    MetricsInput input{r.subproblems, r.seconds, r.lex1, r.lex2};
    run.metrics = metrics(r.front, input, reference);

    json doc = front_document(inst.id(), run.method, o.colgen, r.front);
    doc["status"] = {{"aborted", r.aborted}, {"reason", r.abort_reason}};
    doc["lex1"] = pair_json(r.lex1);
    doc["lex2"] = pair_json(r.lex2);
    doc["subproblems"] = r.subproblems;
    doc["iterations"] = r.iterations;
    doc["initial_columns"] = r.initial_columns;
    doc["total_columns"] = r.total_columns;
    doc["config"] = config;
    write_text(dir / (stem + ".front.json"), doc.dump(2) + "\n");
    write_text(dir / (stem + ".trace.txt"), trace_text(inst, r, o.colgen));

    std::lock_guard<std::mutex> lock(log_mutex);
    out << inst.id() << ' ' << stem << ": " << r.front.size() << " points, hypervolume "
        << number(run.metrics.hypervolume) << ", " << r.subproblems << " subproblems"
        << (r.aborted ? " (partial: " + r.abort_reason + ")" : std::string()) << '\n';
  }
  if (fronts.size() > 1) {
    json doc = front_document(inst.id(), "union", "", union_fronts(fronts));
    doc["config"] = config;
    write_text(dir / ("union-" + o.colgen + ".front.json"), doc.dump(2) + "\n");
  }
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<InstanceJob> jobs;
  for (const std::string& path : o.instances) {
    InstanceJob job;
    job.path = path;
    try {
      Instance inst = read_instance(path);
      if (!o.capacity.empty()) {
        const CapacitySpec spec = CapacitySpec::parse(o.capacity);
        inst = inst.with_saw_capacity(spec.use_max_demand ? inst.max_demand() : spec.value);
      }
      if (o.enumerate && inst.is_2d()) {
        throw Error(ErrorKind::kInvalidInput, path + ": --enumerate supports 1D instances only");
      }
      job.instance = std::move(inst);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    jobs.push_back(std::move(job));
  }
  for (Method method : selected_methods(o.method)) {
    method_config(method, o).validate();
  }

  std::mutex log_mutex;
  std::atomic<std::size_t> next{0};
  std::vector<std::string> failures(jobs.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        solve_instance(jobs[k], o, log_mutex, out);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  const int threads = std::clamp(o.threads, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::string& failure : failures) {
    if (!failure.empty()) {
      err << "error: " << failure << '\n';
      return kUsage;
    }
  }

  std::vector<std::string> rows;
  const fs::path manifest_path = fs::path(o.out) / "manifest.json";
  json manifest = load_json_or(manifest_path, json::object());
  manifest["schema_version"] = kSchemaVersion;
  if (!manifest.contains("runs")) manifest["runs"] = json::object();
  bool partial = false;
  for (const InstanceJob& job : jobs) {
    for (const RunOutcome& run : job.runs) {
      rows.push_back(metrics_row(run, o.colgen));
      partial = partial || run.status() != "ok";
      manifest["runs"][run.instance + "/" + run.method + "-" + o.colgen] = {
          {"instance_file", job.path}, {"config", config_json(o)}, {"status", run.status()}};
    }
  }
  merge_metrics(fs::path(o.out) / "metrics.csv", rows);
  write_text(manifest_path, manifest.dump(2) + "\n");
  return partial ? kPartial : kSuccess;
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const std::vector<std::string>& dirs, std::string out_dir, std::ostream& out,
                std::ostream& err) {
  if (out_dir.empty()) out_dir = (fs::path(dirs.front()) / "compare").string();
  std::map<std::string, std::map<std::string, StoredFront>> groups;  // instance -> label
  for (const std::string& dir : dirs) {
    if (!fs::is_directory(dir)) {
      err << "error: not a directory: " << dir << '\n';
      return kUsage;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.size() > 11 &&
          name.compare(name.size() - 11, 11, ".front.json") == 0) {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      StoredFront stored = read_front_file(file.string());
      if (stored.method == "union") continue;
      const std::string label = stored.method + "-" + stored.colgen;
      auto& group = groups[stored.instance];
      if (group.count(label)) {
        throw Error(ErrorKind::kInvalidInput,
                    "two fronts for " + stored.instance + " " + label + " (" + file.string() + ")");
      }
      group.emplace(label, std::move(stored));
    }
  }
  if (groups.empty()) {
    err << "error: no front files found\n";
    return kUsage;
  }

  std::ostringstream table;
  table << "instance,label,sigma1,sigma2,sigma3_objects,sigma3_cycles,sigma4,sigma6,ref_f1,ref_f2\n";
  std::vector<ProfileCell> hv_cells, card_cells;
  for (const auto& [instance, group] : groups) {
    std::vector<Front> fronts;
    for (const auto& [label, stored] : group) fronts.push_back(stored.front);
    const Front united = union_fronts(fronts);
    const auto reference = reference_point(fronts);
    json doc = front_document(instance, "union", "", united);
    json sources = json::array();
    for (const auto& [label, stored] : group) sources.push_back(label);
    doc["sources"] = std::move(sources);
    write_text(fs::path(out_dir) / instance / "union.front.json", doc.dump(2) + "\n");

    auto emit = [&](const std::string& label, const Front& front, const MetricsInput& input) {
      const MetricsReport m = metrics(front, input, reference);
      table << instance << ',' << label << ',' << m.cardinality << ',' << number(m.hypervolume)
            << ',' << m.amplitude_objects << ',' << m.amplitude_cycles << ',' << m.subproblems
            << ',' << number(m.per_subproblem) << ',' << number(reference.first) << ','
            << number(reference.second) << '\n';
      return m;
    };
    for (const auto& [label, stored] : group) {
      const MetricsReport m =
          emit(label, stored.front, {stored.subproblems, 0.0, stored.lex1, stored.lex2});
      const bool failed = stored.front.empty();
      hv_cells.push_back({instance, label,
                          failed || m.hypervolume <= 0.0 ? std::nullopt
                                                         : std::optional<double>(m.hypervolume)});
      card_cells.push_back({instance, label,
                            failed ? std::nullopt
                                   : std::optional<double>(static_cast<double>(m.cardinality))});
    }
    emit("union", united, {});
    out << instance << ": " << group.size() << " fronts, union has " << united.size()
        << " points\n";
  }
  write_text(fs::path(out_dir) / "compare.csv", table.str());

  auto write_profile = [&](const std::string& name, const std::vector<ProfileCell>& cells) {
    std::ostringstream csv;
    csv << "method,tau,rho\n";
    for (const auto& [method, curve] : performance_profile(cells, ProfileSense::kMaximize)) {
      for (const auto& [tau, rho] : curve) csv << method << ',' << number(tau) << ',' << number(rho) << '\n';
    }
    write_text(fs::path(out_dir) / name, csv.str());
  };
  write_profile("profile-hypervolume.csv", hv_cells);
  write_profile("profile-cardinality.csv", card_cells);
  out << "wrote " << (fs::path(out_dir) / "compare.csv").string() << '\n';
  return kSuccess;
}

}  // namespace

StoredFront parse_front_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const std::string version = doc.at("schema_version").get<std::string>();
    const std::string expected = kSchemaVersion;
    if (version.substr(0, version.find('.')) != expected.substr(0, expected.find('.'))) {
      throw Error(ErrorKind::kParseError, "unsupported schema version " + version);
    }
    StoredFront stored;
    stored.instance = doc.at("instance").get<std::string>();
    stored.method = doc.at("method").get<std::string>();
    stored.colgen = doc.value("colgen", std::string());
    for (const json& p : doc.at("points")) {
      FrontPoint point;
      point.f1 = p.at("f1").get<long>();
      point.f2 = p.at("f2").get<long>();
      point.proven = p.value("proven", true);
      point.method = p.value("method", stored.method);
      point.instance = stored.instance;
      for (const json& u : p.value("solution", json::array())) {
        point.solution.push_back(
            {u.at("counts").get<std::vector<int>>(), u.at("x").get<long>(), u.at("y").get<long>()});
      }
      stored.front.push_back(std::move(point));
    }
    if (doc.contains("status")) stored.aborted = doc["status"].value("aborted", false);
    auto read_pair = [&](const char* key) -> std::optional<std::pair<long, long>> {
      if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
      return std::make_pair(doc[key].at(0).get<long>(), doc[key].at(1).get<long>());
    };
    stored.lex1 = read_pair("lex1");
    stored.lex2 = read_pair("lex2");
    stored.subproblems = doc.value("subproblems", 0L);
    return stored;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("malformed front file: ") + e.what());
  }
}

StoredFront read_front_file(const std::string& path) {
  try {
    return parse_front_json(read_text(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-objective cutting stock: instance generation, front computation, comparison"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("bocsp schema ") + kSchemaVersion);

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "Write generated instances and a manifest");
  generate->require_subcommand(1);
  CLI::App* gen1 = generate->add_subcommand("1d", "One-dimensional instances");
  CLI::App* gen2 = generate->add_subcommand("2d", "Two-dimensional instances");
  for (CLI::App* sub : {gen1, gen2}) {
    sub->add_option("--m", gen.m, "Number of item types")->check(CLI::PositiveNumber);
    sub->add_option("--capacity", gen.capacity, "Saw capacity: a positive integer or dmax");
    sub->add_option("--seed", gen.seed, "Seed of the first instance");
    sub->add_option("--count", gen.count, "Instances with consecutive seeds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--subsets", gen.subsets, "Also write the first-k-items subsets")
        ->delimiter(',');
    sub->add_option("--out", gen.out, "Output directory");
  }
  gen1->add_option("--class", gen.item_class, "Item class")->check(CLI::IsMember({"S", "M", "G"}));
  gen1->add_option("--length", gen.length, "Object length")->check(CLI::PositiveNumber);
  gen1->add_option("--mean-demand", gen.mean_demand, "Average demand per item type")
      ->check(CLI::PositiveNumber);
  gen2->add_option("--shape", gen.shape, "Shape class id")->check(CLI::IsMember({1, 3, 6, 11, 14}));
  gen2->add_flag("--no-rotation", gen.no_rotation, "Forbid turning items by 90 degrees");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute fronts for instance files");
  solve_cmd->add_option("instances", solve.instances, "Instance files")->required();
  solve_cmd->add_option("--method", solve.method)->check(CLI::IsMember({"lec", "fpa", "awt", "all"}));
  solve_cmd->add_option("--colgen", solve.colgen)->check(CLI::IsMember({"static", "dynamic"}));
  solve_cmd->add_option("--capacity", solve.capacity, "Override the saw capacity (N or dmax)");
  solve_cmd->add_option("--permutation", solve.permutation, "FPA branching order")
      ->check(CLI::IsMember({"12", "21"}));
  solve_cmd->add_option("--zeta", solve.zeta);
  solve_cmd->add_option("--eps", solve.epsilon);
  solve_cmd->add_option("--rho", solve.rho);
  solve_cmd->add_option("--time-limit-pricing", solve.time_limit_pricing);
  solve_cmd->add_option("--time-limit-master", solve.time_limit_master);
  solve_cmd->add_option("--gap-pricing", solve.gap_pricing);
  solve_cmd->add_option("--gap-master", solve.gap_master);
  solve_cmd->add_flag("--no-limits", solve.no_limits, "Solve every subproblem to optimality");
  solve_cmd->add_option("--seed", solve.seed, "Recorded with the results");
  solve_cmd->add_option("--out", solve.out, "Output directory");
  solve_cmd->add_flag("--enumerate", solve.enumerate,
                      "Start from every maximal 1D pattern instead of generated columns");
  solve_cmd->add_option("--threads", solve.threads, "Instances solved in parallel")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> compare_dirs;
  std::string compare_out;
  CLI::App* compare = app.add_subcommand("compare", "Union fronts, metric table and profiles");
  compare->add_option("dirs", compare_dirs, "Result directories")->required();
  compare->add_option("--out", compare_out, "Output directory (default DIR/compare)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen2->parsed(), gen, out);
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    return cmd_compare(compare_dirs, compare_out, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::kNumericFailure) return kPartial;
    return kUsage;
  }
}

}  // namespace bocsp::cli
