#include "neurosa/record.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace neurosa {

namespace {

using Json = nlohmann::ordered_json;

Json quant_to_json(const std::optional<QuantFormat>& q) {
  if (!q) return nullptr;
  return Json{{"exponent_bits", q->exponent_bits},
              {"mantissa_bits", q->mantissa_bits}};
}

std::optional<QuantFormat> quant_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return QuantFormat{j.at("exponent_bits").get<int>(),
                     j.at("mantissa_bits").get<int>()};
}

Json config_to_json(const SolverConfig& cfg) {
  Json j;
  j["max_iter"] = cfg.max_iter;
  j["seed"] = cfg.seed;
  j["arbiter"] = to_string(cfg.arbiter);
  j["hardware_faithful"] = cfg.hardware_faithful;
  j["a"] = cfg.a;
  j["schedule"] = Json{{"kind", to_string(cfg.schedule.kind)},
                       {"t0", cfg.schedule.t0},
                       {"c", cfg.schedule.c},
                       {"dt", cfg.schedule.dt},
                       {"restart_at", cfg.schedule.restart_at},
                       {"cold_t", cfg.schedule.cold_t}};
  j["noise"] = Json{{"dist", to_string(cfg.noise.dist)},
                    {"b", cfg.noise.b},
                    {"eps", cfg.noise.eps},
                    {"target_mean", cfg.noise.target_mean},
                    {"eta", cfg.noise.eta},
                    {"quant", quant_to_json(cfg.noise.quant)}};
  j["trace_every"] = cfg.trace_every;
  j["record_spikes"] = cfg.record_spikes;
  return j;
}

SolverConfig config_from_json(const Json& j) {
  SolverConfig cfg;
  cfg.max_iter = j.at("max_iter").get<std::uint64_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.arbiter = arbiter_from_string(j.at("arbiter").get<std::string>());
  cfg.hardware_faithful = j.at("hardware_faithful").get<bool>();
  cfg.a = j.at("a").get<double>();
  const auto& s = j.at("schedule");
  cfg.schedule.kind = schedule_kind_from_string(s.at("kind").get<std::string>());
  cfg.schedule.t0 = s.at("t0").get<double>();
  cfg.schedule.c = s.at("c").get<double>();
  cfg.schedule.dt = s.at("dt").get<double>();
  cfg.schedule.restart_at = s.at("restart_at").get<std::uint64_t>();
  cfg.schedule.cold_t = s.at("cold_t").get<double>();
  const auto& n = j.at("noise");
  cfg.noise.dist = noise_dist_from_string(n.at("dist").get<std::string>());
  cfg.noise.b = n.at("b").get<double>();
  cfg.noise.eps = n.at("eps").get<double>();
  cfg.noise.target_mean = n.at("target_mean").get<double>();
  cfg.noise.eta = n.at("eta").get<double>();
  cfg.noise.quant = quant_from_json(n.at("quant"));
  cfg.trace_every = j.at("trace_every").get<std::uint64_t>();
  cfg.record_spikes = j.at("record_spikes").get<bool>();
  return cfg;
}

}  // namespace

std::string state_to_bitstring(const StateVector& s) {
  std::string bits(s.size(), '0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 1) bits[i] = '1';
  }
  return bits;
}

StateVector bitstring_to_state(const std::string& bits, Domain domain) {
  StateVector s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s[i] = 1;
    } else if (bits[i] == '0') {
      s[i] = domain == Domain::Spin ? std::int8_t{-1} : std::int8_t{0};
    } else {
      throw std::invalid_argument("bitstring entries must be '0' or '1'");
    }
  }
  return s;
}

std::string run_record_to_json(const RunRecord& r) {
  Json j;
  j["schema"] = "neurosa-run/1";
  j["problem"] = r.problem_name;
  j["kind"] = r.kind;
  j["dim"] = r.dim;
  j["config"] = config_to_json(r.config);
  j["replicas"] = r.replicas;
  j["replica_index"] = r.replica_index;
  j["mis_beta"] = r.mis_beta;
  j["best_value"] = r.best_value;
  j["best_energy"] = r.best_energy;
  j["best_state"] = r.best_state;
  j["iterations"] = r.iterations;
  j["spike_count"] = r.spike_count;
  j["wall_time_sec"] = r.wall_time_sec;
  j["sota"] = r.sota ? Json(*r.sota) : Json(nullptr);
  j["checkpoint_iterations"] = r.checkpoint_iterations;
  j["checkpoint_values"] = r.checkpoint_values;
  return j.dump(2) + "\n";
}

RunRecord run_record_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("schema").get<std::string>() != "neurosa-run/1") {
    throw std::runtime_error("unsupported run-record schema: " +
                             j.at("schema").get<std::string>());
  }
  RunRecord r;
  r.problem_name = j.at("problem").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.dim = j.at("dim").get<std::uint32_t>();
  r.config = config_from_json(j.at("config"));
  r.replicas = j.at("replicas").get<std::size_t>();
  r.replica_index = j.at("replica_index").get<std::size_t>();
  r.mis_beta = j.at("mis_beta").get<double>();
  r.best_value = j.at("best_value").get<double>();
  r.best_energy = j.at("best_energy").get<double>();
  r.best_state = j.at("best_state").get<std::string>();
  r.iterations = j.at("iterations").get<std::uint64_t>();
  r.spike_count = j.at("spike_count").get<std::uint64_t>();
  r.wall_time_sec = j.at("wall_time_sec").get<double>();
  if (!j.at("sota").is_null()) r.sota = j.at("sota").get<double>();
  r.checkpoint_iterations =
      j.at("checkpoint_iterations").get<std::vector<std::uint64_t>>();
  r.checkpoint_values = j.at("checkpoint_values").get<std::vector<double>>();
  return r;
}

void write_run_record(const RunRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << run_record_to_json(record);
  if (!out) throw std::runtime_error("write failed: " + path);
}

RunRecord read_run_record(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open run record: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return run_record_from_json(buf.str());
  } catch (const Json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_best_series_csv(const RunTrace& trace, std::ostream& out) {
  out << "iteration,best_value\n";
  for (const auto& s : trace.samples) {
    out << s.iteration << ',' << Json(s.best_energy).dump() << '\n';
  }
}

void write_spikes_csv(const RunTrace& trace, std::ostream& out) {
  out << "iteration,neuron,direction,delta_h\n";
  for (const auto& e : trace.spikes) {
    out << e.iteration << ',' << e.neuron << ','
        << (e.direction == SpikeDirection::On ? "on" : "off") << ','
        << Json(e.delta_h).dump() << '\n';
  }
}

void write_csv_file(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace neurosa
