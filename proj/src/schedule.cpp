#include "neurosa/schedule.hpp"

namespace neurosa {

ScheduleKind schedule_kind_from_string(const std::string& name) {
  if (name == "fn-log" || name == "fnlog") return ScheduleKind::FnLog;
  if (name == "inverse-time" || name == "inv") return ScheduleKind::InverseTime;
  if (name == "exp-decay" || name == "exp") return ScheduleKind::ExpDecay;
  if (name == "constant") return ScheduleKind::Constant;
  if (name == "cold-restart") return ScheduleKind::ColdRestart;
  throw std::invalid_argument("unknown schedule kind: " + name);
}

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::FnLog:
      return "fn-log";
    case ScheduleKind::InverseTime:
      return "inverse-time";
    case ScheduleKind::ExpDecay:
      return "exp-decay";
    case ScheduleKind::Constant:
      return "constant";
    case ScheduleKind::ColdRestart:
      return "cold-restart";
  }
  return "?";
}

std::vector<double> fn_integrate(const AnnealSchedule& schedule,
                                 std::size_t n_steps, double t_start) {
  if (schedule.kind != ScheduleKind::FnLog) {
    throw std::invalid_argument("fn_integrate: FnLog schedules only");
  }
  if (t_start < 0.0) t_start = schedule.c * (std::exp(1.0) - 1.0);
  if (t_start <= 0.0) {
    throw std::invalid_argument("fn_integrate: t_start must be positive");
  }
  std::vector<double> out;
  out.reserve(n_steps);
  if (n_steps == 0) return out;
  double temp = schedule.t0 / std::log1p(t_start / schedule.c);
  out.push_back(temp);
  for (std::size_t k = 1; k < n_steps; ++k) {
    const double flux =
        (temp * temp / schedule.t0) * std::exp(-schedule.t0 / temp);
    temp -= schedule.dt / schedule.c * flux;
    out.push_back(temp);
  }
  return out;
}

}  // namespace neurosa
