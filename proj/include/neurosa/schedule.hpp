#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace neurosa {

enum class ScheduleKind { FnLog, InverseTime, ExpDecay, Constant, ColdRestart };

// Temperature schedule over iteration index n >= 1.  Schedule time is n*dt.
//
//   FnLog        T0 / log(1 + n dt / C)      (optimal log-cooling envelope)
//   InverseTime  T0 C / (n dt)
//   ExpDecay     T0 exp(-n dt / C)
//   Constant     T0
//   ColdRestart  cold_t until restart_at, then FnLog with time origin reset
struct AnnealSchedule {
  ScheduleKind kind = ScheduleKind::FnLog;
  double t0 = 0.3125;
  double c = 8.0e4;
  double dt = 1.0;
  std::uint64_t restart_at = 0;  // ColdRestart: first iteration of the FnLog phase
  double cold_t = 0.0;           // ColdRestart: pre-restart temperature

  double temperature(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("temperature: n must be >= 1");
    switch (kind) {
      case ScheduleKind::FnLog:
        return t0 / std::log1p(static_cast<double>(n) * dt / c);
      case ScheduleKind::InverseTime:
        return t0 * c / (static_cast<double>(n) * dt);
      case ScheduleKind::ExpDecay:
        return t0 * std::exp(-static_cast<double>(n) * dt / c);
      case ScheduleKind::Constant:
        return t0;
      case ScheduleKind::ColdRestart:
        if (n < restart_at) return cold_t;
        return t0 / std::log1p(static_cast<double>(n - restart_at + 1) * dt / c);
    }
    throw std::logic_error("temperature: unknown schedule kind");
  }

  // Upper bound of temperature(n) over n >= 1; used to validate the RESET
  // constant A.
  double max_temperature() const {
    switch (kind) {
      case ScheduleKind::Constant:
        return t0;
      case ScheduleKind::ColdRestart:
        return std::max(cold_t, t0 / std::log1p(dt / c));
      default:
        return temperature(1);
    }
  }

  static AnnealSchedule cold_restart(double t0, double c, double dt,
                                     std::uint64_t restart_at,
                                     double cold_t = -1.0) {
    AnnealSchedule s;
    s.kind = ScheduleKind::ColdRestart;
    s.t0 = t0;
    s.c = c;
    s.dt = dt;
    s.restart_at = restart_at;
    s.cold_t = cold_t < 0.0 ? 0.01 * t0 : cold_t;
    return s;
  }
};

ScheduleKind schedule_kind_from_string(const std::string& name);
std::string to_string(ScheduleKind kind);

// Forward-Euler integration of the Fowler-Nordheim dynamical system
//
//   C dT/dt = -(T^2/T0) exp(-T0/T)
//
// whose exact solution is the FnLog closed form. Returns n_steps values at
// times t_start, t_start + dt, ...; element 0 is the closed form at t_start.
// The default start time C (e - 1) is where T = T0; the closed form diverges
// as t -> 0+, so the integration must begin at a finite temperature.
std::vector<double> fn_integrate(const AnnealSchedule& schedule,
                                 std::size_t n_steps, double t_start = -1.0);

}  // namespace neurosa
