#include "nsfpen/state.hpp"

#include <cstdio>

namespace nsfpen {

namespace {

std::string failure_message(double time, long step, int cell_i, int cell_j, double rho,
                            double rho_e) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "scheme failure: nonpositive or non-finite state at t=%.12g (step %ld), cell "
                "(%d,%d): rho=%.17g, rho_e=%.17g",
                time, step, cell_i, cell_j, rho, rho_e);
  return std::string(buf);
}

} // namespace

SchemeFailure::SchemeFailure(double time, long step, int cell_i, int cell_j, double rho,
                             double rho_e)
    : std::runtime_error(failure_message(time, step, cell_i, cell_j, rho, rho_e)),
      time_(time),
      step_(step),
      cell_i_(cell_i),
      cell_j_(cell_j),
      rho_(rho),
      rho_e_(rho_e) {}

} // namespace nsfpen
