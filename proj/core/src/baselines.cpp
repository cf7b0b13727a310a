#include "dyadic/baselines.hpp"

#include <cmath>
#include <string>

#include "dyadic/errors.hpp"

namespace dyadic::baselines {
namespace {

void check_iterations(int iterations, int limit) {
  if (iterations < 1 || iterations > limit) {
    throw DomainError("CORDIC iteration count " + std::to_string(iterations) +
                      " outside [1, " + std::to_string(limit) + "]");
  }
}

}  // namespace

double taylor_cos(double x, int terms) {
  if (terms < 1 || terms > 20) throw DomainError("taylor_cos terms outside [1, 20]");
  const double x2 = x * x;
  // 1 - x2/(1*2) * (1 - x2/(3*4) * (1 - ...))
  double r = 1.0;
  for (int i = terms - 1; i >= 1; --i) {
    r = 1.0 - x2 / static_cast<double>((2 * i - 1) * (2 * i)) * r;
  }
  return r;
}

CordicTable::CordicTable(int iterations) {
  check_iterations(iterations, kMaxIterations);
  angles_.reserve(iterations);
  gains_.reserve(iterations);
  double gain = 1.0;
  for (int i = 0; i < iterations; ++i) {
    const double t = std::ldexp(1.0, -i);
    angles_.push_back(std::atan(t));
    gain /= std::sqrt(1.0 + t * t);
    gains_.push_back(gain);
  }
}

double CordicTable::gain(int iterations) const {
  check_iterations(iterations, size());
  return gains_[iterations - 1];
}

const CordicTable& default_cordic_table() {
  static const CordicTable table;
  return table;
}

std::pair<double, double> cordic_rotate(double theta, int iterations,
                                        const CordicTable& table) {
  check_iterations(iterations, table.size());
  double x = table.gain(iterations);
  double y = 0.0;
  double z = theta;
  for (int i = 0; i < iterations; ++i) {
    const double t = std::ldexp(1.0, -i);
    const double dx = y * t;
    const double dy = x * t;
    if (z >= 0.0) {
      x -= dx;
      y += dy;
      z -= table.angles()[i];
    } else {
      x += dx;
      y -= dy;
      z += table.angles()[i];
    }
  }
  return {x, y};
}

double cordic_atan(double v, int iterations, const CordicTable& table) {
  check_iterations(iterations, table.size());
  if (!(v >= 0.0)) throw DomainError("cordic_atan requires v >= 0");
  double x = 1.0;
  double y = v;
  double z = 0.0;
  for (int i = 0; i < iterations; ++i) {
    const double t = std::ldexp(1.0, -i);
    const double dx = y * t;
    const double dy = x * t;
    if (y > 0.0) {
      x += dx;
      y -= dy;
      z += table.angles()[i];
    } else {
      x -= dx;
      y += dy;
      z -= table.angles()[i];
    }
  }
  return z;
}

}  // namespace dyadic::baselines
