#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace graphonlab {

enum class Method { Auto, MonteCarlo, Quadrature, ExactStep };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::MonteCarlo: return "mc";
    case Method::Quadrature: return "quad";
    case Method::ExactStep: return "exact-step";
    default: return "auto";
  }
}

// Numeric value with an error bar: the universal return type of the density
// and distance engines. stderr_ is 0 for deterministic methods.
struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::uint64_t budget = 0;
  Method method = Method::Auto;

  Estimate() = default;
  Estimate(double v, double s, std::uint64_t b, Method m) : value(v), stderr_(s), budget(b), method(m) {}

  static Estimate exact(double v, Method m = Method::Quadrature) { return {v, 0.0, 0, m}; }

  Estimate operator+(const Estimate& o) const {
    return {value + o.value, std::hypot(stderr_, o.stderr_), budget + o.budget, merge_method(o)};
  }
  // Error propagation assumes independent factors.
  Estimate operator*(const Estimate& o) const {
    double s = std::hypot(value * o.stderr_, o.value * stderr_);
    return {value * o.value, s, budget + o.budget, merge_method(o)};
  }
  Estimate scaled(double c) const { return {c * value, std::abs(c) * stderr_, budget, method}; }

 private:
  Method merge_method(const Estimate& o) const {
    if (stderr_ == 0.0 && budget == 0) return o.method;
    if (o.stderr_ == 0.0 && o.budget == 0) return method;
    return method == o.method ? method : Method::Auto;
  }
};

// Common evaluation knobs shared by all numeric engines.
struct EvalOptions {
  Method method = Method::Auto;
  std::uint64_t budget = 1'000'000;  // monte carlo sample count
  int grid_log2 = 10;                // per-axis quadrature resolution
  std::uint64_t seed = 0;
  int threads = 1;

  EvalOptions with_budget(std::uint64_t b) const {
    EvalOptions o = *this;
    o.budget = b;
    return o;
  }
  EvalOptions with_method(Method m) const {
    EvalOptions o = *this;
    o.method = m;
    return o;
  }
  EvalOptions with_seed(std::uint64_t s) const {
    EvalOptions o = *this;
    o.seed = s;
    return o;
  }
};

}  // namespace graphonlab
