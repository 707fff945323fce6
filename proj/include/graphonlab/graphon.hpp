#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphonlab/errors.hpp"
#include "graphonlab/graph.hpp"

namespace graphonlab {

// Smallest integer k with t + 2^-k < 1; the dyadic block index [t] for
// t in [0,1).
int dyadic_index(double t);

// Uniformly subdivide [lo, hi) into 2^levels cells when integrating.
struct RefinementHint {
  double lo = 0.0;
  double hi = 1.0;
  int levels = 0;
};

// Subdivision hints for quadrature: explicit jump points plus dyadic
// refinement regions. Piecewise-constant structure aligned with the hints is
// integrated exactly by the midpoint rule. `complete` asserts that the hints
// capture all structure (every jump, and at most linear variation between
// boundaries), which lets integrators thin the uniform background grid.
struct AxisHints {
  std::vector<double> points;
  std::vector<RefinementHint> refinements;
  bool complete = false;

  void add_point(double x) { points.push_back(x); }
  void merge(const AxisHints& other);
};

// Measure preserving self-map of [0,1], represented as a piecewise affine
// rearrangement: each source interval is translated (or reflected) onto a
// destination interval of the same length.
class MeasurePreservingMap {
 public:
  struct Piece {
    double src_lo, src_hi;  // half-open
    double dst_lo;
    bool flip;  // reflect inside the piece
  };

  double operator()(double x) const;
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::string& describe() const { return description_; }

  static MeasurePreservingMap identity();
  static MeasurePreservingMap reflection();
  // Split [0,1] into `sizes` blocks and rearrange them in `order`.
  static MeasurePreservingMap block_rearrangement(const std::vector<double>& sizes, const std::vector<int>& order);

 private:
  MeasurePreservingMap(std::vector<Piece> pieces, std::string description);
  std::vector<Piece> pieces_;
  std::string description_;
};

class SectionFunction;

// Block description of a step graphon, exposed so density engines can sum
// over part assignments exactly.
struct StepStructure {
  std::vector<double> sizes;
  std::vector<std::vector<double>> matrix;
  std::vector<double> starts;  // cumulative, size k+1

  int part_of(double x) const;
};

// Interface behind the Graphon value type.
class Kernel {
 public:
  virtual ~Kernel() = default;
  virtual double eval(double x, double y) const = 0;
  virtual std::string describe() const = 0;
  virtual const PartitionSpec* partition() const { return nullptr; }
  virtual const StepStructure* step_structure() const { return nullptr; }
  // Structure hints along one axis (the kernel is symmetric).
  virtual AxisHints axis_hints(int /*depth*/) const { return {}; }
  // Structure hints in y for the slice at a fixed x.
  virtual AxisHints section_hints(double /*x*/, int depth) const { return axis_hints(depth); }
};

// Symmetric evaluable kernel on [0,1]^2 with values in [0,1]. Cheap to copy.
class Graphon {
 public:
  explicit Graphon(std::shared_ptr<const Kernel> kernel) : kernel_(std::move(kernel)) {}

  double operator()(double x, double y) const;
  double eval(double x, double y) const { return (*this)(x, y); }

  const PartitionSpec* partition() const { return kernel_->partition(); }
  const StepStructure* step_structure() const { return kernel_->step_structure(); }
  std::string describe() const { return kernel_->describe(); }
  AxisHints axis_hints(int depth = 12) const { return kernel_->axis_hints(depth); }
  AxisHints section_hints(double x, int depth = 12) const { return kernel_->section_hints(x, depth); }

  SectionFunction section(double x) const;

 private:
  std::shared_ptr<const Kernel> kernel_;
};

Graphon constant_graphon(double p);
Graphon step_graphon(const std::vector<double>& sizes, const std::vector<std::vector<double>>& matrix);
// 1 on {x + y >= 1}, 0 elsewhere.
Graphon half_graphon();
Graphon rademacher_graphon();
// 2d+2 part construction whose A-part sections sweep [0,1]^d.
Graphon norine_graphon(int d);
// Piecewise constant on an n x n uniform grid.
Graphon grid_graphon(const std::vector<std::vector<double>>& values);
// Arbitrary symmetric kernel, mostly for tests and experiments.
Graphon kernel_graphon(std::function<double(double, double)> f, std::string description,
                       std::optional<PartitionSpec> partition = std::nullopt, AxisHints hints = {});

// W^phi(x, y) = W(phi(x), phi(y)).
Graphon apply_measure_preserving(const Graphon& w, const MeasurePreservingMap& phi);

// Adds delta on block X x Y (and its mirror), clamped to [0,1]. Used to
// inject defects when exercising constraint checks.
Graphon perturb_block(const Graphon& w, double x_lo, double x_hi, double y_lo, double y_hi, double delta);

// One-dimensional function on [0,1] with integration hints.
class SectionFunction {
 public:
  SectionFunction(std::function<double(double)> f, std::string provenance, AxisHints hints = {});

  double operator()(double x) const { return f_(x); }
  const std::string& provenance() const { return provenance_; }
  const AxisHints& hints() const { return hints_; }

  static SectionFunction constant(double c);

 private:
  std::function<double(double)> f_;
  std::string provenance_;
  AxisHints hints_;
};

// Fixed global layout of the Rademacher graphon: parts A, A', B, B', B'', C,
// C', D laid out left to right with widths (a,a,a,a,a,2a,a,a), a = 1/9.
namespace wr {

inline constexpr double kA = 1.0 / 9.0;
enum Part : int { A = 0, APrime, B, BPrime, BDoublePrime, C, CPrime, D };
inline constexpr int kPartCount = 8;

double part_start(int part);
double part_width(int part);
int part_of(double x);
double local(double x, int part);
const char* part_name(int part);

// Table of per-part degrees: (3, 3.2, 1, 1.2, 1.4, 1.5, 1.8, 1.6) * a.
PartitionSpec partition_spec();

}  // namespace wr

}  // namespace graphonlab
