#include "graphonlab/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace graphonlab {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

int StepStructure::part_of(double x) const {
  auto it = std::upper_bound(starts.begin() + 1, starts.end() - 1, x);
  return static_cast<int>(it - starts.begin()) - 1;
}

int dyadic_index(double t) {
  if (!(t >= 0.0) || t >= 1.0) throw error("dyadic_index: argument must lie in [0,1)");
  double s = 1.0 - t;  // in (0, 1]
  int e = std::ilogb(s);
  double p = std::ldexp(1.0, e);
  return (s == p) ? 1 - e : -e;
}

void AxisHints::merge(const AxisHints& other) {
  points.insert(points.end(), other.points.begin(), other.points.end());
  refinements.insert(refinements.end(), other.refinements.begin(), other.refinements.end());
  complete = complete && other.complete;
}

// ---------------------------------------------------------------------------
// measure preserving maps

MeasurePreservingMap::MeasurePreservingMap(std::vector<Piece> pieces, std::string description)
    : pieces_(std::move(pieces)), description_(std::move(description)) {}

double MeasurePreservingMap::operator()(double x) const {
  for (const Piece& p : pieces_) {
    if (x >= p.src_lo && (x < p.src_hi || (x == p.src_hi && p.src_hi == 1.0))) {
      double off = x - p.src_lo;
      double len = p.src_hi - p.src_lo;
      return p.flip ? p.dst_lo + (len - off) : p.dst_lo + off;
    }
  }
  throw error("MeasurePreservingMap: argument outside [0,1]");
}

MeasurePreservingMap MeasurePreservingMap::identity() {
  return MeasurePreservingMap({{0.0, 1.0, 0.0, false}}, "identity");
}

MeasurePreservingMap MeasurePreservingMap::reflection() {
  return MeasurePreservingMap({{0.0, 1.0, 0.0, true}}, "reflection");
}

MeasurePreservingMap MeasurePreservingMap::block_rearrangement(const std::vector<double>& sizes,
                                                               const std::vector<int>& order) {
  if (sizes.size() != order.size() || sizes.empty()) throw error("block_rearrangement: sizes/order mismatch");
  double total = 0;
  for (double s : sizes) {
    if (s <= 0) throw error("block_rearrangement: block sizes must be positive");
    total += s;
  }
  if (std::abs(total - 1.0) > 1e-12) throw error("block_rearrangement: block sizes must sum to 1");
  std::vector<int> seen(sizes.size(), 0);
  for (int b : order) {
    if (b < 0 || b >= static_cast<int>(sizes.size()) || seen[static_cast<std::size_t>(b)]++)
      throw error("block_rearrangement: order must be a permutation");
  }
  std::vector<double> starts(sizes.size(), 0.0);
  for (std::size_t i = 1; i < sizes.size(); ++i) starts[i] = starts[i - 1] + sizes[i - 1];
  std::vector<Piece> pieces;
  double dst = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int b = order[i];
    pieces.push_back({starts[static_cast<std::size_t>(b)],
                      starts[static_cast<std::size_t>(b)] + sizes[static_cast<std::size_t>(b)], dst, false});
    dst += sizes[static_cast<std::size_t>(b)];
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.src_lo < b.src_lo; });
  return MeasurePreservingMap(std::move(pieces), "block-rearrangement");
}

// ---------------------------------------------------------------------------
// Rademacher layout

namespace wr {

namespace {
constexpr double kStarts[kPartCount] = {0, kA, 2 * kA, 3 * kA, 4 * kA, 5 * kA, 7 * kA, 8 * kA};
constexpr double kWidths[kPartCount] = {kA, kA, kA, kA, kA, 2 * kA, kA, kA};
constexpr const char* kNames[kPartCount] = {"A", "A'", "B", "B'", "B''", "C", "C'", "D"};
}  // namespace

double part_start(int part) { return kStarts[part]; }
double part_width(int part) { return kWidths[part]; }
const char* part_name(int part) { return kNames[part]; }

int part_of(double x) {
  int ninth = std::min(8, static_cast<int>(x * 9.0));
  if (ninth <= 4) return ninth;
  if (ninth <= 6) return C;
  return ninth == 7 ? CPrime : D;
}

double local(double x, int part) { return x - kStarts[part]; }

PartitionSpec partition_spec() {
  std::vector<double> sizes(kWidths, kWidths + kPartCount);
  std::vector<double> degrees = {3 * kA, 3.2 * kA, kA, 1.2 * kA, 1.4 * kA, 1.5 * kA, 1.8 * kA, 1.6 * kA};
  return PartitionSpec(sizes, degrees);
}

}  // namespace wr

// ---------------------------------------------------------------------------
// kernels

namespace {

// Parity of floor(u * 2^k) for u in [0,1): the k-th binary digit of u.
bool dyadic_block_even(double u, int k) {
  if (k > 60) return true;  // below double resolution; null set
  auto block = static_cast<long long>(std::floor(std::ldexp(u, k)));
  return (block & 1) == 0;
}

// (1 - 2^-k - tau) * 2^k for tau in dyadic block k: decreases 1 -> 0.
double block_ramp(double tau, int k) { return clamp01(std::ldexp(1.0 - tau, k) - 1.0); }

class StepKernel final : public Kernel {
 public:
  StepKernel(std::vector<double> sizes, std::vector<std::vector<double>> matrix, std::string description)
      : description_(std::move(description)) {
    data_.sizes = std::move(sizes);
    data_.matrix = std::move(matrix);
    std::size_t k = data_.sizes.size();
    if (k == 0 || data_.matrix.size() != k) throw error("step_graphon: matrix must be k x k");
    double total = 0;
    for (double a : data_.sizes) {
      if (a <= 0) throw error("step_graphon: part sizes must be positive");
      total += a;
    }
    if (std::abs(total - 1.0) > 1e-12) throw error("step_graphon: part sizes must sum to 1");
    for (std::size_t i = 0; i < k; ++i) {
      if (data_.matrix[i].size() != k) throw error("step_graphon: matrix must be k x k");
      for (std::size_t j = 0; j < k; ++j) {
        double v = data_.matrix[i][j];
        if (v < 0 || v > 1) throw error("step_graphon: values must lie in [0,1]");
        if (data_.matrix[i][j] != data_.matrix[j][i]) throw error("step_graphon: matrix must be symmetric");
      }
    }
    data_.starts.assign(k + 1, 0.0);
    for (std::size_t i = 0; i < k; ++i) data_.starts[i + 1] = data_.starts[i] + data_.sizes[i];
    data_.starts[k] = 1.0;
    // Row degrees; partition metadata only when they are pairwise distinct.
    std::vector<double> degrees(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) degrees[i] += data_.sizes[j] * data_.matrix[i][j];
    }
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (degrees[i] == degrees[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) partition_.emplace(data_.sizes, degrees);
  }

  double eval(double x, double y) const override {
    return data_.matrix[static_cast<std::size_t>(data_.part_of(x))][static_cast<std::size_t>(data_.part_of(y))];
  }
  std::string describe() const override { return description_; }
  const PartitionSpec* partition() const override { return partition_ ? &*partition_ : nullptr; }
  AxisHints axis_hints(int) const override {
    AxisHints h;
    for (double s : data_.starts) h.add_point(s);
    h.complete = true;
    return h;
  }
  const StepStructure* step_structure() const override { return &data_; }

 private:
  StepStructure data_;
  std::optional<PartitionSpec> partition_;
  std::string description_;
};

class HalfKernel final : public Kernel {
 public:
  double eval(double x, double y) const override { return x + y >= 1.0 ? 1.0 : 0.0; }
  std::string describe() const override { return "half"; }
  AxisHints section_hints(double x, int) const override {
    AxisHints h;
    h.add_point(1.0 - x);
    h.complete = true;
    return h;
  }
};

class RademacherKernel final : public Kernel {
 public:
  RademacherKernel() : partition_(wr::partition_spec()) {}

  double eval(double x, double y) const override {
    using namespace wr;
    int px = part_of(x), py = part_of(y);
    if (px > py) {
      std::swap(px, py);
      std::swap(x, y);
    }
    double s = local(x, px), t = local(y, py);
    const double a = kA;
    switch (px) {
      case A:
        switch (py) {
          case A: return dyadic_index(s / a) != dyadic_index(t / a) ? 1.0 : 0.0;
          case APrime: return dyadic_index(s / a) == dyadic_index(t / a) ? 1.0 : 0.0;
          case B: return s + t <= a ? 1.0 : 0.0;
          case BDoublePrime: return s + t >= a ? 1.0 : 0.0;
          case C: return dyadic_block_even(t / (2 * a), dyadic_index(s / a)) ? 1.0 : 0.0;
          default: return 0.0;
        }
      case APrime:
        switch (py) {
          case APrime: return dyadic_index(s / a) != dyadic_index(t / a) ? 1.0 : 0.0;
          case BPrime: return s + t <= a ? 1.0 : 0.0;
          case BDoublePrime: return t <= s ? 1.0 : 0.0;
          case C: {
            int k = dyadic_index(s / a);
            return dyadic_block_even(t / (2 * a), k) ? block_ramp(s / a, k) : 0.0;
          }
          case CPrime: {
            int k = dyadic_index(s / a);
            return block_ramp(s / a, k) + t / a <= 1.0 ? 1.0 : 0.0;
          }
          case D: return 0.2;
          default: return 0.0;
        }
      case B: return py == B && s + t >= a ? 1.0 : 0.0;
      case BPrime:
        if (py == BPrime) return s + t >= a ? 1.0 : 0.0;
        return py == D ? 0.2 : 0.0;
      case BDoublePrime: return py == D ? 0.4 : 0.0;
      case C: return py == C && s + t >= 2 * a ? 0.75 : 0.0;
      case CPrime:
        if (py == CPrime) return s + t >= a ? 1.0 : 0.0;
        return py == D ? 0.8 : 0.0;
      default: return 0.0;
    }
  }

  std::string describe() const override { return "rademacher"; }
  const PartitionSpec* partition() const override { return &partition_; }

  AxisHints axis_hints(int depth) const override {
    using namespace wr;
    AxisHints h;
    for (int p = 0; p < kPartCount; ++p) h.add_point(part_start(p));
    h.add_point(1.0);
    add_dyadic_blocks(h, A);
    add_dyadic_blocks(h, APrime);
    h.refinements.push_back({part_start(C), part_start(C) + part_width(C), std::min(depth, 26)});
    h.complete = true;
    return h;
  }

  AxisHints section_hints(double x, int /*depth*/) const override {
    // slice structure is fully determined by the part and dyadic block of x
    using namespace wr;
    AxisHints h;
    for (int p = 0; p < kPartCount; ++p) h.add_point(part_start(p));
    h.add_point(1.0);
    const double a = kA;
    int px = part_of(x);
    double s = local(x, px);
    switch (px) {
      case A: {
        int k = dyadic_index(s / a);
        add_dyadic_blocks(h, A);
        add_dyadic_blocks(h, APrime);
        h.add_point(part_start(B) + (a - s));
        h.add_point(part_start(BDoublePrime) + (a - s));
        h.refinements.push_back({part_start(C), part_start(C) + 2 * a, std::min(k, 26)});
        break;
      }
      case APrime: {
        int k = dyadic_index(s / a);
        add_dyadic_blocks(h, A);
        add_dyadic_blocks(h, APrime);
        h.add_point(part_start(BPrime) + (a - s));
        h.add_point(part_start(BDoublePrime) + s);
        h.refinements.push_back({part_start(C), part_start(C) + 2 * a, std::min(k, 26)});
        h.add_point(part_start(CPrime) + a * (1.0 - block_ramp(s / a, k)));
        break;
      }
      case B:
        h.add_point(a - s);
        h.add_point(part_start(B) + (a - s));
        break;
      case BPrime:
        h.add_point(part_start(APrime) + (a - s));
        h.add_point(part_start(BPrime) + (a - s));
        break;
      case BDoublePrime:
        h.add_point(a - s);
        h.add_point(part_start(APrime) + s);
        break;
      case C:
        add_dyadic_blocks(h, A);
        add_dyadic_blocks(h, APrime);
        h.add_point(part_start(C) + (2 * a - s));
        break;
      case CPrime:
        // Values on A' jump where the per-block ramp crosses 1 - s/a.
        add_dyadic_blocks(h, APrime);
        for (int k = 1; k <= kDyadicPointDepth; ++k) {
          double tau = (1.0 - std::ldexp(1.0, -k)) - (1.0 - s / a) * std::ldexp(1.0, -k);
          h.add_point(part_start(APrime) + a * tau);
        }
        h.add_point(part_start(CPrime) + (a - s));
        break;
      default:
        break;
    }
    h.complete = true;
    return h;
  }

 private:
  // Explicit points are cheap, so the dyadic block boundaries go well past
  // the C refinement depth; the tail below 2^-30 is irrelevant at double
  // precision tolerances.
  static constexpr int kDyadicPointDepth = 30;

  static void add_dyadic_blocks(AxisHints& h, int part) {
    double start = wr::part_start(part);
    for (int k = 1; k <= kDyadicPointDepth; ++k) h.add_point(start + wr::kA * (1.0 - std::ldexp(1.0, -k)));
  }

  PartitionSpec partition_;
};

// Coordinate i of the digit de-interleaving map [0,1] -> [0,1]^d: bit j of
// coordinate i comes from input bit i + j*d (1-based rows of d bits).
double deinterleave_coordinate(double xi, int i, int d) {
  auto bits = static_cast<std::uint64_t>(std::ldexp(xi, 52));
  double value = 0.0;
  double scale = 0.5;
  for (int pos = i; pos <= 52; pos += d) {
    if ((bits >> (52 - pos)) & 1u) value += scale;
    scale *= 0.5;
  }
  return value;
}

class NorineKernel final : public Kernel {
 public:
  explicit NorineKernel(int d) : d_(d), s_(1.0 / (2 * d + 2)) {
    if (d < 1) throw error("norine_graphon: d must be at least 1");
    // Degrees (in units of s): A -> d, B_i -> 1 + i/4d, C -> (2d+1)/4.
    std::vector<double> sizes(static_cast<std::size_t>(2 * d + 2), s_);
    std::vector<double> degrees;
    degrees.push_back(s_ * d);
    for (int i = 1; i <= 2 * d; ++i) degrees.push_back(s_ * (1.0 + static_cast<double>(i) / (4 * d)));
    degrees.push_back(s_ * (2 * d + 1) / 4.0);
    bool distinct = true;
    for (std::size_t i = 0; i < degrees.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < degrees.size(); ++j) {
        if (std::abs(degrees[i] - degrees[j]) < 1e-15) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) partition_.emplace(sizes, degrees);
  }

  double eval(double x, double y) const override {
    int px = part_of(x), py = part_of(y);
    if (px > py) {
      std::swap(px, py);
      std::swap(x, y);
    }
    double xi = (x - start(px)) / s_;  // local fraction in [0,1)
    double eta = (y - start(py)) / s_;
    int last = 2 * d_ + 1;
    if (px == 0 && py >= 1 && py <= 2 * d_) {
      int i = py;  // B_i
      if (i <= d_) return deinterleave_coordinate(xi, i, d_) >= eta ? 1.0 : 0.0;
      return 1.0 - deinterleave_coordinate(xi, i - d_, d_) >= eta ? 1.0 : 0.0;
    }
    if (px >= 1 && px <= 2 * d_ && px == py) return xi + eta >= 1.0 ? 1.0 : 0.0;
    if (px >= 1 && px <= 2 * d_ && py == last) return static_cast<double>(px) / (4 * d_);
    return 0.0;
  }

  std::string describe() const override { return "norine:" + std::to_string(d_); }
  const PartitionSpec* partition() const override { return partition_ ? &*partition_ : nullptr; }

  AxisHints axis_hints(int depth) const override {
    AxisHints h;
    for (int p = 0; p <= 2 * d_ + 2; ++p) h.add_point(p * s_);
    h.refinements.push_back({0.0, s_, std::min(depth + 4, 20)});
    return h;
  }

  AxisHints section_hints(double x, int depth) const override {
    AxisHints h = axis_hints(depth);
    int px = part_of(x);
    if (px == 0) {
      double xi = (x - start(0)) / s_;
      for (int i = 1; i <= d_; ++i) {
        h.add_point(start(i) + s_ * deinterleave_coordinate(xi, i, d_));
        h.add_point(start(d_ + i) + s_ * (1.0 - deinterleave_coordinate(xi, i, d_)));
      }
    } else if (px <= 2 * d_) {
      h.add_point(start(px) + (s_ - (x - start(px))));
    }
    return h;
  }

 private:
  int part_of(double x) const { return std::min(2 * d_ + 1, static_cast<int>(x / s_)); }
  double start(int p) const { return p * s_; }

  int d_;
  double s_;
  std::optional<PartitionSpec> partition_;
};

class GridKernel final : public Kernel {
 public:
  explicit GridKernel(std::vector<std::vector<double>> values) : values_(std::move(values)) {
    n_ = static_cast<int>(values_.size());
    if (n_ == 0) throw error("grid_graphon: empty matrix");
    for (const auto& row : values_) {
      if (static_cast<int>(row.size()) != n_) throw error("grid_graphon: matrix must be square");
      for (double v : row) {
        if (v < 0 || v > 1) throw error("grid_graphon: values must lie in [0,1]");
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            values_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          throw error("grid_graphon: matrix must be symmetric");
      }
    }
  }

  double eval(double x, double y) const override {
    int i = std::min(n_ - 1, static_cast<int>(x * n_));
    int j = std::min(n_ - 1, static_cast<int>(y * n_));
    return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::string describe() const override { return "grid:" + std::to_string(n_); }
  AxisHints axis_hints(int) const override {
    AxisHints h;
    for (int i = 0; i <= n_; ++i) h.add_point(static_cast<double>(i) / n_);
    h.complete = true;
    return h;
  }

 private:
  std::vector<std::vector<double>> values_;
  int n_;
};

class LambdaKernel final : public Kernel {
 public:
  LambdaKernel(std::function<double(double, double)> f, std::string description,
               std::optional<PartitionSpec> partition, AxisHints hints)
      : f_(std::move(f)), description_(std::move(description)), partition_(std::move(partition)),
        hints_(std::move(hints)) {}

  double eval(double x, double y) const override { return f_(x, y); }
  std::string describe() const override { return description_; }
  const PartitionSpec* partition() const override { return partition_ ? &*partition_ : nullptr; }
  AxisHints axis_hints(int) const override { return hints_; }

 private:
  std::function<double(double, double)> f_;
  std::string description_;
  std::optional<PartitionSpec> partition_;
  AxisHints hints_;
};

class TransformedKernel final : public Kernel {
 public:
  TransformedKernel(Graphon inner, MeasurePreservingMap map) : inner_(std::move(inner)), map_(std::move(map)) {}

  double eval(double x, double y) const override { return inner_(map_(x), map_(y)); }
  std::string describe() const override { return "transformed(" + inner_.describe() + "," + map_.describe() + ")"; }

  AxisHints axis_hints(int depth) const override {
    AxisHints inner = inner_.axis_hints(depth);
    AxisHints h;
    h.complete = inner.complete;
    for (const auto& piece : map_.pieces()) {
      h.add_point(piece.src_lo);
      h.add_point(piece.src_hi);
      double len = piece.src_hi - piece.src_lo;
      auto pull_back = [&](double q) {
        double off = q - piece.dst_lo;
        return piece.flip ? piece.src_hi - off : piece.src_lo + off;
      };
      for (double q : inner.points) {
        if (q >= piece.dst_lo && q <= piece.dst_lo + len) h.add_point(pull_back(q));
      }
      for (const auto& r : inner.refinements) {
        double lo = std::max(r.lo, piece.dst_lo), hi = std::min(r.hi, piece.dst_lo + len);
        if (lo < hi) {
          double a = pull_back(lo), b = pull_back(hi);
          h.refinements.push_back({std::min(a, b), std::max(a, b), r.levels});
        }
      }
    }
    return h;
  }

 private:
  Graphon inner_;
  MeasurePreservingMap map_;
};

class PerturbedKernel final : public Kernel {
 public:
  PerturbedKernel(Graphon inner, double x_lo, double x_hi, double y_lo, double y_hi, double delta)
      : inner_(std::move(inner)), x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi), delta_(delta) {}

  double eval(double x, double y) const override {
    double v = inner_(x, y);
    if (in_block(x, y) || in_block(y, x)) v = clamp01(v + delta_);
    return v;
  }
  std::string describe() const override {
    return "perturbed(" + inner_.describe() + "," + fmt(delta_) + ")";
  }
  const PartitionSpec* partition() const override { return inner_.partition(); }
  AxisHints axis_hints(int depth) const override {
    AxisHints h = inner_.axis_hints(depth);
    h.add_point(x_lo_);
    h.add_point(x_hi_);
    h.add_point(y_lo_);
    h.add_point(y_hi_);
    return h;
  }
  AxisHints section_hints(double x, int depth) const override {
    AxisHints h = inner_.section_hints(x, depth);
    h.add_point(x_lo_);
    h.add_point(x_hi_);
    h.add_point(y_lo_);
    h.add_point(y_hi_);
    return h;
  }

 private:
  bool in_block(double x, double y) const { return x >= x_lo_ && x < x_hi_ && y >= y_lo_ && y < y_hi_; }

  Graphon inner_;
  double x_lo_, x_hi_, y_lo_, y_hi_, delta_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Graphon

double Graphon::operator()(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) throw error("Graphon::eval: coordinates outside [0,1]");
  return kernel_->eval(x, y);
}

SectionFunction Graphon::section(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw error("Graphon::section: coordinate outside [0,1]");
  auto kernel = kernel_;
  return SectionFunction([kernel, x](double y) { return kernel->eval(x, y); },
                         "slice(" + kernel_->describe() + " @ " + fmt(x) + ")", section_hints(x));
}

Graphon constant_graphon(double p) {
  if (p < 0 || p > 1) throw error("constant_graphon: p must lie in [0,1]");
  return Graphon(std::make_shared<StepKernel>(std::vector<double>{1.0},
                                              std::vector<std::vector<double>>{{p}}, "constant:" + fmt(p)));
}

Graphon step_graphon(const std::vector<double>& sizes, const std::vector<std::vector<double>>& matrix) {
  return Graphon(std::make_shared<StepKernel>(sizes, matrix, "step:" + std::to_string(sizes.size())));
}

Graphon half_graphon() { return Graphon(std::make_shared<HalfKernel>()); }

Graphon rademacher_graphon() { return Graphon(std::make_shared<RademacherKernel>()); }

Graphon norine_graphon(int d) { return Graphon(std::make_shared<NorineKernel>(d)); }

Graphon grid_graphon(const std::vector<std::vector<double>>& values) {
  return Graphon(std::make_shared<GridKernel>(values));
}

Graphon kernel_graphon(std::function<double(double, double)> f, std::string description,
                       std::optional<PartitionSpec> partition, AxisHints hints) {
  return Graphon(std::make_shared<LambdaKernel>(std::move(f), std::move(description), std::move(partition),
                                                std::move(hints)));
}

Graphon apply_measure_preserving(const Graphon& w, const MeasurePreservingMap& phi) {
  return Graphon(std::make_shared<TransformedKernel>(w, phi));
}

Graphon perturb_block(const Graphon& w, double x_lo, double x_hi, double y_lo, double y_hi, double delta) {
  return Graphon(std::make_shared<PerturbedKernel>(w, x_lo, x_hi, y_lo, y_hi, delta));
}

SectionFunction::SectionFunction(std::function<double(double)> f, std::string provenance, AxisHints hints)
    : f_(std::move(f)), provenance_(std::move(provenance)), hints_(std::move(hints)) {}

SectionFunction SectionFunction::constant(double c) {
  return SectionFunction([c](double) { return c; }, "constant:" + fmt(c));
}

}  // namespace graphonlab
