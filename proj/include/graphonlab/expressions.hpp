#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphonlab/density.hpp"
#include "graphonlab/estimate.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

// Expression tree over reals and graph terms under + and x, with an explicit
// unlabeling node that turns a rooted expression into an ordinary one. All
// rooted graph terms in one expression must be mutually compatible.
class Expression {
 public:
  enum class Kind { Constant, GraphTerm, Sum, Product, Unlabel };

  struct TermData {
    Graph graph;
    std::vector<int> roots;  // empty for plain terms
    std::vector<int> parts;  // empty for undecorated terms
  };

  struct Node {
    Kind kind = Kind::Constant;
    double value = 0.0;
    std::optional<TermData> term;
    std::shared_ptr<const Node> left, right, child;
  };

  static Expression constant(double c);
  static Expression term(const Graph& g);
  static Expression term(const RootedGraph& g);
  static Expression term(const DecoratedGraph& g);
  static Expression sum(const Expression& a, const Expression& b);
  static Expression product(const Expression& a, const Expression& b);
  // The unlabeling operator [[.]] applied to a rooted expression.
  static Expression unlabeled(const Expression& rooted);

  Expression operator+(const Expression& o) const { return sum(*this, o); }
  Expression operator*(const Expression& o) const { return product(*this, o); }
  Expression operator-(const Expression& o) const { return sum(*this, product(constant(-1.0), o)); }

  Kind kind() const { return node_->kind; }
  const Node& root_node() const { return *node_; }
  std::shared_ptr<const Node> node() const { return node_; }

  // True when rooted graph terms occur outside unlabel nodes.
  bool is_rooted() const;
  bool has_decorated_terms() const;

  // Root signature of a rooted expression: the shared rooted/decorated root
  // pattern of its graph terms.
  struct RootSignature {
    int root_count = 0;
    Graph root_graph;            // induced by the roots, labeled by position
    std::vector<int> root_parts;  // empty when undecorated
    bool operator==(const RootSignature&) const = default;
  };
  std::optional<RootSignature> root_signature() const;

 private:
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Constraint {
  enum class Kind { Ordinary, Rooted, Decorated };

  std::string name;
  Expression lhs;
  Expression rhs;
  Kind kind = Kind::Ordinary;

  static Constraint make(std::string name, Expression lhs, Expression rhs);
};

// Value of an expression in W: ordinary expressions evaluate recursively via
// the density engines; rooted expressions evaluate to the expected value of
// the rooted density expression under the root measure mu.
Estimate evaluate_expression(const Expression& expr, const Graphon& w, const EvalOptions& opts = {});

// [[D]] = E_mu[D] * d(H0, W) as a single importance-weighted pass.
Estimate unlabel(const Expression& rooted, const Graphon& w, const EvalOptions& opts = {});

// Rooted constraint D = D' -> ordinary constraint [[(D-D') x (D-D')]] = 0.
Constraint compile_rooted_constraint(const Constraint& rooted);

// Rewrites the density of an unrooted decorated graph as an unlabeled
// product of degree polynomials in rooted one-extra-vertex sums.
Expression compile_decorated(const DecoratedGraph& h, const PartitionSpec& spec);

enum class Verdict { Satisfied, Violated, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    default: return "inconclusive";
  }
}

struct CheckResult {
  Verdict verdict = Verdict::Inconclusive;
  double residual = 0.0;  // |lhs-rhs|; for rooted constraints the rms residual
  double stderr_ = 0.0;
  Estimate lhs;
  Estimate rhs;
};

// Ordinary constraints compare the two side values; rooted constraints test
// E_mu[(D-D')^2] = 0 (tolerances are squared accordingly).
CheckResult check_constraint(const Constraint& c, const Graphon& w, double tol, const EvalOptions& opts = {});

}  // namespace graphonlab
