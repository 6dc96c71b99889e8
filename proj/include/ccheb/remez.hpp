#pragma once

// Generalized complex Remez (single-point exchange) for the problem
//   minimize over real lambda:  max_t |f(t) - sum_k lambda_k phi_k(t)|
// where f and phi_k are complex-valued functions of the curve parameter.

#include <functional>
#include <span>
#include <vector>

#include "ccheb/basis.hpp"
#include "ccheb/mpnum.hpp"
#include "ccheb/search.hpp"

namespace ccheb {

class InitFailure : public Error {
 public:
  using Error::Error;
};

class ExchangeFailure : public Error {
 public:
  using Error::Error;
};

class NonpositiveLowerBound : public Error {
 public:
  using Error::Error;
};

/// f and the n real-linear basis functions, as evaluated at a parameter t.
struct ApproximationProblem {
  using Evaluator = std::function<void(const Scalar& t, Complex& f, std::span<Complex> phi)>;

  std::size_t n_basis = 0;
  Evaluator evaluate;
  SearchDomain domain = SearchDomain::full();
  std::vector<Scalar> singular_params;

  static ApproximationProblem from_basis(const BasisSpec& basis);
};

struct ReferenceState {
  std::vector<Scalar> t;
  std::vector<Scalar> alpha;
  std::vector<Scalar> r;

  std::size_t size() const { return t.size(); }
};

/// Row 0 all ones; entry (k, j) = Re(e^{-i alpha_j} phi_k(t_j)) for k >= 1.
Matrix assemble_A(const ApproximationProblem& problem, std::span<const Scalar> t,
                  std::span<const Scalar> alpha);
/// Entry j = Re(e^{-i alpha_j} f(t_j)).
std::vector<Scalar> assemble_cf(const ApproximationProblem& problem, std::span<const Scalar> t,
                                std::span<const Scalar> alpha);

/// Same matrices from precomputed values phi[j][k] = phi_k(t_j), f[j] = f(t_j).
Matrix assemble_A(std::span<const std::vector<Complex>> phi, std::span<const Scalar> alpha);
std::vector<Scalar> assemble_cf(std::span<const Complex> f, std::span<const Scalar> alpha);

/// Equispaced points over the problem's domain, angles aligned with f, and
/// column signs flipped until the weights are nonnegative.
ReferenceState initialize_reference(const ApproximationProblem& problem);

struct TrialSolution {
  Scalar h;
  std::vector<Scalar> lambda;
};

/// Solves A^T [h; lambda] = c_f.
TrialSolution trial_coefficients(const ApproximationProblem& problem, const ReferenceState& state);

/// Replaces one reference point by (x, theta) and updates the weights.
ReferenceState exchange_step(const ApproximationProblem& problem, const ReferenceState& state,
                             const Scalar& x, const Scalar& theta);

enum class RemezStatus { converged, max_iterations };

const char* to_string(RemezStatus status);

struct IterationRecord {
  Scalar h;
  Scalar upper;
  Scalar pivot_ratio;  ///< max/min |U_ii| of the LU factors of A
};

/// Everything known at the end of one iteration, before the exchange.
struct IterationView {
  int iteration = 0;
  const ReferenceState* state = nullptr;
  const Matrix* A = nullptr;
  const std::vector<Scalar>* cf = nullptr;
  const Scalar* h = nullptr;
  const std::vector<Scalar>* lambda = nullptr;
  const Extremum* extremum = nullptr;
};

struct RemezOptions {
  Scalar threshold{1e-10};
  int max_iter = 500;
  SearchOptions search;
  /// Called once per iteration; for diagnostics and invariant checks.
  std::function<void(const IterationView&)> observer;
};

struct RemezResult {
  std::vector<Scalar> lambda;
  Scalar lower_bound;
  Scalar upper_bound;
  Scalar rel_error;
  int iterations = 0;
  RemezStatus status = RemezStatus::converged;
  ReferenceState final_state;
  std::vector<IterationRecord> trace;

  bool converged() const { return status == RemezStatus::converged; }
};

/// Iterates until upper - h < threshold * h. When max_iter is exhausted the
/// best iterate (smallest upper bound) is returned with status max_iterations.
RemezResult solve(const ApproximationProblem& problem, const RemezOptions& options = {});
RemezResult solve(const BasisSpec& basis, const RemezOptions& options = {});

}  // namespace ccheb
