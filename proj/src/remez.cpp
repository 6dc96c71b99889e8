#include "ccheb/remez.hpp"

#include <algorithm>
#include <cmath>

namespace ccheb {

namespace {

constexpr int kInitRetries = 10;
constexpr int kNonpositiveLimit = 20;

// Re(e^{-i a} z) = cos(a) Re z + sin(a) Im z.
Scalar rotated_real(const Complex& z, const Scalar& cos_a, const Scalar& sin_a) {
  Scalar out = cos_a * z.re;
  out.add_product(sin_a, z.im);
  return out;
}

struct PointValues {
  std::vector<Complex> f;
  std::vector<std::vector<Complex>> phi;
};

PointValues evaluate_at(const ApproximationProblem& problem, std::span<const Scalar> t) {
  PointValues out;
  out.f.resize(t.size());
  out.phi.assign(t.size(), std::vector<Complex>(problem.n_basis));
  for (std::size_t j = 0; j < t.size(); ++j) problem.evaluate(t[j], out.f[j], out.phi[j]);
  return out;
}

void check_lengths(const ApproximationProblem& problem, std::span<const Scalar> t,
                   std::span<const Scalar> alpha) {
  if (t.size() != problem.n_basis + 1 || alpha.size() != t.size())
    throw InvalidArgument("reference must have n_basis + 1 points and angles");
}

// Weights within the rounding slack of the simplex are clamped onto it.
bool clamp_weights(std::vector<Scalar>& r) {
  const Scalar slack = Scalar::pow10(8 - working_digits());
  for (auto& w : r) {
    if (w.sign() >= 0) continue;
    if (w < -slack) return false;
    w = Scalar(0);
  }
  return true;
}

Scalar reduce_into(const SearchDomain& domain, const Scalar& t) {
  const Scalar len = domain.length();
  Scalar u = (t - domain.lo) / len;
  return domain.lo + (u - floor(u)) * len;
}

}  // namespace

ApproximationProblem ApproximationProblem::from_basis(const BasisSpec& basis) {
  ApproximationProblem p;
  p.n_basis = basis.n_basis();
  p.evaluate = [basis](const Scalar& t, Complex& f, std::span<Complex> phi) {
    basis.evaluate(t, f, phi);
  };
  p.domain = basis.domain();
  p.singular_params = basis.curve().singular_params();
  return p;
}

Matrix assemble_A(std::span<const std::vector<Complex>> phi, std::span<const Scalar> alpha) {
  const std::size_t cols = phi.size();
  if (alpha.size() != cols) throw InvalidArgument("one angle per reference point expected");
  const std::size_t n = cols == 0 ? 0 : phi[0].size();
  Matrix a(n + 1, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const Scalar c = cos(alpha[j]);
    const Scalar s = sin(alpha[j]);
    a(0, j) = Scalar(1);
    for (std::size_t k = 0; k < n; ++k) a(k + 1, j) = rotated_real(phi[j][k], c, s);
  }
  return a;
}

std::vector<Scalar> assemble_cf(std::span<const Complex> f, std::span<const Scalar> alpha) {
  if (alpha.size() != f.size()) throw InvalidArgument("one angle per reference point expected");
  std::vector<Scalar> out;
  out.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out.push_back(rotated_real(f[j], cos(alpha[j]), sin(alpha[j])));
  return out;
}

Matrix assemble_A(const ApproximationProblem& problem, std::span<const Scalar> t,
                  std::span<const Scalar> alpha) {
  check_lengths(problem, t, alpha);
  return assemble_A(evaluate_at(problem, t).phi, alpha);
}

std::vector<Scalar> assemble_cf(const ApproximationProblem& problem, std::span<const Scalar> t,
                                std::span<const Scalar> alpha) {
  check_lengths(problem, t, alpha);
  return assemble_cf(evaluate_at(problem, t).f, alpha);
}

ReferenceState initialize_reference(const ApproximationProblem& problem) {
  const std::size_t count = problem.n_basis + 1;
  const SearchDomain& domain = problem.domain;
  const Scalar len = domain.length();
  const Scalar spacing = len / Scalar(static_cast<long>(count));
  const Scalar golden = (sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  const Scalar collide = Scalar::pow10(-(working_digits() / 2)) * len;
  const Scalar pi = Scalar::pi();

  std::vector<Scalar> e1(count, Scalar(0));
  e1[0] = Scalar(1);

  std::string last_error = "singular reference matrix";
  for (int attempt = 0; attempt <= kInitRetries; ++attempt) {
    ReferenceState state;
    const Scalar offset = spacing * golden * Scalar(attempt);
    for (std::size_t j = 0; j < count; ++j) {
      Scalar t = domain.lo + (Scalar(static_cast<long>(j)) + Scalar(0.5)) * spacing + offset;
      t = reduce_into(domain, t);
      for (const auto& s : problem.singular_params) {
        if (abs(reduce_into(domain, s) - t) < collide) {
          t = reduce_into(domain, t + spacing / Scalar(4));
          break;
        }
      }
      state.t.push_back(std::move(t));
    }
    const PointValues values = evaluate_at(problem, state.t);
    std::vector<Scalar> aligned;
    for (const auto& fj : values.f)
      aligned.push_back(fj.re.is_zero() && fj.im.is_zero() ? Scalar(0) : phase_0_2pi(fj));

    // Phase-aligned angles first; if A is singular (f real up to a fixed
    // phase, say), alternate the sign of every other column, then fall back
    // to golden-ratio offsets.
    for (int seed = 0; seed < 3; ++seed) {
      state.alpha = aligned;
      if (seed == 1)
        for (std::size_t j = 1; j < count; j += 2) state.alpha[j] = wrap_angle(state.alpha[j] + pi);
      if (seed == 2)
        for (std::size_t j = 0; j < count; ++j) {
          Scalar turn = golden * Scalar(static_cast<long>(j + 1));
          turn -= floor(turn);
          state.alpha[j] = wrap_angle(state.alpha[j] + Scalar(2) * pi * turn);
        }
      try {
        state.r = lu_solve(assemble_A(values.phi, state.alpha), e1);
        bool flipped = false;
        for (std::size_t j = 0; j < count; ++j) {
          if (state.r[j].sign() < 0) {
            state.alpha[j] = wrap_angle(state.alpha[j] + pi);
            flipped = true;
          }
        }
        if (flipped) state.r = lu_solve(assemble_A(values.phi, state.alpha), e1);
        if (clamp_weights(state.r)) return state;
        last_error = "negative weights after sign flip";
      } catch (const SingularMatrix& e) {
        last_error = e.what();
      }
    }
  }
  throw InitFailure("no admissible initial reference after " + std::to_string(kInitRetries) +
                    " retries: " + last_error);
}

TrialSolution trial_coefficients(const ApproximationProblem& problem,
                                 const ReferenceState& state) {
  check_lengths(problem, state.t, state.alpha);
  const PointValues values = evaluate_at(problem, state.t);
  std::vector<Scalar> sol = lu_solve_transposed(assemble_A(values.phi, state.alpha),
                                                assemble_cf(values.f, state.alpha));
  TrialSolution out;
  out.h = std::move(sol[0]);
  out.lambda.assign(std::make_move_iterator(sol.begin() + 1), std::make_move_iterator(sol.end()));
  return out;
}

namespace {

ReferenceState exchange_with(const ApproximationProblem& problem, const LuFactorization& lu,
                             const ReferenceState& state, const Scalar& x, const Scalar& theta) {
  const std::size_t count = state.size();
  std::vector<Complex> phi(problem.n_basis);
  Complex fx;
  problem.evaluate(x, fx, phi);
  const Scalar c = cos(theta);
  const Scalar s = sin(theta);
  std::vector<Scalar> v(count);
  v[0] = Scalar(1);
  for (std::size_t k = 0; k < problem.n_basis; ++k) v[k + 1] = rotated_real(phi[k], c, s);
  const std::vector<Scalar> d = lu.solve(v);

  std::size_t rho = count;
  Scalar best;
  for (std::size_t k = 0; k < count; ++k) {
    if (d[k].sign() <= 0) continue;
    Scalar q = state.r[k] / d[k];
    if (rho == count || q < best) {
      rho = k;
      best = std::move(q);
    }
  }
  if (rho == count)
    throw ExchangeFailure("no positive entry in the exchange direction at t = " + x.to_string(20));

  ReferenceState next = state;
  for (std::size_t k = 0; k < count; ++k) {
    if (k == rho) continue;
    next.r[k].add_product(-best, d[k]);
  }
  next.r[rho] = best;
  next.t[rho] = x;
  next.alpha[rho] = wrap_angle(theta);
  clamp_weights(next.r);
  return next;
}

}  // namespace

ReferenceState exchange_step(const ApproximationProblem& problem, const ReferenceState& state,
                             const Scalar& x, const Scalar& theta) {
  check_lengths(problem, state.t, state.alpha);
  const PointValues values = evaluate_at(problem, state.t);
  LuFactorization lu(assemble_A(values.phi, state.alpha));
  return exchange_with(problem, lu, state, x, theta);
}

const char* to_string(RemezStatus status) {
  switch (status) {
    case RemezStatus::converged: return "converged";
    case RemezStatus::max_iterations: return "max_iterations";
  }
  return "unknown";
}

RemezResult solve(const BasisSpec& basis, const RemezOptions& options) {
  return solve(ApproximationProblem::from_basis(basis), options);
}

RemezResult solve(const ApproximationProblem& problem, const RemezOptions& options) {
  const Scalar& threshold = options.threshold;
  if (!(threshold > Scalar(0))) throw InvalidArgument("threshold must be positive");
  if (options.max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
  const std::size_t n = problem.n_basis;

  // Bracket width threshold^2, so the search error stays below the gap.
  const int threshold_digits =
      static_cast<int>(std::ceil(-2.0 * std::log10(threshold.to_double())));
  const int refine = std::max(options.search.refine_digits, threshold_digits);
  const std::size_t grid =
      options.search.grid_size == 0 ? default_grid_size(n) : options.search.grid_size;
  const MaxSearch search(problem.domain, grid, problem.singular_params, refine,
                         options.search.window);

  // f and phi on the grid never change; only lambda does.
  const std::vector<Scalar>& nodes = search.nodes();
  std::vector<Complex> grid_f(nodes.size());
  std::vector<Complex> grid_phi(nodes.size() * n);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    problem.evaluate(nodes[i], grid_f[i], std::span<Complex>(grid_phi.data() + i * n, n));

  RemezResult result;
  ReferenceState state = initialize_reference(problem);
  std::vector<Scalar> norms(nodes.size());
  bool have_best = false;

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    const PointValues values = evaluate_at(problem, state.t);
    const Matrix a = assemble_A(values.phi, state.alpha);
    const LuFactorization lu(a);
    const std::vector<Scalar> cf = assemble_cf(values.f, state.alpha);
    std::vector<Scalar> sol = lu.solve_transposed(cf);
    Scalar h = sol[0];
    std::vector<Scalar> lambda(std::make_move_iterator(sol.begin() + 1),
                               std::make_move_iterator(sol.end()));

    for (std::size_t i = 0; i < nodes.size(); ++i) {
      Complex e = grid_f[i];
      const Complex* phi = grid_phi.data() + i * n;
      for (std::size_t k = 0; k < n; ++k) {
        e.re.add_product(-lambda[k], phi[k].re);
        e.im.add_product(-lambda[k], phi[k].im);
      }
      norms[i] = norm(e);
    }
    std::vector<Complex> phi_buf(n);
    auto err = [&](const Scalar& t) {
      Complex f;
      problem.evaluate(t, f, phi_buf);
      for (std::size_t k = 0; k < n; ++k) {
        f.re.add_product(-lambda[k], phi_buf[k].re);
        f.im.add_product(-lambda[k], phi_buf[k].im);
      }
      return f;
    };
    const Extremum ext = search.find(err, norms);

    result.trace.push_back({h, ext.value, lu.pivot_ratio()});
    result.iterations = iter;
    if (options.observer) {
      IterationView view;
      view.iteration = iter;
      view.state = &state;
      view.A = &a;
      view.cf = &cf;
      view.h = &h;
      view.lambda = &lambda;
      view.extremum = &ext;
      options.observer(view);
    }

    if (!have_best || ext.value < result.upper_bound) {
      result.lambda = lambda;
      result.upper_bound = ext.value;
      have_best = true;
    }
    result.lower_bound = h;
    result.final_state = state;

    const Scalar gap = ext.value - h;
    const bool positive = h.sign() > 0;
    const bool done = positive ? gap < threshold * h : gap <= threshold * ext.value;
    if (done) {
      result.lambda = std::move(lambda);
      result.upper_bound = ext.value;
      result.status = RemezStatus::converged;
      break;
    }
    if (!positive && iter > kNonpositiveLimit) {
      throw NonpositiveLowerBound("lower bound still " + h.to_string(10) + " after " +
                                  std::to_string(kNonpositiveLimit) + " iterations");
    }
    if (iter == options.max_iter) {
      result.status = RemezStatus::max_iterations;
      break;
    }
    state = exchange_with(problem, lu, state, ext.x, ext.theta);
  }

  const Scalar& lo = result.lower_bound;
  const Scalar& hi = result.upper_bound;
  if (lo.sign() > 0) {
    result.rel_error = (hi - lo) / lo;
  } else {
    result.rel_error = hi.sign() > 0 ? (hi - lo) / hi : Scalar(0);
  }
  return result;
}

}  // namespace ccheb
